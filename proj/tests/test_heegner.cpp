#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ezheeg/catalog.hpp"
#include "ezheeg/heegner.hpp"

#include <random>

using namespace ezheeg;

namespace {

EllipticCurveData curve15a1() { return {"15a1", {1, 1, 1, -10, -10}, 15, 5}; }

KPoint point_15a1_m11() {
    // x = 7/4, y = -11/8 + (5/4) sqrt(-11)
    return {false, {Rat(7, 4), Rat(0)}, {Rat(-11, 8), Rat(5, 4)}};
}
KPoint second_point_15a1_m11() {
    return {false, {Rat(-47, 11), Rat(0)}, {Rat(18, 11), Rat(180, 121)}};
}

} // namespace

TEST_CASE("exact group law over K") {
    auto E = curve15a1();
    KPoint P = point_15a1_m11();
    KPoint Q = second_point_15a1_m11();
    REQUIRE(on_curve_exact(E, P, -11));
    REQUIRE(on_curve_exact(E, Q, -11));
    KPoint S = k_add(E, P, Q, -11);
    CHECK(on_curve_exact(E, S, -11));
    KPoint D = k_add(E, P, P, -11);
    CHECK(on_curve_exact(E, D, -11));
    // P + (-P) = O and O is the identity
    CHECK(k_add(E, P, k_negate(E, P), -11).infinity);
    CHECK(on_curve_exact(E, k_multiple(E, P, 7, -11), -11));
    KPoint Z = k_add(E, KPoint{}, P, -11);
    CHECK(Z.x.a == P.x.a);
}

TEST_CASE("localization substitutes the canonical root") {
    PadicContext ctx(5, 16);
    auto E = curve15a1();
    SUBCASE("rational points keep their digits") {
        KPoint T{false, {Rat(-2), Rat(0)}, {Rat(3), Rat(0)}}; // torsion point of 15a1
        REQUIRE(on_curve_exact(E, T, -11));
        PadicPoint L = localize_point(T, -11, ctx);
        CHECK(agreement(L.x, Padic::from_int(ctx, -2)) >= 16);
        CHECK(agreement(L.y, Padic::from_int(ctx, 3)) >= 16);
    }
    SUBCASE("localized points satisfy the equation to full precision") {
        PadicPoint L = localize_point(point_15a1_m11(), -11, ctx);
        Padic r = curve_equation_residual(E, L);
        CHECK(r.is_zero());
        CHECK(r.precision() >= 14);
    }
    SUBCASE("the point at infinity passes through unchanged") {
        PadicPoint L = localize_point(KPoint{}, -11, ctx);
        CHECK(L.infinity);
    }
    SUBCASE("the conjugate embedding localizes the conjugate point") {
        KPoint P = point_15a1_m11();
        KPoint Pc = P;
        Pc.y.b = -Pc.y.b; // Galois conjugate
        PadicPoint A = localize_point_conjugate(P, -11, ctx);
        PadicPoint B = localize_point(Pc, -11, ctx);
        CHECK(agreement(A.y, B.y) >= std::min(A.y.precision(), B.y.precision()));
    }
}

TEST_CASE("localization preserves the group law") {
    PadicContext ctx(5, 14);
    auto E = curve15a1();
    KPoint P = point_15a1_m11(), Q = second_point_15a1_m11();
    PadicPoint lhs = localize_point(k_add(E, P, Q, -11), -11, ctx);
    PadicPoint rhs = padic_add(E, localize_point(P, -11, ctx), localize_point(Q, -11, ctx));
    CHECK(agreement(lhs.x, rhs.x) >= std::min(lhs.x.precision(), rhs.x.precision()) - 1);
    CHECK(agreement(lhs.y, rhs.y) >= std::min(lhs.y.precision(), rhs.y.precision()) - 1);
}

TEST_CASE("formal log series starts with z") {
    auto E = curve15a1();
    auto lp = formal_log_derivative_coefficients(E, 8);
    CHECK(lp[0] == 1);
    CHECK(lp[1] == Rat(E.a[0]));                       // a1
    CHECK(lp[2] == Rat(E.a[0] * E.a[0] + E.a[1]));     // a1^2 + a2
}

TEST_CASE("formal log is a homomorphism on the kernel of reduction") {
    PadicContext ctx(5, 16);
    auto E = curve15a1();
    std::mt19937 rng(31);
    std::uniform_int_distribution<long> d(1, 400);
    for (int i = 0; i < 12; ++i) {
        long d1 = d(rng), d2 = d(rng);
        if (d1 % 5 == 0 || d2 % 5 == 0) continue; // keep valuation exactly 1
        Padic z1 = Padic::from_int(ctx, 5 * d1);
        Padic z2 = Padic::from_int(ctx, 5 * d2);
        PadicPoint P1 = point_from_parameter(E, z1);
        PadicPoint P2 = point_from_parameter(E, z2);
        CHECK(curve_equation_residual(E, P1).is_zero());
        PadicPoint S = padic_add(E, P1, P2);
        Padic zs = -(S.x / S.y);
        Padic lhs = formal_log_at_parameter(E, zs);
        Padic rhs = formal_log_at_parameter(E, z1) + formal_log_at_parameter(E, z2);
        CHECK(agreement(lhs, rhs) >= std::min(lhs.precision(), rhs.precision()) - 1);
    }
}

TEST_CASE("log of the catalog point: independence of the multiple") {
    PadicContext ctx(5, 20);
    auto E = curve15a1();
    KPoint P = point_15a1_m11();
    FormalLogResult fl = formal_log_of_point(E, P, -11, ctx);
    CHECK_FALSE(fl.torsion);
    CHECK(fl.multiple == 4);
    CHECK_FALSE(fl.value.is_zero());
    // doubling the point doubles the log
    FormalLogResult fl2 = formal_log_of_point(E, k_multiple(E, P, 2, -11), -11, ctx);
    Padic twice = fl.value.mul_int(2);
    CHECK(agreement(fl2.value, twice) >= std::min(fl2.value.precision(), twice.precision()));
    // frozen leading digits, stable across precisions (checked at M = 26)
    CHECK(fl.value.valuation() == 1);
    CHECK(mod_reduce(fl.value.lift(), pow_int(5, 5)) == Int(5 + 2 * 625));

    PadicContext ctx2(5, 26);
    FormalLogResult flb = formal_log_of_point(E, P, -11, ctx2);
    int overlap = std::min(fl.value.precision(), flb.value.precision());
    CHECK(mod_reduce(fl.value.lift(), pow_int(5, overlap)) ==
          mod_reduce(flb.value.lift(), pow_int(5, overlap)));
}

TEST_CASE("torsion points have log zero with the flag set") {
    PadicContext ctx(5, 14);
    auto E = curve15a1();
    KPoint T{false, {Rat(-2), Rat(0)}, {Rat(3), Rat(0)}};
    FormalLogResult fl = formal_log_of_point(E, T, -11, ctx);
    CHECK(fl.torsion);
    CHECK(fl.value.is_zero());
    FormalLogResult fo = formal_log_of_point(E, KPoint{}, -11, ctx);
    CHECK(fo.torsion);
    CHECK(fo.value.is_zero());
}

TEST_CASE("all bundled points have nonzero log") {
    Catalog cat = load_catalog(default_catalog_path());
    REQUIRE(cat.rejects.empty());
    for (const auto& pd : cat.points) {
        const auto& E = cat.curve(pd.curve_label);
        PadicContext ctx(E.p, 14);
        FormalLogResult fl = formal_log_of_point(E, to_kpoint(pd), pd.disc, ctx);
        CHECK_FALSE(fl.torsion);
        CHECK_FALSE(fl.value.is_zero());
    }
}

TEST_CASE("the norm-character value scales the log by 1 - 1/p") {
    PadicContext ctx(5, 18);
    auto E = curve15a1();
    PgzValue v = pgz_value(E, point_15a1_m11(), -11, ctx);
    Padic expect = (Padic::from_int(ctx, 1) - Padic::from_int(ctx, 5).inverse()) * v.log_value;
    CHECK(agreement(v.value, expect) >= std::min(v.value.precision(), expect.precision()));
    CHECK_FALSE(v.torsion);
    PgzValue t = pgz_value(E, KPoint{}, -11, ctx);
    CHECK(t.torsion);
    CHECK(t.value.is_zero());
}

TEST_CASE("hypothesis report") {
    SUBCASE("the main triple passes all machine checks") {
        HypothesisReport r = check_hypotheses(curve15a1(), -11, 5);
        CHECK(r.all_machine_checks_pass());
        int unchecked = 0;
        for (const auto& c : r.items)
            if (!c.checked) ++unchecked;
        CHECK(unchecked == 2); // the residual-representation items
    }
    SUBCASE("p = 3 fails both the parity and the split-multiplicative checks") {
        HypothesisReport r = check_hypotheses(curve15a1(), -11, 3);
        CHECK_FALSE(r.all_machine_checks_pass());
        bool fail_p5 = false, fail_split = false;
        for (const auto& c : r.items) {
            if (c.name == "p >= 5" && !c.pass) fail_p5 = true;
            if (c.name.find("split multiplicative") != std::string::npos && !c.pass)
                fail_split = true;
        }
        CHECK(fail_p5);
        CHECK(fail_split);
    }
    SUBCASE("p dividing the class number is caught") {
        // 5 splits in Q(sqrt(-79)) and h(-79) = 5
        HypothesisReport r = check_hypotheses(curve15a1(), -79, 5);
        bool bad_h = false;
        for (const auto& c : r.items)
            if (c.name.find("class number") != std::string::npos && !c.pass) bad_h = true;
        CHECK(bad_h);
    }
    SUBCASE("non-split discriminant is caught") {
        HypothesisReport r = check_hypotheses(curve15a1(), -23, 5);
        CHECK_FALSE(r.all_machine_checks_pass());
    }
}
