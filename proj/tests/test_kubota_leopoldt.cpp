#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ezheeg/fg_normalization.hpp"
#include "ezheeg/kubota_leopoldt.hpp"
#include "ezheeg/linvariants.hpp"

using namespace ezheeg;

TEST_CASE("Bernoulli numbers") {
    CHECK(bernoulli_number(0) == Rat(1));
    CHECK(bernoulli_number(1) == Rat(-1, 2));
    CHECK(bernoulli_number(2) == Rat(1, 6));
    CHECK(bernoulli_number(3) == Rat(0));
    CHECK(bernoulli_number(12) == Rat(-691, 2730));
    CHECK(bernoulli_poly(3, Rat(1, 2)) == Rat(0));
    CHECK(bernoulli_poly(2, Rat(0)) == Rat(1, 6));
}

TEST_CASE("the character is odd and detects splitting") {
    DirichletCharacterData chi{-11};
    CHECK(chi.chi(10) == -1 * chi.chi(1) * 1); // chi(-1) = -1
    CHECK(chi.chi(5) == 1);                    // 5 splits
    CHECK(chi.chi(7) == -1);                   // 7 inert
    CHECK(chi.chi(11) == 0);
}

TEST_CASE("L(0, chi) equals the class number for our fields") {
    // analytic class number formula specialization with trivial extra units
    for (long d : {-11L, -19L, -23L, -31L, -47L, -71L}) {
        DirichletCharacterData chi{d};
        CHECK(classical_L_at_zero(chi) == Rat(ImagQuadField(d).class_number()));
    }
}

TEST_CASE("interpolation nodes are reproduced by the assembled series") {
    PadicContext ctx(5, 12);
    DirichletCharacterData chi{-11};
    KLBranch L(chi, 1, ctx);
    for (long m : {0L, 1L, 2L, 5L, 9L}) {
        Padic got = L.node_value(m);
        Padic want = Padic::from_rational(ctx, L.node_exact(m));
        CHECK(agreement(got, want) >= std::min(got.precision(), L.stable_precision()));
    }
}

TEST_CASE("trivial zero at split pairs, nonvanishing at the inert control") {
    struct Pair { long p, disc; };
    for (Pair pr : {Pair{5, -11}, Pair{5, -19}, Pair{7, -19}}) {
        PadicContext ctx(pr.p, 12);
        KLBranch L(DirichletCharacterData{pr.disc}, 1, ctx);
        Padic v = L.value_at_int(0);
        CHECK(v.is_zero());
        CHECK(v.precision() >= L.stable_precision());
    }
    PadicContext ctx(7, 12);
    KLBranch L(DirichletCharacterData{-11}, 1, ctx); // 7 inert in Q(sqrt(-11))
    Padic v = L.value_at_int(0);
    CHECK_FALSE(v.is_zero());
    CHECK(v.valuation() == 0);
}

TEST_CASE("trivial zero happens exactly when p splits") {
    // cheap sweep: the value at s = 0 is a node value, so few nodes suffice
    for (long D : {11L, 23L, 47L}) {
        for (long p : {5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L}) {
            long disc = -D;
            if (p == D) continue;
            PadicContext ctx(p, 8);
            DirichletCharacterData chi{disc};
            KLBranch L(chi, 1, ctx, 6);
            Padic v = L.value_at_int(0);
            if (chi.chi(p) == 1)
                CHECK(v.is_zero());
            else
                CHECK_FALSE(v.is_zero());
        }
    }
}

TEST_CASE("series is stable under adding interpolation nodes") {
    PadicContext ctx(5, 12);
    DirichletCharacterData chi{-19};
    KLBranch A(chi, 1, ctx);
    KLBranch B(chi, 1, ctx, A.nodes() + 5);
    for (long s : {0L, -4L, -8L, 20L}) {
        Padic va = A.value_at_int(s);
        Padic vb = B.value_at_int(s);
        CHECK(agreement(va, vb) >= std::min(va.precision(), vb.precision()));
    }
    Padic da = A.derivative_at_zero();
    Padic db = B.derivative_at_zero();
    CHECK(agreement(da, db) >= std::min(da.precision(), db.precision()));
}

TEST_CASE("odd twist is required") {
    PadicContext ctx(5, 8);
    CHECK_THROWS_AS(KLBranch(DirichletCharacterData{-11}, 2, ctx), domain_error);
}

TEST_CASE("derivative ratio matches the frozen normalization across split pairs") {
    CHECK(fg_frozen_normalization() == Rat(-1));
    struct Pair { long p, disc; };
    for (Pair pr : {Pair{5, -11}, Pair{5, -19}, Pair{7, -19}, Pair{7, -31}, Pair{11, -7}}) {
        PadicContext ctx(pr.p, 14);
        ImagQuadField K(pr.disc);
        FGCrosscheck fg = fg_crosscheck(K, pr.p, ctx);
        CHECK(fg.Lp_at_zero.is_zero());
        CHECK(fg.pass);
    }
}

TEST_CASE("crosscheck ratio is stable under precision increase") {
    ImagQuadField K(-11);
    PadicContext c1(5, 12), c2(5, 17);
    FGCrosscheck f1 = fg_crosscheck(K, 5, c1);
    FGCrosscheck f2 = fg_crosscheck(K, 5, c2);
    int overlap = std::min(f1.ratio.precision(), f2.ratio.precision());
    CHECK(mod_reduce(f1.ratio.lift(), pow_int(5, overlap)) ==
          mod_reduce(f2.ratio.lift(), pow_int(5, overlap)));
}

TEST_CASE("crosscheck requires a split prime") {
    ImagQuadField K(-11);
    PadicContext ctx(7, 10);
    CHECK_THROWS_AS(fg_crosscheck(K, 7, ctx), precondition_error);
}
