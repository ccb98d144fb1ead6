#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ezheeg/quadfield.hpp"

using namespace ezheeg;

TEST_CASE("fundamental discriminants") {
    CHECK(is_fundamental_discriminant(-11));
    CHECK(is_fundamental_discriminant(-20));
    CHECK(is_fundamental_discriminant(-8));
    CHECK(is_fundamental_discriminant(-4));
    CHECK_FALSE(is_fundamental_discriminant(-12));
    CHECK_FALSE(is_fundamental_discriminant(-9));
    CHECK_FALSE(is_fundamental_discriminant(-44));
    CHECK_FALSE(is_fundamental_discriminant(11));
    CHECK_THROWS_AS(ImagQuadField(-12), domain_error);
    CHECK_THROWS_AS(ImagQuadField(-4), domain_error); // extra units excluded
}

TEST_CASE("class group of -11 is trivial with the expected form") {
    ImagQuadField K(-11);
    REQUIRE(K.class_number() == 1);
    CHECK(K.class_group()[0] == QuadForm{1, 1, 3});
    CHECK(K.principal_form() == QuadForm{1, 1, 3});
}

TEST_CASE("class numbers match the brute-force oracle") {
    // the enumeration and the oracle use different loop structures
    for (long D = 5; D < 200; ++D) {
        long disc = -D;
        if (!is_fundamental_discriminant(disc) || disc >= -4) continue;
        ImagQuadField K(disc);
        CHECK(K.class_number() == class_number_bruteforce(disc));
    }
    CHECK(ImagQuadField(-23).class_number() == 3);
    CHECK(ImagQuadField(-47).class_number() == 5);
    CHECK(ImagQuadField(-71).class_number() == 7);
}

TEST_CASE("composition gives a finite abelian group") {
    for (long disc : {-23L, -31L, -47L}) {
        ImagQuadField K(disc);
        const auto& cls = K.class_group();
        QuadForm e = K.principal_form();
        for (const auto& f : cls) {
            CHECK(compose_forms(e, f, disc) == f);
            CHECK(compose_forms(f, form_inverse(f), disc) == e);
            for (const auto& g : cls) {
                QuadForm fg = compose_forms(f, g, disc);
                CHECK(is_reduced(fg));
                CHECK(form_discriminant(fg) == disc);
                CHECK(compose_forms(g, f, disc) == fg); // commutativity
                for (const auto& h : cls)
                    CHECK(compose_forms(fg, h, disc) ==
                          compose_forms(f, compose_forms(g, h, disc), disc));
            }
        }
    }
}

TEST_CASE("class order divides h") {
    for (long disc : {-23L, -47L, -71L}) {
        ImagQuadField K(disc);
        for (const auto& f : K.class_group())
            CHECK(form_power(f, K.class_number(), disc) == K.principal_form());
    }
}

TEST_CASE("split prime at (5, -11)") {
    PadicContext ctx(5, 18);
    ImagQuadField K(-11);
    SplitPrimeData sp = split_prime(K, 5, ctx);
    // norm equation x^2 + 11 y^2 = 20: minimal |x| solution (3, 1)
    CHECK(sp.pi.x == 3);
    CHECK((sp.pi.y == 1 || sp.pi.y == -1));
    CHECK(sp.pi_image.valuation() == 1);
    CHECK(sp.pi_bar_image.valuation() == 0);
    CHECK(sp.varpi.valuation() == 1); // = h
    // pi * pi_bar = Norm = 5
    Padic prod = sp.pi_image * sp.pi_bar_image;
    CHECK(agreement(prod, Padic::from_int(ctx, 5)) >= prod.precision());
}

TEST_CASE("split prime with h = 3 at (7, -31)") {
    PadicContext ctx(7, 14);
    ImagQuadField K(-31);
    SplitPrimeData sp = split_prime(K, 7, ctx);
    CHECK(sp.h == 3);
    // (16 + 6 sqrt(-31))/2 = 8 + 3 sqrt(-31), norm 343
    CHECK(sp.pi.x == 16);
    CHECK(sp.varpi.valuation() == 3);
    Padic prod = sp.pi_image * sp.pi_bar_image;
    CHECK(agreement(prod, Padic::from_int(ctx, 343)) >= prod.precision());
}

TEST_CASE("conjugating the root inverts varpi") {
    PadicContext ctx(5, 16);
    ImagQuadField K(-11);
    SplitPrimeData sp = split_prime(K, 5, ctx);
    Padic s = sp.sqrt_disc;
    Padic two = Padic::from_int(ctx, 2);
    Padic pi_conj = (Padic::from_int(ctx, sp.pi.x) - Padic::from_int(ctx, sp.pi.y) * s) / two;
    Padic pibar_conj = (Padic::from_int(ctx, sp.pi.x) + Padic::from_int(ctx, sp.pi.y) * s) / two;
    Padic varpi_conj = pi_conj / pibar_conj;
    Padic prod = sp.varpi * varpi_conj;
    CHECK(agreement(prod, Padic::from_int(ctx, 1)) >= prod.precision());
}

TEST_CASE("split prime error paths") {
    PadicContext ctx5(5, 10);
    ImagQuadField K23(-23);
    CHECK_THROWS_AS(split_prime(K23, 5, ctx5), nonsplit_error); // 5 inert in Q(sqrt(-23))
    ImagQuadField K79(-79); // h = 5 and 5 splits
    CHECK(K79.class_number() == 5);
    CHECK_THROWS_AS(split_prime(K79, 5, ctx5), domain_error); // p | h
}

TEST_CASE("heegner hypothesis") {
    ImagQuadField K(-11);
    SUBCASE("N = 3 splits with a witness") {
        HeegnerWitness w = heegner_hypothesis(K, 3);
        CHECK(w.holds);
        REQUIRE(w.primes_above.size() == 1);
        CHECK(w.primes_above[0].a == 3);
        CHECK(form_discriminant(w.primes_above[0]) == -11);
    }
    SUBCASE("N = 1 holds trivially") {
        HeegnerWitness w = heegner_hypothesis(K, 1);
        CHECK(w.holds);
        CHECK(w.primes_above.empty());
    }
    SUBCASE("an inert prime fails") {
        HeegnerWitness w = heegner_hypothesis(K, 7);
        CHECK_FALSE(w.holds);
        CHECK(w.failing_primes == std::vector<long>{7});
    }
    SUBCASE("N must be squarefree here") {
        CHECK_THROWS_AS(heegner_hypothesis(K, 9), precondition_error);
    }
}

TEST_CASE("phi_o is trivial on the principal class") {
    PadicContext ctx(5, 14);
    ImagQuadField K(-11);
    Padic v = phi_o_value(K, K.principal_form(), ctx);
    CHECK(agreement(v, Padic::from_int(ctx, 1)) >= v.precision());
}

TEST_CASE("phi_o is multiplicative on ideals") {
    PadicContext ctx(7, 12);
    ImagQuadField K(-31); // h = 3, 7 splits
    const auto& cls = K.class_group();
    for (const auto& A : cls)
        for (const auto& B : cls) {
            Padic lhs = phi_o_product_value(K, A, B, ctx);
            Padic rhs = phi_o_value(K, A, ctx) * phi_o_value(K, B, ctx);
            CHECK(agreement(lhs, rhs) >= std::min(lhs.precision(), rhs.precision()));
        }
}

TEST_CASE("phi_o values are units") {
    PadicContext ctx(5, 12);
    ImagQuadField K(-71); // h = 7, 5 splits
    for (const auto& A : K.class_group()) {
        Padic v = phi_o_value(K, A, ctx);
        CHECK(v.valuation() == 0);
    }
}

TEST_CASE("split-prime search is independent of context precision") {
    ImagQuadField K(-19);
    PadicContext c1(5, 12), c2(5, 20);
    SplitPrimeData s1 = split_prime(K, 5, c1);
    SplitPrimeData s2 = split_prime(K, 5, c2);
    CHECK(s1.pi.x == s2.pi.x);
    CHECK(s1.pi.y == s2.pi.y);
}
