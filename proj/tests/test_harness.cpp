#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ezheeg/catalog.hpp"
#include "ezheeg/harness.hpp"

#include <random>

using namespace ezheeg;

namespace {

// synthetic inputs with prescribed scalars; h = 1 throughout
EZInput synthetic(const PadicContext& ctx, const Padic& L_f, const Padic& log_varpi,
                  const Padic& lambda, int w = -1, int deg = 3) {
    EZInput in;
    in.ctx = &ctx;
    in.jet_order = deg;
    in.w = w;
    in.h = 1;
    in.L_f = L_f;
    in.L_chi = log_varpi; // h = 1: L_chi = log(varpi)
    in.log_varpi = log_varpi;
    in.lambda = lambda;
    in.curve_label = "synthetic";
    in.disc = -11;
    return in;
}

EZInput pipeline_input(long p, int M, const std::string& label, long disc, int w = -1) {
    Catalog cat = load_catalog(default_catalog_path());
    const auto& E = cat.curve(label);
    static std::vector<std::unique_ptr<PadicContext>> keep;
    keep.push_back(std::make_unique<PadicContext>(p, M));
    const PadicContext& ctx = *keep.back();
    ImagQuadField K(disc);
    LInvariantReport linv = l_invariant_fK(E, K, ctx);
    auto pts = cat.points_for(label, disc);
    REQUIRE_FALSE(pts.empty());
    PgzValue pv = pgz_value(E, to_kpoint(pts.front()), disc, ctx);
    return assemble_ez_input(linv, pv, w, 3);
}

} // namespace

TEST_CASE("exceptional factor: the center value is exactly zero") {
    PadicContext ctx(5, 14);
    EZInput in = synthetic(ctx, Padic::from_int(ctx, 5 * 3), Padic::from_int(ctx, 5 * 7),
                           Padic::from_int(ctx, 2));
    TwoVarSeries E = exceptional_factor(in, PrimeArm::p);
    CHECK(E.value_at_origin().is_zero());
    CHECK(E.value_at_origin().precision() == 14);
}

TEST_CASE("exceptional factor: t-derivative is -log(varpi) when L_f = 0") {
    PadicContext ctx(5, 14);
    Padic lv = Padic::from_int(ctx, 5 * 7);
    EZInput in = synthetic(ctx, Padic::zero(ctx), lv, Padic::from_int(ctx, 2));
    // jet oracle: differentiate 1 - exp(t log(varpi) + ...) / a_p(k) in t at 0
    TwoVarSeries E = exceptional_factor(in, PrimeArm::p);
    CHECK(agreement(E.d_dt_at_origin(), -lv) >= E.d_dt_at_origin().precision());
    // and the k-derivative sees log(pi_bar) = -log(varpi)/2 when a_p' = 0
    Padic half = Padic::from_rational(ctx, Rat(1, 2));
    CHECK(agreement(E.d_dx_at_origin(), lv * half) >= E.d_dx_at_origin().precision() - 1);
}

TEST_CASE("exceptional factor: degenerate input reduces to 1 - 1/a_p(k)") {
    PadicContext ctx(5, 14);
    EZInput in = synthetic(ctx, Padic::zero(ctx), Padic::zero(ctx), Padic::from_int(ctx, 1));
    // L_f = 0 and varpi = 1: every exponent vanishes
    TwoVarSeries E = exceptional_factor(in, PrimeArm::p);
    TwoVarSeries one = TwoVarSeries::constant(ctx, 3, Padic::from_int(ctx, 1));
    TwoVarSeries want = one - in.ap_jet().reciprocal();
    TwoVarSeries diff = E - want;
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; i + j <= 3; ++j) CHECK(diff.coeff(i, j).is_zero());
}

TEST_CASE("raw character jet on Frobenius") {
    PadicContext ctx(5, 16);
    ImagQuadField K(-11);
    SplitPrimeData sp = split_prime(K, 5, ctx);
    TwoVarSeries jet = frobenius_character_jet(sp, ctx, 3);
    // value 1 at the center
    CHECK(agreement(jet.value_at_origin(), Padic::from_int(ctx, 1)) >= 16);
    // t-derivative is -log(varpi)
    Padic lv = iwasawa_log(sp.varpi);
    CHECK(agreement(jet.d_dt_at_origin(), -lv) >= jet.d_dt_at_origin().precision());
}

TEST_CASE("improved factor: center value and finite-difference derivative") {
    PadicContext ctx(5, 16);
    EZInput in = synthetic(ctx, Padic::from_int(ctx, 5 * 2), Padic::from_int(ctx, 5 * 3),
                           Padic::from_int(ctx, 1));
    TwoVarSeries impr = improved_factor(in);
    Padic want = Padic::from_int(ctx, 1) - Padic::from_int(ctx, 5).inverse();
    CHECK(agreement(impr.value_at_origin(), want) >= impr.value_at_origin().precision());
    // invertibility at the center
    CHECK_FALSE(impr.value_at_origin().is_zero());
    // finite-difference oracle for the k-derivative
    Padic x0 = Padic::from_int(ctx, 5 * 5 * 5 * 2);
    Padic f0 = impr.evaluate(Padic::zero(ctx), Padic::zero(ctx));
    Padic f1 = impr.evaluate(x0, Padic::zero(ctx));
    Padic fd = (f1 - f0) / x0;
    int expect_match = 3; // difference quotient is first-order accurate in v(x0)
    CHECK(agreement(fd, impr.d_dx_at_origin()) >= expect_match);
}

TEST_CASE("assembly: line vanishing holds for arbitrary core jets") {
    PadicContext ctx(5, 14);
    std::mt19937 rng(3);
    std::uniform_int_distribution<long> d(-500, 500);
    EZInput in = synthetic(ctx, Padic::from_int(ctx, 5 * 4), Padic::from_int(ctx, 5 * 9),
                           Padic::from_int(ctx, 3));
    for (int trial = 0; trial < 10; ++trial) {
        TwoVarSeries core = TwoVarSeries::constant(ctx, 3, in.lambda);
        for (int i = 0; i <= 3; ++i)
            for (int j = 0; i + j <= 3; ++j) {
                if (i + j == 0) continue;
                core.set_coeff(i, j, Padic::from_int(ctx, d(rng)));
            }
        AssembledL A = assemble_Lp(in, core);
        auto line = A.L_p.restrict_to_line(Rat(1, 2));
        for (const auto& c : line)
            CHECK((c.is_zero() || c.valuation() >= A.L_p.min_precision() - 2));
        // first-order identities do not depend on the core jets
        Padic dk = A.L_p.d_dx_at_origin();
        Padic LfK = in.L_f - in.L_chi;
        CHECK(agreement(dk, -(LfK * in.lambda)) >= dk.precision() - 2);
    }
}

TEST_CASE("assembly rejects a mismatched core") {
    PadicContext ctx(5, 12);
    EZInput in = synthetic(ctx, Padic::zero(ctx), Padic::from_int(ctx, 5), Padic::from_int(ctx, 1));
    TwoVarSeries wrong(ctx, 2);
    CHECK_THROWS_AS(assemble_Lp(in, wrong), domain_error);
}

TEST_CASE("synthetic harness: identities hold and scale correctly") {
    PadicContext ctx(7, 16);
    Padic Lf = Padic::from_int(ctx, 7 * 3);
    Padic lv = Padic::from_int(ctx, 7 * 2);
    Padic lam = Padic::from_int(ctx, 4);
    EZInput in = synthetic(ctx, Lf, lv, lam);
    EZReport rep = ez_verify(in);
    CHECK(rep.all_pass());
    CHECK_FALSE(rep.degenerate);
    // solved derivative = (L_f - L_chi) * lambda / (1 - 1/p)
    Padic euler = Padic::from_int(ctx, 1) - Padic::from_int(ctx, 7).inverse();
    Padic want = (Lf - lv) * lam / euler;
    CHECK(agreement(rep.solved_log_Z0prime, want) >= rep.solved_log_Z0prime.precision() - 2);
}

TEST_CASE("exceptional factor: general weight derivative") {
    PadicContext ctx(5, 14);
    Padic Lf = Padic::from_int(ctx, 5 * 4);
    Padic lv = Padic::from_int(ctx, 5 * 9);
    EZInput in = synthetic(ctx, Lf, lv, Padic::from_int(ctx, 1));
    Padic half = Padic::from_rational(ctx, Rat(1, 2));
    // d/dk at the center: a_p'(2) - log(pi_bar)/h = -L_f/2 + log(varpi)/2
    TwoVarSeries E = exceptional_factor(in, PrimeArm::p);
    Padic want = (lv - Lf) * half;
    CHECK(agreement(E.d_dx_at_origin(), want) >= E.d_dx_at_origin().precision() - 1);
}

TEST_CASE("a torsion point (zero center value) degenerates gracefully") {
    PadicContext ctx(5, 14);
    EZInput in = synthetic(ctx, Padic::from_int(ctx, 5 * 2), Padic::from_int(ctx, 5 * 7),
                           Padic::zero(ctx));
    EZReport rep = ez_verify(in);
    CHECK(rep.all_pass());
    bool found = false;
    for (const auto& id : rep.identities)
        if (id.name.find("degenerate: center value is zero") != std::string::npos) found = true;
    CHECK(found);
}

TEST_CASE("zero L-invariant difference predicts a zero derivative") {
    PadicContext ctx(5, 14);
    Padic common = Padic::from_int(ctx, 5 * 6);
    EZInput in = synthetic(ctx, common, common, Padic::from_int(ctx, 9));
    EZReport rep = ez_verify(in);
    CHECK(rep.all_pass());
    CHECK((rep.solved_log_Z0prime.is_zero() ||
           rep.solved_log_Z0prime.valuation() >= rep.solved_log_Z0prime.precision() - 1));
}

TEST_CASE("degenerate sign short-circuits with the 0 = 0 marker") {
    PadicContext ctx(5, 12);
    EZInput in = synthetic(ctx, Padic::from_int(ctx, 5), Padic::from_int(ctx, 10),
                           Padic::from_int(ctx, 1), +1);
    EZReport rep = ez_verify(in);
    CHECK(rep.degenerate);
    CHECK(rep.all_pass());
    CHECK(rep.text().find("0 = 0") != std::string::npos);
    CHECK(rep.json().find("\"degenerate\":true") != std::string::npos);
}

TEST_CASE("full pipeline at the main triple") {
    EZInput in = pipeline_input(5, 20, "15a1", -11);
    EZReport rep = ez_verify(in);
    INFO(rep.text());
    CHECK(rep.all_pass());
    // the extracted difference of L-invariants has the frozen leading digits
    CHECK(rep.extracted_LfK.valuation() == 1);
    CHECK(mod_reduce(rep.extracted_LfK.lift(), pow_int(5, 5)) == Int(2 * 5 + 4 * 25 + 2 * 625));
}

TEST_CASE("pipeline identities are stable under precision increase") {
    EZInput a = pipeline_input(5, 20, "15a1", -11);
    EZInput b = pipeline_input(5, 24, "15a1", -11);
    EZReport ra = ez_verify(a);
    EZReport rb = ez_verify(b);
    CHECK(ra.all_pass());
    CHECK(rb.all_pass());
    int overlap = std::min(ra.solved_log_Z0prime.precision(), rb.solved_log_Z0prime.precision());
    CHECK(mod_reduce(ra.solved_log_Z0prime.lift(), pow_int(5, overlap)) ==
          mod_reduce(rb.solved_log_Z0prime.lift(), pow_int(5, overlap)));
}

TEST_CASE("pipeline with class number 3 at (14a1, 7, -31)") {
    EZInput in = pipeline_input(7, 16, "14a1", -31);
    CHECK(in.h == 3);
    EZReport rep = ez_verify(in);
    INFO(rep.text());
    CHECK(rep.all_pass());
}

TEST_CASE("pipelines with class numbers 5 and 7") {
    EZInput a = pipeline_input(7, 14, "14a1", -47);
    CHECK(a.h == 5);
    CHECK(ez_verify(a).all_pass());
    EZInput b = pipeline_input(5, 14, "15a1", -71);
    CHECK(b.h == 7);
    CHECK(ez_verify(b).all_pass());
}

TEST_CASE("the a_p jet is 1 - (L_f/2)(k-2)") {
    PadicContext ctx(5, 14);
    Padic Lf = Padic::from_int(ctx, 5 * 3);
    EZInput in = synthetic(ctx, Lf, Padic::from_int(ctx, 5), Padic::from_int(ctx, 1));
    TwoVarSeries ap = in.ap_jet();
    CHECK(agreement(ap.value_at_origin(), Padic::from_int(ctx, 1)) >= 14);
    Padic half = Padic::from_rational(ctx, Rat(1, 2));
    CHECK(agreement(ap.d_dx_at_origin(), -(Lf * half)) >= 14);
    CHECK(ap.d_dt_at_origin().is_zero());
}

TEST_CASE("the tower-log germ vanishes to second order at the trivial coordinate") {
    // the augmentation slice of the tower log carries the square of the
    // vanishing multiplier: both the value and the weight-derivative at the
    // center are zero, the second-order coefficient generically is not
    EZInput in = pipeline_input(5, 18, "15a1", -11);
    AssembledL A = assemble_Lp(in, TwoVarSeries::constant(in.context(), in.jet_order, in.lambda));
    auto slice = A.tower_log.restrict_t_value(Padic::zero(in.context()));
    int tol = A.tower_log.min_precision() - 2;
    CHECK((slice[0].is_zero() || slice[0].valuation() >= tol));
    CHECK((slice[1].is_zero() || slice[1].valuation() >= tol));
    CHECK_FALSE(slice[2].is_zero());
    CHECK(slice[2].valuation() < tol - 2);
}

TEST_CASE("report serialization is deterministic") {
    EZInput in = pipeline_input(5, 14, "15a8", -11);
    EZReport r1 = ez_verify(in);
    EZReport r2 = ez_verify(in);
    CHECK(r1.json() == r2.json());
    CHECK(r1.text() == r2.text());
}
