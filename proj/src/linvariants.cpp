#include "ezheeg/linvariants.hpp"

#include <sstream>

namespace ezheeg {

namespace {

// integer power series arithmetic on dense vectors, index = exponent
std::vector<Int> series_mul(const std::vector<Int>& f, const std::vector<Int>& g, long len) {
    std::vector<Int> h(len, Int(0));
    for (long i = 0; i < static_cast<long>(f.size()) && i < len; ++i) {
        if (f[i] == 0) continue;
        for (long j = 0; j < static_cast<long>(g.size()) && i + j < len; ++j) {
            if (g[j] == 0) continue;
            h[i + j] += f[i] * g[j];
        }
    }
    return h;
}

// reciprocal of a series with constant term 1
std::vector<Int> series_inv(const std::vector<Int>& f, long len) {
    std::vector<Int> g(len, Int(0));
    g[0] = 1;
    for (long n = 1; n < len; ++n) {
        Int s = 0;
        for (long i = 1; i <= n && i < static_cast<long>(f.size()); ++i) s += f[i] * g[n - i];
        g[n] = -s;
    }
    return g;
}

long sigma3(long n) {
    long s = 0;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        s += d * d * d;
        long e = n / d;
        if (e != d) s += e * e * e;
    }
    return s;
}

// Delta/q = prod (1-q^n)^24 to the requested length
std::vector<Int> delta_over_q(long len) {
    std::vector<Int> f(len, Int(0));
    f[0] = 1;
    for (long n = 1; n < len; ++n) {
        // multiply by (1 - q^n)^24 via binomial expansion
        std::vector<Int> factor(len, Int(0));
        Int binom = 1;
        for (long k = 0; k * n < len && k <= 24; ++k) {
            factor[k * n] = (k % 2 == 0) ? binom : -binom;
            binom = binom * (24 - k) / (k + 1);
        }
        f = series_mul(f, factor, len);
    }
    return f;
}

} // namespace

std::vector<Int> j_series_coefficients(long terms) {
    long len = terms + 2;
    std::vector<Int> e4(len, Int(0));
    e4[0] = 1;
    for (long n = 1; n < len; ++n) e4[n] = Int(240) * sigma3(n);
    std::vector<Int> e43 = series_mul(series_mul(e4, e4, len), e4, len);
    std::vector<Int> dq = delta_over_q(len);
    // j = E4^3 / (q * (Delta/q)); coefficient of q^(i-1) is (E4^3 * inv)[i]
    std::vector<Int> inv = series_inv(dq, len);
    std::vector<Int> c = series_mul(e43, inv, len);
    c.resize(terms + 1);
    return c; // c[i] multiplies q^(i-1)
}

TatePeriod tate_period(const Rat& j_E, const PadicContext& ctx, const std::string& label) {
    const long p = ctx.prime();
    Int num = boost::multiprecision::numerator(j_E);
    Int den = boost::multiprecision::denominator(j_E);
    if (num == 0 || den % p != 0)
        throw domain_error("j-invariant is integral at p: no multiplicative uniformization");
    long e = valuation_int(den, p) - (num % p == 0 ? valuation_int(num, p) : 0);
    if (e < 1) throw domain_error("j-invariant is integral at p");

    const int M = ctx.precision();
    long terms = (M + 6) / e + 2;
    std::vector<Int> c = j_series_coefficients(terms);
    // S(q) = q / (j(q) q) = Delta/E4^3 as a power series with S = q + ...;
    // solve S(q) = 1/j_E by Newton, using S = 1/(sum c[i] q^(i-1)).
    // Work directly with T(q) := sum_{i>=0} c[i] q^i = q*j(q): solve q*jE = T(q).
    auto eval_T = [&](const Padic& q) {
        Padic acc = Padic::zero(ctx);
        Padic qp = Padic::from_int(ctx, 1);
        for (long i = 0; i <= terms; ++i) {
            acc = acc + qp.mul_int(c[i]);
            qp = qp * q;
        }
        return acc;
    };
    auto eval_Tprime = [&](const Padic& q) {
        Padic acc = Padic::zero(ctx);
        Padic qp = Padic::from_int(ctx, 1);
        for (long i = 1; i <= terms; ++i) {
            acc = acc + qp.mul_int(c[i] * i);
            qp = qp * q;
        }
        return acc;
    };

    Padic jE = Padic::from_rational(ctx, j_E);
    Padic q = jE.inverse(); // first approximation, ord = e
    for (int iter = 0; iter < 80; ++iter) {
        // F(q) = T(q) - q*jE has F'(q) = T'(q) - jE with valuation -e (unit times jE)
        Padic F = eval_T(q) - q * jE;
        if (F.is_zero()) break;
        Padic Fp = eval_Tprime(q) - jE;
        Padic step = F / Fp;
        Padic qn = q - step;
        if (agreement(qn, q) >= qn.precision()) { q = qn; break; }
        q = qn;
    }

    TatePeriod tp;
    tp.e = static_cast<long>(q.valuation());
    tp.j = j_E;
    tp.source_label = label;
    if (tp.e != e) throw domain_error("Tate parameter valuation mismatch");
    // the residual bounds |q - q*| by |F(q)|/|F'| with F' of valuation -e,
    // so certified digits = residual valuation + e
    Padic resid = eval_T(q) - q * jE;
    int achieved = resid.is_zero() ? resid.precision() : resid.valuation();
    int honest = std::min(M, achieved + static_cast<int>(e));
    if (honest <= e) throw precision_error("Tate parameter inversion lost all digits");
    tp.q = q.clamp(honest);
    tp.delta = M - honest;
    // j has a double pole at the cusp: re-evaluating j at q costs 2e digits
    tp.forward_delta = tp.delta + 2 * static_cast<int>(e);
    return tp;
}

Padic l_invariant_f(const TatePeriod& tp) {
    return iwasawa_log(tp.q).div_int(tp.e);
}

Padic l_invariant_chi(const SplitPrimeData& sp) {
    Padic route1 = iwasawa_log(sp.varpi).div_int(sp.h);
    Padic route2 = iwasawa_log(sp.pi_bar_image).mul_int(-2).div_int(sp.h);
    if (agreement(route1, route2) < std::min(route1.precision(), route2.precision()))
        throw domain_error("the two expressions for the character L-invariant disagree");
    return route1;
}

LInvariantReport l_invariant_fK(const EllipticCurveData& E, const ImagQuadField& K,
                                const PadicContext& ctx) {
    LInvariantReport r;
    r.p = ctx.prime();
    r.precision = ctx.precision();
    r.curve_label = E.label;
    r.disc = K.disc();
    r.tate = tate_period(E.j_invariant(), ctx, E.label);
    r.Lf = l_invariant_f(r.tate);
    r.split = split_prime(K, ctx.prime(), ctx);
    r.Lchi = l_invariant_chi(r.split);
    r.LfK = r.Lf - r.Lchi;
    return r;
}

std::string LInvariantReport::text() const {
    std::ostringstream os;
    os << "L-invariant report: curve " << curve_label << ", p = " << p
       << ", disc = " << disc << ", precision O(" << p << "^" << precision << ")\n";
    os << "  ord_p(q_E) = " << tate.e << ", delta(Tate) = " << tate.delta << "\n";
    os << "  L_p(f)     = " << Lf.to_string() << "\n";
    os << "  L_p(chi_K) = " << Lchi.to_string() << "\n";
    os << "  L_p(f,K)   = " << LfK.to_string() << "\n";
    os << "  assumptions: global minimal model, Manin constant 1\n";
    return os.str();
}

std::string LInvariantReport::json() const {
    std::ostringstream os;
    os << "{\"curve\":\"" << curve_label << "\",\"p\":" << p << ",\"disc\":" << disc
       << ",\"precision\":" << precision
       << ",\"tate_valuation\":" << tate.e << ",\"tate_delta\":" << tate.delta
       << ",\"L_f\":" << Lf.json() << ",\"L_chi\":" << Lchi.json()
       << ",\"L_fK\":" << LfK.json()
       << ",\"manin_constant_assumed_one\":true}";
    return os.str();
}

} // namespace ezheeg
