#include "ezheeg/qexp.hpp"

#include <sstream>

namespace ezheeg {

QExpQ newform_qexp(const EllipticCurveData& E, long p, long bound) {
    QExpQ f;
    f.weight = WeightTag::of(2);
    if (E.conductor % p != 0) throw domain_error("p does not divide the conductor");
    f.level = E.conductor / p;
    f.p = p;
    f.trunc = bound;
    auto an = an_from_curve(E, bound);
    f.a.assign(bound + 1, Rat(0));
    for (long n = 1; n <= bound; ++n) f.a[n] = Rat(an[n]);
    return f;
}

QExpP to_padic(const QExpQ& f, const PadicContext& ctx) {
    QExpP g;
    g.weight = f.weight;
    g.level = f.level;
    g.p = f.p;
    g.trunc = f.trunc;
    g.a.assign(f.trunc + 1, Padic());
    g.a[0] = Padic::zero(ctx);
    for (long n = 1; n <= f.trunc; ++n) g.a[n] = Padic::from_rational(ctx, f.a[n]);
    return g;
}

template <typename C>
QExpansion<C> U_p(const QExpansion<C>& f) {
    QExpansion<C> g;
    g.weight = f.weight;
    g.level = f.level;
    g.p = f.p;
    g.trunc = f.trunc / f.p;
    g.a.assign(g.trunc + 1, C());
    if (!f.a.empty()) g.a[0] = f.a[0];
    for (long n = 1; n <= g.trunc; ++n) g.a[n] = f.a[n * f.p];
    return g;
}

template <typename C>
QExpansion<C> V_op(const QExpansion<C>& f) {
    QExpansion<C> g;
    g.weight = f.weight;
    g.level = f.level;
    g.p = f.p;
    g.trunc = f.trunc;
    g.a.assign(g.trunc + 1, C());
    if (!f.a.empty()) g.a[0] = f.a[0];
    C zero = f.a[1] - f.a[1];
    for (long n = 0; n <= g.trunc; ++n) g.a[n] = zero;
    for (long n = 1; n * f.p <= g.trunc; ++n) g.a[n * f.p] = f.a[n];
    return g;
}

template <typename C>
QExpansion<C> deplete(const QExpansion<C>& f, const C& ap) {
    QExpansion<C> vf = V_op(f);
    QExpansion<C> g = f;
    for (long n = 1; n <= g.trunc; ++n) g.a[n] = f.a[n] - ap * vf.a[n];
    return g;
}

template QExpansion<Rat> U_p<Rat>(const QExpansion<Rat>&);
template QExpansion<Padic> U_p<Padic>(const QExpansion<Padic>&);
template QExpansion<Rat> V_op<Rat>(const QExpansion<Rat>&);
template QExpansion<Padic> V_op<Padic>(const QExpansion<Padic>&);
template QExpansion<Rat> deplete<Rat>(const QExpansion<Rat>&, const Rat&);
template QExpansion<Padic> deplete<Padic>(const QExpansion<Padic>&, const Padic&);

bool is_depleted(const QExpQ& f) {
    for (long n = f.p; n <= f.trunc; n += f.p)
        if (f.a[n] != 0) return false;
    return true;
}

bool is_depleted(const QExpP& f) {
    for (long n = f.p; n <= f.trunc; n += f.p)
        if (!f.a[n].is_zero()) return false;
    return true;
}

QExpQ atkin_serre_power(const QExpQ& f, long t) {
    if (t < 0 && !is_depleted(f))
        throw domain_error("negative Atkin-Serre power needs a p-depleted input");
    QExpQ g = f;
    g.weight = f.weight.shifted(2 * t);
    for (long n = 1; n <= f.trunc; ++n) {
        if (f.a[n] == 0) continue;
        Rat nt = 1;
        Int np = pow_int(Int(n), std::abs(t));
        nt = (t >= 0) ? Rat(np) : Rat(1, np);
        g.a[n] = f.a[n] * nt;
    }
    return g;
}

QExpP atkin_serre_power(const QExpP& f, long t) {
    if (t < 0 && !is_depleted(f))
        throw domain_error("negative Atkin-Serre power needs a p-depleted input");
    QExpP g = f;
    g.weight = f.weight.shifted(2 * t);
    for (long n = 1; n <= f.trunc; ++n) {
        if (f.a[n].is_zero()) continue;
        const PadicContext& ctx = f.a[n].context();
        Padic np = Padic::from_int(ctx, n).pow(t >= 0 ? t : -t);
        g.a[n] = (t >= 0) ? f.a[n] * np : f.a[n] / np;
    }
    return g;
}

QExpP atkin_serre_power(const QExpP& f, const Padic& t_zp, long t_res) {
    if (!is_depleted(f))
        throw domain_error("p-adic Atkin-Serre power needs a p-depleted input");
    const PadicContext& ctx = t_zp.context();
    long p = ctx.prime();
    long res = ((t_res % (p - 1)) + (p - 1)) % (p - 1);
    QExpP g = f;
    std::ostringstream wl;
    wl << (f.weight.integral ? std::to_string(f.weight.k) : f.weight.label) << "+2t";
    g.weight = WeightTag::formal(wl.str());
    for (long n = 1; n <= f.trunc; ++n) {
        if (n % p == 0) continue;
        if (f.a[n].is_zero()) continue;
        Padic nn = Padic::from_int(ctx, n);
        // n^t = omega(n)^{t mod p-1} * exp(t * log<n>)
        Padic part1 = teichmuller(nn).pow(res);
        Padic part2 = padic_exp(t_zp * iwasawa_log(nn));
        g.a[n] = f.a[n] * part1 * part2;
    }
    return g;
}

QExpQ coleman_value_series(const QExpQ& f, const Rat& ap) {
    if (!f.weight.integral || f.weight.k != 2)
        throw domain_error("the value series is taken at weight 2");
    return atkin_serre_power(deplete(f, ap), -1);
}

QExpP coleman_value_series(const QExpP& f, const Padic& ap) {
    if (!f.weight.integral || f.weight.k != 2)
        throw domain_error("the value series is taken at weight 2");
    return atkin_serre_power(deplete(f, ap), -1);
}

namespace {
template <typename C, typename Fmt>
std::string qexp_json_impl(const QExpansion<C>& f, Fmt fmt) {
    std::ostringstream os;
    os << "{\"weight\":\"" << (f.weight.integral ? std::to_string(f.weight.k) : f.weight.label)
       << "\",\"level\":" << f.level << ",\"p\":" << f.p << ",\"M_q\":" << f.trunc
       << ",\"coeffs\":[";
    for (long n = 1; n <= f.trunc; ++n) {
        if (n > 1) os << ",";
        os << fmt(f.a[n]);
    }
    os << "]}";
    return os.str();
}
} // namespace

std::string qexp_json(const QExpQ& f) {
    return qexp_json_impl(f, [](const Rat& r) { return "\"" + rat_to_string(r) + "\""; });
}

std::string qexp_json(const QExpP& f) {
    return qexp_json_impl(f, [](const Padic& x) { return x.json(); });
}

} // namespace ezheeg
