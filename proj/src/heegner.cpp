#include "ezheeg/heegner.hpp"

#include <sstream>

namespace ezheeg {

QuadRatNum qr_add(const QuadRatNum& u, const QuadRatNum& v) { return {u.a + v.a, u.b + v.b}; }
QuadRatNum qr_sub(const QuadRatNum& u, const QuadRatNum& v) { return {u.a - v.a, u.b - v.b}; }
QuadRatNum qr_mul(const QuadRatNum& u, const QuadRatNum& v, long disc) {
    return {u.a * v.a + u.b * v.b * disc, u.a * v.b + u.b * v.a};
}
QuadRatNum qr_div(const QuadRatNum& u, const QuadRatNum& v, long disc) {
    Rat norm = v.a * v.a - v.b * v.b * disc;
    if (norm == 0) throw domain_error("division by zero in K");
    QuadRatNum conj{v.a, -v.b};
    QuadRatNum w = qr_mul(u, conj, disc);
    return {w.a / norm, w.b / norm};
}

namespace {
QuadRatNum qr_int(long n) { return {Rat(n), Rat(0)}; }
bool qr_zero(const QuadRatNum& u) { return u.a == 0 && u.b == 0; }
} // namespace

bool on_curve_exact(const EllipticCurveData& E, const KPoint& P, long disc) {
    if (P.infinity) return true;
    const auto& x = P.x;
    const auto& y = P.y;
    QuadRatNum lhs = qr_add(qr_mul(y, y, disc),
                            qr_add(qr_mul(qr_int(E.a[0]), qr_mul(x, y, disc), disc),
                                   qr_mul(qr_int(E.a[2]), y, disc)));
    QuadRatNum x2 = qr_mul(x, x, disc);
    QuadRatNum rhs = qr_add(qr_mul(x2, x, disc),
                            qr_add(qr_mul(qr_int(E.a[1]), x2, disc),
                                   qr_add(qr_mul(qr_int(E.a[3]), x, disc), qr_int(E.a[4]))));
    return qr_zero(qr_sub(lhs, rhs));
}

KPoint k_negate(const EllipticCurveData& E, const KPoint& P) {
    if (P.infinity) return P;
    // -(x,y) = (x, -y - a1 x - a3)
    QuadRatNum ny = {-P.y.a - Rat(E.a[0]) * P.x.a - Rat(E.a[2]), -P.y.b - Rat(E.a[0]) * P.x.b};
    return {false, P.x, ny};
}

KPoint k_add(const EllipticCurveData& E, const KPoint& P, const KPoint& Q, long disc) {
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    QuadRatNum lambda, nu;
    if (!qr_zero(qr_sub(P.x, Q.x))) {
        lambda = qr_div(qr_sub(Q.y, P.y), qr_sub(Q.x, P.x), disc);
    } else {
        // vertical or tangent
        KPoint negQ = k_negate(E, Q);
        if (qr_zero(qr_sub(P.y, negQ.y))) return KPoint{}; // P = -Q
        // tangent slope (3x^2 + 2a2 x + a4 - a1 y)/(2y + a1 x + a3)
        QuadRatNum num = qr_sub(
            qr_add(qr_mul(qr_int(3), qr_mul(P.x, P.x, disc), disc),
                   qr_add(qr_mul(qr_int(2 * E.a[1]), P.x, disc), qr_int(E.a[3]))),
            qr_mul(qr_int(E.a[0]), P.y, disc));
        QuadRatNum den = qr_add(qr_mul(qr_int(2), P.y, disc),
                                qr_add(qr_mul(qr_int(E.a[0]), P.x, disc), qr_int(E.a[2])));
        lambda = qr_div(num, den, disc);
    }
    nu = qr_sub(P.y, qr_mul(lambda, P.x, disc));
    // x3 = lambda^2 + a1 lambda - a2 - x1 - x2
    QuadRatNum x3 = qr_sub(
        qr_add(qr_mul(lambda, lambda, disc), qr_mul(qr_int(E.a[0]), lambda, disc)),
        qr_add(qr_int(E.a[1]), qr_add(P.x, Q.x)));
    // y3 = -(lambda + a1) x3 - nu - a3
    QuadRatNum y3 = qr_sub(qr_sub(qr_mul(qr_sub(qr_int(0), qr_add(lambda, qr_int(E.a[0]))), x3, disc), nu),
                           qr_int(E.a[2]));
    return {false, x3, y3};
}

KPoint k_multiple(const EllipticCurveData& E, const KPoint& P, long n, long disc) {
    if (n == 0) return KPoint{};
    if (n < 0) return k_negate(E, k_multiple(E, P, -n, disc));
    KPoint acc{};
    KPoint base = P;
    while (n > 0) {
        if (n & 1) acc = k_add(E, acc, base, disc);
        base = k_add(E, base, base, disc);
        n >>= 1;
    }
    return acc;
}

namespace {
PadicPoint localize_with_root(const KPoint& P, const Padic& root, const PadicContext& ctx) {
    if (P.infinity) return PadicPoint{};
    PadicPoint out;
    out.infinity = false;
    out.x = Padic::from_rational(ctx, P.x.a) + Padic::from_rational(ctx, P.x.b) * root;
    out.y = Padic::from_rational(ctx, P.y.a) + Padic::from_rational(ctx, P.y.b) * root;
    return out;
}
} // namespace

PadicPoint localize_point(const KPoint& P, long disc, const PadicContext& ctx) {
    return localize_with_root(P, hensel_sqrt(Padic::from_int(ctx, disc)), ctx);
}

PadicPoint localize_point_conjugate(const KPoint& P, long disc, const PadicContext& ctx) {
    return localize_with_root(P, -hensel_sqrt(Padic::from_int(ctx, disc)), ctx);
}

Padic curve_equation_residual(const EllipticCurveData& E, const PadicPoint& P) {
    const PadicContext& ctx = P.x.context();
    auto C = [&](long n) { return Padic::from_int(ctx, n); };
    Padic lhs = P.y * P.y + C(E.a[0]) * P.x * P.y + C(E.a[2]) * P.y;
    Padic rhs = ((P.x + C(E.a[1])) * P.x + C(E.a[3])) * P.x + C(E.a[4]);
    return lhs - rhs;
}

PadicPoint padic_add(const EllipticCurveData& E, const PadicPoint& P, const PadicPoint& Q) {
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    const PadicContext& ctx = P.x.context();
    auto C = [&](long n) { return Padic::from_int(ctx, n); };
    Padic lambda, nu;
    Padic dx = Q.x - P.x;
    if (!dx.is_zero()) {
        lambda = (Q.y - P.y) / dx;
    } else {
        Padic sum_y = P.y + Q.y + C(E.a[0]) * Q.x + C(E.a[2]);
        if (sum_y.is_zero()) return PadicPoint{};
        Padic num = C(3) * P.x * P.x + C(2 * E.a[1]) * P.x + C(E.a[3]) - C(E.a[0]) * P.y;
        Padic den = C(2) * P.y + C(E.a[0]) * P.x + C(E.a[2]);
        lambda = num / den;
    }
    nu = P.y - lambda * P.x;
    Padic x3 = lambda * lambda + C(E.a[0]) * lambda - C(E.a[1]) - P.x - Q.x;
    Padic y3 = -(lambda + C(E.a[0])) * x3 - nu - C(E.a[2]);
    return {false, x3, y3};
}

std::vector<Rat> formal_log_derivative_coefficients(const EllipticCurveData& E, long terms) {
    // w(z) = z^3 (1 + ...) solving w = z^3 + a1 z w + a2 z^2 w + a3 w^2 + a4 z w^2 + a6 w^3
    long len = terms + 6;
    auto mul = [&](const std::vector<Rat>& f, const std::vector<Rat>& g) {
        std::vector<Rat> h(len, Rat(0));
        for (long i = 0; i < len; ++i) {
            if (f[i] == 0) continue;
            for (long j = 0; i + j < len; ++j) {
                if (g[j] == 0) continue;
                h[i + j] += f[i] * g[j];
            }
        }
        return h;
    };
    std::vector<Rat> w(len, Rat(0));
    w[3] = 1;
    for (long it = 0; it < terms + 3; ++it) {
        std::vector<Rat> w2 = mul(w, w);
        std::vector<Rat> w3 = mul(w2, w);
        std::vector<Rat> next(len, Rat(0));
        next[3] = 1;
        for (long i = 0; i + 1 < len; ++i) {
            // + a1 z w + a2 z^2 w + a3 w^2 + a4 z w^2 + a6 w^3
            if (i + 1 < len && w[i] != 0) next[i + 1] += Rat(E.a[0]) * w[i];
            if (i + 2 < len && w[i] != 0) next[i + 2] += Rat(E.a[1]) * w[i];
            if (w2[i] != 0) next[i] += Rat(E.a[2]) * w2[i];
            if (i + 1 < len && w2[i] != 0) next[i + 1] += Rat(E.a[3]) * w2[i];
            if (w3[i] != 0) next[i] += Rat(E.a[4]) * w3[i];
        }
        w = next;
    }
    // x = z/w, y = -1/w; with w = z^3 W, W(0)=1:
    // x = z^-2 / W, y = -z^-3 / W
    std::vector<Rat> W(len, Rat(0));
    for (long i = 0; i + 3 < len; ++i) W[i] = w[i + 3];
    // X := 1/W
    std::vector<Rat> X(len, Rat(0));
    X[0] = 1;
    for (long n = 1; n < len; ++n) {
        Rat s = 0;
        for (long i = 1; i <= n; ++i) s += W[i] * X[n - i];
        X[n] = -s;
    }
    // lambda'(z) = (dx/dz) / (2y + a1 x + a3)
    //   dx/dz   = z^-3 (-2 X + z X')
    //   denom   = z^-3 (-2 X + a1 z X + a3 z^3)
    std::vector<Rat> num(len, Rat(0)), den(len, Rat(0));
    for (long i = 0; i < len; ++i) {
        num[i] += Rat(-2) * X[i];
        if (i >= 1) num[i] += Rat(i) * X[i]; // z X' has coefficient i*X_i at z^i
        den[i] += Rat(-2) * X[i];
        if (i >= 1) den[i] += Rat(E.a[0]) * X[i - 1];
        if (i >= 3) den[i] += (i == 3 ? Rat(E.a[2]) : Rat(0));
    }
    // divide num by den (den(0) = -2)
    std::vector<Rat> lp(len, Rat(0));
    for (long n = 0; n < len; ++n) {
        Rat s = num[n];
        for (long i = 1; i <= n; ++i) s -= den[i] * lp[n - i];
        lp[n] = s / den[0];
    }
    lp.resize(terms + 1);
    return lp; // lambda'(z) = sum lp[n] z^n, lp[0] = 1
}

Padic formal_log_at_parameter(const EllipticCurveData& E, const Padic& z) {
    const PadicContext& ctx = z.context();
    if (z.is_zero()) return Padic::zero(ctx);
    if (z.valuation() < 1) throw domain_error("formal parameter must lie in pZp");
    long terms = ctx.precision() + 8;
    auto lp = formal_log_derivative_coefficients(E, terms);
    // lambda(z) = sum lp[n] z^(n+1) / (n+1)
    Padic acc = Padic::zero(ctx);
    Padic zp = z;
    for (long n = 0; n <= terms; ++n) {
        if (lp[n] != 0)
            acc = acc + Padic::from_rational(ctx, lp[n] / Rat(n + 1)) * zp;
        zp = zp * z;
    }
    return acc;
}

PadicPoint point_from_parameter(const EllipticCurveData& E, const Padic& z) {
    const PadicContext& ctx = z.context();
    if (z.is_zero()) return PadicPoint{};
    if (z.valuation() < 1) throw domain_error("formal parameter must lie in pZp");
    long terms = ctx.precision() + 8;
    // w-series, local copy of the recursion
    long len = terms + 6;
    std::vector<Rat> w(len, Rat(0));
    w[3] = 1;
    auto mul = [&](const std::vector<Rat>& f, const std::vector<Rat>& g) {
        std::vector<Rat> h(len, Rat(0));
        for (long i = 0; i < len; ++i) {
            if (f[i] == 0) continue;
            for (long j = 0; i + j < len; ++j) {
                if (g[j] == 0) continue;
                h[i + j] += f[i] * g[j];
            }
        }
        return h;
    };
    for (long it = 0; it < terms + 3; ++it) {
        std::vector<Rat> w2 = mul(w, w);
        std::vector<Rat> w3 = mul(w2, w);
        std::vector<Rat> next(len, Rat(0));
        next[3] = 1;
        for (long i = 0; i < len; ++i) {
            if (i + 1 < len && w[i] != 0) next[i + 1] += Rat(E.a[0]) * w[i];
            if (i + 2 < len && w[i] != 0) next[i + 2] += Rat(E.a[1]) * w[i];
            if (w2[i] != 0) next[i] += Rat(E.a[2]) * w2[i];
            if (i + 1 < len && w2[i] != 0) next[i + 1] += Rat(E.a[3]) * w2[i];
            if (w3[i] != 0) next[i] += Rat(E.a[4]) * w3[i];
        }
        w = next;
    }
    Padic wz = Padic::zero(ctx);
    Padic zp = Padic::from_int(ctx, 1);
    for (long i = 0; i < len; ++i) {
        if (w[i] != 0) wz = wz + Padic::from_rational(ctx, w[i]) * zp;
        zp = zp * z;
    }
    PadicPoint P;
    P.infinity = false;
    P.x = z / wz;
    P.y = -wz.inverse();
    return P;
}

FormalLogResult formal_log_of_point(const EllipticCurveData& E, const KPoint& P, long disc,
                                    const PadicContext& ctx, long m_cap) {
    FormalLogResult out;
    if (P.infinity) {
        out.value = Padic::zero(ctx);
        out.multiple = 1;
        out.torsion = true;
        return out;
    }
    KPoint R = P;
    for (long m = 1; m <= m_cap; ++m) {
        if (R.infinity) { // torsion
            out.value = Padic::zero(ctx);
            out.multiple = m;
            out.torsion = true;
            return out;
        }
        PadicPoint loc = localize_point(R, disc, ctx);
        if (!loc.x.is_zero() && loc.x.valuation() <= -2) {
            Padic z = -(loc.x / loc.y);
            out.value = formal_log_at_parameter(E, z).div_int(m);
            out.multiple = m;
            out.torsion = false;
            return out;
        }
        R = k_add(E, R, P, disc);
    }
    throw domain_error("no multiple landed in the kernel of reduction within the cap");
}

PgzValue pgz_value(const EllipticCurveData& E, const KPoint& P, long disc,
                   const PadicContext& ctx) {
    PgzValue out;
    FormalLogResult fl = formal_log_of_point(E, P, disc, ctx);
    out.log_value = fl.value;
    out.multiple = fl.multiple;
    out.torsion = fl.torsion;
    Padic factor = Padic::from_int(ctx, 1) - Padic::from_int(ctx, ctx.prime()).inverse();
    out.value = factor * fl.value;
    out.label = "anticyclotomic value at the norm character (rank-zero route)";
    return out;
}

bool HypothesisReport::all_machine_checks_pass() const {
    for (const auto& c : items)
        if (c.checked && !c.pass) return false;
    return true;
}

std::string HypothesisReport::text() const {
    std::ostringstream os;
    for (const auto& c : items) {
        os << "  [" << (c.checked ? (c.pass ? "PASS" : "FAIL") : "----") << "] " << c.name;
        if (!c.note.empty()) os << " (" << c.note << ")";
        os << "\n";
    }
    return os.str();
}

HypothesisReport check_hypotheses(const EllipticCurveData& E, long disc, long p) {
    HypothesisReport r;
    auto push = [&](std::string name, bool pass, std::string note = "", bool checked = true) {
        r.items.push_back({std::move(name), checked, pass, std::move(note)});
    };
    push("p >= 5", p >= 5);
    bool p_exact = (E.conductor % p == 0) && ((E.conductor / p) % p != 0);
    push("p divides the conductor exactly once", p_exact);
    long ap = 0;
    bool split_mult = false;
    if (E.discriminant() % p == 0) {
        ap = trace_of_frobenius(E, p);
        split_mult = (ap == 1);
    }
    push("split multiplicative at p (a_p = +1)", split_mult,
         "a_p = " + std::to_string(ap));
    bool fund = is_fundamental_discriminant(disc) && disc < -4;
    push("fundamental discriminant with trivial extra units", fund);
    bool splits = kronecker_symbol(Int(disc), Int(p)) == 1;
    push("p splits in K", splits);
    long h = 0;
    bool hh = false, pnh = false;
    if (fund) {
        ImagQuadField K(disc);
        h = K.class_number();
        pnh = (h % p != 0);
        long N = E.conductor / p;
        try {
            hh = heegner_hypothesis(K, N).holds;
        } catch (const precondition_error&) {
            hh = false;
        }
    }
    push("every prime dividing N splits in K", hh);
    push("p does not divide the class number", pnh, "h = " + std::to_string(h));
    push("residual representation absolutely irreducible", false, "not machine-checked", false);
    push("residual representation ramified at primes dividing (D,N)", false,
         "not machine-checked", false);
    return r;
}

} // namespace ezheeg
