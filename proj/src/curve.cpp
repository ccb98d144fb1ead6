#include "ezheeg/curve.hpp"

namespace ezheeg {

namespace {

long mod_l(long x, long l) {
    long r = x % l;
    return r < 0 ? r + l : r;
}

// Legendre symbol for odd prime l
long legendre(long a, long l) {
    a = mod_l(a, l);
    if (a == 0) return 0;
    long r = 1, base = a, e = (l - 1) / 2, m = l;
    long acc = 1;
    base = mod_l(base, m);
    while (e) {
        if (e & 1) acc = acc * base % m;
        base = base * base % m;
        e >>= 1;
    }
    r = acc == 1 ? 1 : -1;
    return r;
}

bool on_curve_mod(const EllipticCurveData& E, long x, long y, long l) {
    long lhs = mod_l(y * y + E.a[0] * x * y + E.a[2] * y, l);
    long rhs = mod_l(((x + E.a[1]) * x + E.a[3]) * x + E.a[4], l);
    return lhs == rhs;
}

bool singular_point_mod(const EllipticCurveData& E, long x, long y, long l) {
    // partial derivatives of y^2 + a1 xy + a3 y - x^3 - a2 x^2 - a4 x - a6
    long fy = mod_l(2 * y + E.a[0] * x + E.a[2], l);
    long fx = mod_l(E.a[0] * y - (3 * x * x + 2 * E.a[1] * x + E.a[3]), l);
    return fy == 0 && fx == 0;
}

} // namespace

Int EllipticCurveData::discriminant() const {
    Int B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
    return -B2 * B2 * B8 - 8 * B4 * B4 * B4 - 27 * B6 * B6 + 9 * B2 * B4 * B6;
}

Rat EllipticCurveData::j_invariant() const {
    Int C4 = c4();
    Int num = C4 * C4 * C4;
    return make_rat(num, discriminant());
}

long trace_of_frobenius(const EllipticCurveData& E, long ell) {
    bool bad = (E.discriminant() % ell == 0);
    if (!bad && ell >= 5) {
        // complete the square: y'^2 = x^3 + (b2/4)x^2 + (b4/2)x + b6/4, count
        // via the quadratic character; 4 is invertible mod ell
        long inv4 = 0;
        for (long t = 1; t < ell; ++t)
            if (mod_l(4 * t, ell) == 1) { inv4 = t; break; }
        long B2 = mod_l(E.b2(), ell), B4 = mod_l(E.b4(), ell), B6 = mod_l(E.b6(), ell);
        long sum = 0;
        for (long x = 0; x < ell; ++x) {
            long f = mod_l(4 * x * x * x + B2 * x * x + 2 * B4 * x + B6, ell);
            sum += legendre(mod_l(f * inv4, ell), ell);
        }
        return -sum;
    }
    // direct enumeration; at bad ell count nonsingular points only
    long count = 1; // point at infinity
    for (long x = 0; x < ell; ++x)
        for (long y = 0; y < ell; ++y)
            if (on_curve_mod(E, x, y, ell)) {
                if (bad && singular_point_mod(E, x, y, ell)) continue;
                ++count;
            }
    if (!bad) return ell + 1 - count;
    return ell - count; // 1 split, -1 nonsplit, 0 additive
}

ReductionType reduction_type(const EllipticCurveData& E, long ell) {
    if (E.discriminant() % ell != 0) return ReductionType::good;
    long a = trace_of_frobenius(E, ell);
    if (a == 1) return ReductionType::split_multiplicative;
    if (a == -1) return ReductionType::nonsplit_multiplicative;
    return ReductionType::additive;
}

std::vector<Int> an_from_curve(const EllipticCurveData& E, long bound) {
    if (bound < 1) throw domain_error("coefficient bound must be >= 1");
    Int disc = E.discriminant();
    if (disc == 0) throw domain_error("singular Weierstrass data");
    std::vector<Int> a(bound + 1, Int(0));
    a[1] = 1;
    for (long l = 2; l <= bound; ++l) {
        bool isprime = true;
        for (long d = 2; d * d <= l; ++d)
            if (l % d == 0) { isprime = false; break; }
        if (!isprime) continue;
        long al = trace_of_frobenius(E, l);
        bool bad = (disc % l == 0);
        // prime powers
        std::vector<Int> apow;
        apow.push_back(1);
        apow.push_back(al);
        for (long q = l * l; q <= bound; q *= l) {
            if (bad) apow.push_back(apow.back() * al);
            else apow.push_back(Int(al) * apow[apow.size() - 1] - Int(l) * apow[apow.size() - 2]);
            if (q > bound / l) break;
        }
        long q = l;
        for (size_t r = 1; q <= bound; ++r) {
            a[q] = apow[r];
            if (q > bound / l) break;
            q *= l;
        }
    }
    // multiplicativity
    for (long n = 2; n <= bound; ++n) {
        if (a[n] != 0) continue;
        // find prime power factor
        long l = 2;
        while (n % l != 0) ++l;
        long q = 1;
        long m = n;
        while (m % l == 0) { m /= l; q *= l; }
        if (m == 1) continue; // prime power already set (possibly legitimately 0)
        a[n] = a[q] * a[m];
    }
    return a;
}

} // namespace ezheeg
