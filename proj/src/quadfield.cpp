#include "ezheeg/quadfield.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ezheeg {

namespace {

bool squarefree(long n) {
    for (long d = 2; d * d <= n; ++d)
        if (n % (d * d) == 0) return false;
    return true;
}

// trace and norm of omega, the standard module generator:
// odd disc: omega = (1+sqrt(disc))/2; even disc: omega = sqrt(disc)/2
long omega_trace(long disc) { return (disc % 2 != 0) ? 1 : 0; }
Int omega_norm(long disc) {
    return (disc % 2 != 0) ? Int(1 - disc) / 4 : Int(-disc) / 4;
}

struct Ideal {
    Int A;       // Z-part
    Int w;       // second basis vector w + omega
    Int content; // overall integer factor
};

long delta_parity(long disc) { return (disc % 2 != 0) ? 1 : 0; }

Ideal form_to_ideal(const QuadForm& f, long disc) {
    Int w0 = Int(-f.b - delta_parity(disc)) / 2;
    return {Int(f.a), mod_reduce(w0, Int(f.a)), Int(1)};
}

QuadForm ideal_to_form(const Ideal& I, long disc) {
    long a = static_cast<long>(I.A);
    long b = static_cast<long>(Int(-2) * I.w - delta_parity(disc));
    Int c4 = (Int(b) * b - disc);
    if (c4 % (4 * I.A) != 0) throw domain_error("module is not an ideal of O_K");
    long c = static_cast<long>(c4 / (4 * I.A));
    return reduce_form({a, b, c});
}

// element u + v*omega
struct Elt { Int u, v; };

Elt mul_elt(const Elt& x, const Elt& y, long disc) {
    // omega^2 = tr*omega - N
    Int tr = omega_trace(disc), N = omega_norm(disc);
    Int u = x.u * y.u - x.v * y.v * N;
    Int v = x.u * y.v + x.v * y.u + x.v * y.v * tr;
    return {u, v};
}

Int norm_elt(const Elt& x, long disc) {
    Int tr = omega_trace(disc), N = omega_norm(disc);
    return x.u * x.u + x.u * x.v * tr + x.v * x.v * N;
}

// Hermite basis of the Z-span of the given elements: returns (A, w, d) with
// module = d * (A/d Z + (w/d + omega) Z); for O_K-ideals d divides everything.
Ideal span_to_ideal(std::vector<Elt> gens) {
    // d = gcd of omega-parts with Bezout combination
    Int d = 0;
    Elt comb{0, 0};
    for (const auto& g : gens) {
        if (g.v == 0) continue;
        if (d == 0) { d = boost::multiprecision::abs(g.v); comb = g; if (g.v < 0) { comb.u = -comb.u; comb.v = -comb.v; } continue; }
        Int x, y, gNew;
        // extended gcd(d, g.v)
        Int a = d, b = g.v, x0 = 1, x1 = 0, y0 = 0, y1 = 1;
        while (b != 0) {
            Int q = a / b, r = a % b;
            a = b; b = r;
            Int nx = x0 - q * x1; x0 = x1; x1 = nx;
            Int ny = y0 - q * y1; y0 = y1; y1 = ny;
        }
        gNew = a; x = x0; y = y0;
        if (gNew < 0) { gNew = -gNew; x = -x; y = -y; }
        // gNew = x*d + y*g.v
        Elt nc{x * comb.u + y * g.u, gNew};
        d = gNew;
        comb = nc;
    }
    if (d == 0) throw domain_error("degenerate ideal span");
    // A = gcd of the pure-integer residues
    Int A = 0;
    for (const auto& g : gens) {
        Int k = g.v / d;
        Int res = g.u - k * comb.u;
        A = boost::multiprecision::gcd(A, boost::multiprecision::abs(res));
    }
    if (A == 0) throw domain_error("degenerate ideal span");
    Int w = mod_reduce(comb.u, A);
    // extract content
    Int c = boost::multiprecision::gcd(A, d);
    c = boost::multiprecision::gcd(c, w);
    // for an O_K-ideal the omega-coefficient gcd d equals the content
    if (d % c != 0 || A % d != 0) c = boost::multiprecision::gcd(c, d);
    return {A / d, mod_reduce(w / d, A / d), d};
}

Ideal mul_ideal(const Ideal& I, const Ideal& J, long disc) {
    Elt e1{I.A * J.A, 0};
    Elt e2 = mul_elt({I.A, 0}, {J.w, 1}, disc);
    Elt e3 = mul_elt({I.w, 1}, {J.A, 0}, disc);
    Elt e4 = mul_elt({I.w, 1}, {J.w, 1}, disc);
    Ideal P = span_to_ideal({e1, e2, e3, e4});
    P.content *= I.content * J.content;
    return P;
}

} // namespace

bool is_fundamental_discriminant(long disc) {
    if (disc >= 0) return false;
    long m = ((disc % 4) + 4) % 4;
    if (m == 1) return squarefree(-disc);
    if (m == 0) {
        long q = disc / 4;
        long qm = ((q % 4) + 4) % 4;
        return (qm == 2 || qm == 3) && squarefree(-q);
    }
    return false;
}

long form_discriminant(const QuadForm& f) { return f.b * f.b - 4 * f.a * f.c; }

bool is_reduced(const QuadForm& f) {
    if (!(std::abs(f.b) <= f.a && f.a <= f.c)) return false;
    if ((std::abs(f.b) == f.a || f.a == f.c) && f.b < 0) return false;
    return true;
}

QuadForm reduce_form(QuadForm f) {
    long disc = form_discriminant(f);
    if (disc >= 0 || f.a <= 0) throw domain_error("form is not positive definite");
    for (int iter = 0; iter < 4096; ++iter) {
        // normalize: -a < b <= a
        if (!(-f.a < f.b && f.b <= f.a)) {
            long r = f.b % (2 * f.a);
            if (r > f.a) r -= 2 * f.a;
            if (r <= -f.a) r += 2 * f.a;
            long c = static_cast<long>((Int(r) * r - disc) / (4 * f.a));
            f = {f.a, r, c};
        }
        if (f.a > f.c) {
            f = {f.c, -f.b, f.a};
            continue;
        }
        if ((f.a == f.c || f.a == f.b || f.a == -f.b) && f.b < 0) f.b = -f.b;
        if (is_reduced(f)) return f;
    }
    throw domain_error("form reduction did not terminate");
}

ImagQuadField::ImagQuadField(long disc) : disc_(disc) {
    if (!is_fundamental_discriminant(disc))
        throw domain_error("discriminant is not fundamental");
    if (disc >= -4)
        throw domain_error("extra units: fields of discriminant -3 and -4 are not supported");
    long D = -disc;
    long amax = static_cast<long>(std::sqrt(static_cast<double>(D) / 3.0)) + 1;
    for (long a = 1; a <= amax; ++a) {
        for (long b = -a + 1; b <= a; ++b) {
            if (((b * b - disc) % (4 * a)) != 0) continue;
            long c = (b * b - disc) / (4 * a);
            if (c < a) continue;
            if ((std::abs(b) == a || a == c) && b < 0) continue;
            if (std::gcd(std::gcd(a, b), c) != 1) continue;
            classes_.push_back({a, b, c});
        }
    }
    std::sort(classes_.begin(), classes_.end(), [](const QuadForm& f, const QuadForm& g) {
        return std::tie(f.a, f.b, f.c) < std::tie(g.a, g.b, g.c);
    });
}

QuadForm ImagQuadField::principal_form() const {
    long delta = delta_parity(disc_);
    return {1, delta, static_cast<long>((delta - disc_) / 4)};
}

QuadForm compose_forms(const QuadForm& f, const QuadForm& g, long disc) {
    Ideal P = mul_ideal(form_to_ideal(f, disc), form_to_ideal(g, disc), disc);
    return ideal_to_form(P, disc);
}

QuadForm form_inverse(const QuadForm& f) { return reduce_form({f.a, -f.b, f.c}); }

QuadForm form_power(QuadForm f, long e, long disc) {
    if (e < 0) return form_power(form_inverse(f), -e, disc);
    QuadForm r = reduce_form({1, delta_parity(disc), static_cast<long>((delta_parity(disc) - disc) / 4)});
    QuadForm b = reduce_form(f);
    while (e > 0) {
        if (e & 1) r = compose_forms(r, b, disc);
        b = compose_forms(b, b, disc);
        e >>= 1;
    }
    return r;
}

long class_number_bruteforce(long disc) {
    long D = -disc, count = 0;
    for (long a = 1; 3 * a * a <= D; ++a)
        for (long b = -a; b <= a; ++b) {
            long num = b * b - disc;
            if (num % (4 * a) != 0) continue;
            long c = num / (4 * a);
            if (a > c) continue;
            if (b < 0 && (b == -a || a == c)) continue;
            if (std::gcd(std::gcd(a, b), c) != 1) continue;
            ++count;
        }
    return count;
}

namespace {

// generator of the h-th power of an ideal, assuming that power is principal;
// returned in (x + y sqrt(disc))/2 coordinates
QuadElementXY power_generator(Ideal I, long h, long disc) {
    Ideal P{1, 0, 1};
    for (long i = 0; i < h; ++i) P = mul_ideal(P, I, disc);
    // generator alpha = content * (u + v omega) with Norm(u+v omega) = P.A
    Int target = P.A;
    Int D = Int(-disc);
    // (2u + v tr)^2 + D v^2 = 4 target
    Int vmax = boost::multiprecision::sqrt(Int(4 * target / D)) + 1;
    for (Int v = 0; v <= vmax; ++v) {
        Int rhs = 4 * target - D * v * v;
        if (rhs < 0) break;
        Int s = boost::multiprecision::sqrt(rhs);
        while (s * s > rhs) --s;
        while ((s + 1) * (s + 1) <= rhs) ++s;
        if (s * s != rhs) continue;
        for (int sign = 0; sign < 2; ++sign) {
            Int x = (sign == 0) ? s : -s; // x = 2u + v tr
            Int two_u = x - v * omega_trace(disc);
            if (two_u % 2 != 0) continue;
            Elt cand{two_u / 2, v};
            if (norm_elt(cand, disc) != target) continue;
            // membership in [A, w + omega]: u = v*w mod A
            if (mod_reduce(cand.u - cand.v * P.w, P.A) != 0) continue;
            Int X = 2 * cand.u + cand.v * omega_trace(disc);
            Int Y = cand.v;
            X *= P.content;
            Y *= P.content;
            return {X, Y};
        }
    }
    throw domain_error("no generator found: the ideal power is not principal");
}

} // namespace

QuadElementXY class_power_generator(const ImagQuadField& K, const QuadForm& f) {
    long disc = K.disc();
    return power_generator(form_to_ideal(reduce_form(f), disc), K.class_number(), disc);
}

SplitPrimeData split_prime(const ImagQuadField& K, long p, const PadicContext& ctx) {
    if (ctx.prime() != p) throw domain_error("context prime mismatch");
    long disc = K.disc();
    if (kronecker_symbol(Int(disc), Int(p)) != 1)
        throw nonsplit_error("p does not split in K");
    long h = K.class_number();
    if (h % p == 0) throw domain_error("p divides the class number");

    // minimal-|x| solution of x^2 + |disc| y^2 = 4 p^h with p-primitivity
    Int D = Int(-disc);
    Int fourN = 4 * pow_int(Int(p), h);
    std::optional<QuadElementXY> best;
    Int ymax = boost::multiprecision::sqrt(Int(fourN / D)) + 1;
    for (Int y = 1; y <= ymax; ++y) {
        Int rhs = fourN - D * y * y;
        if (rhs < 0) break;
        Int x = boost::multiprecision::sqrt(rhs);
        while (x * x > rhs) --x;
        while ((x + 1) * (x + 1) <= rhs) ++x;
        if (x * x != rhs) continue;
        // parity: x = y mod 2 for odd disc, x even for even disc
        if (disc % 2 != 0) { if ((x - y) % 2 != 0) continue; }
        else if (x % 2 != 0) continue;
        if (x % p == 0 && y % p == 0) continue; // imprimitive: both primes divide
        if (!best || boost::multiprecision::abs(x) < boost::multiprecision::abs(best->x))
            best = QuadElementXY{x, y};
    }
    if (!best) throw domain_error("norm equation has no solution; p inert or data invalid");

    SplitPrimeData sp;
    sp.p = p;
    sp.h = h;
    sp.disc = disc;
    sp.sqrt_disc = hensel_sqrt(Padic::from_int(ctx, disc));
    auto embed = [&](const Int& x, const Int& y) {
        Padic num = Padic::from_int(ctx, x) + Padic::from_int(ctx, y) * sp.sqrt_disc;
        return num / Padic::from_int(ctx, 2);
    };
    Padic plus = embed(best->x, best->y);
    if (!plus.is_zero() && plus.valuation() == h) {
        sp.pi = *best;
    } else {
        sp.pi = {best->x, -best->y};
    }
    sp.pi_image = embed(sp.pi.x, sp.pi.y);
    sp.pi_bar_image = embed(sp.pi.x, -sp.pi.y);
    if (sp.pi_image.is_zero() || sp.pi_image.valuation() != h)
        throw domain_error("embedding did not separate the primes above p");
    sp.varpi = sp.pi_image / sp.pi_bar_image;
    if (sp.varpi.valuation() != h)
        throw domain_error("varpi has unexpected valuation");
    return sp;
}

HeegnerWitness heegner_hypothesis(const ImagQuadField& K, long N) {
    if (N < 1) throw domain_error("level must be positive");
    if (!squarefree(N)) throw precondition_error("level must be squarefree here");
    HeegnerWitness w;
    w.N = N;
    w.holds = true;
    long disc = K.disc();
    long n = N;
    for (long l = 2; l * l <= n || n > 1; ++l) {
        long q = (l * l <= n) ? l : n;
        if (n % q != 0) continue;
        n /= q;
        if (kronecker_symbol(Int(disc), Int(q)) != 1) {
            w.holds = false;
            w.failing_primes.push_back(q);
            continue;
        }
        // prime ideal above q as a form (q, b, c) with b^2 = disc mod 4q
        long b = -1;
        for (long t = 0; t < 2 * q; ++t) {
            if (((Int(t) * t - disc) % (4 * q)) == 0) { b = t; break; }
        }
        if (b < 0) { w.holds = false; w.failing_primes.push_back(q); continue; }
        long c = static_cast<long>((Int(b) * b - disc) / (4 * q));
        w.primes_above.push_back({q, b, c});
    }
    return w;
}

namespace {
Padic ratio_to_conjugate(const QuadElementXY& g, long disc, const PadicContext& ctx) {
    Padic s = hensel_sqrt(Padic::from_int(ctx, disc));
    Padic two = Padic::from_int(ctx, 2);
    Padic a = (Padic::from_int(ctx, g.x) + Padic::from_int(ctx, g.y) * s) / two;
    Padic abar = (Padic::from_int(ctx, g.x) - Padic::from_int(ctx, g.y) * s) / two;
    return a / abar;
}
} // namespace

Padic phi_o_value(const ImagQuadField& K, const QuadForm& cls, const PadicContext& ctx) {
    return ratio_to_conjugate(class_power_generator(K, cls), K.disc(), ctx);
}

Padic phi_o_product_value(const ImagQuadField& K, const QuadForm& A, const QuadForm& B,
                          const PadicContext& ctx) {
    long disc = K.disc();
    Ideal I = mul_ideal(form_to_ideal(reduce_form(A), disc), form_to_ideal(reduce_form(B), disc),
                        disc);
    QuadElementXY g = power_generator(I, K.class_number(), disc);
    return ratio_to_conjugate(g, disc, ctx);
}

} // namespace ezheeg
