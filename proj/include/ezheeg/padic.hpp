#pragma once

#include "ezheeg/numeric.hpp"

#include <memory>
#include <vector>

namespace ezheeg {

// Fixed absolute precision p-adic arithmetic. A context pins the prime p >= 5
// and the precision cap M; every value in one computation shares one context.
class PadicContext {
public:
    PadicContext(long p, int precision);

    long prime() const { return p_; }
    int precision() const { return m_; }

    // p^k for 0 <= k <= precision + guard
    const Int& pow(int k) const;
    int max_pow() const { return static_cast<int>(pow_.size()) - 1; }

    // Teichmuller lift of residue a (1 <= a <= p-1), exact mod p^M
    const Int& teichmuller_lift(long a) const;

    bool operator==(const PadicContext& o) const { return p_ == o.p_ && m_ == o.m_; }

private:
    long p_;
    int m_;
    std::vector<Int> pow_;
    std::vector<Int> teich_;
};

// Element of Q_p known modulo p^aprec: x = p^v * u with u a unit stored
// modulo p^(aprec - v), or the tracked zero O(p^aprec). aprec never exceeds
// the context precision; operations propagate honest lower bounds.
class Padic {
public:
    Padic() : ctx_(nullptr), v_(0), aprec_(0), u_(0), zero_(true) {}

    static Padic zero(const PadicContext& ctx, int aprec = -1);
    static Padic from_int(const PadicContext& ctx, const Int& n);
    static Padic from_int(const PadicContext& ctx, long n) { return from_int(ctx, Int(n)); }
    static Padic from_rational(const PadicContext& ctx, const Rat& q);
    // p^v * u with u given mod p^(aprec-v)
    static Padic from_unit(const PadicContext& ctx, int v, const Int& u, int aprec);

    const PadicContext& context() const;
    bool is_zero() const { return zero_; }          // zero at tracked precision
    int precision() const { return aprec_; }        // absolute precision
    int valuation() const;                          // throws on tracked zero
    int valuation_or(int dflt) const { return zero_ ? dflt : v_; }
    const Int& unit() const { return u_; }

    Padic clamp(int aprec) const;                   // forget digits beyond p^aprec

    Padic operator-() const;
    Padic operator+(const Padic& o) const;
    Padic operator-(const Padic& o) const;
    Padic operator*(const Padic& o) const;
    Padic operator/(const Padic& o) const;
    Padic pow(long e) const;
    Padic inverse() const;

    Padic mul_int(const Int& n) const;
    Padic div_int(const Int& n) const;

    // canonical representative of p^-v * x in [0, p^(aprec-v))
    Int lift_unit() const { return u_; }
    // representative of x itself when v >= 0, in [0, p^aprec)
    Int lift() const;

    bool is_unit() const { return !zero_ && v_ == 0; }

    std::string to_string() const;   // digit expansion with explicit O(p^M) tail
    std::string json() const;        // {"p":..,"M":..,"v":..,"digits":[..]}

    // valuation of x - y (returns min precision when indistinguishable)
    friend int agreement(const Padic& x, const Padic& y);
    friend bool same_to(const Padic& x, const Padic& y, int k);

private:
    const PadicContext* ctx_;
    int v_;
    int aprec_;
    Int u_;
    bool zero_;

    void normalize();
    static const PadicContext& common_ctx(const Padic& x, const Padic& y);
};

// Teichmuller character omega(x); x must be a unit
Padic teichmuller(const Padic& x);

// projection to 1-units: <x> = p^-v(x) x / omega(...)
Padic one_unit_part(const Padic& x);

// Iwasawa branch of log_p: log(p) = 0, log(omega) = 0, series on 1-units
Padic iwasawa_log(const Padic& x);

// exp for valuation >= 1 (p >= 5)
Padic padic_exp(const Padic& x);

// square root of a unit square, root congruent to min(r, p-r) mod p
Padic hensel_sqrt(const Padic& a);

} // namespace ezheeg
