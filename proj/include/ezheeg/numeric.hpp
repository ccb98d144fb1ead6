#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace ezheeg {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct precision_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// thrown when a residue has no square root mod p (inert prime)
struct nonsplit_error : domain_error {
    using domain_error::domain_error;
};

inline Int pow_int(Int base, long e) {
    Int r = 1;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// valuation of n at p; n != 0
inline int valuation_int(Int n, long p) {
    if (n == 0) throw domain_error("valuation of zero");
    int v = 0;
    while (n % p == 0) { n /= p; ++v; }
    return v;
}

inline Int mod_reduce(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

// inverse of a mod p^k (a a unit); uses u^(phi-1)
inline Int mod_inverse(const Int& a, long p, const Int& pk) {
    Int phi = pk - pk / p;
    return boost::multiprecision::powm(mod_reduce(a, pk), phi - 1, pk);
}

inline long kronecker_symbol(Int a, Int n);

// Kronecker symbol (a|n), n can be negative or even
inline long kronecker_symbol(Int a, Int n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    long result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) result = -result;
    }
    // pull out factors of 2 from n
    if (n % 2 == 0) {
        if (a % 2 == 0) return 0;
        static const int tab2[8] = {0, 1, 0, -1, 0, -1, 0, 1}; // (2|a) by a mod 8
        while (n % 2 == 0) {
            n /= 2;
            result *= tab2[static_cast<int>(mod_reduce(a, 8))];
        }
    }
    a = mod_reduce(a, n);
    // Jacobi on odd n
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            long nm8 = static_cast<long>(n % 8);
            if (nm8 == 3 || nm8 == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a = a % n;
    }
    return (n == 1) ? result : 0;
}

// cpp_rational rejects negative denominators; normalize the sign first
inline Rat make_rat(Int num, Int den) {
    if (den == 0) throw domain_error("zero denominator");
    if (den < 0) { num = -num; den = -den; }
    return Rat(num, den);
}

inline std::string rat_to_string(const Rat& r) {
    std::string s = boost::multiprecision::numerator(r).str();
    if (boost::multiprecision::denominator(r) != 1)
        s += "/" + boost::multiprecision::denominator(r).str();
    return s;
}

inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    return make_rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

} // namespace ezheeg
