#pragma once

#include "ezheeg/numeric.hpp"

#include <array>
#include <string>
#include <vector>

namespace ezheeg {

enum class ReductionType { good, split_multiplicative, nonsplit_multiplicative, additive };

struct EllipticCurveData {
    std::string label;
    std::array<long, 5> a{};   // a1, a2, a3, a4, a6 of a (global minimal) model
    long conductor = 0;
    long p = 0;                // working prime attached in the catalog

    long b2() const { return a[0] * a[0] + 4 * a[1]; }
    long b4() const { return 2 * a[3] + a[0] * a[2]; }
    long b6() const { return a[2] * a[2] + 4 * a[4]; }
    long b8() const {
        return a[0] * a[0] * a[4] + 4 * a[1] * a[4] - a[0] * a[2] * a[3] +
               a[1] * a[2] * a[2] - a[3] * a[3];
    }
    long c4() const { return b2() * b2() - 24 * b4(); }
    long c6() const { return -b2() * b2() * b2() + 36 * b2() * b4() - 216 * b6(); }
    Int discriminant() const;
    Rat j_invariant() const;
};

// #E^ns(F_l) by direct counting; trace a_l = l + 1 - #E(F_l) at good l,
// a_l = l - #E^ns(F_l) in {1,-1,0} at bad l
long trace_of_frobenius(const EllipticCurveData& E, long ell);
ReductionType reduction_type(const EllipticCurveData& E, long ell);

// Hecke coefficients a_1..a_bound, extended multiplicatively with
// a_{l^{r+1}} = a_l a_{l^r} - l a_{l^{r-1}} at good l and a_{l^r} = a_l^r at bad l
std::vector<Int> an_from_curve(const EllipticCurveData& E, long bound);

} // namespace ezheeg
