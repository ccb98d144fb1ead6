#pragma once

#include "ezheeg/curve.hpp"
#include "ezheeg/padic.hpp"
#include "ezheeg/quadfield.hpp"

#include <string>
#include <vector>

namespace ezheeg {

// coefficients of j(q) = 1/q + 744 + 196884 q + ...; entry [i] is the
// coefficient of q^(i-1), generated from E4^3 / Delta
std::vector<Int> j_series_coefficients(long terms);

struct TatePeriod {
    Padic q;               // ord_p(q) = -ord_p(j) >= 1
    long e = 0;            // ord_p(q)
    Rat j;                 // source j-invariant
    int delta = 0;         // digits of q lost against the context precision
    int forward_delta = 0; // digits lost when re-evaluating j at q (conditioning)
    std::string source_label;
};

// invert j(q) = j_E by Newton iteration in p Z_p; needs ord_p(j_E) < 0
TatePeriod tate_period(const Rat& j_E, const PadicContext& ctx,
                       const std::string& source_label = "");

// log_p(q_E) / ord_p(q_E)
Padic l_invariant_f(const TatePeriod& tp);

// log_p(varpi)/h, cross-checked against -2 log_p(pi_bar)/h
Padic l_invariant_chi(const SplitPrimeData& sp);

struct LInvariantReport {
    long p = 0;
    int precision = 0;
    std::string curve_label;
    long disc = 0;
    Padic Lf;     // from the Tate period
    Padic Lchi;   // from the split prime
    Padic LfK;    // difference
    TatePeriod tate;
    SplitPrimeData split;
    // assumptions surfaced in output
    bool manin_constant_assumed_one = true;

    std::string text() const;
    std::string json() const;
};

LInvariantReport l_invariant_fK(const EllipticCurveData& E, const ImagQuadField& K,
                                const PadicContext& ctx);

} // namespace ezheeg
