#pragma once

#include "ezheeg/heegner.hpp"
#include "ezheeg/linvariants.hpp"
#include "ezheeg/twovar.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ezheeg {

enum class PrimeArm { p, p_bar };

// scalar inputs of the derivative harness; all genuinely computed upstream
struct EZInput {
    const PadicContext* ctx = nullptr;
    int jet_order = 3;
    int tower_trunc = 6;      // T-truncation for the model tower class
    int w = -1;               // sign of the tower class under conjugation
    long h = 1;
    Padic L_f;                // log(q_E)/ord(q_E)
    Padic L_chi;              // log(varpi)/ord(varpi)
    Padic log_varpi;          // log(varpi)
    Padic lambda;             // (1 - 1/p) * log of the localized point
    std::string curve_label;
    long disc = 0;

    const PadicContext& context() const;
    // a_p(k) jet: 1 - (L_f/2)(k-2); the constant term is exactly 1
    TwoVarSeries ap_jet() const;
    // log of the Frobenius valuation symbol, pinned by the Tate period branch
    Padic frobenius_direction() const { return -L_f; }
};

EZInput assemble_ez_input(const LInvariantReport& linv, const PgzValue& pgz, int w,
                          int jet_order = 3);

// raw character jet exp((k-2)/2 * log(p/varpi) - t * log(varpi)); the concrete
// two-variable realization of the critical-twist character on Frobenius
TwoVarSeries frobenius_character_jet(const SplitPrimeData& sp, const PadicContext& ctx,
                                     int deg);

// interpolation multiplier 1 - Phi_arm / a_p(k); vanishes exactly at the
// center (2,0). The exponent carries the unit direction (log varpi)/h and the
// valuation direction resolved through the Tate-period branch.
TwoVarSeries exceptional_factor(const EZInput& in, PrimeArm arm);
// the same multiplier without the valuation-direction resolution (the form
// used for the direct weight-derivative bracket)
TwoVarSeries exceptional_factor_unresolved(const EZInput& in, PrimeArm arm);

// one-variable factor 1 - a_p(k)/(p * Phi(k,0)); equals 1 - 1/p at k = 2
TwoVarSeries improved_factor(const EZInput& in);

struct AssembledL {
    TwoVarSeries L_frak_p;     // multiplier * core on the p arm
    TwoVarSeries L_frak_pbar;  // conjugate arm, transported by the sign w
    TwoVarSeries L_p;          // L_frak_p(k,t) - w * L_frak_pbar(k, k-2-t)
    TwoVarSeries tower_log;    // Psi(k, s), s = t - (k-2)/2; Psi = E*L/M
};

// builds the three series from a core jet with core(2,0) = lambda and
// verifies that L_p vanishes on the line t = (k-2)/2 at truncation
AssembledL assemble_Lp(const EZInput& in, const TwoVarSeries& L_core);

struct EZIdentity {
    std::string name;
    std::string lhs, rhs;
    int agreement = 0;   // digits
    int required = 0;
    bool pass = false;
};

struct EZReport {
    long p = 0;
    int precision = 0;
    int jet_order = 3;
    int w = -1;
    std::string curve_label;
    long disc = 0;
    bool degenerate = false;          // w = +1 short-circuit
    std::vector<EZIdentity> identities;
    Padic extracted_LfK;              // from the weight-derivative bracket
    Padic solved_log_Z0prime;         // from the t-derivative route
    Padic log_eta_note;               // scalar linking the t-coordinate
    bool all_pass() const;
    std::string text() const;
    std::string json() const;
};

EZReport ez_verify(const EZInput& in);

} // namespace ezheeg
