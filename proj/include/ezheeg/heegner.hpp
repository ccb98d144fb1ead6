#pragma once

#include "ezheeg/curve.hpp"
#include "ezheeg/padic.hpp"
#include "ezheeg/quadfield.hpp"

#include <string>
#include <vector>

namespace ezheeg {

// element a + b sqrt(disc) of K, exact
struct QuadRatNum {
    Rat a, b;
};

QuadRatNum qr_add(const QuadRatNum& u, const QuadRatNum& v);
QuadRatNum qr_sub(const QuadRatNum& u, const QuadRatNum& v);
QuadRatNum qr_mul(const QuadRatNum& u, const QuadRatNum& v, long disc);
QuadRatNum qr_div(const QuadRatNum& u, const QuadRatNum& v, long disc);

struct KPoint {
    bool infinity = true;
    QuadRatNum x{}, y{};
};

struct HeegnerPointData {
    std::string curve_label;
    long disc = 0;
    QuadRatNum x, y;
    std::string provenance;
};

bool on_curve_exact(const EllipticCurveData& E, const KPoint& P, long disc);
KPoint k_negate(const EllipticCurveData& E, const KPoint& P);
KPoint k_add(const EllipticCurveData& E, const KPoint& P, const KPoint& Q, long disc);
KPoint k_multiple(const EllipticCurveData& E, const KPoint& P, long n, long disc);

struct PadicPoint {
    bool infinity = true;
    Padic x, y;
};

// substitute the canonical root of disc for sqrt(disc) in the coordinates
PadicPoint localize_point(const KPoint& P, long disc, const PadicContext& ctx);
// conjugate embedding (the other root)
PadicPoint localize_point_conjugate(const KPoint& P, long disc, const PadicContext& ctx);
// residual of the curve equation at a p-adic point (tracked zero when exact)
Padic curve_equation_residual(const EllipticCurveData& E, const PadicPoint& P);
// group law over Q_p, for localization spot checks
PadicPoint padic_add(const EllipticCurveData& E, const PadicPoint& P, const PadicPoint& Q);

// lambda'(z) coefficients of the formal-group logarithm for the invariant
// differential dx/(2y + a1 x + a3), z = -x/y
std::vector<Rat> formal_log_derivative_coefficients(const EllipticCurveData& E, long terms);

// lambda(z) for z in pZp
Padic formal_log_at_parameter(const EllipticCurveData& E, const Padic& z);

// kernel-of-reduction point with parameter z, from the w-series
PadicPoint point_from_parameter(const EllipticCurveData& E, const Padic& z);

struct FormalLogResult {
    Padic value;
    long multiple = 0;  // the m with mP in the formal group
    bool torsion = false;
};

// log of a K-rational point: finds m with mP in the kernel of reduction by
// exact multiples, evaluates lambda(-x/y)/m
FormalLogResult formal_log_of_point(const EllipticCurveData& E, const KPoint& P, long disc,
                                    const PadicContext& ctx, long m_cap = 2000);

struct PgzValue {
    Padic value;             // (1 - 1/p) * log of the localized point
    Padic log_value;         // the bare formal log
    long multiple = 0;
    bool torsion = false;
    std::string label;       // names the quantity this realizes
};

PgzValue pgz_value(const EllipticCurveData& E, const KPoint& P, long disc,
                   const PadicContext& ctx);

struct HypothesisCheck {
    std::string name;
    bool checked = true;  // false: surfaced but not machine-checkable
    bool pass = false;
    std::string note;
};

struct HypothesisReport {
    std::vector<HypothesisCheck> items;
    bool all_machine_checks_pass() const;
    std::string text() const;
};

HypothesisReport check_hypotheses(const EllipticCurveData& E, long disc, long p);

} // namespace ezheeg
