#pragma once

#include "ezheeg/padic.hpp"

#include <vector>

namespace ezheeg {

// truncated bivariate power series in (x, t) = (k - 2, t) with p-adic
// coefficients, kept to total degree <= deg
class TwoVarSeries {
public:
    TwoVarSeries(const PadicContext& ctx, int deg);

    static TwoVarSeries constant(const PadicContext& ctx, int deg, const Padic& c);
    static TwoVarSeries variable_x(const PadicContext& ctx, int deg);
    static TwoVarSeries variable_t(const PadicContext& ctx, int deg);

    int degree() const { return deg_; }
    const PadicContext& context() const { return *ctx_; }

    const Padic& coeff(int i, int j) const; // of x^i t^j
    void set_coeff(int i, int j, const Padic& c);

    TwoVarSeries operator+(const TwoVarSeries& o) const;
    TwoVarSeries operator-(const TwoVarSeries& o) const;
    TwoVarSeries operator*(const TwoVarSeries& o) const;
    TwoVarSeries operator-() const;
    TwoVarSeries scale(const Padic& c) const;

    // multiplicative inverse; constant term must be a unit
    TwoVarSeries reciprocal() const;
    // exp of a series with zero constant term (total degree small vs p)
    TwoVarSeries exp() const;

    Padic value_at_origin() const { return coeff(0, 0); }
    Padic d_dx_at_origin() const { return coeff(1, 0); }
    Padic d_dt_at_origin() const { return coeff(0, 1); }

    // substitute t = a*t' + b*x (new variable t'), exact on jets
    TwoVarSeries substitute_t(const Rat& a, const Rat& b) const;
    // one-variable restriction t = b*x: coefficients of x^i
    std::vector<Padic> restrict_to_line(const Rat& b) const;
    // one-variable restriction t = const
    std::vector<Padic> restrict_t_value(const Padic& t0) const;

    // evaluate at p-adic (x0, t0) with |x0|, |t0| < 1
    Padic evaluate(const Padic& x0, const Padic& t0) const;

    bool is_zero() const;
    int min_precision() const;
    std::string to_string() const;

private:
    const PadicContext* ctx_;
    int deg_;
    std::vector<Padic> c_; // c_[idx(i,j)] for i + j <= deg
    int idx(int i, int j) const;
};

// 1 + c1 x + ... as a weight-direction jet (t-free helper)
TwoVarSeries one_var_jet(const PadicContext& ctx, int deg, const std::vector<Padic>& coeffs);

} // namespace ezheeg
