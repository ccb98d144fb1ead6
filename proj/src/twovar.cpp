#include "ezheeg/twovar.hpp"

#include <sstream>

namespace ezheeg {

TwoVarSeries::TwoVarSeries(const PadicContext& ctx, int deg) : ctx_(&ctx), deg_(deg) {
    if (deg < 1) throw domain_error("jet order must be at least 1");
    c_.assign((deg + 1) * (deg + 2) / 2, Padic::zero(ctx));
}

int TwoVarSeries::idx(int i, int j) const {
    if (i < 0 || j < 0 || i + j > deg_) throw domain_error("jet coefficient out of range");
    int d = i + j;
    return d * (d + 1) / 2 + j;
}

const Padic& TwoVarSeries::coeff(int i, int j) const { return c_[idx(i, j)]; }
void TwoVarSeries::set_coeff(int i, int j, const Padic& v) { c_[idx(i, j)] = v; }

TwoVarSeries TwoVarSeries::constant(const PadicContext& ctx, int deg, const Padic& v) {
    TwoVarSeries s(ctx, deg);
    s.set_coeff(0, 0, v);
    return s;
}

TwoVarSeries TwoVarSeries::variable_x(const PadicContext& ctx, int deg) {
    TwoVarSeries s(ctx, deg);
    s.set_coeff(1, 0, Padic::from_int(ctx, 1));
    return s;
}

TwoVarSeries TwoVarSeries::variable_t(const PadicContext& ctx, int deg) {
    TwoVarSeries s(ctx, deg);
    s.set_coeff(0, 1, Padic::from_int(ctx, 1));
    return s;
}

TwoVarSeries TwoVarSeries::operator+(const TwoVarSeries& o) const {
    if (deg_ != o.deg_) throw domain_error("jet order mismatch");
    TwoVarSeries s(*ctx_, deg_);
    for (size_t k = 0; k < c_.size(); ++k) s.c_[k] = c_[k] + o.c_[k];
    return s;
}

TwoVarSeries TwoVarSeries::operator-(const TwoVarSeries& o) const {
    if (deg_ != o.deg_) throw domain_error("jet order mismatch");
    TwoVarSeries s(*ctx_, deg_);
    for (size_t k = 0; k < c_.size(); ++k) s.c_[k] = c_[k] - o.c_[k];
    return s;
}

TwoVarSeries TwoVarSeries::operator-() const {
    TwoVarSeries s(*ctx_, deg_);
    for (size_t k = 0; k < c_.size(); ++k) s.c_[k] = -c_[k];
    return s;
}

TwoVarSeries TwoVarSeries::scale(const Padic& v) const {
    TwoVarSeries s(*ctx_, deg_);
    for (size_t k = 0; k < c_.size(); ++k) s.c_[k] = c_[k] * v;
    return s;
}

TwoVarSeries TwoVarSeries::operator*(const TwoVarSeries& o) const {
    if (deg_ != o.deg_) throw domain_error("jet order mismatch");
    TwoVarSeries s(*ctx_, deg_);
    for (int i1 = 0; i1 <= deg_; ++i1)
        for (int j1 = 0; i1 + j1 <= deg_; ++j1) {
            const Padic& a = coeff(i1, j1);
            for (int i2 = 0; i1 + j1 + i2 <= deg_; ++i2)
                for (int j2 = 0; i1 + j1 + i2 + j2 <= deg_; ++j2) {
                    const Padic& b = o.coeff(i2, j2);
                    Padic prod = a * b;
                    s.set_coeff(i1 + i2, j1 + j2, s.coeff(i1 + i2, j1 + j2) + prod);
                }
        }
    return s;
}

TwoVarSeries TwoVarSeries::reciprocal() const {
    Padic c0 = coeff(0, 0);
    if (c0.is_zero())
        throw domain_error("reciprocal needs an invertible constant term");
    // write F = c0 (1 + N), invert by geometric series
    TwoVarSeries N = scale(c0.inverse());
    N.set_coeff(0, 0, Padic::zero(*ctx_));
    TwoVarSeries acc = constant(*ctx_, deg_, Padic::from_int(*ctx_, 1));
    TwoVarSeries pow = constant(*ctx_, deg_, Padic::from_int(*ctx_, 1));
    for (int k = 1; k <= deg_; ++k) {
        pow = pow * N;
        acc = (k % 2 == 1) ? acc - pow : acc + pow;
    }
    return acc.scale(c0.inverse());
}

TwoVarSeries TwoVarSeries::exp() const {
    Padic c0 = coeff(0, 0);
    if (!c0.is_zero())
        throw domain_error("exp of a jet needs zero constant term");
    if (deg_ >= ctx_->prime())
        throw domain_error("jet order must stay below p for exp");
    TwoVarSeries acc = constant(*ctx_, deg_, Padic::from_int(*ctx_, 1));
    TwoVarSeries pow = constant(*ctx_, deg_, Padic::from_int(*ctx_, 1));
    Int fact = 1;
    for (int k = 1; k <= deg_; ++k) {
        pow = pow * (*this);
        fact *= k;
        acc = acc + pow.scale(Padic::from_rational(*ctx_, Rat(1, fact)));
    }
    return acc;
}

TwoVarSeries TwoVarSeries::substitute_t(const Rat& a, const Rat& b) const {
    // t = a t' + b x
    TwoVarSeries out(*ctx_, deg_);
    Padic pa = Padic::from_rational(*ctx_, a);
    Padic pb = Padic::from_rational(*ctx_, b);
    TwoVarSeries tnew = variable_t(*ctx_, deg_).scale(pa) + variable_x(*ctx_, deg_).scale(pb);
    TwoVarSeries xvar = variable_x(*ctx_, deg_);
    // Horner over j for each fixed i
    for (int i = 0; i <= deg_; ++i) {
        // build sum_j coeff(i,j) tnew^j then multiply by x^i
        TwoVarSeries acc(*ctx_, deg_);
        for (int j = deg_ - i; j >= 0; --j) {
            acc = acc * tnew;
            acc = acc + constant(*ctx_, deg_, coeff(i, j));
        }
        TwoVarSeries xi = constant(*ctx_, deg_, Padic::from_int(*ctx_, 1));
        for (int k = 0; k < i; ++k) xi = xi * xvar;
        out = out + acc * xi;
    }
    return out;
}

std::vector<Padic> TwoVarSeries::restrict_to_line(const Rat& b) const {
    Padic pb = Padic::from_rational(*ctx_, b);
    std::vector<Padic> out(deg_ + 1, Padic::zero(*ctx_));
    for (int i = 0; i <= deg_; ++i)
        for (int j = 0; i + j <= deg_; ++j) {
            // x^i (b x)^j contributes to x^(i+j)
            Padic term = coeff(i, j) * pb.pow(j);
            out[i + j] = out[i + j] + term;
        }
    return out;
}

std::vector<Padic> TwoVarSeries::restrict_t_value(const Padic& t0) const {
    std::vector<Padic> out(deg_ + 1, Padic::zero(*ctx_));
    for (int i = 0; i <= deg_; ++i)
        for (int j = 0; i + j <= deg_; ++j) out[i] = out[i] + coeff(i, j) * t0.pow(j);
    return out;
}

Padic TwoVarSeries::evaluate(const Padic& x0, const Padic& t0) const {
    Padic acc = Padic::zero(*ctx_);
    for (int i = 0; i <= deg_; ++i)
        for (int j = 0; i + j <= deg_; ++j) acc = acc + coeff(i, j) * x0.pow(i) * t0.pow(j);
    return acc;
}

bool TwoVarSeries::is_zero() const {
    for (const auto& v : c_)
        if (!v.is_zero()) return false;
    return true;
}

int TwoVarSeries::min_precision() const {
    int m = ctx_->precision();
    for (const auto& v : c_) m = std::min(m, v.precision());
    return m;
}

std::string TwoVarSeries::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int d = 0; d <= deg_; ++d)
        for (int j = 0; j <= d; ++j) {
            int i = d - j;
            const Padic& v = coeff(i, j);
            if (v.is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            os << "(" << v.to_string() << ")";
            if (i) os << "*x" << (i > 1 ? "^" + std::to_string(i) : "");
            if (j) os << "*t" << (j > 1 ? "^" + std::to_string(j) : "");
        }
    if (first) os << "0";
    return os.str();
}

TwoVarSeries one_var_jet(const PadicContext& ctx, int deg, const std::vector<Padic>& coeffs) {
    TwoVarSeries s(ctx, deg);
    for (size_t i = 0; i < coeffs.size() && static_cast<int>(i) <= deg; ++i)
        s.set_coeff(static_cast<int>(i), 0, coeffs[i]);
    return s;
}

} // namespace ezheeg
