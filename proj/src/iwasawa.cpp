#include "ezheeg/iwasawa.hpp"

namespace ezheeg {

IwasawaElement::IwasawaElement(const PadicContext& ctx, int t_trunc) : ctx_(&ctx) {
    if (t_trunc < 1) throw domain_error("T-truncation must be at least 1");
    c_.assign(t_trunc, Int(0));
}

IwasawaElement IwasawaElement::from_coeffs(const PadicContext& ctx, std::vector<Int> coeffs) {
    IwasawaElement e(ctx, static_cast<int>(coeffs.size()));
    e.c_ = std::move(coeffs);
    e.reduce();
    return e;
}

void IwasawaElement::reduce() {
    const Int& pm = ctx_->pow(ctx_->precision());
    for (auto& v : c_) v = mod_reduce(v, pm);
}

const Int& IwasawaElement::coeff(int i) const {
    if (i < 0 || i >= t_trunc()) throw domain_error("T-coefficient out of range");
    return c_[i];
}

void IwasawaElement::set_coeff(int i, const Int& v) {
    if (i < 0 || i >= t_trunc()) throw domain_error("T-coefficient out of range");
    c_[i] = mod_reduce(v, ctx_->pow(ctx_->precision()));
}

IwasawaElement IwasawaElement::operator+(const IwasawaElement& o) const {
    if (t_trunc() != o.t_trunc()) throw domain_error("T-truncation mismatch");
    IwasawaElement r(*ctx_, t_trunc());
    for (int i = 0; i < t_trunc(); ++i) r.c_[i] = c_[i] + o.c_[i];
    r.reduce();
    return r;
}

IwasawaElement IwasawaElement::operator-(const IwasawaElement& o) const {
    if (t_trunc() != o.t_trunc()) throw domain_error("T-truncation mismatch");
    IwasawaElement r(*ctx_, t_trunc());
    for (int i = 0; i < t_trunc(); ++i) r.c_[i] = c_[i] - o.c_[i];
    r.reduce();
    return r;
}

IwasawaElement IwasawaElement::operator*(const IwasawaElement& o) const {
    if (t_trunc() != o.t_trunc()) throw domain_error("T-truncation mismatch");
    IwasawaElement r(*ctx_, t_trunc());
    for (int i = 0; i < t_trunc(); ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; i + j < t_trunc(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    }
    r.reduce();
    return r;
}

bool IwasawaElement::is_unit() const { return c_[0] % ctx_->prime() != 0; }

IwasawaElement IwasawaElement::inverse() const {
    if (!is_unit()) throw domain_error("non-unit Iwasawa element");
    const Int& pm = ctx_->pow(ctx_->precision());
    IwasawaElement r(*ctx_, t_trunc());
    Int inv0 = mod_inverse(c_[0], ctx_->prime(), pm);
    r.c_[0] = inv0;
    for (int n = 1; n < t_trunc(); ++n) {
        Int s = 0;
        for (int i = 1; i <= n; ++i) s += c_[i] * r.c_[n - i];
        r.c_[n] = mod_reduce(-s * inv0, pm);
    }
    return r;
}

IwasawaElement IwasawaElement::divide_by_T() const {
    if (mod_reduce(c_[0], ctx_->pow(ctx_->precision())) != 0)
        throw precondition_error("augmentation does not vanish: cannot divide by T");
    if (t_trunc() < 2) throw precision_error("no T-precision left after division");
    IwasawaElement r(*ctx_, t_trunc() - 1);
    for (int i = 1; i < t_trunc(); ++i) r.c_[i - 1] = c_[i];
    return r;
}

IwasawaElement IwasawaElement::change_generator(long a) const {
    // coefficients with respect to T_a = gamma^a - 1: substitute
    // T = (1+T_a)^(1/a) - 1, binomials taken through an integer
    // representative of 1/a mod p^(M + guard)
    const long p = ctx_->prime();
    if (a % p == 0) throw domain_error("generator exponent must be a unit");
    int n = t_trunc();
    int guard = 0;
    long f = 1;
    for (int k = 2; k < n; ++k) { f = k; while (f % p == 0) { ++guard; f /= p; } }
    int wp = std::min(ctx_->precision() + guard + 2, ctx_->max_pow());
    const Int& pw = ctx_->pow(wp);
    Int c = mod_inverse(mod_reduce(Int(a), pw), p, pw);
    // phi(T) = (1+T)^c - 1 truncated: coefficients C(c, k)
    std::vector<Int> phi(n, Int(0));
    Int binom = 1;
    for (int k = 1; k < n; ++k) {
        binom = binom * (c - (k - 1)) / k; // exact: c is a nonnegative integer
        phi[k] = mod_reduce(binom, pw);
    }
    // compose: sum c_[i] * phi(T)^i by Horner
    IwasawaElement phiel = IwasawaElement::from_coeffs(*ctx_, phi);
    IwasawaElement acc(*ctx_, n);
    for (int i = n - 1; i >= 0; --i) {
        acc = acc * phiel;
        acc.c_[0] += c_[i];
        acc.reduce();
    }
    return acc;
}

bool IwasawaElement::operator==(const IwasawaElement& o) const {
    return t_trunc() == o.t_trunc() && c_ == o.c_;
}

bool TowerClass::augmentation_vanishes() const {
    for (const auto& e : comp)
        if (e.augmentation() != 0) return false;
    return true;
}

TowerClass TowerClass::scaled(const IwasawaElement& u) const {
    TowerClass r;
    for (const auto& e : comp) r.comp.push_back(e * u);
    return r;
}

TowerClass TowerClass::operator+(const TowerClass& o) const {
    if (rank() != o.rank()) throw domain_error("rank mismatch");
    TowerClass r;
    for (int i = 0; i < rank(); ++i) r.comp.push_back(comp[i] + o.comp[i]);
    return r;
}

TowerClass TowerClass::change_generator(long a) const {
    TowerClass r;
    for (const auto& e : comp) r.comp.push_back(e.change_generator(a));
    return r;
}

DerivedClass divide_derivative(const TowerClass& Z, const Padic& eta_gamma) {
    if (Z.rank() == 0) throw domain_error("empty tower class");
    if (!Z.augmentation_vanishes())
        throw precondition_error("level-zero class is nonzero: no derivative to take");
    const PadicContext& ctx = Z.comp[0].context();
    DerivedClass out;
    out.log_eta_gamma = iwasawa_log(eta_gamma);
    for (const auto& e : Z.comp) {
        IwasawaElement d = e.divide_by_T();
        out.divided.comp.push_back(d);
        Padic aug = Padic::from_int(ctx, d.augmentation());
        out.level0.push_back(aug * out.log_eta_gamma);
    }
    out.t_precision_left = Z.comp[0].t_trunc() - 1;
    return out;
}

DerivedClass divide_derivative_with_generator(const TowerClass& Z, long a,
                                              const Padic& eta_gamma) {
    TowerClass Za = Z.change_generator(a);
    const PadicContext& ctx = Z.comp[0].context();
    if (!Za.augmentation_vanishes())
        throw precondition_error("level-zero class is nonzero after generator change");
    DerivedClass out;
    Padic eta_a = eta_gamma.pow(a);
    out.log_eta_gamma = iwasawa_log(eta_a);
    for (const auto& e : Za.comp) {
        IwasawaElement d = e.divide_by_T();
        out.divided.comp.push_back(d);
        Padic aug = Padic::from_int(ctx, d.augmentation());
        out.level0.push_back(aug * out.log_eta_gamma);
    }
    out.t_precision_left = Za.comp[0].t_trunc() - 1;
    return out;
}

} // namespace ezheeg
