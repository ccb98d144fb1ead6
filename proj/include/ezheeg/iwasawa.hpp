#pragma once

#include "ezheeg/padic.hpp"

#include <vector>

namespace ezheeg {

// element of Z_p[[T]]Modulo (p^M, T^n), T = gamma - 1 for a fixed topological
// generator of the tower group
class IwasawaElement {
public:
    IwasawaElement(const PadicContext& ctx, int t_trunc);

    static IwasawaElement from_coeffs(const PadicContext& ctx, std::vector<Int> coeffs);

    const PadicContext& context() const { return *ctx_; }
    int t_trunc() const { return static_cast<int>(c_.size()); }
    const Int& coeff(int i) const;
    void set_coeff(int i, const Int& v);

    IwasawaElement operator+(const IwasawaElement& o) const;
    IwasawaElement operator-(const IwasawaElement& o) const;
    IwasawaElement operator*(const IwasawaElement& o) const;

    bool is_unit() const; // unit constant term
    IwasawaElement inverse() const;

    Int augmentation() const { return coeff(0); } // T -> 0

    // exact division by T; drops one order of T-precision
    IwasawaElement divide_by_T() const;

    // substitution T -> (1+T)^a - 1 (generator change gamma -> gamma^a)
    IwasawaElement change_generator(long a) const;

    bool operator==(const IwasawaElement& o) const;

private:
    const PadicContext* ctx_;
    std::vector<Int> c_; // coeff of T^i, reduced mod p^M
    void reduce();
};

// finite free module element over the truncated Iwasawa algebra; stands in
// for a compatible system of classes up the tower
struct TowerClass {
    std::vector<IwasawaElement> comp;

    int rank() const { return static_cast<int>(comp.size()); }
    bool augmentation_vanishes() const;
    TowerClass scaled(const IwasawaElement& u) const;
    TowerClass operator+(const TowerClass& o) const;
    TowerClass change_generator(long a) const;
};

struct DerivedClass {
    TowerClass divided;          // the full class divided by T
    std::vector<Padic> level0;   // its augmentation, normalized
    Padic log_eta_gamma;         // the recorded scalar log_p(eta(gamma))
    int t_precision_left = 0;    // T-adic precision after the division
};

// derivative at the trivial character: requires augmentation zero, divides by
// T exactly, and normalizes by log_p(eta(gamma)) so the value matches the
// t-derivative of the character family chi_t(gamma) = eta(gamma)^t
DerivedClass divide_derivative(const TowerClass& Z, const Padic& eta_gamma);

// same data after the change of generator gamma -> gamma^a with the same eta
DerivedClass divide_derivative_with_generator(const TowerClass& Z, long a,
                                              const Padic& eta_gamma);

} // namespace ezheeg
