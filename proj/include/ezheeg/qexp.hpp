#pragma once

#include "ezheeg/curve.hpp"
#include "ezheeg/padic.hpp"

#include <string>
#include <vector>

namespace ezheeg {

// weight bookkeeping: integral weights track the integer, p-adic shifts keep
// a formal label k0 + 2t
struct WeightTag {
    bool integral = true;
    long k = 2;
    std::string label;

    static WeightTag of(long k) { return {true, k, std::to_string(k)}; }
    WeightTag shifted(long by) const {
        if (integral) return of(k + by);
        return {false, 0, label + (by >= 0 ? "+" : "") + std::to_string(by)};
    }
    static WeightTag formal(std::string l) { return {false, 0, std::move(l)}; }
};

// truncated q-expansion sum_{n=1..trunc} a_n q^n over coefficient type C
// (Rat for the exact reference mode, Padic for the mod-p^M fast path)
template <typename C>
struct QExpansion {
    WeightTag weight = WeightTag::of(2);
    long level = 1;  // tame level N
    long p = 0;
    long trunc = 0;
    std::vector<C> a; // 1-based; a[0] unused and zero

    const C& an(long n) const {
        if (n < 1 || n > trunc) throw domain_error("coefficient index out of range");
        return a[n];
    }
};

using QExpQ = QExpansion<Rat>;
using QExpP = QExpansion<Padic>;

// q-expansion of the weight-2 newform attached to E by modularity,
// coefficients exact integers (as rationals)
QExpQ newform_qexp(const EllipticCurveData& E, long p, long bound);

QExpP to_padic(const QExpQ& f, const PadicContext& ctx);

// b_n = a_{pn}; truncation shrinks to floor(trunc/p)
template <typename C> QExpansion<C> U_p(const QExpansion<C>& f);
// q -> q^p on expansions
template <typename C> QExpansion<C> V_op(const QExpansion<C>& f);
// f - ap * V(f); kills coefficients at indices divisible by p for eigenforms
template <typename C> QExpansion<C> deplete(const QExpansion<C>& f, const C& ap);

// integral Atkin-Serre power: coefficient n^t a_n, weight shifts by 2t;
// negative t requires a p-depleted input
QExpQ atkin_serre_power(const QExpQ& f, long t);
QExpP atkin_serre_power(const QExpP& f, long t);

// p-adic power d^t with t = (t_zp, t mod p-1): n^t = omega(n)^{t_res} <n>^{t_zp};
// requires a p-depleted input
QExpP atkin_serre_power(const QExpP& f, const Padic& t_zp, long t_res);

// d^{-1} f^{[p]}; input the weight-2 eigenform expansion itself
QExpQ coleman_value_series(const QExpQ& f, const Rat& ap);
QExpP coleman_value_series(const QExpP& f, const Padic& ap);

bool is_depleted(const QExpQ& f);
bool is_depleted(const QExpP& f);

std::string qexp_json(const QExpQ& f);
std::string qexp_json(const QExpP& f);

} // namespace ezheeg
