#include "ezheeg/kubota_leopoldt.hpp"
#include "ezheeg/fg_normalization.hpp"
#include "ezheeg/linvariants.hpp"

#include <mutex>

namespace ezheeg {

namespace {

std::vector<Rat>& bernoulli_cache() {
    static std::vector<Rat> cache{Rat(1)};
    return cache;
}
std::mutex bern_mutex;

} // namespace

Rat bernoulli_number(long n) {
    std::lock_guard<std::mutex> lock(bern_mutex);
    auto& B = bernoulli_cache();
    while (static_cast<long>(B.size()) <= n) {
        long m = static_cast<long>(B.size());
        // sum_{k=0}^{m} C(m+1,k) B_k = 0
        Rat s = 0;
        Int binom = 1; // C(m+1, 0)
        for (long k = 0; k < m; ++k) {
            s += Rat(binom) * B[k];
            binom = binom * (m + 1 - k) / (k + 1);
        }
        B.push_back(-s / Rat(binom)); // binom = C(m+1, m) = m+1
    }
    return B[n];
}

Rat bernoulli_poly(long n, const Rat& x) {
    // B_n(x) = sum C(n,k) B_k x^(n-k)
    Rat acc = 0;
    Int binom = 1;
    Rat xp = 1;
    // iterate k from n down to 0 so powers of x build up
    std::vector<Rat> xpow(n + 1);
    xpow[0] = 1;
    for (long i = 1; i <= n; ++i) xpow[i] = xpow[i - 1] * x;
    for (long k = 0; k <= n; ++k) {
        acc += Rat(binom) * bernoulli_number(k) * xpow[n - k];
        binom = binom * (n - k) / (k + 1);
    }
    return acc;
}

Rat generalized_bernoulli(const DirichletCharacterData& chi, long n) {
    long D = chi.modulus();
    Rat s = 0;
    for (long a = 1; a <= D; ++a) {
        int c = chi.chi(a);
        if (c == 0) continue;
        s += Rat(c) * bernoulli_poly(n, Rat(a, D));
    }
    // D^{n-1} * s
    if (n >= 1) return s * Rat(pow_int(Int(D), n - 1));
    return s / Rat(D);
}

Rat classical_L_at_zero(const DirichletCharacterData& chi) {
    return -generalized_bernoulli(chi, 1);
}

KLBranch::KLBranch(const DirichletCharacterData& chi, long twist, const PadicContext& ctx,
                   int nodes)
    : ctx_(&ctx), chi_(chi), twist_(twist) {
    const long p = ctx.prime();
    const int M = ctx.precision();
    if (twist_ % 2 == 0)
        throw domain_error("even branch of an odd character; use an odd twist");
    if (nodes <= 0) nodes = (M * (p - 1)) / (p - 2) + 8;

    std::vector<Padic> v;
    v.reserve(nodes);
    int cp = chi.chi(p);
    for (int m = 0; m < nodes; ++m) {
        long n = twist_ + m * (p - 1);
        // -(1 - chi(p) p^(n-1)) B_{n,chi} / n, exact, then reduced
        Rat euler = Rat(1) - Rat(cp) * Rat(pow_int(Int(p), n - 1));
        Rat val = -euler * generalized_bernoulli(chi, n) / Rat(n);
        v.push_back(Padic::from_rational(ctx, val));
    }
    // forward differences
    diff_ = v;
    for (int m = 1; m < nodes; ++m)
        for (int j = nodes - 1; j >= m; --j) diff_[j] = diff_[j] - diff_[j - 1];

    // stability: the tail differences measure the truncation error
    int tail = M;
    for (int j = std::max(1, nodes - 3); j < nodes; ++j) {
        int vj = diff_[j].is_zero() ? diff_[j].precision() : diff_[j].valuation();
        tail = std::min(tail, vj);
    }
    stable_prec_ = std::max(1, tail);
}

Padic KLBranch::value(const Padic& s) const {
    const PadicContext& ctx = *ctx_;
    // u = (1 - s - twist)/(p-1); at the nodes u = m
    Padic u = (Padic::from_int(ctx, 1 - twist_) - s) / Padic::from_int(ctx, ctx.prime() - 1);
    Padic acc = Padic::zero(ctx);
    Padic binom = Padic::from_int(ctx, 1); // C(u, 0)
    for (int m = 0; m < nodes(); ++m) {
        acc = acc + diff_[m] * binom;
        binom = binom * (u - Padic::from_int(ctx, m)) / Padic::from_int(ctx, m + 1);
    }
    return acc.clamp(stable_prec_);
}

Padic KLBranch::value_at_int(long s) const {
    return value(Padic::from_int(*ctx_, s));
}

Padic KLBranch::node_value(long m) const { return value_at_int(1 - (twist_ + m * (ctx_->prime() - 1))); }

Rat KLBranch::node_exact(long m) const {
    long n = twist_ + m * (ctx_->prime() - 1);
    Rat euler = Rat(1) - Rat(chi_.chi(ctx_->prime())) * Rat(pow_int(Int(ctx_->prime()), n - 1));
    return -euler * generalized_bernoulli(chi_, n) / Rat(n);
}

Padic KLBranch::derivative_at_zero() const {
    const PadicContext& ctx = *ctx_;
    // d/ds at s = 0 of sum diff_m C(u, m) with u = (1 - s - twist)/(p-1);
    // twist 1 makes u(0) = 0 and dC(u,m)/du at 0 = (-1)^(m-1)/m
    if (twist_ != 1)
        throw domain_error("derivative at zero implemented on the omega^1 branch");
    Padic acc = Padic::zero(ctx);
    for (int m = 1; m < nodes(); ++m) {
        Padic t = diff_[m].div_int(m);
        if (m % 2 == 0) t = -t;
        acc = acc + t;
    }
    Padic duds = Padic::from_rational(ctx, Rat(-1, ctx.prime() - 1));
    return (acc * duds).clamp(stable_prec_);
}

FGCrosscheck fg_crosscheck(const ImagQuadField& K, long p, const PadicContext& ctx) {
    FGCrosscheck out;
    out.p = p;
    out.disc = K.disc();
    DirichletCharacterData chi{K.disc()};
    if (chi.chi(p) != 1)
        throw precondition_error("no trivial zero: p does not split in K");

    KLBranch L(chi, 1, ctx);
    out.L0_exact = classical_L_at_zero(chi);
    out.Lp_at_zero = L.value_at_int(0);
    out.Lp_deriv = L.derivative_at_zero();
    out.ratio = out.Lp_deriv / Padic::from_rational(ctx, out.L0_exact);

    SplitPrimeData sp = split_prime(K, p, ctx);
    out.Lchi = l_invariant_chi(sp);
    out.normalized = out.ratio / Padic::from_rational(ctx, fg_frozen_normalization());
    out.agreement = agreement(out.normalized, out.Lchi);
    int need = std::min(out.normalized.precision(), out.Lchi.precision());
    out.pass = out.agreement >= need;
    return out;
}

} // namespace ezheeg
