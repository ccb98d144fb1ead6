#include "ezheeg/padic.hpp"

#include <algorithm>
#include <sstream>

namespace ezheeg {

namespace {

bool is_prime_small(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// guard digits for internal series evaluation
int guard_for(int m, long p) {
    int g = 2;
    long q = p;
    while (q < m + g + 2) { q *= p; ++g; }
    return g + 2;
}

} // namespace

PadicContext::PadicContext(long p, int precision) : p_(p), m_(precision) {
    if (p < 5 || !is_prime_small(p))
        throw domain_error("context prime must be a prime >= 5");
    if (precision < 1) throw domain_error("context precision must be >= 1");
    int top = m_ + guard_for(m_, p_) + 4;
    pow_.reserve(top + 1);
    Int q = 1;
    for (int i = 0; i <= top; ++i) {
        pow_.push_back(q);
        q *= p_;
    }
    // Teichmuller lifts by Frobenius iteration, exact mod p^M
    teich_.assign(p_, Int(0));
    const Int& pm = pow_[m_];
    for (long a = 1; a < p_; ++a) {
        Int t = a, prev = 0;
        while (t != prev) {
            prev = t;
            t = boost::multiprecision::powm(t, p_, pm);
        }
        teich_[a] = t;
    }
}

const Int& PadicContext::pow(int k) const {
    if (k < 0 || k > max_pow()) throw precision_error("power of p out of context range");
    return pow_[k];
}

const Int& PadicContext::teichmuller_lift(long a) const {
    if (a <= 0 || a >= p_) throw domain_error("teichmuller residue out of range");
    return teich_[a];
}

const PadicContext& Padic::common_ctx(const Padic& x, const Padic& y) {
    if (!x.ctx_ || !y.ctx_) throw domain_error("uninitialized p-adic value");
    if (!(*x.ctx_ == *y.ctx_)) throw domain_error("mismatched p-adic contexts");
    return *x.ctx_;
}

const PadicContext& Padic::context() const {
    if (!ctx_) throw domain_error("uninitialized p-adic value");
    return *ctx_;
}

Padic Padic::zero(const PadicContext& ctx, int aprec) {
    Padic z;
    z.ctx_ = &ctx;
    z.zero_ = true;
    z.aprec_ = (aprec < 0) ? ctx.precision() : std::min(aprec, ctx.precision());
    if (z.aprec_ <= 0) throw precision_error("no precision left in tracked zero");
    z.v_ = z.aprec_;
    z.u_ = 0;
    return z;
}

void Padic::normalize() {
    int rel = aprec_ - v_;
    if (rel <= 0) {
        // nothing representable: collapses to zero at aprec
        zero_ = true;
        u_ = 0;
        v_ = aprec_;
        return;
    }
    u_ = mod_reduce(u_, ctx_->pow(rel));
    if (u_ == 0) {
        zero_ = true;
        v_ = aprec_;
        return;
    }
    int shift = 0;
    while (u_ % ctx_->prime() == 0) { u_ /= ctx_->prime(); ++shift; }
    if (shift) {
        v_ += shift;
        rel = aprec_ - v_;
        if (rel <= 0) {
            zero_ = true;
            u_ = 0;
            v_ = aprec_;
            return;
        }
        u_ = mod_reduce(u_, ctx_->pow(rel));
    }
    zero_ = false;
}

Padic Padic::from_unit(const PadicContext& ctx, int v, const Int& u, int aprec) {
    Padic x;
    x.ctx_ = &ctx;
    x.aprec_ = std::min(aprec, ctx.precision());
    x.v_ = v;
    x.u_ = u;
    x.zero_ = false;
    x.normalize();
    return x;
}

Padic Padic::from_int(const PadicContext& ctx, const Int& n) {
    if (n == 0) return zero(ctx);
    return from_unit(ctx, 0, n, ctx.precision());
}

Padic Padic::from_rational(const PadicContext& ctx, const Rat& q) {
    if (q == 0) return zero(ctx);
    Int num = boost::multiprecision::numerator(q);
    Int den = boost::multiprecision::denominator(q);
    int vn = valuation_int(num, ctx.prime());
    int vd = valuation_int(den, ctx.prime());
    num /= pow_int(ctx.prime(), vn);
    den /= pow_int(ctx.prime(), vd);
    int v = vn - vd;
    int rel = ctx.precision() - v;
    if (rel <= 0) return zero(ctx);
    const Int& pk = ctx.pow(rel);
    Int u = mod_reduce(num * mod_inverse(den, ctx.prime(), pk), pk);
    return from_unit(ctx, v, u, ctx.precision());
}

int Padic::valuation() const {
    if (zero_) throw domain_error("valuation of zero at tracked precision");
    return v_;
}

Int Padic::lift() const {
    if (zero_) return 0;
    if (v_ < 0) throw domain_error("lift of negative-valuation value");
    return u_ * ctx_->pow(v_);
}

Padic Padic::clamp(int aprec) const {
    if (!ctx_) throw domain_error("uninitialized p-adic value");
    Padic x = *this;
    x.aprec_ = std::min(aprec_, std::min(aprec, ctx_->precision()));
    if (x.aprec_ <= 0) throw precision_error("clamp below one digit");
    if (zero_) { x.v_ = x.aprec_; return x; }
    x.normalize();
    return x;
}

Padic Padic::operator-() const {
    if (zero_) return *this;
    Padic x = *this;
    x.u_ = mod_reduce(-u_, ctx_->pow(aprec_ - v_));
    return x;
}

Padic Padic::operator+(const Padic& o) const {
    const PadicContext& ctx = common_ctx(*this, o);
    int a = std::min(aprec_, o.aprec_);
    if (zero_ && o.zero_) return zero(ctx, a);
    if (zero_) return o.clamp(a);
    if (o.zero_) return clamp(a);
    int v = std::min(v_, o.v_);
    int rel = a - v;
    if (rel <= 0) return zero(ctx, a);
    Int s = u_ * ctx.pow(v_ - v) + o.u_ * ctx.pow(o.v_ - v);
    return from_unit(ctx, v, s, a);
}

Padic Padic::operator-(const Padic& o) const { return *this + (-o); }

Padic Padic::operator*(const Padic& o) const {
    const PadicContext& ctx = common_ctx(*this, o);
    if (zero_ || o.zero_) {
        int va = zero_ ? aprec_ : v_;
        int vb = o.zero_ ? o.aprec_ : o.v_;
        int a = std::min(aprec_ + vb, o.aprec_ + va);
        if (a <= 0) throw precision_error("product exhausts precision");
        return zero(ctx, a);
    }
    int a = std::min(aprec_ + o.v_, o.aprec_ + v_);
    return from_unit(ctx, v_ + o.v_, u_ * o.u_, a);
}

Padic Padic::inverse() const {
    if (zero_) throw domain_error("inverse of zero at tracked precision");
    int rel = aprec_ - v_;
    const Int& pk = ctx_->pow(rel);
    Int iu = mod_inverse(u_, ctx_->prime(), pk);
    return from_unit(*ctx_, -v_, iu, rel - v_);
}

Padic Padic::operator/(const Padic& o) const {
    const PadicContext& ctx = common_ctx(*this, o);
    if (o.zero_) throw domain_error("division by zero at tracked precision");
    if (zero_) {
        int a = aprec_ - o.v_;
        if (a <= 0) throw precision_error("division exhausts precision of zero");
        return zero(ctx, a);
    }
    int a = std::min(aprec_ - o.v_, o.aprec_ + v_ - 2 * o.v_);
    int v = v_ - o.v_;
    if (a - v <= 0) throw precision_error("division exhausts precision");
    Int iu = mod_inverse(o.u_, ctx.prime(), ctx.pow(a - v));
    return from_unit(ctx, v, u_ * iu, a);
}

Padic Padic::pow(long e) const {
    if (!ctx_) throw domain_error("uninitialized p-adic value");
    if (e == 0) return from_int(*ctx_, 1);
    if (e < 0) return inverse().pow(-e);
    Padic r = from_int(*ctx_, 1);
    Padic b = *this;
    long k = e;
    while (k > 0) {
        if (k & 1) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

Padic Padic::mul_int(const Int& n) const { return *this * from_int(context(), n); }
Padic Padic::div_int(const Int& n) const { return *this / from_int(context(), n); }

int agreement(const Padic& x, const Padic& y) {
    Padic d = x - y;
    if (d.is_zero()) return d.precision();
    return d.valuation();
}

bool same_to(const Padic& x, const Padic& y, int k) { return agreement(x, y) >= k; }

Padic teichmuller(const Padic& x) {
    if (!x.is_unit()) throw domain_error("teichmuller lift needs a p-adic unit");
    const PadicContext& ctx = x.context();
    long a = static_cast<long>(x.unit() % ctx.prime());
    return Padic::from_unit(ctx, 0, ctx.teichmuller_lift(a), x.precision());
}

Padic one_unit_part(const Padic& x) {
    if (x.is_zero()) throw domain_error("unit part of zero at tracked precision");
    const PadicContext& ctx = x.context();
    Padic u = Padic::from_unit(ctx, 0, x.unit(), x.precision() - x.valuation_or(0));
    return u / teichmuller(u);
}

namespace {
int floor_log_base(long n, long p) {
    int k = 0;
    long q = 1;
    while (q <= n / p) { q *= p; ++k; }
    return k;
}
} // namespace

Padic iwasawa_log(const Padic& x) {
    if (x.is_zero())
        throw domain_error("log of value indistinguishable from zero at working precision");
    const PadicContext& ctx = x.context();
    const long p = ctx.prime();
    // the unit part carries the honest relative precision
    Padic u1 = one_unit_part(x);
    const int a = u1.precision();
    Padic one = Padic::from_int(ctx, 1);
    Padic z = u1 - one;
    if (z.is_zero()) return Padic::zero(ctx, a);

    // raw integer evaluation with guard digits; output honest mod p^a
    int vz = z.valuation();
    int w = std::min(a + 6, ctx.max_pow() - 2);
    const Int& pw = ctx.pow(w);
    Int zl = mod_reduce(z.unit() * ctx.pow(vz), pw);
    Int term = zl, sum = 0;
    for (long n = 1;; ++n) {
        if (static_cast<long>(n) * vz - floor_log_base(n, p) >= a + 2) break;
        Int nn = n;
        int vn = 0;
        while (nn % p == 0) { nn /= p; ++vn; }
        Int t = term;
        for (int i = 0; i < vn; ++i) {
            if (t % p != 0) throw precision_error("log series division by p failed");
            t /= p;
        }
        Int contrib = t * mod_inverse(nn, p, pw) % pw;
        if (n % 2 == 0) contrib = -contrib;
        sum = mod_reduce(sum + contrib, pw);
        term = term * zl % pw;
    }
    if (mod_reduce(sum, ctx.pow(std::min(w, a))) == 0) return Padic::zero(ctx, a);
    return Padic::from_unit(ctx, 0, sum, a);
}

Padic padic_exp(const Padic& x) {
    const PadicContext& ctx = x.context();
    const long p = ctx.prime();
    const int a = x.precision();
    if (x.is_zero()) return Padic::from_int(ctx, 1).clamp(a);
    if (x.valuation() < 1) throw domain_error("exp needs valuation >= 1");
    int g = 4;
    int w = std::min(a + g, ctx.max_pow() - 2);
    const Int& pw = ctx.pow(w);
    Int xl = mod_reduce(x.unit() * ctx.pow(x.valuation()), pw);
    Int term = 1, sum = 1;
    for (long n = 1;; ++n) {
        // term becomes x^n / n!
        Int nn = n;
        int vn = 0;
        while (nn % p == 0) { nn /= p; ++vn; }
        term = term * xl % pw;
        if (vn > 0) {
            int got = 0;
            Int t = term;
            while (got < vn && t % p == 0) { t /= p; ++got; }
            if (got < vn) throw precision_error("exp series division by p failed");
            term = t;
        }
        term = term * mod_inverse(nn, p, pw) % pw;
        sum = mod_reduce(sum + term, pw);
        long es = n - n / (p - 1) - 1;
        if (es >= a + 2 || term == 0) break;
    }
    return Padic::from_unit(ctx, 0, sum, a);
}

Padic hensel_sqrt(const Padic& a) {
    if (a.is_zero()) throw domain_error("sqrt of zero at tracked precision");
    if (!a.is_unit()) throw domain_error("hensel_sqrt needs a p-adic unit");
    const PadicContext& ctx = a.context();
    const long p = ctx.prime();
    long a0 = static_cast<long>(a.unit() % p);
    long r0 = 0;
    for (long r = 1; r < p; ++r)
        if ((r * r) % p == a0) { r0 = r; break; }
    if (r0 == 0) throw nonsplit_error("p does not split: residue is a non-square mod p");
    if (p - r0 < r0) r0 = p - r0; // canonical branch
    const int prec = a.precision();
    const Int& pk = ctx.pow(prec);
    Int av = mod_reduce(a.unit(), pk);
    Int inv2 = mod_inverse(2, p, pk);
    Int r = r0, prev = 0;
    while (r != prev) {
        prev = r;
        r = mod_reduce((r + av * mod_inverse(r, p, pk)) % pk * inv2, pk);
    }
    return Padic::from_unit(ctx, 0, r, prec);
}

std::string Padic::to_string() const {
    if (!ctx_) return "<uninitialized>";
    std::ostringstream os;
    const long p = ctx_->prime();
    if (!zero_) {
        Int rest = u_;
        bool first = true;
        for (int i = 0; i < aprec_ - v_; ++i) {
            long d = static_cast<long>(rest % p);
            rest /= p;
            if (d == 0) continue;
            if (!first) os << " + ";
            first = false;
            int e = v_ + i;
            os << d;
            if (e == 1) os << "*" << p;
            else if (e != 0) os << "*" << p << "^" << e;
        }
        if (!first) os << " + ";
    }
    os << "O(" << p << "^" << aprec_ << ")";
    return os.str();
}

std::string Padic::json() const {
    std::ostringstream os;
    os << "{\"p\":" << ctx_->prime() << ",\"M\":" << aprec_ << ",\"v\":" << (zero_ ? 0 : v_)
       << ",\"digits\":[";
    if (!zero_) {
        Int rest = u_;
        for (int i = 0; i < aprec_ - v_; ++i) {
            if (i) os << ",";
            os << static_cast<long>(rest % ctx_->prime());
            rest /= ctx_->prime();
        }
    }
    os << "]}";
    return os.str();
}

} // namespace ezheeg
