#pragma once

#include "ezheeg/padic.hpp"

#include <optional>
#include <vector>

namespace ezheeg {

// primitive positive definite binary quadratic form a x^2 + b xy + c y^2
struct QuadForm {
    long a, b, c;
    bool operator==(const QuadForm& o) const { return a == o.a && b == o.b && c == o.c; }
};

bool is_fundamental_discriminant(long disc); // disc < 0

QuadForm reduce_form(QuadForm f);
bool is_reduced(const QuadForm& f);
long form_discriminant(const QuadForm& f);

// Imaginary quadratic field of fundamental discriminant disc < -4, so the
// unit half-order is 1. Class group stored as the reduced forms.
class ImagQuadField {
public:
    explicit ImagQuadField(long disc);

    long disc() const { return disc_; }
    long abs_disc() const { return -disc_; }
    long class_number() const { return static_cast<long>(classes_.size()); }
    long unit_half_order() const { return 1; }
    const std::vector<QuadForm>& class_group() const { return classes_; }
    QuadForm principal_form() const;

private:
    long disc_;
    std::vector<QuadForm> classes_;
};

// composition of classes (Gauss composition computed through ideal products)
QuadForm compose_forms(const QuadForm& f, const QuadForm& g, long disc);
QuadForm form_power(QuadForm f, long e, long disc);
QuadForm form_inverse(const QuadForm& f);

// alpha = (x + y sqrt(disc))/2 in O_K; the generator of a^h found by the
// norm-equation search (canonical: minimal |x|, then y > 0, then x >= 0)
struct QuadElementXY {
    Int x, y;
};

// generator of the h-th power of the class of f; exact
QuadElementXY class_power_generator(const ImagQuadField& K, const QuadForm& f);

struct SplitPrimeData {
    long p = 0;
    long h = 0;
    long disc = 0;
    QuadElementXY pi;  // pi with ord_p(image) = h under the canonical embedding
    Padic sqrt_disc;   // canonical hensel root of disc
    Padic pi_image;    // ord = h
    Padic pi_bar_image;// ord = 0
    Padic varpi;       // pi / pi_bar, ord = h
};

// requires (disc|p) = +1 and p not dividing h
SplitPrimeData split_prime(const ImagQuadField& K, long p, const PadicContext& ctx);

struct HeegnerWitness {
    bool holds = false;
    long N = 1;
    // one prime ideal (l, b, c) above each prime l | N when the hypothesis holds
    std::vector<QuadForm> primes_above;
    std::vector<long> failing_primes;
};

// every prime dividing squarefree N must split in K
HeegnerWitness heegner_hypothesis(const ImagQuadField& K, long N);

// unramified Hecke character phi_o(a) = alpha/conj(alpha), (alpha) = a^h,
// evaluated in Q_p through the canonical embedding; the argument ideal is the
// one attached to the reduced form
Padic phi_o_value(const ImagQuadField& K, const QuadForm& cls, const PadicContext& ctx);

// phi_o on the honest ideal product of the two attached ideals; phi_o is
// multiplicative on ideals (values on reduced class representatives differ by
// an h-th power of a principal generator)
Padic phi_o_product_value(const ImagQuadField& K, const QuadForm& A, const QuadForm& B,
                          const PadicContext& ctx);

// brute-force reduced-form count, kept independent of ImagQuadField's
// enumeration; used as the class-number oracle
long class_number_bruteforce(long disc);

} // namespace ezheeg
