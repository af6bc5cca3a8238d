#ifndef CHEBROOT_NTHROOT_HPP
#define CHEBROOT_NTHROOT_HPP

#include <utility>
#include <vector>

#include "chebroot/rational.hpp"
#include "chebroot/sqrt_engines.hpp"

namespace chebroot {

/* Generalized binomial coefficient of order p: the coefficient of x^m in
 * (1 + x + ... + x^(p-1))^n, from the alternating-sum closed form. Out of
 * range m returns 0. */
BigInt gen_binomial(unsigned long n, long m, unsigned p);

/* Rows of B_p(x)^n built by repeated exact polynomial multiplication: the
 * independent oracle for gen_binomial. Row n has (p-1)n + 1 entries. */
class GenBinomTable {
  public:
    GenBinomTable(unsigned p, unsigned max_n);
    const std::vector<BigInt> & row(unsigned n) const;
    unsigned p() const { return p_; }
    unsigned max_n() const { return max_n_; }

  private:
    unsigned p_, max_n_;
    std::vector<std::vector<BigInt>> rows_;
};

/* Roots-of-unity filter realized as exponent-residue selection: the entries
 * of B_p^e at exponents congruent to residue mod p, zero elsewhere. */
struct FilteredRow {
    unsigned p, e, residue;
    std::vector<std::pair<unsigned long, BigInt>> entries; // (exponent, coefficient)
    std::vector<BigInt> dense() const;                     // length (p-1)e + 1
};

FilteredRow poly_power_filter(unsigned p, unsigned e, unsigned residue);

struct PthRootProblem {
    Rational x;
    unsigned p;
    Rational r;
    unsigned d;
    PthRootProblem(const Rational & x, unsigned p, const Rational & r, unsigned d);
    // r = round(x^(1/p)) clamped to >= 1.
    static PthRootProblem with_default_seed(const Rational & x, unsigned p, unsigned d);
};

// One step of the order-d rational recurrence with generalized binomials.
Rational pth_root_step(const PthRootProblem & prob, const Rational & h);
Rational pth_root_iterate(const PthRootProblem & prob, unsigned n);

// (exponent of H, coefficient) terms of the step's numerator/denominator at
// x-power k folded in; exposes the degree bookkeeping.
struct PthStepShape {
    std::vector<std::pair<unsigned long, BigInt>> num_terms;
    std::vector<std::pair<unsigned long, BigInt>> den_terms;
};
PthStepShape pth_root_step_shape(unsigned p, unsigned d);

IterationTrace make_pth_root_trace(const PthRootProblem & prob, unsigned n, mpfr_prec_t prec);

} // namespace chebroot

#endif
