#ifndef CHEBROOT_SQRT_ENGINES_HPP
#define CHEBROOT_SQRT_ENGINES_HPP

#include <optional>
#include <string>
#include <vector>

#include "chebroot/bigfloat.hpp"
#include "chebroot/rational.hpp"

namespace chebroot {

/* A square-root instance: target x, seed r, and the derived quantities
 * b = (x-r^2)/2, M = (x+r^2)/2, X = M/b shared by every closed form.
 * x = r^2 is rejected (X undefined; the iteration would sit at a fixed
 * point anyway). M > |b| > 0 guarantees |X| > 1. */
struct SqrtProblem {
    Rational x, r, b, M, X;
    SqrtProblem(const Rational & x, const Rational & r);
    static SqrtProblem with_default_seed(const Rational & x);
};

enum class NewtonForm { Iterate, Sum, Ratio, SecondKind, Algorithm1 };
enum class HalleyForm { Iterate, Product, Algorithm };
enum class HouseholderForm { Iterate, Cheb, ProductEven, FactoredOdd, RecursiveOdd, Binomial, Algorithm4 };

// u_n. Closed forms require n >= 1 (usage_error at n = 0).
Rational newton(const SqrtProblem & prob, unsigned n, NewtonForm form);
// Monomial (cosine-root) product form, n >= 1.
BigFloat newton_monomial(const SqrtProblem & prob, unsigned n, mpfr_prec_t prec);

// Partial Taylor sum r + b/r - sum_{k=1}^{n-1} C(2k,k)/(4^k(2k-1)) b^2k/(r M^(2k-1)).
Rational taylor_hat(const SqrtProblem & prob, unsigned n);

// prod_{j=0..k} (1 + 1/X_j), X_0 = x/r^2, X_{j+1} = T_2(X_j); increases to
// sqrt((x+r^2)/(x-r^2)) when r < sqrt(x).
Rational engel_partial(const SqrtProblem & prob, unsigned k);

Rational halley(const SqrtProblem & prob, unsigned n, HalleyForm form);

// H_n for the order-d method. Forms carry parity constraints: Cheb with odd
// d, FactoredOdd, RecursiveOdd and Algorithm4 need n >= 1; ProductEven and
// the even-d branches need even d; FactoredOdd/RecursiveOdd need odd d.
Rational householder(const SqrtProblem & prob, unsigned d, unsigned n, HouseholderForm form);
BigFloat householder_monomial(const SqrtProblem & prob, unsigned d, unsigned n, mpfr_prec_t prec);

// Exactly householder(d, n+1, Iterate) - householder(d, n, Iterate), via the
// closed residual forms where they exist.
Rational residual(const SqrtProblem & prob, unsigned d, unsigned n);

// A_n = sqrt(x) ((r+sqrt x)^n + (r-sqrt x)^n) / ((r+sqrt x)^n - (r-sqrt x)^n),
// realized by the binomial sums; A_{(d+1)^n} = householder(d, n).
Rational slow_sequence(const SqrtProblem & prob, unsigned long n);

// Algorithm 4's correction ratio: 2U_{d/2-1}(X)/V_{d/2}(X) for even d,
// -U_{d-1}(X)/(X U_d(X)) for odd d.
Rational phi(unsigned d, const Rational & X);

struct IterationTrace {
    std::string family; // "newton", "halley", "householder", "pth-root"
    unsigned order_d;
    std::string form;
    std::vector<Rational> values; // values[0] = r for iterate-form traces
    std::vector<BigFloat> errors; // |value_i - reference|, filled when traced with a reference
};

// Iterate-form trace of n steps with per-step errors against sqrt(x) at prec.
IterationTrace make_sqrt_trace(const SqrtProblem & prob, unsigned d, unsigned n, mpfr_prec_t prec);

struct OrderEstimate {
    std::optional<BigFloat> estimate; // log|e_{n+1}| / log|e_n|, last admissible pair
    std::optional<size_t> exact_at;   // iterate that met the reference within resolution
    size_t pair_index = 0;            // n of the pair the estimate came from
};

/* Log-ratio order estimate over errors measured relative to the reference
 * (scale-invariant). Requires >= 3 iterates with strictly decreasing nonzero
 * error before any early-exact hit; an iterate matching the reference within
 * its resolution is a signal, not an error. */
OrderEstimate convergence_order_estimate(const IterationTrace & trace, const BigFloat & reference);

} // namespace chebroot

#endif
