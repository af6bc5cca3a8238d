#ifndef CHEBROOT_DYCK_HPP
#define CHEBROOT_DYCK_HPP

#include <string>
#include <vector>

#include "chebroot/bigfloat.hpp"
#include "chebroot/rational.hpp"

namespace chebroot {

BigInt catalan(unsigned n);          // C(2n,n) / (n+1)
BigInt central_binomial(unsigned n); // C(n, floor(n/2))

/* Memoized Dyck / symmetric-Dyck path counts Delta(n,h), DeltaS(n,h).
 * Height clamps to the semilength (a 2n-step excursion never exceeds height
 * n), so plateau queries cost no extra table space. */
class DyckTable {
  public:
    explicit DyckTable(unsigned max_n = 64);
    // Dyck paths of semilength n staying within [0,h]; resource_error past max_n.
    BigInt delta(long n, long h) const;
    // Mirror-symmetric subset; n = -1 returns 1 by convention.
    BigInt delta_sym(long n, long h) const;
    unsigned max_n() const { return max_n_; }

  private:
    unsigned max_n_;
    std::vector<std::vector<BigInt>> plain_; // [n][h], h <= n
    std::vector<std::vector<BigInt>> sym_;
};

constexpr unsigned kEnumerationCap = 12;

// Exhaustive enumeration oracles; paths as 'U'/'D' step strings.
std::vector<std::string> dyck_enumerate(unsigned n, unsigned h);
std::vector<std::string> sym_dyck_enumerate(unsigned n, unsigned h);

/* f_d(x) = U_{d-1}(x) / (x U_d(x)), the odd-order correction ratio. */
Rational f_exact(unsigned d, const Rational & x);
// f_1 = 1/(2x^2), f_d = 1/(x^2 (2 - f_{d-1})): the independent recurrence route.
Rational f_recurrence(unsigned d, const Rational & x);
// Partial sum of sum_i Delta(i,d-1) / (2^(2i+1) x^(2i+2)) through i = k.
Rational f_series(unsigned d, unsigned k, const Rational & x, const DyckTable & table);
// Tail bound from Delta(i,h) <= Catalan(i) <= 4^i.
Rational f_tail_bound(unsigned k, const Rational & x);
BigFloat f_limit(const Rational & x, mpfr_prec_t prec); // 1 - sqrt(1 - 1/x^2)

/* g_d(x): 2U_{d/2-1}(x)/V_{d/2}(x) for even d, W_{(d-1)/2}(x)/T_{(d+1)/2}(x)
 * for odd d (the half-order identities reduce the odd case to W/T). */
Rational g_exact(unsigned d, const Rational & x);
Rational g_sum_u(unsigned d, const Rational & x); // 2 sum_{k<d} U_k(x) / U_d(x)
// Partial sum of sum_i DeltaS(i,d-1) / (2^i x^(i+1)) through i = k.
Rational g_series(unsigned d, unsigned k, const Rational & x, const DyckTable & table);
// Tail bound from DeltaS(i,h) <= central_binomial(i) <= 2^i.
Rational g_tail_bound(unsigned k, const Rational & x);
BigFloat g_limit(const Rational & x, mpfr_prec_t prec); // sqrt((x+1)/(x-1)) - 1

struct SeriesApprox {
    enum class Family { F, G };
    Family family;
    unsigned d;
    // term i of f_d: Delta(i,d-1)/2^(2i+1) at x^-(2i+2);
    // term i of g_d: DeltaS(i,d-1)/2^i at x^-(i+1)
    std::vector<Rational> coefficients;
    static SeriesApprox make(Family family, unsigned d, unsigned terms, const DyckTable & table);
};

} // namespace chebroot

#endif
