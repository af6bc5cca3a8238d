#ifndef CHEBROOT_CHEBYSHEV_HPP
#define CHEBROOT_CHEBYSHEV_HPP

#include <string>
#include <vector>

#include "chebroot/poly.hpp"
#include "chebroot/rational.hpp"

namespace chebroot {

/* The four Chebyshev families share the recurrence p_{n+1} = 2X p_n - p_{n-1}
 * and differ in the degree-1 seed: X, 2X, 2X-1, 2X+1. */
enum class ChebKind { FirstT, SecondU, ThirdV, FourthW };

const char * cheb_kind_name(ChebKind kind);

// Exact coefficient vector (ascending degree) of the kth polynomial.
Poly cheb_poly(ChebKind kind, unsigned k);
std::vector<BigInt> cheb_coeffs(ChebKind kind, unsigned k);

// Exact value via the three-term recurrence, O(k) rational operations.
Rational cheb_eval(ChebKind kind, unsigned k, const Rational & X);

// T at index 2^j by j doubling steps T_{2^(j+1)} = 2 T_{2^j}^2 - 1.
Rational eval_T_pow2(unsigned j, const Rational & X);

enum class IdentityTag {
    PROD_TT,   // 2 T_n T_m = T_{m+n} + T_{|m-n|}
    DOUBLE_T,  // T_{2^(j+1)} = 2 T_{2^j}^2 - 1
    LEMMA1,    // T_{2^N} = 2^N X prod T_{2^j} - sum 2^(N-j) suffix products
    LEMMA2,    // T_{2^N}^2 - 4^N (X^2-1) prod T_{2^i}^2 = 1
    U_SPLIT,   // U_{2n-1} = 2 T_n U_{n-1}
    HALLEY_A,  // (X-1) prod(2T+1)^2 + 3(X+1) prod(2T-1)^2 = 2(2T_{3^n}+1)
    HALLEY_B,  // 3(X-1) prod(2T+1)^2 + (X+1) prod(2T-1)^2 = 2(2T_{3^n}-1)
    T_COMPOSE, // T_n(T_m) = T_{nm}
    U_FACTOR,  // U_{nm-1} = U_{m-1}(T_n) U_{n-1}
    VW_GAP,    // V_p - W_p = -2 U_{p-1}
    TU_LINK,   // T_{d+1} = X U_d - U_{d-1}
    HALF_U,    // squared half-order form: T_{2p+1} - 1 = (X-1) W_p^2
    HALF_T,    // squared half-order form: T_{2p+1} + 1 = (X+1) V_p^2
    GSUM,      // 2 sum_{k<d} U_k = g_d U_d, cross-multiplied per parity of d
};

IdentityTag parse_identity_tag(const std::string & name); // usage_error on unknown
const char * identity_tag_name(IdentityTag tag);
size_t identity_param_count(IdentityTag tag);

/* True iff both sides agree exactly: as coefficient vectors for the
 * bounded-degree entries, by sampling at degree+1 rational points for the
 * two-parameter composition families. Throws domain_error when the
 * parameters fall outside degree_cap. */
bool verify_identity(IdentityTag tag, const std::vector<long> & params, long degree_cap);

struct SuiteItem {
    IdentityTag tag;
    std::vector<long> params;
    long degree_cap;
    std::string key() const;
};

// Every registry identity at every parameter choice with index products
// bounded by max_index.
std::vector<SuiteItem> default_identity_suite(long max_index = 128);

} // namespace chebroot

#endif
