#ifndef CHEBROOT_NUMERIC_HPP
#define CHEBROOT_NUMERIC_HPP

#include <string>

#include "chebroot/rational.hpp"

namespace chebroot {

// Standard binomial coefficient; 0 when k < 0 or k > n.
BigInt binomial(unsigned long n, long k);

// Integer r >= 1 minimizing |r^2 - x|, ties broken downward.
// Throws domain_error for x <= 0.
BigInt int_sqrt_nearest(const Rational & x);

// Decimal rendering of q with exactly `digits` fractional digits,
// round-half-even. A value rounding to zero drops its sign.
std::string to_decimal(const Rational & q, unsigned digits);

} // namespace chebroot

#endif
