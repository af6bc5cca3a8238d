#include "chebroot/numeric.hpp"

namespace chebroot {

BigInt binomial(unsigned long n, long k)
{
    if (k < 0 || static_cast<unsigned long>(k) > n)
        return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, static_cast<unsigned long>(k));
    return out;
}

BigInt int_sqrt_nearest(const Rational & x)
{
    if (x.sign() <= 0)
        throw domain_error("int_sqrt_nearest requires x > 0");
    // floor(sqrt(x)) = isqrt(floor(x)): s^2 <= floor(x) <= x and
    // (s+1)^2 > floor(x) implies (s+1)^2 >= floor(x)+1 > x.
    BigInt whole = x.num() / x.den();
    BigInt s;
    mpz_sqrt(s.get_mpz_t(), whole.get_mpz_t());
    if (s < 1)
        return 1;
    const Rational lo_gap = x - Rational(s * s);
    const Rational hi_gap = Rational((s + 1) * (s + 1)) - x;
    return hi_gap < lo_gap ? BigInt(s + 1) : s;
}

std::string to_decimal(const Rational & q, unsigned digits)
{
    const bool negative = q.sign() < 0;
    BigInt num = ::abs(q.num());
    const BigInt & den = q.den();

    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    num *= scale;

    BigInt quot, rem;
    mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    const int half = cmp(2 * rem, den);
    if (half > 0 || (half == 0 && mpz_odd_p(quot.get_mpz_t())))
        quot += 1;

    std::string body = quot.get_str();
    if (body.size() <= digits)
        body.insert(0, digits + 1 - body.size(), '0');
    if (digits > 0)
        body.insert(body.size() - digits, ".");

    if (negative && quot != 0)
        body.insert(0, "-");
    return body;
}

} // namespace chebroot
