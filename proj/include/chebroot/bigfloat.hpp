#ifndef CHEBROOT_BIGFLOAT_HPP
#define CHEBROOT_BIGFLOAT_HPP

#include <mpfr.h>

#include <string>

#include "chebroot/rational.hpp"

namespace chebroot {

constexpr mpfr_prec_t kMinFloatPrecision = 64;

// Binary precision backing a decimal rendering: 4 bits per digit + 32 guard.
mpfr_prec_t precision_for_digits(unsigned digits);

/* Correctly rounded binary float of configurable precision (>= 64 bits).
 * Binary operations round to nearest-even at the wider operand precision. */
class BigFloat {
  public:
    explicit BigFloat(mpfr_prec_t prec = 128);
    BigFloat(const Rational & q, mpfr_prec_t prec);
    BigFloat(long v, mpfr_prec_t prec);
    BigFloat(const BigFloat & o);
    BigFloat(BigFloat && o) noexcept;
    BigFloat & operator=(const BigFloat & o);
    BigFloat & operator=(BigFloat && o) noexcept;
    ~BigFloat();

    mpfr_prec_t precision() const { return mpfr_get_prec(f_); }

    friend BigFloat operator+(const BigFloat & a, const BigFloat & b);
    friend BigFloat operator-(const BigFloat & a, const BigFloat & b);
    friend BigFloat operator*(const BigFloat & a, const BigFloat & b);
    friend BigFloat operator/(const BigFloat & a, const BigFloat & b);
    BigFloat operator-() const;
    friend BigFloat abs(const BigFloat & a);

    static BigFloat sqrt(const BigFloat & a);
    static BigFloat sqrt(const Rational & q, mpfr_prec_t prec);
    // x^(1/p) for x >= 0.
    static BigFloat nth_root(const Rational & x, unsigned long p, mpfr_prec_t prec);
    static BigFloat log(const BigFloat & a);
    // cos(pi * num/den), the only trigonometric entry point needed by the
    // monomial forms; the angle is reduced mod 2*pi before evaluation.
    static BigFloat cos_pi_ratio(const BigInt & num, const BigInt & den, mpfr_prec_t prec);

    int cmp(const BigFloat & o) const { return mpfr_cmp(f_, o.f_); }
    friend bool operator==(const BigFloat & a, const BigFloat & b) { return a.cmp(b) == 0; }
    friend bool operator<(const BigFloat & a, const BigFloat & b) { return a.cmp(b) < 0; }
    friend bool operator<=(const BigFloat & a, const BigFloat & b) { return a.cmp(b) <= 0; }
    friend bool operator>(const BigFloat & a, const BigFloat & b) { return a.cmp(b) > 0; }
    friend bool operator>=(const BigFloat & a, const BigFloat & b) { return a.cmp(b) >= 0; }

    bool is_zero() const { return mpfr_zero_p(f_); }
    int sign() const { return mpfr_sgn(f_); }
    // Binary exponent e with |x| in [2^(e-1), 2^e); only valid when nonzero.
    long exponent() const { return static_cast<long>(mpfr_get_exp(f_)); }

    BigFloat round_to(mpfr_prec_t prec) const;
    // 2^e at this value's precision.
    static BigFloat pow2(long e, mpfr_prec_t prec);

    double to_double() const { return mpfr_get_d(f_, MPFR_RNDN); }
    std::string str_fixed(unsigned digits) const;      // "%.<digits>f"
    std::string str_scientific(unsigned digits) const; // "%.<digits>e"

    mpfr_srcptr raw() const { return f_; }
    mpfr_ptr raw() { return f_; }

  private:
    mpfr_t f_;
};

} // namespace chebroot

#endif
