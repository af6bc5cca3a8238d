#ifndef CHEBROOT_RATIONAL_HPP
#define CHEBROOT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "chebroot/errors.hpp"

namespace chebroot {

using BigInt = mpz_class;

/* Global operand-growth guard. Iterates of high-order methods grow doubly
 * exponentially; any rational whose numerator or denominator exceeds this
 * many bits aborts with a resource_error instead of exhausting memory. */
unsigned long guard_bits();
void set_guard_bits(unsigned long bits);
constexpr unsigned long kDefaultGuardBits = 1ul << 20;

/* Signed rational in lowest terms, denominator > 0, sign on the numerator.
 * Every construction and arithmetic result is canonical and guard-checked. */
class Rational {
  public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) { check_guard(); }
    Rational(const BigInt & n) : q_(n) { check_guard(); }
    Rational(const BigInt & num, const BigInt & den);
    Rational(long num, long den);

    // Accepts "p", "p/q" and plain decimals like "1.25". Throws usage_error
    // on anything else, domain_error on a zero denominator.
    static Rational parse(const std::string & text);

    const BigInt & num() const { return q_.get_num(); }
    const BigInt & den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    // "p" when integer, "p/q" otherwise.
    std::string str() const;

    Rational operator-() const;
    friend Rational operator+(const Rational & a, const Rational & b);
    friend Rational operator-(const Rational & a, const Rational & b);
    friend Rational operator*(const Rational & a, const Rational & b);
    friend Rational operator/(const Rational & a, const Rational & b);
    Rational & operator+=(const Rational & o) { return *this = *this + o; }
    Rational & operator-=(const Rational & o) { return *this = *this - o; }
    Rational & operator*=(const Rational & o) { return *this = *this * o; }
    Rational & operator/=(const Rational & o) { return *this = *this / o; }

    friend bool operator==(const Rational & a, const Rational & b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational & a, const Rational & b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational & a, const Rational & b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational & a, const Rational & b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational & a, const Rational & b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational & a, const Rational & b) { return a.q_ >= b.q_; }

    friend Rational abs(const Rational & a);
    friend Rational inv(const Rational & a);
    // e may be negative (reciprocal power); 0^e with e < 0 is a domain_error.
    friend Rational pow(const Rational & base, long e);

    const mpq_class & raw() const { return q_; }

  private:
    struct canonical_tag {};
    Rational(mpq_class q, canonical_tag) : q_(std::move(q)) { check_guard(); }
    static Rational wrap(mpq_class q) { return Rational(std::move(q), canonical_tag{}); }
    void check_guard() const;

    mpq_class q_;
};

BigInt bigint_pow(const BigInt & base, unsigned long e);

} // namespace chebroot

#endif
