#ifndef CHEBROOT_POLY_HPP
#define CHEBROOT_POLY_HPP

#include <vector>

#include "chebroot/rational.hpp"

namespace chebroot {

/* Dense univariate polynomial with exact integer coefficients, ascending
 * degree, trailing zeros trimmed (zero polynomial has no coefficients). */
class Poly {
  public:
    Poly() = default;
    explicit Poly(const BigInt & c0);
    explicit Poly(std::vector<BigInt> coeffs);
    static Poly x();
    static Poly constant(long c);

    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const BigInt & coeff(size_t i) const;
    const std::vector<BigInt> & coeffs() const { return c_; }
    const BigInt & leading() const;

    friend Poly operator+(const Poly & a, const Poly & b);
    friend Poly operator-(const Poly & a, const Poly & b);
    friend Poly operator*(const Poly & a, const Poly & b);
    friend Poly operator*(const BigInt & s, const Poly & p);
    Poly operator-() const;
    friend bool operator==(const Poly & a, const Poly & b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly & a, const Poly & b) { return a.c_ != b.c_; }

    // this(inner), by Horner on the coefficient list.
    Poly compose(const Poly & inner) const;
    Rational eval(const Rational & x) const;

    std::string str() const; // human-readable, highest degree first

  private:
    void trim();
    std::vector<BigInt> c_;
};

} // namespace chebroot

#endif
