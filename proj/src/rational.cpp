#include "chebroot/rational.hpp"

#include <atomic>
#include <cctype>

namespace chebroot {

namespace {
std::atomic<unsigned long> g_guard_bits{kDefaultGuardBits};
}

unsigned long guard_bits() { return g_guard_bits.load(std::memory_order_relaxed); }

void set_guard_bits(unsigned long bits)
{
    if (bits < 64)
        throw usage_error("guard bits must be at least 64");
    g_guard_bits.store(bits, std::memory_order_relaxed);
}

void Rational::check_guard() const
{
    const unsigned long limit = guard_bits();
    const size_t nbits = mpz_sizeinbase(q_.get_num().get_mpz_t(), 2);
    const size_t dbits = mpz_sizeinbase(q_.get_den().get_mpz_t(), 2);
    if (nbits > limit || dbits > limit)
        throw resource_error("rational exceeds operand guard of " + std::to_string(limit)
                             + " bits (numerator " + std::to_string(nbits) + ", denominator "
                             + std::to_string(dbits) + "); raise --guard-bits to proceed");
}

Rational::Rational(const BigInt & num, const BigInt & den)
{
    if (den == 0)
        throw domain_error("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
    check_guard();
}

Rational::Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

Rational Rational::parse(const std::string & text)
{
    if (text.empty())
        throw usage_error("empty rational literal");
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        mpz_class num, den;
        if (num.set_str(text.substr(0, slash), 10) != 0 || den.set_str(text.substr(slash + 1), 10) != 0)
            throw usage_error("cannot parse rational '" + text + "'");
        return Rational(BigInt(num), BigInt(den));
    }
    const auto dot = text.find('.');
    if (dot != std::string::npos) {
        const std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        const size_t frac_len = text.size() - dot - 1;
        mpz_class num;
        if (frac_len == 0 || num.set_str(digits, 10) != 0)
            throw usage_error("cannot parse rational '" + text + "'");
        BigInt den = 1;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
        return Rational(BigInt(num), den);
    }
    mpz_class num;
    if (num.set_str(text, 10) != 0)
        throw usage_error("cannot parse rational '" + text + "'");
    return Rational(BigInt(num));
}

std::string Rational::str() const
{
    if (is_integer())
        return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::operator-() const { return wrap(mpq_class(-q_)); }

Rational operator+(const Rational & a, const Rational & b) { return Rational::wrap(mpq_class(a.q_ + b.q_)); }

Rational operator-(const Rational & a, const Rational & b) { return Rational::wrap(mpq_class(a.q_ - b.q_)); }

Rational operator*(const Rational & a, const Rational & b) { return Rational::wrap(mpq_class(a.q_ * b.q_)); }

Rational operator/(const Rational & a, const Rational & b)
{
    if (b.is_zero())
        throw domain_error("division by zero");
    return Rational::wrap(mpq_class(a.q_ / b.q_));
}

Rational abs(const Rational & a) { return a.sign() < 0 ? -a : a; }

Rational inv(const Rational & a)
{
    if (a.is_zero())
        throw domain_error("reciprocal of zero");
    return Rational(a.den(), a.num());
}

Rational pow(const Rational & base, long e)
{
    if (e == 0)
        return Rational(1);
    const bool negative = e < 0;
    if (negative && base.is_zero())
        throw domain_error("zero to a negative power");
    const unsigned long k = negative ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    BigInt n, d;
    mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), k);
    return negative ? Rational(d, n) : Rational(n, d);
}

BigInt bigint_pow(const BigInt & base, unsigned long e)
{
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

} // namespace chebroot
