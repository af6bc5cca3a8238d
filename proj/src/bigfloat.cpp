#include "chebroot/bigfloat.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace chebroot {

namespace {
mpfr_prec_t clamp_prec(mpfr_prec_t prec) { return std::max<mpfr_prec_t>(prec, kMinFloatPrecision); }
}

mpfr_prec_t precision_for_digits(unsigned digits)
{
    return clamp_prec(static_cast<mpfr_prec_t>(4) * digits + 32);
}

BigFloat::BigFloat(mpfr_prec_t prec)
{
    mpfr_init2(f_, clamp_prec(prec));
    mpfr_set_zero(f_, 1);
}

BigFloat::BigFloat(const Rational & q, mpfr_prec_t prec)
{
    mpfr_init2(f_, clamp_prec(prec));
    mpfr_set_q(f_, q.raw().get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(long v, mpfr_prec_t prec)
{
    mpfr_init2(f_, clamp_prec(prec));
    mpfr_set_si(f_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat & o)
{
    mpfr_init2(f_, mpfr_get_prec(o.f_));
    mpfr_set(f_, o.f_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat && o) noexcept
{
    mpfr_init2(f_, mpfr_get_prec(o.f_));
    mpfr_swap(f_, o.f_);
}

BigFloat & BigFloat::operator=(const BigFloat & o)
{
    if (this != &o) {
        mpfr_set_prec(f_, mpfr_get_prec(o.f_));
        mpfr_set(f_, o.f_, MPFR_RNDN);
    }
    return *this;
}

BigFloat & BigFloat::operator=(BigFloat && o) noexcept
{
    if (this != &o)
        mpfr_swap(f_, o.f_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(f_); }

namespace {
mpfr_prec_t join_prec(const BigFloat & a, const BigFloat & b)
{
    return std::max(a.precision(), b.precision());
}
}

BigFloat operator+(const BigFloat & a, const BigFloat & b)
{
    BigFloat out(join_prec(a, b));
    mpfr_add(out.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return out;
}

BigFloat operator-(const BigFloat & a, const BigFloat & b)
{
    BigFloat out(join_prec(a, b));
    mpfr_sub(out.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return out;
}

BigFloat operator*(const BigFloat & a, const BigFloat & b)
{
    BigFloat out(join_prec(a, b));
    mpfr_mul(out.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return out;
}

BigFloat operator/(const BigFloat & a, const BigFloat & b)
{
    if (b.is_zero())
        throw domain_error("BigFloat division by zero");
    BigFloat out(join_prec(a, b));
    mpfr_div(out.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return out;
}

BigFloat BigFloat::operator-() const
{
    BigFloat out(precision());
    mpfr_neg(out.f_, f_, MPFR_RNDN);
    return out;
}

BigFloat abs(const BigFloat & a)
{
    BigFloat out(a.precision());
    mpfr_abs(out.raw(), a.raw(), MPFR_RNDN);
    return out;
}

BigFloat BigFloat::sqrt(const BigFloat & a)
{
    if (a.sign() < 0)
        throw domain_error("sqrt of a negative value");
    BigFloat out(a.precision());
    mpfr_sqrt(out.f_, a.f_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::sqrt(const Rational & q, mpfr_prec_t prec)
{
    return sqrt(BigFloat(q, clamp_prec(prec)));
}

BigFloat BigFloat::nth_root(const Rational & x, unsigned long p, mpfr_prec_t prec)
{
    if (x.sign() < 0)
        throw domain_error("nth_root of a negative value");
    if (p == 0)
        throw domain_error("0th root");
    BigFloat out(BigFloat(x, clamp_prec(prec)));
    mpfr_rootn_ui(out.f_, out.f_, p, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::log(const BigFloat & a)
{
    if (a.sign() <= 0)
        throw domain_error("log of a non-positive value");
    BigFloat out(a.precision());
    mpfr_log(out.f_, a.f_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::cos_pi_ratio(const BigInt & num, const BigInt & den, mpfr_prec_t prec)
{
    if (den == 0)
        throw domain_error("cos_pi_ratio with zero denominator");
    // Reduce num/den mod 2 so the mpfr_cos argument stays in [0, 2*pi).
    BigInt twice_den = 2 * den;
    BigInt reduced;
    mpz_fdiv_r(reduced.get_mpz_t(), num.get_mpz_t(), twice_den.get_mpz_t());
    const mpfr_prec_t work = clamp_prec(prec) + 48;

    BigFloat angle(work);
    mpfr_const_pi(angle.f_, MPFR_RNDN);
    mpq_class ratio(reduced, den);
    ratio.canonicalize();
    mpfr_mul_q(angle.f_, angle.f_, ratio.get_mpq_t(), MPFR_RNDN);
    mpfr_cos(angle.f_, angle.f_, MPFR_RNDN);
    return angle.round_to(clamp_prec(prec));
}

BigFloat BigFloat::round_to(mpfr_prec_t prec) const
{
    BigFloat out(clamp_prec(prec));
    mpfr_set(out.f_, f_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::pow2(long e, mpfr_prec_t prec)
{
    BigFloat out(clamp_prec(prec));
    mpfr_set_ui_2exp(out.f_, 1, e, MPFR_RNDN);
    return out;
}

namespace {
std::string format(mpfr_srcptr f, unsigned digits, char conv)
{
    const std::string spec = std::string("%.") + std::to_string(digits) + "R*" + conv;
    const int need = mpfr_snprintf(nullptr, 0, spec.c_str(), MPFR_RNDN, f);
    std::vector<char> buf(static_cast<size_t>(need) + 1);
    mpfr_snprintf(buf.data(), buf.size(), spec.c_str(), MPFR_RNDN, f);
    return std::string(buf.data());
}
}

std::string BigFloat::str_fixed(unsigned digits) const { return format(f_, digits, 'f'); }

std::string BigFloat::str_scientific(unsigned digits) const { return format(f_, digits, 'e'); }

} // namespace chebroot
