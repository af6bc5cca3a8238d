#include "chebroot/poly.hpp"

#include <algorithm>

namespace chebroot {

namespace {
const BigInt kZero = 0;
}

Poly::Poly(const BigInt & c0)
{
    if (c0 != 0)
        c_.push_back(c0);
}

Poly::Poly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::x() { return Poly(std::vector<BigInt>{0, 1}); }

Poly Poly::constant(long c) { return Poly(BigInt(c)); }

const BigInt & Poly::coeff(size_t i) const { return i < c_.size() ? c_[i] : kZero; }

const BigInt & Poly::leading() const { return c_.empty() ? kZero : c_.back(); }

void Poly::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

Poly operator+(const Poly & a, const Poly & b)
{
    std::vector<BigInt> out(std::max(a.c_.size(), b.c_.size()), BigInt(0));
    for (size_t i = 0; i < a.c_.size(); i++)
        out[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); i++)
        out[i] += b.c_[i];
    return Poly(std::move(out));
}

Poly operator-(const Poly & a, const Poly & b)
{
    std::vector<BigInt> out(std::max(a.c_.size(), b.c_.size()), BigInt(0));
    for (size_t i = 0; i < a.c_.size(); i++)
        out[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); i++)
        out[i] -= b.c_[i];
    return Poly(std::move(out));
}

Poly operator*(const Poly & a, const Poly & b)
{
    if (a.is_zero() || b.is_zero())
        return Poly();
    std::vector<BigInt> out(a.c_.size() + b.c_.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.c_.size(); i++) {
        if (a.c_[i] == 0)
            continue;
        for (size_t j = 0; j < b.c_.size(); j++)
            out[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out));
}

Poly operator*(const BigInt & s, const Poly & p)
{
    if (s == 0)
        return Poly();
    std::vector<BigInt> out(p.c_);
    for (auto & c : out)
        c *= s;
    return Poly(std::move(out));
}

Poly Poly::operator-() const { return BigInt(-1) * *this; }

Poly Poly::compose(const Poly & inner) const
{
    Poly acc;
    for (size_t i = c_.size(); i-- > 0;) {
        acc = acc * inner;
        acc = acc + Poly(c_[i]);
    }
    return acc;
}

Rational Poly::eval(const Rational & x) const
{
    Rational acc(0);
    for (size_t i = c_.size(); i-- > 0;)
        acc = acc * x + Rational(c_[i]);
    return acc;
}

std::string Poly::str() const
{
    if (c_.empty())
        return "0";
    std::string out;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0)
            continue;
        const bool first = out.empty();
        std::string mag = BigInt(::abs(c_[i])).get_str();
        if (!first)
            out += c_[i] < 0 ? " - " : " + ";
        else if (c_[i] < 0)
            out += "-";
        if (i == 0 || mag != "1")
            out += mag;
        if (i >= 1) {
            out += "X";
            if (i >= 2)
                out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace chebroot
