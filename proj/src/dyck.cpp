#include "chebroot/dyck.hpp"

#include "chebroot/chebyshev.hpp"
#include "chebroot/numeric.hpp"

namespace chebroot {

BigInt catalan(unsigned n) { return binomial(2ul * n, static_cast<long>(n)) / (n + 1); }

BigInt central_binomial(unsigned n) { return binomial(n, static_cast<long>(n / 2)); }

DyckTable::DyckTable(unsigned max_n) : max_n_(max_n)
{
    plain_.resize(max_n + 1);
    sym_.resize(max_n + 1);
    auto plain_at = [&](unsigned n, unsigned h) -> const BigInt & {
        return plain_[n][std::min(h, n)];
    };
    auto sym_at = [&](long n, unsigned h) -> BigInt {
        if (n < 0)
            return 1;
        return sym_[n][std::min<unsigned>(h, n)];
    };
    plain_[0] = {BigInt(1)};
    sym_[0] = {BigInt(1)};
    for (unsigned n = 1; n <= max_n; n++) {
        plain_[n].assign(n + 1, BigInt(0));
        sym_[n].assign(n + 1, BigInt(0));
        for (unsigned h = 1; h <= n; h++) {
            // last return to the axis: Delta(n,h) = sum_k Delta(k,h) Delta(n-1-k,h-1)
            BigInt acc = 0;
            for (unsigned k = 0; k < n; k++)
                acc += plain_at(k, h) * plain_at(n - 1 - k, h - 1);
            plain_[n][h] = acc;
            // DeltaS(n,h) = sum_{k <= n/2} Delta(k,h) DeltaS(n-1-2k,h-1), DeltaS(-1,.) = 1
            BigInt acc_s = 0;
            for (unsigned k = 0; 2 * k <= n; k++)
                acc_s += plain_at(k, h) * sym_at(static_cast<long>(n) - 1 - 2 * k, h - 1);
            sym_[n][h] = acc_s;
        }
    }
}

BigInt DyckTable::delta(long n, long h) const
{
    if (n < 0 || h < 0)
        throw domain_error("dyck_count requires n, h >= 0");
    if (n > static_cast<long>(max_n_))
        throw resource_error("dyck table capped at n <= " + std::to_string(max_n_));
    return plain_[n][std::min(h, n)];
}

BigInt DyckTable::delta_sym(long n, long h) const
{
    if (n < -1 || h < 0)
        throw domain_error("sym_dyck_count requires n >= -1, h >= 0");
    if (n < 0)
        return 1;
    if (n > static_cast<long>(max_n_))
        throw resource_error("dyck table capped at n <= " + std::to_string(max_n_));
    return sym_[n][std::min(h, n)];
}

namespace {

void walk(unsigned steps_left, long height, long h_cap, std::string & partial,
          std::vector<std::string> & out)
{
    if (steps_left == 0) {
        if (height == 0)
            out.push_back(partial);
        return;
    }
    if (height + steps_left < 0 || height > static_cast<long>(steps_left))
        return; // cannot return to the axis
    if (height < h_cap) {
        partial.push_back('U');
        walk(steps_left - 1, height + 1, h_cap, partial, out);
        partial.pop_back();
    }
    if (height > 0) {
        partial.push_back('D');
        walk(steps_left - 1, height - 1, h_cap, partial, out);
        partial.pop_back();
    }
}

} // namespace

std::vector<std::string> dyck_enumerate(unsigned n, unsigned h)
{
    if (n > kEnumerationCap)
        throw resource_error("enumeration capped at semilength " + std::to_string(kEnumerationCap));
    std::vector<std::string> out;
    std::string partial;
    walk(2 * n, 0, static_cast<long>(h), partial, out);
    return out;
}

std::vector<std::string> sym_dyck_enumerate(unsigned n, unsigned h)
{
    std::vector<std::string> out;
    for (auto & path : dyck_enumerate(n, h)) {
        bool symmetric = true;
        for (size_t i = 0, j = path.size(); i < j--; i++)
            if (path[i] == path[j]) { // mirror image swaps U and D
                symmetric = false;
                break;
            }
        if (symmetric)
            out.push_back(std::move(path));
    }
    return out;
}

namespace {
Rational nonzero(const Rational & v, const char * what)
{
    if (v.is_zero())
        throw domain_error(std::string(what) + " vanishes at this x");
    return v;
}
} // namespace

Rational f_exact(unsigned d, const Rational & x)
{
    if (d < 1)
        throw domain_error("f_d requires d >= 1");
    const Rational den = x * cheb_eval(ChebKind::SecondU, d, x);
    return cheb_eval(ChebKind::SecondU, d - 1, x) / nonzero(den, "x U_d(x)");
}

Rational f_recurrence(unsigned d, const Rational & x)
{
    if (d < 1)
        throw domain_error("f_d requires d >= 1");
    const Rational x2 = x * x;
    Rational f = inv(Rational(2) * nonzero(x2, "x^2"));
    for (unsigned i = 2; i <= d; i++)
        f = inv(x2 * (Rational(2) - f));
    return f;
}

Rational f_series(unsigned d, unsigned k, const Rational & x, const DyckTable & table)
{
    if (d < 1)
        throw domain_error("f_d requires d >= 1");
    const Rational inv_x2 = inv(nonzero(x * x, "x^2"));
    Rational term = inv_x2 / Rational(2); // i = 0: 1/(2 x^2)
    Rational sum(0);
    for (unsigned i = 0; i <= k; i++) {
        sum += Rational(table.delta(i, static_cast<long>(d) - 1)) * term;
        term = term * inv_x2 / Rational(4);
    }
    return sum;
}

Rational f_tail_bound(unsigned k, const Rational & x)
{
    if (abs(x) <= Rational(1))
        throw domain_error("tail bound requires |x| > 1");
    const Rational inv_x2 = inv(x * x);
    return pow(inv_x2, static_cast<long>(k) + 2) / (Rational(2) * (Rational(1) - inv_x2));
}

BigFloat f_limit(const Rational & x, mpfr_prec_t prec)
{
    if (abs(x) <= Rational(1))
        throw domain_error("f limit requires |x| > 1");
    const BigFloat one(Rational(1), prec);
    return one - BigFloat::sqrt(Rational(1) - inv(x * x), prec);
}

Rational g_exact(unsigned d, const Rational & x)
{
    if (d < 1)
        throw domain_error("g_d requires d >= 1");
    if (d % 2 == 0) {
        const Rational den = cheb_eval(ChebKind::ThirdV, d / 2, x);
        return Rational(2) * cheb_eval(ChebKind::SecondU, d / 2 - 1, x) / nonzero(den, "V_{d/2}(x)");
    }
    const Rational den = cheb_eval(ChebKind::FirstT, (d + 1) / 2, x);
    return cheb_eval(ChebKind::FourthW, (d - 1) / 2, x) / nonzero(den, "T_{(d+1)/2}(x)");
}

Rational g_sum_u(unsigned d, const Rational & x)
{
    if (d < 1)
        throw domain_error("g_d requires d >= 1");
    // one pass of the recurrence accumulates sum_{k<d} U_k
    Rational prev(1);
    Rational cur = Rational(2) * x;
    Rational sum(0);
    for (unsigned k = 0; k < d; k++) {
        sum += prev;
        Rational next = Rational(2) * x * cur - prev;
        prev = cur;
        cur = std::move(next);
    }
    return Rational(2) * sum / nonzero(prev, "U_d(x)");
}

Rational g_series(unsigned d, unsigned k, const Rational & x, const DyckTable & table)
{
    if (d < 1)
        throw domain_error("g_d requires d >= 1");
    const Rational inv_x = inv(nonzero(x, "x"));
    Rational term = inv_x; // i = 0: 1/x
    Rational sum(0);
    for (unsigned i = 0; i <= k; i++) {
        sum += Rational(table.delta_sym(i, static_cast<long>(d) - 1)) * term;
        term = term * inv_x / Rational(2);
    }
    return sum;
}

Rational g_tail_bound(unsigned k, const Rational & x)
{
    if (x <= Rational(1))
        throw domain_error("tail bound requires x > 1");
    return pow(inv(x), static_cast<long>(k) + 1) / (x - Rational(1));
}

BigFloat g_limit(const Rational & x, mpfr_prec_t prec)
{
    if (x <= Rational(1))
        throw domain_error("g limit requires x > 1");
    const BigFloat one(Rational(1), prec);
    return BigFloat::sqrt((x + Rational(1)) / (x - Rational(1)), prec) - one;
}

SeriesApprox SeriesApprox::make(Family family, unsigned d, unsigned terms, const DyckTable & table)
{
    if (d < 1)
        throw domain_error("series requires d >= 1");
    SeriesApprox out{family, d, {}};
    out.coefficients.reserve(terms);
    for (unsigned i = 0; i < terms; i++) {
        if (family == Family::F)
            out.coefficients.push_back(Rational(table.delta(i, static_cast<long>(d) - 1),
                                                bigint_pow(BigInt(2), 2ul * i + 1)));
        else
            out.coefficients.push_back(Rational(table.delta_sym(i, static_cast<long>(d) - 1),
                                                bigint_pow(BigInt(2), i)));
    }
    return out;
}

} // namespace chebroot
