#include "chebroot/nthroot.hpp"

#include "chebroot/bigfloat.hpp"
#include "chebroot/numeric.hpp"

namespace chebroot {

namespace {
void require_order(unsigned p)
{
    if (p < 2)
        throw usage_error("generalized binomials require p >= 2");
}
} // namespace

BigInt gen_binomial(unsigned long n, long m, unsigned p)
{
    require_order(p);
    if (m < 0 || static_cast<unsigned long>(m) > (p - 1) * n)
        return 0;
    if (n == 0)
        return m == 0 ? 1 : 0;
    BigInt sum = 0;
    for (long k = 0; k <= m / p; k++) {
        const BigInt term = binomial(n, k) * binomial(n + m - p * k - 1, static_cast<long>(n) - 1);
        sum += (k % 2 == 0) ? term : -term;
    }
    return sum;
}

GenBinomTable::GenBinomTable(unsigned p, unsigned max_n) : p_(p), max_n_(max_n)
{
    require_order(p);
    rows_.reserve(max_n + 1);
    rows_.push_back({BigInt(1)});
    for (unsigned n = 1; n <= max_n; n++) {
        const std::vector<BigInt> & prev = rows_.back();
        std::vector<BigInt> next((p - 1) * n + 1, BigInt(0));
        for (size_t i = 0; i < prev.size(); i++)
            for (unsigned j = 0; j < p; j++)
                next[i + j] += prev[i];
        rows_.push_back(std::move(next));
    }
}

const std::vector<BigInt> & GenBinomTable::row(unsigned n) const
{
    if (n > max_n_)
        throw resource_error("generalized binomial table capped at n <= " + std::to_string(max_n_));
    return rows_[n];
}

std::vector<BigInt> FilteredRow::dense() const
{
    std::vector<BigInt> out((p - 1) * static_cast<unsigned long>(e) + 1, BigInt(0));
    for (const auto & [exp, coeff] : entries)
        out[exp] = coeff;
    return out;
}

FilteredRow poly_power_filter(unsigned p, unsigned e, unsigned residue)
{
    require_order(p);
    if (residue >= p)
        throw domain_error("filter residue must lie in [0, p)");
    const GenBinomTable table(p, e);
    const std::vector<BigInt> & row = table.row(e);
    FilteredRow out{p, e, residue, {}};
    for (size_t m = residue; m < row.size(); m += p)
        out.entries.emplace_back(m, row[m]);
    return out;
}

PthRootProblem::PthRootProblem(const Rational & x_in, unsigned p_in, const Rational & r_in,
                               unsigned d_in)
    : x(x_in), p(p_in), r(r_in), d(d_in)
{
    if (p < 2)
        throw usage_error("pth root requires p >= 2");
    if (d < 1)
        throw usage_error("householder order d must be >= 1");
    if (x.sign() <= 0)
        throw domain_error("pth root requires x > 0");
    if (r.sign() <= 0)
        throw domain_error("pth root requires seed r > 0");
}

PthRootProblem PthRootProblem::with_default_seed(const Rational & x, unsigned p, unsigned d)
{
    if (p < 2)
        throw usage_error("pth root requires p >= 2");
    if (x.sign() <= 0)
        throw domain_error("pth root requires x > 0");
    const BigFloat approx = BigFloat::nth_root(x, p, 128);
    BigInt seed;
    mpfr_get_z(seed.get_mpz_t(), approx.raw(), MPFR_RNDN);
    if (seed < 1)
        seed = 1;
    return PthRootProblem(x, p, Rational(seed), d);
}

Rational pth_root_step(const PthRootProblem & prob, const Rational & h)
{
    const unsigned p = prob.p;
    const unsigned d = prob.d;
    const unsigned long top = static_cast<unsigned long>(d) * (p - 1) + 1;
    std::vector<Rational> powers(top + 1, Rational(1));
    for (unsigned long j = 1; j <= top; j++)
        powers[j] = powers[j - 1] * h;

    Rational num(0), den(0);
    Rational x_pow(1);
    // out-of-range generalized binomials contribute 0, so the loop bounds
    // can stay at the floor expressions
    for (unsigned long k = 0; k <= ((p - 1) * static_cast<unsigned long>(d) + 1) / p; k++) {
        num += Rational(gen_binomial(d + 1, static_cast<long>(p * (k + 1)) - 2, p))
               * powers[top - p * k] * x_pow;
        x_pow *= prob.x;
    }
    x_pow = Rational(1);
    for (unsigned long k = 0; k <= (p - 1) * static_cast<unsigned long>(d) / p; k++) {
        den += Rational(gen_binomial(d + 1, static_cast<long>(p * (k + 1)) - 1, p))
               * powers[top - 1 - p * k] * x_pow;
        x_pow *= prob.x;
    }
    if (den.is_zero())
        throw std::logic_error("pth-root step denominator vanished for positive iterate");
    return num / den;
}

Rational pth_root_iterate(const PthRootProblem & prob, unsigned n)
{
    Rational h = prob.r;
    for (unsigned i = 0; i < n; i++)
        h = pth_root_step(prob, h);
    return h;
}

PthStepShape pth_root_step_shape(unsigned p, unsigned d)
{
    require_order(p);
    if (d < 1)
        throw usage_error("householder order d must be >= 1");
    PthStepShape shape;
    const unsigned long top = static_cast<unsigned long>(d) * (p - 1) + 1;
    for (unsigned long k = 0; k <= ((p - 1) * static_cast<unsigned long>(d) + 1) / p; k++)
        shape.num_terms.emplace_back(top - p * k,
                                     gen_binomial(d + 1, static_cast<long>(p * (k + 1)) - 2, p));
    for (unsigned long k = 0; k <= (p - 1) * static_cast<unsigned long>(d) / p; k++)
        shape.den_terms.emplace_back(top - 1 - p * k,
                                     gen_binomial(d + 1, static_cast<long>(p * (k + 1)) - 1, p));
    return shape;
}

IterationTrace make_pth_root_trace(const PthRootProblem & prob, unsigned n, mpfr_prec_t prec)
{
    IterationTrace trace;
    trace.family = "pth-root";
    trace.order_d = prob.d;
    trace.form = "iterate";
    const BigFloat reference = BigFloat::nth_root(prob.x, prob.p, prec);
    Rational h = prob.r;
    trace.values.push_back(h);
    trace.errors.push_back(abs(BigFloat(h, prec) - reference));
    for (unsigned i = 0; i < n; i++) {
        h = pth_root_step(prob, h);
        trace.values.push_back(h);
        trace.errors.push_back(abs(BigFloat(h, prec) - reference));
    }
    return trace;
}

} // namespace chebroot
