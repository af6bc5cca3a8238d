#include <doctest.h>

#include <map>
#include <random>

#include "chebroot/nthroot.hpp"
#include "chebroot/numeric.hpp"
#include "chebroot/sqrt_engines.hpp"

using namespace chebroot;

namespace {
// classical Newton step for t^p - x; the d = 1 oracle
Rational newton_pth_step(const Rational & h, const Rational & x, unsigned p)
{
    return (Rational(p - 1) * pow(h, p) + x) / (Rational(p) * pow(h, static_cast<long>(p) - 1));
}
} // namespace

TEST_CASE("generalized binomials match the polynomial-power oracle")
{
    for (unsigned p = 2; p <= 5; p++) {
        const GenBinomTable table(p, 12);
        for (unsigned n = 0; n <= 12; n++) {
            const auto & row = table.row(n);
            CHECK(row.size() == (p - 1) * n + 1);
            for (long m = -2; m <= static_cast<long>(row.size()) + 1; m++) {
                const BigInt expect =
                    (m < 0 || m >= static_cast<long>(row.size())) ? BigInt(0) : row[m];
                CHECK(gen_binomial(n, m, p) == expect);
            }
            // row symmetry: entry m equals entry (p-1)n - m
            for (size_t m = 0; m < row.size(); m++)
                CHECK(row[m] == row[row.size() - 1 - m]);
        }
    }
}

TEST_CASE("generalized binomial spot values")
{
    for (unsigned long n = 0; n <= 10; n++)
        for (long m = -1; m <= static_cast<long>(n) + 1; m++)
            CHECK(gen_binomial(n, m, 2) == binomial(n, m));
    // (1+x+x^2)^2 = 1 + 2x + 3x^2 + 2x^3 + x^4
    CHECK(gen_binomial(2, 2, 3) == 3);
    CHECK(gen_binomial(2, 4, 3) == 1);
    CHECK(gen_binomial(2, 4, 3) == gen_binomial(2, 0, 3));
    CHECK_THROWS_AS(gen_binomial(2, 1, 1), usage_error);
}

TEST_CASE("roots-of-unity filter as residue selection")
{
    const FilteredRow zero = poly_power_filter(3, 2, 0);
    CHECK(zero.entries
          == std::vector<std::pair<unsigned long, BigInt>>{{0, BigInt(1)}, {3, BigInt(2)}});
    const FilteredRow one = poly_power_filter(2, 1, 1);
    CHECK(one.entries == std::vector<std::pair<unsigned long, BigInt>>{{1, BigInt(1)}});
    CHECK_THROWS_AS(poly_power_filter(3, 2, 3), domain_error);

    // partition: the p filters reconstruct B_p^e coefficientwise
    for (unsigned p = 2; p <= 5; p++) {
        const GenBinomTable table(p, 8);
        for (unsigned e = 1; e <= 8; e++) {
            std::vector<BigInt> sum((p - 1) * e + 1, BigInt(0));
            for (unsigned residue = 0; residue < p; residue++) {
                const auto dense = poly_power_filter(p, e, residue).dense();
                for (size_t i = 0; i < dense.size(); i++)
                    sum[i] += dense[i];
            }
            CHECK(sum == table.row(e));
        }
    }
}

TEST_CASE("step coefficients are the filtered rows of B_p^(d+1)")
{
    for (unsigned p = 2; p <= 5; p++) {
        for (unsigned d = 1; d <= 5; d++) {
            const PthStepShape shape = pth_root_step_shape(p, d);
            const unsigned num_residue = (1 + (p - 1) * d) % p;   // 1 - d mod p
            const unsigned den_residue = (p - (d % p)) % p;       // -d mod p
            std::map<unsigned long, BigInt> num_map(shape.num_terms.begin(),
                                                    shape.num_terms.end()),
                den_map(shape.den_terms.begin(), shape.den_terms.end());
            const FilteredRow num_filter = poly_power_filter(p, d + 1, num_residue);
            std::map<unsigned long, BigInt> filter_map(num_filter.entries.begin(),
                                                       num_filter.entries.end());
            CHECK(num_map == filter_map);
            const FilteredRow den_filter = poly_power_filter(p, d + 1, den_residue);
            // denominator terms stop at degree d(p-1); the filter of the full
            // row has no entries beyond it (d(p-1) + p > (p-1)(d+1))
            filter_map = std::map<unsigned long, BigInt>(den_filter.entries.begin(),
                                                         den_filter.entries.end());
            CHECK(den_map == filter_map);
            // degree bookkeeping
            CHECK(shape.num_terms.front().first == static_cast<unsigned long>(d) * (p - 1) + 1);
            CHECK(shape.den_terms.front().first == static_cast<unsigned long>(d) * (p - 1));
        }
    }
}

TEST_CASE("pth-root iteration basics")
{
    // perfect cube: the seed is already the fixed point
    const PthRootProblem cube(Rational(8), 3, Rational(2), 1);
    CHECK(pth_root_iterate(cube, 1) == Rational(2));
    CHECK(pth_root_iterate(cube, 3) == Rational(2));

    // d = 1, p = 3 is the classical cube-root Newton step (2H^3+x)/(3H^2)
    const PthRootProblem newton3(Rational(2), 3, Rational(1), 1);
    CHECK(pth_root_iterate(newton3, 1) == Rational(4, 3));
    CHECK(pth_root_iterate(newton3, 1)
          == (Rational(2) * pow(Rational(1), 3) + Rational(2)) / (Rational(3) * Rational(1)));

    CHECK_THROWS_AS(PthRootProblem(Rational(2), 1, Rational(1), 1), usage_error);
    CHECK_THROWS_AS(PthRootProblem(Rational(2), 3, Rational(1), 0), usage_error);
    CHECK_THROWS_AS(PthRootProblem(Rational(-2), 3, Rational(1), 1), domain_error);
    CHECK_THROWS_AS(PthRootProblem(Rational(2), 3, Rational(0), 1), domain_error);

    CHECK(PthRootProblem::with_default_seed(Rational(51), 3, 1).r == Rational(4));
    CHECK(PthRootProblem::with_default_seed(Rational(1, 100), 3, 1).r == Rational(1));
}

TEST_CASE("d = 1 reduces to the Newton step for every p")
{
    std::mt19937_64 rng(90210);
    for (unsigned p = 2; p <= 5; p++) {
        for (int i = 0; i < 25; i++) {
            const Rational x(static_cast<long>(rng() % 500) + 1, static_cast<long>(rng() % 9) + 1);
            const Rational h(static_cast<long>(rng() % 90) + 1, static_cast<long>(rng() % 7) + 1);
            const PthRootProblem prob(x, p, h, 1);
            CHECK(pth_root_step(prob, h) == newton_pth_step(h, x, p));
        }
    }
}

TEST_CASE("p = 2 reduces exactly to the square-root engine")
{
    for (const Rational & x : {Rational(51), Rational(2)}) {
        const SqrtProblem sq = SqrtProblem::with_default_seed(x);
        for (unsigned d = 1; d <= 3; d++) {
            const PthRootProblem prob(x, 2, sq.r, d);
            for (unsigned n = 1; n <= 2; n++)
                CHECK(pth_root_iterate(prob, n)
                      == householder(sq, d, n, HouseholderForm::Iterate));
        }
    }
    const SqrtProblem sq51(Rational(51), Rational(7));
    const PthRootProblem halley_like(Rational(51), 2, Rational(7), 2);
    CHECK(pth_root_iterate(halley_like, 2) == halley(sq51, 2, HalleyForm::Iterate));
}

TEST_CASE("convergence order for pth roots")
{
    const mpfr_prec_t prec = 2048;
    for (unsigned p = 2; p <= 4; p++) {
        for (unsigned d = 1; d <= 3; d++) {
            const PthRootProblem prob = PthRootProblem::with_default_seed(Rational(2), p, d);
            const IterationTrace trace = make_pth_root_trace(prob, 4, prec);
            const BigFloat reference = BigFloat::nth_root(prob.x, p, prec);
            // q_n = e_{n+1} / e_n^{d+1} stays bounded along n = 1, 2, 3
            std::vector<BigFloat> q;
            for (size_t n = 1; n + 1 < trace.values.size(); n++) {
                BigFloat denom(1l, prec);
                for (unsigned j = 0; j <= d; j++)
                    denom = denom * trace.errors[n];
                q.push_back(trace.errors[n + 1] / denom);
            }
            REQUIRE(q.size() == 3);
            for (size_t i = 0; i + 1 < q.size(); i++)
                CHECK(q[i + 1] <= BigFloat(2l, prec) * q[i] + BigFloat(Rational(1, 1000), prec));

            const OrderEstimate est = convergence_order_estimate(trace, reference);
            REQUIRE(est.estimate.has_value());
            CHECK(est.estimate->to_double() > d + 0.5);
            CHECK(est.estimate->to_double() < d + 1.5);
        }
    }
}
