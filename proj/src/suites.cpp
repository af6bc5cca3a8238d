#include "chebroot/suites.hpp"

#include <algorithm>

#include "chebroot/chebyshev.hpp"
#include "chebroot/sqrt_engines.hpp"

namespace chebroot {

std::vector<SuiteResult> run_identity_suite(long max_index)
{
    std::vector<SuiteResult> results;
    for (const SuiteItem & item : default_identity_suite(max_index))
        results.push_back({"identity " + item.key(),
                           verify_identity(item.tag, item.params, item.degree_cap), false});
    std::sort(results.begin(), results.end(),
              [](const SuiteResult & a, const SuiteResult & b) { return a.key < b.key; });
    return results;
}

namespace {

void check_equal(std::vector<SuiteResult> & results, const std::string & key,
                 const Rational & expect, const Rational & got)
{
    results.push_back({key, expect == got, false});
}

} // namespace

std::vector<SuiteResult> run_crossform_suite()
{
    std::vector<SuiteResult> results;
    const std::vector<Rational> xs = {Rational(2), Rational(51), Rational(1000003)};
    for (const Rational & x : xs) {
        const SqrtProblem prob = SqrtProblem::with_default_seed(x);
        const std::string x_key = "x=" + x.str();
        for (unsigned n = 1; n <= 4; n++) {
            const std::string nw = "crossform newton " + x_key + " n=" + std::to_string(n);
            const Rational u = newton(prob, n, NewtonForm::Iterate);
            check_equal(results, nw + " sum", u, newton(prob, n, NewtonForm::Sum));
            check_equal(results, nw + " ratio", u, newton(prob, n, NewtonForm::Ratio));
            check_equal(results, nw + " second-kind", u, newton(prob, n, NewtonForm::SecondKind));
            check_equal(results, nw + " algorithm1", u, newton(prob, n, NewtonForm::Algorithm1));

            const std::string hl = "crossform halley " + x_key + " n=" + std::to_string(n);
            const Rational h = halley(prob, n, HalleyForm::Iterate);
            check_equal(results, hl + " product", h, halley(prob, n, HalleyForm::Product));
            check_equal(results, hl + " algorithm3", h, halley(prob, n, HalleyForm::Algorithm));
        }
        for (unsigned d = 1; d <= 6; d++) {
            for (unsigned n = 1; n <= 4; n++) {
                const std::string base = "crossform householder " + x_key + " d="
                                         + std::to_string(d) + " n=" + std::to_string(n);
                try {
                    const Rational ref = householder(prob, d, n, HouseholderForm::Iterate);
                    check_equal(results, base + " cheb", ref,
                                householder(prob, d, n, HouseholderForm::Cheb));
                    if (d % 2 == 0)
                        check_equal(results, base + " product-even", ref,
                                    householder(prob, d, n, HouseholderForm::ProductEven));
                    else {
                        check_equal(results, base + " factored-odd", ref,
                                    householder(prob, d, n, HouseholderForm::FactoredOdd));
                        check_equal(results, base + " recursive-odd", ref,
                                    householder(prob, d, n, HouseholderForm::RecursiveOdd));
                    }
                    check_equal(results, base + " binomial", ref,
                                householder(prob, d, n, HouseholderForm::Binomial));
                    check_equal(results, base + " algorithm4", ref,
                                householder(prob, d, n, HouseholderForm::Algorithm4));
                    if (d == 1)
                        check_equal(results, base + " equals-newton", ref,
                                    newton(prob, n, NewtonForm::Iterate));
                    if (d == 2)
                        check_equal(results, base + " equals-halley", ref,
                                    halley(prob, n, HalleyForm::Iterate));
                } catch (const resource_error &) {
                    results.push_back({base, true, true});
                }
            }
        }
    }
    std::sort(results.begin(), results.end(),
              [](const SuiteResult & a, const SuiteResult & b) { return a.key < b.key; });
    return results;
}

bool all_passed(const std::vector<SuiteResult> & results)
{
    return std::all_of(results.begin(), results.end(),
                       [](const SuiteResult & r) { return r.pass; });
}

} // namespace chebroot
