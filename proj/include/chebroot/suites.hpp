#ifndef CHEBROOT_SUITES_HPP
#define CHEBROOT_SUITES_HPP

#include <string>
#include <vector>

namespace chebroot {

struct SuiteResult {
    std::string key;
    bool pass;
    bool skipped; // operand guard tripped before a verdict
};

// Every registry identity with index products bounded by max_index.
std::vector<SuiteResult> run_identity_suite(long max_index = 128);

/* Cross-form equality sweep: x in {2, 51, 10^6+3}, seed int_sqrt_nearest(x),
 * d in 1..6, n in 1..4. Every applicable exact Householder form must return
 * the identical rational; Newton and Halley forms likewise. Combos the
 * operand guard refuses are reported as skipped. */
std::vector<SuiteResult> run_crossform_suite();

bool all_passed(const std::vector<SuiteResult> & results);

} // namespace chebroot

#endif
