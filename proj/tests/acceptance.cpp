/* Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass. */

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "chebroot/chebyshev.hpp"
#include "chebroot/dyck.hpp"
#include "chebroot/nthroot.hpp"
#include "chebroot/numeric.hpp"
#include "chebroot/sqrt_engines.hpp"
#include "chebroot/suites.hpp"

using namespace chebroot;

namespace {

int g_failures = 0;

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(int id, const char * label, bool pass, double elapsed)
{
    std::printf("%s criterion %2d (%s) [%.2fs]\n", pass ? "PASS" : "FAIL", id, label, elapsed);
    if (!pass)
        g_failures++;
}

bool in_band(const OrderEstimate & est, double d)
{
    if (!est.estimate)
        return false;
    const double v = est.estimate->to_double();
    return v >= d + 0.5 && v <= d + 1.5;
}

bool criterion_1()
{
    const SqrtProblem prob(Rational(51), Rational(7));
    return newton(prob, 0, NewtonForm::Iterate) == Rational(7)
           && newton(prob, 1, NewtonForm::Iterate) == Rational(50, 7)
           && newton(prob, 2, NewtonForm::Iterate) == Rational(4999, 700)
           && newton(prob, 3, NewtonForm::Iterate) == Rational(49980001, 6998600);
}

bool criterion_2()
{
    const SqrtProblem prob(Rational(51), Rational(7));
    return taylor_hat(prob, 2) == Rational(7) + Rational(1, 7) - Rational(1, 700)
           && taylor_hat(prob, 3)
                  == Rational(7) + Rational(1, 7) - Rational(1, 700) - Rational(1, 7000000);
}

bool criterion_3()
{
    const auto results = run_crossform_suite();
    if (!all_passed(results))
        return false;
    for (const SuiteResult & r : results)
        if (r.skipped)
            return false;
    return true;
}

bool criterion_4()
{
    return all_passed(run_identity_suite(128));
}

bool criterion_5()
{
    const SqrtProblem prob(Rational(51), Rational(7));
    const mpfr_prec_t prec = 512;
    const BigFloat reference = BigFloat::sqrt(prob.x, prec);
    return in_band(convergence_order_estimate(make_sqrt_trace(prob, 1, 4, prec), reference), 1)
           && in_band(convergence_order_estimate(make_sqrt_trace(prob, 2, 3, prec), reference), 2)
           && in_band(convergence_order_estimate(make_sqrt_trace(prob, 4, 3, prec), reference), 4);
}

bool criterion_6()
{
    for (const Rational & x : {Rational(51), Rational(2)}) {
        const SqrtProblem prob = SqrtProblem::with_default_seed(x);
        for (unsigned d = 1; d <= 3; d++) {
            unsigned long idx = 1;
            for (unsigned n = 1; n <= 2; n++) {
                idx *= d + 1;
                if (slow_sequence(prob, idx) != householder(prob, d, n, HouseholderForm::Iterate))
                    return false;
            }
        }
    }
    return true;
}

bool criterion_7()
{
    for (const Rational & x : {Rational(51), Rational(2)}) {
        const SqrtProblem sq = SqrtProblem::with_default_seed(x);
        for (unsigned d = 1; d <= 3; d++) {
            const PthRootProblem prob(x, 2, sq.r, d);
            for (unsigned n = 1; n <= 2; n++)
                if (pth_root_iterate(prob, n) != householder(sq, d, n, HouseholderForm::Iterate))
                    return false;
        }
    }
    std::mt19937_64 rng(1234);
    for (int i = 0; i < 10; i++) {
        const Rational h(static_cast<long>(rng() % 40) + 1, static_cast<long>(rng() % 5) + 1);
        const Rational x(static_cast<long>(rng() % 300) + 1);
        const PthRootProblem prob(x, 3, h, 1);
        const Rational newton_step =
            (Rational(2) * pow(h, 3) + x) / (Rational(3) * h * h);
        if (pth_root_step(prob, h) != newton_step)
            return false;
    }
    const mpfr_prec_t prec = 512;
    const PthRootProblem cube = PthRootProblem::with_default_seed(Rational(51), 3, 2);
    const OrderEstimate est = convergence_order_estimate(
        make_pth_root_trace(cube, 3, prec), BigFloat::nth_root(Rational(51), 3, prec));
    return in_band(est, 2);
}

bool criterion_8()
{
    const DyckTable table(64);
    for (unsigned n = 0; n <= 10; n++)
        for (unsigned h = 0; h <= 10; h++) {
            if (table.delta(n, h) != dyck_enumerate(n, h).size())
                return false;
            if (table.delta_sym(n, h) != sym_dyck_enumerate(n, h).size())
                return false;
        }
    if (table.delta(4, 1) != 1 || table.delta(4, 2) != 8 || table.delta(4, 3) != 13
        || table.delta(4, 9) != 14)
        return false;
    if (table.delta_sym(4, 1) != 1 || table.delta_sym(4, 2) != 4 || table.delta_sym(4, 3) != 5
        || table.delta_sym(4, 9) != 6)
        return false;
    for (unsigned n = 0; n <= 12; n++) {
        if (table.delta(n, n) != catalan(n) || table.delta(n, n + 3) != catalan(n))
            return false;
        if (table.delta_sym(n, n) != central_binomial(n)
            || table.delta_sym(n, n + 3) != central_binomial(n))
            return false;
    }
    return true;
}

bool criterion_9()
{
    const DyckTable table(64);
    for (const Rational & x : {Rational(3, 2), Rational(2), Rational(10)}) {
        for (unsigned d = 1; d <= 6; d++) {
            const Rational f_ref = f_exact(d, x);
            const Rational g_ref = g_exact(d, x);
            for (unsigned k = 0; k <= 12; k++) {
                if (abs(f_ref - f_series(d, k, x, table)) > f_tail_bound(k, x))
                    return false;
                if (abs(g_ref - g_series(d, k, x, table)) > g_tail_bound(k, x))
                    return false;
            }
        }
    }
    std::mt19937_64 rng(777);
    for (unsigned d = 2; d <= 8; d++)
        for (int i = 0; i < 20; i++) {
            const Rational x =
                Rational(static_cast<long>(rng() % 500) + 1, static_cast<long>(rng() % 50) + 1)
                + Rational(11, 10);
            if (g_exact(d, x) != x * f_exact(d, x) * (Rational(2) + g_exact(d - 1, x)))
                return false;
        }
    auto alpha = [&](unsigned i, unsigned d) {
        return Rational(table.delta(i, static_cast<long>(d) - 1), bigint_pow(BigInt(2), 2ul * i + 1));
    };
    for (unsigned d = 2; d <= 6; d++) {
        if (Rational(2) * alpha(0, d) != Rational(1))
            return false;
        for (unsigned i = 1; i <= 10; i++) {
            Rational sum(0);
            for (unsigned k = 0; k < i; k++)
                sum += alpha(k, d) * alpha(i - 1 - k, d - 1);
            if (Rational(2) * alpha(i, d) != sum)
                return false;
        }
    }
    return true;
}

bool criterion_10()
{
    for (const long xv : {2l, 51l}) {
        const SqrtProblem prob = SqrtProblem::with_default_seed(Rational(xv));
        for (const mpfr_prec_t prec : {mpfr_prec_t(128), mpfr_prec_t(256)}) {
            const BigFloat tol = BigFloat::pow2(-static_cast<long>(prec) + 32, 64);
            for (unsigned d = 1; d <= 4; d++) {
                for (unsigned n = 1; n <= 2; n++) {
                    const Rational exact = householder(prob, d, n, HouseholderForm::Iterate);
                    const BigFloat approx = householder_monomial(prob, d, n, prec);
                    if (abs(BigFloat(exact, prec + 64) - approx) > tol)
                        return false;
                }
            }
        }
    }
    return true;
}

template <typename Fn>
void timed(int id, const char * label, double budget_seconds, Fn && fn)
{
    const auto t0 = std::chrono::steady_clock::now();
    bool pass = false;
    try {
        pass = fn();
    } catch (const std::exception & e) {
        std::printf("     criterion %2d raised: %s\n", id, e.what());
        pass = false;
    }
    const double elapsed = seconds_since(t0);
    if (elapsed > budget_seconds)
        pass = false;
    report(id, label, pass, elapsed);
}

} // namespace

int main()
{
    timed(1, "worked Newton sequence x=51", 1.0, criterion_1);
    timed(2, "Taylor/Bakhshali partial sums", 10.0, criterion_2);
    timed(3, "cross-form equivalence matrix", 60.0, criterion_3);
    timed(4, "Chebyshev identity suite <= 128", 30.0, criterion_4);
    timed(5, "convergence order bands d=1,2,4", 60.0, criterion_5);
    timed(6, "slow-sequence subsequence identity", 60.0, criterion_6);
    timed(7, "pth-root reductions and order band", 60.0, criterion_7);
    timed(8, "Dyck tables vs enumeration and plateaus", 60.0, criterion_8);
    timed(9, "series theorems with tail bounds", 60.0, criterion_9);
    timed(10, "monomial forms at 128/256 bits", 60.0, criterion_10);
    if (g_failures != 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
