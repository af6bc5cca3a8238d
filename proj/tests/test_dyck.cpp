#include <doctest.h>

#include <random>
#include <set>

#include "chebroot/chebyshev.hpp"
#include "chebroot/dyck.hpp"
#include "chebroot/sqrt_engines.hpp"

using namespace chebroot;

namespace {
const DyckTable & table()
{
    static const DyckTable t(64);
    return t;
}

Rational random_x_above_one(std::mt19937_64 & rng)
{
    const long n = static_cast<long>(rng() % 400) + 1;
    const long d = static_cast<long>(rng() % 100) + 1;
    return Rational(n, d) + Rational(11, 10);
}
} // namespace

TEST_CASE("catalan and central binomial")
{
    CHECK(catalan(0) == 1);
    CHECK(catalan(4) == 14);
    CHECK(catalan(12) == 208012);
    CHECK(central_binomial(0) == 1);
    CHECK(central_binomial(3) == 3);
    CHECK(central_binomial(4) == 6);
}

TEST_CASE("reference counts at semilength 4")
{
    CHECK(table().delta(4, 1) == 1);
    CHECK(table().delta(4, 2) == 8);
    CHECK(table().delta(4, 3) == 13);
    CHECK(table().delta(4, 9) == 14);
    CHECK(table().delta_sym(4, 1) == 1);
    CHECK(table().delta_sym(4, 2) == 4);
    CHECK(table().delta_sym(4, 3) == 5);
    CHECK(table().delta_sym(4, 7) == 6);
}

TEST_CASE("table base cases and bounds")
{
    for (long h = 0; h <= 20; h++) {
        CHECK(table().delta(0, h) == 1);
        CHECK(table().delta_sym(0, h) == 1);
        CHECK(table().delta_sym(-1, h) == 1);
    }
    for (long n = 1; n <= 20; n++) {
        CHECK(table().delta(n, 0) == 0);
        CHECK(table().delta_sym(n, 0) == 0);
    }
    CHECK_THROWS_AS(table().delta(65, 3), resource_error);
    CHECK_THROWS_AS(table().delta(-1, 3), domain_error);
    CHECK_THROWS_AS(table().delta_sym(-2, 3), domain_error);
}

TEST_CASE("counts equal brute-force enumeration for n, h <= 10")
{
    for (unsigned n = 0; n <= 10; n++) {
        for (unsigned h = 0; h <= 10; h++) {
            CHECK(table().delta(n, h) == dyck_enumerate(n, h).size());
            CHECK(table().delta_sym(n, h) == sym_dyck_enumerate(n, h).size());
        }
    }
}

TEST_CASE("plateaus: Catalan and central binomial once h >= n")
{
    for (unsigned n = 0; n <= 12; n++) {
        for (long h : {static_cast<long>(n), static_cast<long>(n) + 1, static_cast<long>(n) + 9}) {
            CHECK(table().delta(n, h) == catalan(n));
            CHECK(table().delta_sym(n, h) == central_binomial(n));
        }
    }
}

TEST_CASE("counts are monotone in the height cap")
{
    for (long n = 1; n <= 16; n++)
        for (long h = 0; h <= n + 2; h++) {
            CHECK(table().delta(n, h) <= table().delta(n, h + 1));
            CHECK(table().delta_sym(n, h) <= table().delta_sym(n, h + 1));
        }
}

TEST_CASE("enumeration spot values")
{
    CHECK(dyck_enumerate(1, 1) == std::vector<std::string>{"UD"});
    CHECK(dyck_enumerate(4, 1) == std::vector<std::string>{"UDUDUDUD"});
    const auto two = dyck_enumerate(2, 2);
    CHECK(std::set<std::string>(two.begin(), two.end())
          == std::set<std::string>{"UUDD", "UDUD"});
    CHECK(sym_dyck_enumerate(1, 1) == std::vector<std::string>{"UD"});
    CHECK(sym_dyck_enumerate(4, 2).size() == 4);
    CHECK(sym_dyck_enumerate(3, 3).size() == 3); // central binomial of 3
    CHECK(dyck_enumerate(0, 0) == std::vector<std::string>{""});
    CHECK_THROWS_AS(dyck_enumerate(13, 2), resource_error);

    // every enumerated symmetric path really is its own mirror image
    for (const auto & path : sym_dyck_enumerate(5, 3))
        for (size_t i = 0; i < path.size(); i++)
            CHECK(path[i] != path[path.size() - 1 - i]);
}

TEST_CASE("f_d exact, recurrence and series")
{
    std::mt19937_64 rng(2718);
    for (unsigned d = 1; d <= 8; d++)
        for (int i = 0; i < 20; i++) {
            const Rational x = random_x_above_one(rng);
            CHECK(f_exact(d, x) == f_recurrence(d, x));
        }
    for (int i = 0; i < 20; i++) {
        const Rational x = random_x_above_one(rng);
        CHECK(f_exact(1, x) == inv(Rational(2) * x * x));
    }
    CHECK(f_exact(3, Rational(2)) == Rational(15, 112));
    // x = 1 endpoint: U_d(1) = d+1 keeps the exact form defined
    for (unsigned d = 1; d <= 6; d++)
        CHECK(f_exact(d, Rational(1)) == Rational(d, d + 1));

    // Delta(i,2) = 1,1,2,4,8 drive the d = 3 series
    CHECK(table().delta(0, 2) == 1);
    CHECK(table().delta(1, 2) == 1);
    CHECK(table().delta(2, 2) == 2);
    CHECK(table().delta(3, 2) == 4);
    CHECK(table().delta(4, 2) == 8);
    const Rational partial = f_series(3, 4, Rational(2), table());
    CHECK(abs(f_exact(3, Rational(2)) - partial) <= f_tail_bound(4, Rational(2)));
}

TEST_CASE("g_d exact forms and the geometric d = 2 series")
{
    std::mt19937_64 rng(314159);
    for (int i = 0; i < 20; i++) {
        const Rational x = random_x_above_one(rng);
        CHECK(g_exact(1, x) == inv(x));
        CHECK(g_exact(2, x) == Rational(2) / (Rational(2) * x - Rational(1)));
    }
    for (unsigned d = 1; d <= 8; d++)
        for (int i = 0; i < 10; i++) {
            const Rational x = random_x_above_one(rng);
            CHECK(g_exact(d, x) == g_sum_u(d, x));
        }
    CHECK(g_exact(3, Rational(2)) == g_sum_u(3, Rational(2)));
    CHECK(g_exact(3, Rational(2)) == Rational(5, 7)); // W_1(2)/T_2(2)

    // DeltaS(i,1) = 1: the series is geometric, sum_i 1/(2^i x^(i+1))
    for (unsigned i = 0; i <= 12; i++)
        CHECK(table().delta_sym(i, 1) == 1);
    const Rational x(7, 3);
    for (unsigned k = 0; k <= 8; k++) {
        const Rational q = inv(Rational(2) * x);
        const Rational geometric =
            inv(x) * (Rational(1) - pow(q, static_cast<long>(k) + 1)) / (Rational(1) - q);
        CHECK(g_series(2, k, x, table()) == geometric);
    }
}

TEST_CASE("g recurrence g_d = x f_d (2 + g_{d-1})")
{
    std::mt19937_64 rng(161803);
    for (unsigned d = 2; d <= 8; d++)
        for (int i = 0; i < 20; i++) {
            const Rational x = random_x_above_one(rng);
            CHECK(g_exact(d, x) == x * f_exact(d, x) * (Rational(2) + g_exact(d - 1, x)));
        }
}

TEST_CASE("Cauchy-product identity on the series coefficients")
{
    /* Matching coefficients in 2x^2 f_d - x^2 f_d f_{d-1} = 1 with
     * a_{i,d} = Delta(i,d-1)/2^(2i+1) gives 2 a_{0,d} = 1 and, for i >= 1,
     * 2 a_{i,d} = sum_{k=0}^{i-1} a_{k,d} a_{i-1-k,d-1}: the x^2 factor on
     * the product shifts the convolution by one slot. */
    auto alpha = [&](unsigned i, unsigned d) {
        return Rational(table().delta(i, static_cast<long>(d) - 1),
                        bigint_pow(BigInt(2), 2ul * i + 1));
    };
    for (unsigned d = 2; d <= 6; d++) {
        CHECK(Rational(2) * alpha(0, d) == Rational(1));
        for (unsigned i = 1; i <= 10; i++) {
            Rational sum(0);
            for (unsigned k = 0; k < i; k++)
                sum += alpha(k, d) * alpha(i - 1 - k, d - 1);
            CHECK(Rational(2) * alpha(i, d) == sum);
        }
    }
}

TEST_CASE("series positivity, monotone convergence and tail bounds")
{
    for (const Rational & x : {Rational(3, 2), Rational(2), Rational(10)}) {
        for (unsigned d = 1; d <= 6; d++) {
            const Rational f_ref = f_exact(d, x);
            const Rational g_ref = g_exact(d, x);
            Rational prev_f(0), prev_g(0);
            for (unsigned k = 0; k <= 12; k++) {
                const Rational sf = f_series(d, k, x, table());
                const Rational sg = g_series(d, k, x, table());
                CHECK(sf >= prev_f);
                CHECK(sg >= prev_g);
                if (table().delta(k, static_cast<long>(d) - 1) > 0)
                    CHECK(sf > prev_f);
                if (table().delta_sym(k, static_cast<long>(d) - 1) > 0)
                    CHECK(sg > prev_g);
                CHECK(sf <= f_ref);
                CHECK(sg <= g_ref);
                CHECK(f_ref - sf <= f_tail_bound(k, x));
                CHECK(g_ref - sg <= g_tail_bound(k, x));
                prev_f = sf;
                prev_g = sg;
            }
        }
    }
}

TEST_CASE("series coefficients type")
{
    const SeriesApprox f3 = SeriesApprox::make(SeriesApprox::Family::F, 3, 5, table());
    CHECK(f3.coefficients.size() == 5);
    CHECK(f3.coefficients[0] == Rational(1, 2));
    CHECK(f3.coefficients[4] == Rational(8, 512)); // Delta(4,2)/2^9
    const SeriesApprox g2 = SeriesApprox::make(SeriesApprox::Family::G, 2, 4, table());
    CHECK(g2.coefficients[3] == Rational(1, 8));
    for (const Rational & c : f3.coefficients)
        CHECK(c > Rational(0));
}

TEST_CASE("limits: error at least halves as d doubles, at x = 2")
{
    const Rational x(2);
    const mpfr_prec_t prec = 256;
    const BigFloat f_lim = f_limit(x, prec);
    const BigFloat g_lim = g_limit(x, prec);
    BigFloat prev_f = abs(BigFloat(f_exact(1, x), prec) - f_lim);
    BigFloat prev_g = abs(BigFloat(g_exact(1, x), prec) - g_lim);
    for (unsigned d = 2; d <= 64; d *= 2) {
        const BigFloat err_f = abs(BigFloat(f_exact(d, x), prec) - f_lim);
        const BigFloat err_g = abs(BigFloat(g_exact(d, x), prec) - g_lim);
        CHECK(err_f * BigFloat(2l, prec) <= prev_f);
        CHECK(err_g * BigFloat(2l, prec) <= prev_g);
        prev_f = err_f;
        prev_g = err_g;
    }
}

TEST_CASE("Algorithm 4's Phi matches -f_d (odd d) and g_d (even d)")
{
    std::mt19937_64 rng(42424242);
    for (unsigned d = 1; d <= 6; d++)
        for (int i = 0; i < 10; i++) {
            const Rational x = random_x_above_one(rng);
            if (d % 2 == 1)
                CHECK(phi(d, x) == -f_exact(d, x));
            else
                CHECK(phi(d, x) == g_exact(d, x));
        }
}
