#include "chebroot/sqrt_engines.hpp"

#include "chebroot/chebyshev.hpp"
#include "chebroot/numeric.hpp"

namespace chebroot {

namespace {

constexpr unsigned long kIndexCap = 1ul << 24;

const Rational kOne(1);
const Rational kTwo(2);

void require_form_n(unsigned n, const char * what)
{
    if (n == 0)
        throw usage_error(std::string(what) + " requires n >= 1");
}

// (d+1)^n as a loop bound; closed forms walk this many recurrence steps.
unsigned long power_index(unsigned d, unsigned n)
{
    unsigned long v = 1;
    for (unsigned i = 0; i < n; i++) {
        if (v > kIndexCap / (d + 1))
            throw resource_error("(d+1)^n exceeds the closed-form index cap");
        v *= d + 1;
    }
    return v;
}

Rational nonzero(const Rational & v)
{
    if (v.is_zero())
        throw std::logic_error("closed-form denominator vanished; |T_k(X)| >= 1 violated");
    return v;
}

// A(N) = sum C(N,2k) r^(N-2k) x^k and B(N) = sum C(N,2k+1) r^(N-1-2k) x^k,
// the even/odd halves of (r + sqrt x)^N; the iterate equals A/B.
Rational binomial_ratio(const Rational & x, const Rational & r, unsigned long N)
{
    const Rational r2 = r * r;
    Rational a_term = pow(r, static_cast<long>(N));
    Rational a_sum = a_term;
    for (unsigned long k = 0; 2 * (k + 1) <= N; k++) {
        const Rational step(BigInt(N - 2 * k) * BigInt(N - 2 * k - 1),
                            BigInt(2 * k + 1) * BigInt(2 * k + 2));
        a_term = a_term * x * step / r2;
        a_sum += a_term;
    }
    Rational b_term = Rational(BigInt(N)) * pow(r, static_cast<long>(N) - 1);
    Rational b_sum = b_term;
    for (unsigned long k = 0; 2 * (k + 1) + 1 <= N; k++) {
        const Rational step(BigInt(N - 2 * k - 1) * BigInt(N - 2 * k - 2),
                            BigInt(2 * k + 2) * BigInt(2 * k + 3));
        b_term = b_term * x * step / r2;
        b_sum += b_term;
    }
    return a_sum / nonzero(b_sum);
}

} // namespace

SqrtProblem::SqrtProblem(const Rational & x_in, const Rational & r_in)
    : x(x_in), r(r_in), b((x_in - r_in * r_in) / kTwo), M((x_in + r_in * r_in) / kTwo), X(0)
{
    if (x.sign() <= 0)
        throw domain_error("sqrt problem requires x > 0");
    if (r.sign() <= 0)
        throw domain_error("sqrt problem requires seed r > 0");
    if (b.is_zero())
        throw domain_error("seed r with r^2 = x rejected: X = (x+r^2)/(x-r^2) is undefined");
    X = M / b;
}

SqrtProblem SqrtProblem::with_default_seed(const Rational & x)
{
    return SqrtProblem(x, Rational(int_sqrt_nearest(x)));
}

Rational newton(const SqrtProblem & prob, unsigned n, NewtonForm form)
{
    switch (form) {
        case NewtonForm::Iterate: {
            Rational u = prob.r;
            for (unsigned i = 0; i < n; i++)
                u = u / kTwo + prob.x / (kTwo * u);
            return u;
        }
        case NewtonForm::Sum: {
            require_form_n(n, "newton sum form");
            Rational sum(0);
            Rational t = prob.X;        // T_{2^j}(X)
            Rational denom = kTwo * t;  // 2^k prod_{j<k} T_{2^j}(X)
            for (unsigned k = 1; k < n; k++) {
                sum += inv(nonzero(denom));
                t = kTwo * t * t - kOne;
                denom = kTwo * denom * t;
            }
            return prob.M / prob.r - prob.b / prob.r * sum;
        }
        case NewtonForm::Ratio: {
            require_form_n(n, "newton ratio form");
            Rational prod(1); // prod_{j=0}^{n-2} T_{2^j}(X)
            Rational t = prob.X;
            for (unsigned j = 0; j + 1 < n; j++) {
                prod *= t;
                t = kTwo * t * t - kOne;
            }
            const Rational denom = Rational(bigint_pow(BigInt(2), n - 1)) * prod;
            return prob.b / prob.r * t / nonzero(denom);
        }
        case NewtonForm::SecondKind: {
            require_form_n(n, "newton second-kind form");
            const unsigned long half = power_index(1, n - 1); // 2^(n-1)
            const Rational num = cheb_eval(ChebKind::FirstT, half, prob.X);
            const Rational den =
                (prob.X - kOne) * cheb_eval(ChebKind::SecondU, half - 1, prob.X);
            return prob.r * num / nonzero(den);
        }
        case NewtonForm::Algorithm1: {
            require_form_n(n, "algorithm 1");
            Rational s = (prob.x + prob.r * prob.r) / (kTwo * prob.r);
            Rational big_x = (prob.x + prob.r * prob.r) / (prob.x - prob.r * prob.r);
            Rational e = (prob.r * prob.r - prob.x) / (Rational(4) * prob.r * big_x);
            for (unsigned i = 2; i <= n; i++) {
                s += e;
                big_x = kTwo * big_x * big_x - kOne;
                e = e / (kTwo * big_x);
            }
            return s;
        }
    }
    throw usage_error("unknown newton form");
}

BigFloat newton_monomial(const SqrtProblem & prob, unsigned n, mpfr_prec_t prec)
{
    require_form_n(n, "newton monomial form");
    const unsigned long half = power_index(1, n - 1); // 2^(n-1)
    const mpfr_prec_t work = prec + 48;
    const BigFloat big_x(prob.X, work);
    const BigInt denom = bigint_pow(BigInt(2), n);
    BigFloat acc(prob.r, work);
    for (unsigned long k = 0; k < half; k++) {
        const BigFloat root = BigFloat::cos_pi_ratio(BigInt(2 * k + 1), denom, work);
        const BigFloat pole = BigFloat::cos_pi_ratio(BigInt(2 * k), denom, work);
        acc = acc * (big_x - root) / (big_x - pole);
    }
    return acc.round_to(prec);
}

Rational taylor_hat(const SqrtProblem & prob, unsigned n)
{
    if (n < 1)
        throw domain_error("taylor_hat requires n >= 1");
    Rational sum = prob.r + prob.b / prob.r;
    const Rational b2 = prob.b * prob.b;
    Rational power = b2 / prob.M; // b^2k / M^(2k-1)
    for (unsigned k = 1; k < n; k++) {
        const Rational coeff(binomial(2ul * k, static_cast<long>(k)),
                             bigint_pow(BigInt(4), k) * BigInt(2 * k - 1));
        sum -= coeff * power / prob.r;
        power = power * b2 / (prob.M * prob.M);
    }
    return sum;
}

Rational engel_partial(const SqrtProblem & prob, unsigned k)
{
    Rational t = prob.x / (prob.r * prob.r);
    Rational product(1);
    for (unsigned j = 0; j <= k; j++) {
        product *= kOne + inv(nonzero(t));
        t = kTwo * t * t - kOne;
    }
    return product;
}

Rational halley(const SqrtProblem & prob, unsigned n, HalleyForm form)
{
    switch (form) {
        case HalleyForm::Iterate: {
            Rational h = prob.r;
            for (unsigned i = 0; i < n; i++)
                h = h * (h * h + Rational(3) * prob.x) / (Rational(3) * h * h + prob.x);
            return h;
        }
        case HalleyForm::Product: {
            Rational t = prob.X; // T_{3^(i-1)}(X)
            Rational product(1);
            for (unsigned i = 1; i <= n; i++) {
                product *= (kTwo * t + kOne) / nonzero(kTwo * t - kOne);
                t = t * (Rational(4) * t * t - Rational(3));
            }
            return prob.r * product;
        }
        case HalleyForm::Algorithm: {
            Rational s = prob.r;
            Rational t = (prob.x + prob.r * prob.r) / (prob.x - prob.r * prob.r);
            for (unsigned i = 1; i <= n; i++) {
                s = s * (kOne + kTwo / nonzero(kTwo * t - kOne));
                t = t * (Rational(4) * t * t - Rational(3));
            }
            return s;
        }
    }
    throw usage_error("unknown halley form");
}

namespace {

Rational householder_step(const SqrtProblem & prob, unsigned d, const Rational & h)
{
    std::vector<Rational> powers(d + 2, kOne);
    for (unsigned j = 1; j <= d + 1; j++)
        powers[j] = powers[j - 1] * h;
    Rational num(0), den(0);
    Rational x_pow = kOne;
    for (unsigned k = 0; 2 * k <= d + 1; k++) {
        num += Rational(binomial(d + 1, 2 * k)) * powers[d + 1 - 2 * k] * x_pow;
        if (2 * k + 1 <= d + 1)
            den += Rational(binomial(d + 1, 2 * k + 1)) * powers[d - 2 * k] * x_pow;
        x_pow *= prob.x;
    }
    return num / nonzero(den);
}

Rational householder_iterate(const SqrtProblem & prob, unsigned d, unsigned n)
{
    Rational h = prob.r;
    for (unsigned step = 0; step < n; step++)
        h = householder_step(prob, d, h);
    return h;
}

// 2-adic valuation of v (v > 0).
unsigned two_adic_valuation(unsigned long v)
{
    unsigned a = 0;
    while (v % 2 == 0) {
        v /= 2;
        a++;
    }
    return a;
}

Rational householder_cheb(const SqrtProblem & prob, unsigned d, unsigned n)
{
    const unsigned long N = power_index(d, n);
    if (d % 2 == 0) {
        const unsigned long m = (N - 1) / 2;
        const Rational num = cheb_eval(ChebKind::FourthW, m, prob.X);
        const Rational den = cheb_eval(ChebKind::ThirdV, m, prob.X);
        return prob.r * num / nonzero(den);
    }
    require_form_n(n, "odd-order chebyshev form");
    const Rational num = cheb_eval(ChebKind::FirstT, N / 2, prob.X);
    const Rational den = (prob.X - kOne) * cheb_eval(ChebKind::SecondU, N / 2 - 1, prob.X);
    return prob.r * num / nonzero(den);
}

Rational householder_product_even(const SqrtProblem & prob, unsigned d, unsigned n)
{
    const unsigned p = d / 2;
    Rational t = prob.X; // T_{(2p+1)^(j-1)}(X)
    Rational num(1), den(1);
    for (unsigned j = 1; j <= n; j++) {
        num *= cheb_eval(ChebKind::FourthW, p, t);
        den *= cheb_eval(ChebKind::ThirdV, p, t);
        t = cheb_eval(ChebKind::FirstT, d + 1, t);
    }
    return prob.r * num / nonzero(den);
}

Rational householder_factored_odd(const SqrtProblem & prob, unsigned d, unsigned n)
{
    require_form_n(n, "factored odd form");
    const unsigned long N = power_index(d, n);
    const unsigned alpha = two_adic_valuation(d + 1);
    const unsigned long p = (d + 1 - (1ul << alpha)) >> (alpha + 1);

    Rational denom = prob.X - kOne;
    unsigned long power = 1; // (d+1)^(j+1) below
    for (unsigned j = 0; j + 1 < n; j++) {
        power *= d + 1;
        denom *= cheb_eval(ChebKind::FirstT, power / 2, prob.X);
    }
    unsigned long dp_pow = 1; // (d+1)^j
    for (unsigned j = 0; j < n; j++) {
        for (unsigned k = 0; alpha >= 2 && k <= alpha - 2; k++)
            denom *= cheb_eval(ChebKind::FirstT, (1ul << k) * dp_pow, prob.X);
        const Rational inner = cheb_eval(ChebKind::FirstT, (1ul << alpha) * dp_pow, prob.X);
        denom *= cheb_eval(ChebKind::FourthW, p, inner);
        dp_pow *= d + 1;
    }
    const Rational scale(BigInt(1), bigint_pow(BigInt(2), alpha * n - 1));
    return prob.r * scale * cheb_eval(ChebKind::FirstT, N / 2, prob.X) / nonzero(denom);
}

Rational householder_recursive_odd(const SqrtProblem & prob, unsigned d, unsigned n)
{
    require_form_n(n, "recursive odd form");
    Rational t = cheb_eval(ChebKind::FirstT, (d + 1) / 2, prob.X); // X_j = T_{(d+1)^j/2}(X)
    Rational h = prob.r * t
                 / nonzero((prob.X - kOne) * cheb_eval(ChebKind::SecondU, (d + 1) / 2 - 1, prob.X));
    for (unsigned j = 1; j < n; j++) {
        const Rational num = cheb_eval(ChebKind::FirstT, d + 1, t);
        const Rational den = t * cheb_eval(ChebKind::SecondU, d, t);
        h = h * num / nonzero(den);
        t = cheb_eval(ChebKind::FirstT, d + 1, t);
    }
    return h;
}

Rational householder_algorithm4(const SqrtProblem & prob, unsigned d, unsigned n)
{
    require_form_n(n, "algorithm 4");
    Rational s(0), t(0);
    const Rational & big_x = prob.X;
    if (d % 2 == 0) {
        s = prob.r * (kOne + phi(d, big_x));
        t = cheb_eval(ChebKind::FirstT, d + 1, big_x);
    } else {
        t = cheb_eval(ChebKind::FirstT, (d + 1) / 2, big_x);
        s = prob.r * t
            / nonzero((big_x - kOne) * cheb_eval(ChebKind::SecondU, (d + 1) / 2 - 1, big_x));
    }
    for (unsigned i = 2; i <= n; i++) {
        s = s * (kOne + phi(d, t));
        t = cheb_eval(ChebKind::FirstT, d + 1, t);
    }
    return s;
}

} // namespace

Rational phi(unsigned d, const Rational & X)
{
    if (d < 1)
        throw usage_error("phi requires d >= 1");
    if (d % 2 == 0)
        return kTwo * cheb_eval(ChebKind::SecondU, d / 2 - 1, X)
               / nonzero(cheb_eval(ChebKind::ThirdV, d / 2, X));
    return -(cheb_eval(ChebKind::SecondU, d - 1, X))
           / nonzero(X * cheb_eval(ChebKind::SecondU, d, X));
}

Rational householder(const SqrtProblem & prob, unsigned d, unsigned n, HouseholderForm form)
{
    if (d < 1)
        throw usage_error("householder order d must be >= 1");
    switch (form) {
        case HouseholderForm::Iterate:
            return householder_iterate(prob, d, n);
        case HouseholderForm::Cheb:
            return householder_cheb(prob, d, n);
        case HouseholderForm::ProductEven:
            if (d % 2 != 0)
                throw usage_error("product form requires even order d");
            return householder_product_even(prob, d, n);
        case HouseholderForm::FactoredOdd:
            if (d % 2 == 0)
                throw usage_error("factored form requires odd order d");
            return householder_factored_odd(prob, d, n);
        case HouseholderForm::RecursiveOdd:
            if (d % 2 == 0)
                throw usage_error("recursive form requires odd order d");
            return householder_recursive_odd(prob, d, n);
        case HouseholderForm::Binomial:
            return binomial_ratio(prob.x, prob.r, power_index(d, n));
        case HouseholderForm::Algorithm4:
            return householder_algorithm4(prob, d, n);
    }
    throw usage_error("unknown householder form");
}

BigFloat householder_monomial(const SqrtProblem & prob, unsigned d, unsigned n, mpfr_prec_t prec)
{
    if (d < 1)
        throw usage_error("householder order d must be >= 1");
    const unsigned long N = power_index(d, n);
    const mpfr_prec_t work = prec + 48;
    const BigFloat big_x(prob.X, work);
    BigFloat acc(prob.r, work);
    if (d % 2 == 0) {
        for (unsigned long k = 1; k <= (N - 1) / 2; k++) {
            const BigFloat root = BigFloat::cos_pi_ratio(BigInt(2 * k), BigInt(N), work);
            const BigFloat pole = BigFloat::cos_pi_ratio(BigInt(2 * k - 1), BigInt(N), work);
            acc = acc * (big_x - root) / (big_x - pole);
        }
    } else {
        require_form_n(n, "odd-order monomial form");
        for (unsigned long k = 0; k + 1 <= N / 2; k++) {
            const BigFloat root = BigFloat::cos_pi_ratio(BigInt(2 * k + 1), BigInt(N), work);
            const BigFloat pole = BigFloat::cos_pi_ratio(BigInt(2 * k), BigInt(N), work);
            acc = acc * (big_x - root) / (big_x - pole);
        }
    }
    return acc.round_to(prec);
}

Rational residual(const SqrtProblem & prob, unsigned d, unsigned n)
{
    if (d < 1)
        throw usage_error("householder order d must be >= 1");
    const Rational h_n = householder_iterate(prob, d, n);
    if (d % 2 == 0) {
        const unsigned p = d / 2;
        const Rational t = cheb_eval(ChebKind::FirstT, power_index(d, n), prob.X);
        return kTwo * h_n * cheb_eval(ChebKind::SecondU, p - 1, t)
               / nonzero(cheb_eval(ChebKind::ThirdV, p, t));
    }
    if (n == 0) // X_0 = T_{1/2}(X) is half-order; subtract directly instead
        return householder_iterate(prob, d, 1) - prob.r;
    const Rational t = cheb_eval(ChebKind::FirstT, power_index(d, n) / 2, prob.X);
    return -(h_n * cheb_eval(ChebKind::SecondU, d - 1, t))
           / nonzero(t * cheb_eval(ChebKind::SecondU, d, t));
}

Rational slow_sequence(const SqrtProblem & prob, unsigned long n)
{
    if (n < 1)
        throw domain_error("slow sequence starts at n = 1");
    if (n > kIndexCap)
        throw resource_error("slow sequence index exceeds cap");
    return binomial_ratio(prob.x, prob.r, n);
}

IterationTrace make_sqrt_trace(const SqrtProblem & prob, unsigned d, unsigned n, mpfr_prec_t prec)
{
    IterationTrace trace;
    trace.family = d == 1 ? "newton" : d == 2 ? "halley" : "householder";
    trace.order_d = d;
    trace.form = "iterate";
    const BigFloat reference = BigFloat::sqrt(prob.x, prec);
    Rational h = prob.r;
    trace.values.push_back(h);
    trace.errors.push_back(abs(BigFloat(h, prec) - reference));
    for (unsigned i = 0; i < n; i++) {
        h = householder_step(prob, d, h);
        trace.values.push_back(h);
        trace.errors.push_back(abs(BigFloat(h, prec) - reference));
    }
    return trace;
}

OrderEstimate convergence_order_estimate(const IterationTrace & trace, const BigFloat & reference)
{
    if (reference.is_zero())
        throw domain_error("order estimate needs a nonzero reference");
    const mpfr_prec_t prec = reference.precision();
    // relative errors make the log-ratio scale-invariant
    std::vector<BigFloat> errors;
    errors.reserve(trace.values.size());
    for (const Rational & v : trace.values)
        errors.push_back(abs(BigFloat(v, prec) - reference) / abs(reference));

    OrderEstimate out;
    // resolution floor: anything within 4 ulp of the reference counts as exact
    const BigFloat floor = BigFloat::pow2(-(prec - 2), 64);
    size_t usable = errors.size();
    for (size_t i = 0; i < errors.size(); i++) {
        if (errors[i] <= floor) {
            out.exact_at = i;
            usable = i;
            break;
        }
    }
    size_t decreasing = usable == 0 ? 0 : 1;
    while (decreasing < usable && errors[decreasing] < errors[decreasing - 1]
           && !errors[decreasing].is_zero())
        decreasing++;

    if (decreasing < 3 && !out.exact_at)
        throw domain_error("order estimate needs >= 3 iterates with strictly decreasing error");
    if (decreasing < 2)
        return out; // early-exact without a usable pair

    const BigFloat one(1l, prec);
    for (size_t i = decreasing - 1; i-- > 0;) {
        if (errors[i] < one && !errors[i].is_zero()) {
            out.estimate = BigFloat::log(errors[i + 1]) / BigFloat::log(errors[i]);
            out.pair_index = i;
            return out;
        }
    }
    if (!out.exact_at)
        throw domain_error("order estimate needs errors below 1");
    return out;
}

} // namespace chebroot
