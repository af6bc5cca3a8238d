#include "chebroot/chebyshev.hpp"

#include <array>
#include <mutex>

namespace chebroot {

const char * cheb_kind_name(ChebKind kind)
{
    switch (kind) {
        case ChebKind::FirstT: return "T";
        case ChebKind::SecondU: return "U";
        case ChebKind::ThirdV: return "V";
        case ChebKind::FourthW: return "W";
    }
    return "?";
}

namespace {

Poly degree_one_seed(ChebKind kind)
{
    switch (kind) {
        case ChebKind::FirstT: return Poly(std::vector<BigInt>{0, 1});
        case ChebKind::SecondU: return Poly(std::vector<BigInt>{0, 2});
        case ChebKind::ThirdV: return Poly(std::vector<BigInt>{-1, 2});
        case ChebKind::FourthW: return Poly(std::vector<BigInt>{1, 2});
    }
    return Poly();
}

Rational seed_value(ChebKind kind, const Rational & X)
{
    switch (kind) {
        case ChebKind::FirstT: return X;
        case ChebKind::SecondU: return Rational(2) * X;
        case ChebKind::ThirdV: return Rational(2) * X - Rational(1);
        case ChebKind::FourthW: return Rational(2) * X + Rational(1);
    }
    return Rational(0);
}

std::mutex g_table_mutex;
std::array<std::vector<Poly>, 4> g_tables;

} // namespace

Poly cheb_poly(ChebKind kind, unsigned k)
{
    std::lock_guard<std::mutex> lock(g_table_mutex);
    auto & table = g_tables[static_cast<size_t>(kind)];
    if (table.empty()) {
        table.push_back(Poly::constant(1));
        table.push_back(degree_one_seed(kind));
    }
    const Poly two_x(std::vector<BigInt>{0, 2});
    while (table.size() <= k)
        table.push_back(two_x * table[table.size() - 1] - table[table.size() - 2]);
    return table[k];
}

std::vector<BigInt> cheb_coeffs(ChebKind kind, unsigned k) { return cheb_poly(kind, k).coeffs(); }

Rational cheb_eval(ChebKind kind, unsigned k, const Rational & X)
{
    if (k == 0)
        return Rational(1);
    Rational prev(1);
    Rational cur = seed_value(kind, X);
    const Rational two_x = Rational(2) * X;
    for (unsigned i = 1; i < k; i++) {
        Rational next = two_x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Rational eval_T_pow2(unsigned j, const Rational & X)
{
    Rational t = X;
    for (unsigned i = 0; i < j; i++)
        t = Rational(2) * t * t - Rational(1);
    return t;
}

namespace {

BigInt two_pow(unsigned long e) { return bigint_pow(BigInt(2), e); }

long checked_pow_long(long base, long e, long cap)
{
    long v = 1;
    for (long i = 0; i < e; i++) {
        v *= base;
        if (v > cap)
            throw domain_error("identity parameters exceed degree cap");
    }
    return v;
}

void require(bool ok, const char * msg)
{
    if (!ok)
        throw domain_error(msg);
}

Poly poly_T(unsigned k) { return cheb_poly(ChebKind::FirstT, k); }
Poly poly_U(unsigned k) { return cheb_poly(ChebKind::SecondU, k); }
Poly poly_V(unsigned k) { return cheb_poly(ChebKind::ThirdV, k); }
Poly poly_W(unsigned k) { return cheb_poly(ChebKind::FourthW, k); }

// U with index -1 is the zero polynomial (empty recurrence antecedent).
Poly poly_U_or_zero(long k) { return k < 0 ? Poly() : poly_U(static_cast<unsigned>(k)); }

bool check_prod_tt(long n, long m)
{
    const Poly lhs = BigInt(2) * (poly_T(n) * poly_T(m));
    return lhs == poly_T(n + m) + poly_T(std::abs(n - m));
}

bool check_double_t(long j)
{
    const Poly tj = poly_T(1l << j);
    return poly_T(1l << (j + 1)) == BigInt(2) * (tj * tj) - Poly::constant(1);
}

bool check_lemma1(long N)
{
    // suffix[j] = prod_{k=j}^{N-1} T_{2^k}; suffix[N] = 1.
    std::vector<Poly> suffix(N + 1, Poly::constant(1));
    for (long j = N - 1; j >= 0; j--)
        suffix[j] = poly_T(1l << j) * suffix[j + 1];
    Poly rhs = two_pow(N) * (Poly::x() * suffix[0]);
    for (long j = 1; j <= N; j++)
        rhs = rhs - two_pow(N - j) * suffix[j];
    return poly_T(1l << N) == rhs;
}

bool check_lemma2(long N)
{
    Poly prod = Poly::constant(1);
    for (long i = 0; i < N; i++) {
        const Poly t = poly_T(1l << i);
        prod = prod * (t * t);
    }
    const Poly x2m1(std::vector<BigInt>{-1, 0, 1});
    const Poly t_top = poly_T(1l << N);
    const Poly lhs = t_top * t_top - bigint_pow(BigInt(4), N) * (x2m1 * prod);
    return lhs == Poly::constant(1);
}

bool check_u_split(long n)
{
    return poly_U(2 * n - 1) == BigInt(2) * (poly_T(n) * poly_U(n - 1));
}

bool check_halley(long n, bool first_form)
{
    Poly plus = Poly::constant(1);
    Poly minus = Poly::constant(1);
    long idx = 1;
    for (long i = 1; i <= n; i++) {
        const Poly t2 = BigInt(2) * poly_T(idx);
        const Poly a = t2 + Poly::constant(1);
        const Poly b = t2 - Poly::constant(1);
        plus = plus * (a * a);
        minus = minus * (b * b);
        idx *= 3;
    }
    const Poly xm1(std::vector<BigInt>{-1, 1});
    const Poly xp1(std::vector<BigInt>{1, 1});
    const Poly t_top = BigInt(2) * poly_T(idx);
    if (first_form)
        return xm1 * plus + BigInt(3) * (xp1 * minus) == BigInt(2) * (t_top + Poly::constant(1));
    return BigInt(3) * (xm1 * plus) + xp1 * minus == BigInt(2) * (t_top - Poly::constant(1));
}

// Exact multi-point check at degree+1 rational sample points.
bool check_t_compose(long n, long m)
{
    const long degree = n * m;
    for (long i = 0; i <= degree; i++) {
        const Rational x(2 * i + 3, 2);
        const Rational inner = cheb_eval(ChebKind::FirstT, m, x);
        if (cheb_eval(ChebKind::FirstT, n, inner) != cheb_eval(ChebKind::FirstT, n * m, x))
            return false;
    }
    return true;
}

bool check_u_factor(long n, long m)
{
    const long degree = n * m - 1;
    for (long i = 0; i <= degree; i++) {
        const Rational x(2 * i + 3, 2);
        const Rational tn = cheb_eval(ChebKind::FirstT, n, x);
        const Rational lhs = cheb_eval(ChebKind::SecondU, n * m - 1, x);
        const Rational rhs =
            cheb_eval(ChebKind::SecondU, m - 1, tn) * cheb_eval(ChebKind::SecondU, n - 1, x);
        if (lhs != rhs)
            return false;
    }
    return true;
}

bool check_vw_gap(long p)
{
    return poly_V(p) - poly_W(p) == BigInt(-2) * poly_U_or_zero(p - 1);
}

bool check_tu_link(long d)
{
    return poly_T(d + 1) == Poly::x() * poly_U(d) - poly_U_or_zero(d - 1);
}

bool check_half_u(long p)
{
    // 2(1+z) U_{p-1/2}^2 = W_p^2 with U_{p-1/2}^2 = (T_{2p+1}-1)/(2(z^2-1)),
    // cleared of the half-order function: T_{2p+1} - 1 = (z-1) W_p^2.
    const Poly w = poly_W(p);
    const Poly zm1(std::vector<BigInt>{-1, 1});
    return poly_T(2 * p + 1) - Poly::constant(1) == zm1 * (w * w);
}

bool check_half_t(long p)
{
    // 2 T_{p+1/2}^2 = (1+z) V_p^2 with T_{p+1/2}^2 = (T_{2p+1}+1)/2,
    // cleared: T_{2p+1} + 1 = (z+1) V_p^2.
    const Poly v = poly_V(p);
    const Poly zp1(std::vector<BigInt>{1, 1});
    return poly_T(2 * p + 1) + Poly::constant(1) == zp1 * (v * v);
}

bool check_gsum(long d)
{
    Poly sum;
    for (long k = 0; k < d; k++)
        sum = sum + poly_U(k);
    if (d % 2 == 0)
        return sum * poly_V(d / 2) == poly_U(d / 2 - 1) * poly_U(d);
    return BigInt(2) * (sum * poly_T((d + 1) / 2)) == poly_W((d - 1) / 2) * poly_U(d);
}

struct TagInfo {
    IdentityTag tag;
    const char * name;
    size_t params;
};

constexpr std::array<TagInfo, 14> kTags = {{
    {IdentityTag::PROD_TT, "PROD_TT", 2},
    {IdentityTag::DOUBLE_T, "DOUBLE_T", 1},
    {IdentityTag::LEMMA1, "LEMMA1", 1},
    {IdentityTag::LEMMA2, "LEMMA2", 1},
    {IdentityTag::U_SPLIT, "U_SPLIT", 1},
    {IdentityTag::HALLEY_A, "HALLEY_A", 1},
    {IdentityTag::HALLEY_B, "HALLEY_B", 1},
    {IdentityTag::T_COMPOSE, "T_COMPOSE", 2},
    {IdentityTag::U_FACTOR, "U_FACTOR", 2},
    {IdentityTag::VW_GAP, "VW_GAP", 1},
    {IdentityTag::TU_LINK, "TU_LINK", 1},
    {IdentityTag::HALF_U, "HALF_U", 1},
    {IdentityTag::HALF_T, "HALF_T", 1},
    {IdentityTag::GSUM, "GSUM", 1},
}};

} // namespace

IdentityTag parse_identity_tag(const std::string & name)
{
    for (const auto & info : kTags)
        if (name == info.name)
            return info.tag;
    throw usage_error("unknown identity tag '" + name + "'");
}

const char * identity_tag_name(IdentityTag tag)
{
    for (const auto & info : kTags)
        if (info.tag == tag)
            return info.name;
    return "?";
}

size_t identity_param_count(IdentityTag tag)
{
    for (const auto & info : kTags)
        if (info.tag == tag)
            return info.params;
    return 0;
}

bool verify_identity(IdentityTag tag, const std::vector<long> & params, long degree_cap)
{
    require(degree_cap >= 1, "degree cap must be positive");
    if (params.size() != identity_param_count(tag))
        throw usage_error(std::string("identity ") + identity_tag_name(tag) + " expects "
                          + std::to_string(identity_param_count(tag)) + " parameter(s)");
    const long a = params[0];
    const long b = params.size() > 1 ? params[1] : 0;
    switch (tag) {
        case IdentityTag::PROD_TT:
            require(a >= 0 && b >= 0 && a + b <= degree_cap, "indices exceed degree cap");
            return check_prod_tt(a, b);
        case IdentityTag::DOUBLE_T:
            require(a >= 0, "power index must be non-negative");
            checked_pow_long(2, a + 1, degree_cap);
            return check_double_t(a);
        case IdentityTag::LEMMA1:
            require(a >= 1, "lemma requires N >= 1");
            checked_pow_long(2, a, degree_cap);
            return check_lemma1(a);
        case IdentityTag::LEMMA2:
            require(a >= 0, "lemma requires N >= 0");
            checked_pow_long(2, a + 1, degree_cap);
            return check_lemma2(a);
        case IdentityTag::U_SPLIT:
            require(a >= 1 && 2 * a - 1 <= degree_cap, "indices exceed degree cap");
            return check_u_split(a);
        case IdentityTag::HALLEY_A:
        case IdentityTag::HALLEY_B:
            require(a >= 0, "index must be non-negative");
            checked_pow_long(3, a, degree_cap);
            return check_halley(a, tag == IdentityTag::HALLEY_A);
        case IdentityTag::T_COMPOSE:
            require(a >= 1 && b >= 1 && a * b <= degree_cap, "indices exceed degree cap");
            return check_t_compose(a, b);
        case IdentityTag::U_FACTOR:
            require(a >= 1 && b >= 1 && a * b <= degree_cap, "indices exceed degree cap");
            return check_u_factor(a, b);
        case IdentityTag::VW_GAP:
            require(a >= 0 && a <= degree_cap, "index exceeds degree cap");
            return check_vw_gap(a);
        case IdentityTag::TU_LINK:
            require(a >= 0 && a + 1 <= degree_cap, "index exceeds degree cap");
            return check_tu_link(a);
        case IdentityTag::HALF_U:
            require(a >= 0 && 2 * a + 1 <= degree_cap, "index exceeds degree cap");
            return check_half_u(a);
        case IdentityTag::HALF_T:
            require(a >= 0 && 2 * a + 1 <= degree_cap, "index exceeds degree cap");
            return check_half_t(a);
        case IdentityTag::GSUM:
            require(a >= 1 && (3 * a + 1) / 2 <= degree_cap, "index exceeds degree cap");
            return check_gsum(a);
    }
    throw usage_error("unknown identity tag");
}

std::string SuiteItem::key() const
{
    std::string out = identity_tag_name(tag);
    for (const long p : params)
        out += " " + std::to_string(p);
    return out;
}

std::vector<SuiteItem> default_identity_suite(long max_index)
{
    std::vector<SuiteItem> items;
    auto add = [&](IdentityTag tag, std::vector<long> params, long cap) {
        items.push_back({tag, std::move(params), cap});
    };
    for (long n = 1; n * n <= max_index; n++)
        for (long m = n; n * m <= max_index; m++) {
            add(IdentityTag::PROD_TT, {n, m}, n + m);
            add(IdentityTag::T_COMPOSE, {n, m}, n * m);
            add(IdentityTag::U_FACTOR, {n, m}, n * m);
        }
    for (long j = 0; (1l << (j + 1)) <= max_index; j++)
        add(IdentityTag::DOUBLE_T, {j}, 1l << (j + 1));
    for (long N = 1; (1l << N) <= max_index; N++)
        add(IdentityTag::LEMMA1, {N}, 1l << N);
    for (long N = 0; (1l << (N + 1)) <= max_index; N++)
        add(IdentityTag::LEMMA2, {N}, 1l << (N + 1));
    for (long n = 1; 2 * n - 1 <= max_index; n++)
        add(IdentityTag::U_SPLIT, {n}, 2 * n - 1);
    for (long n = 0, pow3 = 1; pow3 <= max_index; n++, pow3 *= 3) {
        add(IdentityTag::HALLEY_A, {n}, max_index);
        add(IdentityTag::HALLEY_B, {n}, max_index);
    }
    for (long p = 0; p <= max_index; p++)
        add(IdentityTag::VW_GAP, {p}, max_index);
    for (long d = 0; d + 1 <= max_index; d++)
        add(IdentityTag::TU_LINK, {d}, max_index);
    for (long p = 0; 2 * p + 1 <= max_index; p++) {
        add(IdentityTag::HALF_U, {p}, max_index);
        add(IdentityTag::HALF_T, {p}, max_index);
    }
    for (long d = 1; d <= max_index; d++)
        add(IdentityTag::GSUM, {d}, (3 * d + 1) / 2);
    return items;
}

} // namespace chebroot
