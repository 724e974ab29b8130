#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "moduli/series.hpp"

using namespace moduli;
using moduli::series::dominates;
using moduli::series::expand_ratio;
using moduli::series::gaussian_binomial;
using moduli::series::poincare_dual;

// ---------------------------------------------------------------------------
// Independent oracles. These deliberately avoid RationalPoly/TruncatedSeries
// arithmetic so they can vouch for it.
// ---------------------------------------------------------------------------
namespace oracle {

using Coeffs = std::vector<Rational>;

Coeffs convolve(const Coeffs& a, const Coeffs& b) {
    if (a.empty() || b.empty())
        return {};
    Coeffs out(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    while (!out.empty() && out.back() == 0)
        out.pop_back();
    return out;
}

// Coefficients 0..order of prod 1/(1 - t^k) for the given exponents, by
// multiplying explicit geometric series.
Coeffs geometric_product(const std::vector<int>& exponents, int order) {
    Coeffs acc(order + 1, Rational(0));
    acc[0] = 1;
    for (int k : exponents) {
        Coeffs geo(order + 1, Rational(0));
        for (int d = 0; d <= order; d += k)
            geo[d] = 1;
        Coeffs next(order + 1, Rational(0));
        for (int i = 0; i <= order; ++i)
            for (int j = 0; i + j <= order; ++j)
                next[i + j] += acc[i] * geo[j];
        acc = std::move(next);
    }
    return acc;
}

// Solves s * denom = num coefficient by coefficient (series long division).
Coeffs long_division(const Coeffs& num, const Coeffs& denom, int order) {
    REQUIRE(!denom.empty());
    REQUIRE(denom[0] != 0);
    Coeffs s(order + 1, Rational(0));
    for (int k = 0; k <= order; ++k) {
        Rational acc = k < static_cast<int>(num.size()) ? num[k] : Rational(0);
        for (int j = 1; j <= k && j < static_cast<int>(denom.size()); ++j)
            acc -= denom[j] * s[k - j];
        s[k] = acc / denom[0];
    }
    return s;
}

Coeffs reverse_into(const Coeffs& p, int dim) {
    Coeffs out(dim + 1, Rational(0));
    for (size_t k = 0; k < p.size(); ++k)
        out[dim - k] = p[k];
    while (!out.empty() && out.back() == 0)
        out.pop_back();
    return out;
}

// q-binomial [n choose k]_q via subset enumeration: sum over k-subsets S of
// {0..n-1} of q^(sum S - k(k-1)/2). Read in t with q = t^2.
Coeffs qbinomial_subsets(int n, int k) {
    Coeffs out(2 * k * (n - k) + 1, Rational(0));
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i)
        pick[i] = i;
    while (true) {
        int w = 0;
        for (int i = 0; i < k; ++i)
            w += pick[i] - i;
        out[2 * w] += 1;
        int i = k - 1;
        while (i >= 0 && pick[i] == n - k + i)
            --i;
        if (i < 0)
            break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j)
            pick[j] = pick[j - 1] + 1;
    }
    while (!out.empty() && out.back() == 0)
        out.pop_back();
    return out;
}

}  // namespace oracle

namespace {

RationalPoly poly(const std::vector<long>& c) {
    std::vector<Rational> v;
    for (long x : c)
        v.emplace_back(x);
    return RationalPoly(std::move(v));
}

RationalPoly random_poly(std::mt19937& rng, int max_degree = 8) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    int d = deg(rng);
    std::vector<Rational> c;
    for (int k = 0; k <= d; ++k)
        c.push_back(make_rational(num(rng), den(rng)));
    return RationalPoly(std::move(c));
}

RationalPoly nonneg_poly(std::mt19937& rng, int max_degree = 8) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<long> num(0, 6);
    int d = deg(rng);
    std::vector<Rational> c;
    for (int k = 0; k <= d; ++k)
        c.emplace_back(num(rng));
    return RationalPoly(std::move(c));
}

}  // namespace

TEST_CASE("product of cohomology factors expands exactly") {
    RationalPoly a = poly({1, 0, 0, 1});  // 1 + t^3
    RationalPoly b = poly({1, 0, 0, 0, 0, 1});  // 1 + t^5
    CHECK(a * b == poly({1, 0, 0, 1, 0, 1, 0, 0, 1}));

    std::mt19937 rng(7);
    RationalPoly p = random_poly(rng);
    CHECK((p * RationalPoly()).is_zero());

    RationalPoly u = poly({1, 0, 1, 0, 1});           // 1 + t^2 + t^4
    RationalPoly v = poly({0, 0, 0, 1, 2, 1});        // t^3 + 2t^4 + t^5
    RationalPoly expect = poly({0, 0, 0, 1, 2, 2, 2, 2, 2, 1});
    CHECK(u * v == expect);
    // convolution oracle agrees
    auto conv = oracle::convolve(u.coeffs(), v.coeffs());
    CHECK(RationalPoly(conv) == expect);
}

TEST_CASE("dominance order on coefficients") {
    RationalPoly q = poly({1, 1}) * poly({0, 1, 0, 1, 0, 0, 1, 0, 1});
    RationalPoly p = poly({0, 1, 1});
    CHECK(dominates(q, p));
    CHECK(dominates(p, p));
    CHECK_FALSE(dominates(poly({1}), poly({0, 1})));
}

TEST_CASE("dominance is a partial order") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 150; ++trial) {
        RationalPoly a = random_poly(rng, 6);
        RationalPoly b = a + nonneg_poly(rng, 6);
        RationalPoly c = b + nonneg_poly(rng, 6);
        CHECK(dominates(a, a));                       // reflexive
        CHECK(dominates(b, a));
        CHECK(dominates(c, b));
        CHECK(dominates(c, a));                       // transitive
        if (dominates(a, b))
            CHECK(a == b);                            // antisymmetric
    }
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 120; ++trial) {
        RationalPoly a = random_poly(rng);
        RationalPoly b = random_poly(rng);
        RationalPoly c = random_poly(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a - a == RationalPoly());
        if (!a.is_zero() && !b.is_zero())
            CHECK((a * b).degree() == a.degree() + b.degree());
    }
}

TEST_CASE("expand_ratio matches geometric-series convolution oracle") {
    std::vector<RationalPoly> factors = {poly({1, 0, 0, 0, -1}), poly({1, 0, 0, 0, 0, 0, -1})};
    TruncatedSeries s = expand_ratio(RationalPoly::one(), factors, 12);
    auto expect = oracle::geometric_product({4, 6}, 12);
    for (int k = 0; k <= 12; ++k)
        CHECK(s.coeff(k) == expect[k]);
    // frozen: 1 + t^4 + t^6 + t^8 + t^10 + 2t^12
    CHECK(s.coeff(0) == 1);
    CHECK(s.coeff(4) == 1);
    CHECK(s.coeff(6) == 1);
    CHECK(s.coeff(8) == 1);
    CHECK(s.coeff(10) == 1);
    CHECK(s.coeff(12) == 2);
    CHECK(s.coeff(2) == 0);
}

TEST_CASE("expand_ratio with exact cancellation") {
    TruncatedSeries s = expand_ratio(poly({1, 0, 0, 0, -1}), {poly({1, 0, 0, 0, -1})}, 8);
    CHECK(s == TruncatedSeries(RationalPoly::one(), 8));
}

TEST_CASE("expand_ratio matches long division oracle") {
    RationalPoly num = poly({2, 0, 1, 0, 1});
    std::vector<RationalPoly> factors = {poly({1, 0, 0, 0, -1}), poly({1, 0, 0, 0, 0, 0, -1})};
    TruncatedSeries s = expand_ratio(num, factors, 6);
    RationalPoly denom = factors[0] * factors[1];
    auto div = oracle::long_division(num.coeffs(), denom.coeffs(), 6);
    for (int k = 0; k <= 6; ++k)
        CHECK(s.coeff(k) == div[k]);
    // oracle values: 2 + t^2 + 3t^4 + 3t^6
    CHECK(div[0] == 2);
    CHECK(div[1] == 0);
    CHECK(div[2] == 1);
    CHECK(div[3] == 0);
    CHECK(div[4] == 3);
    CHECK(div[5] == 0);
    CHECK(div[6] == 3);
}

TEST_CASE("expand_ratio rejects factors with zero constant term") {
    CHECK_THROWS_AS(expand_ratio(RationalPoly::one(), {poly({0, 1})}, 4), std::domain_error);
}

TEST_CASE("expand_ratio times its denominator returns the numerator") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 100; ++trial) {
        RationalPoly num = random_poly(rng, 5);
        std::vector<RationalPoly> factors;
        std::uniform_int_distribution<int> nf(1, 3);
        int count = nf(rng);
        for (int i = 0; i < count; ++i) {
            RationalPoly f = random_poly(rng, 4);
            if (f.coeff(0) == 0)
                f += RationalPoly::one();
            factors.push_back(f);
        }
        const int order = 10;
        TruncatedSeries s = expand_ratio(num, factors, order);
        TruncatedSeries back = s;
        for (const auto& f : factors)
            back = back * TruncatedSeries(f, order);
        CHECK(back == TruncatedSeries(num, order));
    }
}

TEST_CASE("series multiplication respects the smaller truncation order") {
    TruncatedSeries a(poly({1, 1, 1, 1, 1}), 10);
    TruncatedSeries b(poly({1, 1}), 4);
    CHECK((a * b).order() == 4);
    CHECK((a + b).order() == 4);
}

TEST_CASE("poincare_dual reverses into the manifold dimension") {
    RationalPoly pY = poly({1, 0, 1, 0, 0, 1, 0, 1});  // 1 + t^2 + t^5 + t^7
    RationalPoly circle = poly({1, 1});
    RationalPoly dual = poincare_dual(pY * circle, 9);
    CHECK(dual == circle * poly({0, 1, 0, 1, 0, 0, 1, 0, 1}));

    CHECK(poincare_dual(RationalPoly::one(), 0) == RationalPoly::one());
    CHECK(poincare_dual(poly({1, 1}), 3) == poly({0, 0, 1, 1}));
    auto rev = oracle::reverse_into({Rational(1), Rational(1)}, 3);
    CHECK(poincare_dual(poly({1, 1}), 3) == RationalPoly(rev));

    CHECK_THROWS_AS(poincare_dual(poly({1, 0, 1}), 1), std::invalid_argument);
}

TEST_CASE("poincare_dual is an involution") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        RationalPoly p = random_poly(rng, 7);
        int dim = p.degree() < 0 ? 3 : p.degree() + static_cast<int>(rng() % 4);
        CHECK(poincare_dual(poincare_dual(p, dim), dim) == p);
    }
}

TEST_CASE("gaussian_binomial gives Grassmannian Poincare polynomials") {
    CHECK(gaussian_binomial(3, 1) == poly({1, 0, 1, 0, 1}));
    CHECK(gaussian_binomial(5, 0) == RationalPoly::one());
    // brute-force subset enumeration oracle
    auto sub = oracle::qbinomial_subsets(4, 2);
    CHECK(gaussian_binomial(4, 2) == RationalPoly(sub));
    CHECK(gaussian_binomial(4, 2) == poly({1, 0, 1, 0, 2, 0, 1, 0, 1}));
}

TEST_CASE("gaussian_binomial symmetry and positivity") {
    std::mt19937 rng(43);
    for (int n = 0; n <= 9; ++n) {
        for (int k = 0; k <= n; ++k) {
            RationalPoly g = gaussian_binomial(n, k);
            CHECK(g == gaussian_binomial(n, n - k));
            for (int d = 0; d <= g.degree(); ++d)
                CHECK(g.coeff(d) >= 0);
            // palindromic: Grassmannians satisfy Poincare duality
            CHECK(g == poincare_dual(g, g.degree()));
        }
    }
    CHECK_THROWS_AS(gaussian_binomial(3, 4), std::invalid_argument);
    (void)rng;
}

TEST_CASE("canonical text round trip") {
    std::mt19937 rng(53);
    for (int trial = 0; trial < 100; ++trial) {
        RationalPoly p = random_poly(rng);
        CHECK(RationalPoly::parse(p.str()) == p);
    }
    CHECK(RationalPoly::parse("1 + 0*t + 0*t^2 + 2*t^3") == poly({1, 0, 0, 2}));
    CHECK(RationalPoly::parse("1/2 + -3/4*t") ==
          RationalPoly({Rational(1, 2), Rational(-3, 4)}));
    CHECK(RationalPoly::parse("t^2 + t") == poly({0, 1, 1}));
    CHECK(RationalPoly::parse("0") == RationalPoly());
    CHECK(poly({1, 0, 2}).str() == "1 + 0*t + 2*t^2");
    CHECK(poly({1, 0, 2}).pretty() == "1 + 2*t^2");
}

TEST_CASE("evaluation and totals") {
    RationalPoly p = poly({1, 3, 3, 1});
    CHECK(p.eval(Rational(1)) == 8);
    CHECK(p.eval(Rational(-1)) == 0);
    CHECK(p.total() == 8);
    CHECK(RationalPoly().total() == 0);
}
