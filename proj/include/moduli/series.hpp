#ifndef MODULI_SERIES_HPP
#define MODULI_SERIES_HPP

#include <string>
#include <vector>

#include "moduli/rational.hpp"

namespace moduli::series {

/*
 * Exact univariate polynomial in the formal variable t with rational
 * coefficients, stored densely by degree. The zero polynomial has an empty
 * coefficient vector and degree() == -1; otherwise the trailing coefficient
 * is nonzero. Values are immutable in practice: all operations return new
 * polynomials.
 */
class RationalPoly {
public:
    RationalPoly() = default;
    explicit RationalPoly(const Rational& constant);
    explicit RationalPoly(long constant);
    explicit RationalPoly(std::vector<Rational> coeffs);

    static RationalPoly one() { return RationalPoly(1L); }
    // c * t^degree
    static RationalPoly monomial(int degree, const Rational& c = Rational(1));

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    // Coefficient of t^k; zero outside the stored range.
    const Rational& coeff(int k) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational eval(const Rational& x) const;
    // Sum of all coefficients, i.e. eval(1). For Poincare polynomials this
    // is the total dimension.
    Rational total() const { return eval(Rational(1)); }

    RationalPoly operator-() const;
    RationalPoly& operator+=(const RationalPoly& rhs);
    RationalPoly& operator-=(const RationalPoly& rhs);
    RationalPoly& operator*=(const RationalPoly& rhs);
    RationalPoly& operator*=(const Rational& scalar);

    friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
    friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
    friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
    friend RationalPoly operator*(const Rational& s, RationalPoly p) { return p *= s; }

    bool operator==(const RationalPoly& rhs) const { return coeffs_ == rhs.coeffs_; }
    bool operator!=(const RationalPoly& rhs) const { return !(*this == rhs); }

    // Canonical rendering "c0 + c1*t + c2*t^2 + ..." listing every
    // coefficient up to the degree, rationals as "p/q". parse() reads the
    // same format back (zero terms may be omitted on input).
    std::string str() const;
    // Human form: zero terms skipped, unit coefficients folded into powers.
    std::string pretty() const;
    static RationalPoly parse(const std::string& text);

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

// True iff q - p has no negative coefficients (the dominance partial order).
bool dominates(const RationalPoly& q, const RationalPoly& p);

// Coefficient reversal into degree dim: t^dim * p(1/t).
// Requires degree(p) <= dim.
RationalPoly poincare_dual(const RationalPoly& p, int dim);

// Poincare polynomial of the Grassmannian Gr_k(C^n): the q-binomial
// coefficient [n choose k] evaluated at q = t^2. Requires 0 <= k <= n.
RationalPoly gaussian_binomial(int n, int k);

/*
 * Power series truncated at a fixed order N: coefficients of t^0..t^N are
 * exact, everything above is discarded. Binary operations on series of
 * different orders truncate to the smaller order.
 */
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order);
    TruncatedSeries(const RationalPoly& p, int order);

    int order() const { return order_; }
    const Rational& coeff(int k) const;

    // Truncation of this series to a lower (or equal) order.
    TruncatedSeries truncate(int order) const;
    // The polynomial formed by the stored coefficients.
    RationalPoly poly() const { return RationalPoly(coeffs_); }

    TruncatedSeries& operator+=(const TruncatedSeries& rhs);
    TruncatedSeries& operator-=(const TruncatedSeries& rhs);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

    bool operator==(const TruncatedSeries& rhs) const = default;

    std::string str() const;

private:
    int order_ = 0;
    std::vector<Rational> coeffs_;  // size order_ + 1
};

// Truncated expansion of num / prod(denom_factors) to the given order.
// Every factor must have a nonzero constant term; otherwise the factor is
// not invertible as a power series and the call throws std::domain_error.
TruncatedSeries expand_ratio(const RationalPoly& num,
                             const std::vector<RationalPoly>& denom_factors,
                             int order);

}  // namespace moduli::series

namespace moduli {
using series::RationalPoly;
using series::TruncatedSeries;
}  // namespace moduli

#endif
