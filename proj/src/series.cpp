#include "moduli/series.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace moduli::series {

namespace {
const Rational kZero(0);

std::string term_str(const Rational& c, int k) {
    if (k == 0)
        return c.get_str();
    std::string t = (k == 1) ? "t" : "t^" + std::to_string(k);
    return c.get_str() + "*" + t;
}
}  // namespace

RationalPoly::RationalPoly(const Rational& constant) {
    if (constant != 0)
        coeffs_.push_back(constant);
}

RationalPoly::RationalPoly(long constant) : RationalPoly(Rational(constant)) {}

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

RationalPoly RationalPoly::monomial(int degree, const Rational& c) {
    if (degree < 0)
        throw std::invalid_argument("monomial degree must be nonnegative");
    if (c == 0)
        return RationalPoly();
    std::vector<Rational> v(degree + 1, kZero);
    v.back() = c;
    RationalPoly p;
    p.coeffs_ = std::move(v);
    return p;
}

void RationalPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

const Rational& RationalPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size()))
        return kZero;
    return coeffs_[k];
}

Rational RationalPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

RationalPoly RationalPoly::operator-() const {
    RationalPoly r(*this);
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size(), kZero);
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size(), kZero);
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
    if (a.is_zero() || b.is_zero())
        return RationalPoly();
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return RationalPoly(std::move(out));
}

RationalPoly& RationalPoly::operator*=(const RationalPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

RationalPoly& RationalPoly::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_)
        c *= scalar;
    return *this;
}

std::string RationalPoly::str() const {
    if (is_zero())
        return "0";
    std::string out;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        if (k > 0)
            out += " + ";
        out += term_str(coeffs_[k], static_cast<int>(k));
    }
    return out;
}

std::string RationalPoly::pretty() const {
    if (is_zero())
        return "0";
    std::string out;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (c == 0)
            continue;
        if (!out.empty())
            out += " + ";
        if (k == 0) {
            out += c.get_str();
        } else {
            std::string t = (k == 1) ? "t" : "t^" + std::to_string(k);
            out += (c == 1) ? t : c.get_str() + "*" + t;
        }
    }
    return out;
}

RationalPoly RationalPoly::parse(const std::string& text) {
    std::vector<Rational> coeffs;
    auto put = [&coeffs](int k, const Rational& c) {
        if (k >= static_cast<int>(coeffs.size()))
            coeffs.resize(k + 1, kZero);
        coeffs[k] += c;
    };
    std::string term;
    std::stringstream ss(text);
    while (std::getline(ss, term, '+')) {
        // strip whitespace
        term.erase(std::remove_if(term.begin(), term.end(),
                                  [](unsigned char ch) { return std::isspace(ch); }),
                   term.end());
        if (term.empty())
            throw std::invalid_argument("empty term in polynomial: '" + text + "'");
        size_t star = term.find('*');
        std::string coef_part, power_part;
        if (star != std::string::npos) {
            coef_part = term.substr(0, star);
            power_part = term.substr(star + 1);
        } else if (term.find('t') != std::string::npos) {
            // bare "t" or "t^k", unit coefficient
            size_t tpos = term.find('t');
            coef_part = term.substr(0, tpos);
            if (coef_part.empty())
                coef_part = "1";
            else if (coef_part == "-")
                coef_part = "-1";
            power_part = term.substr(tpos);
        } else {
            coef_part = term;
        }
        int k = 0;
        if (!power_part.empty()) {
            if (power_part == "t")
                k = 1;
            else if (power_part.rfind("t^", 0) == 0)
                k = std::stoi(power_part.substr(2));
            else
                throw std::invalid_argument("bad power '" + power_part + "'");
        }
        put(k, parse_rational(coef_part));
    }
    return RationalPoly(std::move(coeffs));
}

bool dominates(const RationalPoly& q, const RationalPoly& p) {
    int top = std::max(q.degree(), p.degree());
    for (int k = 0; k <= top; ++k)
        if (q.coeff(k) < p.coeff(k))
            return false;
    return true;
}

RationalPoly poincare_dual(const RationalPoly& p, int dim) {
    if (dim < 0)
        throw std::invalid_argument("poincare_dual: negative dimension");
    if (p.degree() > dim)
        throw std::invalid_argument("poincare_dual: degree exceeds dimension");
    std::vector<Rational> out(dim + 1, Rational(0));
    for (int k = 0; k <= p.degree(); ++k)
        out[dim - k] = p.coeff(k);
    return RationalPoly(std::move(out));
}

RationalPoly gaussian_binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n)
        throw std::invalid_argument("gaussian_binomial: need 0 <= k <= n");
    // Pascal-type recurrence [n k] = [n-1 k] + q^(n-k) [n-1 k-1], with q = t^2.
    std::vector<std::vector<RationalPoly>> c(n + 1, std::vector<RationalPoly>(k + 1));
    for (int i = 0; i <= n; ++i) {
        int jmax = std::min(i, k);
        for (int j = 0; j <= jmax; ++j) {
            if (j == 0 || j == i)
                c[i][j] = RationalPoly::one();
            else
                c[i][j] = c[i - 1][j] + RationalPoly::monomial(2 * (i - j)) * c[i - 1][j - 1];
        }
    }
    return c[n][k];
}

TruncatedSeries::TruncatedSeries(int order) : order_(order) {
    if (order < 0)
        throw std::invalid_argument("series order must be nonnegative");
    coeffs_.assign(order + 1, kZero);
}

TruncatedSeries::TruncatedSeries(const RationalPoly& p, int order) : TruncatedSeries(order) {
    for (int k = 0; k <= std::min(order, p.degree()); ++k)
        coeffs_[k] = p.coeff(k);
}

const Rational& TruncatedSeries::coeff(int k) const {
    if (k < 0 || k > order_)
        return kZero;
    return coeffs_[k];
}

TruncatedSeries TruncatedSeries::truncate(int order) const {
    if (order > order_)
        throw std::invalid_argument("cannot extend a truncated series");
    TruncatedSeries out(order);
    std::copy(coeffs_.begin(), coeffs_.begin() + order + 1, out.coeffs_.begin());
    return out;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
    if (rhs.order_ < order_)
        *this = truncate(rhs.order_);
    for (int k = 0; k <= order_; ++k)
        coeffs_[k] += rhs.coeffs_[k];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
    if (rhs.order_ < order_)
        *this = truncate(rhs.order_);
    for (int k = 0; k <= order_; ++k)
        coeffs_[k] -= rhs.coeffs_[k];
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    int order = std::min(a.order_, b.order_);
    TruncatedSeries out(order);
    for (int i = 0; i <= order; ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (int j = 0; i + j <= order; ++j)
            out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return out;
}

std::string TruncatedSeries::str() const {
    std::string out;
    for (int k = 0; k <= order_; ++k) {
        if (k > 0)
            out += " + ";
        out += term_str(coeffs_[k], k);
    }
    out += " + O(t^" + std::to_string(order_ + 1) + ")";
    return out;
}

namespace {
// Multiplicative inverse of f as a series: requires f(0) != 0.
TruncatedSeries series_inverse(const RationalPoly& f, int order) {
    if (f.coeff(0) == 0)
        throw std::domain_error(
            "expand_ratio: denominator factor has zero constant term");
    TruncatedSeries inv(order);
    std::vector<Rational> g(order + 1, Rational(0));
    g[0] = 1 / f.coeff(0);
    for (int k = 1; k <= order; ++k) {
        Rational acc(0);
        int top = std::min(k, f.degree());
        for (int j = 1; j <= top; ++j)
            acc += f.coeff(j) * g[k - j];
        g[k] = -acc / f.coeff(0);
    }
    RationalPoly gp(std::move(g));
    return TruncatedSeries(gp, order);
}
}  // namespace

TruncatedSeries expand_ratio(const RationalPoly& num,
                             const std::vector<RationalPoly>& denom_factors,
                             int order) {
    TruncatedSeries acc(num, order);
    for (const auto& f : denom_factors)
        acc = acc * series_inverse(f, order);
    return acc;
}

}  // namespace moduli::series
