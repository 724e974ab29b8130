#include "moduli/gysin.hpp"

#include <sstream>
#include <stdexcept>

#include "moduli/coinv.hpp"

namespace moduli::gysin {

namespace {

// Fraction-free (Bareiss) elimination over the integers; exact rank.
int integer_matrix_rank(std::vector<std::vector<mpz_class>> m) {
    if (m.empty() || m[0].empty())
        return 0;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int rank = 0;
    mpz_class prev(1);
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r) {
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0)
            continue;
        std::swap(m[rank], m[pivot]);
        for (int r = rank + 1; r < rows; ++r) {
            for (int c = col + 1; c < cols; ++c)
                m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
            m[r][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

int rational_matrix_rank(const std::vector<std::vector<Rational>>& m) {
    std::vector<std::vector<mpz_class>> scaled;
    scaled.reserve(m.size());
    for (const auto& row : m) {
        mpz_class lcm(1);
        for (const auto& x : row)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
        std::vector<mpz_class> out;
        out.reserve(row.size());
        for (const auto& x : row)
            out.push_back(x.get_num() * (lcm / x.get_den()));
        scaled.push_back(std::move(out));
    }
    return integer_matrix_rank(std::move(scaled));
}

}  // namespace

LinearForm LinearForm::parse(const std::string& csv) {
    LinearForm form;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        form.coefficients.push_back(parse_rational(item));
    if (form.coefficients.empty())
        throw std::invalid_argument("empty linear form");
    return form;
}

std::string LinearForm::str() const {
    std::string out;
    for (size_t i = 0; i < coefficients.size(); ++i) {
        if (i)
            out += ",";
        out += coefficients[i].get_str();
    }
    return out;
}

bool LinearForm::is_zero() const {
    for (const auto& c : coefficients)
        if (c != 0)
            return false;
    return true;
}

int SpectralPage::dim(int p, int q) const {
    auto it = dims.find({p, q});
    return it == dims.end() ? 0 : it->second;
}

int SpectralPage::rank(int p) const {
    auto it = differential_ranks.find(p);
    return it == differential_ranks.end() ? 0 : it->second;
}

int SpectralPage::e3_dim(int p, int q) const {
    if (q == 1)
        return dim(p, 1) - rank(p);
    return dim(p, 0) - rank(p - 2);
}

std::vector<int> mult_ranks(int n, const LinearForm& form) {
    if (form.vars() != n)
        throw std::invalid_argument("mult_ranks: form has wrong variable count");
    coinv::MultiPoly ell(n);
    for (int i = 0; i < n; ++i) {
        if (form.coefficients[i] != 0) {
            coinv::MultiPoly xi = coinv::MultiPoly::variable(n, i);
            xi *= form.coefficients[i];
            ell += xi;
        }
    }
    const int top = n * (n - 1) / 2;
    std::vector<int> ranks;
    for (int d = 0; d + 1 <= top; ++d) {
        auto source = coinv::artin_basis(n, d);
        auto target = coinv::artin_basis(n, d + 1);
        // columns = images of source basis monomials, rows = target basis
        std::vector<std::vector<Rational>> matrix(
            target.size(), std::vector<Rational>(source.size(), Rational(0)));
        for (size_t j = 0; j < source.size(); ++j) {
            auto image = coinv::reduce(ell * coinv::MultiPoly::monomial(n, source[j]));
            for (size_t i = 0; i < target.size(); ++i)
                matrix[i][j] = image.coeff(target[i]);
        }
        ranks.push_back(rational_matrix_rank(matrix));
    }
    return ranks;
}

SpectralPage bundle_page(int n, const LinearForm& form) {
    SpectralPage page;
    auto dims = coinv::artin_dims(n);
    auto ranks = mult_ranks(n, form);
    for (size_t d = 0; d < dims.size(); ++d) {
        page.dims[{2 * static_cast<int>(d), 0}] = dims[d];
        page.dims[{2 * static_cast<int>(d), 1}] = dims[d];
    }
    for (size_t d = 0; d < ranks.size(); ++d)
        page.differential_ranks[2 * static_cast<int>(d)] = ranks[d];
    return page;
}

RationalPoly circle_bundle_total_space(int n, const LinearForm& form) {
    SpectralPage page = bundle_page(n, form);
    const int top = n * (n - 1);  // topological dimension of the flag variety
    RationalPoly total;
    for (int p = 0; p <= top; p += 2) {
        int coker = page.e3_dim(p, 0);
        int ker = page.e3_dim(p, 1);
        if (coker < 0 || ker < 0)
            throw std::logic_error("circle_bundle_total_space: negative E3 entry");
        if (coker > 0)
            total += RationalPoly::monomial(p, Rational(coker));
        if (ker > 0)
            total += RationalPoly::monomial(p + 1, Rational(ker));
    }
    return total;
}

RationalPoly pair_upper_bound() {
    LinearForm chern = LinearForm::parse("-1,1,0");
    RationalPoly y = circle_bundle_total_space(3, chern);
    RationalPoly circle = RationalPoly::one() + RationalPoly::monomial(1);
    return series::poincare_dual(y * circle, 9);
}

}  // namespace moduli::gysin
