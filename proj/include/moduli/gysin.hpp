#ifndef MODULI_GYSIN_HPP
#define MODULI_GYSIN_HPP

#include <map>
#include <string>
#include <vector>

#include "moduli/series.hpp"

namespace moduli::gysin {

// A linear form sum c_i x_i on the coinvariant algebra; the Chern class of
// the line bundle defining the C*-bundle over the flag variety.
struct LinearForm {
    std::vector<Rational> coefficients;

    static LinearForm zero(int n) { return LinearForm{std::vector<Rational>(n, Rational(0))}; }
    // Comma-separated coefficients, e.g. "-1,1,0" for x_1 - x_0.
    static LinearForm parse(const std::string& csv);
    std::string str() const;
    int vars() const { return static_cast<int>(coefficients.size()); }
    bool is_zero() const;
};

/*
 * Two-row spectral sequence of a C*-bundle over a base with even cohomology:
 * E_2^{p,q} = H^p(base) for q in {0,1}, the only differential
 * d_2: (p,1) -> (p+2,0) is cup product with the Chern class, and the page
 * collapses at E_3.
 */
struct SpectralPage {
    std::map<std::pair<int, int>, int> dims;  // (p, q), p even, q in {0,1}
    std::map<int, int> differential_ranks;    // p -> rank of d2 out of (p,1)

    int dim(int p, int q) const;
    int rank(int p) const;
    // E_3 = E_infinity entries after the single differential.
    int e3_dim(int p, int q) const;
};

// Rank of multiplication by the form from algebraic degree d to d+1 of the
// coinvariant algebra, for d = 0 .. n(n-1)/2 - 1. Exact arithmetic.
std::vector<int> mult_ranks(int n, const LinearForm& form);

// E_2 page and differential ranks of the C*-bundle with Chern class `form`.
SpectralPage bundle_page(int n, const LinearForm& form);

// P_t of the total space: cokernels on the base row plus kernels shifted by
// the fiber class.
RationalPoly circle_bundle_total_space(int n, const LinearForm& form);

// The Klein-bottle pair bound: Poincare duality at dimension 9 applied to
// P_t(Y) * (1+t) for Y the bundle with Chern class x_1 - x_0 over Fl_3.
RationalPoly pair_upper_bound();

}  // namespace moduli::gysin

#endif
