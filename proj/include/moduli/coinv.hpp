#ifndef MODULI_COINV_HPP
#define MODULI_COINV_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "moduli/liecat.hpp"
#include "moduli/perm.hpp"
#include "moduli/series.hpp"

namespace moduli::coinv {

// Exponent vector (a_0..a_{n-1}) of a monomial x_0^{a_0} ... x_{n-1}^{a_{n-1}}.
using Monomial = std::vector<int>;

// Plain element of Q[x_0..x_{n-1}], the input side of reduce().
class MultiPoly {
public:
    explicit MultiPoly(int n);
    static MultiPoly constant(int n, const Rational& c);
    static MultiPoly variable(int n, int i);
    static MultiPoly monomial(int n, Monomial m, const Rational& c = Rational(1));

    int vars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    MultiPoly& operator*=(const Rational& scalar);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    bool operator==(const MultiPoly&) const = default;

private:
    void drop_zeros();
    int n_;
    std::map<Monomial, Rational> terms_;
};

/*
 * Element of the coinvariant algebra Q[x_0..x_{n-1}] / (symmetric
 * polynomials) in Artin normal form: every stored exponent vector satisfies
 * a_i <= n-1-i. Algebraic degree d corresponds to topological degree 2d.
 */
class CoinvariantElement {
public:
    explicit CoinvariantElement(int n) : n_(n) {}

    int vars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    Rational coeff(const Monomial& m) const;

    CoinvariantElement& operator+=(const CoinvariantElement& rhs);
    CoinvariantElement& operator-=(const CoinvariantElement& rhs);
    CoinvariantElement& operator*=(const Rational& scalar);
    friend CoinvariantElement operator+(CoinvariantElement a, const CoinvariantElement& b) { return a += b; }
    friend CoinvariantElement operator-(CoinvariantElement a, const CoinvariantElement& b) { return a -= b; }
    // multiply in the quotient ring (product is reduced to normal form)
    friend CoinvariantElement operator*(const CoinvariantElement& a, const CoinvariantElement& b);
    bool operator==(const CoinvariantElement&) const = default;

    MultiPoly lift() const;

private:
    friend CoinvariantElement reduce(const MultiPoly& p);
    int n_;
    std::map<Monomial, Rational> terms_;
};

// All Artin basis exponent vectors with sum(a) = algebraic_degree.
std::vector<Monomial> artin_basis(int n, int algebraic_degree);
// Dimension of each algebraic degree, 0..n(n-1)/2.
std::vector<int> artin_dims(int n);

// Normal form of p modulo the symmetric-polynomial ideal. Rewrites any
// x_i^{n-i} (0-based) through the complete homogeneous relation
// h_{n-i}(x_0,..,x_i) = 0, whose lead term that power is.
CoinvariantElement reduce(const MultiPoly& p);

// x_i -> x_{w(i)} followed by reduction; a degree-preserving automorphism.
CoinvariantElement permute(const Perm& w, const CoinvariantElement& e);

// Trace of a fixed group element on each graded piece of some graded
// representation, indexed by topological degree.
struct GradedCharacter {
    Perm element;
    std::vector<Rational> traces;

    RationalPoly poly() const { return RationalPoly(traces); }
};

// A graded representation of S_n described by its character map.
using CharacterFamily = std::function<GradedCharacter(const Perm&)>;

// Trace of w acting on the coinvariant algebra (topological degrees 0,2,..).
GradedCharacter coinvariant_character(const Perm& w);
CharacterFamily coinvariant_family(int n);

// Trace of w on the exterior powers of the reflection representation of
// dimension n-1, from det(1 + s rho(w)); Lambda^k sits in degree k.
GradedCharacter exterior_character(const Perm& w, int n);
CharacterFamily exterior_family(int n);

// Dimension per total degree of the subgroup invariants in the tensor
// product of the factor representations, by character averaging:
// (1/|H|) sum_h prod_f chi_f(h). The subgroup list must be closed under
// composition; averages that fail to be nonnegative integers throw
// std::logic_error (they signal a corrupted character computation).
RationalPoly invariant_series(const std::vector<Perm>& subgroup,
                              const std::vector<CharacterFamily>& factors);

struct MixingTerm {
    liecat::TorsionPoint orbit_representative;
    int orbit_size = 0;
    int stabilizer_order = 0;
    RationalPoly term;
};

// P_t of the mixing space G/T x_W (T x T_2): one invariant series per
// 2-torsion Weyl orbit, restricted to the orbit stabilizer.
std::vector<MixingTerm> pt_A_breakdown(const liecat::GroupId& g);
RationalPoly pt_A(const liecat::GroupId& g);

}  // namespace moduli::coinv

#endif
