#ifndef MODULI_LIECAT_HPP
#define MODULI_LIECAT_HPP

#include <string>
#include <utility>
#include <vector>

#include "moduli/perm.hpp"
#include "moduli/series.hpp"

namespace moduli::liecat {

enum class Family { Unitary, SpecialUnitary };

// U(n) or SU(n); the only families with concrete data here.
struct GroupId {
    Family family;
    int n;  // matrix size; SU requires n >= 2

    static GroupId u(int n);
    static GroupId su(int n);
    // Accepts "u3", "su3", "U(3)", "SU(3)" style names.
    static GroupId parse(const std::string& text);

    int rank() const { return family == Family::Unitary ? n : n - 1; }
    std::string name() const;
    bool operator==(const GroupId&) const = default;
};

// Diagonal of a 2-torsion torus element, entries +1/-1.
// For SU(n) the product of signs is +1.
using TorsionPoint = std::vector<int>;

struct WeylOrbit {
    TorsionPoint representative;
    int orbit_size = 0;
    int stabilizer_order = 0;
    std::vector<Perm> stabilizer_generators;
};

struct FormalityReport {
    bool pass = false;
    bool odd_cohomology_vanishes = false;
    long torus_root_count = 0;           // square roots of 1 in the maximal torus
    long expected_root_count = 0;        // 2^rank
    std::vector<std::pair<std::string, RationalPoly>> components;
};

// P_t of the group manifold: prod_{i=1..n} (1+t^{2i-1}) for U(n),
// the same product starting at i=2 for SU(n).
RationalPoly pt_group(const GroupId& g);

// P_t of the classifying space, truncated: 1 / prod (1 - t^{2i}).
TruncatedSeries pt_classifying(const GroupId& g, int order);

// P_t of the variety of full flags in C^n.
RationalPoly pt_full_flag(int n);

// (1+t)^rank.
RationalPoly pt_torus(int rank);

// Components of the involution variety { g | g^2 = 1 }: one Grassmannian
// Gr_k(C^n) per conjugacy class, k = 0..n for U(n) and k even for SU(n).
std::vector<std::pair<std::string, RationalPoly>> rp2_components(const GroupId& g);

// Checks H^odd = 0 on every component and counts torus square roots.
FormalityReport rp2_formality_check(const GroupId& g);

// All 2-torsion points of the diagonal torus grouped into S_n-orbits.
std::vector<WeylOrbit> t2_orbits(const GroupId& g);

}  // namespace moduli::liecat

#endif
