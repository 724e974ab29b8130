#include "moduli/liecat.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace moduli::liecat {

GroupId GroupId::u(int n) {
    if (n < 1)
        throw std::invalid_argument("U(n) requires n >= 1");
    return GroupId{Family::Unitary, n};
}

GroupId GroupId::su(int n) {
    if (n < 2)
        throw std::invalid_argument("SU(n) requires n >= 2");
    return GroupId{Family::SpecialUnitary, n};
}

GroupId GroupId::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')')
            s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    auto digits = [](const std::string& d) {
        if (d.empty() || !std::all_of(d.begin(), d.end(), [](unsigned char c) { return std::isdigit(c); }))
            throw std::invalid_argument("bad group rank");
        return std::stoi(d);
    };
    try {
        if (s.rfind("su", 0) == 0)
            return su(digits(s.substr(2)));
        if (s.rfind("u", 0) == 0)
            return u(digits(s.substr(1)));
    } catch (const std::invalid_argument&) {
        // fall through to the common error below
    }
    throw std::invalid_argument("unknown group '" + text + "' (expected e.g. \"su3\" or \"u3\")");
}

std::string GroupId::name() const {
    return (family == Family::Unitary ? "u" : "su") + std::to_string(n);
}

RationalPoly pt_group(const GroupId& g) {
    RationalPoly p = RationalPoly::one();
    int start = g.family == Family::Unitary ? 1 : 2;
    for (int i = start; i <= g.n; ++i)
        p *= RationalPoly::one() + RationalPoly::monomial(2 * i - 1);
    return p;
}

TruncatedSeries pt_classifying(const GroupId& g, int order) {
    std::vector<RationalPoly> factors;
    int start = g.family == Family::Unitary ? 1 : 2;
    for (int i = start; i <= g.n; ++i)
        factors.push_back(RationalPoly::one() - RationalPoly::monomial(2 * i));
    return series::expand_ratio(RationalPoly::one(), factors, order);
}

RationalPoly pt_full_flag(int n) {
    if (n < 1)
        throw std::invalid_argument("pt_full_flag requires n >= 1");
    RationalPoly p = RationalPoly::one();
    for (int i = 2; i <= n; ++i) {
        std::vector<Rational> truncated_geo(2 * (i - 1) + 1, Rational(0));
        for (int d = 0; d <= i - 1; ++d)
            truncated_geo[2 * d] = 1;
        p *= RationalPoly(std::move(truncated_geo));
    }
    return p;
}

RationalPoly pt_torus(int rank) {
    if (rank < 0)
        throw std::invalid_argument("pt_torus requires rank >= 0");
    RationalPoly p = RationalPoly::one();
    RationalPoly circle = RationalPoly::one() + RationalPoly::monomial(1);
    for (int i = 0; i < rank; ++i)
        p *= circle;
    return p;
}

std::vector<std::pair<std::string, RationalPoly>> rp2_components(const GroupId& g) {
    std::vector<std::pair<std::string, RationalPoly>> out;
    int step = g.family == Family::Unitary ? 1 : 2;
    for (int k = 0; k <= g.n; k += step)
        out.emplace_back("Gr" + std::to_string(k), series::gaussian_binomial(g.n, k));
    return out;
}

FormalityReport rp2_formality_check(const GroupId& g) {
    FormalityReport report;
    report.components = rp2_components(g);
    report.odd_cohomology_vanishes = true;
    for (const auto& [label, poly] : report.components)
        for (int d = 1; d <= poly.degree(); d += 2)
            if (poly.coeff(d) != 0)
                report.odd_cohomology_vanishes = false;
    report.expected_root_count = 1L << g.rank();
    report.torus_root_count = 0;
    for (const auto& orbit : t2_orbits(g))
        report.torus_root_count += orbit.orbit_size;
    report.pass = report.odd_cohomology_vanishes &&
                  report.torus_root_count == report.expected_root_count;
    return report;
}

std::vector<WeylOrbit> t2_orbits(const GroupId& g) {
    // Sign patterns with m entries equal to -1 form one S_n-orbit; for SU(n)
    // the determinant-one condition keeps only even m.
    std::vector<WeylOrbit> out;
    int step = g.family == Family::Unitary ? 1 : 2;
    for (int m = 0; m <= g.n; m += step) {
        WeylOrbit orbit;
        orbit.representative.assign(g.n, 1);
        for (int i = 0; i < m; ++i)
            orbit.representative[i] = -1;
        long binom = 1;
        for (int i = 0; i < m; ++i)
            binom = binom * (g.n - i) / (i + 1);
        orbit.orbit_size = static_cast<int>(binom);
        long stab = 1;
        for (int i = 2; i <= m; ++i)
            stab *= i;
        for (int i = 2; i <= g.n - m; ++i)
            stab *= i;
        orbit.stabilizer_order = static_cast<int>(stab);
        // S_m x S_{n-m}, generated by adjacent transpositions inside each block
        for (int i = 0; i + 1 < g.n; ++i) {
            if (i + 1 == m)
                continue;  // crosses the block boundary
            Perm t = identity_perm(g.n);
            std::swap(t[i], t[i + 1]);
            orbit.stabilizer_generators.push_back(std::move(t));
        }
        out.push_back(std::move(orbit));
    }
    return out;
}

}  // namespace moduli::liecat
