#ifndef MODULI_PERM_HPP
#define MODULI_PERM_HPP

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

namespace moduli {

// A permutation of {0..n-1} stored as its image list: w maps i to w[i].
using Perm = std::vector<int>;

inline Perm identity_perm(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

// (a o b)(i) = a[b[i]]: apply b first.
inline Perm compose(const Perm& a, const Perm& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("composing permutations of different sizes");
    Perm out(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        out[i] = a[b[i]];
    return out;
}

inline Perm inverse_perm(const Perm& p) {
    Perm out(p.size());
    for (size_t i = 0; i < p.size(); ++i)
        out[p[i]] = static_cast<int>(i);
    return out;
}

inline bool is_permutation_of(const Perm& p, int n) {
    if (static_cast<int>(p.size()) != n)
        return false;
    std::vector<bool> seen(n, false);
    for (int v : p) {
        if (v < 0 || v >= n || seen[v])
            return false;
        seen[v] = true;
    }
    return true;
}

inline std::vector<Perm> symmetric_group(int n) {
    std::vector<Perm> out;
    Perm p = identity_perm(n);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// Saturates a generator list into the full subgroup it generates.
inline std::vector<Perm> close_under_composition(std::vector<Perm> gens, int n) {
    std::set<Perm> group;
    group.insert(identity_perm(n));
    for (const auto& g : gens) {
        if (!is_permutation_of(g, n))
            throw std::invalid_argument("generator is not a permutation of {0..n-1}");
        group.insert(g);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Perm> members(group.begin(), group.end());
        for (const auto& a : members)
            for (const auto& b : members)
                if (group.insert(compose(a, b)).second)
                    grew = true;
    }
    return {group.begin(), group.end()};
}

inline int cycle_count(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    int cycles = 0;
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i])
            continue;
        ++cycles;
        for (size_t j = i; !seen[j]; j = p[j])
            seen[j] = true;
    }
    return cycles;
}

// Lengths of the cycles of p, sorted descending.
inline std::vector<int> cycle_type(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    std::vector<int> lengths;
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i])
            continue;
        int len = 0;
        for (size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return lengths;
}

}  // namespace moduli

#endif
