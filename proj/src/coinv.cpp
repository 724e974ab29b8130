#include "moduli/coinv.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace moduli::coinv {

namespace {

// All monomials of the given degree in variables x_0..x_top (inclusive).
void monomials_up_to(int top, int degree, Monomial& prefix, std::vector<Monomial>& out) {
    if (top == 0) {
        prefix.push_back(degree);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int e = 0; e <= degree; ++e) {
        prefix.push_back(e);
        monomials_up_to(top - 1, degree - e, prefix, out);
        prefix.pop_back();
    }
}

std::vector<Monomial> monomials_in_first_vars(int count, int degree) {
    std::vector<Monomial> out;
    Monomial prefix;
    monomials_up_to(count - 1, degree, prefix, out);
    return out;
}

}  // namespace

MultiPoly::MultiPoly(int n) : n_(n) {
    if (n < 1)
        throw std::invalid_argument("MultiPoly needs at least one variable");
}

MultiPoly MultiPoly::constant(int n, const Rational& c) {
    MultiPoly p(n);
    if (c != 0)
        p.terms_[Monomial(n, 0)] = c;
    return p;
}

MultiPoly MultiPoly::variable(int n, int i) {
    if (i < 0 || i >= n)
        throw std::invalid_argument("variable index out of range");
    Monomial m(n, 0);
    m[i] = 1;
    return monomial(n, std::move(m));
}

MultiPoly MultiPoly::monomial(int n, Monomial m, const Rational& c) {
    if (static_cast<int>(m.size()) != n)
        throw std::invalid_argument("monomial size mismatch");
    for (int e : m)
        if (e < 0)
            throw std::invalid_argument("negative exponent");
    MultiPoly p(n);
    if (c != 0)
        p.terms_[std::move(m)] = c;
    return p;
}

void MultiPoly::drop_zeros() {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = (it->second == 0) ? terms_.erase(it) : std::next(it);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
    if (n_ != rhs.n_)
        throw std::invalid_argument("mixing variable counts");
    for (const auto& [m, c] : rhs.terms_)
        terms_[m] += c;
    drop_zeros();
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
    if (n_ != rhs.n_)
        throw std::invalid_argument("mixing variable counts");
    for (const auto& [m, c] : rhs.terms_)
        terms_[m] -= c;
    drop_zeros();
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_)
        c *= scalar;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.n_ != b.n_)
        throw std::invalid_argument("mixing variable counts");
    MultiPoly out(a.n_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m(a.n_);
            for (int i = 0; i < a.n_; ++i)
                m[i] = ma[i] + mb[i];
            out.terms_[std::move(m)] += ca * cb;
        }
    }
    out.drop_zeros();
    return out;
}

Rational CoinvariantElement::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

CoinvariantElement& CoinvariantElement::operator+=(const CoinvariantElement& rhs) {
    if (n_ != rhs.n_)
        throw std::invalid_argument("mixing variable counts");
    for (const auto& [m, c] : rhs.terms_) {
        auto& slot = terms_[m];
        slot += c;
        if (slot == 0)
            terms_.erase(m);
    }
    return *this;
}

CoinvariantElement& CoinvariantElement::operator-=(const CoinvariantElement& rhs) {
    if (n_ != rhs.n_)
        throw std::invalid_argument("mixing variable counts");
    for (const auto& [m, c] : rhs.terms_) {
        auto& slot = terms_[m];
        slot -= c;
        if (slot == 0)
            terms_.erase(m);
    }
    return *this;
}

CoinvariantElement& CoinvariantElement::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_)
        c *= scalar;
    return *this;
}

CoinvariantElement operator*(const CoinvariantElement& a, const CoinvariantElement& b) {
    return reduce(a.lift() * b.lift());
}

MultiPoly CoinvariantElement::lift() const {
    MultiPoly p(n_);
    for (const auto& [m, c] : terms_)
        p += MultiPoly::monomial(n_, m, c);
    return p;
}

std::vector<Monomial> artin_basis(int n, int algebraic_degree) {
    if (n < 1 || algebraic_degree < 0)
        throw std::invalid_argument("artin_basis: bad arguments");
    std::vector<Monomial> out;
    Monomial current(n, 0);
    std::function<void(int, int)> walk = [&](int i, int remaining) {
        if (i == n) {
            if (remaining == 0)
                out.push_back(current);
            return;
        }
        int bound = std::min(n - 1 - i, remaining);
        for (int e = 0; e <= bound; ++e) {
            current[i] = e;
            walk(i + 1, remaining - e);
        }
        current[i] = 0;
    };
    walk(0, algebraic_degree);
    return out;
}

std::vector<int> artin_dims(int n) {
    int top = n * (n - 1) / 2;
    std::vector<int> dims;
    for (int d = 0; d <= top; ++d)
        dims.push_back(static_cast<int>(artin_basis(n, d).size()));
    return dims;
}

CoinvariantElement reduce(const MultiPoly& p) {
    const int n = p.vars();
    CoinvariantElement out(n);
    // worklist of pending terms; normal-form terms accumulate in out
    std::map<Monomial, Rational> work(p.terms().begin(), p.terms().end());
    while (!work.empty()) {
        auto node = work.extract(std::prev(work.end()));
        const Monomial mono = node.key();
        const Rational c = node.mapped();
        if (c == 0)
            continue;
        int bad = -1;
        for (int i = n - 1; i >= 0; --i) {
            if (mono[i] > n - 1 - i) {
                bad = i;
                break;
            }
        }
        if (bad < 0) {
            auto& slot = out.terms_[mono];
            slot += c;
            if (slot == 0)
                out.terms_.erase(mono);
            continue;
        }
        // x_bad^{n-bad} = - (other monomials of h_{n-bad}(x_0..x_bad));
        // replacements have a smaller x_bad exponent, so this terminates.
        const int power = n - bad;
        Monomial stripped = mono;
        stripped[bad] -= power;
        for (const auto& h : monomials_in_first_vars(bad + 1, power)) {
            if (h[bad] == power)
                continue;  // the lead term itself
            Monomial m = stripped;
            for (int i = 0; i <= bad; ++i)
                m[i] += h[i];
            auto& slot = work[m];
            slot -= c;
            if (slot == 0)
                work.erase(m);
        }
    }
    return out;
}

CoinvariantElement permute(const Perm& w, const CoinvariantElement& e) {
    const int n = e.vars();
    if (!is_permutation_of(w, n))
        throw std::invalid_argument("permute: not a permutation of the variables");
    MultiPoly image(n);
    for (const auto& [m, c] : e.terms()) {
        Monomial moved(n, 0);
        for (int i = 0; i < n; ++i)
            moved[w[i]] = m[i];
        image += MultiPoly::monomial(n, std::move(moved), c);
    }
    return reduce(image);
}

GradedCharacter coinvariant_character(const Perm& w) {
    const int n = static_cast<int>(w.size());
    if (!is_permutation_of(w, n))
        throw std::invalid_argument("coinvariant_character: bad permutation");
    const int top = n * (n - 1) / 2;
    GradedCharacter chi;
    chi.element = w;
    chi.traces.assign(2 * top + 1, Rational(0));
    for (int d = 0; d <= top; ++d) {
        Rational trace(0);
        for (const Monomial& m : artin_basis(n, d)) {
            CoinvariantElement basis_elem = reduce(MultiPoly::monomial(n, m));
            trace += permute(w, basis_elem).coeff(m);
        }
        chi.traces[2 * d] = trace;
    }
    return chi;
}

CharacterFamily coinvariant_family(int n) {
    return [n](const Perm& w) {
        if (static_cast<int>(w.size()) != n)
            throw std::invalid_argument("character family: wrong permutation size");
        return coinvariant_character(w);
    };
}

GradedCharacter exterior_character(const Perm& w, int n) {
    if (n < 2)
        throw std::invalid_argument("exterior_character: reflection representation needs n >= 2");
    if (!is_permutation_of(w, n))
        throw std::invalid_argument("exterior_character: bad permutation");
    // det(1 + s P_w) = prod over cycles (1 - (-s)^len); strip the trivial
    // summand by exact division by (1 + s).
    RationalPoly det = RationalPoly::one();
    for (int len : cycle_type(w)) {
        Rational sign = (len % 2 == 0) ? Rational(-1) : Rational(1);
        det *= RationalPoly::one() + RationalPoly::monomial(len, sign);
    }
    std::vector<Rational> q(n, Rational(0));
    Rational carry(0);
    for (int k = 0; k < n; ++k) {
        q[k] = det.coeff(k) - carry;
        carry = q[k];
    }
    if (det.coeff(n) != carry)
        throw std::logic_error("exterior_character: (1+s) does not divide det(1 + s P_w)");
    GradedCharacter chi;
    chi.element = w;
    chi.traces = std::move(q);
    return chi;
}

CharacterFamily exterior_family(int n) {
    return [n](const Perm& w) { return exterior_character(w, n); };
}

RationalPoly invariant_series(const std::vector<Perm>& subgroup,
                              const std::vector<CharacterFamily>& factors) {
    if (subgroup.empty())
        throw std::invalid_argument("invariant_series: empty subgroup");
    const int n = static_cast<int>(subgroup.front().size());
    std::set<Perm> members(subgroup.begin(), subgroup.end());
    if (members.size() != subgroup.size())
        throw std::invalid_argument("invariant_series: repeated subgroup elements");
    if (!members.count(identity_perm(n)))
        throw std::invalid_argument("invariant_series: subgroup must contain the identity");
    for (const auto& a : members)
        for (const auto& b : members)
            if (!members.count(compose(a, b)))
                throw std::invalid_argument("invariant_series: subgroup not closed under composition");

    RationalPoly acc;
    for (const Perm& h : subgroup) {
        RationalPoly prod = RationalPoly::one();
        for (const auto& family : factors)
            prod *= family(h).poly();
        acc += prod;
    }
    acc *= Rational(1, static_cast<long>(subgroup.size()));
    for (int d = 0; d <= acc.degree(); ++d) {
        const Rational& c = acc.coeff(d);
        if (!is_integer(c) || c < 0)
            throw std::logic_error(
                "invariant_series: averaged dimension at degree " + std::to_string(d) +
                " is " + c.get_str() + ", not a nonnegative integer");
    }
    return acc;
}

std::vector<MixingTerm> pt_A_breakdown(const liecat::GroupId& g) {
    if (g.family != liecat::Family::SpecialUnitary)
        throw std::invalid_argument("pt_A: implemented for SU(n) only");
    const int n = g.n;
    std::vector<MixingTerm> out;
    for (const auto& orbit : liecat::t2_orbits(g)) {
        MixingTerm term;
        term.orbit_representative = orbit.representative;
        term.orbit_size = orbit.orbit_size;
        term.stabilizer_order = orbit.stabilizer_order;
        auto stabilizer = close_under_composition(orbit.stabilizer_generators, n);
        term.term = invariant_series(stabilizer, {coinvariant_family(n), exterior_family(n)});
        out.push_back(std::move(term));
    }
    return out;
}

RationalPoly pt_A(const liecat::GroupId& g) {
    RationalPoly acc;
    for (const auto& term : pt_A_breakdown(g))
        acc += term.term;
    return acc;
}

}  // namespace moduli::coinv
