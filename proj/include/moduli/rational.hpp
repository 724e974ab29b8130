#ifndef MODULI_RATIONAL_HPP
#define MODULI_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace moduli {

// Exact arbitrary-precision rational, the coefficient type everywhere.
using Rational = mpq_class;

inline std::string rational_str(const Rational& q) { return q.get_str(); }

inline Rational parse_rational(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("not a rational: '" + s + "'");
    q.canonicalize();
    return q;
}

// True when q is an integer (denominator 1 after canonicalization).
inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// mpq_class(num, den) does not reduce the fraction; GMP arithmetic requires
// canonical operands. Use this when num/den may share a factor.
inline Rational make_rational(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace moduli

#endif
