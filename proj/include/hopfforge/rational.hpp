#ifndef HOPFFORGE_RATIONAL_HPP
#define HOPFFORGE_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace hopfforge {

// Arbitrary precision rationals, always canonical (gcd(num,den)=1, den>0).
// gmp canonicalizes on every arithmetic result; constructors from raw
// numerator/denominator pairs go through make_rational below which calls
// canonicalize explicitly.
using Rational = mpq_class;
using Integer  = mpz_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (sgn(den) == 0)
        throw std::invalid_argument("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// "3", "-7/2" -- the same shape the scalar grammar accepts.
inline std::string to_string(const Rational& q) { return q.get_str(); }

} // namespace hopfforge

#endif
