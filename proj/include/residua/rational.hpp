#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace residua {

using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Int rat_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rational& q) { return boost::multiprecision::denominator(q); }

// "p/q" with the "/q" omitted for integers
inline std::string rat_str(const Rational& q) {
    Int n = rat_num(q), d = rat_den(q);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

Rational parse_rational(const std::string& s);  // accepts "p", "p/q", "-p/q"

inline Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace residua
