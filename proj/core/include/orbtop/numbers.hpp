#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace orbtop {

// Exact arithmetic everywhere: generalized Collatz iterates outgrow any
// fixed word size within a handful of steps.
using Integer = mpz_class;
using Rational = mpq_class;

inline std::size_t bit_size(const Integer& v) {
  if (v == 0) return 0;
  return mpz_sizeinbase(v.get_mpz_t(), 2);
}

inline Integer numerator(const Rational& q) { return Integer(q.get_num()); }
inline Integer denominator(const Rational& q) { return Integer(q.get_den()); }

// mpq_class keeps values canonical (lowest terms, positive denominator)
// as long as they are built through this helper or mpq arithmetic.
inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

std::string to_string(const Integer& v);
std::string to_string(const Rational& q);

// Parses "p" or "p/q"; throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);
Integer parse_integer(const std::string& text);

}  // namespace orbtop
