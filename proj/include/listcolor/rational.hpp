#pragma once

#include <string>

#include <gmpxx.h>

namespace lc {

using Rational = mpq_class;

// Always "p/q", including integers ("-2/1").
inline std::string to_fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Shortest form: "1/3", "-2".
inline std::string to_display_string(const Rational& r) { return r.get_str(); }

inline Rational make_rational(long num, long den = 1) {
  Rational r{mpz_class(num), mpz_class(den)};
  r.canonicalize();
  return r;
}

}  // namespace lc
