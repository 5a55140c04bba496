#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace cyclo {

// Exact arbitrary-precision arithmetic. mpq_class already guarantees the
// invariants we need: lowest terms, positive denominator, value equality.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Fractional part in [0, 1): q minus its floor.
inline Rational frac_part(const Rational& q) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return q - Rational(fl);
}

// Unambiguous "p/q" form, denominator always present: "3/1", "-5/12".
inline std::string fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Human form: "3", "-5/12".
inline std::string display_string(const Rational& q) { return q.get_str(); }

inline Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("cannot parse rational: " + text);
  if (q.get_den() == 0) throw std::invalid_argument("rational with zero denominator");
  q.canonicalize();
  return q;
}

}  // namespace cyclo
