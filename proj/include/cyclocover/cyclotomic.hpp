#pragma once

#include <string>
#include <vector>

#include "cyclocover/rational.hpp"

namespace cyclo {

long euler_phi(long m);

// Monic integer polynomial of degree phi(m); coefficient of x^i at index i.
// Computed once per order and cached process-wide.
const std::vector<Integer>& cyclotomic_polynomial(long m);

// Element of the cyclotomic field Q(xi_m), represented in the power basis
// 1, z, ..., z^{phi(m)-1} of Q[x]/Phi_m(x). The representation is canonical,
// so equality is coefficient equality. Immutable in spirit: all operations
// return new values.
class CyclotomicNumber {
 public:
  explicit CyclotomicNumber(long order);  // zero
  static CyclotomicNumber from_rational(long order, const Rational& value);
  static CyclotomicNumber root(long order, long long exponent);  // xi^exponent

  long order() const { return order_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  Rational rational_value() const;  // requires is_rational()

  CyclotomicNumber operator+(const CyclotomicNumber& o) const;
  CyclotomicNumber operator-(const CyclotomicNumber& o) const;
  CyclotomicNumber operator-() const;
  CyclotomicNumber operator*(const CyclotomicNumber& o) const;
  CyclotomicNumber operator*(const Rational& s) const;
  CyclotomicNumber operator/(const CyclotomicNumber& o) const;
  bool operator==(const CyclotomicNumber& o) const;

  CyclotomicNumber inverse() const;        // error on zero
  CyclotomicNumber pow(long long e) const; // negative exponents via inverse
  CyclotomicNumber galois(long v) const;   // z^i -> z^{iv mod m}; v must be a unit

  // Deterministic polynomial rendering in z, ascending powers: "1 - z^5".
  std::string to_string() const;

 private:
  long order_;
  std::vector<Rational> coeffs_;
};

inline CyclotomicNumber cyc_root(long m, long long e) {
  return CyclotomicNumber::root(m, e);
}
inline CyclotomicNumber cyc_one(long m) {
  return CyclotomicNumber::from_rational(m, 1);
}

}  // namespace cyclo
