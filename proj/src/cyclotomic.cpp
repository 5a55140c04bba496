#include "cyclocover/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace cyclo {

namespace {

// Exact division of integer polynomials, ascending coefficients, monic
// divisor. Used only where the quotient is known to be exact.
std::vector<Integer> poly_div_exact(std::vector<Integer> num, const std::vector<Integer>& den) {
  const size_t dn = den.size() - 1;
  if (num.size() < den.size()) throw std::logic_error("polynomial division underflow");
  std::vector<Integer> quot(num.size() - dn, 0);
  for (size_t i = num.size(); i-- > dn;) {
    Integer c = num[i];
    if (c == 0) continue;
    quot[i - dn] = c;
    for (size_t k = 0; k <= dn; ++k) num[i - dn + k] -= c * den[k];
  }
  for (const Integer& c : num)
    if (c != 0) throw std::logic_error("polynomial division left a remainder");
  return quot;
}

const std::vector<Integer>& cyclotomic_locked(long m,
                                              std::map<long, std::vector<Integer>>& cache) {
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  // x^m - 1 divided by the cyclotomic polynomials of all proper divisors.
  std::vector<Integer> poly(m + 1, 0);
  poly[0] = -1;
  poly[m] = 1;
  for (long d = 1; d < m; ++d)
    if (m % d == 0) poly = poly_div_exact(std::move(poly), cyclotomic_locked(d, cache));
  return cache.emplace(m, std::move(poly)).first->second;
}

// Replace x^k for k >= phi using the monic relation x^phi = -sum c_i x^i.
void reduce_mod_phi(std::vector<Rational>& poly, long m) {
  const std::vector<Integer>& phi = cyclotomic_polynomial(m);
  const size_t deg = phi.size() - 1;
  for (size_t i = poly.size(); i-- > deg;) {
    Rational c = poly[i];
    if (c == 0) continue;
    poly[i] = 0;
    for (size_t k = 0; k < deg; ++k) poly[i - deg + k] -= c * Rational(phi[k]);
  }
  poly.resize(deg);
}

int degree_of(const std::vector<Rational>& p) {
  for (size_t i = p.size(); i-- > 0;)
    if (p[i] != 0) return static_cast<int>(i);
  return -1;
}

// Quotient and remainder over Q[x], ascending coefficients.
std::pair<std::vector<Rational>, std::vector<Rational>> poly_divmod(
    std::vector<Rational> num, const std::vector<Rational>& den) {
  int dd = degree_of(den);
  if (dd < 0) throw std::logic_error("division by the zero polynomial");
  int dn = degree_of(num);
  std::vector<Rational> quot(std::max(dn - dd + 1, 1), Rational(0));
  while (dn >= dd) {
    Rational c = num[dn] / den[dd];
    quot[dn - dd] = c;
    for (int k = 0; k <= dd; ++k) num[dn - dd + k] -= c * den[k];
    dn = degree_of(num);
  }
  return {std::move(quot), std::move(num)};
}

std::vector<Rational> poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t k = 0; k < b.size(); ++k) out[i + k] += a[i] * b[k];
  }
  return out;
}

std::vector<Rational> poly_sub(std::vector<Rational> a, const std::vector<Rational>& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return a;
}

}  // namespace

long euler_phi(long m) {
  if (m < 1) throw std::invalid_argument("euler_phi requires a positive argument");
  long result = m;
  long rest = m;
  for (long p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    result -= result / p;
    while (rest % p == 0) rest /= p;
  }
  if (rest > 1) result -= result / rest;
  return result;
}

const std::vector<Integer>& cyclotomic_polynomial(long m) {
  if (m < 1) throw std::invalid_argument("cyclotomic polynomial order must be positive");
  static std::mutex lock;
  static std::map<long, std::vector<Integer>> cache;
  std::lock_guard<std::mutex> guard(lock);
  return cyclotomic_locked(m, cache);
}

CyclotomicNumber::CyclotomicNumber(long order) : order_(order) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
  coeffs_.assign(euler_phi(order), Rational(0));
}

CyclotomicNumber CyclotomicNumber::from_rational(long order, const Rational& value) {
  CyclotomicNumber z(order);
  z.coeffs_[0] = value;
  return z;
}

CyclotomicNumber CyclotomicNumber::root(long order, long long exponent) {
  CyclotomicNumber z(order);
  long e = static_cast<long>(((exponent % order) + order) % order);
  if (e < static_cast<long>(z.coeffs_.size())) {
    z.coeffs_[e] = 1;
    return z;
  }
  std::vector<Rational> poly(e + 1, Rational(0));
  poly[e] = 1;
  reduce_mod_phi(poly, order);
  z.coeffs_ = std::move(poly);
  return z;
}

bool CyclotomicNumber::is_zero() const {
  for (const Rational& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CyclotomicNumber::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

bool CyclotomicNumber::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rational CyclotomicNumber::rational_value() const {
  if (!is_rational()) throw std::domain_error("cyclotomic number is not rational");
  return coeffs_[0];
}

namespace {
void check_same_order(long a, long b) {
  if (a != b) throw std::invalid_argument("cyclotomic arithmetic across different orders");
}
}  // namespace

CyclotomicNumber CyclotomicNumber::operator+(const CyclotomicNumber& o) const {
  check_same_order(order_, o.order_);
  CyclotomicNumber z(order_);
  for (size_t i = 0; i < coeffs_.size(); ++i) z.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
  return z;
}

CyclotomicNumber CyclotomicNumber::operator-(const CyclotomicNumber& o) const {
  check_same_order(order_, o.order_);
  CyclotomicNumber z(order_);
  for (size_t i = 0; i < coeffs_.size(); ++i) z.coeffs_[i] = coeffs_[i] - o.coeffs_[i];
  return z;
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber z(order_);
  for (size_t i = 0; i < coeffs_.size(); ++i) z.coeffs_[i] = -coeffs_[i];
  return z;
}

CyclotomicNumber CyclotomicNumber::operator*(const CyclotomicNumber& o) const {
  check_same_order(order_, o.order_);
  std::vector<Rational> prod = poly_mul(coeffs_, o.coeffs_);
  reduce_mod_phi(prod, order_);
  CyclotomicNumber z(order_);
  z.coeffs_ = std::move(prod);
  return z;
}

CyclotomicNumber CyclotomicNumber::operator*(const Rational& s) const {
  CyclotomicNumber z(order_);
  for (size_t i = 0; i < coeffs_.size(); ++i) z.coeffs_[i] = coeffs_[i] * s;
  return z;
}

CyclotomicNumber CyclotomicNumber::operator/(const CyclotomicNumber& o) const {
  return *this * o.inverse();
}

bool CyclotomicNumber::operator==(const CyclotomicNumber& o) const {
  return order_ == o.order_ && coeffs_ == o.coeffs_;
}

CyclotomicNumber CyclotomicNumber::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (is_rational()) return from_rational(order_, Rational(1) / coeffs_[0]);

  // Extended Euclid in Q[x] against the (irreducible) defining polynomial:
  // track only the Bezout coefficient of this element.
  const std::vector<Integer>& phi_int = cyclotomic_polynomial(order_);
  std::vector<Rational> r_prev(phi_int.begin(), phi_int.end());
  std::vector<Rational> r_cur = coeffs_;
  std::vector<Rational> s_prev = {Rational(0)};
  std::vector<Rational> s_cur = {Rational(1)};
  while (degree_of(r_cur) > 0) {
    auto [quot, rem] = poly_divmod(std::move(r_prev), r_cur);
    std::vector<Rational> s_next = poly_sub(std::move(s_prev), poly_mul(quot, s_cur));
    r_prev = std::move(r_cur);
    r_cur = std::move(rem);
    s_prev = std::move(s_cur);
    s_cur = std::move(s_next);
  }
  if (degree_of(r_cur) != 0)
    throw std::logic_error("element shares a factor with the defining polynomial");
  Rational unit = r_cur[0];
  CyclotomicNumber z(order_);
  std::vector<Rational> result = std::move(s_cur);
  reduce_mod_phi(result, order_);
  for (size_t i = 0; i < result.size(); ++i) z.coeffs_[i] = result[i] / unit;
  return z;
}

CyclotomicNumber CyclotomicNumber::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  CyclotomicNumber base = *this;
  CyclotomicNumber acc = from_rational(order_, 1);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

CyclotomicNumber CyclotomicNumber::galois(long v) const {
  long w = ((v % order_) + order_) % order_;
  if (std::gcd(w, order_) != 1)
    throw std::invalid_argument("galois exponent must be a unit modulo the order");
  std::vector<Rational> image(order_, Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    image[(static_cast<long long>(i) * w) % order_] += coeffs_[i];
  }
  reduce_mod_phi(image, order_);
  CyclotomicNumber z(order_);
  z.coeffs_ = std::move(image);
  return z;
}

std::string CyclotomicNumber::to_string() const {
  std::ostringstream out;
  bool emitted = false;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    bool negative = c < 0;
    Rational abs = negative ? Rational(-c) : c;
    if (!emitted) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    if (i == 0) {
      out << display_string(abs);
    } else {
      if (abs != 1) out << display_string(abs) << " ";
      out << "z";
      if (i > 1) out << "^" << i;
    }
    emitted = true;
  }
  if (!emitted) return "0";
  return out.str();
}

}  // namespace cyclo
