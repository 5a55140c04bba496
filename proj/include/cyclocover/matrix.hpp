#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "cyclocover/cyclotomic.hpp"

namespace cyclo {

// Square matrix over Q(xi_m). Rows and columns are 0-based in code; the
// mathematical statements elsewhere use 1-based slots.
class CycMatrix {
 public:
  CycMatrix(long order, int dim);  // zero matrix
  static CycMatrix identity(long order, int dim);

  long order() const { return order_; }
  int dim() const { return dim_; }

  CyclotomicNumber& at(int row, int col);
  const CyclotomicNumber& at(int row, int col) const;

  CycMatrix operator*(const CycMatrix& o) const;
  CycMatrix operator-(const CycMatrix& o) const;
  bool operator==(const CycMatrix& o) const;

  CycMatrix pow(long long e) const;  // e >= 0
  CyclotomicNumber trace() const;
  CyclotomicNumber det() const;  // Gaussian elimination over the field
  // Monic characteristic polynomial det(xI - M), ascending coefficients,
  // obtained from power-sum traces via Newton's identities.
  std::vector<CyclotomicNumber> char_poly() const;
  CycMatrix galois(long v) const;  // entrywise z -> z^v

  bool is_identity() const;
  bool is_zero() const;

  nlohmann::json to_json() const;
  static CycMatrix from_json(const nlohmann::json& j);

 private:
  long order_;
  int dim_;
  std::vector<CyclotomicNumber> entries_;
};

struct MatrixOrder {
  enum class Kind { finite, infinite, bound_exceeded };
  Kind kind;
  long long value;  // the order when kind == finite
};

// lcm(1..m) * dim, clamped into long long range: a generous cap on any
// finite order that can actually occur at this cyclotomic level.
long long default_order_bound(long order, int dim);

// Least k >= 1 with M^k = I, searched up to the bound. A non-identity
// unipotent matrix short-circuits to "infinite"; otherwise running past the
// bound reports bound_exceeded, which is not a claim of infinitude.
MatrixOrder finite_order(const CycMatrix& m, long long bound);
MatrixOrder finite_order(const CycMatrix& m);

}  // namespace cyclo
