#include "cyclocover/matrix.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace cyclo {

CycMatrix::CycMatrix(long order, int dim) : order_(order), dim_(dim) {
  if (dim < 1) throw std::invalid_argument("matrix dimension must be positive");
  entries_.assign(static_cast<size_t>(dim) * dim, CyclotomicNumber(order));
}

CycMatrix CycMatrix::identity(long order, int dim) {
  CycMatrix m(order, dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = cyc_one(order);
  return m;
}

CyclotomicNumber& CycMatrix::at(int row, int col) {
  if (row < 0 || row >= dim_ || col < 0 || col >= dim_)
    throw std::out_of_range("matrix index out of range");
  return entries_[static_cast<size_t>(row) * dim_ + col];
}

const CyclotomicNumber& CycMatrix::at(int row, int col) const {
  if (row < 0 || row >= dim_ || col < 0 || col >= dim_)
    throw std::out_of_range("matrix index out of range");
  return entries_[static_cast<size_t>(row) * dim_ + col];
}

CycMatrix CycMatrix::operator*(const CycMatrix& o) const {
  if (order_ != o.order_ || dim_ != o.dim_)
    throw std::invalid_argument("matrix shapes do not match");
  CycMatrix out(order_, dim_);
  for (int r = 0; r < dim_; ++r)
    for (int k = 0; k < dim_; ++k) {
      const CyclotomicNumber& a = at(r, k);
      if (a.is_zero()) continue;
      for (int c = 0; c < dim_; ++c) out.at(r, c) = out.at(r, c) + a * o.at(k, c);
    }
  return out;
}

CycMatrix CycMatrix::operator-(const CycMatrix& o) const {
  if (order_ != o.order_ || dim_ != o.dim_)
    throw std::invalid_argument("matrix shapes do not match");
  CycMatrix out(order_, dim_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) out.at(r, c) = at(r, c) - o.at(r, c);
  return out;
}

bool CycMatrix::operator==(const CycMatrix& o) const {
  return order_ == o.order_ && dim_ == o.dim_ && entries_ == o.entries_;
}

CycMatrix CycMatrix::pow(long long e) const {
  if (e < 0) throw std::invalid_argument("matrix power must be non-negative");
  CycMatrix base = *this;
  CycMatrix acc = identity(order_, dim_);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

CyclotomicNumber CycMatrix::trace() const {
  CyclotomicNumber t(order_);
  for (int i = 0; i < dim_; ++i) t = t + at(i, i);
  return t;
}

CyclotomicNumber CycMatrix::det() const {
  CycMatrix work = *this;
  CyclotomicNumber result = cyc_one(order_);
  for (int col = 0; col < dim_; ++col) {
    int pivot = -1;
    for (int r = col; r < dim_; ++r)
      if (!work.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return CyclotomicNumber(order_);
    if (pivot != col) {
      for (int c = 0; c < dim_; ++c) std::swap(work.at(pivot, c), work.at(col, c));
      result = -result;
    }
    CyclotomicNumber diag = work.at(col, col);
    result = result * diag;
    CyclotomicNumber inv = diag.inverse();
    for (int r = col + 1; r < dim_; ++r) {
      if (work.at(r, col).is_zero()) continue;
      CyclotomicNumber factor = work.at(r, col) * inv;
      for (int c = col; c < dim_; ++c)
        work.at(r, c) = work.at(r, c) - factor * work.at(col, c);
    }
  }
  return result;
}

std::vector<CyclotomicNumber> CycMatrix::char_poly() const {
  // Newton's identities turn power sums tr(M^k) into the elementary symmetric
  // functions of the eigenvalues.
  int n = dim_;
  std::vector<CyclotomicNumber> power_sums(n + 1, CyclotomicNumber(order_));
  CycMatrix acc = *this;
  for (int k = 1; k <= n; ++k) {
    power_sums[k] = acc.trace();
    if (k < n) acc = acc * *this;
  }
  std::vector<CyclotomicNumber> elem(n + 1, CyclotomicNumber(order_));
  elem[0] = cyc_one(order_);
  for (int k = 1; k <= n; ++k) {
    CyclotomicNumber sum(order_);
    for (int i = 1; i <= k; ++i) {
      CyclotomicNumber term = elem[k - i] * power_sums[i];
      sum = (i % 2 == 1) ? sum + term : sum - term;
    }
    elem[k] = sum * Rational(1, k);
  }
  std::vector<CyclotomicNumber> coeffs(n + 1, CyclotomicNumber(order_));
  for (int k = 0; k <= n; ++k) {
    coeffs[n - k] = ((k % 2 == 0) ? elem[k] : -elem[k]);
  }
  return coeffs;
}

CycMatrix CycMatrix::galois(long v) const {
  CycMatrix out(order_, dim_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) out.at(r, c) = at(r, c).galois(v);
  return out;
}

bool CycMatrix::is_identity() const {
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) {
      if (r == c ? !at(r, c).is_one() : !at(r, c).is_zero()) return false;
    }
  return true;
}

bool CycMatrix::is_zero() const {
  for (const CyclotomicNumber& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

nlohmann::json CycMatrix::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < dim_; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < dim_; ++c) {
      nlohmann::json coeffs = nlohmann::json::array();
      for (const Rational& q : at(r, c).coefficients()) coeffs.push_back(fraction_string(q));
      row.push_back(nlohmann::json{{"coeffs", std::move(coeffs)}});
    }
    rows.push_back(std::move(row));
  }
  return nlohmann::json{{"order", order_}, {"dim", dim_}, {"entries", std::move(rows)}};
}

CycMatrix CycMatrix::from_json(const nlohmann::json& j) {
  long order = j.at("order").get<long>();
  int dim = j.at("dim").get<int>();
  CycMatrix out(order, dim);
  const nlohmann::json& rows = j.at("entries");
  if (static_cast<int>(rows.size()) != dim)
    throw std::invalid_argument("matrix entries do not match the declared dimension");
  size_t width = cyc_one(order).coefficients().size();
  for (int r = 0; r < dim; ++r) {
    if (static_cast<int>(rows[r].size()) != dim)
      throw std::invalid_argument("matrix entries do not match the declared dimension");
    for (int c = 0; c < dim; ++c) {
      const nlohmann::json& coeffs = rows[r][c].at("coeffs");
      if (coeffs.size() != width)
        throw std::invalid_argument("coefficient vector has the wrong length");
      CyclotomicNumber entry(order);
      for (size_t i = 0; i < width; ++i)
        entry = entry + CyclotomicNumber::root(order, static_cast<long long>(i)) *
                            parse_rational(coeffs[i].get<std::string>());
      out.at(r, c) = entry;
    }
  }
  return out;
}

long long default_order_bound(long order, int dim) {
  const long long cap = std::numeric_limits<long long>::max();
  long long l = 1;
  for (long k = 2; k <= order; ++k) {
    long long g = std::gcd(l, static_cast<long long>(k));
    long long factor = k / g;
    if (l > cap / factor) return cap;
    l *= factor;
  }
  if (l > cap / dim) return cap;
  return l * dim;
}

MatrixOrder finite_order(const CycMatrix& m, long long bound) {
  if (m.is_identity()) return {MatrixOrder::Kind::finite, 1};
  CycMatrix shifted = m - CycMatrix::identity(m.order(), m.dim());
  if (shifted.pow(m.dim()).is_zero()) return {MatrixOrder::Kind::infinite, 0};
  CycMatrix acc = m;
  for (long long k = 1; k <= bound; ++k) {
    if (acc.is_identity()) return {MatrixOrder::Kind::finite, k};
    acc = acc * m;
  }
  return {MatrixOrder::Kind::bound_exceeded, 0};
}

MatrixOrder finite_order(const CycMatrix& m) {
  return finite_order(m, default_order_bound(m.order(), m.dim()));
}

}  // namespace cyclo
