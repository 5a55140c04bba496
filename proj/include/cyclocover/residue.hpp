#pragma once

#include <numeric>
#include <stdexcept>
#include <vector>

namespace cyclo {

// Reduce x into [0, m). Works for negative x and products of two longs.
inline long mod_reduce(long long x, long m) {
  long long r = x % m;
  if (r < 0) r += m;
  return static_cast<long>(r);
}

// Value in Z/(m): reduced representative plus modulus.
// Arithmetic is only defined between equal moduli.
class ResidueClass {
 public:
  ResidueClass(long value, long modulus) : modulus_(modulus) {
    if (modulus < 2) throw std::invalid_argument("residue modulus must be at least 2");
    value_ = mod_reduce(value, modulus);
  }

  long value() const { return value_; }
  long modulus() const { return modulus_; }

  ResidueClass operator+(const ResidueClass& o) const {
    check(o);
    return {mod_reduce(static_cast<long long>(value_) + o.value_, modulus_), modulus_};
  }
  ResidueClass operator-(const ResidueClass& o) const {
    check(o);
    return {mod_reduce(static_cast<long long>(value_) - o.value_, modulus_), modulus_};
  }
  ResidueClass operator*(const ResidueClass& o) const {
    check(o);
    return {mod_reduce(static_cast<long long>(value_) * o.value_, modulus_), modulus_};
  }
  bool operator==(const ResidueClass& o) const {
    return modulus_ == o.modulus_ && value_ == o.value_;
  }

  bool is_unit() const { return std::gcd(value_, modulus_) == 1; }

 private:
  void check(const ResidueClass& o) const {
    if (modulus_ != o.modulus_)
      throw std::invalid_argument("residue arithmetic across different moduli");
  }

  long value_;
  long modulus_;
};

// The units of Z/(m), ascending.
inline std::vector<long> unit_residues(long m) {
  std::vector<long> units;
  for (long v = 1; v < m; ++v)
    if (std::gcd(v, m) == 1) units.push_back(v);
  return units;
}

// Involutions v^2 = 1 in Z/(m) other than 1 and m-1, ascending.
inline std::vector<long> proper_involutions(long m) {
  std::vector<long> out;
  for (long v = 2; v + 1 < m; ++v)
    if (mod_reduce(static_cast<long long>(v) * v, m) == 1) out.push_back(v);
  return out;
}

}  // namespace cyclo
