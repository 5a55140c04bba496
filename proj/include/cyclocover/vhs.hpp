#pragma once

#include <string>
#include <variant>
#include <vector>

#include "cyclocover/cover.hpp"

namespace cyclo {

// A family is pure (1,n), n = N-3, when exactly one conjugate pair of
// characters {j0, m-j0} has Hodge types {(1,n), (n,1)} and every other
// character is one-sided, of type (a,0) or (0,b). The pair is counted once;
// j0 names the member of type (1,n) (the smaller member when both qualify,
// which happens exactly for n = 1).
struct NotPure {
  std::string obstruction;
};
struct Primitive {
  long j0 = 0;  // gcd(j0, m) = 1
};
struct Derived {
  long j0 = 0;
  long r0 = 0;  // gcd(j0, m) > 1
  CoverFamily primitive;  // quotient_family(f, r0), itself Primitive
};
using PureVhsResult = std::variant<NotPure, Primitive, Derived>;

PureVhsResult classify_pure(const CoverFamily& f);

// Local data of the distinguished eigenspace (sums to 2 for a (1,n) type).
std::vector<Rational> distinguished_data(const CoverFamily& f, long j0);

// Strengthened integrality condition on a tuple of rationals in (0,1):
// the total is 2, and every unordered pair {k1,k2} has mu_k1 + mu_k2 = 1 or
// (1 - mu_k1 - mu_k2)^{-1} an integer. On failure the first offending pair
// in index order is reported (first = second = 0 for a failing total).
struct SintResult {
  bool ok = false;
  int first = 0;
  int second = 0;
  std::string reason;
};
SintResult sint_check(const std::vector<Rational>& mu);

// Classical integrality condition: total 2, and only pairs with sum < 1 need
// an integral inverse defect. Strictly weaker than sint_check.
bool int_check(const std::vector<Rational>& mu);

// Four local data from a triangle-group parameter triple 2 <= p <= q <= r
// with 1/p + 1/q + 1/r < 1:
//   mu1 = (1 - 1/p - 1/q + 1/r)/2    mu2 = (1 - 1/p + 1/q - 1/r)/2
//   mu3 = (1 + 1/p - 1/q - 1/r)/2    mu4 = (1 + 1/p + 1/q + 1/r)/2
// The pair sums are mu1+mu2 = 1-1/p, mu1+mu3 = 1-1/q, mu2+mu3 = 1-1/r and
// the total is 2.
struct TriangleParams {
  long p = 0;
  long q = 0;
  long r = 0;
};
std::vector<Rational> triangle_family(const TriangleParams& t);

struct ClassifiedFamily {
  CoverFamily family;  // canonical representative
  PureVhsResult result;
  long genus = 0;
};

// All equivalence classes of families with N = n+3 slots and degree <= m_max
// that carry a pure (1,n) structure, one canonical representative each,
// sorted by (degree, indices). Deterministic for any worker count.
std::vector<ClassifiedFamily> enumerate_pure(int n, long m_max, int jobs = 1);

// 30 for n = 1, 12 otherwise: bounds that close the searches well past the
// last hit while staying in seconds.
long default_m_max(int n);

}  // namespace cyclo
