#include "cyclocover/vhs.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace cyclo {

PureVhsResult classify_pure(const CoverFamily& f) {
  long m = f.degree;
  long n = point_count(f) - 3;
  bool found = false;
  long j0 = 0;
  // One representative per conjugate pair {j, m-j}: j runs up to m/2.
  for (long j = 1; 2 * j <= m; ++j) {
    EigenspaceProfile profile = eigenspace_profile(f, j);
    bool mixed = profile.hodge_p >= 1 && profile.hodge_q >= 1;
    if (!mixed) continue;
    if (found)
      return NotPure{"second non-unitary pair at j=" + std::to_string(j)};
    bool right_shape = (profile.hodge_p == 1 && profile.hodge_q == n) ||
                       (profile.hodge_p == n && profile.hodge_q == 1);
    if (!right_shape) {
      std::ostringstream why;
      why << "non-unitary pair at j=" << j << " has type (" << profile.hodge_p << ","
          << profile.hodge_q << ")";
      return NotPure{why.str()};
    }
    found = true;
    j0 = (profile.hodge_p == 1 && profile.hodge_q == n) ? j : m - j;
  }
  if (!found) return NotPure{"no non-unitary pair"};
  long r0 = std::gcd(j0, m);
  if (r0 == 1) return Primitive{j0};
  QuotientResult quotient = quotient_family(f, r0);
  if (!std::holds_alternative<CoverFamily>(quotient))
    throw std::logic_error("quotient of a derived family degenerated");
  CoverFamily primitive = std::get<CoverFamily>(quotient);
  if (!std::holds_alternative<Primitive>(classify_pure(primitive)))
    throw std::logic_error("quotient of a derived family is not primitive");
  return Derived{j0, r0, std::move(primitive)};
}

std::vector<Rational> distinguished_data(const CoverFamily& f, long j0) {
  return eigenspace_profile(f, j0).local_data;
}

namespace {

void check_open_unit_interval(const std::vector<Rational>& mu) {
  for (const Rational& x : mu)
    if (x <= 0 || x >= 1)
      throw std::invalid_argument("local data must lie strictly between 0 and 1");
}

// An inverse defect (1 - s)^{-1} is an integer exactly when the reduced
// numerator of 1 - s is a unit.
bool integral_inverse_defect(const Rational& pair_sum) {
  Rational defect = Rational(1) - pair_sum;
  return abs(defect.get_num()) == 1;
}

}  // namespace

SintResult sint_check(const std::vector<Rational>& mu) {
  check_open_unit_interval(mu);
  Rational total = 0;
  for (const Rational& x : mu) total += x;
  if (total != 2)
    return SintResult{false, 0, 0, "total is " + fraction_string(total) + ", not 2"};
  int n = static_cast<int>(mu.size());
  for (int i = 0; i < n; ++i)
    for (int k = i + 1; k < n; ++k) {
      Rational s = mu[i] + mu[k];
      if (s == 1 || integral_inverse_defect(s)) continue;
      std::ostringstream why;
      why << "pair (" << (i + 1) << "," << (k + 1) << ") sums to " << fraction_string(s)
          << " with non-integral inverse defect";
      return SintResult{false, i + 1, k + 1, why.str()};
    }
  return SintResult{true, 0, 0, ""};
}

bool int_check(const std::vector<Rational>& mu) {
  check_open_unit_interval(mu);
  Rational total = 0;
  for (const Rational& x : mu) total += x;
  if (total != 2) return false;
  int n = static_cast<int>(mu.size());
  for (int i = 0; i < n; ++i)
    for (int k = i + 1; k < n; ++k) {
      Rational s = mu[i] + mu[k];
      if (s < 1 && !integral_inverse_defect(s)) return false;
    }
  return true;
}

std::vector<Rational> triangle_family(const TriangleParams& t) {
  if (t.p < 2 || t.p > t.q || t.q > t.r)
    throw std::invalid_argument("triangle parameters must satisfy 2 <= p <= q <= r");
  Rational a = make_rational(1, t.p);
  Rational b = make_rational(1, t.q);
  Rational c = make_rational(1, t.r);
  if (a + b + c >= 1)
    throw std::invalid_argument("triangle parameters must have angle sum below 1");
  Rational half = make_rational(1, 2);
  return {(1 - a - b + c) * half, (1 - a + b - c) * half, (1 + a - b - c) * half,
          (1 + a + b + c) * half};
}

namespace {

// All canonical representatives at one degree that carry the structure.
void scan_degree(long m, int points, std::vector<ClassifiedFamily>& out) {
  std::vector<long> d(points, 1);
  while (true) {
    long sum = std::accumulate(d.begin(), d.end(), 0L);
    if (sum % m == 0) {
      long g = m;
      for (long x : d) g = std::gcd(g, x);
      if (g == 1) {
        CoverFamily f{m, d};
        if (canonical_form(f).indices == d) {
          PureVhsResult result = classify_pure(f);
          if (!std::holds_alternative<NotPure>(result))
            out.push_back(ClassifiedFamily{f, std::move(result), genus(f)});
        }
      }
    }
    int pos = points - 1;
    while (pos >= 0 && d[pos] == m - 1) --pos;
    if (pos < 0) break;
    ++d[pos];
    for (int k = pos + 1; k < points; ++k) d[k] = d[pos];
  }
}

}  // namespace

std::vector<ClassifiedFamily> enumerate_pure(int n, long m_max, int jobs) {
  if (n < 1) throw std::invalid_argument("the weight n must be positive");
  if (m_max < 2) throw std::invalid_argument("the degree bound must be at least 2");
  if (jobs < 1) throw std::invalid_argument("the worker count must be positive");
  int points = n + 3;
  std::vector<std::vector<ClassifiedFamily>> buckets(jobs);
  if (jobs == 1) {
    for (long m = 2; m <= m_max; ++m) scan_degree(m, points, buckets[0]);
  } else {
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w)
      workers.emplace_back([&, w] {
        for (long m = 2 + w; m <= m_max; m += jobs) scan_degree(m, points, buckets[w]);
      });
    for (std::thread& t : workers) t.join();
  }
  std::vector<ClassifiedFamily> merged;
  for (std::vector<ClassifiedFamily>& b : buckets)
    for (ClassifiedFamily& row : b) merged.push_back(std::move(row));
  std::sort(merged.begin(), merged.end(), [](const ClassifiedFamily& a, const ClassifiedFamily& b) {
    if (a.family.degree != b.family.degree) return a.family.degree < b.family.degree;
    return a.family.indices < b.family.indices;
  });
  return merged;
}

long default_m_max(int n) { return n == 1 ? 30 : 12; }

}  // namespace cyclo
