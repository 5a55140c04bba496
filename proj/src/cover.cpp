#include "cyclocover/cover.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cyclo {

namespace {

long parse_long_strict(const std::string& text) {
  size_t used = 0;
  long value = 0;
  try {
    value = std::stol(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed integer '" + text + "'");
  }
  if (used != text.size()) throw std::invalid_argument("malformed integer '" + text + "'");
  return value;
}

std::string strip_spaces(const std::string& text) {
  std::string out;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

// Checks that the blocks form a partition of 1..N and returns N.
int check_partition(const CoverFamily& f, const Partition& p) {
  int n = point_count(f);
  std::vector<bool> seen(n, false);
  for (const std::vector<int>& block : p.blocks) {
    if (block.empty()) throw std::invalid_argument("partition block is empty");
    for (int slot : block) {
      if (slot < 1 || slot > n) throw std::invalid_argument("partition slot out of range");
      if (seen[slot - 1]) throw std::invalid_argument("partition blocks overlap");
      seen[slot - 1] = true;
    }
  }
  for (int k = 0; k < n; ++k)
    if (!seen[k]) throw std::invalid_argument("partition misses a slot");
  return n;
}

}  // namespace

CoverFamily make_cover_family(long degree, std::vector<long> indices) {
  if (degree < 2) throw std::invalid_argument("cover degree must be at least 2");
  if (indices.size() < 4)
    throw std::invalid_argument("a family needs at least four branch points");
  long sum = 0;
  long g = degree;
  for (long d : indices) {
    if (d <= 0 || d >= degree)
      throw std::invalid_argument("branch indices must lie strictly between 0 and the degree");
    sum += d;
    g = std::gcd(g, d);
  }
  if (sum % degree != 0)
    throw std::invalid_argument("the index sum must be divisible by the degree");
  if (g != 1)
    throw std::invalid_argument("the degree and the branch indices share a common factor");
  return CoverFamily{degree, std::move(indices)};
}

CoverFamily parse_family(const std::string& literal) {
  std::string text = strip_spaces(literal);
  size_t colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("expected 'm:d1,d2,...' but got '" + literal + "'");
  long degree = parse_long_strict(text.substr(0, colon));
  std::vector<long> indices;
  std::string rest = text.substr(colon + 1);
  size_t start = 0;
  while (true) {
    size_t comma = rest.find(',', start);
    std::string token =
        comma == std::string::npos ? rest.substr(start) : rest.substr(start, comma - start);
    indices.push_back(parse_long_strict(token));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return make_cover_family(degree, std::move(indices));
}

std::string family_literal(const CoverFamily& f) {
  std::ostringstream out;
  out << f.degree << ":";
  for (size_t i = 0; i < f.indices.size(); ++i) {
    if (i) out << ",";
    out << f.indices[i];
  }
  return out.str();
}

std::string family_display(const CoverFamily& f) {
  std::ostringstream out;
  out << "(" << f.degree << "; ";
  for (size_t i = 0; i < f.indices.size(); ++i) {
    if (i) out << ",";
    out << f.indices[i];
  }
  out << ")";
  return out.str();
}

Rational mu(const CoverFamily& f, int k) {
  if (k < 1 || k > point_count(f)) throw std::invalid_argument("branch slot out of range");
  return make_rational(f.indices[k - 1], f.degree);
}

EigenspaceProfile eigenspace_profile(const CoverFamily& f, long j) {
  if (j < 1 || j >= f.degree)
    throw std::invalid_argument("character must lie strictly between 0 and the degree");
  EigenspaceProfile profile;
  profile.character = j;
  long residue_sum = 0;
  for (int k = 0; k < point_count(f); ++k) {
    long r = (j * f.indices[k]) % f.degree;
    if (r == 0) continue;
    profile.support.push_back(k + 1);
    profile.local_data.push_back(make_rational(r, f.degree));
    residue_sum += r;
  }
  if (!profile.support.empty()) {
    if (residue_sum % f.degree != 0)
      throw std::logic_error("eigenspace datum sum is not integral");
    profile.hodge_p = residue_sum / f.degree - 1;
    profile.hodge_q = static_cast<long>(profile.support.size()) - 2 - profile.hodge_p;
  }
  return profile;
}

std::vector<EigenspaceProfile> all_profiles(const CoverFamily& f) {
  std::vector<EigenspaceProfile> out;
  out.reserve(f.degree - 1);
  for (long j = 1; j < f.degree; ++j) out.push_back(eigenspace_profile(f, j));
  return out;
}

long genus(const CoverFamily& f) {
  long total = 0;
  for (long d : f.indices) total += f.degree - std::gcd(f.degree, d);
  if (total % 2 != 0) throw std::logic_error("ramification total has odd parity");
  return 1 - f.degree + total / 2;
}

QuotientResult quotient_family(const CoverFamily& f, long r) {
  if (r <= 1 || r >= f.degree || f.degree % r != 0)
    throw std::invalid_argument("quotient order must be a proper divisor of the degree");
  long mq = f.degree / r;
  std::vector<long> survivors;
  for (long d : f.indices)
    if (d % mq != 0) survivors.push_back(d % mq);
  if (survivors.size() < 4)
    return DegenerateQuotient{static_cast<int>(survivors.size())};
  return make_cover_family(mq, std::move(survivors));
}

CoverFamily canonical_form(const CoverFamily& f) {
  std::vector<long> best;
  for (long v = 1; v < f.degree; ++v) {
    if (std::gcd(v, f.degree) != 1) continue;
    std::vector<long> moved;
    moved.reserve(f.indices.size());
    for (long d : f.indices) moved.push_back((d * v) % f.degree);
    std::sort(moved.begin(), moved.end());
    if (best.empty() || moved < best) best = std::move(moved);
  }
  return CoverFamily{f.degree, std::move(best)};
}

bool is_stable_partition(const CoverFamily& f, const Partition& p) {
  check_partition(f, p);
  for (const std::vector<int>& block : p.blocks) {
    long sum = 0;
    for (int slot : block) sum += f.indices[slot - 1];
    if (sum % f.degree == 0) return false;
  }
  return true;
}

CoverFamily collide(const CoverFamily& f, const Partition& p) {
  check_partition(f, p);
  std::vector<Rational> data;
  Integer denom_lcm = 1;
  for (const std::vector<int>& block : p.blocks) {
    long sum = 0;
    for (int slot : block) sum += f.indices[slot - 1];
    long r = sum % f.degree;
    if (r == 0) throw std::invalid_argument("a block datum vanishes; the partition is unstable");
    Rational datum = make_rational(r, f.degree);
    denom_lcm = lcm(denom_lcm, datum.get_den());
    data.push_back(datum);
  }
  if (!denom_lcm.fits_slong_p()) throw std::invalid_argument("collision degree overflow");
  long degree = denom_lcm.get_si();
  std::vector<long> indices;
  for (const Rational& datum : data) {
    Rational scaled = datum * degree;
    indices.push_back(static_cast<long>(scaled.get_num().get_si()));
  }
  return make_cover_family(degree, std::move(indices));
}

bool has_fermat_cm_fiber(const CoverFamily& f) {
  int n = point_count(f);
  for (long value : f.indices) {
    int count = 0;
    for (long d : f.indices)
      if (d == value) ++count;
    if (count >= n - 2) return true;
  }
  return false;
}

}  // namespace cyclo
