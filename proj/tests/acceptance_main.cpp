// Acceptance gate: one line per criterion, exit code = number of failures.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cyclocover/cy.hpp"
#include "cyclocover/monodromy.hpp"
#include "cyclocover/residue.hpp"
#include "cyclocover/tables.hpp"
#include "cyclocover/vhs.hpp"

using json = nlohmann::json;
using namespace cyclo;

namespace {

struct Gate {
  bool ok = true;
  std::string why;
  void require(bool condition, const std::string& message) {
    if (!condition && ok) {
      ok = false;
      why = message;
    }
  }
};

struct CliRun {
  int status = -1;
  std::string out;
  double seconds = 0.0;
};

CliRun run_cli(const std::string& args) {
  const char* bin = std::getenv("CYCLOCOVER_BIN");
  if (bin == nullptr) throw std::runtime_error("CYCLOCOVER_BIN is not set");
  std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
  auto start = std::chrono::steady_clock::now();
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("popen failed");
  CliRun run;
  char buffer[4096];
  size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) run.out.append(buffer, got);
  int raw = pclose(pipe);
  run.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  run.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return run;
}

std::string canon(const std::string& literal) {
  return family_literal(canonical_form(parse_family(literal)));
}

std::multiset<std::string> canon_set(const std::vector<std::string>& literals) {
  std::multiset<std::string> out;
  for (const auto& s : literals) out.insert(canon(s));
  return out;
}

// Split a classify JSON report into canonicalized primitive/derived multisets.
void split_rows(const json& report, std::multiset<std::string>& primitive,
                std::multiset<std::string>& derived) {
  for (const auto& row : report.at("result").at("rows")) {
    std::string tag = row.at("tag");
    if (tag == "primitive") primitive.insert(canon(row.at("family")));
    if (tag == "derived") derived.insert(canon(row.at("family")));
  }
}

CoverFamily random_valid_family(std::mt19937_64& rng, long m_max, int n_min, int n_max) {
  std::uniform_int_distribution<long> pick_m(2, m_max);
  std::uniform_int_distribution<int> pick_n(n_min, n_max);
  for (;;) {
    long m = pick_m(rng);
    int n = pick_n(rng);
    std::uniform_int_distribution<long> pick_d(1, m - 1);
    std::vector<long> d(n);
    long sum = 0;
    for (int i = 0; i + 1 < n; ++i) {
      d[i] = pick_d(rng);
      sum += d[i];
    }
    long last = (m - sum % m) % m;
    if (last == 0) continue;
    d[n - 1] = last;
    long g = m;
    for (long x : d) g = std::gcd(g, x);
    if (g != 1) continue;
    return make_cover_family(m, d);
  }
}

long riemann_hurwitz(const CoverFamily& f) {
  long total = 0;
  for (long d : f.indices) total += f.degree - std::gcd(f.degree, d);
  if (total % 2 != 0) return -1;
  return 1 - f.degree + total / 2;
}

CycMatrix expected_t12(long m, long d1, long d2, long j) {
  CycMatrix t = CycMatrix::identity(m, 2);
  t.at(0, 0) = cyc_root(m, j * (d1 + d2));
  t.at(0, 1) = cyc_one(m) - cyc_root(m, j * d1);
  return t;
}

CycMatrix expected_t23(long m, long d2, long d3, long j) {
  CycMatrix t = CycMatrix::identity(m, 2);
  t.at(1, 0) = cyc_root(m, j * d2) - cyc_root(m, j * (d2 + d3));
  t.at(1, 1) = cyc_root(m, j * (d2 + d3));
  return t;
}

std::string read_golden(const std::string& name) {
  const char* dir = std::getenv("CYCLOCOVER_GOLDEN");
  if (dir == nullptr) throw std::runtime_error("CYCLOCOVER_GOLDEN is not set");
  std::ifstream in(std::string(dir) + "/" + name, std::ios::binary);
  if (!in.good()) throw std::runtime_error("missing golden file " + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

VhsExpression make_leaf(long n) {
  VhsExpression e;
  e.kind = VhsExpression::Kind::leaf;
  e.value = n;
  return e;
}

VhsExpression random_tree(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 5);
  int k = pick(rng);
  if (k <= 1) {
    std::uniform_int_distribution<long> leafv(0, 6);
    return make_leaf(leafv(rng));
  }
  VhsExpression e;
  e.kind = k <= 3 ? VhsExpression::Kind::tensor : VhsExpression::Kind::direct_sum;
  e.value = 0;
  std::uniform_int_distribution<int> arity(1, 3);
  int children = arity(rng);
  for (int i = 0; i < children; ++i) e.children.push_back(random_tree(rng, depth - 1));
  return e;
}

VhsExpression flatten_once(const VhsExpression& e) {
  if (e.kind == VhsExpression::Kind::leaf) return e;
  VhsExpression out;
  out.kind = e.kind;
  out.value = 0;
  for (const auto& child : e.children) {
    VhsExpression c = flatten_once(child);
    if (c.kind == e.kind) {
      for (auto& g : c.children) out.children.push_back(std::move(g));
    } else {
      out.children.push_back(std::move(c));
    }
  }
  return out;
}

VhsExpression shuffled(const VhsExpression& e, std::mt19937_64& rng) {
  if (e.kind == VhsExpression::Kind::leaf) return e;
  VhsExpression out;
  out.kind = e.kind;
  out.value = 0;
  for (const auto& child : e.children) out.children.push_back(shuffled(child, rng));
  std::shuffle(out.children.begin(), out.children.end(), rng);
  return out;
}

const std::vector<std::string> kPrimitiveRank1 = {
    "2:1,1,1,1", "3:1,1,2,2", "4:1,2,2,3",  "5:1,3,3,3",  "6:1,3,4,4", "6:2,3,3,4",
    "7:2,4,4,4", "8:2,4,5,5", "9:3,5,5,5", "10:3,5,6,6", "12:4,6,7,7"};
const std::vector<std::string> kDerivedRank1 = {"4:1,1,1,1", "6:1,1,1,3", "6:1,1,2,2"};
const std::vector<std::string> kPrimitiveHigher = {"3:1,1,1,1,2", "4:1,1,2,2,2", "5:1,1,1,1,1",
                                                   "6:2,2,2,3,3", "3:1,1,1,1,1,1"};

bool criterion1(Gate& g) {
  CliRun run = run_cli("classify --n 1 --m-max 30 --format json");
  g.require(run.status == 0, "classify exited with " + std::to_string(run.status));
  if (!g.ok) return false;
  g.require(run.seconds < 10.0,
            "runtime " + std::to_string(run.seconds) + " s exceeds 10 s");
  json report = json::parse(run.out);
  std::multiset<std::string> primitive, derived;
  split_rows(report, primitive, derived);
  g.require(primitive.size() == 11,
            "expected 11 primitive classes, got " + std::to_string(primitive.size()));
  g.require(primitive == canon_set(kPrimitiveRank1), "primitive multiset mismatch");
  g.require(derived == canon_set(kDerivedRank1), "derived multiset mismatch");
  for (const auto& row : report["result"]["rows"])
    g.require(parse_family(row["family"].get<std::string>()).degree <= 12,
              "unexpected class above degree 12: " + row["family"].get<std::string>());
  return g.ok;
}

bool criterion2(Gate& g) {
  double total = 0.0;
  CliRun n2 = run_cli("classify --n 2 --m-max 12 --format json");
  CliRun n3 = run_cli("classify --n 3 --m-max 12 --format json");
  CliRun n4 = run_cli("classify --n 4 --m-max 12 --format json");
  total = n2.seconds + n3.seconds + n4.seconds;
  g.require(n2.status == 0 && n3.status == 0 && n4.status == 0, "classify exited nonzero");
  if (!g.ok) return false;
  g.require(total < 60.0, "runtime " + std::to_string(total) + " s exceeds 60 s");
  json n2_report = json::parse(n2.out);
  std::multiset<std::string> primitive, derived;
  split_rows(n2_report, primitive, derived);
  split_rows(json::parse(n3.out), primitive, derived);
  g.require(primitive == canon_set(kPrimitiveHigher), "primitive multiset mismatch");
  g.require(derived.empty(), "derived classes found for n > 1");
  bool corrected_row = false;
  for (const auto& row : n2_report["result"]["rows"])
    if (canon(row["family"].get<std::string>()) == canon("6:2,2,2,3,3"))
      corrected_row = row["genus"] == 4;
  g.require(corrected_row, "degree-6 five-point row missing or genus != 4");
  g.require(json::parse(n4.out)["result"]["rows"].empty(), "unexpected rows for n = 4");
  return g.ok;
}

bool criterion3(Gate& g) {
  const std::vector<std::pair<std::string, long>> pinned = {
      {"2:1,1,1,1", 1},  {"3:1,2,2,1", 2},      {"4:1,2,2,3", 2},  {"5:1,3,3,3", 4},
      {"6:1,4,4,3", 3},  {"6:2,3,3,4", 2},      {"7:2,4,4,4", 6},  {"8:2,5,5,4", 5},
      {"9:3,5,5,5", 7},  {"10:3,6,6,5", 6},     {"12:4,7,7,6", 7}, {"4:1,1,1,1", 3},
      {"6:1,1,1,3", 4},  {"6:1,2,2,1", 4},      {"3:2,1,1,1,1", 3}, {"4:2,2,2,1,1", 3},
      {"5:2,2,2,2,2", 6}, {"6:2,2,2,3,3", 4},   {"3:1,1,1,1,1,1", 4}};
  for (const auto& [literal, expected] : pinned)
    g.require(genus(parse_family(literal)) == expected, "genus mismatch for " + literal);

  std::mt19937_64 rng(20260822);
  for (int trial = 0; trial < 10000 && g.ok; ++trial) {
    CoverFamily f = random_valid_family(rng, 40, 4, 9);
    long rh = riemann_hurwitz(f);
    long p_sum = 0, q_sum = 0;
    for (const auto& profile : all_profiles(f)) {
      p_sum += profile.hodge_p;
      q_sum += profile.hodge_q;
    }
    g.require(rh >= 0 && rh == p_sum && rh == q_sum && rh == genus(f),
              "genus disagreement for " + family_literal(f));
  }
  return g.ok;
}

bool criterion4(Gate& g) {
  std::vector<std::string> primitives = kPrimitiveRank1;
  primitives.insert(primitives.end(), kPrimitiveHigher.begin(), kPrimitiveHigher.end());
  for (const auto& literal : primitives) {
    CoverFamily f = parse_family(literal);
    PureVhsResult result = classify_pure(f);
    g.require(std::holds_alternative<Primitive>(result), literal + " is not primitive");
    if (!g.ok) return false;
    SintResult s = sint_check(distinguished_data(f, std::get<Primitive>(result).j0));
    g.require(s.ok, "strengthened condition fails for " + literal);
  }
  CoverFamily counter = parse_family("5:1,1,4,4");
  g.require(std::holds_alternative<NotPure>(classify_pure(counter)),
            "(5;1,1,4,4) unexpectedly pure");
  std::vector<Rational> mus;
  for (int k = 1; k <= 4; ++k) mus.push_back(mu(counter, k));
  SintResult s = sint_check(mus);
  g.require(!s.ok && s.first == 1 && s.second == 2, "counterexample witness is not (1,2)");
  return g.ok;
}

bool criterion5(Gate& g) {
  CoverFamily f = parse_family("12:5,1,11,7");
  for (long j : {1L, 5L, 7L, 11L}) {
    g.require(dehn_twist_matrix(f, j, 1) == expected_t12(12, 5, 1, j),
              "first twist mismatch at j=" + std::to_string(j));
    g.require(dehn_twist_matrix(f, j, 2) == expected_t23(12, 1, 11, j),
              "second twist mismatch at j=" + std::to_string(j));
    g.require(intertwiner_identity(f, j, 5).is_one(),
              "intertwiner not 1 at j=" + std::to_string(j));
  }

  std::mt19937_64 rng(20260822);
  for (int trial = 0; trial < 100 && g.ok; ++trial) {
    CoverFamily h = random_valid_family(rng, 24, 4, 8);
    std::vector<long> units = unit_residues(h.degree);
    std::uniform_int_distribution<size_t> pick(0, units.size() - 1);
    long j = units[pick(rng)];
    int dim = point_count(h) - 2;
    std::uniform_int_distribution<int> pick_ell(1, dim);
    int ell = pick_ell(rng);
    CycMatrix t = dehn_twist_matrix(h, j, ell);
    for (long v : units)
      g.require(galois_conjugate(t, v) == dehn_twist_matrix(h, (j * v) % h.degree, ell),
                "equivariance fails for " + family_literal(h));
  }
  return g.ok;
}

bool criterion6(Gate& g) {
  ExceptionalReport a = exceptional_analysis(parse_family("12:5,1,11,7"));
  g.require(a.involutions.size() == 2, "expected two involutions for degree 12");
  if (!g.ok) return false;
  g.require(a.involutions[0].v == 5 && a.involutions[0].kind == InvolutionKind::complex_pairing &&
                a.involutions[0].t1 == 3 && a.involutions[0].t2 == 2,
            "v=5 record mismatch");
  g.require(a.involutions[1].v == 7 && a.involutions[1].kind == InvolutionKind::separated,
            "v=7 record mismatch");

  ExceptionalReport b = exceptional_analysis(parse_family("12:11,1,11,1"));
  bool has_separated = false, has_complex = false;
  for (const auto& rec : b.involutions) {
    if (rec.kind == InvolutionKind::separated) has_separated = true;
    if (rec.kind == InvolutionKind::complex_pairing || rec.has_complex_witness)
      has_complex = true;
  }
  g.require(has_separated && has_complex, "(12;11,1,11,1) should show both kinds");

  // Closed-form separated predicate vs the definitional pair-sum check, m <= 48.
  for (long m = 2; m <= 48 && g.ok; ++m) {
    std::vector<long> involutions = proper_involutions(m);
    if (involutions.empty()) continue;
    for (long d1 = 1; d1 < m && g.ok; ++d1)
      for (long d2 = 1; d2 < m && g.ok; ++d2)
        for (long d3 = 1; d3 < m; ++d3) {
          long d4 = (m - (d1 + d2 + d3) % m) % m;
          if (d4 == 0) continue;
          long gc = std::gcd(std::gcd(std::gcd(std::gcd(m, d1), d2), d3), d4);
          if (gc != 1) continue;
          bool all_odd = (d1 % 2) && (d2 % 2) && (d3 % 2) && (d4 % 2);
          for (long v : involutions) {
            bool closed = (m % 4 == 0) && (v == m / 2 + 1) && all_odd;
            bool definitional = (m / std::gcd(m, v - 1) == 2) && ((d1 + d2) % 2 == 0) &&
                                ((d1 + d3) % 2 == 0) && ((d2 + d3) % 2 == 0);
            if (closed != definitional) {
              g.require(false, "separated predicates disagree at m=" + std::to_string(m) +
                                   " d=(" + std::to_string(d1) + "," + std::to_string(d2) + "," +
                                   std::to_string(d3) + "," + std::to_string(d4) +
                                   ") v=" + std::to_string(v));
              break;
            }
          }
        }
  }

  // t1*t2 law with parity refinements for every involution, m <= 200.
  for (long m = 2; m <= 200 && g.ok; ++m) {
    if (proper_involutions(m).empty()) continue;
    CoverFamily probe = make_cover_family(m, {1, 1, m - 1, m - 1});
    for (const auto& rec : exceptional_analysis(probe).involutions) {
      long prod = static_cast<long>(rec.t1) * rec.t2;
      g.require(prod == m || 2 * prod == m,
                "t1*t2 outside {m, m/2} at m=" + std::to_string(m));
      if (m % 2 == 1)
        g.require(prod == m, "odd-degree refinement fails at m=" + std::to_string(m));
      if (m % 4 == 2)
        g.require(2 * prod == m, "m=2 mod 4 refinement fails at m=" + std::to_string(m));
    }
  }
  return g.ok;
}

bool criterion7(Gate& g) {
  CliRun ch10 = run_cli("tables ch10");
  CliRun ch11 = run_cli("tables ch11");
  g.require(ch10.status == 0 && ch11.status == 0, "tables exited nonzero");
  if (!g.ok) return false;
  g.require(ch10.out == read_golden("ch10.txt"), "ch10 output differs from golden file");
  g.require(ch11.out == read_golden("ch11.txt"), "ch11 output differs from golden file");
  g.require(ch10_rows().size() == 11, "expected 11 rows in the first table");
  g.require(ch11_rows().size() == 12, "expected 12 rows in the second table");

  g.require(borcea_voisin_hodge({1, 3}) == HodgeNumbers{13, 25}, "(1,3) spot value");
  g.require(borcea_voisin_hodge({2, 4}) == HodgeNumbers{17, 29}, "(2,4) spot value");
  g.require(borcea_voisin_hodge({8, 0}) == HodgeNumbers{51, 3}, "(8,0) spot value");
  g.require(borcea_voisin_hodge(nikulin_fixed_locus({10, 10, 0})) == HodgeNumbers{11, 11},
            "(10,10,0) spot value");
  g.require(borcea_voisin_hodge(nikulin_fixed_locus({20, 2, 1})) == HodgeNumbers{61, 1},
            "(20,2,1) spot value");
  return g.ok;
}

bool criterion8(Gate& g) {
  g.require(yukawa_length(parse_vhs_expression("tensor(leaf 1, leaf 1)")) == 2,
            "two-factor tensor should give 2");
  g.require(yukawa_length(parse_vhs_expression("tensor(leaf 1, leaf 1, leaf 1)")) == 3,
            "three-factor tensor should give 3");
  g.require(yukawa_length(parse_vhs_expression("sum(leaf 1, tensor(leaf 1, leaf 0))")) == 1,
            "mixed sum should give 1");

  std::mt19937_64 rng(20260822);
  for (int trial = 0; trial < 1000 && g.ok; ++trial) {
    VhsExpression e = random_tree(rng, 4);
    long len = yukawa_length(e);
    g.require(yukawa_length(shuffled(e, rng)) == len, "reorder changes the length");
    g.require(yukawa_length(flatten_once(e)) == len, "reassociation changes the length");
  }
  return g.ok;
}

}  // namespace

int main() {
  std::vector<std::function<bool(Gate&)>> criteria = {criterion1, criterion2, criterion3,
                                                      criterion4, criterion5, criterion6,
                                                      criterion7, criterion8};
  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Gate gate;
    bool ok = false;
    try {
      ok = criteria[i](gate);
    } catch (const std::exception& e) {
      gate.why = std::string("exception: ") + e.what();
      ok = false;
    }
    if (ok) {
      std::cout << "criterion " << (i + 1) << ": PASS\n";
    } else {
      std::cout << "criterion " << (i + 1) << ": FAIL (" << gate.why << ")\n";
      ++failures;
    }
  }
  std::cout << "acceptance: " << (criteria.size() - failures) << "/" << criteria.size()
            << " passed\n";
  return failures;
}
