#include "cyclocover/monodromy.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cyclocover/residue.hpp"

namespace cyclo {

namespace {

void check_character(const CoverFamily& f, long j) {
  if (j < 1 || j >= f.degree)
    throw std::invalid_argument("character must lie strictly between 0 and the degree");
}

void check_full_support(const CoverFamily& f, long j) {
  for (long d : f.indices)
    if ((j * d) % f.degree == 0)
      throw std::invalid_argument("the eigenspace does not have full support at this character");
}

}  // namespace

CycMatrix dehn_twist_matrix(const CoverFamily& f, long j, int ell) {
  check_character(f, j);
  check_full_support(f, j);
  int dim = point_count(f) - 2;
  if (ell < 1 || ell > dim)
    throw std::invalid_argument("twist slot must lie between 1 and the eigenspace dimension");
  long m = f.degree;
  CyclotomicNumber a_ell = cyc_root(m, j * f.indices[ell - 1]);
  CyclotomicNumber a_next = cyc_root(m, j * f.indices[ell]);
  CycMatrix t = CycMatrix::identity(m, dim);
  int row = ell - 1;
  if (ell - 1 >= 1) t.at(row, ell - 2) = a_ell * (cyc_one(m) - a_next);
  t.at(row, row) = a_ell * a_next;
  if (ell + 1 <= dim) t.at(row, ell) = cyc_one(m) - a_ell;
  return t;
}

CycMatrix galois_conjugate(const CycMatrix& m, long v) { return m.galois(v); }

TwistOrder twist_order(const CoverFamily& f, long j, int k1, int k2) {
  check_character(f, j);
  int n = point_count(f);
  if (k1 < 1 || k1 > n || k2 < 1 || k2 > n)
    throw std::invalid_argument("twist slots must name branch points");
  if (k1 == k2) throw std::invalid_argument("twist slots must be distinct");
  long m = f.degree;
  if ((j * f.indices[k1 - 1]) % m == 0 || (j * f.indices[k2 - 1]) % m == 0)
    throw std::invalid_argument("both twist slots must lie in the eigenspace support");
  long e = (j * (f.indices[k1 - 1] + f.indices[k2 - 1])) % m;
  if (e == 0) return TwistOrder{true, 0};
  return TwistOrder{false, m / std::gcd(m, e)};
}

namespace {

// First permutation (lex order, system 1 before system 2) whose reordered
// indices satisfy one of the congruence systems for v. Returns true and fills
// witness/system on a hit.
bool find_complex_witness(const CoverFamily& f, long v, std::array<int, 4>& witness,
                          int& system) {
  long m = f.degree;
  std::array<int, 4> perm{1, 2, 3, 4};
  do {
    long e1 = f.indices[perm[0] - 1];
    long e2 = f.indices[perm[1] - 1];
    long e3 = f.indices[perm[2] - 1];
    long lhs1 = (v * e2) % m;
    long lhs2 = (v * e1) % m;
    long lhs3 = (v * e3) % m;
    long rhs1 = (e1 + e2 + e3) % m;
    long rhs2 = mod_reduce(-e3, m);
    long rhs3 = mod_reduce(-e1, m);
    if (lhs1 == rhs1 && lhs2 == rhs2 && lhs3 == rhs3) {
      witness = perm;
      system = 1;
      return true;
    }
    if (m % 2 == 0) {
      long half = m / 2;
      if (lhs1 == (rhs1 + half) % m && lhs2 == (rhs2 + half) % m &&
          lhs3 == (rhs3 + half) % m) {
        witness = perm;
        system = 2;
        return true;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

ExceptionalReport exceptional_analysis(const CoverFamily& f) {
  if (point_count(f) != 4)
    throw std::invalid_argument("exceptional analysis needs exactly four branch points");
  long m = f.degree;
  ExceptionalReport report;
  report.degree = m;
  for (long v : proper_involutions(m)) {
    InvolutionRecord rec;
    rec.v = v;
    rec.t1 = m / std::gcd(m, v - 1);
    rec.t2 = m / std::gcd(m, v + 1);
    bool separated = m % 4 == 0 && v == m / 2 + 1 &&
                     std::all_of(f.indices.begin(), f.indices.end(),
                                 [](long d) { return d % 2 == 1; });
    rec.has_complex_witness = find_complex_witness(f, v, rec.witness, rec.system);
    if (separated)
      rec.kind = InvolutionKind::separated;
    else if (rec.has_complex_witness)
      rec.kind = InvolutionKind::complex_pairing;
    else
      rec.kind = InvolutionKind::neither;
    report.involutions.push_back(rec);
  }
  return report;
}

CyclotomicNumber intertwiner_identity(const CoverFamily& f, long j, long v) {
  if (point_count(f) != 4)
    throw std::invalid_argument("the intertwiner needs exactly four branch points");
  long m = f.degree;
  long w = mod_reduce(v, m);
  if ((w * w) % m != 1)
    throw std::invalid_argument("the twisting residue must square to one");
  long d1 = f.indices[0];
  long d2 = f.indices[1];
  long d3 = f.indices[2];
  if ((j * d3) % m == 0)
    throw std::domain_error("the factor at d3 vanishes: the degree divides j*d3");
  if ((j * d1) % m == 0)
    throw std::domain_error("the factor at d1 vanishes: the degree divides j*d1");
  CyclotomicNumber x = (cyc_one(m) - cyc_root(m, j * d1)) *
                       (cyc_root(m, j * d2) - cyc_root(m, j * (d2 + d3)));
  return x / x.galois(w);
}

}  // namespace cyclo
