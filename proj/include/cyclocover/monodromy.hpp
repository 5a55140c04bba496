#pragma once

#include <array>
#include <vector>

#include "cyclocover/cover.hpp"
#include "cyclocover/matrix.hpp"

namespace cyclo {

// Matrix of the braid twist T_{ell,ell+1} on the eigenspace of character j,
// acting on column vectors in the distinguished basis of size |S_j| - 2.
// With alpha_k = xi^{j*d_k}, row ell carries
//   alpha_ell*(1 - alpha_{ell+1}) at (ell, ell-1),
//   alpha_ell*alpha_{ell+1}       at (ell, ell),
//   1 - alpha_ell                 at (ell, ell+1),
// every other row is identity, and positions outside 1..dim are omitted.
// The eigenspace must have full support; callers owning partial-support data
// must reindex to the support themselves.
CycMatrix dehn_twist_matrix(const CoverFamily& f, long j, int ell);

// Entrywise field automorphism z -> z^v; sends the twist matrix at character
// j to the one at character j*v.
CycMatrix galois_conjugate(const CycMatrix& m, long v);

// Order of the twist about slots k1, k2 on the eigenspace of character j.
// Both slots must lie in the support. The nontrivial eigenvalue is
// xi^{j(d_k1+d_k2)}; when it is 1 the twist acts unipotently, of infinite
// order.
struct TwistOrder {
  bool infinite = false;
  long long order = 0;
  bool operator==(const TwistOrder&) const = default;
};
TwistOrder twist_order(const CoverFamily& f, long j, int k1, int k2);

// Analysis of the extra symmetries a 4-slot family can carry, one record per
// involution v of Z/(m) other than 1 and m-1.
//   t1 = m/gcd(m, v-1), t2 = m/gcd(m, v+1);
//   separated: v = m/2 + 1 with 4 | m and every index odd;
//   complex: some permutation (e1,e2,e3,e4) of the indices satisfies one of
//     system 1: [v e2] = [e1+e2+e3], [v e1] = [-e3], [v e3] = [-e1]  (mod m)
//     system 2: the same congruences shifted by m/2 on the right.
// A record can qualify for both; separated takes precedence as the kind and
// the complex witness is still reported.
enum class InvolutionKind { separated, complex_pairing, neither };

struct InvolutionRecord {
  long v = 0;
  long t1 = 0;
  long t2 = 0;
  InvolutionKind kind = InvolutionKind::neither;
  bool has_complex_witness = false;
  std::array<int, 4> witness{};  // 1-based slot permutation, valid with a witness
  int system = 0;                // 1 or 2, valid with a witness
};

struct ExceptionalReport {
  long degree = 0;
  std::vector<InvolutionRecord> involutions;
};

ExceptionalReport exceptional_analysis(const CoverFamily& f);

// The scalar comparing the twist entries at character j with their images at
// character j*v on a 4-slot family: with
//   X = (1 - xi^{j d1}) * (xi^{j d2} - xi^{j(d2+d3)})
// the scalar is X / galois_v(X). When (f, v) satisfies system 1 in the given
// slot order, galois_v(X) collapses to
//   (1 - xi^{-j d3}) * (xi^{j(d1+d2+d3)} - xi^{j(d2+d3)})
// and the quotient is exactly 1; slot orders violating the system give a
// different scalar. v must square to 1 mod m. A vanishing factor (m | j*d1 or
// m | j*d3) raises an arithmetic error naming it.
CyclotomicNumber intertwiner_identity(const CoverFamily& f, long j, long v);

}  // namespace cyclo
