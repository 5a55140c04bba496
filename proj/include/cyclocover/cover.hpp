#pragma once

#include <string>
#include <variant>
#include <vector>

#include "cyclocover/rational.hpp"

namespace cyclo {

// A family of cyclic covers of the projective line, given by its degree m and
// the branch indices d_1..d_N (local monodromy data mu_k = d_k/m). Branch
// points are abstract ordered slots; order matters for monodromy only.
//
// Validity: m >= 2; N >= 4; 0 < d_k < m; m divides the index sum (so infinity
// is not a branch point); gcd(m, d_1, ..., d_N) = 1 (the cover is irreducible).
struct CoverFamily {
  long degree = 0;
  std::vector<long> indices;
};

CoverFamily make_cover_family(long degree, std::vector<long> indices);
CoverFamily parse_family(const std::string& literal);  // "m:d1,d2,...,dN"
std::string family_literal(const CoverFamily& f);      // "m:d1,d2,...,dN"
std::string family_display(const CoverFamily& f);      // "(m; d1,...,dN)"

inline int point_count(const CoverFamily& f) { return static_cast<int>(f.indices.size()); }
Rational mu(const CoverFamily& f, int k);  // d_k/m, 1-based slot

// Character j of the deck group, 1 <= j <= m-1. The support collects the
// slots whose local datum [j*mu_k] is nonzero; the Hodge type of the
// eigenspace is (p, q) with p + q = |support| - 2 (or (0,0) on empty support).
struct EigenspaceProfile {
  long character = 0;
  std::vector<int> support;          // ascending 1-based slots
  std::vector<Rational> local_data;  // [j*mu_k] over the support
  long hodge_p = 0;
  long hodge_q = 0;
};

EigenspaceProfile eigenspace_profile(const CoverFamily& f, long j);
std::vector<EigenspaceProfile> all_profiles(const CoverFamily& f);

// Genus of a member curve (Riemann-Hurwitz over the N branch points; equals
// the sum of hodge_p over all characters).
long genus(const CoverFamily& f);

// Quotient by the subgroup of order r of the deck group: degree drops to m/r,
// indices reduce mod m/r, slots with vanishing reduced index disappear.
// Fewer than 4 surviving slots cannot carry a family of our shape; that case
// is reported as a degenerate marker rather than an error.
struct DegenerateQuotient {
  int remaining_points = 0;
};
using QuotientResult = std::variant<CoverFamily, DegenerateQuotient>;
QuotientResult quotient_family(const CoverFamily& f, long r);

// Families are equivalent when one's indices are a unit multiple of the
// other's, up to permutation. The canonical form is the lexicographically
// least sorted index tuple over all unit multiples; equivalence testing is
// equality of canonical forms.
CoverFamily canonical_form(const CoverFamily& f);

// Partition of the slot set 1..N into disjoint nonempty blocks.
struct Partition {
  std::vector<std::vector<int>> blocks;
};

// Stable: every block's mu-sum is non-integral (no block datum vanishes).
bool is_stable_partition(const CoverFamily& f, const Partition& p);

// Collision of the points of each block into one: the block datum is the
// fractional part of the block's mu-sum and the new degree is the least
// common denominator of the block data.
CoverFamily collide(const CoverFamily& f, const Partition& p);

// True when some index value occurs at least N-2 times: such a family has a
// fiber dominated by a Fermat quotient, hence a CM fiber.
bool has_fermat_cm_fiber(const CoverFamily& f);

}  // namespace cyclo
