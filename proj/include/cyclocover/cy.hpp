#pragma once

#include <string>
#include <vector>

namespace cyclo {

// Fixed locus of an anti-symplectic K3 involution: number of fixed curves and
// their total genus.
struct FixedLocusProfile {
  long curves = 0;     // N
  long genus_sum = 0;  // N'
  bool operator==(const FixedLocusProfile&) const = default;
};

struct HodgeNumbers {
  long h11 = 0;
  long h21 = 0;
  bool operator==(const HodgeNumbers&) const = default;
};

// Hodge numbers of the threefold built from (K3 with involution) x (elliptic
// curve): h11 = 11 + 5N - N', h21 = 11 + 5N' - N.
HodgeNumbers borcea_voisin_hodge(const FixedLocusProfile& p);

// Lattice invariants (t, a, delta) of an involution on K3. The fixed locus
// has N' = (22 - t - a)/2 and N = (t - a)/2 + 1, except the two listed
// special triples: (10,10,0) has empty fixed locus and (10,8,0) fixes two
// elliptic curves. Only parity/range guards are enforced; whether a triple
// actually occurs on a K3 is not decided here.
struct NikulinTriple {
  long t = 0;
  long a = 0;
  long delta = 0;
};
FixedLocusProfile nikulin_fixed_locus(const NikulinTriple& n);

// Symbolic length-of-Yukawa-coupling calculus over formal building blocks:
// a leaf carries its own length, tensor products add lengths, direct sums
// take the maximum.
struct VhsExpression {
  enum class Kind { leaf, tensor, direct_sum };
  Kind kind = Kind::leaf;
  long value = 0;  // leaf only
  std::vector<VhsExpression> children;
  bool operator==(const VhsExpression&) const = default;
};

// Grammar: "leaf <int>" | "tensor(e, e, ...)" | "sum(e, e, ...)".
VhsExpression parse_vhs_expression(const std::string& text);
std::string vhs_expression_string(const VhsExpression& e);
long yukawa_length(const VhsExpression& e);

}  // namespace cyclo
