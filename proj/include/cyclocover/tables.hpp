#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "cyclocover/cy.hpp"

namespace cyclo {

// The three reference tables the CLI can reproduce. Only the input profiles
// are stored; every printed number is recomputed from them.

// Threefolds from K3-with-involution times elliptic curve: labeled fixed
// locus profiles plus the derived Hodge numbers and Yukawa length.
struct Ch10Row {
  std::string family;
  std::string basis;
  std::string involution;
  long curves = 0;
  long genus_sum = 0;
  long h11 = 0;
  long h21 = 0;
  long zeta = 0;
};
std::vector<Ch10Row> ch10_rows();
std::string render_ch10_text();
nlohmann::json ch10_json();

// Lattice triples (t, a, delta) plus the derived fixed locus and Hodge
// numbers.
struct Ch11Row {
  long t = 0;
  long a = 0;
  long delta = 0;
  long curves = 0;
  long h11 = 0;
  long h21 = 0;
};
std::vector<Ch11Row> ch11_rows();
std::string render_ch11_text();
nlohmann::json ch11_json();

// Full classification output: pure (1,1) families to degree 30 (primitive
// and derived) and pure (1,n) families for n = 2,3,4 to degree 12.
std::string render_classification_text();
nlohmann::json classification_json();

}  // namespace cyclo
