#include "cyclocover/tables.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cyclocover/vhs.hpp"

namespace cyclo {

namespace {

// Fixed locus inputs of the eleven K3-times-elliptic constructions; every
// numeric column is recomputed from these.
struct Ch10Input {
  const char* family;
  const char* basis;
  const char* involution;
  long curves;
  long genus_sum;
};

const Ch10Input kCh10Inputs[] = {
    {"C2", "M1", "iota1", 1, 3},
    {"C2", "M1", "iota4", 1, 3},
    {"C2", "M1", "gamma(sqrt lambda), gamma(sqrt -lambda)", 1, 3},
    {"C<iota3>", "M1", "iota1", 2, 2},
    {"C<iota3>", "M1", "iota4", 2, 2},
    {"C<epsilon>", "M1", "iota1", 8, 0},
    {"C<epsilon>", "M1", "iota4", 2, 2},
    {"C<delta>", "M1", "iota1 = iota4", 2, 2},
    {"C<delta>", "M1", "iota5", 8, 0},
    {"W", "M3", "gamma", 2, 4},
    {"Y", "M3", "gamma", 2, 4},
};

// Lattice triples of the twelve involution classes with rational or empty
// fixed locus.
const NikulinTriple kCh11Inputs[] = {
    {10, 10, 0}, {11, 11, 1}, {12, 10, 1}, {13, 9, 1}, {14, 8, 1},  {15, 7, 1},
    {16, 6, 1},  {17, 5, 1},  {18, 4, 1},  {18, 4, 0}, {19, 3, 1},  {20, 2, 1},
};

long tower_yukawa_length() {
  // The K3-times-elliptic tower couples two weight-one blocks.
  VhsExpression block;
  block.kind = VhsExpression::Kind::leaf;
  block.value = 1;
  VhsExpression tower;
  tower.kind = VhsExpression::Kind::tensor;
  tower.children = {block, block};
  return yukawa_length(tower);
}

// Minimal fixed-width text table: left-aligned text, right-aligned numbers.
class TextTable {
 public:
  explicit TextTable(std::vector<std::string> header) : header_(std::move(header)) {}

  void add_row(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  std::string render(const std::vector<bool>& right_align) const {
    std::vector<size_t> width(header_.size(), 0);
    auto widen = [&](const std::vector<std::string>& row) {
      for (size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    };
    widen(header_);
    for (const auto& row : rows_) widen(row);
    std::ostringstream out;
    auto emit = [&](const std::vector<std::string>& row) {
      for (size_t c = 0; c < row.size(); ++c) {
        if (c) out << "  ";
        size_t pad = width[c] - row[c].size();
        if (right_align[c]) out << std::string(pad, ' ');
        out << row[c];
        if (!right_align[c] && c + 1 < row.size()) out << std::string(pad, ' ');
      }
      out << "\n";
    };
    emit(header_);
    for (const auto& row : rows_) emit(row);
    return out.str();
  }

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

std::string tag_of(const PureVhsResult& result) {
  if (std::holds_alternative<Primitive>(result)) return "primitive";
  if (std::holds_alternative<Derived>(result)) return "derived";
  return "not-pure";
}

long j0_of(const PureVhsResult& result) {
  if (std::holds_alternative<Primitive>(result)) return std::get<Primitive>(result).j0;
  return std::get<Derived>(result).j0;
}

std::string classification_section_text(int n, long m_max) {
  std::ostringstream out;
  out << "families with a pure (1," << n << ") structure, degree <= " << m_max << "\n";
  std::vector<ClassifiedFamily> rows = enumerate_pure(n, m_max);
  if (rows.empty()) {
    out << "  (none)\n";
    return out.str();
  }
  TextTable table({"family", "class", "j0", "genus", "source"});
  for (const ClassifiedFamily& row : rows) {
    std::string source = "-";
    if (std::holds_alternative<Derived>(row.result))
      source = family_display(std::get<Derived>(row.result).primitive);
    table.add_row({family_display(row.family), tag_of(row.result), std::to_string(j0_of(row.result)),
                   std::to_string(row.genus), source});
  }
  out << table.render({false, false, true, true, false});
  return out.str();
}

nlohmann::json classification_rows_json(int n, long m_max) {
  nlohmann::json rows = nlohmann::json::array();
  for (const ClassifiedFamily& row : enumerate_pure(n, m_max)) {
    nlohmann::json entry;
    entry["family"] = family_literal(row.family);
    entry["tag"] = tag_of(row.result);
    entry["j0"] = j0_of(row.result);
    entry["genus"] = row.genus;
    if (std::holds_alternative<Derived>(row.result)) {
      const Derived& d = std::get<Derived>(row.result);
      entry["r0"] = d.r0;
      entry["primitive"] = family_literal(d.primitive);
    }
    rows.push_back(std::move(entry));
  }
  return rows;
}

}  // namespace

std::vector<Ch10Row> ch10_rows() {
  std::vector<Ch10Row> rows;
  long zeta = tower_yukawa_length();
  for (const Ch10Input& in : kCh10Inputs) {
    HodgeNumbers h = borcea_voisin_hodge({in.curves, in.genus_sum});
    rows.push_back(Ch10Row{in.family, in.basis, in.involution, in.curves, in.genus_sum, h.h11,
                           h.h21, zeta});
  }
  return rows;
}

std::string render_ch10_text() {
  TextTable table({"family", "basis", "involution", "N", "N'", "h11", "h21", "zeta"});
  for (const Ch10Row& row : ch10_rows())
    table.add_row({row.family, row.basis, row.involution, std::to_string(row.curves),
                   std::to_string(row.genus_sum), std::to_string(row.h11),
                   std::to_string(row.h21), std::to_string(row.zeta)});
  return table.render({false, false, false, true, true, true, true, true});
}

nlohmann::json ch10_json() {
  nlohmann::json rows = nlohmann::json::array();
  for (const Ch10Row& row : ch10_rows()) {
    rows.push_back(nlohmann::json{{"family", row.family},
                                  {"basis", row.basis},
                                  {"involution", row.involution},
                                  {"curves", row.curves},
                                  {"genus_sum", row.genus_sum},
                                  {"h11", row.h11},
                                  {"h21", row.h21},
                                  {"zeta", row.zeta}});
  }
  return nlohmann::json{{"rows", std::move(rows)}};
}

std::vector<Ch11Row> ch11_rows() {
  std::vector<Ch11Row> rows;
  for (const NikulinTriple& triple : kCh11Inputs) {
    FixedLocusProfile fix = nikulin_fixed_locus(triple);
    HodgeNumbers h = borcea_voisin_hodge(fix);
    rows.push_back(Ch11Row{triple.t, triple.a, triple.delta, fix.curves, h.h11, h.h21});
  }
  return rows;
}

std::string render_ch11_text() {
  TextTable table({"t", "a", "delta", "N", "h11", "h21"});
  for (const Ch11Row& row : ch11_rows())
    table.add_row({std::to_string(row.t), std::to_string(row.a), std::to_string(row.delta),
                   std::to_string(row.curves), std::to_string(row.h11),
                   std::to_string(row.h21)});
  return table.render({true, true, true, true, true, true});
}

nlohmann::json ch11_json() {
  nlohmann::json rows = nlohmann::json::array();
  for (const Ch11Row& row : ch11_rows()) {
    rows.push_back(nlohmann::json{{"t", row.t},
                                  {"a", row.a},
                                  {"delta", row.delta},
                                  {"curves", row.curves},
                                  {"h11", row.h11},
                                  {"h21", row.h21}});
  }
  return nlohmann::json{{"rows", std::move(rows)}};
}

std::string render_classification_text() {
  std::ostringstream out;
  out << classification_section_text(1, 30);
  for (int n = 2; n <= 4; ++n) {
    out << "\n";
    out << classification_section_text(n, 12);
  }
  return out.str();
}

nlohmann::json classification_json() {
  nlohmann::json sections = nlohmann::json::array();
  sections.push_back(nlohmann::json{{"n", 1}, {"m_max", 30}, {"rows", classification_rows_json(1, 30)}});
  for (int n = 2; n <= 4; ++n)
    sections.push_back(
        nlohmann::json{{"n", n}, {"m_max", 12}, {"rows", classification_rows_json(n, 12)}});
  return nlohmann::json{{"sections", std::move(sections)}};
}

}  // namespace cyclo
