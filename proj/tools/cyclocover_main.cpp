#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iostream>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "cyclocover/cover.hpp"
#include "cyclocover/cy.hpp"
#include "cyclocover/matrix.hpp"
#include "cyclocover/monodromy.hpp"
#include "cyclocover/residue.hpp"
#include "cyclocover/tables.hpp"
#include "cyclocover/vhs.hpp"

using json = nlohmann::json;
using namespace cyclo;

namespace {

void emit_report(const std::string& command, const std::string& input, json result,
                 std::vector<std::string> warnings, const std::string& format,
                 const std::string& text) {
  if (format == "json") {
    json report;
    report["command"] = command;
    report["input"] = input;
    report["result"] = std::move(result);
    report["warnings"] = json(std::move(warnings));
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << text;
    for (const std::string& w : warnings) std::cout << "note: " << w << "\n";
  }
}

std::string data_string(const std::vector<Rational>& data) {
  std::string out;
  for (size_t i = 0; i < data.size(); ++i) {
    if (i) out += ",";
    out += fraction_string(data[i]);
  }
  return out;
}

json data_json(const std::vector<Rational>& data) {
  json out = json::array();
  for (const Rational& x : data) out.push_back(fraction_string(x));
  return out;
}

json classified_row_json(const ClassifiedFamily& row) {
  json entry;
  entry["family"] = family_literal(row.family);
  entry["genus"] = row.genus;
  if (std::holds_alternative<Primitive>(row.result)) {
    entry["tag"] = "primitive";
    entry["j0"] = std::get<Primitive>(row.result).j0;
  } else {
    const Derived& d = std::get<Derived>(row.result);
    entry["tag"] = "derived";
    entry["j0"] = d.j0;
    entry["r0"] = d.r0;
    entry["primitive"] = family_literal(d.primitive);
  }
  return entry;
}

int run_analyze(const std::string& family_text, const std::string& format) {
  CoverFamily f = parse_family(family_text);
  PureVhsResult cls = classify_pure(f);
  long g = genus(f);
  bool fermat = has_fermat_cm_fiber(f);

  std::vector<Rational> sint_data;
  if (std::holds_alternative<NotPure>(cls)) {
    for (int k = 1; k <= point_count(f); ++k) sint_data.push_back(mu(f, k));
  } else {
    long j0 = std::holds_alternative<Primitive>(cls) ? std::get<Primitive>(cls).j0
                                                     : std::get<Derived>(cls).j0;
    sint_data = distinguished_data(f, j0);
  }
  SintResult sint = sint_check(sint_data);

  json result;
  result["genus"] = g;
  json cls_json;
  std::string cls_text;
  if (std::holds_alternative<Primitive>(cls)) {
    long j0 = std::get<Primitive>(cls).j0;
    cls_json = {{"tag", "primitive"}, {"j0", j0}};
    cls_text = "primitive with distinguished character j=" + std::to_string(j0);
  } else if (std::holds_alternative<Derived>(cls)) {
    const Derived& d = std::get<Derived>(cls);
    cls_json = {{"tag", "derived"},
                {"j0", d.j0},
                {"r0", d.r0},
                {"primitive", family_literal(d.primitive)}};
    cls_text = "derived at j=" + std::to_string(d.j0) + " (r0=" + std::to_string(d.r0) +
               ", primitive " + family_display(d.primitive) + ")";
  } else {
    const NotPure& np = std::get<NotPure>(cls);
    cls_json = {{"tag", "not-pure"}, {"obstruction", np.obstruction}};
    cls_text = "not pure: " + np.obstruction;
  }
  result["class"] = cls_json;
  result["sint"] = {{"ok", sint.ok},
                    {"first", sint.first},
                    {"second", sint.second},
                    {"reason", sint.reason},
                    {"data", data_json(sint_data)}};
  result["fermat_cm"] = fermat;
  json characters = json::array();
  for (const EigenspaceProfile& p : all_profiles(f)) {
    characters.push_back(json{{"j", p.character},
                              {"support", p.support},
                              {"data", data_json(p.local_data)},
                              {"p", p.hodge_p},
                              {"q", p.hodge_q}});
  }
  result["characters"] = std::move(characters);

  std::ostringstream text;
  text << "family " << family_display(f) << "\n";
  text << "genus " << g << "\n";
  text << "class: " << cls_text << "\n";
  text << "sint: " << (sint.ok ? "ok" : "fails") << " on data " << data_string(sint_data);
  if (!sint.ok) text << " (" << sint.reason << ")";
  text << "\n";
  text << "fermat-cm fiber: " << (fermat ? "yes" : "no") << "\n";
  text << "characters:\n";
  for (const EigenspaceProfile& p : all_profiles(f)) {
    text << "  j=" << p.character << "  type (" << p.hodge_p << "," << p.hodge_q << ")  data "
         << (p.local_data.empty() ? "-" : data_string(p.local_data)) << "\n";
  }

  std::vector<std::string> warnings;
  CoverFamily canon = canonical_form(f);
  if (canon.indices != f.indices)
    warnings.push_back("canonical representative is " + family_literal(canon));
  emit_report("analyze", family_text, std::move(result), std::move(warnings), format, text.str());
  return 0;
}

int run_classify(int n, long m_max, int jobs, const std::string& format) {
  std::vector<ClassifiedFamily> rows = enumerate_pure(n, m_max, jobs);
  json rows_json = json::array();
  for (const ClassifiedFamily& row : rows) rows_json.push_back(classified_row_json(row));
  json result;
  result["n"] = n;
  result["m_max"] = m_max;
  result["rows"] = std::move(rows_json);

  std::ostringstream text;
  text << "families with a pure (1," << n << ") structure, degree <= " << m_max << "\n";
  if (rows.empty()) {
    text << "  (none)\n";
  } else {
    for (const ClassifiedFamily& row : rows) {
      text << family_display(row.family) << "  genus " << row.genus << "  ";
      if (std::holds_alternative<Primitive>(row.result)) {
        text << "primitive (j0=" << std::get<Primitive>(row.result).j0 << ")";
      } else {
        const Derived& d = std::get<Derived>(row.result);
        text << "derived (j0=" << d.j0 << ", r0=" << d.r0 << ", primitive "
             << family_display(d.primitive) << ")";
      }
      text << "\n";
    }
  }
  std::ostringstream input;
  input << "n=" << n << ", m_max=" << m_max;
  emit_report("classify", input.str(), std::move(result), {}, format, text.str());
  return 0;
}

std::string matrix_text(const CycMatrix& m) {
  std::ostringstream out;
  for (int r = 0; r < m.dim(); ++r) {
    out << "    [ ";
    for (int c = 0; c < m.dim(); ++c) {
      if (c) out << " | ";
      out << m.at(r, c).to_string();
    }
    out << " ]\n";
  }
  return out.str();
}

int run_monodromy(const std::string& family_text, long j, int ell_opt,
                  const std::string& format) {
  CoverFamily f = parse_family(family_text);
  int dim = point_count(f) - 2;
  std::vector<int> slots;
  if (ell_opt > 0)
    slots.push_back(ell_opt);
  else
    for (int ell = 1; ell <= dim; ++ell) slots.push_back(ell);

  json twists = json::array();
  std::ostringstream text;
  text << "family " << family_display(f) << "  character j=" << j << "\n";
  for (int ell : slots) {
    CycMatrix m = dehn_twist_matrix(f, j, ell);
    TwistOrder order = twist_order(f, j, ell, ell + 1);
    std::string order_text = order.infinite ? "infinite" : std::to_string(order.order);
    twists.push_back(json{{"ell", ell}, {"pair_order", order_text}, {"matrix", m.to_json()}});
    text << "twist ell=" << ell << ": pair order " << order_text << "\n" << matrix_text(m);
  }
  json result;
  result["family"] = family_literal(f);
  result["j"] = j;
  result["dim"] = dim;
  result["twists"] = std::move(twists);
  std::ostringstream input;
  input << family_text << " j=" << j;
  if (ell_opt > 0) input << " ell=" << ell_opt;
  emit_report("monodromy", input.str(), std::move(result), {}, format, text.str());
  return 0;
}

int run_exceptional(const std::string& family_text, const std::string& format) {
  CoverFamily f = parse_family(family_text);
  ExceptionalReport report = exceptional_analysis(f);
  json involutions = json::array();
  std::ostringstream text;
  text << "family " << family_display(f) << ": " << report.involutions.size()
       << " proper involution(s)\n";
  for (const InvolutionRecord& rec : report.involutions) {
    std::string kind = rec.kind == InvolutionKind::separated ? "separated"
                       : rec.kind == InvolutionKind::complex_pairing ? "complex"
                                                                     : "neither";
    json entry{{"v", rec.v},
               {"t1", rec.t1},
               {"t2", rec.t2},
               {"kind", kind},
               {"has_complex_witness", rec.has_complex_witness}};
    text << "v=" << rec.v << ": t1=" << rec.t1 << " t2=" << rec.t2 << " kind=" << kind;
    if (rec.has_complex_witness) {
      entry["witness"] = json::array({rec.witness[0], rec.witness[1], rec.witness[2],
                                      rec.witness[3]});
      entry["system"] = rec.system;
      text << " witness=(" << rec.witness[0] << "," << rec.witness[1] << "," << rec.witness[2]
           << "," << rec.witness[3] << ") system=" << rec.system;
    }
    text << "\n";
    involutions.push_back(std::move(entry));
  }
  json result;
  result["degree"] = report.degree;
  result["involutions"] = std::move(involutions);
  emit_report("exceptional", family_text, std::move(result), {}, format, text.str());
  return 0;
}

int run_bv(long curves, long genus_sum, const std::string& format) {
  HodgeNumbers h = borcea_voisin_hodge({curves, genus_sum});
  json result{{"curves", curves}, {"genus_sum", genus_sum}, {"h11", h.h11}, {"h21", h.h21}};
  std::ostringstream text;
  text << "fixed locus: " << curves << " curve(s), genus sum " << genus_sum << "\n"
       << "h11 " << h.h11 << ", h21 " << h.h21 << "\n";
  std::ostringstream input;
  input << curves << " " << genus_sum;
  emit_report("bv", input.str(), std::move(result), {}, format, text.str());
  return 0;
}

int run_nikulin(long t, long a, long delta, const std::string& format) {
  FixedLocusProfile fix = nikulin_fixed_locus({t, a, delta});
  HodgeNumbers h = borcea_voisin_hodge(fix);
  json result{{"t", t},        {"a", a},         {"delta", delta},  {"curves", fix.curves},
              {"genus_sum", fix.genus_sum}, {"h11", h.h11}, {"h21", h.h21}};
  std::ostringstream text;
  text << "triple (" << t << "," << a << "," << delta << "): fixed locus " << fix.curves
       << " curve(s), genus sum " << fix.genus_sum << "\n"
       << "h11 " << h.h11 << ", h21 " << h.h21 << "\n";
  std::ostringstream input;
  input << t << " " << a << " " << delta;
  emit_report("nikulin", input.str(), std::move(result), {}, format, text.str());
  return 0;
}

int run_yukawa(const std::string& expr_text, const std::string& format) {
  VhsExpression e = parse_vhs_expression(expr_text);
  long zeta = yukawa_length(e);
  json result{{"zeta", zeta}, {"expression", vhs_expression_string(e)}};
  std::ostringstream text;
  text << "expression " << vhs_expression_string(e) << "\n" << "zeta " << zeta << "\n";
  emit_report("yukawa", expr_text, std::move(result), {}, format, text.str());
  return 0;
}

int run_tables(const std::string& which, const std::string& format) {
  json result;
  std::string text;
  if (which == "ch10") {
    result = ch10_json();
    text = render_ch10_text();
  } else if (which == "ch11") {
    result = ch11_json();
    text = render_ch11_text();
  } else if (which == "classification") {
    result = classification_json();
    text = render_classification_text();
  } else {
    throw std::invalid_argument("unknown table '" + which +
                                "'; expected ch10, ch11, or classification");
  }
  emit_report("tables", which, std::move(result), {}, format, text);
  return 0;
}

// Random valid family, mirroring the construction hygiene of the library.
CoverFamily random_family_for_check(std::mt19937_64& rng, long m_max) {
  std::uniform_int_distribution<long> degree_pick(2, m_max);
  while (true) {
    long m = degree_pick(rng);
    std::uniform_int_distribution<long> index_pick(1, m - 1);
    std::uniform_int_distribution<int> count_pick(4, 7);
    int n = count_pick(rng);
    std::vector<long> d;
    long sum = 0;
    for (int k = 0; k + 1 < n; ++k) {
      d.push_back(index_pick(rng));
      sum += d.back();
    }
    long last = (m - sum % m) % m;
    if (last == 0) continue;
    d.push_back(last);
    long g = m;
    for (long x : d) g = std::gcd(g, x);
    if (g != 1) continue;
    return make_cover_family(m, std::move(d));
  }
}

int run_check(long seed, int trials, const std::string& format) {
  std::mt19937_64 rng(static_cast<unsigned long long>(seed));
  for (int trial = 0; trial < trials; ++trial) {
    CoverFamily f = random_family_for_check(rng, 30);

    // Genus must equal both Hodge sums over all characters.
    long sum_p = 0, sum_q = 0;
    for (const EigenspaceProfile& p : all_profiles(f)) {
      sum_p += p.hodge_p;
      sum_q += p.hodge_q;
    }
    if (genus(f) != sum_p || genus(f) != sum_q)
      throw std::logic_error("self-check failed: genus mismatch for " + family_literal(f));

    // Canonical form is idempotent and constant on unit-multiple orbits.
    CoverFamily base = canonical_form(f);
    if (canonical_form(base).indices != base.indices)
      throw std::logic_error("self-check failed: canonical form is not idempotent");
    std::vector<long> units = unit_residues(f.degree);
    std::uniform_int_distribution<size_t> unit_pick(0, units.size() - 1);
    long v = units[unit_pick(rng)];
    std::vector<long> moved;
    for (long d : f.indices) moved.push_back((d * v) % f.degree);
    std::shuffle(moved.begin(), moved.end(), rng);
    if (canonical_form(make_cover_family(f.degree, moved)).indices != base.indices)
      throw std::logic_error("self-check failed: canonical form is not an orbit invariant");

    // Twist determinant matches the residue formula on a random character.
    std::vector<long> support_units = unit_residues(f.degree);
    long j = support_units[unit_pick(rng) % support_units.size()];
    CycMatrix t = dehn_twist_matrix(f, j, 1);
    if (t.det() != cyc_root(f.degree, j * (f.indices[0] + f.indices[1])))
      throw std::logic_error("self-check failed: twist determinant for " + family_literal(f));
  }
  json result{{"status", "ok"}, {"trials", trials}, {"seed", seed}};
  std::ostringstream text;
  text << "self-check ok: " << trials << " trial(s), seed " << seed << "\n";
  std::ostringstream input;
  input << "trials=" << trials << ", seed=" << seed;
  emit_report("check", input.str(), std::move(result), {}, format, text.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants of cyclic covers of the projective line"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string analyze_family;
  CLI::App* analyze = app.add_subcommand("analyze", "Full invariant report for one family");
  analyze->fallthrough();
  analyze->add_option("family", analyze_family, "Family literal m:d1,d2,...")->required();

  int classify_n = 1;
  long classify_m_max = -1;
  int classify_jobs = 1;
  CLI::App* classify = app.add_subcommand("classify", "Enumerate families with a pure structure");
  classify->fallthrough();
  classify->add_option("--n", classify_n, "Weight of the pure structure")->required();
  classify->add_option("--m-max", classify_m_max, "Largest degree to search");
  classify->add_option("--jobs", classify_jobs, "Worker threads");

  std::string monodromy_family;
  long monodromy_j = 0;
  int monodromy_ell = 0;
  CLI::App* monodromy = app.add_subcommand("monodromy", "Braid twist matrices at a character");
  monodromy->fallthrough();
  monodromy->add_option("family", monodromy_family, "Family literal m:d1,d2,...")->required();
  monodromy->add_option("--j", monodromy_j, "Character")->required();
  monodromy->add_option("--ell", monodromy_ell, "Single twist slot (default: all)");

  std::string exceptional_family;
  CLI::App* exceptional = app.add_subcommand("exceptional", "Involution symmetry analysis");
  exceptional->fallthrough();
  exceptional->add_option("family", exceptional_family, "Family literal m:d1,d2,d3,d4")
      ->required();

  long bv_curves = 0, bv_genus = 0;
  CLI::App* bv = app.add_subcommand("bv", "Hodge numbers from a fixed locus profile");
  bv->fallthrough();
  bv->add_option("curves", bv_curves, "Number of fixed curves")->required();
  bv->add_option("genus_sum", bv_genus, "Total genus of the fixed curves")->required();

  long nik_t = 0, nik_a = 0, nik_delta = 0;
  CLI::App* nikulin = app.add_subcommand("nikulin", "Fixed locus of a lattice involution");
  nikulin->fallthrough();
  nikulin->add_option("t", nik_t, "Lattice rank")->required();
  nikulin->add_option("a", nik_a, "Discriminant exponent")->required();
  nikulin->add_option("delta", nik_delta, "Parity invariant")->required();

  std::string yukawa_expr;
  CLI::App* yukawa = app.add_subcommand("yukawa", "Length of a coupling expression");
  yukawa->fallthrough();
  yukawa->add_option("expression", yukawa_expr, "leaf n | tensor(...) | sum(...)")->required();

  std::string tables_which;
  CLI::App* tables = app.add_subcommand("tables", "Reference tables");
  tables->fallthrough();
  tables->add_option("which", tables_which, "ch10 | ch11 | classification")->required();

  long check_seed = 20260822;
  int check_trials = 100;
  CLI::App* check = app.add_subcommand("check", "Randomized self-check of the core invariants");
  check->fallthrough();
  check->add_option("--seed", check_seed, "Random seed");
  check->add_option("--trials", check_trials, "Trial count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(analyze)) return run_analyze(analyze_family, format);
    if (app.got_subcommand(classify)) {
      if (classify_m_max < 0) classify_m_max = default_m_max(classify_n);
      return run_classify(classify_n, classify_m_max, classify_jobs, format);
    }
    if (app.got_subcommand(monodromy))
      return run_monodromy(monodromy_family, monodromy_j, monodromy_ell, format);
    if (app.got_subcommand(exceptional)) return run_exceptional(exceptional_family, format);
    if (app.got_subcommand(bv)) return run_bv(bv_curves, bv_genus, format);
    if (app.got_subcommand(nikulin)) return run_nikulin(nik_t, nik_a, nik_delta, format);
    if (app.got_subcommand(yukawa)) return run_yukawa(yukawa_expr, format);
    if (app.got_subcommand(tables)) return run_tables(tables_which, format);
    if (app.got_subcommand(check)) return run_check(check_seed, check_trials, format);
    std::cerr << "error: no subcommand selected\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
