#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cyclocover/cover.hpp"
#include "cyclocover/cy.hpp"
#include "cyclocover/cyclotomic.hpp"
#include "cyclocover/matrix.hpp"
#include "cyclocover/monodromy.hpp"
#include "cyclocover/rational.hpp"
#include "cyclocover/vhs.hpp"

namespace py = pybind11;
using namespace cyclo;

namespace {

py::object to_fraction(const Rational& r) {
  return py::module_::import("fractions").attr("Fraction")(fraction_string(r));
}

Rational rational_from(py::handle h) {
  return parse_rational(py::str(h).cast<std::string>());
}

py::list fraction_list(const std::vector<Rational>& values) {
  py::list out;
  for (const auto& v : values) out.append(to_fraction(v));
  return out;
}

std::vector<Rational> rational_vector(const py::iterable& values) {
  std::vector<Rational> out;
  for (py::handle h : values) out.push_back(rational_from(h));
  return out;
}

py::dict class_dict(const PureVhsResult& r) {
  py::dict d;
  if (const auto* np = std::get_if<NotPure>(&r)) {
    d["tag"] = "not_pure";
    d["obstruction"] = np->obstruction;
  } else if (const auto* p = std::get_if<Primitive>(&r)) {
    d["tag"] = "primitive";
    d["j0"] = p->j0;
  } else {
    const auto& dv = std::get<Derived>(r);
    d["tag"] = "derived";
    d["j0"] = dv.j0;
    d["r0"] = dv.r0;
    d["primitive"] = dv.primitive;
  }
  return d;
}

const char* kind_name(InvolutionKind k) {
  switch (k) {
    case InvolutionKind::separated: return "separated";
    case InvolutionKind::complex_pairing: return "complex";
    default: return "neither";
  }
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Exact-arithmetic core for cyclic covers of the line: eigenspace Hodge "
      "types, pure (1,n) classification, cyclotomic braid-twist monodromy, "
      "and the attached Hodge-number calculus.";

  py::class_<CoverFamily>(m, "CoverFamily",
                          "Family of cyclic covers of the line, given by its "
                          "degree and branch indices.")
      .def(py::init([](long degree, std::vector<long> indices) {
             return make_cover_family(degree, std::move(indices));
           }),
           py::arg("degree"), py::arg("indices"))
      .def_static("parse", &parse_family, py::arg("literal"),
                  "Parse a \"m:d1,d2,...\" literal.")
      .def_readonly("degree", &CoverFamily::degree)
      .def_readonly("indices", &CoverFamily::indices)
      .def_property_readonly("point_count", &point_count)
      .def("mu", [](const CoverFamily& f, int k) { return to_fraction(mu(f, k)); },
           py::arg("k"), "Local datum d_k/degree at the 1-based slot k.")
      .def("__str__", &family_literal)
      .def("__repr__", &family_display)
      .def("__eq__",
           [](const CoverFamily& a, const CoverFamily& b) {
             return a.degree == b.degree && a.indices == b.indices;
           })
      .def("__hash__", [](const CoverFamily& f) {
        return py::hash(py::str(family_literal(f)));
      });

  py::class_<EigenspaceProfile>(m, "EigenspaceProfile",
                                "Support, local data, and Hodge type of one "
                                "deck-character eigenspace.")
      .def_readonly("character", &EigenspaceProfile::character)
      .def_readonly("support", &EigenspaceProfile::support)
      .def_property_readonly(
          "local_data",
          [](const EigenspaceProfile& e) { return fraction_list(e.local_data); })
      .def_readonly("hodge_p", &EigenspaceProfile::hodge_p)
      .def_readonly("hodge_q", &EigenspaceProfile::hodge_q)
      .def_property_readonly("hodge_type",
                             [](const EigenspaceProfile& e) {
                               return py::make_tuple(e.hodge_p, e.hodge_q);
                             })
      .def("__repr__", [](const EigenspaceProfile& e) {
        return "<EigenspaceProfile j=" + std::to_string(e.character) + " type=(" +
               std::to_string(e.hodge_p) + "," + std::to_string(e.hodge_q) + ")>";
      });

  m.def("genus", &genus, py::arg("family"),
        "Genus of a member curve of the family.");
  m.def("eigenspace_profile", &eigenspace_profile, py::arg("family"),
        py::arg("j"));
  m.def("all_profiles", &all_profiles, py::arg("family"));
  m.def("canonical_form", &canonical_form, py::arg("family"),
        "Canonical representative of the equivalence class (unit multiples, "
        "sorted indices).");
  m.def(
      "quotient_family",
      [](const CoverFamily& f, long r) -> py::object {
        QuotientResult q = quotient_family(f, r);
        if (const auto* fam = std::get_if<CoverFamily>(&q)) return py::cast(*fam);
        return py::none();
      },
      py::arg("family"), py::arg("r"),
      "Quotient by the order-r subgroup of the deck group, or None when "
      "fewer than four slots survive.");
  m.def("has_fermat_cm_fiber", &has_fermat_cm_fiber, py::arg("family"));
  m.def(
      "is_stable_partition",
      [](const CoverFamily& f, const std::vector<std::vector<int>>& blocks) {
        return is_stable_partition(f, Partition{blocks});
      },
      py::arg("family"), py::arg("blocks"));
  m.def(
      "collide",
      [](const CoverFamily& f, const std::vector<std::vector<int>>& blocks) {
        return collide(f, Partition{blocks});
      },
      py::arg("family"), py::arg("blocks"),
      "Collide each block of branch points into a single point.");

  m.def(
      "classify",
      [](const CoverFamily& f) { return class_dict(classify_pure(f)); },
      py::arg("family"),
      "Classification dict: tag \"primitive\" (j0), \"derived\" (j0, r0, "
      "primitive), or \"not_pure\" (obstruction).");
  m.def(
      "distinguished_data",
      [](const CoverFamily& f, long j0) {
        return fraction_list(distinguished_data(f, j0));
      },
      py::arg("family"), py::arg("j0"));
  m.def(
      "sint_check",
      [](const py::iterable& data) {
        SintResult r = sint_check(rational_vector(data));
        py::dict d;
        d["ok"] = r.ok;
        d["first"] = r.first;
        d["second"] = r.second;
        d["reason"] = r.reason;
        return d;
      },
      py::arg("data"),
      "Strengthened integrality check on local data in (0,1); entries may be "
      "Fractions, strings, or ints.");
  m.def(
      "int_check",
      [](const py::iterable& data) { return int_check(rational_vector(data)); },
      py::arg("data"));
  m.def(
      "triangle_family",
      [](long p, long q, long r) {
        return fraction_list(triangle_family(TriangleParams{p, q, r}));
      },
      py::arg("p"), py::arg("q"), py::arg("r"),
      "The four local data attached to a hyperbolic triangle-group triple.");
  m.def(
      "enumerate_pure",
      [](int n, std::optional<long> m_max, int jobs) {
        long bound = m_max ? *m_max : default_m_max(n);
        py::list out;
        for (const auto& row : enumerate_pure(n, bound, jobs)) {
          py::dict d;
          d["family"] = row.family;
          d["classification"] = class_dict(row.result);
          d["genus"] = row.genus;
          out.append(d);
        }
        return out;
      },
      py::arg("n"), py::arg("m_max") = py::none(), py::arg("jobs") = 1,
      "All classes with a pure (1,n) structure up to the degree bound, one "
      "canonical representative each.");
  m.def("default_m_max", &default_m_max, py::arg("n"));

  py::class_<CyclotomicNumber>(m, "Cyclotomic",
                               "Element of the degree-m cyclotomic field in "
                               "the power basis of a primitive root z.")
      .def_static("zero", [](long order) { return CyclotomicNumber(order); },
                  py::arg("order"))
      .def_static(
          "rational",
          [](long order, py::handle value) {
            return CyclotomicNumber::from_rational(order, rational_from(value));
          },
          py::arg("order"), py::arg("value"))
      .def_static("root", &CyclotomicNumber::root, py::arg("order"),
                  py::arg("exponent"), "The root-of-unity power z**exponent.")
      .def_property_readonly("order", &CyclotomicNumber::order)
      .def_property_readonly("coefficients",
                             [](const CyclotomicNumber& z) {
                               return fraction_list(z.coefficients());
                             })
      .def("is_zero", &CyclotomicNumber::is_zero)
      .def("is_one", &CyclotomicNumber::is_one)
      .def("is_rational", &CyclotomicNumber::is_rational)
      .def("rational_value",
           [](const CyclotomicNumber& z) { return to_fraction(z.rational_value()); })
      .def("galois", &CyclotomicNumber::galois, py::arg("v"),
           "Field automorphism z -> z**v for a unit v.")
      .def("inverse", &CyclotomicNumber::inverse)
      .def("__add__", &CyclotomicNumber::operator+)
      .def("__sub__",
           [](const CyclotomicNumber& a, const CyclotomicNumber& b) {
             return a - b;
           })
      .def("__neg__", [](const CyclotomicNumber& a) { return -a; })
      .def("__mul__",
           [](const CyclotomicNumber& a, const CyclotomicNumber& b) {
             return a * b;
           })
      .def("__truediv__", &CyclotomicNumber::operator/)
      .def("__pow__", &CyclotomicNumber::pow, py::arg("exponent"))
      .def("__eq__", &CyclotomicNumber::operator==)
      .def("__str__", &CyclotomicNumber::to_string)
      .def("__repr__", &CyclotomicNumber::to_string);

  m.def("euler_phi", &euler_phi, py::arg("m"));

  py::class_<CycMatrix>(m, "Matrix",
                        "Square matrix over a cyclotomic field.")
      .def(py::init<long, int>(), py::arg("order"), py::arg("dim"))
      .def_static("identity", &CycMatrix::identity, py::arg("order"),
                  py::arg("dim"))
      .def_property_readonly("order", &CycMatrix::order)
      .def_property_readonly("dim", &CycMatrix::dim)
      .def("entry",
           [](const CycMatrix& mat, int row, int col) -> CyclotomicNumber {
             return mat.at(row, col);
           },
           py::arg("row"), py::arg("col"), "0-based entry, returned by value.")
      .def("set_entry",
           [](CycMatrix& mat, int row, int col, const CyclotomicNumber& z) {
             mat.at(row, col) = z;
           },
           py::arg("row"), py::arg("col"), py::arg("value"))
      .def("__mul__", &CycMatrix::operator*)
      .def("__sub__",
           [](const CycMatrix& a, const CycMatrix& b) { return a - b; })
      .def("__eq__", &CycMatrix::operator==)
      .def("pow", &CycMatrix::pow, py::arg("e"))
      .def("trace", &CycMatrix::trace)
      .def("det", &CycMatrix::det)
      .def("char_poly", &CycMatrix::char_poly,
           "Monic characteristic polynomial, ascending coefficients.")
      .def("galois", &CycMatrix::galois, py::arg("v"))
      .def("is_identity", &CycMatrix::is_identity)
      .def("to_json_string",
           [](const CycMatrix& mat) { return mat.to_json().dump(); });

  m.def(
      "matrix_order",
      [](const CycMatrix& mat, std::optional<long long> bound) -> py::object {
        MatrixOrder r = bound ? finite_order(mat, *bound) : finite_order(mat);
        if (r.kind == MatrixOrder::Kind::infinite) return py::none();
        if (r.kind == MatrixOrder::Kind::bound_exceeded)
          throw std::runtime_error("order search exceeded its bound");
        return py::int_(r.value);
      },
      py::arg("matrix"), py::arg("bound") = py::none(),
      "Multiplicative order of the matrix, or None when it is infinite.");

  m.def("dehn_twist_matrix", &dehn_twist_matrix, py::arg("family"),
        py::arg("j"), py::arg("ell"),
        "Braid-twist matrix on the full-support eigenspace of character j.");
  m.def("galois_conjugate", &galois_conjugate, py::arg("matrix"), py::arg("v"));
  m.def(
      "twist_order",
      [](const CoverFamily& f, long j, int k1, int k2) -> py::object {
        TwistOrder t = twist_order(f, j, k1, k2);
        if (t.infinite) return py::none();
        return py::int_(t.order);
      },
      py::arg("family"), py::arg("j"), py::arg("k1"), py::arg("k2"),
      "Order of the twist about two support slots, or None when unipotent of "
      "infinite order.");
  m.def(
      "exceptional_analysis",
      [](const CoverFamily& f) {
        ExceptionalReport rep = exceptional_analysis(f);
        py::list out;
        for (const auto& rec : rep.involutions) {
          py::dict d;
          d["v"] = rec.v;
          d["t1"] = rec.t1;
          d["t2"] = rec.t2;
          d["kind"] = kind_name(rec.kind);
          d["has_complex_witness"] = rec.has_complex_witness;
          if (rec.has_complex_witness) {
            d["witness"] = py::make_tuple(rec.witness[0], rec.witness[1],
                                          rec.witness[2], rec.witness[3]);
            d["system"] = rec.system;
          } else {
            d["witness"] = py::none();
            d["system"] = py::none();
          }
          out.append(d);
        }
        return out;
      },
      py::arg("family"),
      "Involution records (t1, t2, kind, witness) of a four-slot family.");
  m.def("intertwiner_identity", &intertwiner_identity, py::arg("family"),
        py::arg("j"), py::arg("v"),
        "The scalar comparing twist entries at character j with their images "
        "at j*v; equal to one exactly when the pairing system holds in the "
        "given slot order.");

  m.def(
      "borcea_voisin_hodge",
      [](long curves, long genus_sum) {
        HodgeNumbers h = borcea_voisin_hodge(FixedLocusProfile{curves, genus_sum});
        return py::make_tuple(h.h11, h.h21);
      },
      py::arg("curves"), py::arg("genus_sum"),
      "(h11, h21) of the threefold built from a K3 involution with the given "
      "fixed locus and an elliptic curve.");
  m.def(
      "nikulin_fixed_locus",
      [](long t, long a, long delta) {
        FixedLocusProfile p = nikulin_fixed_locus(NikulinTriple{t, a, delta});
        return py::make_tuple(p.curves, p.genus_sum);
      },
      py::arg("t"), py::arg("a"), py::arg("delta"),
      "(curves, genus_sum) of the fixed locus attached to lattice invariants "
      "(t, a, delta).");
  m.def(
      "yukawa_length",
      [](const std::string& text) {
        return yukawa_length(parse_vhs_expression(text));
      },
      py::arg("expression"),
      "Length of the Yukawa coupling of a formal expression: \"leaf n\", "
      "\"tensor(...)\", \"sum(...)\".");
}
