#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "skeinlab/alexander.hpp"
#include "skeinlab/arrow.hpp"
#include "skeinlab/bracket.hpp"
#include "skeinlab/diagram.hpp"
#include "skeinlab/khovanov.hpp"
#include "skeinlab/moves.hpp"
#include "skeinlab/search.hpp"
#include "skeinlab/skein.hpp"
#include "skeinlab/tensor.hpp"
#include "skeinlab/vassiliev.hpp"

namespace py = pybind11;
using namespace skeinlab;

namespace {

py::dict poly_dict(const LaurentPoly& p) {
  py::dict out;
  out["text"] = p.to_text();
  out["vars"] = p.vars();
  out["edenom"] = kQuarter;
  py::list terms;
  for (const auto& [e, c] : p.terms()) {
    py::list t;
    t.append(py::cast(e));
    t.append(c.str());
    terms.append(t);
  }
  out["terms"] = terms;
  return out;
}

}  // namespace

PYBIND11_MODULE(_skeinlab, m) {
  m.doc() = "exact knot and virtual-knot invariants";

  py::register_exception<Error>(m, "SkeinError");

  py::class_<Diagram>(m, "Diagram")
      .def_property_readonly("crossings", &Diagram::crossing_count)
      .def_property_readonly("classical", &Diagram::classical_count)
      .def_property_readonly("virtuals", &Diagram::virtual_count)
      .def_property_readonly("components", &Diagram::component_count)
      .def_property_readonly("free_loops", &Diagram::free_loops)
      .def("writhe", &Diagram::writhe)
      .def("with_extra_circle", &Diagram::with_extra_circle)
      .def("with_crossing_switched", &Diagram::with_crossing_switched)
      .def("gauss", [](const Diagram& d) { return encode_gauss(d); })
      .def("pd", [](const Diagram& d) { return encode_pd(d); })
      .def("json", [](const Diagram& d) { return encode_json(d); })
      .def("isomorphic_to", &Diagram::isomorphic_to)
      .def("__repr__", [](const Diagram& d) {
        return "<Diagram " + std::to_string(d.classical_count()) + " classical, " +
               std::to_string(d.virtual_count()) + " virtual, " +
               std::to_string(d.component_count()) + " component(s)>";
      });

  m.def("from_braid", [](const std::vector<int>& word, int strands) {
    if (strands <= 0) {
      strands = 1;
      for (int k : word) strands = std::max(strands, std::abs(k) + 1);
    }
    return from_braid_word(strands, word);
  }, py::arg("word"), py::arg("strands") = 0);
  m.def("from_gauss", &decode_gauss);
  m.def("from_pd", &decode_pd);
  m.def("from_json", &decode_json);

  m.def("bracket", [](const Diagram& d, int cap) { return poly_dict(bracket_poly(d, cap)); },
        py::arg("diagram"), py::arg("max_crossings") = kDefaultCrossingCap);
  m.def("jones", [](const Diagram& d, int cap) {
    BracketValue v = normalized_jones(d, cap);
    py::dict out;
    out["bracket"] = poly_dict(v.bracket);
    out["f"] = poly_dict(v.f);
    out["jones"] = poly_dict(v.jones);
    return out;
  }, py::arg("diagram"), py::arg("max_crossings") = kDefaultCrossingCap);
  m.def("arrow", [](const Diagram& d, int cap) {
    ArrowValue v = arrow_polynomial(d, cap);
    py::dict out;
    out["raw"] = poly_dict(v.raw);
    out["normalized"] = poly_dict(v.normalized);
    return out;
  }, py::arg("diagram"), py::arg("max_crossings") = kDefaultCrossingCap);
  m.def("alexander", [](const Diagram& d) { return poly_dict(alexander_poly(d)); });
  m.def("conway", [](const Diagram& d) { return poly_dict(skein_eval(d, conway_rule())); });
  m.def("homflypt", [](const Diagram& d) { return poly_dict(skein_eval(d, homflypt_rule())); });

  m.def("khovanov", [](const Diagram& d, int cap) {
    KhovanovComplex kc = build_complex(d, cap);
    py::list rows;
    for (const auto& [ij, h] : homology(kc)) {
      py::dict row;
      row["i"] = ij.first;
      row["j"] = ij.second;
      row["free"] = h.free_rank;
      py::list torsion;
      for (const BigInt& f : h.torsion) torsion.append(f.str());
      row["torsion"] = torsion;
      rows.append(row);
    }
    py::dict out;
    out["table"] = rows;
    out["graded_euler"] = poly_dict(graded_euler(kc));
    return out;
  }, py::arg("diagram"), py::arg("max_crossings") = kKhovanovCap);

  m.def("vassiliev_coeffs", [](const Diagram& d, int nmax) {
    std::vector<std::string> out;
    for (const auto& c : jones_vassiliev_coeffs(d, nmax)) out.push_back(c.str());
    return out;
  }, py::arg("diagram"), py::arg("nmax") = 3);

  m.def("verify_tensor_axioms", [] {
    py::dict out;
    for (const auto& c : verify_tensor_axioms(default_rmatrix()).checks) out[c.name.c_str()] = c.pass;
    return out;
  });

  m.def("random_reidemeister_moves", [](const Diagram& d, int moves, std::uint64_t seed,
                                        bool allow_virtual, int budget) {
    return random_moves(d, moves, seed, allow_virtual ? virtual_move_set() : classical_move_set(),
                        budget)
        .diagram;
  }, py::arg("diagram"), py::arg("moves") = 20, py::arg("seed") = 1,
     py::arg("allow_virtual") = false, py::arg("budget") = 14);

  m.def("search_unit_jones", [](int max_classical) {
    UnitJonesReport r = search_unit_jones(max_classical);
    py::dict out;
    out["searched"] = r.searched;
    out["unit_bracket"] = r.unit_f;
    py::list hits;
    for (const auto& h : r.hits) {
      py::dict hit;
      hit["gauss"] = h.gauss;
      hit["classical"] = h.classical;
      hit["virtual"] = h.virtual_crossings;
      hit["arrow"] = poly_dict(h.arrow_normalized);
      hits.append(hit);
    }
    out["hits"] = hits;
    return out;
  }, py::arg("max_classical") = 4);
}
