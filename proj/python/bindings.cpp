#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "fourgen/bounds.hpp"
#include "fourgen/codes.hpp"
#include "fourgen/constructions.hpp"
#include "fourgen/curves.hpp"
#include "fourgen/genset.hpp"
#include "fourgen/io.hpp"
#include "fourgen/search.hpp"

namespace py = pybind11;
using namespace fourgen;

namespace {

py::dict report_dict(const VerifyReport& rep) {
  py::dict d;
  d["size"] = rep.size;
  d["spans"] = rep.spans_space;
  d["cap"] = rep.is_cap;
  d["four_general"] = rep.is_4general;
  d["complete"] = rep.is_complete ? py::object(py::bool_(*rep.is_complete)) : py::none();
  d["covered"] = rep.covered_count ? py::object(py::int_(*rep.covered_count)) : py::none();
  py::list viols;
  for (const auto& v : rep.violations) {
    py::dict vd;
    vd["kind"] = v.kind;
    vd["points"] = v.points;
    viols.append(vd);
  }
  d["violations"] = viols;
  return d;
}

PointSet construct_by_id(const std::string& id, int n, uint32_t q, uint32_t d, uint32_t alpha,
                         uint32_t h) {
  if (id == "frame") return frame(n, q);
  if (id == "elliptic_quadric") return elliptic_quadric(q);
  if (id == "theta0") return cyclic_theta0(d, q);
  if (id == "htw_y") return htw_y(d);
  if (id == "v_alpha") return v_alpha(d, alpha);
  if (id == "twisted_cubic") return twisted_cubic(q, h);
  if (id == "pg38") return pg38_seven_set();
  if (id == "triple_cubic") return triple_cubic(q);
  if (id == "pg55" || id == "pg516" || id == "pg62") return named_example(id);
  if (id == "set_o") return set_O(q);
  if (id == "abb_arc") return abb_arc(q);
  if (id == "golay23") return golay_cap23();
  if (id == "frame_shadow") return frame_secant_shadow(d);
  throw std::invalid_argument("unknown construction id: " + id);
}

}  // namespace

PYBIND11_MODULE(_fourgen, m) {
  m.doc() = "4-general sets in PG(n,q): constructions, verification, bounds and the code view";

  py::class_<PointSet>(m, "PointSet")
      .def_property_readonly("size", [](const PointSet& x) { return x.size(); })
      .def_property_readonly("n", [](const PointSet& x) { return x.space.n; })
      .def_property_readonly("q", [](const PointSet& x) { return x.space.q(); })
      .def("points",
           [](const PointSet& x) {
             py::list out;
             for (const auto& p : x.points) out.append(p.coords);
             return out;
           })
      .def("indices",
           [](const PointSet& x) {
             py::list out;
             for (const auto& p : x.points) out.append(p.index);
             return out;
           })
      .def("save", [](const PointSet& x, const std::string& path) { save_pointset_file(x, path); })
      .def("__len__", [](const PointSet& x) { return x.size(); })
      .def("__repr__", [](const PointSet& x) {
        std::ostringstream ss;
        ss << "PointSet(" << x.size() << " points in PG(" << x.space.n << "," << x.space.q()
           << "))";
        return ss.str();
      });

  m.def("construct", &construct_by_id, py::arg("id"), py::arg("n") = 3, py::arg("q") = 2,
        py::arg("d") = 2, py::arg("alpha") = 1, py::arg("h") = 1,
        "build a named point-set construction");
  m.def("load", &load_pointset_file, py::arg("path"));

  m.def(
      "verify",
      [](const PointSet& x, bool complete) {
        return report_dict(complete ? verify_complete(x) : verify_4general(x));
      },
      py::arg("pointset"), py::arg("complete") = false);

  m.def("extension_candidates", [](const PointSet& x) {
    py::list out;
    for (const auto& p : extension_candidates(x)) out.append(p.coords);
    return out;
  });

  m.def(
      "aut_order",
      [](const PointSet& x, bool semilinear) {
        auto res = aut_order(x, semilinear);
        if (!res.computable) throw std::runtime_error(res.method);
        return res.order;
      },
      py::arg("pointset"), py::arg("semilinear") = false);

  m.def("are_equivalent", &are_equivalent, py::arg("a"), py::arg("b"));

  m.def("code_params", [](const PointSet& x) {
    auto cp = code_params(x);
    py::dict d;
    d["N"] = cp.length;
    d["k"] = cp.dimension;
    d["d"] = cp.min_distance;
    d["rho"] = cp.covering_radius;
    d["q"] = cp.q;
    d["exceptions"] = cp.exception;
    return d;
  });

  m.def("bounds", [](int n, uint32_t q) {
    py::dict d;
    auto up = m3_upper(n, q);
    d["m3_upper"] = up.integer_bound;
    d["m3_equality_case"] = up.equality_case;
    auto low = t3_lower(n, q);
    d["t3_lower"] = low.effective.integer_bound;
    auto ag = ag_upper(n, q);
    d["ag_upper"] = ag.integer_bound;
    py::list refs;
    for (const auto& r : reference_values(n, q)) {
      py::dict rd;
      rd["name"] = r.name;
      rd["exact"] = r.exact;
      rd["value"] = r.value;
      refs.append(rd);
    }
    d["reference"] = refs;
    return d;
  });

  m.def(
      "greedy_complete",
      [](const PointSet& x, const std::string& order, uint64_t seed) {
        return greedy_complete(
            x, order == "random" ? CandidateOrder::Random : CandidateOrder::Lex, seed);
      },
      py::arg("pointset"), py::arg("order") = "lex", py::arg("seed") = 0);

  m.def(
      "max_size",
      [](int n, uint32_t q, double budget) {
        auto res = max_size(n, q, budget);
        py::dict d;
        d["max"] = res.max_size;
        d["proven"] = res.proven;
        d["nodes"] = res.nodes;
        return d;
      },
      py::arg("n"), py::arg("q"), py::arg("budget_sec") = 60.0);

  m.def("classify", [](int n, uint32_t q) {
    auto res = classify_complete(n, q);
    py::list classes;
    for (const auto& c : res.classes) {
      py::dict cd;
      cd["size"] = c.size;
      cd["aut"] = c.aut;
      cd["labeled_copies"] = c.labeled_copies;
      classes.append(cd);
    }
    py::dict d;
    d["classes"] = classes;
    d["pgl"] = res.pgl;
    d["consistency"] = res.consistency_ok;
    return d;
  });

  m.def("secant_graph_params", [](const PointSet& x) {
    auto g = secant_graph(x);
    py::dict d;
    d["vertices"] = g.vertex_count;
    d["degree"] = g.degree;
    d["lambda"] = g.lambda;
    d["mu"] = g.mu;
    d["triangular"] = g.triangular_parameters;
    return d;
  });

  m.def("nmds", [](const PointSet& x) {
    auto rep = nmds_check(x);
    py::dict d;
    d["every_4_span_solid"] = rep.every_4_span_solid;
    d["some_5_in_solid"] = rep.some_5_in_solid;
    d["every_6_span_space"] = rep.every_6_span_space;
    d["nmds"] = rep.is_nmds;
    return d;
  });

  m.def("cubic1_count", &cubic1_count, py::arg("q"));
  m.def("cubic2_count", &cubic2_count, py::arg("q"), py::arg("gamma"));
  m.def(
      "net_probe",
      [](uint32_t q, size_t trials, uint64_t seed) {
        auto rep = hermitian_net_probe(q, trials, seed);
        py::dict d;
        d["q"] = rep.q;
        d["seed"] = rep.seed;
        d["nets"] = rep.nets_probed;
        d["empty_base_loci"] = rep.empty_base_loci;
        d["pencil_sizes"] = rep.pencil_base_sizes;
        d["pencil_sizes_admissible"] = rep.pencil_sizes_admissible;
        return d;
      },
      py::arg("q"), py::arg("trials"), py::arg("seed"));
}
