#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "orbit_atlas/monoid.hpp"
#include "orbit_atlas/permutation.hpp"
#include "orbit_atlas/pil.hpp"
#include "orbit_atlas/serialize.hpp"
#include "orbit_atlas/series.hpp"
#include "orbit_atlas/verify.hpp"

namespace py = pybind11;
namespace oa = orbit_atlas;

namespace {

py::object to_python(const oa::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::int_ big(const oa::BigInt& v) { return py::int_(py::module_::import("builtins").attr("int")(v.str())); }

oa::ActionLabel parse_label(const std::string& kind, int k) {
  if (kind == "right") return oa::ActionLabel::right(k);
  if (kind == "left") return oa::ActionLabel::left(k);
  if (kind == "exotic_first") return oa::ActionLabel::exotic_first();
  if (kind == "exotic_second") return oa::ActionLabel::exotic_second();
  throw std::invalid_argument("unknown action kind " + kind);
}

oa::StdPair std_pair(const std::vector<int>& w, const std::vector<int>& u, int i) {
  return {i, oa::Permutation(w), oa::Permutation(u)};
}

std::vector<int> images(const oa::Permutation& w) { return {w.images().begin(), w.images().end()}; }

}  // namespace

PYBIND11_MODULE(_orbit_atlas, m) {
  m.doc() = "Orbits of line stabilizers on the flag variety of GL(n)";

  py::class_<oa::Permutation>(m, "Permutation")
      .def(py::init<std::vector<int>>(), py::arg("images"))
      .def_static("identity", &oa::Permutation::identity)
      .def_static("simple_reflection", &oa::Permutation::simple_reflection)
      .def_property_readonly("degree", &oa::Permutation::degree)
      .def_property_readonly("images", &images)
      .def("inverse", &oa::Permutation::inverse)
      .def("__call__", &oa::Permutation::operator())
      .def("__mul__", &oa::compose)
      .def("__eq__", [](const oa::Permutation& a, const oa::Permutation& b) { return a == b; })
      .def("__hash__", [](const oa::Permutation& w) { return py::hash(py::tuple(py::cast(images(w)))); })
      .def("__repr__", [](const oa::Permutation& w) { return "Permutation(" + oa::to_string(w) + ")"; });

  m.def("length", &oa::length);
  m.def("bruhat_leq", &oa::bruhat_leq);
  m.def("monoid_right", [](const oa::Permutation& w, int k) { return oa::monoid_right(w, {k}); });
  m.def("monoid_left", [](const oa::Permutation& w, int k) { return oa::monoid_left(w, {k}); });
  m.def("sigma_cycle", &oa::sigma_cycle, py::arg("i"), py::arg("n"));
  m.def("tau_from_delta", [](const std::vector<int>& delta, int i, int n) {
    return oa::tau_from_delta(delta, i, n);
  }, py::arg("delta"), py::arg("i"), py::arg("n"));
  m.def("twisted_length", &oa::twisted_length);

  m.def("count_pil", [](int n) { return big(oa::count_pil(n)); });
  m.def("count_orbits", [](int n, int i) { return big(oa::count_orbits(n, i)); });
  m.def("egf_si_coeff", [](int shift, int n) { return big(oa::egf_si_coeff(shift, n)); });
  m.def("total_orbit_counts", [](int order) {
    const oa::RationalSeries s = oa::total_orbit_egf(order);
    py::list out;
    for (int n = 0; n <= order; ++n) out.append(big(s.egf_coefficient(n)));
    return out;
  }, "n! [x^n] of the total orbit-count series for n = 0..order");

  m.def("enumerate_orbits", [](int n, int i) {
    oa::json rows = oa::json::array();
    for (const auto& d : oa::enumerate_decorated(n, i)) {
      const oa::IStandardFlag f = oa::decorated_to_flag(d);
      const oa::SharePair p = oa::sharepair_of(d);
      rows.push_back({{"decorated", d},
                      {"flag", f},
                      {"pair", p},
                      {"standardized_pair", oa::standardize(p)},
                      {"pil", oa::flag_to_pilpair(f)},
                      {"partial", oa::decorated_to_partial(d)}});
    }
    return to_python(rows);
  }, "Every orbit for (n, i) in all parametrizations, as JSON-shaped dicts");
  m.def("enumerate_pil_with_list", [](int n, int k) {
    return to_python(oa::json(oa::enumerate_pil_with_list(n, k)));
  });
  m.def("is_share_pair", [](const std::vector<int>& w, const std::vector<int>& y, int i) {
    return oa::is_share_pair(oa::Permutation(w), oa::Permutation(y), i);
  });

  m.def("act", [](const std::vector<int>& w, const std::vector<int>& u, int i,
                  const std::string& kind, int k) {
    const oa::StdPair q = oa::act(std_pair(w, u, i), parse_label(kind, k));
    return py::make_tuple(images(q.w), images(q.u));
  }, py::arg("w"), py::arg("u"), py::arg("i"), py::arg("kind"), py::arg("k") = 0,
        "Act on a standardized pair; kind is right, left, exotic_first or exotic_second");
  m.def("root_type", [](const std::vector<int>& w, const std::vector<int>& u, int i,
                        const std::string& kind, int k) {
    return oa::to_string(oa::root_type(std_pair(w, u, i), parse_label(kind, k)));
  }, py::arg("w"), py::arg("u"), py::arg("i"), py::arg("kind"), py::arg("k") = 0);
  m.def("closure_leq", [](const std::vector<int>& w1, const std::vector<int>& u1,
                          const std::vector<int>& w2, const std::vector<int>& u2, int i) {
    return oa::closure_leq(std_pair(w1, u1, i), std_pair(w2, u2, i));
  });

  m.def("orbit_graph", [](int n, int i) { return to_python(oa::graph_to_json(oa::weak_order_graph(n, i))); },
        "The weak-order graph as a dict (nodes, action_edges, closure covers)");
  m.def("orbit_graph_dot", [](int n, int i) { return oa::graph_to_dot(oa::weak_order_graph(n, i)); });
  m.def("triangle", [](int max_n) { return to_python(oa::triangle_json(max_n)); });

  m.def("run_verification", [](int max_n, int order) {
    py::list out;
    for (const auto& r : oa::run_verification(max_n, order)) {
      py::dict d;
      d["name"] = r.name;
      d["passed"] = r.passed;
      d["detail"] = r.detail;
      d["informational"] = r.informational;
      out.append(d);
    }
    return out;
  }, py::arg("max_n") = 5, py::arg("order") = 8);
}
