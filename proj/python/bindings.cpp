#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dchroma/coloring.hpp"
#include "dchroma/error.hpp"
#include "dchroma/families.hpp"
#include "dchroma/motion.hpp"
#include "dchroma/recipes.hpp"

namespace py = pybind11;
using namespace dchroma;

namespace {

// Big integers and JSON cross the boundary as strings; the package wrapper
// converts them.
std::string big(const BigInt& x) { return x.str(); }

std::vector<Vertex> side_class(const Graph& g, std::uint8_t side) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v)
    if ((*g.sides())[v] == side) out.push_back(v);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  static py::exception<Error> error(m, "DchromaError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      error(e.what());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t n, const std::vector<Edge>& edges) { return Graph(n, edges); }))
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("edges", &Graph::edges)
      .def("degree", &Graph::degree)
      .def("adjacent", &Graph::adjacent)
      .def("to_text", [](const Graph& g) { return graph_to_text(g); })
      .def_static("from_text", [](const std::string& s) { return graph_from_text(s); });

  m.def("levi_graph", py::overload_cast<int>(&levi_graph), py::arg("q"));
  m.def("levi_order1", &levi_order1, py::arg("k"), py::arg("n"));
  m.def("kneser_complement", &kneser_complement, py::arg("n"), py::arg("r"));
  m.def("complete_graph", &complete_graph, py::arg("n"));
  m.def("cycle_graph", &cycle_graph, py::arg("n"));
  m.def("weak_power", &weak_power, py::arg("g"), py::arg("n"));
  m.def("slope_graph", [](int q, std::vector<int> S) { return slope_graph(q, std::move(S)).first; }, py::arg("q"),
        py::arg("S"));
  m.def("levi_tensor", [](int q, unsigned r, unsigned s) { return levi_tensor_krs(q, r, s).first; }, py::arg("q"),
        py::arg("r"), py::arg("s"));

  m.def("automorphism_order",
        [](const Graph& g, const std::vector<std::uint32_t>& colors) { return big(automorphism_group(g, colors).order); },
        py::arg("g"), py::arg("colors") = std::vector<std::uint32_t>{});
  m.def("is_proper", [](const Graph& g, std::vector<std::uint32_t> c) { return is_proper(g, Coloring(std::move(c))); });
  m.def("is_distinguishing", [](const Graph& g, std::vector<std::uint32_t> c) {
    return is_distinguishing(g, Coloring(std::move(c))).distinguishing;
  });
  m.def("chromatic_number", [](const Graph& g) { return chromatic_number(g); });
  m.def(
      "distinguishing_chromatic_number",
      [](const Graph& g, unsigned max_k) {
        const auto r = distinguishing_chromatic_number(g, max_k);
        py::dict out;
        out["value"] = r.value ? py::cast(*r.value) : py::none();
        out["chromatic"] = r.chromatic;
        out["witness"] = r.witness ? py::cast(r.witness->colors()) : py::none();
        return out;
      },
      py::arg("g"), py::arg("max_k"));
  m.def("random_proper_coloring",
        [](const Graph& g, unsigned k, std::uint64_t seed) { return random_proper_coloring(g, k, seed).colors(); },
        py::arg("g"), py::arg("k"), py::arg("seed") = 7);

  m.def(
      "levi_expected_fixers",
      [](int q, unsigned t, bool pgammal) {
        auto G = pgammal ? pgammal3_action(q) : pgl3_action(q);
        const auto c1 = side_class(levi_graph(q), 0);
        return motion_report_to_json(exact_expected_fixers(G.ensure_elements(), c1, t)).dump();
      },
      py::arg("q"), py::arg("t"), py::arg("pgammal") = false);
  m.def("levi_bound", [](int q, unsigned t) { return bound_to_json(levi_bound(q, t)).dump(); });
  m.def("lg1_bound", [](unsigned n, unsigned k) { return bound_to_json(lg1_bound(n, k)).dump(); });
  m.def("max_fixed_ksets", [](unsigned n, unsigned k) { return big(max_fixed_ksets(n, k).F); });
  m.def(
      "favorable_fraction",
      [](int q, std::uint64_t trials, std::uint64_t seed) {
        return favorable_to_json(favorable_fraction(q, trials, seed, FavorableMode::MonteCarlo)).dump();
      },
      py::arg("q"), py::arg("trials"), py::arg("seed") = 7);

  m.def("recipe_names", &recipe_names);
  m.def(
      "run_recipe",
      [](const std::string& name, std::uint64_t seed) {
        RecipeConfig cfg;
        cfg.seed = seed;
        return run_recipe(name, cfg).dump();
      },
      py::arg("name"), py::arg("seed") = 7);
}
