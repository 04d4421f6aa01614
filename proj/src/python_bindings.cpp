#include <sstream>

#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sgraph/cli.hpp"
#include "sgraph/cycles.hpp"
#include "sgraph/enumerate.hpp"
#include "sgraph/families.hpp"
#include "sgraph/io.hpp"
#include "sgraph/proofmoves.hpp"
#include "sgraph/spectra.hpp"
#include "sgraph/switching.hpp"

namespace py = pybind11;
using namespace sgraph;

namespace {

Sign to_sign(int s) { return sign_from_int(s); }

/// Exact coefficients as Python ints, lowest degree first.
py::list coefficients(const IntPolynomial& p) {
  py::list out;
  py::object int_type = py::module_::import("builtins").attr("int");
  for (const auto& c : p.coefficients()) out.append(int_type(c.str()));
  return out;
}

py::object json_to_python(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

std::optional<std::vector<Vertex>> cycle_vertices(const std::optional<CycleWitness>& c) {
  if (!c) return std::nullopt;
  return c->vertices;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Signed graph spectra, switching and extremal verification";
  m.attr("__version__") = cli::kVersion;

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<SignedGraph>(m, "SignedGraph")
      .def(py::init<std::size_t>(), py::arg("n"))
      .def_property_readonly("order", &SignedGraph::order)
      .def_property_readonly("edge_count", &SignedGraph::edge_count)
      .def(
          "set_edge", [](SignedGraph& g, Vertex u, Vertex v, int s) -> SignedGraph& { return g.set_edge(u, v, to_sign(s)); },
          py::arg("u"), py::arg("v"), py::arg("sign") = 1, py::return_value_policy::reference_internal)
      .def("remove_edge", &SignedGraph::remove_edge, py::return_value_policy::reference_internal)
      .def("adjacent", &SignedGraph::adjacent)
      .def("entry", &SignedGraph::entry)
      .def("degree", &SignedGraph::degree)
      .def("neighbors", &SignedGraph::neighbors)
      .def("edges",
           [](const SignedGraph& g) {
             std::vector<std::tuple<Vertex, Vertex, int>> out;
             for (const auto& e : g.edges()) out.emplace_back(e.u, e.v, to_int(e.sign));
             return out;
           })
      .def("adjacency_matrix", [](const SignedGraph& g) { return g.adjacency_matrix().to_rows(); })
      .def("to_sg", [](const SignedGraph& g) { return to_sg(g); })
      .def("to_graph6", [](const SignedGraph& g) { return to_graph6(g); })
      .def(py::self == py::self)
      .def("__repr__", [](const SignedGraph& g) {
        std::ostringstream os;
        os << "SignedGraph(n=" << g.order() << ", m=" << g.edge_count() << ")";
        return os.str();
      });

  m.def("parse_sg", [](const std::string& text) { return parse_sg(text); });
  m.def("parse_graph6", [](const std::string& text) { return parse_graph6(text); });
  m.def("ingest_graph_list", [](const std::string& text) { return ingest_graph_list_text(text); });

  m.def("gamma1", &gamma1, py::arg("n"));
  m.def("gamma2", &gamma2, py::arg("n"));
  m.def("complete", [](std::size_t n, int s) { return complete_signed(n, to_sign(s)); }, py::arg("n"),
        py::arg("sign") = 1);
  m.def("f_cubic", [](std::size_t n) { return coefficients(f_cubic(n)); });
  m.def("g_cubic", [](std::size_t n) { return coefficients(g_cubic(n)); });
  m.def("predicted_index_gamma1", [](std::size_t n) { return predicted_index_gamma1(n); });
  m.def("q1_matrix", [](std::size_t n) { return q1_matrix(n).to_rows(); });
  m.def("q2_matrix", [](std::size_t n) { return q2_matrix(n).to_rows(); });

  m.def("spectrum", [](const SignedGraph& g) {
    const SpectrumReport r = spectrum(g);
    py::dict d;
    d["eigenvalues"] = r.eigenvalues;
    d["lambda1"] = r.lambda1;
    d["leading_vector"] = r.leading_vector;
    d["residual"] = r.residual;
    return d;
  });
  m.def("index", [](const SignedGraph& g) { return sgraph::index(g); });
  m.def("spectral_radius", &spectral_radius);
  m.def("char_poly", [](const SignedGraph& g) { return coefficients(char_poly_exact(g)); },
        "Exact coefficients of det(xI - A), lowest degree first.");
  m.def("quotient", [](const SignedGraph& g, const std::string& partition) -> py::object {
    const auto q = quotient_matrix(g.adjacency_matrix(), VertexPartition::parse(g.order(), partition));
    if (!q.equitable()) return py::none();
    return py::cast(q.quotient->to_rows());
  });

  m.def("switch_at", [](const SignedGraph& g, std::vector<Vertex> u) { return switch_at(g, SwitchSet(std::move(u))); });
  m.def("is_balanced", [](const SignedGraph& g) { return is_balanced(g).balanced; });
  m.def("switching_equivalent", &switching_equivalent);
  m.def("switching_isomorphic", &switching_isomorphic);
  m.def("nonneg_form", [](const SignedGraph& g) { return nonneg_eigenvector_form(g).graph; });

  m.def("find_negative_ck", [](const SignedGraph& g, std::size_t k) { return cycle_vertices(find_negative_ck(g, k)); });
  m.def("is_ck_negative_free", &is_ck_negative_free);
  m.def("shortest_negative_cycle", [](const SignedGraph& g) { return cycle_vertices(shortest_negative_cycle(g)); });

  m.def("enumerate_underlying", &enumerate_underlying, py::arg("n"));
  m.def("switching_classes", &switching_classes);
  m.def(
      "verify_theorem",
      [](std::size_t n, unsigned jobs) {
        VerifyOptions opt;
        opt.jobs = jobs;
        VerificationReport r;
        {
          py::gil_scoped_release release;
          r = verify_theorem(n, opt);
        }
        return json_to_python(to_json(r));
      },
      py::arg("n"), py::arg("jobs") = 1);
  m.def("verify_lemma33", &verify_lemma33);

  m.def(
      "greedy_ascent",
      [](std::size_t n, std::uint64_t seed, std::size_t max_steps) {
        const AscentResult r = greedy_ascent(n, seed, max_steps);
        py::dict d;
        d["trajectory"] = r.trajectory;
        std::vector<std::string> moves;
        for (const auto& s : r.steps) moves.push_back(s.move.describe());
        d["moves"] = moves;
        d["graph"] = r.graph;
        d["local_maximum"] = r.local_maximum;
        return d;
      },
      py::arg("n"), py::arg("seed"), py::arg("max_steps"));

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
