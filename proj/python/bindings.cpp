#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <sstream>

#include "supergraphs/analytics.hpp"
#include "supergraphs/catalog.hpp"
#include "supergraphs/errors.hpp"
#include "supergraphs/export.hpp"
#include "supergraphs/order_spectrum.hpp"
#include "supergraphs/quotient.hpp"
#include "supergraphs/scan.hpp"
#include "supergraphs/super_graph.hpp"
#include "supergraphs/verify.hpp"
#include "supergraphs/witness.hpp"

namespace py = pybind11;
namespace sg = supergraphs;

namespace {

using release_gil = py::call_guard<py::gil_scoped_release>;

// None for an empty graph, inf when disconnected.
py::object diameter_value(sg::Diameter d) {
  if (d.empty) return py::none();
  if (d.infinite) return py::float_(INFINITY);
  return py::int_(d.value);
}

py::dict component_dict(sg::ComponentReport const& r) {
  py::dict d;
  d["count"] = r.count;
  d["sizes"] = r.sizes;
  d["connected"] = r.is_connected;
  return d;
}

sg::GraphKind parse_kind(std::string const& graph, std::string const& relation) {
  return {sg::parse_base_graph(graph), sg::parse_relation(relation)};
}

py::object witness_dict(std::optional<sg::WitnessPair> const& w) {
  if (!w) return py::none();
  py::dict d;
  d["family"] = sg::to_string(w->family);
  d["n"] = w->n;
  d["t1"] = w->t1;
  d["alpha"] = w->alpha;
  d["t2"] = w->t2;
  d["beta"] = w->beta;
  return d;
}

}  // namespace

PYBIND11_MODULE(_supergraphs, m) {
  m.doc() = "Power, enhanced power and commuting super graphs of finite groups";

  py::register_exception<sg::BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<sg::HypothesisViolation>(m, "HypothesisViolation", PyExc_ValueError);
  // InvalidParameter derives from std::invalid_argument, which pybind11 maps to ValueError.

  m.attr("DEFAULT_BUDGET") = sg::kDefaultBudget;
  m.attr("SPECTRUM_CAP") = sg::kSpectrumCap;

  py::class_<sg::GroupTable>(m, "Group")
      .def_property_readonly("label", &sg::GroupTable::label)
      .def("__len__", &sg::GroupTable::size)
      .def_property_readonly("identity", &sg::GroupTable::identity)
      .def("mul", &sg::GroupTable::mul)
      .def("inv", &sg::GroupTable::inv)
      .def("order_of", &sg::GroupTable::order_of)
      .def_property_readonly("orders", [](sg::GroupTable const& g) {
        return std::vector<sg::Order>(g.orders().begin(), g.orders().end());
      })
      .def("is_abelian", [](sg::GroupTable const& g) { return sg::is_abelian(g); })
      .def("is_cyclic", [](sg::GroupTable const& g) { return sg::is_cyclic(g); })
      .def("exponent", [](sg::GroupTable const& g) { return sg::exponent(g); })
      .def("center", [](sg::GroupTable const& g) { return sg::center(g); })
      .def("__repr__", [](sg::GroupTable const& g) {
        return "<Group " + g.label() + " of order " + std::to_string(g.size()) + ">";
      });

  m.def("group", &sg::group_from_label, py::arg("label"), py::arg("budget") = sg::kDefaultBudget,
        release_gil(), "Build a group from a label such as 'D14' or 'S3xZ3'.");
  m.def("cyclic", &sg::make_cyclic, py::arg("n"));
  m.def("dihedral", &sg::make_dihedral, py::arg("two_n"));
  m.def("quaternion", &sg::make_generalized_quaternion, py::arg("four_n"));
  m.def("symmetric", &sg::make_symmetric, py::arg("n"), py::arg("budget") = sg::kDefaultBudget,
        release_gil());
  m.def("alternating", &sg::make_alternating, py::arg("n"), py::arg("budget") = sg::kDefaultBudget,
        release_gil());
  m.def("direct_product", &sg::direct_product, py::arg("g"), py::arg("h"),
        py::arg("budget") = sg::kDefaultBudget, release_gil());
  m.def("catalog_labels", [] {
    std::vector<std::string> out;
    for (auto const& e : sg::GroupCatalog::standard().entries()) out.push_back(e.label);
    return out;
  });

  py::class_<sg::DenseGraph>(m, "Graph")
      .def("__len__", &sg::DenseGraph::size)
      .def_property_readonly("labels", &sg::DenseGraph::labels)
      .def("has_edge", &sg::DenseGraph::has_edge)
      .def("degree", &sg::DenseGraph::degree)
      .def("edge_count", &sg::DenseGraph::edge_count)
      .def("neighbors", &sg::DenseGraph::neighbors)
      .def("is_complete", &sg::DenseGraph::is_complete)
      .def("edges",
           [](sg::DenseGraph const& gr) {
             std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
             for (std::size_t u = 0; u < gr.size(); ++u)
               sg::for_each_bit(gr.row(u), [&](std::size_t v) {
                 if (u < v) out.emplace_back(gr.label(u), gr.label(v));
               });
             return out;
           },
           "Edges as pairs of element labels.")
      .def("__eq__", [](sg::DenseGraph const& a, sg::DenseGraph const& b) { return a == b; })
      .def("bits", &sg::adjacency_bits);

  m.def(
      "build",
      [](sg::GroupTable const& g, std::string const& graph, std::string const& relation, bool reduced) {
        auto gr = sg::build(g, parse_kind(graph, relation));
        return reduced ? sg::reduced_graph(gr) : gr;
      },
      py::arg("group"), py::arg("graph") = "commuting", py::arg("relation") = "equality",
      py::arg("reduced") = false, release_gil(),
      "Build one of the nine super graphs; graph is power | enhanced_power | commuting and "
      "relation is equality | conjugacy | order.");
  m.def("reduced", &sg::reduced_graph, py::arg("graph"));
  m.def("dominant_vertices", &sg::dominant_vertices, py::arg("graph"));
  m.def("components", [](sg::DenseGraph const& gr) { return component_dict(sg::components(gr)); });
  m.def("diameter", [](sg::DenseGraph const& gr) { return diameter_value(sg::diameter(gr)); });
  m.def("to_dot", [](sg::DenseGraph const& gr, sg::GroupTable const& g, std::string const& name) {
    std::ostringstream out;
    sg::write_dot(out, gr, g, name);
    return out.str();
  }, py::arg("graph"), py::arg("group"), py::arg("name") = "G");

  m.def(
      "verify_equality",
      [](sg::GroupTable const& g) {
        py::list out;
        for (auto const& v : sg::verify_equality_theorems(g)) {
          py::dict d;
          d["pair"] = sg::to_string(v.first) + "=" + sg::to_string(v.second);
          d["equal"] = v.graphs_equal;
          d["predicted"] = v.predicted_condition ? py::object(py::bool_(*v.predicted_condition)) : py::none();
          d["condition"] = v.condition_name;
          d["theorem_id"] = v.theorem_id;
          d["consistent"] = v.consistent();
          out.append(d);
        }
        return out;
      },
      py::arg("group"));
  m.def(
      "verify_completeness",
      [](sg::GroupTable const& g) {
        py::list out;
        for (auto const& v : sg::verify_completeness(g)) {
          py::dict d;
          d["graph"] = sg::to_string(v.kind);
          d["complete"] = v.complete;
          d["predicted"] = v.predicted;
          d["condition"] = v.condition_name;
          d["consistent"] = v.consistent();
          out.append(d);
        }
        return out;
      },
      py::arg("group"));

  py::class_<sg::OrderSpectrum>(m, "OrderSpectrum")
      .def_property_readonly("family", [](sg::OrderSpectrum const& s) { return sg::to_string(s.family); })
      .def_readonly("n", &sg::OrderSpectrum::n)
      .def_readonly("label", &sg::OrderSpectrum::label)
      .def_readonly("orders", &sg::OrderSpectrum::orders)
      .def_readonly("mu", &sg::OrderSpectrum::mu)
      .def_readonly("l", &sg::OrderSpectrum::l)
      .def_readonly("class_sizes", &sg::OrderSpectrum::class_sizes)
      .def("__contains__", &sg::OrderSpectrum::contains)
      .def("dominant_orders", [](sg::OrderSpectrum const& s) { return sg::dominant_orders(s); })
      .def(
          "reduced_components",
          [](sg::OrderSpectrum const& s) {
            return sg::quotient_component_orders(sg::quotient_graph(s, true));
          },
          "Order classes of each component of the reduced order commuting graph.")
      .def("reduced_diameter", [](sg::OrderSpectrum const& s) {
        return diameter_value(sg::quotient_diameter(sg::quotient_graph(s, true)));
      });

  m.def("spectrum",
        [](std::string const& family, unsigned n, unsigned cap) {
          return sg::spectrum_for(sg::parse_family(family), n, cap);
        },
        py::arg("family"), py::arg("n"), py::arg("cap") = sg::kSpectrumCap);
  m.def("spectrum_of", &sg::spectrum_explicit, py::arg("group"));
  m.def("minimal_support",
        [](sg::Order d, std::string const& family) {
          return sg::minimal_support(d, sg::parse_family(family));
        },
        py::arg("d"), py::arg("family") = "symmetric");
  m.def(
      "predict_connectivity",
      [](unsigned n, std::string const& family) {
        auto p = sg::predict_connectivity(n, sg::parse_family(family));
        py::dict d;
        d["connected"] = p.connected;
        d["components"] = p.components;
        return d;
      },
      py::arg("n"), py::arg("family"));
  m.def(
      "search_witness",
      [](unsigned n, std::string const& family) {
        std::optional<sg::WitnessPair> w;
        auto f = sg::parse_family(family);
        {
          py::gil_scoped_release release;
          w = sg::search_witness(n, f);
        }
        return witness_dict(w);
      },
      py::arg("n"), py::arg("family"));
  m.def(
      "is_valid_witness",
      [](std::string const& family, unsigned n, std::vector<sg::Order> t1, std::vector<unsigned> alpha,
         std::vector<sg::Order> t2, std::vector<unsigned> beta) {
        return sg::is_valid_witness({sg::parse_family(family), n, std::move(t1), std::move(alpha),
                                     std::move(t2), std::move(beta)});
      },
      py::arg("family"), py::arg("n"), py::arg("t1"), py::arg("alpha"), py::arg("t2"), py::arg("beta"));
  m.def(
      "find_t_prime",
      [](unsigned n, std::vector<sg::Order> const& t, std::string const& family) {
        return sg::find_t_prime(n, t, sg::parse_family(family)).primes;
      },
      py::arg("n"), py::arg("t"), py::arg("family") = "symmetric");
  m.def("prime_window_count", &sg::prime_window_count, py::arg("n"));

  m.def(
      "scan",
      [](std::string const& family, unsigned first, unsigned last, unsigned workers) {
        auto f = sg::parse_family(family);
        std::vector<sg::ScanRow> rows;
        {
          py::gil_scoped_release release;
          rows = sg::conjecture_scan(f, first, last, workers);
        }
        py::list out;
        for (auto const& r : rows) {
          py::dict d;
          d["n"] = r.n;
          d["connected"] = r.connected;
          d["components"] = r.components;
          d["diameter"] = diameter_value(r.diameter);
          d["witness"] = witness_dict(r.witness);
          d["counterexample"] = r.counterexample;
          out.append(d);
        }
        return out;
      },
      py::arg("family"), py::arg("first"), py::arg("last"), py::arg("workers") = 1,
      "Quotient connectivity, diameter and diameter-3 witness for each n in [first, last].");
  m.def(
      "scan_csv",
      [](std::string const& family, unsigned first, unsigned last, unsigned workers) {
        auto f = sg::parse_family(family);
        std::ostringstream out;
        {
          py::gil_scoped_release release;
          sg::write_scan_csv(out, sg::conjecture_scan(f, first, last, workers));
        }
        return out.str();
      },
      py::arg("family"), py::arg("first"), py::arg("last"), py::arg("workers") = 1);
}
