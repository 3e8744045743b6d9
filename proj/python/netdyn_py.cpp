#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "netdyn/brokerage.hpp"
#include "netdyn/centrality.hpp"
#include "netdyn/cli.hpp"
#include "netdyn/cohesion.hpp"
#include "netdyn/dynamics.hpp"
#include "netdyn/error.hpp"
#include "netdyn/fixture.hpp"
#include "netdyn/generators.hpp"
#include "netdyn/io.hpp"
#include "netdyn/prestige.hpp"

namespace py = pybind11;
using namespace netdyn;

// Labels cross the boundary as plain str.
namespace pybind11::detail {
template <>
struct type_caster<NodeLabel> {
  PYBIND11_TYPE_CASTER(NodeLabel, const_name("str"));

  type_caster() : value("_") {}

  bool load(handle src, bool) {
    if (!PyUnicode_Check(src.ptr())) return false;
    value = NodeLabel(src.cast<std::string>());
    return true;
  }
  static handle cast(const NodeLabel& label, return_value_policy, handle) {
    return py::str(label.str()).release();
  }
};

template <>
struct type_caster<Edge> {
  PYBIND11_TYPE_CASTER(Edge, const_name("tuple[str, str]"));

  type_caster() : value{NodeLabel("_"), NodeLabel("_")} {}

  bool load(handle src, bool) {
    if (!py::isinstance<py::sequence>(src) || py::isinstance<py::str>(src)) return false;
    const auto seq = py::reinterpret_borrow<py::sequence>(src);
    if (seq.size() != 2) return false;
    value = Edge{NodeLabel(seq[0].cast<std::string>()), NodeLabel(seq[1].cast<std::string>())};
    return true;
  }
  static handle cast(const Edge& e, return_value_policy, handle) {
    return py::make_tuple(e.source.str(), e.target.str()).release();
  }
};
}  // namespace pybind11::detail

namespace {

Graph make_graph(const std::vector<NodeLabel>& nodes, const std::vector<Edge>& edges, bool directed,
                 const std::optional<std::vector<int>>& signs, const std::optional<std::vector<double>>& weights) {
  if (signs && signs->size() != edges.size()) throw DomainError("signs must have one entry per edge");
  if (weights && weights->size() != edges.size()) throw DomainError("weights must have one entry per edge");
  std::vector<EdgeInput> in;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    EdgeInput e{edges[i].source, edges[i].target};
    if (signs) e.sign = (*signs)[i];
    if (weights) e.weight = (*weights)[i];
    in.push_back(std::move(e));
  }
  return Graph::build(directed, nodes, std::move(in));
}

std::vector<Edge> graph_edges(const Graph& g) {
  std::vector<Edge> out;
  for (std::size_t k = 0; k < g.edge_count(); ++k) out.push_back(g.edge_labels(k));
  return out;
}

Measure measure_of(const std::string& text) {
  if (auto m = parse_measure(text)) return *m;
  throw DomainError("unknown measure '" + text + "'");
}

Convention convention_of(const std::string& text) {
  if (auto c = parse_convention(text)) return *c;
  throw DomainError("unknown convention '" + text + "'");
}

std::map<NodeLabel, double> scores(const CentralityReport& r) {
  std::map<NodeLabel, double> out;
  for (std::size_t i = 0; i < r.nodes.size(); ++i) out.emplace(r.nodes[i], r.scores[i]);
  return out;
}

// Events as (sequence, kind, payload, note); payload is a label or a pair.
using PyEvent = std::tuple<std::uint64_t, std::string, py::object, std::string>;

MutationEvent to_event(const PyEvent& t) {
  const auto& [seq, kind_text, payload, note] = t;
  const auto kind = parse_event_kind(kind_text);
  if (!kind) throw DomainError("unknown event kind '" + kind_text + "'");
  switch (*kind) {
    case EventKind::add_node: return MutationEvent::add_node(seq, payload.cast<NodeLabel>(), note);
    case EventKind::remove_node: return MutationEvent::remove_node(seq, payload.cast<NodeLabel>(), note);
    case EventKind::add_link: {
      const auto e = payload.cast<Edge>();
      return MutationEvent::add_link(seq, e.source, e.target, note);
    }
    case EventKind::remove_link: {
      const auto e = payload.cast<Edge>();
      return MutationEvent::remove_link(seq, e.source, e.target, note);
    }
  }
  throw DomainError("unknown event kind");
}

PyEvent from_event(const MutationEvent& e) {
  py::object payload = e.is_node_event() ? py::cast(e.node()) : py::cast(e.link());
  return {e.sequence, std::string(to_string(e.kind)), payload, e.note};
}

std::vector<MutationEvent> to_log(const std::vector<PyEvent>& events) {
  std::vector<MutationEvent> log;
  for (const auto& t : events) log.push_back(to_event(t));
  return log;
}

}  // namespace

PYBIND11_MODULE(netdyn, m) {
  m.doc() = "Static and dynamic social network analysis";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<GraphError>(m, "GraphError", error);
  auto domain = py::register_exception<DomainError>(m, "DomainError", error);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", domain);
  py::register_exception<MutationError>(m, "MutationError", error);
  py::register_exception<ParseError>(m, "ParseError", error);

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("nodes"), py::arg("edges") = std::vector<Edge>{},
           py::arg("directed") = false, py::arg("signs") = py::none(), py::arg("weights") = py::none())
      .def_property_readonly("directed", &Graph::directed)
      .def_property_readonly("nodes", [](const Graph& g) { return std::vector<NodeLabel>(g.nodes().begin(), g.nodes().end()); })
      .def_property_readonly("edges", &graph_edges)
      .def_property_readonly("is_signed", &Graph::is_signed)
      .def_property_readonly("is_weighted", &Graph::is_weighted)
      .def_property_readonly("signs", [](const Graph& g) {
        std::vector<int> out;
        for (std::size_t k = 0; k < g.edge_count(); ++k) out.push_back(g.sign(k));
        return out;
      })
      .def_property_readonly("weights", [](const Graph& g) {
        std::vector<double> out;
        for (std::size_t k = 0; k < g.edge_count(); ++k) out.push_back(g.weight(k));
        return out;
      })
      .def_property_readonly("warnings", [](const Graph& g) {
        return std::vector<std::string>(g.warnings().begin(), g.warnings().end());
      })
      .def("node_count", &Graph::node_count)
      .def("edge_count", &Graph::edge_count)
      .def("digest", &Graph::digest)
      .def("has_edge", py::overload_cast<const NodeLabel&, const NodeLabel&>(&Graph::has_edge, py::const_))
      .def("degree", [](const Graph& g, const NodeLabel& v) { return g.degree(g.index_of(v)); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__len__", &Graph::node_count)
      .def("__repr__", [](const Graph& g) {
        return "<netdyn.Graph " + std::string(g.directed() ? "directed" : "undirected") + " n=" +
               std::to_string(g.node_count()) + " m=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("fixture_g", &fixture_g);

  m.def(
      "generate",
      [](const std::string& kind, std::size_t n, std::size_t k, double p, std::size_t m_per_node, std::uint64_t seed) {
        const auto parsed = parse_generator_kind(kind);
        if (!parsed) throw DomainError("unknown generator kind '" + kind + "'");
        return generate(GeneratorSpec{*parsed, n, k, p, m_per_node, seed});
      },
      py::arg("kind"), py::arg("n"), py::arg("k") = 0, py::arg("p") = 0.0, py::arg("m_per_node") = 1,
      py::arg("seed") = 0);

  m.def(
      "centrality",
      [](const Graph& g, const std::string& measure, const std::string& convention) {
        return scores(centrality(g, measure_of(measure), convention_of(convention)));
      },
      py::arg("graph"), py::arg("measure"), py::arg("convention"));
  m.def("conventions", [](const std::string& measure) {
    std::vector<std::string> out;
    for (Convention c : conventions_for(measure_of(measure))) out.emplace_back(to_string(c));
    return out;
  });

  m.def("density", &density);
  m.def("components", [](const Graph& g) { return components(g).blocks(); });
  m.def("k_core", [](const Graph& g, std::size_t k) { return k_core(g, k).nodes(); });
  m.def("core_numbers", &core_number);
  m.def("cliques", &cliques);
  m.def("communities", [](const Graph& g) {
    const CommunityResult r = communities(g);
    return py::make_tuple(r.partition.blocks(), r.modularity);
  });
  m.def("modularity", [](const Graph& g, const std::map<NodeLabel, std::size_t>& groups) {
    return modularity(g, Partition(groups));
  });
  m.def("is_balanced", [](const Graph& g) {
    const BalanceResult r = is_balanced(SignedGraph(g));
    py::object witness = r.witness ? py::cast(r.witness->blocks()) : py::none();
    return py::make_tuple(r.balanced, witness, r.violating_cycle);
  });

  m.def("bridges", &bridges);
  m.def("cut_vertices", &cut_vertices);
  m.def("bi_components", &bi_components);
  m.def("structural_holes", [](const Graph& g, const NodeLabel& ego) {
    return structural_holes(ego_network(g, ego));
  });

  m.def("indegree_prestige", &indegree_prestige);
  m.def("influence_domain", &influence_domain);
  m.def("proximity_prestige", &proximity_prestige);
  m.def("dyad_census", [](const Graph& g) {
    const DyadCensus c = dyad_census(g);
    return py::make_tuple(c.mutual, c.asymmetric, c.null);
  });

  m.def("write_network", &write_network);
  m.def("read_network", [](const std::string& text) { return read_network(text); });
  m.def("write_event_log", [](const std::vector<PyEvent>& events) { return write_event_log(to_log(events)); });
  m.def("read_event_log", [](const std::string& text) {
    std::vector<PyEvent> out;
    for (const MutationEvent& e : read_event_log(text)) out.push_back(from_event(e));
    return out;
  });

  m.def(
      "apply_log",
      [](const Graph& g, const std::vector<PyEvent>& events, const std::string& mode) {
        if (mode != "strict" && mode != "lenient") throw DomainError("mode must be strict or lenient");
        const History h = apply_log(g, to_log(events), mode == "strict" ? ApplyMode::strict : ApplyMode::lenient);
        return py::make_tuple(h.final(), h.warnings());
      },
      py::arg("graph"), py::arg("events"), py::arg("mode") = "strict");
  m.def("classify_log", [](const std::vector<PyEvent>& events) {
    const DynamicsModel model = classify_log(to_log(events));
    return py::make_tuple(model.id, model.code());
  });
  m.def("case_study_log", [](const std::string& step) {
    for (const CaseStudyStep& s : case_study_steps()) {
      if (s.name != step) continue;
      std::vector<PyEvent> out;
      for (const MutationEvent& e : s.log) out.push_back(from_event(e));
      return out;
    }
    throw DomainError("unknown case-study step '" + step + "'");
  });
  m.def("replay_case_study", [] {
    py::list out;
    for (const ReplayOutcome& o : replay_case_study()) {
      py::dict row;
      row["step"] = o.step;
      row["model"] = o.model_id;
      row["nodes"] = o.nodes;
      row["edges"] = o.edges;
      row["components"] = o.components;
      row["errata"] = o.errata;
      out.append(row);
    }
    return out;
  });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
