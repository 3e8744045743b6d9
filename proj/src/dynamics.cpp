#include "netdyn/dynamics.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "netdyn/error.hpp"

namespace netdyn {
namespace {

constexpr std::array<DynamicsModel, 16> kModels = [] {
  std::array<DynamicsModel, 16> models{};
  constexpr std::array changes{Change::add, Change::remove, Change::both};
  int id = 1;
  models[0] = {id++, Change::none, Change::none};
  for (Change c : changes) models[static_cast<std::size_t>(id - 1)] = {id, c, Change::none}, ++id;
  for (Change c : changes) models[static_cast<std::size_t>(id - 1)] = {id, Change::none, c}, ++id;
  for (Change nodes : changes) {
    for (Change links : changes) models[static_cast<std::size_t>(id - 1)] = {id, nodes, links}, ++id;
  }
  return models;
}();

std::string edge_text(const Edge& e, bool directed) {
  return e.source.str() + (directed ? "->" : "-") + e.target.str();
}

Change combine(bool added, bool removed) {
  if (added && removed) return Change::both;
  if (added) return Change::add;
  if (removed) return Change::remove;
  return Change::none;
}

std::string_view prefix(Change c) {
  switch (c) {
    case Change::add: return "+";
    case Change::remove: return "-";
    case Change::both: return "+-";
    case Change::none: break;
  }
  return "";
}

}  // namespace

std::string_view to_string(EventKind kind) noexcept {
  switch (kind) {
    case EventKind::add_node: return "add_node";
    case EventKind::remove_node: return "remove_node";
    case EventKind::add_link: return "add_link";
    case EventKind::remove_link: return "remove_link";
  }
  return "?";
}

std::optional<EventKind> parse_event_kind(std::string_view text) noexcept {
  for (EventKind k : {EventKind::add_node, EventKind::remove_node, EventKind::add_link, EventKind::remove_link}) {
    if (to_string(k) == text) return k;
  }
  return std::nullopt;
}

MutationEvent MutationEvent::add_node(std::uint64_t seq, NodeLabel v, std::string note) {
  return {seq, EventKind::add_node, std::move(v), std::move(note)};
}
MutationEvent MutationEvent::remove_node(std::uint64_t seq, NodeLabel v, std::string note) {
  return {seq, EventKind::remove_node, std::move(v), std::move(note)};
}
MutationEvent MutationEvent::add_link(std::uint64_t seq, NodeLabel a, NodeLabel b, std::string note) {
  return {seq, EventKind::add_link, Edge{std::move(a), std::move(b)}, std::move(note)};
}
MutationEvent MutationEvent::remove_link(std::uint64_t seq, NodeLabel a, NodeLabel b, std::string note) {
  return {seq, EventKind::remove_link, Edge{std::move(a), std::move(b)}, std::move(note)};
}

std::string MutationEvent::describe() const {
  std::string out(to_string(kind));
  out += ' ';
  out += is_node_event() ? node().str() : link().source.str() + "-" + link().target.str();
  out += " (#" + std::to_string(sequence) + ")";
  return out;
}

Graph apply(const Graph& g, const MutationEvent& e, ApplyMode mode, std::vector<std::string>& warnings) {
  auto reject = [&](const std::string& reason) -> Graph {
    const std::string msg = e.describe() + ": " + reason;
    if (mode == ApplyMode::strict) throw MutationError(msg);
    warnings.push_back(msg + "; ignored");
    return g;
  };
  if (e.is_node_event() != std::holds_alternative<NodeLabel>(e.payload)) {
    throw MutationError("event #" + std::to_string(e.sequence) + " payload does not match kind " +
                        std::string(to_string(e.kind)));
  }

  std::vector<NodeLabel> nodes(g.nodes().begin(), g.nodes().end());
  std::vector<EdgeInput> edges = g.edge_inputs();

  switch (e.kind) {
    case EventKind::add_node: {
      if (g.contains(e.node())) return reject("node already exists");
      nodes.push_back(e.node());
      break;
    }
    case EventKind::remove_node: {
      if (!g.contains(e.node())) return reject("node does not exist");
      std::erase(nodes, e.node());
      std::erase_if(edges, [&](const EdgeInput& in) { return in.source == e.node() || in.target == e.node(); });
      break;
    }
    case EventKind::add_link: {
      const Edge& l = e.link();
      for (const NodeLabel* end : {&l.source, &l.target}) {
        if (!g.contains(*end)) return reject("endpoint " + end->str() + " does not exist");
      }
      if (g.has_edge(l.source, l.target)) return reject("edge " + edge_text(l, g.directed()) + " already exists");
      EdgeInput in{l.source, l.target};
      if (g.is_signed()) in.sign = 1;
      if (g.is_weighted()) in.weight = 1.0;
      edges.push_back(std::move(in));
      break;
    }
    case EventKind::remove_link: {
      const Edge& l = e.link();
      if (!g.has_edge(l.source, l.target)) return reject("edge " + edge_text(l, g.directed()) + " does not exist");
      const auto k = *g.edge_index(g.index_of(l.source), g.index_of(l.target));
      edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(k));
      break;
    }
  }
  return Graph::build(g.directed(), std::move(nodes), std::move(edges));
}

Graph apply(const Graph& g, const MutationEvent& e, ApplyMode mode) {
  std::vector<std::string> ignored;
  return apply(g, e, mode, ignored);
}

const Graph& History::at(std::uint64_t sequence) const {
  auto it = std::lower_bound(steps_.begin(), steps_.end(), sequence,
                             [](const auto& step, std::uint64_t s) { return step.first < s; });
  if (it == steps_.end() || it->first != sequence) {
    throw std::out_of_range("no event with sequence " + std::to_string(sequence));
  }
  return it->second;
}

History apply_log(const Graph& g, std::span<const MutationEvent> log, ApplyMode mode) {
  History h(g);
  Graph current = g;
  std::optional<std::uint64_t> last;
  for (const MutationEvent& e : log) {
    if (last && e.sequence <= *last) {
      throw MutationError("event sequence " + std::to_string(e.sequence) + " does not follow " +
                          std::to_string(*last));
    }
    last = e.sequence;
    current = apply(current, e, mode, h.warnings_);
    h.steps_.emplace_back(e.sequence, current);
  }
  return h;
}

std::string DynamicsModel::code() const {
  if (nodes == Change::none && links == Change::none) return "N";
  std::string out;
  if (nodes != Change::none) out += std::string(prefix(nodes)) + "N";
  if (links != Change::none) {
    if (!out.empty()) out += ' ';
    out += std::string(prefix(links)) + "L";
  }
  return out;
}

std::string_view DynamicsModel::description() const noexcept {
  static constexpr std::array<std::string_view, 16> kText{
      "unchanged network",
      "nodes added",
      "nodes removed",
      "nodes added and removed",
      "links added",
      "links removed",
      "links added and removed",
      "nodes added, links added",
      "nodes added, links removed",
      "nodes added, links added and removed",
      "nodes removed, links added",
      "nodes removed, links removed",
      "nodes removed, links added and removed",
      "nodes added and removed, links added",
      "nodes added and removed, links removed",
      "nodes added and removed, links added and removed",
  };
  return kText[static_cast<std::size_t>(id - 1)];
}

std::span<const DynamicsModel> dynamics_models() noexcept { return kModels; }

const DynamicsModel& dynamics_model(int id) {
  if (id < 1 || id > 16) throw std::out_of_range("dynamics model id must be in 1..16");
  return kModels[static_cast<std::size_t>(id - 1)];
}

DynamicsModel classify_log(std::span<const MutationEvent> log) noexcept {
  bool kinds[4] = {false, false, false, false};
  for (const MutationEvent& e : log) kinds[static_cast<int>(e.kind)] = true;
  const Change nodes = combine(kinds[0], kinds[1]);
  const Change links = combine(kinds[2], kinds[3]);
  for (const DynamicsModel& m : kModels) {
    if (m.nodes == nodes && m.links == links) return m;
  }
  return kModels[0];
}

}  // namespace netdyn
