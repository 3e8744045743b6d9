#include "netdyn/brokerage.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "netdyn/error.hpp"

namespace netdyn {
namespace {

void require_undirected(const Graph& g, std::string_view what) {
  if (g.directed()) throw DomainError(std::string(what) + " is defined for undirected graphs only");
}

/// One iterative Hopcroft-Tarjan pass collecting bridges, articulation points
/// and blocks together.
struct LowLink {
  std::vector<IndexEdge> bridges;
  std::vector<bool> articulation;
  std::vector<std::vector<std::size_t>> blocks;

  explicit LowLink(const Graph& g) {
    const std::size_t n = g.node_count();
    constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> order(n, kUnvisited);
    std::vector<std::size_t> low(n, 0);
    articulation.assign(n, false);
    std::size_t clock = 0;

    struct Frame {
      std::size_t node;
      std::size_t parent;
      std::size_t next = 0;
      std::size_t children = 0;
    };
    std::vector<Frame> stack;
    std::vector<IndexEdge> edge_stack;

    auto pop_block = [&](IndexEdge until) {
      std::vector<std::size_t> block;
      while (true) {
        const IndexEdge e = edge_stack.back();
        edge_stack.pop_back();
        block.push_back(e.source);
        block.push_back(e.target);
        if (e == until) break;
      }
      std::sort(block.begin(), block.end());
      block.erase(std::unique(block.begin(), block.end()), block.end());
      blocks.push_back(std::move(block));
    };

    for (std::size_t root = 0; root < n; ++root) {
      if (order[root] != kUnvisited) continue;
      order[root] = low[root] = clock++;
      stack.push_back({root, kUnvisited});
      while (!stack.empty()) {
        Frame& f = stack.back();
        const auto nbrs = g.successors(f.node);
        if (f.next < nbrs.size()) {
          const std::size_t w = nbrs[f.next++];
          if (w == f.node || w == f.parent) continue;  // simple graph: one parent edge
          if (order[w] == kUnvisited) {
            ++f.children;
            edge_stack.push_back({f.node, w});
            order[w] = low[w] = clock++;
            stack.push_back({w, f.node});
          } else if (order[w] < order[f.node]) {
            edge_stack.push_back({f.node, w});
            low[f.node] = std::min(low[f.node], order[w]);
          }
          continue;
        }
        const Frame done = f;
        stack.pop_back();
        if (stack.empty()) {
          if (done.children >= 2) articulation[done.node] = true;
          continue;
        }
        const std::size_t u = stack.back().node;
        low[u] = std::min(low[u], low[done.node]);
        if (low[done.node] > order[u]) bridges.push_back({std::min(u, done.node), std::max(u, done.node)});
        if (low[done.node] >= order[u]) {
          if (stack.size() > 1) articulation[u] = true;
          pop_block({u, done.node});
        }
      }
    }
  }
};

std::vector<NodeLabel> labels_of(const Graph& g, const std::vector<std::size_t>& idx) {
  std::vector<NodeLabel> out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(g.label(i));
  return out;
}

}  // namespace

std::vector<Edge> bridges(const Graph& g) {
  require_undirected(g, "bridge detection");
  auto found = LowLink(g).bridges;
  std::sort(found.begin(), found.end());
  std::vector<Edge> out;
  for (const IndexEdge& e : found) out.push_back({g.label(e.source), g.label(e.target)});
  return out;
}

std::vector<NodeLabel> cut_vertices(const Graph& g) {
  require_undirected(g, "cut-vertex detection");
  const LowLink ll(g);
  std::vector<NodeLabel> out;
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    if (ll.articulation[i]) out.push_back(g.label(i));
  }
  return out;
}

std::vector<std::vector<NodeLabel>> biconnected_blocks(const Graph& g) {
  require_undirected(g, "bi-component detection");
  auto blocks = LowLink(g).blocks;
  std::sort(blocks.begin(), blocks.end());
  std::vector<std::vector<NodeLabel>> out;
  for (const auto& b : blocks) out.push_back(labels_of(g, b));
  return out;
}

std::vector<std::vector<NodeLabel>> bi_components(const Graph& g) {
  auto blocks = biconnected_blocks(g);
  std::erase_if(blocks, [](const auto& b) { return b.size() < 3; });
  return blocks;
}

EgoNetwork ego_network(const Graph& g, const NodeLabel& ego) {
  const std::size_t e = g.index_of(ego);
  std::vector<std::size_t> alters;
  for (std::size_t w : g.neighbors(e)) {
    if (w != e) alters.push_back(w);
  }
  EgoNetwork out{ego, labels_of(g, alters), {}};
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    const IndexEdge& edge = g.edges()[k];
    if (edge.source == edge.target) continue;
    if (std::binary_search(alters.begin(), alters.end(), edge.source) &&
        std::binary_search(alters.begin(), alters.end(), edge.target)) {
      out.alter_ties.push_back(g.edge_labels(k));
    }
  }
  return out;
}

std::vector<std::pair<NodeLabel, NodeLabel>> structural_holes(const EgoNetwork& e) {
  auto tied = [&](const NodeLabel& a, const NodeLabel& b) {
    return std::any_of(e.alter_ties.begin(), e.alter_ties.end(), [&](const Edge& t) {
      return (t.source == a && t.target == b) || (t.source == b && t.target == a);
    });
  };
  std::vector<std::pair<NodeLabel, NodeLabel>> holes;
  for (std::size_t i = 0; i < e.alters.size(); ++i) {
    for (std::size_t j = i + 1; j < e.alters.size(); ++j) {
      if (!tied(e.alters[i], e.alters[j])) holes.emplace_back(e.alters[i], e.alters[j]);
    }
  }
  return holes;
}

std::string_view to_string(BrokerRole role) noexcept {
  switch (role) {
    case BrokerRole::coordinator: return "coordinator";
    case BrokerRole::itinerant: return "itinerant";
    case BrokerRole::representative: return "representative";
    case BrokerRole::gatekeeper: return "gatekeeper";
    case BrokerRole::liaison: return "liaison";
  }
  return "?";
}

BrokerRole broker_role(std::size_t a, std::size_t b, std::size_t c) noexcept {
  if (a == b && b == c) return BrokerRole::coordinator;
  if (a == c) return BrokerRole::itinerant;
  if (a == b) return BrokerRole::representative;
  if (b == c) return BrokerRole::gatekeeper;
  return BrokerRole::liaison;
}

BrokerRole classify_broker(const Graph& g, const Triad& t, const Partition& groups) {
  if (!g.directed()) throw DomainError("broker roles are defined on directed graphs");
  if (t.source == t.broker || t.broker == t.sink || t.source == t.sink) {
    throw DomainError("triad nodes must be pairwise distinct");
  }
  const std::size_t a = g.index_of(t.source);
  const std::size_t b = g.index_of(t.broker);
  const std::size_t c = g.index_of(t.sink);
  if (!g.has_edge(a, b)) throw DomainError("missing arc " + t.source.str() + "->" + t.broker.str());
  if (!g.has_edge(b, c)) throw DomainError("missing arc " + t.broker.str() + "->" + t.sink.str());
  if (g.has_edge(a, c)) {
    throw DomainError("arc " + t.source.str() + "->" + t.sink.str() + " bypasses the broker");
  }
  return broker_role(groups.group_of(t.source), groups.group_of(t.broker), groups.group_of(t.sink));
}

std::size_t RoleCounts::total() const noexcept { return std::accumulate(counts.begin(), counts.end(), std::size_t{0}); }

std::map<NodeLabel, RoleCounts> brokerage_census(const Graph& g, const Partition& groups) {
  if (!g.directed()) throw DomainError("brokerage census is defined on directed graphs");
  std::vector<std::size_t> group(g.node_count());
  for (std::size_t i = 0; i < g.node_count(); ++i) group[i] = groups.group_of(g.label(i));
  std::map<NodeLabel, RoleCounts> census;
  for (std::size_t b = 0; b < g.node_count(); ++b) {
    RoleCounts counts;
    for (std::size_t a : g.predecessors(b)) {
      if (a == b) continue;
      for (std::size_t c : g.successors(b)) {
        if (c == b || c == a || g.has_edge(a, c)) continue;
        ++counts[broker_role(group[a], group[b], group[c])];
      }
    }
    census.emplace(g.label(b), counts);
  }
  return census;
}

}  // namespace netdyn
