#include "netdyn/prestige.hpp"

#include <string>

#include "netdyn/error.hpp"

namespace netdyn {
namespace {

void require_directed(const Graph& g, std::string_view what) {
  if (!g.directed()) {
    throw DomainError(std::string(what) + " is defined for directed graphs; use degree centrality for undirected ones");
  }
}

}  // namespace

std::map<NodeLabel, std::size_t> indegree_prestige(const Graph& g) {
  require_directed(g, "indegree prestige");
  std::map<NodeLabel, std::size_t> out;
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    std::size_t k = g.predecessors(i).size();
    if (g.has_edge(i, i)) --k;
    out.emplace(g.label(i), k);
  }
  return out;
}

std::vector<NodeLabel> influence_domain(const Graph& g, const NodeLabel& v) {
  require_directed(g, "influence domain");
  const std::size_t target = g.index_of(v);
  const auto dist = hop_distances(g, target, Traversal::in);
  std::vector<NodeLabel> out;
  for (std::size_t u = 0; u < g.node_count(); ++u) {
    if (u != target && dist[u]) out.push_back(g.label(u));
  }
  return out;
}

double proximity_prestige(const Graph& g, const NodeLabel& v) {
  require_directed(g, "proximity prestige");
  const std::size_t n = g.node_count();
  const std::size_t target = g.index_of(v);
  if (n < 2) throw DomainError("proximity prestige needs at least 2 nodes");
  const auto dist = hop_distances(g, target, Traversal::in);
  std::size_t r = 0;
  std::size_t total = 0;
  for (std::size_t u = 0; u < n; ++u) {
    if (u == target || !dist[u]) continue;
    ++r;
    total += *dist[u];
  }
  if (r == 0) return 0.0;
  const double rr = static_cast<double>(r);
  return rr * rr / (static_cast<double>(n - 1) * static_cast<double>(total));
}

DyadCensus dyad_census(const Graph& g) {
  require_directed(g, "dyad census");
  const std::size_t n = g.node_count();
  DyadCensus c;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool ij = g.has_edge(i, j);
      const bool ji = g.has_edge(j, i);
      if (ij && ji) {
        ++c.mutual;
      } else if (ij || ji) {
        ++c.asymmetric;
      } else {
        ++c.null;
      }
    }
  }
  return c;
}

std::map<NodeLabel, RankTally> rank_signal(const Graph& g) {
  require_directed(g, "rank signal");
  std::vector<RankTally> tally(g.node_count());
  for (const IndexEdge& e : g.edges()) {
    if (e.source == e.target) continue;
    if (g.has_edge(e.target, e.source)) {
      ++tally[e.source].mutual_ties;  // the reverse arc credits the other end
    } else {
      ++tally[e.source].sent_asymmetric;
      ++tally[e.target].received_asymmetric;
    }
  }
  std::map<NodeLabel, RankTally> out;
  for (std::size_t i = 0; i < g.node_count(); ++i) out.emplace(g.label(i), tally[i]);
  return out;
}

}  // namespace netdyn
