#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "netdyn/graph.hpp"

namespace netdyn {

// All functions here require a directed graph and throw DomainError otherwise.

/// Number of distinct in-neighbours (a loop is not counted).
std::map<NodeLabel, std::size_t> indegree_prestige(const Graph& g);

/// Nodes other than `v` with a directed path into `v`, sorted.
std::vector<NodeLabel> influence_domain(const Graph& g, const NodeLabel& v);

/// r^2 / ((n - 1) D) where r is the size of the influence domain and D the
/// summed distance from its members to `v`; 0 for an empty domain.
double proximity_prestige(const Graph& g, const NodeLabel& v);

struct DyadCensus {
  std::size_t mutual = 0;
  std::size_t asymmetric = 0;
  std::size_t null = 0;

  std::size_t total() const noexcept { return mutual + asymmetric + null; }
  friend bool operator==(const DyadCensus&, const DyadCensus&) = default;
};

/// Classifies every unordered pair of distinct nodes.
DyadCensus dyad_census(const Graph& g);

/// Per-node dyad tallies. Receiving many asymmetric ties while sending few
/// marks a node as informally higher-ranked; no composite score is derived.
struct RankTally {
  std::size_t mutual_ties = 0;
  std::size_t received_asymmetric = 0;
  std::size_t sent_asymmetric = 0;

  friend bool operator==(const RankTally&, const RankTally&) = default;
};

std::map<NodeLabel, RankTally> rank_signal(const Graph& g);

}  // namespace netdyn
