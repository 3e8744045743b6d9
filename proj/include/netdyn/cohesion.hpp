#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "netdyn/graph.hpp"

namespace netdyn {

/// Disjoint assignment of nodes to groups 0..k-1.
///
/// Ids are renumbered on construction in order of first appearance along the
/// natural label order, so two partitions with the same blocks compare equal
/// whatever ids they were built from.
class Partition {
 public:
  Partition() = default;
  explicit Partition(const std::map<NodeLabel, std::size_t>& groups);

  std::size_t group_count() const noexcept { return count_; }
  std::size_t size() const noexcept { return groups_.size(); }
  const std::map<NodeLabel, std::size_t>& groups() const noexcept { return groups_; }
  /// Throws GraphError for an unassigned label.
  std::size_t group_of(const NodeLabel& label) const;
  bool contains(const NodeLabel& label) const { return groups_.contains(label); }
  /// Blocks in id order, members in label order.
  std::vector<std::vector<NodeLabel>> blocks() const;
  /// True when every node of `g` is assigned and nothing else is.
  bool covers(const Graph& g) const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::map<NodeLabel, std::size_t> groups_;
  std::size_t count_ = 0;
};

/// Assignment of nodes to one or more groups. Only carried, never computed
/// here; validated so that every node has at least one group.
struct OverlappingPartition {
  std::map<NodeLabel, std::set<std::size_t>> groups;
  bool covers(const Graph& g) const;
};

/// Graph whose every edge carries a sign.
class SignedGraph {
 public:
  /// Throws GraphError when `g` has edges but no signs.
  explicit SignedGraph(Graph g);
  const Graph& graph() const noexcept { return graph_; }

 private:
  Graph graph_;
};

/// Actors, events, and actor-event ties.
class TwoModeGraph {
 public:
  /// Ties may name the actor or the event first. Throws GraphError when a
  /// label is on both sides, is unknown, or a tie joins two nodes of the same
  /// side.
  TwoModeGraph(std::vector<NodeLabel> actors, std::vector<NodeLabel> events, std::vector<Edge> ties);

  const std::vector<NodeLabel>& actors() const noexcept { return actors_; }
  const std::vector<NodeLabel>& events() const noexcept { return events_; }
  /// Normalised (actor, event) ties, sorted, without duplicates.
  const std::vector<Edge>& ties() const noexcept { return ties_; }

 private:
  std::vector<NodeLabel> actors_;
  std::vector<NodeLabel> events_;
  std::vector<Edge> ties_;
};

enum class Side { actors, events };

/// m / (n(n-1)/2) undirected, m / (n(n-1)) directed. Needs n >= 2.
double density(const Graph& g);

/// Weakly connected components.
Partition components(const Graph& g);

/// Repeatedly removes nodes with fewer than k distinct non-self neighbours.
/// Direction is ignored.
Subnetwork k_core(const Graph& g, std::size_t k);

/// Largest k whose k-core holds the node.
std::map<NodeLabel, std::size_t> core_number(const Graph& g);

/// Maximal cliques with at least three nodes (Bron-Kerbosch with pivoting).
/// Members sorted, cliques sorted lexicographically. Undirected graphs only.
std::vector<std::vector<NodeLabel>> cliques(const Graph& g);

/// Newman modularity of a disjoint partition on the undirected view of `g`.
/// Zero for an edgeless graph.
double modularity(const Graph& g, const Partition& p);

struct CommunityResult {
  Partition partition;
  double modularity = 0.0;
};

/// Greedy modularity agglomeration: start from singletons and repeatedly merge
/// the pair of connected communities with the largest modularity gain while
/// that gain is positive. Equal gains go to the pair whose (smaller, larger)
/// smallest-member labels compare lowest. Deterministic; loops and direction
/// are ignored.
CommunityResult communities(const Graph& g);

struct BalanceResult {
  bool balanced = false;
  /// Two groups (one per colour) when balanced.
  std::optional<Partition> witness;
  /// When unbalanced: a cycle carrying an odd number of negative edges,
  /// listed as its node sequence with the closing edge implied.
  std::vector<NodeLabel> violating_cycle;
};

/// Two-colouring test: a positive edge keeps the colour, a negative one flips
/// it. Direction is ignored.
BalanceResult is_balanced(const SignedGraph& sg);

/// One-mode projection onto `side`: two nodes are joined when they share at
/// least one counterpart; the edge weight is the number shared.
Graph project_two_mode(const TwoModeGraph& tm, Side side);

}  // namespace netdyn
