#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "netdyn/node_label.hpp"

namespace netdyn {

/// One edge as handed to `Graph::build`. Sign and weight are either given on
/// every edge of a graph or on none.
struct EdgeInput {
  NodeLabel source;
  NodeLabel target;
  std::optional<int> sign = std::nullopt;
  std::optional<double> weight = std::nullopt;
};

/// Edge endpoints as node indices into `Graph::nodes()`.
struct IndexEdge {
  std::size_t source;
  std::size_t target;

  friend bool operator==(const IndexEdge&, const IndexEdge&) = default;
  friend auto operator<=>(const IndexEdge&, const IndexEdge&) = default;
};

/// Immutable snapshot of a simple graph.
///
/// Nodes are kept in natural label order and addressed by index; the index of
/// a label is only meaningful within one snapshot. Copies share storage, so a
/// Graph is cheap to pass by value and safe to read from many threads.
///
/// Undirected edges are stored once with `source <= target`. Self-loops are
/// allowed. Multi-edges are not: duplicates in the input collapse to a single
/// edge and leave a message in `warnings()`.
class Graph {
 public:
  /// Empty undirected graph.
  Graph();

  /// Validates and freezes a graph. Throws GraphError on duplicate or invalid
  /// labels, unknown endpoints, signs other than +1/-1, non-finite weights, or
  /// sign/weight given on only some edges.
  static Graph build(bool directed, std::vector<NodeLabel> nodes, std::vector<EdgeInput> edges);

  bool directed() const noexcept;
  std::size_t node_count() const noexcept;
  std::size_t edge_count() const noexcept;

  std::span<const NodeLabel> nodes() const noexcept;
  const NodeLabel& label(std::size_t index) const;
  std::optional<std::size_t> find(const NodeLabel& label) const;
  /// Like `find`, but throws GraphError naming the label when it is absent.
  std::size_t index_of(const NodeLabel& label) const;
  bool contains(const NodeLabel& label) const { return find(label).has_value(); }

  /// Sorted edge list; see class comment for the undirected normal form.
  std::span<const IndexEdge> edges() const noexcept;
  Edge edge_labels(std::size_t edge_index) const;

  /// Out-neighbours (all neighbours when undirected), sorted; contains `i`
  /// itself when `i` carries a loop.
  std::span<const std::size_t> successors(std::size_t i) const;
  /// In-neighbours (all neighbours when undirected), sorted.
  std::span<const std::size_t> predecessors(std::size_t i) const;
  /// Union of in- and out-neighbours, sorted. Weak-connectivity view.
  std::span<const std::size_t> neighbors(std::size_t i) const;

  bool has_edge(std::size_t source, std::size_t target) const;
  bool has_edge(const NodeLabel& source, const NodeLabel& target) const;
  std::optional<std::size_t> edge_index(std::size_t source, std::size_t target) const;

  /// Number of distinct neighbours; a loop counts once.
  std::size_t degree(std::size_t i) const;
  /// Edge-end count: a loop contributes 2 (undirected) so that the sum over
  /// all nodes is 2m; in a digraph this is indegree + outdegree.
  std::size_t incident_degree(std::size_t i) const;

  bool is_signed() const noexcept;
  bool is_weighted() const noexcept;
  /// +1 for unsigned graphs.
  int sign(std::size_t edge_index) const;
  /// 1.0 for unweighted graphs.
  double weight(std::size_t edge_index) const;

  /// Messages collected while building (collapsed duplicate edges).
  std::span<const std::string> warnings() const noexcept;

  /// FNV-1a hash of the canonical content: directedness, labels, edges, signs
  /// and weights. Equal graphs hash equal regardless of construction order.
  std::uint64_t digest() const noexcept;

  /// Label-level description of every edge, suitable for rebuilding.
  std::vector<EdgeInput> edge_inputs() const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  struct Data;
  explicit Graph(std::shared_ptr<const Data> data);
  std::shared_ptr<const Data> data_;
};

/// Dense 0/1 adjacency matrix in node order.
class AdjacencyMatrix {
 public:
  explicit AdjacencyMatrix(std::size_t n) : n_(n), cells_(n * n, 0) {}
  std::size_t size() const noexcept { return n_; }
  std::uint8_t operator()(std::size_t row, std::size_t col) const { return cells_[row * n_ + col]; }
  std::uint8_t& operator()(std::size_t row, std::size_t col) { return cells_[row * n_ + col]; }
  bool symmetric() const;
  std::size_t ones() const;

 private:
  std::size_t n_;
  std::vector<std::uint8_t> cells_;
};

AdjacencyMatrix adjacency_matrix(const Graph& g);

/// Geodesic hop count; `std::nullopt` marks an unreachable node.
using Hops = std::optional<std::size_t>;

enum class Traversal {
  out,   ///< follow arcs forward
  in,    ///< follow arcs backwards
  weak,  ///< ignore direction
};

/// Breadth-first hop counts from `source`, indexed by node. Loops never
/// shorten a path.
std::vector<Hops> hop_distances(const Graph& g, std::size_t source, Traversal mode = Traversal::out);

/// Breadth-first geodesic distances from `source`, following arc direction.
/// Throws GraphError for an unknown source.
std::map<NodeLabel, Hops> shortest_path_lengths(const Graph& g, const NodeLabel& source);

/// Weakly connected components. Component ids are dense and numbered in order
/// of each component's smallest node.
struct ComponentLabels {
  std::vector<std::size_t> id;  // per node
  std::size_t count = 0;
};
ComponentLabels component_labels(const Graph& g);

/// True when a single weak component covers all nodes; the empty graph counts
/// as connected.
bool is_connected(const Graph& g);

/// A cycle as the sequence of its nodes starting at the queried node; the
/// closing edge back to the first node is implied. A loop is the one-node cycle.
using Cycle = std::vector<NodeLabel>;

/// All simple cycles through `v`. Undirected cycles have length >= 3 (or are
/// loops) and are reported once, oriented so the second node precedes the
/// last. Exponential in the worst case; intended for small graphs.
std::vector<Cycle> find_cycles_containing(const Graph& g, const NodeLabel& v);

bool has_cycle(const Graph& g);

/// Node subset of a parent graph together with every parent edge between
/// those nodes.
class Subnetwork {
 public:
  Subnetwork(Graph parent, std::vector<std::size_t> node_indices);

  const Graph& parent() const noexcept { return parent_; }
  std::span<const std::size_t> node_indices() const noexcept { return nodes_; }
  std::vector<NodeLabel> nodes() const;
  std::vector<Edge> edges() const;
  std::size_t size() const noexcept { return nodes_.size(); }
  bool empty() const noexcept { return nodes_.empty(); }
  bool contains(const NodeLabel& label) const;
  /// The subnetwork as a standalone graph (signs and weights kept).
  Graph to_graph() const;

 private:
  Graph parent_;
  std::vector<std::size_t> nodes_;  // sorted
};

}  // namespace netdyn
