#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "netdyn/graph.hpp"

namespace netdyn {

enum class Measure { degree, closeness, betweenness, eccentricity, eigenvector };

/// Scaling applied to a measure's scores. Each measure accepts a fixed subset;
/// see `conventions_for`.
enum class Convention { raw, reciprocal, normalized, unit_sum, unit_max, percent };

std::string_view to_string(Measure m) noexcept;
std::string_view to_string(Convention c) noexcept;
std::optional<Measure> parse_measure(std::string_view text) noexcept;
std::optional<Convention> parse_convention(std::string_view text) noexcept;

/// degree, closeness, betweenness: raw, normalized
/// eccentricity: raw, reciprocal, normalized
/// eigenvector: unit_sum, unit_max, percent
std::span<const Convention> conventions_for(Measure m) noexcept;
bool accepts(Measure m, Convention c) noexcept;
std::span<const Measure> all_measures() noexcept;

/// Per-node scores of one measure under one convention, in node order of the
/// analysed snapshot.
struct CentralityReport {
  Measure measure;
  Convention convention;
  std::vector<NodeLabel> nodes;
  std::vector<double> scores;
  std::uint64_t graph_digest = 0;

  /// Throws GraphError for a label that is not in the report.
  double at(const NodeLabel& label) const;
};

/// raw = number of distinct neighbours; normalized = raw / (n - 1).
/// Undirected graphs only.
CentralityReport degree_centrality(const Graph& g, Convention conv = Convention::raw);

/// With r nodes reachable from v and S the sum of their distances, the score
/// is r^2 / ((n - 1) S), i.e. the inverse mean distance scaled by the
/// reachable share r / (n - 1). On a connected graph this is (n - 1) / S.
/// Nodes that reach nothing score 0. Both conventions report this value.
CentralityReport closeness_centrality(const Graph& g, Convention conv = Convention::normalized);

/// Brandes accumulation over unordered pairs {s, t} with s, t != v.
/// normalized = raw / ((n - 1)(n - 2) / 2). Undirected graphs only.
CentralityReport betweenness_centrality(const Graph& g, Convention conv = Convention::raw);

/// raw = largest distance to any other node (+infinity when some node is
/// unreachable); reciprocal = 1 / raw; normalized = (n - 1) / raw. The latter
/// two require every node to reach every other node.
CentralityReport eccentricity_centrality(const Graph& g, Convention conv = Convention::raw);

struct EigenvectorOptions {
  double tolerance = 1e-10;
  std::size_t max_iterations = 100000;
};

/// Dominant eigenvector of the adjacency matrix of the largest weak
/// component (ties go to the component holding the smallest label); all other
/// nodes score 0. Power iteration from the all-ones vector, averaging each
/// iterate with its predecessor so bipartite components converge instead of
/// oscillating. In a digraph a node collects the scores of its in-neighbours.
/// Throws ConvergenceError when the iteration cap is hit.
CentralityReport eigenvector_centrality(const Graph& g, Convention conv = Convention::unit_sum,
                                        const EigenvectorOptions& options = {});

/// Dispatch by measure. Throws DomainError for a convention the measure does
/// not accept.
CentralityReport centrality(const Graph& g, Measure m, Convention c);

}  // namespace netdyn
