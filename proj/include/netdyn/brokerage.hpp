#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "netdyn/cohesion.hpp"
#include "netdyn/graph.hpp"

namespace netdyn {

/// Edges whose removal increases the number of components, each reported with
/// `source < target`, sorted. Undirected graphs only; loops are never bridges.
std::vector<Edge> bridges(const Graph& g);

/// Articulation points, sorted. Undirected graphs only.
std::vector<NodeLabel> cut_vertices(const Graph& g);

/// Every biconnected block (maximal subgraph without an articulation point),
/// including two-node blocks formed by a single bridge. Isolated nodes form no
/// block. Members sorted; blocks sorted.
std::vector<std::vector<NodeLabel>> biconnected_blocks(const Graph& g);

/// Blocks of at least three nodes.
std::vector<std::vector<NodeLabel>> bi_components(const Graph& g);

struct EgoNetwork {
  NodeLabel ego;
  std::vector<NodeLabel> alters;  // sorted, ego excluded
  std::vector<Edge> alter_ties;   // parent edges between alters
};

/// Alters are the neighbours of `ego` in either direction. Throws GraphError
/// for an unknown ego.
EgoNetwork ego_network(const Graph& g, const NodeLabel& ego);

/// Unordered alter pairs with no tie in either direction, sorted.
std::vector<std::pair<NodeLabel, NodeLabel>> structural_holes(const EgoNetwork& e);

enum class BrokerRole { coordinator, itinerant, representative, gatekeeper, liaison };

std::string_view to_string(BrokerRole role) noexcept;
inline constexpr std::array kBrokerRoles{BrokerRole::coordinator, BrokerRole::itinerant, BrokerRole::representative,
                                         BrokerRole::gatekeeper, BrokerRole::liaison};

/// Directed two-path source -> broker -> sink.
struct Triad {
  NodeLabel source;
  NodeLabel broker;
  NodeLabel sink;
};

/// Role from group membership alone:
///   all equal                      -> coordinator
///   source == sink != broker        -> itinerant
///   source == broker != sink        -> representative
///   broker == sink != source        -> gatekeeper
///   all distinct                    -> liaison
BrokerRole broker_role(std::size_t source_group, std::size_t broker_group, std::size_t sink_group) noexcept;

/// Checks that `g` is directed, the three nodes are distinct, the arcs
/// source->broker and broker->sink exist and source->sink does not, then
/// classifies. Throws DomainError otherwise.
BrokerRole classify_broker(const Graph& g, const Triad& triad, const Partition& groups);

struct RoleCounts {
  std::array<std::size_t, 5> counts{};

  std::size_t& operator[](BrokerRole r) { return counts[static_cast<std::size_t>(r)]; }
  std::size_t operator[](BrokerRole r) const { return counts[static_cast<std::size_t>(r)]; }
  std::size_t total() const noexcept;

  friend bool operator==(const RoleCounts&, const RoleCounts&) = default;
};

/// For every broker b: role counts over ordered pairs (a, c), a != c, with
/// a->b, b->c and no a->c. Every node of `g` must be grouped.
std::map<NodeLabel, RoleCounts> brokerage_census(const Graph& g, const Partition& groups);

}  // namespace netdyn
