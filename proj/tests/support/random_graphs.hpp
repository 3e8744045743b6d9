#pragma once

#include <string>
#include <vector>

#include "netdyn/graph.hpp"
#include "netdyn/rng.hpp"

namespace testgraphs {

using netdyn::EdgeInput;
using netdyn::Graph;
using netdyn::NodeLabel;
using netdyn::Rng;

/// Arcs i->j, i != j, each present with probability p.
inline Graph random_digraph(std::size_t n, double p, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<NodeLabel> nodes;
  for (std::size_t i = 1; i <= n; ++i) nodes.push_back("V" + std::to_string(i));
  std::vector<EdgeInput> arcs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && rng.bernoulli(p)) arcs.push_back({nodes[i], nodes[j]});
    }
  }
  return Graph::build(true, nodes, arcs);
}

/// Directed or undirected, optionally signed and/or weighted, with the odd
/// loop and irregular labels. Weights are non-negative when signed.
inline Graph random_mixed_graph(std::uint64_t seed) {
  Rng rng(seed);
  const bool directed = rng.bernoulli(0.5);
  const bool is_signed = rng.bernoulli(0.4);
  const bool weighted = rng.bernoulli(0.4);
  const std::size_t n = rng.uniform_index(12);
  static const std::vector<std::string> stems{"V", "n", "actor_", "x.", "Z-"};
  std::vector<NodeLabel> nodes;
  for (std::size_t i = 0; i < n; ++i) nodes.push_back(stems[rng.uniform_index(stems.size())] + std::to_string(i * 7 + 1));
  std::vector<EdgeInput> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = directed ? 0 : i; j < n; ++j) {
      const double p = i == j ? 0.05 : 0.3;
      if (!rng.bernoulli(p)) continue;
      EdgeInput e{nodes[i], nodes[j]};
      if (is_signed) e.sign = rng.bernoulli(0.5) ? 1 : -1;
      if (weighted) {
        double w = static_cast<double>(rng.uniform_index(1000)) / 8.0 + rng.uniform01();
        if (!is_signed && rng.bernoulli(0.2)) w = -w;
        e.weight = w;
      }
      edges.push_back(e);
    }
  }
  return Graph::build(directed, nodes, edges);
}

}  // namespace testgraphs
