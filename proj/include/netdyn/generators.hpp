#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "netdyn/graph.hpp"

namespace netdyn {

enum class GeneratorKind { regular, erdos_renyi, barabasi_albert, watts_strogatz };

std::string_view to_string(GeneratorKind kind) noexcept;
/// Accepts the long names above plus the short forms "er", "ba", "ws".
std::optional<GeneratorKind> parse_generator_kind(std::string_view text) noexcept;

/// Parameters of one generator run. Unused fields are ignored by the chosen
/// kind (`k` for regular/WS, `p` for ER/WS, `m_per_node` for BA).
struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::regular;
  std::size_t n = 0;
  std::size_t k = 0;
  double p = 0.0;
  std::size_t m_per_node = 1;
  std::uint64_t seed = 0;
};

/// Throws DomainError describing the first violated parameter constraint.
void validate(const GeneratorSpec& spec);

/// Dispatches on `spec.kind`. Nodes are labelled V1..Vn.
Graph generate(const GeneratorSpec& spec);

/// Ring lattice: node i is joined to the k/2 nearest nodes on each side.
/// Requires even k < n. The result does not depend on `seed`.
Graph generate_regular(std::size_t n, std::size_t k, std::uint64_t seed = 0);

/// G(n, p): every unordered pair is drawn once, in lexicographic index order.
Graph generate_er(std::size_t n, double p, std::uint64_t seed);

/// Preferential attachment from a seed clique on m_per_node + 1 nodes. Each
/// later node attaches to m_per_node distinct existing nodes chosen with
/// probability proportional to their current degree.
Graph generate_ba(std::size_t n, std::size_t m_per_node, std::uint64_t seed);

/// Small-world rewiring of the ring lattice. Lattice edges (i, i+j) are
/// visited for j = 1..k/2, i = 0..n-1; with probability p the far endpoint is
/// replaced by a uniformly chosen node that is neither i nor a current
/// neighbour of i. Edges whose source is already adjacent to everything stay.
Graph generate_ws(std::size_t n, std::size_t k, double p, std::uint64_t seed);

}  // namespace netdyn
