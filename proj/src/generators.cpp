#include "netdyn/generators.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "netdyn/error.hpp"
#include "netdyn/rng.hpp"

namespace netdyn {
namespace {

std::vector<NodeLabel> numbered_nodes(std::size_t n) {
  std::vector<NodeLabel> nodes;
  nodes.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) nodes.emplace_back("V" + std::to_string(i));
  return nodes;
}

Graph from_pairs(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  auto nodes = numbered_nodes(n);
  std::vector<EdgeInput> edges;
  edges.reserve(pairs.size());
  for (auto [a, b] : pairs) edges.push_back({nodes[a], nodes[b]});
  return Graph::build(false, std::move(nodes), std::move(edges));
}

void check_lattice(std::size_t n, std::size_t k) {
  if (n < 1) throw DomainError("n must be at least 1");
  if (k % 2 != 0) throw DomainError("ring lattice degree k must be even (got " + std::to_string(k) + ")");
  if (k >= n && !(k == 0 && n == 1)) {
    throw DomainError("ring lattice degree k must be below n (got k=" + std::to_string(k) +
                      ", n=" + std::to_string(n) + ")");
  }
}

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("probability p must lie in [0, 1]");
}

}  // namespace

std::string_view to_string(GeneratorKind kind) noexcept {
  switch (kind) {
    case GeneratorKind::regular: return "regular";
    case GeneratorKind::erdos_renyi: return "erdos_renyi";
    case GeneratorKind::barabasi_albert: return "barabasi_albert";
    case GeneratorKind::watts_strogatz: return "watts_strogatz";
  }
  return "?";
}

std::optional<GeneratorKind> parse_generator_kind(std::string_view text) noexcept {
  if (text == "regular") return GeneratorKind::regular;
  if (text == "er" || text == "erdos_renyi") return GeneratorKind::erdos_renyi;
  if (text == "ba" || text == "barabasi_albert") return GeneratorKind::barabasi_albert;
  if (text == "ws" || text == "watts_strogatz") return GeneratorKind::watts_strogatz;
  return std::nullopt;
}

void validate(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GeneratorKind::regular:
      check_lattice(spec.n, spec.k);
      break;
    case GeneratorKind::erdos_renyi:
      if (spec.n < 1) throw DomainError("n must be at least 1");
      check_probability(spec.p);
      break;
    case GeneratorKind::barabasi_albert:
      if (spec.m_per_node < 1) throw DomainError("m_per_node must be at least 1");
      if (spec.n <= spec.m_per_node) throw DomainError("n must exceed m_per_node");
      break;
    case GeneratorKind::watts_strogatz:
      check_lattice(spec.n, spec.k);
      check_probability(spec.p);
      break;
  }
}

Graph generate(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GeneratorKind::regular: return generate_regular(spec.n, spec.k, spec.seed);
    case GeneratorKind::erdos_renyi: return generate_er(spec.n, spec.p, spec.seed);
    case GeneratorKind::barabasi_albert: return generate_ba(spec.n, spec.m_per_node, spec.seed);
    case GeneratorKind::watts_strogatz: return generate_ws(spec.n, spec.k, spec.p, spec.seed);
  }
  throw DomainError("unknown generator kind");
}

Graph generate_regular(std::size_t n, std::size_t k, std::uint64_t /*seed*/) {
  check_lattice(n, k);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 1; j <= k / 2; ++j) {
    for (std::size_t i = 0; i < n; ++i) pairs.emplace_back(i, (i + j) % n);
  }
  return from_pairs(n, pairs);
}

Graph generate_er(std::size_t n, double p, std::uint64_t seed) {
  if (n < 1) throw DomainError("n must be at least 1");
  check_probability(p);
  Rng rng(seed);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rng.bernoulli(p)) pairs.emplace_back(i, j);
    }
  }
  return from_pairs(n, pairs);
}

Graph generate_ba(std::size_t n, std::size_t m_per_node, std::uint64_t seed) {
  validate({GeneratorKind::barabasi_albert, n, 0, 0.0, m_per_node, seed});
  Rng rng(seed);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  // Every edge end is appended here, so a uniform pick is degree-proportional.
  std::vector<std::size_t> ends;
  const std::size_t clique = m_per_node + 1;
  for (std::size_t i = 0; i < clique; ++i) {
    for (std::size_t j = i + 1; j < clique; ++j) {
      pairs.emplace_back(i, j);
      ends.push_back(i);
      ends.push_back(j);
    }
  }
  std::vector<std::size_t> chosen;
  for (std::size_t v = clique; v < n; ++v) {
    chosen.clear();
    while (chosen.size() < m_per_node) {
      const std::size_t target = ends[rng.uniform_index(ends.size())];
      if (std::find(chosen.begin(), chosen.end(), target) == chosen.end()) chosen.push_back(target);
    }
    for (std::size_t target : chosen) {
      pairs.emplace_back(target, v);
      ends.push_back(target);
      ends.push_back(v);
    }
  }
  return from_pairs(n, pairs);
}

Graph generate_ws(std::size_t n, std::size_t k, double p, std::uint64_t seed) {
  check_lattice(n, k);
  check_probability(p);
  Rng rng(seed);
  std::vector<std::set<std::size_t>> adj(n);
  auto link = [&](std::size_t a, std::size_t b) {
    adj[a].insert(b);
    adj[b].insert(a);
  };
  auto unlink = [&](std::size_t a, std::size_t b) {
    adj[a].erase(b);
    adj[b].erase(a);
  };
  for (std::size_t j = 1; j <= k / 2; ++j) {
    for (std::size_t i = 0; i < n; ++i) link(i, (i + j) % n);
  }
  for (std::size_t j = 1; j <= k / 2; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t far = (i + j) % n;
      if (!rng.bernoulli(p)) continue;
      if (!adj[i].contains(far)) continue;  // already rewired away from i
      if (adj[i].size() + 1 >= n) continue;  // i is adjacent to every other node
      std::size_t w = 0;
      do {
        w = rng.uniform_index(n);
      } while (w == i || adj[i].contains(w));
      unlink(i, far);
      link(i, w);
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b : adj[a]) {
      if (a < b) pairs.emplace_back(a, b);
    }
  }
  return from_pairs(n, pairs);
}

}  // namespace netdyn
