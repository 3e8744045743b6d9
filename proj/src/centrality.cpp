#include "netdyn/centrality.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>
#include <string>

#include "netdyn/error.hpp"

namespace netdyn {
namespace {

constexpr std::array kPlainConventions{Convention::raw, Convention::normalized};
constexpr std::array kEccentricityConventions{Convention::raw, Convention::reciprocal, Convention::normalized};
constexpr std::array kEigenvectorConventions{Convention::unit_sum, Convention::unit_max, Convention::percent};
constexpr std::array kMeasures{Measure::degree, Measure::closeness, Measure::betweenness, Measure::eccentricity,
                               Measure::eigenvector};

CentralityReport make_report(const Graph& g, Measure m, Convention c) {
  if (!accepts(m, c)) {
    throw DomainError(std::string(to_string(m)) + " centrality does not accept convention '" +
                      std::string(to_string(c)) + "'");
  }
  CentralityReport r{m, c, {}, {}, g.digest()};
  r.nodes.assign(g.nodes().begin(), g.nodes().end());
  r.scores.assign(g.node_count(), 0.0);
  return r;
}

void require_undirected(const Graph& g, std::string_view what) {
  if (g.directed()) {
    throw DomainError(std::string(what) + " centrality is defined for undirected graphs only");
  }
}

}  // namespace

std::string_view to_string(Measure m) noexcept {
  switch (m) {
    case Measure::degree: return "degree";
    case Measure::closeness: return "closeness";
    case Measure::betweenness: return "betweenness";
    case Measure::eccentricity: return "eccentricity";
    case Measure::eigenvector: return "eigenvector";
  }
  return "?";
}

std::string_view to_string(Convention c) noexcept {
  switch (c) {
    case Convention::raw: return "raw";
    case Convention::reciprocal: return "reciprocal";
    case Convention::normalized: return "normalized";
    case Convention::unit_sum: return "unit_sum";
    case Convention::unit_max: return "unit_max";
    case Convention::percent: return "percent";
  }
  return "?";
}

std::optional<Measure> parse_measure(std::string_view text) noexcept {
  for (Measure m : kMeasures) {
    if (to_string(m) == text) return m;
  }
  return std::nullopt;
}

std::optional<Convention> parse_convention(std::string_view text) noexcept {
  for (Convention c : {Convention::raw, Convention::reciprocal, Convention::normalized, Convention::unit_sum,
                       Convention::unit_max, Convention::percent}) {
    if (to_string(c) == text) return c;
  }
  return std::nullopt;
}

std::span<const Convention> conventions_for(Measure m) noexcept {
  switch (m) {
    case Measure::eccentricity: return kEccentricityConventions;
    case Measure::eigenvector: return kEigenvectorConventions;
    default: return kPlainConventions;
  }
}

bool accepts(Measure m, Convention c) noexcept {
  const auto allowed = conventions_for(m);
  return std::find(allowed.begin(), allowed.end(), c) != allowed.end();
}

std::span<const Measure> all_measures() noexcept { return kMeasures; }

double CentralityReport::at(const NodeLabel& label) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), label);
  if (it == nodes.end() || *it != label) throw GraphError("unknown node label '" + label.str() + "'");
  return scores[static_cast<std::size_t>(it - nodes.begin())];
}

CentralityReport degree_centrality(const Graph& g, Convention conv) {
  require_undirected(g, "degree");
  auto r = make_report(g, Measure::degree, conv);
  const std::size_t n = g.node_count();
  if (conv == Convention::normalized && n < 2) {
    throw DomainError("normalized degree centrality needs at least 2 nodes");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double d = static_cast<double>(g.degree(i));
    r.scores[i] = conv == Convention::normalized ? d / static_cast<double>(n - 1) : d;
  }
  return r;
}

CentralityReport closeness_centrality(const Graph& g, Convention conv) {
  auto r = make_report(g, Measure::closeness, conv);
  const std::size_t n = g.node_count();
  for (std::size_t v = 0; v < n; ++v) {
    const auto dist = hop_distances(g, v, Traversal::out);
    std::size_t reached = 0;
    std::size_t total = 0;
    for (std::size_t u = 0; u < n; ++u) {
      if (u == v || !dist[u]) continue;
      ++reached;
      total += *dist[u];
    }
    if (reached == 0) continue;
    const double rr = static_cast<double>(reached);
    r.scores[v] = rr * rr / (static_cast<double>(n - 1) * static_cast<double>(total));
  }
  return r;
}

CentralityReport betweenness_centrality(const Graph& g, Convention conv) {
  require_undirected(g, "betweenness");
  auto r = make_report(g, Measure::betweenness, conv);
  const std::size_t n = g.node_count();
  if (conv == Convention::normalized && n < 3) {
    throw DomainError("normalized betweenness centrality needs at least 3 nodes");
  }
  std::vector<double> sigma(n);
  std::vector<double> delta(n);
  std::vector<long> dist(n);
  std::vector<std::size_t> order;
  std::deque<std::size_t> queue;
  for (std::size_t s = 0; s < n; ++s) {
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    std::fill(dist.begin(), dist.end(), -1);
    order.clear();
    sigma[s] = 1.0;
    dist[s] = 0;
    queue.assign(1, s);
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      order.push_back(u);
      for (std::size_t w : g.successors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
        if (dist[w] == dist[u] + 1) sigma[w] += sigma[u];
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const std::size_t w = *it;
      for (std::size_t u : g.predecessors(w)) {
        if (dist[u] >= 0 && dist[u] + 1 == dist[w]) delta[u] += sigma[u] / sigma[w] * (1.0 + delta[w]);
      }
      if (w != s) r.scores[w] += delta[w];
    }
  }
  // Every unordered pair was accumulated from both ends.
  const double pairs = static_cast<double>(n > 2 ? (n - 1) * (n - 2) / 2 : 1);
  for (double& score : r.scores) {
    score /= 2.0;
    if (conv == Convention::normalized) score /= pairs;
  }
  return r;
}

CentralityReport eccentricity_centrality(const Graph& g, Convention conv) {
  auto r = make_report(g, Measure::eccentricity, conv);
  const std::size_t n = g.node_count();
  for (std::size_t v = 0; v < n; ++v) {
    const auto dist = hop_distances(g, v, Traversal::out);
    std::size_t ecc = 0;
    std::optional<std::size_t> unreachable;
    for (std::size_t u = 0; u < n; ++u) {
      if (!dist[u]) {
        unreachable = u;
        break;
      }
      ecc = std::max(ecc, *dist[u]);
    }
    if (unreachable) {
      if (conv != Convention::raw) {
        throw DomainError(std::string(to_string(conv)) + " eccentricity requires a connected graph: '" +
                          g.label(*unreachable).str() + "' is unreachable from '" + g.label(v).str() + "'");
      }
      r.scores[v] = std::numeric_limits<double>::infinity();
      continue;
    }
    if (conv != Convention::raw && ecc == 0) {
      throw DomainError(std::string(to_string(conv)) + " eccentricity is undefined for a single node");
    }
    const double e = static_cast<double>(ecc);
    switch (conv) {
      case Convention::reciprocal: r.scores[v] = 1.0 / e; break;
      case Convention::normalized: r.scores[v] = static_cast<double>(n - 1) / e; break;
      default: r.scores[v] = e; break;
    }
  }
  return r;
}

CentralityReport eigenvector_centrality(const Graph& g, Convention conv, const EigenvectorOptions& options) {
  auto r = make_report(g, Measure::eigenvector, conv);
  const std::size_t n = g.node_count();
  if (n == 0) return r;

  const ComponentLabels comps = component_labels(g);
  std::vector<std::size_t> sizes(comps.count, 0);
  for (std::size_t c : comps.id) ++sizes[c];
  // Component ids follow the smallest member, so the first maximum wins ties.
  const std::size_t target =
      static_cast<std::size_t>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < n; ++i) {
    if (comps.id[i] == target) members.push_back(i);
  }

  std::vector<double> x(n, 0.0);
  for (std::size_t i : members) x[i] = 1.0;
  std::vector<double> y(n, 0.0);

  const bool lone = members.size() == 1 && !g.has_edge(members[0], members[0]);
  if (!lone) {
    auto multiply = [&](const std::vector<double>& in, std::vector<double>& out) {
      double top = 0.0;
      for (std::size_t i : members) {
        double sum = 0.0;
        for (std::size_t j : g.predecessors(i)) sum += in[j];
        out[i] = sum;
        top = std::max(top, sum);
      }
      return top;
    };
    bool converged = false;
    double diff = std::numeric_limits<double>::infinity();
    for (std::size_t iter = 0; iter < options.max_iterations; ++iter) {
      const double top = multiply(x, y);
      if (top <= 0.0) {
        throw ConvergenceError("adjacency matrix of the largest component has no positive dominant eigenvector",
                               0.0);
      }
      double top_avg = 0.0;
      for (std::size_t i : members) {
        y[i] = 0.5 * (x[i] + y[i] / top);
        top_avg = std::max(top_avg, y[i]);
      }
      diff = 0.0;
      for (std::size_t i : members) {
        y[i] /= top_avg;
        diff = std::max(diff, std::abs(y[i] - x[i]));
      }
      std::swap(x, y);
      if (diff < options.tolerance) {
        converged = true;
        break;
      }
    }
    if (!converged) {
      throw ConvergenceError("eigenvector power iteration did not converge within " +
                                 std::to_string(options.max_iterations) + " iterations (last change " +
                                 std::to_string(diff) + ")",
                             diff);
    }
  }

  const double total = std::accumulate(x.begin(), x.end(), 0.0);
  const double top = *std::max_element(x.begin(), x.end());
  for (std::size_t i = 0; i < n; ++i) {
    switch (conv) {
      case Convention::unit_sum: r.scores[i] = x[i] / total; break;
      case Convention::unit_max: r.scores[i] = x[i] / top; break;
      default: r.scores[i] = 100.0 * x[i] / total; break;
    }
  }
  return r;
}

CentralityReport centrality(const Graph& g, Measure m, Convention c) {
  switch (m) {
    case Measure::degree: return degree_centrality(g, c);
    case Measure::closeness: return closeness_centrality(g, c);
    case Measure::betweenness: return betweenness_centrality(g, c);
    case Measure::eccentricity: return eccentricity_centrality(g, c);
    case Measure::eigenvector: return eigenvector_centrality(g, c);
  }
  throw DomainError("unknown measure");
}

}  // namespace netdyn
