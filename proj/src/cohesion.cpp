#include "netdyn/cohesion.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <iterator>
#include <string>
#include <tuple>

#include "netdyn/error.hpp"

namespace netdyn {
namespace {

/// Distinct neighbours other than the node itself, direction ignored.
std::vector<std::vector<std::size_t>> simple_neighbors(const Graph& g) {
  std::vector<std::vector<std::size_t>> adj(g.node_count());
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    for (std::size_t w : g.neighbors(i)) {
      if (w != i) adj[i].push_back(w);
    }
  }
  return adj;
}

}  // namespace

Partition::Partition(const std::map<NodeLabel, std::size_t>& groups) {
  std::map<std::size_t, std::size_t> renumber;
  for (const auto& [label, id] : groups) {
    auto [it, inserted] = renumber.emplace(id, renumber.size());
    groups_.emplace(label, it->second);
  }
  count_ = renumber.size();
}

std::size_t Partition::group_of(const NodeLabel& label) const {
  auto it = groups_.find(label);
  if (it == groups_.end()) throw GraphError("node '" + label.str() + "' has no group");
  return it->second;
}

std::vector<std::vector<NodeLabel>> Partition::blocks() const {
  std::vector<std::vector<NodeLabel>> out(count_);
  for (const auto& [label, id] : groups_) out[id].push_back(label);
  return out;
}

bool Partition::covers(const Graph& g) const {
  if (groups_.size() != g.node_count()) return false;
  return std::all_of(g.nodes().begin(), g.nodes().end(), [&](const NodeLabel& l) { return groups_.contains(l); });
}

bool OverlappingPartition::covers(const Graph& g) const {
  if (groups.size() != g.node_count()) return false;
  return std::all_of(g.nodes().begin(), g.nodes().end(), [&](const NodeLabel& l) {
    auto it = groups.find(l);
    return it != groups.end() && !it->second.empty();
  });
}

SignedGraph::SignedGraph(Graph g) : graph_(std::move(g)) {
  if (graph_.edge_count() > 0 && !graph_.is_signed()) {
    throw GraphError("signed graph requires a sign on every edge");
  }
}

TwoModeGraph::TwoModeGraph(std::vector<NodeLabel> actors, std::vector<NodeLabel> events, std::vector<Edge> ties)
    : actors_(std::move(actors)), events_(std::move(events)) {
  std::sort(actors_.begin(), actors_.end());
  std::sort(events_.begin(), events_.end());
  for (const auto* side : {&actors_, &events_}) {
    if (auto dup = std::adjacent_find(side->begin(), side->end()); dup != side->end()) {
      throw GraphError("duplicate node label '" + dup->str() + "'");
    }
  }
  std::vector<NodeLabel> both;
  std::set_intersection(actors_.begin(), actors_.end(), events_.begin(), events_.end(), std::back_inserter(both));
  if (!both.empty()) throw GraphError("'" + both.front().str() + "' is both an actor and an event");

  auto is_actor = [&](const NodeLabel& l) { return std::binary_search(actors_.begin(), actors_.end(), l); };
  auto is_event = [&](const NodeLabel& l) { return std::binary_search(events_.begin(), events_.end(), l); };
  for (const Edge& t : ties) {
    for (const NodeLabel* end : {&t.source, &t.target}) {
      if (!is_actor(*end) && !is_event(*end)) throw GraphError("tie references unknown node '" + end->str() + "'");
    }
    if (is_actor(t.source) && is_event(t.target)) {
      ties_.push_back(t);
    } else if (is_event(t.source) && is_actor(t.target)) {
      ties_.push_back({t.target, t.source});
    } else {
      throw GraphError("tie " + t.source.str() + "-" + t.target.str() +
                       " joins two nodes of the same mode; affiliation ties must join an actor and an event");
    }
  }
  std::sort(ties_.begin(), ties_.end());
  ties_.erase(std::unique(ties_.begin(), ties_.end()), ties_.end());
}

double density(const Graph& g) {
  const std::size_t n = g.node_count();
  if (n < 2) throw DomainError("density needs at least 2 nodes");
  const double pairs = static_cast<double>(n) * static_cast<double>(n - 1) / (g.directed() ? 1.0 : 2.0);
  return static_cast<double>(g.edge_count()) / pairs;
}

Partition components(const Graph& g) {
  const ComponentLabels labels = component_labels(g);
  std::map<NodeLabel, std::size_t> groups;
  for (std::size_t i = 0; i < g.node_count(); ++i) groups.emplace(g.label(i), labels.id[i]);
  return Partition(groups);
}

Subnetwork k_core(const Graph& g, std::size_t k) {
  const auto adj = simple_neighbors(g);
  const std::size_t n = g.node_count();
  std::vector<std::size_t> deg(n);
  std::vector<bool> removed(n, false);
  std::deque<std::size_t> queue;
  for (std::size_t i = 0; i < n; ++i) {
    deg[i] = adj[i].size();
    if (deg[i] < k) {
      removed[i] = true;
      queue.push_back(i);
    }
  }
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t w : adj[u]) {
      if (removed[w]) continue;
      if (--deg[w] < k) {
        removed[w] = true;
        queue.push_back(w);
      }
    }
  }
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < n; ++i) {
    if (!removed[i]) kept.push_back(i);
  }
  return Subnetwork(g, std::move(kept));
}

std::map<NodeLabel, std::size_t> core_number(const Graph& g) {
  const auto adj = simple_neighbors(g);
  const std::size_t n = g.node_count();
  std::vector<std::size_t> deg(n);
  std::set<std::pair<std::size_t, std::size_t>> pending;  // (current degree, node)
  for (std::size_t i = 0; i < n; ++i) {
    deg[i] = adj[i].size();
    pending.emplace(deg[i], i);
  }
  std::vector<std::size_t> core(n, 0);
  std::vector<bool> done(n, false);
  std::size_t level = 0;
  while (!pending.empty()) {
    auto [d, u] = *pending.begin();
    pending.erase(pending.begin());
    level = std::max(level, d);
    core[u] = level;
    done[u] = true;
    for (std::size_t w : adj[u]) {
      if (done[w]) continue;
      pending.erase({deg[w], w});
      --deg[w];
      pending.emplace(deg[w], w);
    }
  }
  std::map<NodeLabel, std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace(g.label(i), core[i]);
  return out;
}

std::vector<std::vector<NodeLabel>> cliques(const Graph& g) {
  if (g.directed()) throw DomainError("clique enumeration is defined for undirected graphs only");
  const auto adj = simple_neighbors(g);
  std::vector<std::vector<std::size_t>> found;

  auto intersect = [](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    std::vector<std::size_t> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  };

  std::vector<std::size_t> current;
  std::function<void(std::vector<std::size_t>, std::vector<std::size_t>)> expand =
      [&](std::vector<std::size_t> candidates, std::vector<std::size_t> excluded) {
        if (candidates.empty()) {
          if (excluded.empty() && current.size() >= 3) {
            auto c = current;
            std::sort(c.begin(), c.end());
            found.push_back(std::move(c));
          }
          return;
        }
        std::size_t pivot = candidates.front();
        std::size_t best = 0;
        for (const auto* pool : {&candidates, &excluded}) {
          for (std::size_t u : *pool) {
            const std::size_t covered = intersect(adj[u], candidates).size();
            if (covered > best) {
              best = covered;
              pivot = u;
            }
          }
        }
        std::vector<std::size_t> branch;
        std::set_difference(candidates.begin(), candidates.end(), adj[pivot].begin(), adj[pivot].end(),
                            std::back_inserter(branch));
        for (std::size_t v : branch) {
          current.push_back(v);
          expand(intersect(candidates, adj[v]), intersect(excluded, adj[v]));
          current.pop_back();
          candidates.erase(std::find(candidates.begin(), candidates.end(), v));
          excluded.insert(std::upper_bound(excluded.begin(), excluded.end(), v), v);
        }
      };

  std::vector<std::size_t> all(g.node_count());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  expand(all, {});

  std::sort(found.begin(), found.end());
  std::vector<std::vector<NodeLabel>> out;
  out.reserve(found.size());
  for (const auto& c : found) {
    std::vector<NodeLabel> labels;
    for (std::size_t i : c) labels.push_back(g.label(i));
    out.push_back(std::move(labels));
  }
  return out;
}

double modularity(const Graph& g, const Partition& p) {
  const auto adj = simple_neighbors(g);
  std::size_t twice_m = 0;
  for (const auto& a : adj) twice_m += a.size();
  if (twice_m == 0) return 0.0;
  std::vector<std::size_t> group(g.node_count());
  for (std::size_t i = 0; i < g.node_count(); ++i) group[i] = p.group_of(g.label(i));
  std::vector<double> inside(p.group_count(), 0.0);
  std::vector<double> degree_sum(p.group_count(), 0.0);
  for (std::size_t i = 0; i < adj.size(); ++i) {
    degree_sum[group[i]] += static_cast<double>(adj[i].size());
    for (std::size_t w : adj[i]) {
      if (group[w] == group[i]) inside[group[i]] += 1.0;  // each internal edge seen twice
    }
  }
  const double m2 = static_cast<double>(twice_m);
  double q = 0.0;
  for (std::size_t c = 0; c < p.group_count(); ++c) {
    q += inside[c] / m2 - (degree_sum[c] / m2) * (degree_sum[c] / m2);
  }
  return q;
}

CommunityResult communities(const Graph& g) {
  const auto adj = simple_neighbors(g);
  const std::size_t n = g.node_count();
  std::int64_t twice_m = 0;
  for (const auto& a : adj) twice_m += static_cast<std::int64_t>(a.size());
  const std::int64_t m = twice_m / 2;

  // Communities are named by their smallest member index, which is also their
  // smallest label because node indices follow label order.
  std::vector<std::size_t> rep(n);
  std::vector<std::int64_t> degree_sum(n, 0);
  std::map<std::pair<std::size_t, std::size_t>, std::int64_t> between;
  for (std::size_t i = 0; i < n; ++i) {
    rep[i] = i;
    degree_sum[i] = static_cast<std::int64_t>(adj[i].size());
    for (std::size_t w : adj[i]) {
      if (i < w) between[{i, w}] += 1;
    }
  }

  // Modularity gain of merging c and d, scaled by 2m^2 so that it is an integer:
  // 2m * e_cd - D_c * D_d.
  while (!between.empty()) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    std::int64_t best_gain = 0;
    for (const auto& [key, links] : between) {
      const std::int64_t gain = 2 * m * links - degree_sum[key.first] * degree_sum[key.second];
      if (!best || gain > best_gain) {
        best = key;
        best_gain = gain;
      }
    }
    if (best_gain <= 0) break;
    const auto [keep, gone] = *best;
    degree_sum[keep] += degree_sum[gone];
    for (std::size_t i = 0; i < n; ++i) {
      if (rep[i] == gone) rep[i] = keep;
    }
    std::map<std::pair<std::size_t, std::size_t>, std::int64_t> next;
    for (const auto& [key, links] : between) {
      std::size_t a = key.first == gone ? keep : key.first;
      std::size_t b = key.second == gone ? keep : key.second;
      if (a == b) continue;
      if (b < a) std::swap(a, b);
      next[{a, b}] += links;
    }
    between = std::move(next);
  }

  std::map<NodeLabel, std::size_t> groups;
  for (std::size_t i = 0; i < n; ++i) groups.emplace(g.label(i), rep[i]);
  CommunityResult result{Partition(groups), 0.0};
  result.modularity = modularity(g, result.partition);
  return result;
}

BalanceResult is_balanced(const SignedGraph& sg) {
  const Graph& g = sg.graph();
  const std::size_t n = g.node_count();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<int> colour(n, -1);
  std::vector<std::size_t> parent(n, kNone);

  // Every tie incident to u in either direction, with its sign.
  auto incident = [&](std::size_t u) {
    std::vector<std::pair<std::size_t, int>> out;
    for (std::size_t w : g.successors(u)) out.emplace_back(w, g.sign(*g.edge_index(u, w)));
    if (g.directed()) {
      for (std::size_t w : g.predecessors(u)) out.emplace_back(w, g.sign(*g.edge_index(w, u)));
    }
    return out;
  };

  auto path_to_root = [&](std::size_t v) {
    std::vector<std::size_t> path{v};
    while (parent[path.back()] != kNone) path.push_back(parent[path.back()]);
    return path;
  };

  BalanceResult result;
  for (std::size_t root = 0; root < n; ++root) {
    if (colour[root] >= 0) continue;
    colour[root] = 0;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (auto [w, sign] : incident(u)) {
        const int expected = colour[u] ^ (sign < 0 ? 1 : 0);
        if (colour[w] < 0) {
          colour[w] = expected;
          parent[w] = u;
          queue.push_back(w);
          continue;
        }
        if (colour[w] == expected) continue;
        if (u == w) {
          result.violating_cycle = {g.label(u)};
          return result;
        }
        auto pu = path_to_root(u);
        auto pw = path_to_root(w);
        while (pu.size() > 1 && pw.size() > 1 && pu[pu.size() - 2] == pw[pw.size() - 2]) {
          pu.pop_back();
          pw.pop_back();
        }
        // pu and pw now both end at the lowest common ancestor.
        for (auto it = pu.rbegin(); it != pu.rend(); ++it) result.violating_cycle.push_back(g.label(*it));
        for (std::size_t k = 0; k + 1 < pw.size(); ++k) result.violating_cycle.push_back(g.label(pw[k]));
        return result;
      }
    }
  }
  std::map<NodeLabel, std::size_t> groups;
  for (std::size_t i = 0; i < n; ++i) groups.emplace(g.label(i), static_cast<std::size_t>(colour[i]));
  result.balanced = true;
  result.witness = Partition(groups);
  return result;
}

Graph project_two_mode(const TwoModeGraph& tm, Side side) {
  const auto& keep = side == Side::actors ? tm.actors() : tm.events();
  std::map<NodeLabel, std::vector<NodeLabel>> by_counterpart;
  for (const Edge& t : tm.ties()) {
    if (side == Side::actors) {
      by_counterpart[t.target].push_back(t.source);
    } else {
      by_counterpart[t.source].push_back(t.target);
    }
  }
  std::map<std::pair<NodeLabel, NodeLabel>, std::size_t> shared;
  for (auto& [counterpart, members] : by_counterpart) {
    std::sort(members.begin(), members.end());
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) ++shared[{members[i], members[j]}];
    }
  }
  std::vector<EdgeInput> edges;
  for (const auto& [pair, count] : shared) {
    edges.push_back({pair.first, pair.second, std::nullopt, static_cast<double>(count)});
  }
  return Graph::build(false, keep, std::move(edges));
}

}  // namespace netdyn
