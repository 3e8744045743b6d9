#include "netdyn/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <deque>
#include <functional>
#include <numeric>
#include <unordered_map>

#include "netdyn/error.hpp"

namespace netdyn {

struct Graph::Data {
  bool directed = false;
  std::vector<NodeLabel> nodes;
  std::unordered_map<std::string, std::size_t> index;
  std::vector<IndexEdge> edges;
  std::vector<std::int8_t> signs;  // empty when unsigned
  std::vector<double> weights;     // empty when unweighted
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::vector<std::size_t>> in;
  std::vector<std::vector<std::size_t>> both;
  std::vector<std::string> warnings;
  std::uint64_t digest = 0;
};

namespace {

class Fnv1a {
 public:
  void bytes(const void* p, std::size_t n) {
    const auto* b = static_cast<const unsigned char*>(p);
    for (std::size_t i = 0; i < n; ++i) {
      h_ ^= b[i];
      h_ *= 0x100000001b3ULL;
    }
  }
  void u64(std::uint64_t v) { bytes(&v, sizeof v); }
  void str(const std::string& s) {
    u64(s.size());
    bytes(s.data(), s.size());
  }
  std::uint64_t value() const { return h_; }

 private:
  std::uint64_t h_ = 0xcbf29ce484222325ULL;
};

std::string edge_text(const NodeLabel& a, const NodeLabel& b, bool directed) {
  return a.str() + (directed ? "->" : "-") + b.str();
}

}  // namespace

Graph::Graph() : Graph(build(false, {}, {})) {}

Graph::Graph(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

Graph Graph::build(bool directed, std::vector<NodeLabel> nodes, std::vector<EdgeInput> edges) {
  auto d = std::make_shared<Data>();
  d->directed = directed;

  std::sort(nodes.begin(), nodes.end());
  if (auto dup = std::adjacent_find(nodes.begin(), nodes.end()); dup != nodes.end()) {
    throw GraphError("duplicate node label '" + dup->str() + "'");
  }
  d->nodes = std::move(nodes);
  d->index.reserve(d->nodes.size());
  for (std::size_t i = 0; i < d->nodes.size(); ++i) d->index.emplace(d->nodes[i].str(), i);

  const bool any_sign = std::any_of(edges.begin(), edges.end(), [](const auto& e) { return e.sign.has_value(); });
  const bool any_weight =
      std::any_of(edges.begin(), edges.end(), [](const auto& e) { return e.weight.has_value(); });

  struct Pending {
    IndexEdge edge;
    std::size_t order;
  };
  std::vector<Pending> pending;
  pending.reserve(edges.size());
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const EdgeInput& e = edges[k];
    auto lookup = [&](const NodeLabel& label) {
      auto it = d->index.find(label.str());
      if (it == d->index.end()) {
        throw GraphError("edge " + edge_text(e.source, e.target, directed) + " references unknown node '" +
                         label.str() + "'");
      }
      return it->second;
    };
    std::size_t s = lookup(e.source);
    std::size_t t = lookup(e.target);
    if (any_sign) {
      if (!e.sign) throw GraphError("edge " + edge_text(e.source, e.target, directed) + " has no sign");
      if (*e.sign != 1 && *e.sign != -1) {
        throw GraphError("edge " + edge_text(e.source, e.target, directed) + " has sign " +
                         std::to_string(*e.sign) + "; expected +1 or -1");
      }
    }
    if (any_weight) {
      if (!e.weight) throw GraphError("edge " + edge_text(e.source, e.target, directed) + " has no weight");
      if (!std::isfinite(*e.weight)) {
        throw GraphError("edge " + edge_text(e.source, e.target, directed) + " has a non-finite weight");
      }
    }
    if (!directed && t < s) std::swap(s, t);
    pending.push_back({{s, t}, k});
  }
  std::stable_sort(pending.begin(), pending.end(),
                   [](const Pending& a, const Pending& b) { return a.edge < b.edge; });

  for (std::size_t k = 0; k < pending.size(); ++k) {
    const Pending& p = pending[k];
    if (!d->edges.empty() && d->edges.back() == p.edge) {
      const std::size_t kept = d->edges.size() - 1;
      std::string msg = "duplicate edge " +
                        edge_text(d->nodes[p.edge.source], d->nodes[p.edge.target], directed) + " collapsed";
      const EdgeInput& e = edges[p.order];
      if ((any_sign && *e.sign != d->signs[kept]) || (any_weight && *e.weight != d->weights[kept])) {
        msg += " (conflicting sign/weight ignored; first occurrence kept)";
      }
      d->warnings.push_back(std::move(msg));
      continue;
    }
    d->edges.push_back(p.edge);
    if (any_sign) d->signs.push_back(static_cast<std::int8_t>(*edges[p.order].sign));
    if (any_weight) d->weights.push_back(*edges[p.order].weight);
  }

  const std::size_t n = d->nodes.size();
  d->out.resize(n);
  d->in.resize(n);
  d->both.resize(n);
  for (const IndexEdge& e : d->edges) {
    d->out[e.source].push_back(e.target);
    d->in[e.target].push_back(e.source);
    if (!directed && e.source != e.target) {
      d->out[e.target].push_back(e.source);
      d->in[e.source].push_back(e.target);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::sort(d->out[i].begin(), d->out[i].end());
    std::sort(d->in[i].begin(), d->in[i].end());
    std::set_union(d->out[i].begin(), d->out[i].end(), d->in[i].begin(), d->in[i].end(),
                   std::back_inserter(d->both[i]));
  }

  Fnv1a h;
  h.u64(directed ? 1 : 0);
  h.u64(n);
  for (const auto& label : d->nodes) h.str(label.str());
  h.u64(d->edges.size());
  for (const auto& e : d->edges) {
    h.u64(e.source);
    h.u64(e.target);
  }
  h.u64(d->signs.size());
  for (auto s : d->signs) h.u64(static_cast<std::uint64_t>(static_cast<std::int64_t>(s)));
  h.u64(d->weights.size());
  for (double w : d->weights) h.u64(std::bit_cast<std::uint64_t>(w));
  d->digest = h.value();

  return Graph(std::move(d));
}

bool Graph::directed() const noexcept { return data_->directed; }
std::size_t Graph::node_count() const noexcept { return data_->nodes.size(); }
std::size_t Graph::edge_count() const noexcept { return data_->edges.size(); }
std::span<const NodeLabel> Graph::nodes() const noexcept { return data_->nodes; }
const NodeLabel& Graph::label(std::size_t index) const { return data_->nodes.at(index); }

std::optional<std::size_t> Graph::find(const NodeLabel& label) const {
  auto it = data_->index.find(label.str());
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t Graph::index_of(const NodeLabel& label) const {
  if (auto i = find(label)) return *i;
  throw GraphError("unknown node label '" + label.str() + "'");
}

std::span<const IndexEdge> Graph::edges() const noexcept { return data_->edges; }

Edge Graph::edge_labels(std::size_t edge_index) const {
  const IndexEdge& e = data_->edges.at(edge_index);
  return {data_->nodes[e.source], data_->nodes[e.target]};
}

std::span<const std::size_t> Graph::successors(std::size_t i) const { return data_->out.at(i); }
std::span<const std::size_t> Graph::predecessors(std::size_t i) const { return data_->in.at(i); }
std::span<const std::size_t> Graph::neighbors(std::size_t i) const { return data_->both.at(i); }

std::optional<std::size_t> Graph::edge_index(std::size_t source, std::size_t target) const {
  if (!data_->directed && target < source) std::swap(source, target);
  const IndexEdge key{source, target};
  auto it = std::lower_bound(data_->edges.begin(), data_->edges.end(), key);
  if (it == data_->edges.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - data_->edges.begin());
}

bool Graph::has_edge(std::size_t source, std::size_t target) const {
  const auto& succ = data_->out.at(source);
  return std::binary_search(succ.begin(), succ.end(), target);
}

bool Graph::has_edge(const NodeLabel& source, const NodeLabel& target) const {
  auto s = find(source);
  auto t = find(target);
  return s && t && has_edge(*s, *t);
}

std::size_t Graph::degree(std::size_t i) const { return data_->both.at(i).size(); }

std::size_t Graph::incident_degree(std::size_t i) const {
  const bool loop = has_edge(i, i);
  if (data_->directed) return data_->out.at(i).size() + data_->in.at(i).size();
  return data_->out.at(i).size() + (loop ? 1 : 0);
}

bool Graph::is_signed() const noexcept { return !data_->signs.empty(); }
bool Graph::is_weighted() const noexcept { return !data_->weights.empty(); }
int Graph::sign(std::size_t edge_index) const { return data_->signs.empty() ? 1 : data_->signs.at(edge_index); }
double Graph::weight(std::size_t edge_index) const {
  return data_->weights.empty() ? 1.0 : data_->weights.at(edge_index);
}

std::span<const std::string> Graph::warnings() const noexcept { return data_->warnings; }
std::uint64_t Graph::digest() const noexcept { return data_->digest; }

std::vector<EdgeInput> Graph::edge_inputs() const {
  std::vector<EdgeInput> out;
  out.reserve(edge_count());
  for (std::size_t k = 0; k < edge_count(); ++k) {
    const IndexEdge& e = data_->edges[k];
    EdgeInput in{data_->nodes[e.source], data_->nodes[e.target]};
    if (is_signed()) in.sign = data_->signs[k];
    if (is_weighted()) in.weight = data_->weights[k];
    out.push_back(std::move(in));
  }
  return out;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.data_ == b.data_) return true;
  const auto& x = *a.data_;
  const auto& y = *b.data_;
  return x.directed == y.directed && x.nodes == y.nodes && x.edges == y.edges && x.signs == y.signs &&
         x.weights == y.weights;
}

bool AdjacencyMatrix::symmetric() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

std::size_t AdjacencyMatrix::ones() const { return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), 1)); }

AdjacencyMatrix adjacency_matrix(const Graph& g) {
  AdjacencyMatrix a(g.node_count());
  for (const IndexEdge& e : g.edges()) {
    a(e.source, e.target) = 1;
    if (!g.directed()) a(e.target, e.source) = 1;
  }
  return a;
}

std::vector<Hops> hop_distances(const Graph& g, std::size_t source, Traversal mode) {
  std::vector<Hops> dist(g.node_count());
  dist.at(source) = 0;
  std::deque<std::size_t> queue{source};
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    const auto next = mode == Traversal::out ? g.successors(u) : mode == Traversal::in ? g.predecessors(u)
                                                                                      : g.neighbors(u);
    for (std::size_t w : next) {
      if (dist[w]) continue;
      dist[w] = *dist[u] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

std::map<NodeLabel, Hops> shortest_path_lengths(const Graph& g, const NodeLabel& source) {
  const auto dist = hop_distances(g, g.index_of(source), Traversal::out);
  std::map<NodeLabel, Hops> out;
  for (std::size_t i = 0; i < g.node_count(); ++i) out.emplace(g.label(i), dist[i]);
  return out;
}

ComponentLabels component_labels(const Graph& g) {
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  ComponentLabels result;
  result.id.assign(g.node_count(), kUnassigned);
  std::vector<std::size_t> stack;
  for (std::size_t root = 0; root < g.node_count(); ++root) {
    if (result.id[root] != kUnassigned) continue;
    const std::size_t c = result.count++;
    result.id[root] = c;
    stack.push_back(root);
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t w : g.neighbors(u)) {
        if (result.id[w] == kUnassigned) {
          result.id[w] = c;
          stack.push_back(w);
        }
      }
    }
  }
  return result;
}

bool is_connected(const Graph& g) { return component_labels(g).count <= 1; }

std::vector<Cycle> find_cycles_containing(const Graph& g, const NodeLabel& v) {
  const std::size_t start = g.index_of(v);
  std::vector<Cycle> cycles;
  if (g.has_edge(start, start)) cycles.push_back({g.label(start)});

  std::vector<std::size_t> path{start};
  std::vector<bool> on_path(g.node_count(), false);
  on_path[start] = true;

  auto emit = [&] {
    if (!g.directed()) {
      if (path.size() < 3 || path[1] > path.back()) return;
    }
    Cycle c;
    c.reserve(path.size());
    for (std::size_t i : path) c.push_back(g.label(i));
    cycles.push_back(std::move(c));
  };

  std::function<void()> extend = [&] {
    const std::size_t u = path.back();
    for (std::size_t w : g.successors(u)) {
      if (w == start) {
        if (path.size() >= 2) emit();
        continue;
      }
      if (on_path[w]) continue;
      on_path[w] = true;
      path.push_back(w);
      extend();
      path.pop_back();
      on_path[w] = false;
    }
  };
  extend();
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

bool has_cycle(const Graph& g) {
  for (const IndexEdge& e : g.edges()) {
    if (e.source == e.target) return true;
  }
  if (!g.directed()) {
    // A loop-free undirected graph is a forest iff m = n - components.
    return g.edge_count() + component_labels(g).count > g.node_count();
  }
  enum class Mark : std::uint8_t { fresh, active, done };
  std::vector<Mark> mark(g.node_count(), Mark::fresh);
  std::vector<std::pair<std::size_t, std::size_t>> stack;  // node, next successor position
  for (std::size_t root = 0; root < g.node_count(); ++root) {
    if (mark[root] != Mark::fresh) continue;
    stack.emplace_back(root, 0);
    mark[root] = Mark::active;
    while (!stack.empty()) {
      auto& [u, pos] = stack.back();
      const auto succ = g.successors(u);
      if (pos == succ.size()) {
        mark[u] = Mark::done;
        stack.pop_back();
        continue;
      }
      const std::size_t w = succ[pos++];
      if (mark[w] == Mark::active) return true;
      if (mark[w] == Mark::fresh) {
        mark[w] = Mark::active;
        stack.emplace_back(w, 0);
      }
    }
  }
  return false;
}

Subnetwork::Subnetwork(Graph parent, std::vector<std::size_t> node_indices)
    : parent_(std::move(parent)), nodes_(std::move(node_indices)) {
  std::sort(nodes_.begin(), nodes_.end());
  nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
  if (!nodes_.empty() && nodes_.back() >= parent_.node_count()) {
    throw GraphError("subnetwork node index out of range");
  }
}

std::vector<NodeLabel> Subnetwork::nodes() const {
  std::vector<NodeLabel> out;
  out.reserve(nodes_.size());
  for (std::size_t i : nodes_) out.push_back(parent_.label(i));
  return out;
}

std::vector<Edge> Subnetwork::edges() const {
  std::vector<Edge> out;
  for (std::size_t k = 0; k < parent_.edge_count(); ++k) {
    const IndexEdge& e = parent_.edges()[k];
    if (std::binary_search(nodes_.begin(), nodes_.end(), e.source) &&
        std::binary_search(nodes_.begin(), nodes_.end(), e.target)) {
      out.push_back(parent_.edge_labels(k));
    }
  }
  return out;
}

bool Subnetwork::contains(const NodeLabel& label) const {
  auto i = parent_.find(label);
  return i && std::binary_search(nodes_.begin(), nodes_.end(), *i);
}

Graph Subnetwork::to_graph() const {
  std::vector<EdgeInput> kept;
  for (EdgeInput& e : parent_.edge_inputs()) {
    if (contains(e.source) && contains(e.target)) kept.push_back(std::move(e));
  }
  return Graph::build(parent_.directed(), nodes(), std::move(kept));
}

}  // namespace netdyn
