// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "netdyn/brokerage.hpp"
#include "netdyn/centrality.hpp"
#include "netdyn/cli.hpp"
#include "netdyn/cohesion.hpp"
#include "netdyn/dynamics.hpp"
#include "netdyn/fixture.hpp"
#include "netdyn/generators.hpp"
#include "netdyn/io.hpp"
#include "netdyn/prestige.hpp"
#include "netdyn/rng.hpp"
#include "oracles.hpp"
#include "random_graphs.hpp"
#include "reference_scores.hpp"

using namespace netdyn;
namespace fs = std::filesystem;

namespace {

constexpr double kMeasureTolerance = 1e-9;
constexpr double kResidualTolerance = 1e-8;
constexpr double kPercentSumTolerance = 0.01;

// Collects the first few failure descriptions of one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (notes_.size() < 5) notes_.push_back(what);
  }
  bool ok() const { return failures_ == 0; }
  std::string summary() const {
    std::string out = std::to_string(failures_) + " failure(s)";
    for (const auto& n : notes_) out += "; " + n;
    return out;
  }

 private:
  std::size_t failures_ = 0;
  std::vector<std::string> notes_;
};

using Sets = std::vector<std::vector<NodeLabel>>;

Sets sets(std::initializer_list<std::initializer_list<const char*>> in) {
  Sets out;
  for (auto s : in) out.emplace_back(s.begin(), s.end());
  return out;
}

void criterion1(Check& c) {
  const Graph g = fixture_g();
  std::size_t checked = 0;
  for (std::size_t col = 0; col < reference::kColumns.size(); ++col) {
    const auto& column = reference::kColumns[col];
    const CentralityReport r = centrality(g, column.measure, column.convention);
    for (const auto& row : reference::kRows) {
      if (reference::excluded(row.node, col)) continue;
      const double got = r.at(NodeLabel(row.node));
      c.expect(std::abs(got - row.values[col]) <= column.tolerance,
               std::string(row.node) + " column " + std::to_string(col) + " got " + std::to_string(got));
      ++checked;
    }
  }
  c.expect(checked == 149, "checked " + std::to_string(checked) + " cells");
}

void criterion2(Check& c) {
  struct Expect {
    const char* step;
    std::size_t nodes, edges;
  };
  const auto outcomes = replay_case_study();
  c.expect(outcomes.size() == 15, "outcome count");
  auto find = [&](const std::string& step) -> const ReplayOutcome* {
    for (const auto& o : outcomes) {
      if (o.step == step) return &o;
    }
    return nullptr;
  };
  for (const Expect& e : {Expect{"G1", 8, 9}, Expect{"G2", 10, 9}, Expect{"G4", 10, 9}, Expect{"G8", 12, 13},
                          Expect{"G9", 9, 14}, Expect{"G13", 9, 10}, Expect{"G14", 11, 9}}) {
    const ReplayOutcome* o = find(e.step);
    c.expect(o && o->nodes == e.nodes && o->edges == e.edges, std::string(e.step) + " counts");
  }
  for (auto [step, comps] : {std::pair{"G0", 3u}, std::pair{"G7", 4u}, std::pair{"G14", 2u}}) {
    const ReplayOutcome* o = find(step);
    c.expect(o && o->components == comps, std::string(step) + " components");
  }
  std::vector<std::string> raised;
  for (const auto& o : outcomes) raised.insert(raised.end(), o.errata.begin(), o.errata.end());
  c.expect(raised == std::vector<std::string>{"E1", "E2", "E3", "E4", "E5", "E6", "E7", "E8"}, "errata set");
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    c.expect(outcomes[i].model_id == static_cast<int>(i) + 2, outcomes[i].step + " model");
  }
}

void criterion3(Check& c) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const Graph g = generate_er(1 + seed % 8, 0.4, seed);
    const std::string tag = "seed " + std::to_string(seed);
    const auto bc = betweenness_centrality(g).scores;
    const auto cc = closeness_centrality(g).scores;
    const auto ecc = eccentricity_centrality(g).scores;
    const auto obc = oracle::betweenness(g), occ = oracle::closeness(g), oecc = oracle::eccentricity(g);
    for (std::size_t i = 0; i < g.node_count(); ++i) {
      c.expect(std::abs(bc[i] - obc[i]) <= kMeasureTolerance, tag + " betweenness");
      c.expect(std::abs(cc[i] - occ[i]) <= kMeasureTolerance, tag + " closeness");
      c.expect(ecc[i] == oecc[i], tag + " eccentricity");
    }
    c.expect(bridges(g) == oracle::bridges(g), tag + " bridges");
    c.expect(cut_vertices(g) == oracle::cut_vertices(g), tag + " cut vertices");
    c.expect(bi_components(g) == oracle::bi_components(g), tag + " bi-components");
  }
}

void criterion4(Check& c) {
  const Graph g = fixture_g();
  c.expect(cliques(g) == sets({{"V2", "V6", "V9"}, {"V2", "V7", "V9"}}), "cliques");
  c.expect(k_core(g, 2).nodes() == std::vector<NodeLabel>{"V2", "V3", "V5", "V6", "V7", "V9"}, "2-core");
  c.expect(k_core(g, 3).empty(), "3-core");
  const auto b = bridges(g);
  c.expect(b == std::vector<Edge>{{"V1", "V9"}, {"V3", "V4"}, {"V5", "V8"}, {"V9", "V10"}}, "bridges");
  for (const Edge& e : b) {
    c.expect(g.degree(g.index_of(e.source)) == 1 || g.degree(g.index_of(e.target)) == 1, "bridge not pendant");
  }
  c.expect(b == oracle::bridges(g), "bridges oracle");
  c.expect(cut_vertices(g) == std::vector<NodeLabel>{"V3", "V5", "V9"}, "cut vertices");
  c.expect(cut_vertices(g) == oracle::cut_vertices(g), "cut vertices oracle");
  c.expect(bi_components(g) == sets({{"V2", "V3", "V5", "V6", "V7", "V9"}}), "bi-components");
  c.expect(bi_components(g) == oracle::bi_components(g), "bi-components oracle");
}

void criterion5(Check& c) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const Graph g = testgraphs::random_digraph(1 + seed % 15, 0.3, seed);
    const std::size_t n = g.node_count();
    const DyadCensus d = dyad_census(g);
    c.expect(d.mutual + d.asymmetric + d.null == n * (n - 1) / 2, "dyad identity seed " + std::to_string(seed));
  }
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const Graph g = generate_er(20, 0.25, seed);
    std::vector<NodeLabel> prev = k_core(g, 0).nodes();
    c.expect(prev.size() == g.node_count(), "0-core is everything");
    for (std::size_t k = 1; k <= 5; ++k) {
      const std::vector<NodeLabel> cur = k_core(g, k).nodes();
      c.expect(std::includes(prev.begin(), prev.end(), cur.begin(), cur.end()), "k-core nesting at " + std::to_string(k));
      prev = cur;
    }
  }
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Graph g = generate_er(12, 0.35, seed);
    const auto x = eigenvector_centrality(g, Convention::unit_max).scores;
    std::vector<double> ax(x.size(), 0.0);
    for (const auto& e : g.edges()) {
      ax[e.target] += x[e.source];
      if (e.source != e.target) ax[e.source] += x[e.target];
    }
    double num = 0, den = 0;
    for (std::size_t i = 0; i < x.size(); ++i) num += x[i] * ax[i], den += x[i] * x[i];
    for (std::size_t i = 0; i < x.size(); ++i) {
      c.expect(std::abs(ax[i] - num / den * x[i]) < kResidualTolerance, "eigen residual seed " + std::to_string(seed));
    }
  }
  const auto pct = eigenvector_centrality(fixture_g(), Convention::percent).scores;
  double sum = 0;
  for (double v : pct) sum += v;
  c.expect(std::abs(sum - 100.0) <= kPercentSumTolerance, "percent sum");
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const Graph g = testgraphs::random_digraph(2 + seed % 6, 0.4, seed);
    for (std::size_t v = 0; v < g.node_count(); ++v) {
      const double p = proximity_prestige(g, g.label(v));
      c.expect(p >= 0.0 && p <= 1.0, "proximity range");
    }
  }
  for (std::size_t n = 2; n <= 8; ++n) {
    std::vector<NodeLabel> nodes{"hub"};
    std::vector<EdgeInput> arcs;
    for (std::size_t i = 1; i < n; ++i) {
      nodes.emplace_back("s" + std::to_string(i));
      arcs.push_back({nodes.back(), "hub"});
    }
    c.expect(proximity_prestige(Graph::build(true, nodes, arcs), "hub") == 1.0, "in-star hub");
  }
}

void criterion6(Check& c) {
  Rng rng(2024);
  std::size_t flips = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const std::size_t n = 3 + rng.uniform_index(8);
    std::vector<NodeLabel> nodes;
    std::vector<std::size_t> side;
    for (std::size_t i = 0; i < n; ++i) {
      nodes.emplace_back("V" + std::to_string(i + 1));
      side.push_back(rng.uniform_index(2));
    }
    std::vector<EdgeInput> edges;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (rng.bernoulli(0.5)) edges.push_back({nodes[i], nodes[j], side[i] == side[j] ? 1 : -1});
      }
    }
    const Graph g = Graph::build(false, nodes, edges);
    const std::string tag = "instance " + std::to_string(seed);
    const BalanceResult r = is_balanced(SignedGraph(g));
    c.expect(r.balanced && r.witness && r.witness->covers(g), tag + " verdict");
    if (!r.balanced || !r.witness) continue;
    for (std::size_t k = 0; k < g.edge_count(); ++k) {
      const auto& e = g.edges()[k];
      const bool same = r.witness->group_of(g.label(e.source)) == r.witness->group_of(g.label(e.target));
      c.expect(same == (g.sign(k) > 0), tag + " witness");
    }
    const auto bridge_list = bridges(g);
    for (std::size_t k = 0; k < edges.size(); ++k) {
      const Edge as_edge = edges[k].source < edges[k].target ? Edge{edges[k].source, edges[k].target}
                                                             : Edge{edges[k].target, edges[k].source};
      if (std::find(bridge_list.begin(), bridge_list.end(), as_edge) != bridge_list.end()) continue;
      std::vector<EdgeInput> flipped = edges;
      flipped[k].sign = -*flipped[k].sign;
      const BalanceResult f = is_balanced(SignedGraph(Graph::build(false, nodes, flipped)));
      c.expect(!f.balanced && !f.violating_cycle.empty(), tag + " flip");
      ++flips;
    }
  }
  c.expect(flips > 100, "too few on-cycle flips: " + std::to_string(flips));
}

void criterion7(Check& c) {
  for (std::uint64_t seed : {1u, 7u, 99u}) {
    for (std::size_t k : {2u, 4u, 6u}) {
      c.expect(write_network(generate_ws(20, k, 0.0, seed)) == write_network(generate_regular(20, k)), "WS p=0");
    }
  }
  for (double p : {0.0, 0.05, 0.1, 0.3, 0.5, 0.9, 1.0}) {
    c.expect(generate_ws(500, 6, p, 17).edge_count() == 1500, "WS m at p=" + std::to_string(p));
  }
  const double sigma = std::sqrt(495.0 * 0.9);
  int excursions = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const double m = static_cast<double>(generate_er(100, 0.1, seed).edge_count());
    if (std::abs(m - 495.0) > 3 * sigma) ++excursions;
  }
  c.expect(excursions <= 1, "ER excursions " + std::to_string(excursions));
  for (std::size_t m0 = 1; m0 <= 4; ++m0) {
    for (std::size_t n : {m0 + 1, m0 + 2, std::size_t{30}, std::size_t{100}}) {
      const Graph g = generate_ba(n, m0, 11 * n + m0);
      c.expect(g.node_count() == n && g.edge_count() == m0 * (m0 + 1) / 2 + (n - m0 - 1) * m0, "BA arithmetic");
    }
  }
  for (GeneratorKind kind : {GeneratorKind::regular, GeneratorKind::erdos_renyi, GeneratorKind::barabasi_albert,
                             GeneratorKind::watts_strogatz}) {
    const GeneratorSpec spec{kind, 60, 4, 0.2, 2, 1234};
    c.expect(write_network(generate(spec)) == write_network(generate(spec)), "determinism " +
                                                                                  std::string(to_string(kind)));
  }
}

std::string run_cli(const std::vector<std::string>& args, int& code) {
  std::ostringstream out, err;
  code = cli::run(args, out, err);
  return out.str();
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

void criterion8(Check& c) {
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    const Graph g = testgraphs::random_mixed_graph(seed);
    const std::string text = write_network(g);
    const Graph back = read_network(text);
    c.expect(back == g && back.digest() == g.digest() && write_network(back) == text,
             "network seed " + std::to_string(seed));
  }
  Rng rng(8);
  const std::vector<std::string> notes{"", "plain", "tab\tin", "new\nline", "back\\slash", "cr\r"};
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<MutationEvent> log;
    std::uint64_t seq = 0;
    for (std::size_t i = rng.uniform_index(15); i > 0; --i) {
      seq += 1 + rng.uniform_index(3);
      const NodeLabel a("V" + std::to_string(1 + rng.uniform_index(30)));
      const NodeLabel b("V" + std::to_string(1 + rng.uniform_index(30)));
      const std::string& note = notes[rng.uniform_index(notes.size())];
      switch (rng.uniform_index(4)) {
        case 0: log.push_back(MutationEvent::add_node(seq, a, note)); break;
        case 1: log.push_back(MutationEvent::remove_node(seq, a, note)); break;
        case 2: log.push_back(MutationEvent::add_link(seq, a, b, note)); break;
        default: log.push_back(MutationEvent::remove_link(seq, a, b, note)); break;
      }
    }
    const std::string text = write_event_log(log);
    c.expect(read_event_log(text) == log && write_event_log(read_event_log(text)) == text,
             "event log trial " + std::to_string(trial));
  }
  for (const auto& s : case_study_steps()) {
    c.expect(read_event_log(write_event_log(s.log)) == s.log, s.name + " log");
  }

  const fs::path dir = fs::temp_directory_path() / "netdyn_acceptance";
  fs::create_directories(dir);
  const std::vector<std::vector<std::string>> invocations{
      {"generate", "--kind", "ws", "--n", "50", "--k", "4", "--p", "0.2", "--seed", "3"},
      {"generate", "--kind", "ba", "--n", "80", "--m-per-node", "2", "--seed", "5", "--emit", "edgelist"},
      {"analyze", "--in", "fixture_G"},
      {"analyze", "--in", "fixture_G", "--format", "delimited"},
      {"report", "--kind", "communities"},
      {"report", "--kind", "cliques"},
      {"mutate", "--log", "G14"},
      {"replay-case-study", "--format", "delimited"},
  };
  for (std::size_t i = 0; i < invocations.size(); ++i) {
    std::string outputs[2];
    for (int rep = 0; rep < 2; ++rep) {
      const fs::path out = dir / ("run" + std::to_string(i) + "_" + std::to_string(rep));
      fs::remove(out);
      std::vector<std::string> args = invocations[i];
      args.insert(args.end(), {"--out", out.string()});
      int code = 0;
      run_cli(args, code);
      c.expect(code == 0, invocations[i][0] + " exit code");
      outputs[rep] = slurp(out);
    }
    c.expect(!outputs[0].empty() && outputs[0] == outputs[1], invocations[i][0] + " byte-identical");
  }
}

struct Criterion {
  int id;
  const char* name;
  std::function<void(Check&)> body;
  double budget_seconds;  // 0: no runtime bound
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "reference centrality scores", criterion1, 1.0},
      {2, "case-study replay", criterion2, 1.0},
      {3, "oracle equivalence", criterion3, 30.0},
      {4, "structural facts of the reference network", criterion4, 0},
      {5, "algebraic identities", criterion5, 0},
      {6, "balance property", criterion6, 0},
      {7, "generator contracts", criterion7, 0},
      {8, "round-trip and determinism", criterion8, 0},
  };
  int failed = 0;
  for (const Criterion& cr : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cr.budget_seconds > 0) {
      check.expect(secs < cr.budget_seconds, "runtime over " + std::to_string(cr.budget_seconds) + " s");
    }
    const bool ok = check.ok();
    failed += !ok;
    std::printf("%s %d %s (%.3f s)%s%s\n", ok ? "PASS" : "FAIL", cr.id, cr.name, secs, ok ? "" : ": ",
                ok ? "" : check.summary().c_str());
  }
  return failed;
}
