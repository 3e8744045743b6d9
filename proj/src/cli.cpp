#include "netdyn/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "netdyn/brokerage.hpp"
#include "netdyn/centrality.hpp"
#include "netdyn/cohesion.hpp"
#include "netdyn/dynamics.hpp"
#include "netdyn/error.hpp"
#include "netdyn/fixture.hpp"
#include "netdyn/generators.hpp"
#include "netdyn/io.hpp"
#include "netdyn/prestige.hpp"
#include "netdyn/report.hpp"

namespace netdyn::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr std::string_view kFixtureName = "fixture_G";

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f || !(f << text) || !f.flush()) throw DomainError("cannot write " + path.string());
}

/// "fixture_G" names the bundled reference network; a ".net" path is a
/// network file; anything else is read as an edge list.
Graph load_graph(const std::string& in, bool directed) {
  if (in == kFixtureName) return fixture_g();
  const std::string text = read_file(in);
  if (in.ends_with(".net")) return read_network(text);
  return read_edge_list(text, directed);
}

std::string emit_graph(const Graph& g, const std::string& emit) {
  if (emit == "net") return write_network(g);
  if (emit == "edgelist") return write_edge_list(g);
  if (emit == "csv") return write_adjacency_csv(g);
  if (emit == "dot") return write_dot(g);
  throw UsageError("unknown --emit '" + emit + "' (net, edgelist, csv, dot)");
}

TableFormat table_format(const std::string& text) {
  const auto f = parse_table_format(text);
  if (!f) throw UsageError("unknown --format '" + text + "' (table, delimited)");
  return *f;
}

std::string valid_pairs() {
  std::string out;
  for (Measure m : all_measures()) {
    out += "\n  " + std::string(to_string(m)) + ":";
    for (Convention c : conventions_for(m)) out += " " + std::string(to_string(c));
  }
  return out;
}

std::vector<CentralityReport> select_reports(const Graph& g, const std::string& measure,
                                             const std::string& convention) {
  if (measure == "all") {
    if (!convention.empty()) throw UsageError("--convention needs a single --measure; valid pairs:" + valid_pairs());
    return all_centralities(g);
  }
  const auto m = parse_measure(measure);
  if (!m) throw UsageError("unknown measure '" + measure + "'; valid pairs:" + valid_pairs());
  std::vector<CentralityReport> out;
  if (convention.empty()) {
    for (Convention c : conventions_for(*m)) out.push_back(centrality(g, *m, c));
    return out;
  }
  const auto c = parse_convention(convention);
  if (!c || !accepts(*m, *c)) {
    throw UsageError("invalid convention '" + convention + "' for " + measure + "; valid pairs:" + valid_pairs());
  }
  out.push_back(centrality(g, *m, *c));
  return out;
}

/// Groups file: the delimited partition table, "node,group" header then one
/// "<label>,<group>" row per node. Group names are arbitrary tokens.
Partition read_groups(const std::string& path) {
  const std::string text = read_file(path);
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  std::map<NodeLabel, std::size_t> groups;
  std::map<std::string, std::size_t> ids;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1) {
      if (line != "node,group") throw ParseError(1, path + ": expected header 'node,group'");
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos || comma == 0 || comma + 1 == line.size()) {
      throw ParseError(line_no, path + ": expected '<label>,<group>'");
    }
    const std::string label = line.substr(0, comma);
    if (!NodeLabel::is_valid(label)) throw ParseError(line_no, path + ": invalid node label '" + label + "'");
    const auto id = ids.try_emplace(line.substr(comma + 1), ids.size()).first->second;
    if (!groups.emplace(NodeLabel(label), id).second) {
      throw ParseError(line_no, path + ": node " + label + " listed twice");
    }
  }
  if (line_no == 0) throw ParseError(1, path + ": expected header 'node,group'");
  return Partition(groups);
}

std::vector<MutationEvent> load_log(const std::string& log) {
  for (CaseStudyStep& s : case_study_steps()) {
    if (s.name == log) return std::move(s.log);
  }
  return read_event_log(read_file(log));
}

std::string labels_text(std::span<const NodeLabel> labels) {
  std::string out;
  for (const NodeLabel& l : labels) out += (out.empty() ? "" : " ") + l.str();
  return out.empty() ? "-" : out;
}

struct Options {
  // shared
  std::string in = std::string(kFixtureName);
  std::string out_path;
  std::string format = "table";
  std::string emit = "net";
  bool directed = false;
  // generate
  std::string kind;
  std::size_t n = 0, k = 0, m_per_node = 1;
  double p = 0.0;
  std::uint64_t seed = 0;
  std::string config;
  // analyze
  std::string measure = "all";
  std::string convention;
  // report
  std::string report_kind;
  std::string node;
  std::string groups;
  std::size_t core_k = 2;
  // mutate
  std::string log;
  std::string mode = "strict";
  // replay
  std::string dump_dir;
};

std::string do_generate(const Options& o, const CLI::App& cmd) {
  GeneratorSpec spec;
  if (!o.config.empty()) spec = read_generator_spec(read_file(o.config));
  if (cmd.count("--kind")) {
    const auto kind = parse_generator_kind(o.kind);
    if (!kind) throw UsageError("unknown --kind '" + o.kind + "' (regular, erdos_renyi|er, barabasi_albert|ba, watts_strogatz|ws)");
    spec.kind = *kind;
  } else if (o.config.empty()) {
    throw UsageError("generate needs --kind or --config");
  }
  if (cmd.count("--n")) spec.n = o.n;
  if (cmd.count("--k")) spec.k = o.k;
  if (cmd.count("--p")) spec.p = o.p;
  if (cmd.count("--m-per-node")) spec.m_per_node = o.m_per_node;
  if (cmd.count("--seed")) spec.seed = o.seed;
  return emit_graph(generate(spec), o.emit);
}

std::string do_analyze(const Options& o) {
  const TableFormat fmt = table_format(o.format);
  const Graph g = load_graph(o.in, o.directed);
  const auto reports = select_reports(g, o.measure, o.convention);
  return render(centrality_table(reports), fmt);
}

std::string do_report(const Options& o) {
  const TableFormat fmt = table_format(o.format);
  const Graph g = load_graph(o.in, o.directed);
  const std::string& kind = o.report_kind;
  auto need_node = [&]() -> NodeLabel {
    if (o.node.empty()) throw UsageError("--kind " + kind + " needs --node");
    if (!NodeLabel::is_valid(o.node)) throw UsageError("invalid node label '" + o.node + "'");
    return NodeLabel(o.node);
  };
  Table t;
  if (kind == "density") {
    t = {{"nodes", "edges", "density"}, {{std::to_string(g.node_count()), std::to_string(g.edge_count()),
                                           format_score(density(g))}}};
  } else if (kind == "components") {
    t = partition_table(components(g));
  } else if (kind == "k-core") {
    t.header = {"node"};
    for (const NodeLabel& l : k_core(g, o.core_k).nodes()) t.rows.push_back({l.str()});
  } else if (kind == "core-numbers") {
    t = count_table("core", core_number(g));
  } else if (kind == "cliques") {
    t = node_set_table(cliques(g));
  } else if (kind == "communities") {
    t = partition_table(communities(g).partition);
  } else if (kind == "modularity") {
    const CommunityResult r = communities(g);
    t = {{"groups", "modularity"}, {{std::to_string(r.partition.group_count()), format_score(r.modularity)}}};
  } else if (kind == "bridges") {
    t = edge_table(bridges(g));
  } else if (kind == "cut-vertices") {
    t.header = {"node"};
    for (const NodeLabel& l : cut_vertices(g)) t.rows.push_back({l.str()});
  } else if (kind == "bi-components") {
    t = node_set_table(bi_components(g));
  } else if (kind == "blocks") {
    t = node_set_table(biconnected_blocks(g));
  } else if (kind == "ego") {
    const EgoNetwork e = ego_network(g, need_node());
    t = {{"ego", "alters", "alter_ties"},
         {{e.ego.str(), labels_text(e.alters), std::to_string(e.alter_ties.size())}}};
  } else if (kind == "structural-holes") {
    t = {{"alter_a", "alter_b"}, {}};
    for (const auto& [a, b] : structural_holes(ego_network(g, need_node()))) t.rows.push_back({a.str(), b.str()});
  } else if (kind == "census") {
    if (o.groups.empty()) throw UsageError("--kind census needs --groups");
    t = census_table(brokerage_census(g, read_groups(o.groups)));
  } else if (kind == "dyads") {
    t = dyad_table(dyad_census(g));
  } else if (kind == "rank") {
    t = rank_table(rank_signal(g));
  } else if (kind == "indegree") {
    t = count_table("indegree", indegree_prestige(g));
  } else if (kind == "influence") {
    const NodeLabel v = need_node();
    t = {{"node", "influence_domain"}, {{v.str(), labels_text(influence_domain(g, v))}}};
  } else if (kind == "proximity") {
    t = {{"node", "proximity"}, {}};
    if (o.node.empty()) {
      for (const NodeLabel& v : g.nodes()) t.rows.push_back({v.str(), format_score(proximity_prestige(g, v))});
    } else {
      const NodeLabel v = need_node();
      t.rows.push_back({v.str(), format_score(proximity_prestige(g, v))});
    }
  } else if (kind == "balance") {
    const BalanceResult r = is_balanced(SignedGraph(g));
    std::string witness = "-";
    if (r.witness) {
      witness.clear();
      for (const auto& [label, group] : r.witness->groups()) {
        witness += (witness.empty() ? "" : " ") + label.str() + ":" + std::to_string(group);
      }
    }
    t = {{"balanced", "witness", "violating_cycle"},
         {{r.balanced ? "yes" : "no", witness, labels_text(r.violating_cycle)}}};
  } else {
    throw UsageError("unknown report --kind '" + kind +
                     "' (density, components, k-core, core-numbers, cliques, communities, modularity, bridges, "
                     "cut-vertices, bi-components, blocks, ego, structural-holes, census, dyads, rank, indegree, "
                     "influence, proximity, balance)");
  }
  return render(t, fmt);
}

std::string do_mutate(const Options& o, std::ostream& err) {
  ApplyMode mode;
  if (o.mode == "strict") {
    mode = ApplyMode::strict;
  } else if (o.mode == "lenient") {
    mode = ApplyMode::lenient;
  } else {
    throw UsageError("unknown --mode '" + o.mode + "' (strict, lenient)");
  }
  if (o.log.empty()) throw UsageError("mutate needs --log");
  const Graph g = load_graph(o.in, o.directed);
  const auto log = load_log(o.log);
  const History h = apply_log(g, log, mode);
  const std::string text = emit_graph(h.final(), o.emit);
  for (const std::string& w : h.warnings()) err << "warning: " << w << '\n';
  const DynamicsModel m = classify_log(log);
  err << "model " << m.id << " (" << m.code() << "): " << h.final().node_count() << " nodes, "
      << h.final().edge_count() << " edges\n";
  return text;
}

std::string do_replay(const Options& o) {
  const TableFormat fmt = table_format(o.format);
  const auto outcomes = replay_case_study();
  if (!o.dump_dir.empty()) {
    const std::filesystem::path dir(o.dump_dir);
    std::filesystem::create_directories(dir);
    write_file(dir / "fixture_G.net", write_network(fixture_g()));
    for (const CaseStudyStep& s : case_study_steps()) write_file(dir / (s.name + ".log"), write_event_log(s.log));
  }
  return render(replay_table(outcomes), fmt);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Dynamic social network analysis"};
  app.name("netdyn");
  app.require_subcommand(1, 1);

  auto add_output = [&](CLI::App* cmd) { cmd->add_option("--out", o.out_path, "Output file (default: stdout)"); };
  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("--in", o.in, "Network file (.net), edge list, or fixture_G")->capture_default_str();
    cmd->add_flag("--directed", o.directed, "Read an edge list as directed");
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "table | delimited")->capture_default_str();
  };
  auto add_emit = [&](CLI::App* cmd) {
    cmd->add_option("--emit", o.emit, "net | edgelist | csv | dot")->capture_default_str();
  };

  CLI::App* gen = app.add_subcommand("generate", "Generate a random or regular graph");
  gen->add_option("--kind", o.kind, "regular | erdos_renyi (er) | barabasi_albert (ba) | watts_strogatz (ws)");
  gen->add_option("--n", o.n, "Node count");
  gen->add_option("--k", o.k, "Lattice degree (regular, ws)");
  gen->add_option("--p", o.p, "Edge or rewiring probability (er, ws)");
  gen->add_option("--m-per-node", o.m_per_node, "Edges per arriving node (ba)");
  gen->add_option("--seed", o.seed, "RNG seed");
  gen->add_option("--config", o.config, "JSON generator spec; flags override its keys");
  add_emit(gen);
  add_output(gen);

  CLI::App* analyze = app.add_subcommand("analyze", "Centrality scores");
  add_input(analyze);
  analyze->add_option("--measure", o.measure, "degree | closeness | betweenness | eccentricity | eigenvector | all")
      ->capture_default_str();
  analyze->add_option("--convention", o.convention, "Scaling convention (default: every accepted one)");
  add_format(analyze);
  add_output(analyze);

  CLI::App* report = app.add_subcommand("report", "Cohesion, brokerage and prestige reports");
  add_input(report);
  report->add_option("--kind", o.report_kind, "Report kind")->required();
  report->add_option("--node", o.node, "Focal node (ego, structural-holes, influence, proximity)");
  report->add_option("--groups", o.groups, "Groups file with header node,group (census)");
  report->add_option("--k", o.core_k, "Core order (k-core)")->capture_default_str();
  add_format(report);
  add_output(report);

  CLI::App* mutate = app.add_subcommand("mutate", "Apply an event log");
  add_input(mutate);
  mutate->add_option("--log", o.log, "Event log file, or a case-study step name G0..G14");
  mutate->add_option("--mode", o.mode, "strict | lenient")->capture_default_str();
  add_emit(mutate);
  add_output(mutate);

  CLI::App* replay = app.add_subcommand("replay-case-study", "Replay the fifteen case-study logs");
  replay->add_option("--dump-logs", o.dump_dir, "Also write fixture_G.net and G0..G14.log into this directory");
  add_format(replay);
  add_output(replay);

  std::vector<const char*> argv{"netdyn"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    std::string text;
    if (*gen) {
      text = do_generate(o, *gen);
    } else if (*analyze) {
      text = do_analyze(o);
    } else if (*report) {
      text = do_report(o);
    } else if (*mutate) {
      text = do_mutate(o, err);
    } else {
      text = do_replay(o);
    }
    if (o.out_path.empty()) {
      out << text;
    } else {
      write_file(o.out_path, text);
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace netdyn::cli
