#include "netdyn/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "netdyn/error.hpp"

namespace netdyn {
namespace {

std::string join(std::span<const NodeLabel> labels, std::string_view sep) {
  std::string out;
  for (const NodeLabel& l : labels) {
    if (!out.empty()) out += sep;
    out += l.str();
  }
  return out;
}

}  // namespace

std::optional<TableFormat> parse_table_format(std::string_view text) noexcept {
  if (text == "table") return TableFormat::aligned;
  if (text == "delimited") return TableFormat::delimited;
  return std::nullopt;
}

std::string render(const Table& t, TableFormat format) {
  std::string out;
  auto emit_delimited = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += row[i];
    }
    out += '\n';
  };
  if (format == TableFormat::delimited) {
    emit_delimited(t.header);
    for (const auto& row : t.rows) emit_delimited(row);
    return out;
  }

  std::vector<std::size_t> width(t.header.size(), 0);
  auto measure = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
  };
  measure(t.header);
  for (const auto& row : t.rows) measure(row);
  // First column left-aligned, the rest right-aligned.
  auto emit_aligned = [&](const std::vector<std::string>& row) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      const std::size_t pad = width[i] - row[i].size();
      if (i) line += "  ";
      if (i == 0) {
        line += row[i] + std::string(pad, ' ');
      } else {
        line += std::string(pad, ' ') + row[i];
      }
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + '\n';
  };
  emit_aligned(t.header);
  for (const auto& row : t.rows) emit_aligned(row);
  return out;
}

std::string format_score(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

Table centrality_table(std::span<const CentralityReport> reports) {
  Table t;
  t.header.push_back("node");
  if (reports.empty()) return t;
  const auto& nodes = reports.front().nodes;
  for (const CentralityReport& r : reports) {
    if (r.nodes != nodes) throw DomainError("centrality reports cover different node sets");
    t.header.push_back(std::string(to_string(r.measure)) + "." + std::string(to_string(r.convention)));
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    std::vector<std::string> row{nodes[i].str()};
    for (const CentralityReport& r : reports) row.push_back(format_score(r.scores[i]));
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::vector<CentralityReport> all_centralities(const Graph& g) {
  std::vector<CentralityReport> out;
  for (Measure m : all_measures()) {
    for (Convention c : conventions_for(m)) out.push_back(centrality(g, m, c));
  }
  return out;
}

Table partition_table(const Partition& p) {
  Table t{{"node", "group"}, {}};
  for (const auto& [label, group] : p.groups()) t.rows.push_back({label.str(), std::to_string(group)});
  return t;
}

Table node_set_table(std::span<const std::vector<NodeLabel>> sets) {
  Table t{{"set", "size", "members"}, {}};
  for (std::size_t i = 0; i < sets.size(); ++i) {
    t.rows.push_back({std::to_string(i + 1), std::to_string(sets[i].size()), join(sets[i], " ")});
  }
  return t;
}

std::string node_set_lines(std::span<const std::vector<NodeLabel>> sets) {
  std::string out;
  for (const auto& s : sets) out += join(s, " ") + '\n';
  return out;
}

Table edge_table(std::span<const Edge> edges) {
  Table t{{"source", "target"}, {}};
  for (const Edge& e : edges) t.rows.push_back({e.source.str(), e.target.str()});
  return t;
}

Table count_table(std::string_view value_column, const std::map<NodeLabel, std::size_t>& counts) {
  Table t{{"node", std::string(value_column)}, {}};
  for (const auto& [label, v] : counts) t.rows.push_back({label.str(), std::to_string(v)});
  return t;
}

Table census_table(const std::map<NodeLabel, RoleCounts>& census) {
  Table t{{"node"}, {}};
  for (BrokerRole r : kBrokerRoles) t.header.emplace_back(to_string(r));
  t.header.push_back("total");
  for (const auto& [label, counts] : census) {
    std::vector<std::string> row{label.str()};
    for (BrokerRole r : kBrokerRoles) row.push_back(std::to_string(counts[r]));
    row.push_back(std::to_string(counts.total()));
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table dyad_table(const DyadCensus& c) {
  return {{"mutual", "asymmetric", "null", "total"},
          {{std::to_string(c.mutual), std::to_string(c.asymmetric), std::to_string(c.null),
            std::to_string(c.total())}}};
}

Table rank_table(const std::map<NodeLabel, RankTally>& tallies) {
  Table t{{"node", "mutual", "received_asymmetric", "sent_asymmetric"}, {}};
  for (const auto& [label, r] : tallies) {
    t.rows.push_back({label.str(), std::to_string(r.mutual_ties), std::to_string(r.received_asymmetric),
                      std::to_string(r.sent_asymmetric)});
  }
  return t;
}

Table replay_table(std::span<const ReplayOutcome> outcomes) {
  Table t{{"step", "model", "code", "nodes", "edges", "components", "errata"}, {}};
  for (const ReplayOutcome& o : outcomes) {
    std::string errata;
    for (const std::string& id : o.errata) errata += (errata.empty() ? "" : ";") + id;
    if (errata.empty()) errata = "-";
    t.rows.push_back({o.step, std::to_string(o.model_id), dynamics_model(o.model_id).code(), std::to_string(o.nodes),
                      std::to_string(o.edges), std::to_string(o.components), errata});
  }
  return t;
}

std::string write_report(const Table& t) { return render(t, TableFormat::delimited); }

}  // namespace netdyn
