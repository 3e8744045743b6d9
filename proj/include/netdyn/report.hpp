#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "netdyn/brokerage.hpp"
#include "netdyn/centrality.hpp"
#include "netdyn/cohesion.hpp"
#include "netdyn/dynamics.hpp"
#include "netdyn/prestige.hpp"

namespace netdyn {

/// Rectangular text table; every row has as many cells as the header.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// aligned: space-padded columns for reading. delimited: comma-separated.
enum class TableFormat { aligned, delimited };

/// "table" -> aligned, "delimited" -> delimited.
std::optional<TableFormat> parse_table_format(std::string_view text) noexcept;

std::string render(const Table& t, TableFormat format);

/// Three decimals; "inf" for +infinity.
std::string format_score(double v);

/// One row per node, one column per report named "<measure>.<convention>".
/// All reports must cover the same nodes in the same order (DomainError).
Table centrality_table(std::span<const CentralityReport> reports);

/// Every accepted convention of every measure on `g`, in measure order.
std::vector<CentralityReport> all_centralities(const Graph& g);

Table partition_table(const Partition& p);
/// Columns: set, size, members (space-separated).
Table node_set_table(std::span<const std::vector<NodeLabel>> sets);
/// One line per set, members separated by single spaces.
std::string node_set_lines(std::span<const std::vector<NodeLabel>> sets);
Table edge_table(std::span<const Edge> edges);
Table count_table(std::string_view value_column, const std::map<NodeLabel, std::size_t>& counts);
Table census_table(const std::map<NodeLabel, RoleCounts>& census);
Table dyad_table(const DyadCensus& c);
Table rank_table(const std::map<NodeLabel, RankTally>& tallies);
/// Columns: step, model, code, nodes, edges, components, errata. Errata ids
/// are joined with ';', "-" when none.
Table replay_table(std::span<const ReplayOutcome> outcomes);

/// Delimited rendering, the machine-readable report form.
std::string write_report(const Table& t);

}  // namespace netdyn
