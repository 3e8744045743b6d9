#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "netdyn/dynamics.hpp"
#include "netdyn/generators.hpp"
#include "netdyn/graph.hpp"

namespace netdyn {

// Network files (Pajek style, strict grammar, every line ends with '\n'):
//
//   *Vertices <n>
//   <i> "<label>"                       i = 1..n, ascending, natural label order
//   *Edges[ signed][ weighted]          "*Arcs" for directed graphs
//   <i> <j>[ <value>]                   sorted, one line per edge
//
// <value> is present iff the header carries a flag. It is sign * weight,
// with a missing factor read as 1, so a signed unweighted graph writes +-1
// and a negative value is a negative sign. Counts are decimal without
// leading zeros; weights use the shortest representation that reads back
// exactly.

std::string write_network(const Graph& g);
/// Throws ParseError with the offending line number.
Graph read_network(std::string_view text);

// Event logs: one event per line, four tab-separated fields
//
//   <sequence>\t<kind>\t<payload>\t<note>
//
// kind is add_node | remove_node | add_link | remove_link; payload is a label
// for node events and "<source>,<target>" for link events. The note may be
// empty; backslash, tab, newline and carriage return in it are written as
// \\ \t \n \r. Sequences must strictly increase. An empty log is an empty file.

std::string write_event_log(std::span<const MutationEvent> log);
std::vector<MutationEvent> read_event_log(std::string_view text);

/// "<source> <target>" per line, isolated nodes as a single label. Lines
/// starting with '#' are ignored on read.
std::string write_edge_list(const Graph& g);
Graph read_edge_list(std::string_view text, bool directed);

/// Header row of labels, then one row per node: label followed by 0/1 cells.
std::string write_adjacency_csv(const Graph& g);

/// Graphviz DOT with nodes and edges only; signs and weights become labels.
std::string write_dot(const Graph& g);

/// JSON object with keys "kind", "n", "k", "p", "m_per_node", "seed";
/// missing keys keep their defaults. Throws ParseError (line 1) on malformed
/// input.
GeneratorSpec read_generator_spec(std::string_view json);
std::string write_generator_spec(const GeneratorSpec& spec);

}  // namespace netdyn
