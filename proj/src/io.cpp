#include "netdyn/io.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <nlohmann/json.hpp>
#include <sstream>

#include "netdyn/error.hpp"

namespace netdyn {
namespace {

/// Splits text into '\n'-terminated lines. A non-empty text must end with a
/// newline; an empty text has no lines.
std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      throw ParseError(lines.size() + 1, "missing newline at end of line");
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = line.find(sep, start);
    if (end == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, end - start));
    start = end + 1;
  }
}

/// Canonical unsigned decimal: digits only, no sign, no leading zeros.
std::optional<std::uint64_t> parse_uint(std::string_view s) {
  if (s.empty() || (s.size() > 1 && s[0] == '0')) return std::nullopt;
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::optional<double> parse_real(std::string_view s) {
  if (s.empty()) return std::nullopt;
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

std::string format_real(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

NodeLabel parse_label(std::size_t line, std::string_view text) {
  if (!NodeLabel::is_valid(text)) throw ParseError(line, "invalid node label '" + std::string(text) + "'");
  return NodeLabel(text);
}

std::string escape_note(std::string_view note) {
  std::string out;
  for (char c : note) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      default: out += c;
    }
  }
  return out;
}

std::string unescape_note(std::size_t line, std::string_view text) {
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '\\') {
      if (text[i] == '\r') throw ParseError(line, "raw carriage return in note");
      out += text[i];
      continue;
    }
    if (++i == text.size()) throw ParseError(line, "dangling backslash in note");
    switch (text[i]) {
      case '\\': out += '\\'; break;
      case 't': out += '\t'; break;
      case 'n': out += '\n'; break;
      case 'r': out += '\r'; break;
      default: throw ParseError(line, std::string("unknown escape \\") + text[i] + " in note");
    }
  }
  return out;
}

}  // namespace

std::string write_network(const Graph& g) {
  std::string out = "*Vertices " + std::to_string(g.node_count()) + "\n";
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    out += std::to_string(i + 1) + " \"" + g.label(i).str() + "\"\n";
  }
  out += g.directed() ? "*Arcs" : "*Edges";
  if (g.is_signed()) out += " signed";
  if (g.is_weighted()) out += " weighted";
  out += '\n';
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    const IndexEdge& e = g.edges()[k];
    out += std::to_string(e.source + 1) + ' ' + std::to_string(e.target + 1);
    if (g.is_signed() || g.is_weighted()) {
      const double w = g.weight(k);
      if (g.is_signed() && std::signbit(w)) {
        throw DomainError("edge " + g.edge_labels(k).source.str() + "-" + g.edge_labels(k).target.str() +
                          " of a signed graph has a negative weight, which the network format cannot encode");
      }
      out += ' ' + format_real(g.sign(k) < 0 ? -w : w);
    }
    out += '\n';
  }
  return out;
}

Graph read_network(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(1, "expected '*Vertices <n>'");
  constexpr std::string_view kVertices = "*Vertices ";
  if (!lines[0].starts_with(kVertices)) throw ParseError(1, "expected '*Vertices <n>'");
  const auto n = parse_uint(lines[0].substr(kVertices.size()));
  if (!n) throw ParseError(1, "invalid vertex count");
  if (lines.size() < *n + 2) {
    throw ParseError(lines.size() + 1, "expected " + std::to_string(*n) + " vertex lines and an edges header");
  }

  std::vector<NodeLabel> labels;
  labels.reserve(*n);
  for (std::size_t i = 1; i <= *n; ++i) {
    const std::string_view line = lines[i];
    const std::size_t space = line.find(' ');
    if (space == std::string_view::npos) throw ParseError(i + 1, "expected '<index> \"<label>\"'");
    const auto index = parse_uint(line.substr(0, space));
    if (!index) throw ParseError(i + 1, "invalid vertex index");
    if (*index < i) throw ParseError(i + 1, "duplicate vertex index " + std::to_string(*index));
    if (*index != i) throw ParseError(i + 1, "expected vertex index " + std::to_string(i));
    const std::string_view quoted = line.substr(space + 1);
    if (quoted.size() < 2 || quoted.front() != '"' || quoted.back() != '"') {
      throw ParseError(i + 1, "vertex label must be double-quoted");
    }
    labels.push_back(parse_label(i + 1, quoted.substr(1, quoted.size() - 2)));
  }

  const std::size_t header_line = *n + 2;
  const std::string_view header = lines[*n + 1];
  bool directed = false;
  std::string_view flags;
  if (header.starts_with("*Edges")) {
    flags = header.substr(6);
  } else if (header.starts_with("*Arcs")) {
    directed = true;
    flags = header.substr(5);
  } else {
    throw ParseError(header_line, "expected '*Edges' or '*Arcs'");
  }
  bool is_signed = false;
  bool is_weighted = false;
  if (flags == " signed") {
    is_signed = true;
  } else if (flags == " weighted") {
    is_weighted = true;
  } else if (flags == " signed weighted") {
    is_signed = is_weighted = true;
  } else if (!flags.empty()) {
    throw ParseError(header_line, "unknown edges header '" + std::string(header) + "'");
  }
  const std::size_t fields = is_signed || is_weighted ? 3 : 2;

  std::vector<EdgeInput> edges;
  for (std::size_t k = *n + 2; k < lines.size(); ++k) {
    const std::size_t line_no = k + 1;
    const auto parts = split(lines[k], ' ');
    if (parts.size() != fields) {
      throw ParseError(line_no, "expected " + std::to_string(fields) + " space-separated fields");
    }
    auto endpoint = [&](std::string_view s) {
      const auto v = parse_uint(s);
      if (!v || *v < 1 || *v > *n) throw ParseError(line_no, "vertex index '" + std::string(s) + "' out of range");
      return labels[*v - 1];
    };
    EdgeInput e{endpoint(parts[0]), endpoint(parts[1])};
    if (fields == 3) {
      const auto value = parse_real(parts[2]);
      if (!value) throw ParseError(line_no, "invalid edge value '" + std::string(parts[2]) + "'");
      if (is_signed) e.sign = std::signbit(*value) ? -1 : 1;
      if (is_weighted) {
        e.weight = is_signed ? std::abs(*value) : *value;
      } else if (std::abs(*value) != 1.0) {
        throw ParseError(line_no, "sign value must be 1 or -1");
      }
    }
    edges.push_back(std::move(e));
  }
  return Graph::build(directed, std::move(labels), std::move(edges));
}

std::string write_event_log(std::span<const MutationEvent> log) {
  std::string out;
  for (const MutationEvent& e : log) {
    out += std::to_string(e.sequence);
    out += '\t';
    out += to_string(e.kind);
    out += '\t';
    out += e.is_node_event() ? e.node().str() : e.link().source.str() + "," + e.link().target.str();
    out += '\t';
    out += escape_note(e.note);
    out += '\n';
  }
  return out;
}

std::vector<MutationEvent> read_event_log(std::string_view text) {
  const auto lines = split_lines(text);
  std::vector<MutationEvent> log;
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const std::size_t line_no = k + 1;
    const auto parts = split(lines[k], '\t');
    if (parts.size() != 4) throw ParseError(line_no, "expected 4 tab-separated fields");
    const auto seq = parse_uint(parts[0]);
    if (!seq) throw ParseError(line_no, "invalid sequence number '" + std::string(parts[0]) + "'");
    if (!log.empty() && *seq <= log.back().sequence) {
      throw ParseError(line_no, "sequence " + std::to_string(*seq) + " does not follow " +
                                    std::to_string(log.back().sequence));
    }
    const auto kind = parse_event_kind(parts[1]);
    if (!kind) throw ParseError(line_no, "unknown event kind '" + std::string(parts[1]) + "'");
    std::string note = unescape_note(line_no, parts[3]);
    if (*kind == EventKind::add_node || *kind == EventKind::remove_node) {
      log.push_back({*seq, *kind, parse_label(line_no, parts[2]), std::move(note)});
    } else {
      const auto ends = split(parts[2], ',');
      if (ends.size() != 2) throw ParseError(line_no, "link payload must be '<source>,<target>'");
      log.push_back({*seq, *kind, Edge{parse_label(line_no, ends[0]), parse_label(line_no, ends[1])}, std::move(note)});
    }
  }
  return log;
}

std::string write_edge_list(const Graph& g) {
  std::string out;
  std::vector<bool> touched(g.node_count(), false);
  for (const IndexEdge& e : g.edges()) {
    touched[e.source] = touched[e.target] = true;
    out += g.label(e.source).str() + ' ' + g.label(e.target).str() + '\n';
  }
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    if (!touched[i]) out += g.label(i).str() + '\n';
  }
  return out;
}

Graph read_edge_list(std::string_view text, bool directed) {
  std::vector<NodeLabel> nodes;
  std::vector<EdgeInput> edges;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  auto note_node = [&](const NodeLabel& l) {
    if (std::find(nodes.begin(), nodes.end(), l) == nodes.end()) nodes.push_back(l);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    if (tokens.size() > 2) throw ParseError(line_no, "expected '<source> <target>' or a single label");
    const NodeLabel a = parse_label(line_no, tokens[0]);
    note_node(a);
    if (tokens.size() == 2) {
      const NodeLabel b = parse_label(line_no, tokens[1]);
      note_node(b);
      edges.push_back({a, b});
    }
  }
  return Graph::build(directed, std::move(nodes), std::move(edges));
}

std::string write_adjacency_csv(const Graph& g) {
  const AdjacencyMatrix a = adjacency_matrix(g);
  std::string out;
  for (const NodeLabel& l : g.nodes()) out += ',' + l.str();
  out += '\n';
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    out += g.label(i).str();
    for (std::size_t j = 0; j < g.node_count(); ++j) out += a(i, j) ? ",1" : ",0";
    out += '\n';
  }
  return out;
}

std::string write_dot(const Graph& g) {
  const char* arrow = g.directed() ? " -> " : " -- ";
  std::string out = g.directed() ? "digraph G {\n" : "graph G {\n";
  for (const NodeLabel& l : g.nodes()) out += "  \"" + l.str() + "\";\n";
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    const Edge e = g.edge_labels(k);
    out += "  \"" + e.source.str() + '"' + arrow + '"' + e.target.str() + '"';
    if (g.is_signed() || g.is_weighted()) {
      std::string label;
      if (g.is_signed()) label += g.sign(k) < 0 ? "-" : "+";
      if (g.is_weighted()) label += format_real(g.weight(k));
      out += " [label=\"" + label + "\"]";
    }
    out += ";\n";
  }
  out += "}\n";
  return out;
}

GeneratorSpec read_generator_spec(std::string_view json) {
  GeneratorSpec spec;
  try {
    const auto doc = nlohmann::json::parse(json);
    if (!doc.is_object()) throw ParseError(1, "generator spec must be a JSON object");
    for (const auto& [key, value] : doc.items()) {
      if (key == "kind") {
        const auto kind = parse_generator_kind(value.get<std::string>());
        if (!kind) throw ParseError(1, "unknown generator kind '" + value.get<std::string>() + "'");
        spec.kind = *kind;
      } else if (key == "n") {
        spec.n = value.get<std::size_t>();
      } else if (key == "k") {
        spec.k = value.get<std::size_t>();
      } else if (key == "p") {
        spec.p = value.get<double>();
      } else if (key == "m_per_node") {
        spec.m_per_node = value.get<std::size_t>();
      } else if (key == "seed") {
        spec.seed = value.get<std::uint64_t>();
      } else {
        throw ParseError(1, "unknown generator spec key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(1, std::string("invalid generator spec: ") + e.what());
  }
  return spec;
}

std::string write_generator_spec(const GeneratorSpec& spec) {
  nlohmann::ordered_json doc;
  doc["kind"] = std::string(to_string(spec.kind));
  doc["n"] = spec.n;
  doc["k"] = spec.k;
  doc["p"] = spec.p;
  doc["m_per_node"] = spec.m_per_node;
  doc["seed"] = spec.seed;
  return doc.dump(2) + "\n";
}

}  // namespace netdyn
