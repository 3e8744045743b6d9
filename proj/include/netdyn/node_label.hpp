#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace netdyn {

/// Node identifier such as "V1".
///
/// Labels are non-empty and consist of printable, non-blank characters other
/// than `"` and `,` (those delimit labels in the text formats). Ordering is
/// natural: digit runs compare by numeric value, so "V2" < "V10".
class NodeLabel {
 public:
  NodeLabel(std::string text);  // NOLINT(google-explicit-constructor)
  NodeLabel(std::string_view text) : NodeLabel(std::string(text)) {}  // NOLINT
  NodeLabel(const char* text) : NodeLabel(std::string(text)) {}       // NOLINT

  const std::string& str() const noexcept { return text_; }

  friend bool operator==(const NodeLabel&, const NodeLabel&) = default;
  friend std::strong_ordering operator<=>(const NodeLabel& a, const NodeLabel& b);

  static bool is_valid(std::string_view text) noexcept;

 private:
  std::string text_;
};

/// Natural ("V2" < "V10") three-way comparison of two strings. Falls back to
/// plain byte comparison when the numeric reading ties ("V01" vs "V1").
std::strong_ordering natural_compare(std::string_view a, std::string_view b) noexcept;

inline std::ostream& operator<<(std::ostream& os, const NodeLabel& label) {
  return os << label.str();
}

/// A pair of labels. Ordered for arcs; for undirected graphs the library
/// reports `source < target`.
struct Edge {
  NodeLabel source;
  NodeLabel target;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Edge& e) {
  return os << e.source << '-' << e.target;
}

}  // namespace netdyn

template <>
struct std::hash<netdyn::NodeLabel> {
  std::size_t operator()(const netdyn::NodeLabel& label) const noexcept {
    return std::hash<std::string>{}(label.str());
  }
};
