#include "netdyn/node_label.hpp"

#include <cctype>

#include "netdyn/error.hpp"

namespace netdyn {
namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

std::string_view digit_run(std::string_view s, std::size_t pos) {
  std::size_t end = pos;
  while (end < s.size() && is_digit(s[end])) ++end;
  return s.substr(pos, end - pos);
}

std::string_view strip_zeros(std::string_view digits) {
  std::size_t i = 0;
  while (i + 1 < digits.size() && digits[i] == '0') ++i;
  return digits.substr(i);
}

}  // namespace

std::strong_ordering natural_compare(std::string_view a, std::string_view b) noexcept {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (is_digit(a[i]) && is_digit(b[j])) {
      const std::string_view ra = digit_run(a, i);
      const std::string_view rb = digit_run(b, j);
      const std::string_view na = strip_zeros(ra);
      const std::string_view nb = strip_zeros(rb);
      if (na.size() != nb.size()) return na.size() <=> nb.size();
      if (auto c = na.compare(nb); c != 0) return c <=> 0;
      i += ra.size();
      j += rb.size();
      continue;
    }
    const auto ca = static_cast<unsigned char>(a[i]);
    const auto cb = static_cast<unsigned char>(b[j]);
    if (ca != cb) return ca <=> cb;
    ++i;
    ++j;
  }
  if ((a.size() - i) != (b.size() - j)) return (a.size() - i) <=> (b.size() - j);
  return a.compare(b) <=> 0;
}

bool NodeLabel::is_valid(std::string_view text) noexcept {
  if (text.empty()) return false;
  for (char ch : text) {
    const auto c = static_cast<unsigned char>(ch);
    if (c <= 0x20 || c == 0x7f || c == '"' || c == ',') return false;
  }
  return true;
}

NodeLabel::NodeLabel(std::string text) : text_(std::move(text)) {
  if (!is_valid(text_)) {
    throw GraphError("invalid node label '" + text_ + "'");
  }
}

std::strong_ordering operator<=>(const NodeLabel& a, const NodeLabel& b) {
  return natural_compare(a.str(), b.str());
}

}  // namespace netdyn
