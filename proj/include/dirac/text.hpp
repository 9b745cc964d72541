#ifndef DIRAC_TEXT_HPP
#define DIRAC_TEXT_HPP

#include <charconv>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace dirac::text {

/// One meaningful input line: comments and blank lines are dropped, the
/// original 1-based line number is kept for error messages.
struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

inline std::vector<Line> tokenize(std::string_view input) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!input.empty()) {
    auto end = input.find('\n');
    std::string_view raw = input.substr(0, end);
    input = end == std::string_view::npos ? std::string_view{} : input.substr(end + 1);
    ++number;

    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') ++i;
      if (i > start) line.tokens.push_back(raw.substr(start, i - start));
    }
    if (line.tokens.empty() || line.tokens.front().front() == '#') continue;
    lines.push_back(std::move(line));
  }
  return lines;
}

inline std::optional<long long> to_int(std::string_view token) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

}  // namespace dirac::text

#endif  // DIRAC_TEXT_HPP
