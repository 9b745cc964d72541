#ifndef DIRAC_ACC_FORMAT_HPP
#define DIRAC_ACC_FORMAT_HPP

// .acc text format:
//
//   acc 1
//   alpha <int>
//   lines <int>
//   v <id> <id> ...      (one line per vertex)
//
// Lines starting with '#' are comments. The canonical form lists vertices in
// lexicographic order with single spaces and a trailing newline.

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "dirac/error.hpp"
#include "dirac/incidence.hpp"
#include "dirac/text.hpp"

namespace dirac {

inline IncidenceStructure parse_structure(std::string_view input) {
  using Cause = ParseError::Cause;
  const auto lines = text::tokenize(input);

  auto header = [&lines](std::size_t index, std::string_view keyword,
                         long long min_value) -> long long {
    if (index >= lines.size())
      throw ParseError(Cause::UnexpectedEnd, lines.empty() ? 1 : lines.back().number + 1,
                       "missing '" + std::string(keyword) + "' line");
    const auto& line = lines[index];
    if (line.tokens.size() != 2 || line.tokens[0] != keyword)
      throw ParseError(Cause::BadHeader, line.number,
                       "expected '" + std::string(keyword) + " <int>'");
    auto value = text::to_int(line.tokens[1]);
    if (!value || *value < min_value)
      throw ParseError(Cause::BadHeader, line.number,
                       "bad value '" + std::string(line.tokens[1]) + "'");
    return *value;
  };

  if (header(0, "acc", 1) != 1)
    throw ParseError(Cause::BadHeader, lines[0].number, "unsupported format version");
  const auto alpha = header(1, "alpha", 1);
  const auto n = header(2, "lines", 0);

  std::vector<Vertex> vertices;
  for (std::size_t i = 3; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.tokens[0] != "v")
      throw ParseError(Cause::BadToken, line.number,
                       "expected vertex line, got '" + std::string(line.tokens[0]) + "'");
    Vertex v;
    for (std::size_t t = 1; t < line.tokens.size(); ++t) {
      auto id = text::to_int(line.tokens[t]);
      if (!id) throw ParseError(Cause::BadToken, line.number, std::string(line.tokens[t]));
      if (*id < 0 || *id >= n)
        throw ParseError(Cause::IdOutOfRange, line.number, std::to_string(*id));
      if (std::find(v.begin(), v.end(), *id) != v.end())
        throw ParseError(Cause::DuplicateIdInVertex, line.number, std::to_string(*id));
      v.push_back(static_cast<CurveId>(*id));
    }
    if (v.size() < 2)
      throw ParseError(Cause::SmallVertex, line.number,
                       "vertex has " + std::to_string(v.size()) + " id(s)");
    vertices.push_back(std::move(v));
  }
  return IncidenceStructure(static_cast<int>(alpha), static_cast<int>(n),
                            std::move(vertices));
}

inline std::string serialize_structure(const IncidenceStructure& s) {
  std::string out = "acc 1\nalpha " + std::to_string(s.alpha()) + "\nlines " +
                    std::to_string(s.n()) + "\n";
  for (const auto& v : s.vertices()) {
    out += 'v';
    for (CurveId c : v) {
      out += ' ';
      out += std::to_string(c);
    }
    out += '\n';
  }
  return out;
}

}  // namespace dirac

#endif  // DIRAC_ACC_FORMAT_HPP
