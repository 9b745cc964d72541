#ifndef DIRAC_WEDGE_FORMAT_HPP
#define DIRAC_WEDGE_FORMAT_HPP

// .wedge text format:
//
//   wedge 1
//   m <int>
//   beam <name> T<rank> B<rank> T<rank> ...
//
// Equal (side, rank) keys in different beams denote the same bounce point.

#include <string>
#include <string_view>

#include "dirac/error.hpp"
#include "dirac/kaleidoscope.hpp"
#include "dirac/text.hpp"

namespace dirac {

inline WedgeSpec parse_wedge(std::string_view input) {
  using Cause = ParseError::Cause;
  const auto lines = text::tokenize(input);
  if (lines.empty()) throw ParseError(Cause::UnexpectedEnd, 1, "empty wedge file");

  const auto& first = lines[0];
  if (first.tokens.size() != 2 || first.tokens[0] != "wedge" || first.tokens[1] != "1")
    throw ParseError(Cause::BadHeader, first.number, "expected 'wedge 1'");
  if (lines.size() < 2) throw ParseError(Cause::UnexpectedEnd, first.number + 1, "missing 'm' line");
  const auto& second = lines[1];
  if (second.tokens.size() != 2 || second.tokens[0] != "m")
    throw ParseError(Cause::BadHeader, second.number, "expected 'm <int>'");
  auto m = text::to_int(second.tokens[1]);
  if (!m || *m < 2 || *m > 1'000'000)
    throw ParseError(Cause::BadHeader, second.number, "m must be an integer >= 2");

  WedgeSpec w;
  w.m = static_cast<int>(*m);
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.tokens[0] != "beam" || line.tokens.size() < 3)
      throw ParseError(Cause::BadToken, line.number, "expected 'beam <name> <events...>'");
    BeamSpec beam{std::string(line.tokens[1]), {}};
    for (const auto& b : w.beams)
      if (b.name == beam.name) throw ParseError(Cause::DuplicateBeam, line.number, beam.name);
    for (std::size_t t = 2; t < line.tokens.size(); ++t) {
      const auto tok = line.tokens[t];
      auto rank = tok.size() >= 2 ? text::to_int(tok.substr(1)) : std::nullopt;
      if ((tok[0] != 'T' && tok[0] != 'B') || !rank || *rank < 1)
        throw ParseError(Cause::BadEvent, line.number, std::string(tok));
      beam.events.push_back({tok[0] == 'T' ? Side::Top : Side::Bottom, *rank});
    }
    w.beams.push_back(std::move(beam));
  }
  return w;
}

inline std::string serialize_wedge(const WedgeSpec& w) {
  std::string out = "wedge 1\nm " + std::to_string(w.m) + "\n";
  for (const auto& beam : w.beams) {
    out += "beam " + beam.name;
    for (const auto& e : beam.events) {
      out += ' ';
      out += side_char(e.side);
      out += std::to_string(e.rank);
    }
    out += '\n';
  }
  return out;
}

}  // namespace dirac

#endif  // DIRAC_WEDGE_FORMAT_HPP
