#pragma once

// Text interchange for edge-colored tournaments ("ect" format).
//
//   ect 1 <n>
//   <from> <to> <color>     (one line per edge, any order)
//
// `#` starts a comment (whole line), blank lines are ignored, every edge of
// the complete graph must appear exactly once, colors are positive integers.
// Serialization always emits edges in pair order with LF line endings, so
// equal instances serialize to equal bytes.

#include <cctype>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "flashbow/core.hpp"

namespace flashbow {

class ParseError : public Error {
 public:
  enum class Kind {
    MalformedHeader,
    MalformedLine,
    VertexOutOfRange,
    SelfLoop,
    NonPositiveColor,
    DuplicateEdge,
    BothOrientations,
    MissingEdges,
  };

  ParseError(Kind kind, int line, const std::string& msg)
      : Error("ect parse error at line " + std::to_string(line) + ": " + msg),
        kind_(kind),
        line_(line) {}

  Kind kind() const { return kind_; }
  int line() const { return line_; }

 private:
  Kind kind_;
  int line_;
};

namespace detail {

inline bool significant_line(const std::string& line) {
  for (char ch : line) {
    if (ch == '#') return false;
    if (!std::isspace(static_cast<unsigned char>(ch))) return true;
  }
  return false;
}

inline std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == '#') break;
    if (std::isspace(static_cast<unsigned char>(ch))) {
      if (!cur.empty()) out.push_back(std::move(cur)), cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

inline bool parse_int(const std::string& tok, long long& out) {
  if (tok.empty()) return false;
  std::size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
  if (i == tok.size()) return false;
  for (std::size_t j = i; j < tok.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(tok[j]))) return false;
  try {
    out = std::stoll(tok);
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

}  // namespace detail

inline ColoredTournament parse_ect(const std::string& text) {
  using Kind = ParseError::Kind;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;

  // Header: first significant line must read "ect 1 <n>".
  int n = -1;
  int header_line = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!detail::significant_line(line)) continue;
    auto toks = detail::tokens_of(line);
    long long ver = 0, order = 0;
    if (toks.size() != 3 || toks[0] != "ect" || !detail::parse_int(toks[1], ver) ||
        !detail::parse_int(toks[2], order) || ver != 1)
      throw ParseError(Kind::MalformedHeader, lineno, "expected header 'ect 1 <n>'");
    if (order < 1 || order > 1'000'000)
      throw ParseError(Kind::MalformedHeader, lineno, "order out of range");
    n = static_cast<int>(order);
    header_line = lineno;
    break;
  }
  if (n < 0) throw ParseError(Kind::MalformedHeader, lineno, "missing header");
  (void)header_line;

  const std::size_t pairs = pair_count(n);
  std::vector<char> seen(pairs, 0);  // 0 unseen, 1 low->high, 2 high->low
  std::vector<Color> colors(pairs, 0);
  Tournament t(n);
  std::size_t edges = 0;

  while (std::getline(in, line)) {
    ++lineno;
    if (!detail::significant_line(line)) continue;
    auto toks = detail::tokens_of(line);
    long long u = 0, v = 0, c = 0;
    if (toks.size() != 3 || !detail::parse_int(toks[0], u) ||
        !detail::parse_int(toks[1], v) || !detail::parse_int(toks[2], c))
      throw ParseError(Kind::MalformedLine, lineno, "expected '<from> <to> <color>'");
    if (u < 1 || u > n || v < 1 || v > n)
      throw ParseError(Kind::VertexOutOfRange, lineno, "vertex out of range");
    if (u == v) throw ParseError(Kind::SelfLoop, lineno, "self-loops not allowed");
    if (c < 1) throw ParseError(Kind::NonPositiveColor, lineno, "colors are positive");
    if (c > 0xffffffffLL)
      throw ParseError(Kind::MalformedLine, lineno, "color exceeds 32 bits");

    const std::size_t pi = pair_index(static_cast<Vertex>(u), static_cast<Vertex>(v));
    const char dir = (u < v) ? 1 : 2;
    if (seen[pi] == dir)
      throw ParseError(Kind::DuplicateEdge, lineno, "edge listed twice");
    if (seen[pi] != 0)
      throw ParseError(Kind::BothOrientations, lineno,
                       "both orientations of a pair listed");
    seen[pi] = dir;
    colors[pi] = static_cast<Color>(c);
    t.orient(static_cast<Vertex>(u), static_cast<Vertex>(v));
    ++edges;
  }

  if (edges != pairs)
    throw ParseError(Kind::MissingEdges, lineno,
                     "expected " + std::to_string(pairs) + " edges, got " +
                         std::to_string(edges));
  return ColoredTournament(std::move(t), EdgeColoring(n, std::move(colors)));
}

inline std::string serialize_ect(const ColoredTournament& ct) {
  std::ostringstream out;
  out << "ect 1 " << ct.size() << "\n";
  ct.for_each_edge([&](Vertex u, Vertex v, Color c) {
    out << u << " " << v << " " << c << "\n";
  });
  return out.str();
}

inline ColoredTournament read_ect_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ect(buf.str());
}

inline void write_ect_file(const ColoredTournament& ct, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open file for writing: " + path);
  out << serialize_ect(ct);
  if (!out) throw Error("write failed: " + path);
}

// Compact JSON mirror of the ect payload (export only).
inline std::string to_json(const ColoredTournament& ct) {
  std::ostringstream out;
  out << "{\"format\":\"ect\",\"version\":1,\"n\":" << ct.size() << ",\"edges\":[";
  bool first = true;
  ct.for_each_edge([&](Vertex u, Vertex v, Color c) {
    if (!first) out << ",";
    first = false;
    out << "{\"from\":" << u << ",\"to\":" << v << ",\"color\":" << c << "}";
  });
  out << "]}\n";
  return out.str();
}

}  // namespace flashbow
