#ifndef FCC_IO_HPP
#define FCC_IO_HPP

#include <charconv>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "fcc/cubical.hpp"
#include "fcc/folding.hpp"
#include "fcc/link.hpp"
#include "fcc/simplicial.hpp"

namespace fcc {

/// A closed or open walk along oriented edges starting at `base`.
struct EdgePath {
  VertexId base = 0;
  std::vector<OrientedEdge> steps;
  bool closed = false;

  friend bool operator==(const EdgePath&, const EdgePath&) = default;
};

/// A complex together with the header comments of its file.
struct ComplexDocument {
  CubicalComplex complex;
  std::vector<std::string> comments;  ///< text after '#', in order
};

struct SimplicialDocument {
  SimplicialComplex complex;
  std::vector<std::string> comments;
};

namespace detail {

struct Line {
  std::size_t number = 0;
  std::vector<std::string_view> tokens;
  std::string_view comment;  ///< set for full-line comments
  bool is_comment = false;
};

inline std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const std::size_t end = text.find('\n');
    std::string_view raw = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    Line line;
    line.number = number;
    const std::size_t first = raw.find_first_not_of(" \t");
    if (first != std::string_view::npos && raw[first] == '#') {
      line.is_comment = true;
      line.comment = raw.substr(first + 1);
      out.push_back(line);
      continue;
    }
    raw = raw.substr(0, raw.find('#'));
    std::size_t pos = 0;
    while (pos < raw.size()) {
      pos = raw.find_first_not_of(" \t", pos);
      if (pos == std::string_view::npos) break;
      std::size_t stop = raw.find_first_of(" \t", pos);
      if (stop == std::string_view::npos) stop = raw.size();
      line.tokens.push_back(raw.substr(pos, stop - pos));
      pos = stop;
    }
    if (!line.tokens.empty()) out.push_back(line);
  }
  return out;
}

[[noreturn]] inline void parse_fail(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what);
}

inline std::uint64_t parse_uint(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    parse_fail(line, "expected a nonnegative integer, got '" + std::string(token) + "'");
  }
  return value;
}

struct Header {
  std::size_t vertex_count = 0;
  std::size_t body_start = 0;  // index into lines
  std::vector<std::string> comments;
};

inline Header parse_header(const std::vector<Line>& lines, std::string_view magic) {
  Header h;
  std::size_t i = 0;
  while (i < lines.size() && lines[i].is_comment) ++i;
  std::string expected(magic);
  if (i >= lines.size() || lines[i].tokens.size() != 2 ||
      std::string(lines[i].tokens[0]) + " " + std::string(lines[i].tokens[1]) != expected) {
    parse_fail(i < lines.size() ? lines[i].number : 1, "expected header '" + expected + "'");
  }
  ++i;
  while (i < lines.size() && lines[i].is_comment) ++i;
  if (i >= lines.size() || lines[i].tokens.size() != 2 || lines[i].tokens[0] != "vertices") {
    parse_fail(i < lines.size() ? lines[i].number : 2, "expected 'vertices <N>'");
  }
  h.vertex_count = parse_uint(lines[i].tokens[1], lines[i].number);
  if (h.vertex_count > (std::uint64_t{1} << 31)) parse_fail(lines[i].number, "vertex count too large");
  ++i;
  while (i < lines.size() && lines[i].is_comment) {
    h.comments.emplace_back(lines[i].comment);
    ++i;
  }
  h.body_start = i;
  return h;
}

}  // namespace detail

/// Parses the cubical complex text format (maximal cubes; the loader closes
/// under faces). Throws ParseError or NotAComplex.
inline ComplexDocument parse_complex_document(std::string_view text) {
  const auto lines = detail::split_lines(text);
  auto header = detail::parse_header(lines, "cubical-complex v1");
  std::vector<Cube> cubes;
  for (std::size_t i = header.body_start; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.is_comment) continue;
    if (line.tokens[0] != "cube" || line.tokens.size() < 2) detail::parse_fail(line.number, "expected 'cube <k> ...'");
    const auto k = detail::parse_uint(line.tokens[1], line.number);
    if (k > 20) detail::parse_fail(line.number, "cube dimension too large");
    if (line.tokens.size() != 2 + (std::size_t{1} << k)) {
      detail::parse_fail(line.number, "a " + std::to_string(k) + "-cube needs " + std::to_string(std::size_t{1} << k) +
                                          " corners");
    }
    Cube cube{k, {}};
    for (std::size_t t = 2; t < line.tokens.size(); ++t) {
      const auto v = detail::parse_uint(line.tokens[t], line.number);
      if (v >= header.vertex_count) detail::parse_fail(line.number, "vertex " + std::to_string(v) + " out of range");
      cube.corners.push_back(static_cast<VertexId>(v));
    }
    cubes.push_back(std::move(cube));
  }
  return {CubicalComplex::from_cubes(header.vertex_count, cubes), std::move(header.comments)};
}

inline CubicalComplex load_complex(std::string_view text) { return parse_complex_document(text).complex; }

inline std::string write_complex(const CubicalComplex& c, const std::vector<std::string>& comments = {}) {
  std::string out = "cubical-complex v1\nvertices " + std::to_string(c.vertex_count()) + "\n";
  for (const auto& line : comments) out += "#" + line + "\n";
  for (const auto& cube : c.maximal_cubes()) {
    out += "cube " + std::to_string(cube.dim);
    for (VertexId v : cube.corners) out += " " + std::to_string(v);
    out += "\n";
  }
  return out;
}

inline SimplicialDocument parse_simplicial_document(std::string_view text) {
  const auto lines = detail::split_lines(text);
  auto header = detail::parse_header(lines, "simplicial-complex v1");
  std::vector<Simplex> simplices;
  for (std::size_t i = header.body_start; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.is_comment) continue;
    if (line.tokens[0] != "simplex" || line.tokens.size() < 2) {
      detail::parse_fail(line.number, "expected 'simplex <k> ...'");
    }
    const auto k = detail::parse_uint(line.tokens[1], line.number);
    if (line.tokens.size() != 3 + k) {
      detail::parse_fail(line.number, "a " + std::to_string(k) + "-simplex needs " + std::to_string(k + 1) + " vertices");
    }
    Simplex s;
    for (std::size_t t = 2; t < line.tokens.size(); ++t) {
      const auto v = detail::parse_uint(line.tokens[t], line.number);
      if (v >= header.vertex_count) detail::parse_fail(line.number, "vertex " + std::to_string(v) + " out of range");
      s.push_back(static_cast<std::uint32_t>(v));
    }
    simplices.push_back(std::move(s));
  }
  return {SimplicialComplex::from_simplices(header.vertex_count, simplices), std::move(header.comments)};
}

inline SimplicialComplex load_simplicial(std::string_view text) { return parse_simplicial_document(text).complex; }

inline std::string write_simplicial(const SimplicialComplex& k, const std::vector<std::string>& comments = {}) {
  std::string out = "simplicial-complex v1\nvertices " + std::to_string(k.vertex_count()) + "\n";
  for (const auto& line : comments) out += "#" + line + "\n";
  for (const auto& s : k.maximal_simplices()) {
    out += "simplex " + std::to_string(s.size() - 1);
    for (auto v : s) out += " " + std::to_string(v);
    out += "\n";
  }
  return out;
}

/// `folding v1`, one `class <id> direction <i>` line per parallel class, one
/// `vertex <v> corner <bits>` line per vertex (first character = coordinate 1).
inline std::string write_folding(const Folding& f) {
  std::string out = "folding v1\n";
  for (std::size_t cls = 0; cls < f.direction_of.size(); ++cls) {
    out += "class " + std::to_string(cls) + " direction " + std::to_string(f.direction_of[cls]) + "\n";
  }
  for (VertexId v = 0; v < f.vertex_corner.size(); ++v) {
    out += "vertex " + std::to_string(v) + " corner ";
    for (std::size_t i = 0; i < f.dimension; ++i) out += ((f.vertex_corner[v] >> i) & 1u) ? '1' : '0';
    out += "\n";
  }
  return out;
}

/// Reads a folding of `c`; parallel classes are recomputed from the complex.
inline Folding parse_folding(std::string_view text, const CubicalComplex& c) {
  const auto lines = detail::split_lines(text);
  std::size_t i = 0;
  while (i < lines.size() && lines[i].is_comment) ++i;
  if (i >= lines.size() || lines[i].tokens.size() != 2 || lines[i].tokens[0] != "folding" || lines[i].tokens[1] != "v1") {
    detail::parse_fail(i < lines.size() ? lines[i].number : 1, "expected header 'folding v1'");
  }
  Folding f;
  f.classes = parallel_classes(c);
  f.direction_of.assign(f.classes.class_count, 0);
  f.vertex_corner.assign(c.vertex_count(), 0);
  std::vector<char> seen_vertex(c.vertex_count(), 0);
  std::optional<std::size_t> width;
  for (++i; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.is_comment) continue;
    if (line.tokens.size() == 4 && line.tokens[0] == "class" && line.tokens[2] == "direction") {
      const auto cls = detail::parse_uint(line.tokens[1], line.number);
      if (cls >= f.classes.class_count) detail::parse_fail(line.number, "unknown class");
      f.direction_of[cls] = static_cast<int>(detail::parse_uint(line.tokens[3], line.number));
    } else if (line.tokens.size() == 4 && line.tokens[0] == "vertex" && line.tokens[2] == "corner") {
      const auto v = detail::parse_uint(line.tokens[1], line.number);
      if (v >= c.vertex_count()) detail::parse_fail(line.number, "unknown vertex");
      const auto bits = line.tokens[3];
      if (bits.size() > 32 || (width && *width != bits.size())) detail::parse_fail(line.number, "bad corner width");
      width = bits.size();
      std::uint32_t corner = 0;
      for (std::size_t b = 0; b < bits.size(); ++b) {
        if (bits[b] != '0' && bits[b] != '1') detail::parse_fail(line.number, "corner must be a bitstring");
        if (bits[b] == '1') corner |= 1u << b;
      }
      f.vertex_corner[v] = corner;
      seen_vertex[v] = 1;
    } else {
      detail::parse_fail(line.number, "unexpected line");
    }
  }
  f.dimension = width.value_or(0);
  if (std::find(seen_vertex.begin(), seen_vertex.end(), 0) != seen_vertex.end()) {
    throw Error(ErrorKind::ParseError, "folding misses a vertex");
  }
  return f;
}

/// `path v1`, `base <v>`, one `edge <from> <to>` per step, `closed <0|1>`.
inline std::string write_path(const CubicalComplex& c, const EdgePath& p) {
  std::string out = "path v1\nbase " + std::to_string(p.base) + "\n";
  for (const auto& step : p.steps) {
    out += "edge " + std::to_string(tail(c, step)) + " " + std::to_string(head(c, step)) + "\n";
  }
  out += std::string("closed ") + (p.closed ? "1" : "0") + "\n";
  return out;
}

inline EdgePath parse_path(std::string_view text, const CubicalComplex& c) {
  const auto lines = detail::split_lines(text);
  std::size_t i = 0;
  while (i < lines.size() && lines[i].is_comment) ++i;
  if (i >= lines.size() || lines[i].tokens.size() != 2 || lines[i].tokens[0] != "path" || lines[i].tokens[1] != "v1") {
    detail::parse_fail(i < lines.size() ? lines[i].number : 1, "expected header 'path v1'");
  }
  EdgePath p;
  bool have_base = false;
  bool have_closed = false;
  for (++i; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.is_comment) continue;
    if (line.tokens.size() == 2 && line.tokens[0] == "base") {
      p.base = static_cast<VertexId>(detail::parse_uint(line.tokens[1], line.number));
      if (p.base >= c.vertex_count()) detail::parse_fail(line.number, "unknown base vertex");
      have_base = true;
    } else if (line.tokens.size() == 3 && line.tokens[0] == "edge") {
      const auto a = static_cast<VertexId>(detail::parse_uint(line.tokens[1], line.number));
      const auto b = static_cast<VertexId>(detail::parse_uint(line.tokens[2], line.number));
      auto e = c.edge_between(a, b);
      if (!e) detail::parse_fail(line.number, "no edge between " + std::to_string(a) + " and " + std::to_string(b));
      p.steps.push_back(leaving(c, *e, a));
    } else if (line.tokens.size() == 2 && line.tokens[0] == "closed") {
      p.closed = line.tokens[1] == "1" || line.tokens[1] == "true";
      have_closed = true;
    } else {
      detail::parse_fail(line.number, "unexpected line");
    }
  }
  if (!have_base || !have_closed) throw Error(ErrorKind::ParseError, "path needs 'base' and 'closed' lines");
  return p;
}

}  // namespace fcc

#endif  // FCC_IO_HPP
