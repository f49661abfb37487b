#ifndef FCC_GENERATE_HPP
#define FCC_GENERATE_HPP

#include <charconv>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fcc/error.hpp"
#include "fcc/generators.hpp"
#include "fcc/io.hpp"

// Generator spec strings:
//   sphere:<n>
//   hemispherex:n=<n>,m=<m1>,...,<m_{n+1}>[,ext]
//   davisY:K=<K>        davisX:K=<K>
//   torus:<k1>,<k2>,...
//   cycle:<k>
//   product:<A>,<B>
//   graph:<path>
// <K> is a simplicial file or a nested spec that yields a simplicial complex
// (the rest of the string). <A>,<B> are cubical files.

namespace fcc {

using Generated = std::variant<CubicalComplex, SimplicialComplex>;

struct GenerateOptions {
  bool allow_dimension_one = false;  ///< hemispherex with n = 1
  std::size_t davis_cap = 16;
};

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read " + p.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

namespace detail {

inline std::vector<std::string> split_on(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

inline std::size_t spec_number(const std::string& token, std::string_view what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
    throw Error(ErrorKind::BadSpec, "expected a number for " + std::string(what) + ", got '" + token + "'");
  }
  return value;
}

}  // namespace detail

inline Generated generate(std::string_view spec, const GenerateOptions& options = {});

inline SimplicialComplex generate_simplicial(std::string_view spec, const GenerateOptions& options = {}) {
  if (spec.find(':') == std::string_view::npos || std::filesystem::exists(std::string(spec))) {
    return load_simplicial(read_file(std::string(spec)));
  }
  auto g = generate(spec, options);
  if (auto* k = std::get_if<SimplicialComplex>(&g)) return std::move(*k);
  throw Error(ErrorKind::BadSpec, "'" + std::string(spec) + "' does not yield a simplicial complex");
}

inline Generated generate(std::string_view spec, const GenerateOptions& options) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw Error(ErrorKind::BadSpec, "missing ':' in '" + std::string(spec) + "'");
  const std::string kind(spec.substr(0, colon));
  const std::string_view rest = spec.substr(colon + 1);
  if (rest.empty()) throw Error(ErrorKind::BadSpec, "empty arguments for " + kind);

  if (kind == "sphere") {
    return standard_sphere(static_cast<int>(detail::spec_number(std::string(rest), "n")));
  }
  if (kind == "hemispherex") {
    HemispherexSpec h;
    h.allow_dimension_one = options.allow_dimension_one;
    bool have_n = false;
    bool in_m = false;
    for (const auto& token : detail::split_on(rest, ',')) {
      if (token == "ext") {
        h.allow_dimension_one = true;
        in_m = false;
      } else if (token.rfind("n=", 0) == 0) {
        h.n = static_cast<int>(detail::spec_number(token.substr(2), "n"));
        have_n = true;
        in_m = false;
      } else if (token.rfind("m=", 0) == 0) {
        h.multiplicities.push_back(static_cast<int>(detail::spec_number(token.substr(2), "m")));
        in_m = true;
      } else if (in_m) {
        h.multiplicities.push_back(static_cast<int>(detail::spec_number(token, "m")));
      } else {
        throw Error(ErrorKind::BadSpec, "unexpected token '" + token + "' in hemispherex spec");
      }
    }
    if (!have_n) throw Error(ErrorKind::BadSpec, "hemispherex needs n=");
    return hemispherex(h).complex;
  }
  if (kind == "davisY" || kind == "davisX") {
    if (rest.substr(0, 2) != "K=") throw Error(ErrorKind::BadSpec, kind + " needs K=<file or spec>");
    auto y = davis_Y(generate_simplicial(rest.substr(2), options), options.davis_cap);
    if (kind == "davisY") return y;
    return subdivide_half(y);
  }
  if (kind == "torus" || kind == "cycle") {
    std::vector<std::size_t> dims;
    for (const auto& token : detail::split_on(rest, ',')) dims.push_back(detail::spec_number(token, "side"));
    if (kind == "cycle" && dims.size() != 1) throw Error(ErrorKind::BadSpec, "cycle takes one length");
    try {
      return torus_grid(dims);
    } catch (const Error& e) {
      throw Error(ErrorKind::BadSpec, e.what());
    }
  }
  if (kind == "product") {
    const auto parts = detail::split_on(rest, ',');
    if (parts.size() != 2) throw Error(ErrorKind::BadSpec, "product takes two files");
    return product(load_complex(read_file(parts[0])), load_complex(read_file(parts[1])));
  }
  if (kind == "graph") {
    return graph_complex(load_simplicial(read_file(std::string(rest))));
  }
  throw Error(ErrorKind::BadSpec, "unknown generator '" + kind + "'");
}

/// File text for a generated object, with the spec string as a header comment.
inline std::string generated_text(const Generated& g, std::string_view spec) {
  const std::vector<std::string> comments{" generated: " + std::string(spec)};
  if (const auto* c = std::get_if<CubicalComplex>(&g)) return write_complex(*c, comments);
  return write_simplicial(std::get<SimplicialComplex>(g), comments);
}

}  // namespace fcc

#endif  // FCC_GENERATE_HPP
