#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fcc/fcc.hpp"
#include "fcc/report.hpp"

namespace fs = std::filesystem;
using fcc::report::Json;

namespace {

// exit codes
constexpr int kSplit = 0;
constexpr int kRankOne = 1;
constexpr int kInconclusive = 2;
constexpr int kUsage = 64;
constexpr int kDomain = 65;
constexpr int kInternal = 70;

struct RunConfig {
  std::string input;
  std::string out;
  std::string folding_file;
  int color = 0;
  bool dim3 = false;
  bool general = false;
  bool extension = false;
  unsigned jobs = 1;
  std::size_t length_cap = 0;
  std::size_t node_budget = 2000000;
  std::size_t davis_cap = 16;
  fcc::VertexId from = 0;
  std::vector<int> colors;
  std::vector<fcc::VertexId> strict;
  std::string spec;
};

void write_text(const fs::path& p, const std::string& text) {
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  if (!out) throw fcc::Error(fcc::ErrorKind::PreconditionFailed, "cannot write " + p.string());
  out << text;
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

fcc::CubicalComplex load_input(const std::string& path) { return fcc::load_complex(fcc::read_file(path)); }

std::optional<fcc::Folding> load_folding(const RunConfig& cfg, const fcc::CubicalComplex& c) {
  if (cfg.folding_file.empty()) return std::nullopt;
  return fcc::parse_folding(fcc::read_file(cfg.folding_file), c);
}

fcc::EdgeColoring coloring_for(const RunConfig& cfg, const fcc::CubicalComplex& c) {
  if (auto f = load_folding(cfg, c)) {
    auto problem = fcc::verify_folding(c, *f);
    if (!problem.empty()) throw fcc::Error(fcc::ErrorKind::NotFCC, "supplied folding rejected: " + problem);
    return fcc::coloring_from(*f);
  }
  return fcc::coloring_from(fcc::require_fcc(c));
}

void check_color(int color, const fcc::EdgeColoring& coloring) {
  if (color < 1 || static_cast<std::size_t>(color) > coloring.colors) {
    throw fcc::Error(fcc::ErrorKind::BadColorSet,
                     "color " + std::to_string(color) + " outside 1.." + std::to_string(coloring.colors));
  }
}

int cmd_validate(const RunConfig& cfg) {
  auto c = load_input(cfg.input);
  auto f = load_folding(cfg, c);
  auto r = fcc::validate_fcc(c, f ? &*f : nullptr);
  print(fcc::report::fcc(r));
  return r.is_fcc ? 0 : 1;
}

int cmd_fold(const RunConfig& cfg) {
  auto c = load_input(cfg.input);
  auto result = fcc::find_folding(c);
  if (auto* nf = std::get_if<fcc::NotFoldable>(&result)) {
    print(fcc::report::not_foldable(*nf));
    return 1;
  }
  const auto text = fcc::write_folding(std::get<fcc::Folding>(result));
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    write_text(cfg.out, text);
    print(fcc::report::folding(std::get<fcc::Folding>(result)));
  }
  return 0;
}

int cmd_decompose(const RunConfig& cfg) {
  auto c = load_input(cfg.input);
  auto coloring = coloring_for(cfg, c);
  check_color(cfg.color, coloring);
  auto g = fcc::graph_of_spaces(c, coloring, cfg.color);
  Json j = fcc::report::graph_of_spaces(g);
  const auto t = fcc::all_colors(coloring.colors) & ~fcc::color_bit(cfg.color);
  auto xt = fcc::subcomplex_XT(c, coloring, t);
  auto h = fcc::hyperplane_complex(c, coloring, cfg.color);
  Json counts = Json::array();
  for (std::size_t k = 0; k <= c.dimension(); ++k) {
    const std::size_t in_xt = k <= xt.induced.complex.dimension() ? xt.induced.complex.count(k) : 0;
    const std::size_t in_h = k >= 1 && k - 1 <= h.complex.dimension() ? h.complex.count(k - 1) : 0;
    counts.push_back({{"k", k}, {"X", c.count(k)}, {"X_T", in_xt}, {"H", in_h}});
  }
  j["cube_counts"] = counts;
  if (!cfg.out.empty()) {
    const fs::path dir(cfg.out);
    for (std::size_t s = 0; s < g.vertex_spaces.size(); ++s) {
      write_text(dir / ("vertex_space_" + std::to_string(s) + ".cc"), fcc::write_complex(g.vertex_spaces[s].complex));
    }
    for (std::size_t s = 0; s < g.edge_spaces.size(); ++s) {
      write_text(dir / ("edge_space_" + std::to_string(s) + ".cc"),
                 fcc::write_complex(g.edge_spaces[s].piece.complex));
    }
    write_text(dir / "graph_of_spaces.json", j.dump(2) + "\n");
  }
  print(j);
  return 0;
}

int cmd_hyperplanes(const RunConfig& cfg) {
  auto c = load_input(cfg.input);
  auto coloring = coloring_for(cfg, c);
  check_color(cfg.color, coloring);
  auto hs = fcc::hyperplanes(c, coloring, cfg.color);
  Json list = Json::array();
  for (std::size_t i = 0; i < hs.size(); ++i) {
    Json j = fcc::report::complex_summary(hs[i].piece.complex);
    j["carrier_edges"] = hs[i].edge_of;
    list.push_back(j);
    if (!cfg.out.empty()) {
      write_text(fs::path(cfg.out) / ("hyperplane_" + std::to_string(i) + ".cc"),
                 fcc::write_complex(hs[i].piece.complex));
    }
  }
  print({{"color", cfg.color}, {"count", hs.size()}, {"hyperplanes", list}});
  return 0;
}

int cmd_rank(const RunConfig& cfg) {
  auto c = load_input(cfg.input);
  auto folding = load_folding(cfg, c);
  fcc::RankOptions options;
  options.jobs = cfg.jobs;
  options.length_cap = cfg.length_cap;
  options.node_budget = cfg.node_budget;
  options.folding = folding ? &*folding : nullptr;
  const bool general = cfg.general || (!cfg.dim3 && c.dimension() != 3);
  auto r = general ? fcc::detect_rank_general(c, options) : fcc::detect_rank3(c, options);
  print(fcc::report::rank(c, r));
  if (const auto* w = std::get_if<fcc::RankOneWitness>(&r.verdict)) {
    if (!cfg.out.empty()) write_text(cfg.out, fcc::write_path(c, w->path));
    return kRankOne;
  }
  return std::holds_alternative<fcc::SplitWitness>(r.verdict) ? kSplit : kInconclusive;
}

int cmd_geodesic(const RunConfig& cfg) {
  auto c = load_input(cfg.input);
  auto coloring = coloring_for(cfg, c);
  fcc::EdgePath p;
  if (!cfg.strict.empty()) {
    if (cfg.strict.size() != 2) throw fcc::Error(fcc::ErrorKind::PreconditionFailed, "--strict takes two neighbours");
    auto e1 = c.edge_between(cfg.from, cfg.strict[0]);
    auto e2 = c.edge_between(cfg.from, cfg.strict[1]);
    if (!e1 || !e2) throw fcc::Error(fcc::ErrorKind::PreconditionFailed, "--strict vertices must be neighbours of --from");
    p = fcc::build_strict_pi_geodesic(c, coloring, cfg.from, fcc::leaving(c, *e1, cfg.from),
                                      fcc::leaving(c, *e2, cfg.from));
  } else {
    std::vector<int> t = cfg.colors;
    if (t.empty()) {
      for (int i = 1; i <= static_cast<int>(coloring.colors); ++i) t.push_back(i);
    }
    p = fcc::build_all_color_geodesic(c, coloring, cfg.from, t);
  }
  Json j = fcc::report::path(c, p);
  j["colors"] = fcc::report::color_list(fcc::path_colors(coloring, p));
  j["rank_one_certificate"] = fcc::rank_one_certificate(c, coloring, p);
  if (!cfg.out.empty()) write_text(cfg.out, fcc::write_path(c, p));
  print(j);
  return 0;
}

fcc::GenerateOptions generate_options(const RunConfig& cfg) {
  fcc::GenerateOptions g;
  g.allow_dimension_one = cfg.extension;
  g.davis_cap = cfg.davis_cap;
  return g;
}

int cmd_generate(const RunConfig& cfg) {
  const auto text = fcc::generated_text(fcc::generate(cfg.spec, generate_options(cfg)), cfg.spec);
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    write_text(cfg.out, text);
  }
  return 0;
}

int cmd_info(const RunConfig& cfg) {
  auto c = load_input(cfg.input);
  Json j = fcc::report::complex_summary(c);
  std::size_t lo = c.vertex_count() ? c.degree(0) : 0;
  std::size_t hi = 0;
  for (fcc::VertexId v = 0; v < c.vertex_count(); ++v) {
    lo = std::min(lo, c.degree(v));
    hi = std::max(hi, c.degree(v));
  }
  j["min_degree"] = lo;
  j["max_degree"] = hi;
  j["parallel_classes"] = fcc::parallel_classes(c).class_count;
  j["connected"] = fcc::is_connected(c);
  print(j);
  return 0;
}

// One generator spec per line ('#' comments allowed). Each complex is built,
// validated and rank-analysed; results come back in input order.
Json batch_one(const std::string& spec, const RunConfig& cfg) {
  Json j;
  j["spec"] = spec;
  try {
    auto g = fcc::generate(spec, generate_options(cfg));
    const auto* c = std::get_if<fcc::CubicalComplex>(&g);
    if (!c) {
      j["error"] = "not a cubical complex";
      return j;
    }
    j["complex"] = fcc::report::complex_summary(*c);
    auto v = fcc::validate_fcc(*c);
    j["is_fcc"] = v.is_fcc;
    if (!v.is_fcc) return j;
    fcc::RankOptions options;
    options.covering_table = false;
    options.length_cap = cfg.length_cap;
    options.node_budget = cfg.node_budget;
    auto r = c->dimension() == 3 ? fcc::detect_rank3(*c, options) : fcc::detect_rank_general(*c, options);
    Json full = fcc::report::rank(*c, r);
    j["verdict"] = full["verdict"];
    if (full.contains("bipartitions")) j["bipartitions"] = full["bipartitions"];
    if (full.contains("colors")) j["colors"] = full["colors"];
    if (full.contains("step")) j["step"] = full["step"];
    if (full.contains("reason")) j["reason"] = full["reason"];
  } catch (const fcc::Error& e) {
    j["error"] = e.what();
  }
  return j;
}

int cmd_batch(const RunConfig& cfg) {
  std::istringstream in(fcc::read_file(cfg.input));
  std::vector<std::string> specs;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    specs.push_back(line.substr(first, line.find_last_not_of(" \t") - first + 1));
  }
  std::vector<Json> results(specs.size());
  const unsigned jobs = std::max(1u, cfg.jobs);
  for (std::size_t start = 0; start < specs.size(); start += jobs) {
    std::vector<std::future<Json>> tasks;
    for (std::size_t i = start; i < std::min(specs.size(), start + jobs); ++i) {
      tasks.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred, batch_one, specs[i], cfg));
    }
    for (std::size_t i = 0; i < tasks.size(); ++i) results[start + i] = tasks[i].get();
  }
  std::string lines;
  for (const auto& r : results) lines += r.dump() + "\n";
  if (cfg.out.empty()) {
    std::cout << lines;
  } else {
    write_text(cfg.out, lines);
  }
  return 0;
}

int exit_code_for(const fcc::Error& e) {
  switch (e.kind()) {
    case fcc::ErrorKind::ParseError:
    case fcc::ErrorKind::BadSpec:
      return kUsage;
    default:
      return kDomain;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Folded cubical complexes: validation, folding, decomposition and rank analysis"};
  app.require_subcommand(1);
  app.fallthrough();  // --jobs may follow the subcommand
  RunConfig cfg;
  app.add_option("--jobs", cfg.jobs, "worker threads for per-vertex scans and batch runs")
      ->check(CLI::PositiveNumber);

  auto with_input = [&](CLI::App* sub) { sub->add_option("input", cfg.input, "cubical complex file")->required(); };
  auto with_folding = [&](CLI::App* sub) {
    sub->add_option("--folding", cfg.folding_file, "use this folding instead of searching");
  };

  auto* validate = app.add_subcommand("validate", "check the FCC axioms (exit 0 iff FCC)");
  with_input(validate);
  with_folding(validate);

  auto* fold = app.add_subcommand("fold", "find a folding onto the n-cube");
  with_input(fold);
  fold->add_option("--out", cfg.out, "write the folding file here");

  auto* decompose = app.add_subcommand("decompose", "graph of spaces for one color");
  with_input(decompose);
  with_folding(decompose);
  decompose->add_option("--color", cfg.color, "color i")->required();
  decompose->add_option("--out", cfg.out, "directory for space complexes");

  auto* hyper = app.add_subcommand("hyperplanes", "hyperplanes of one color");
  with_input(hyper);
  with_folding(hyper);
  hyper->add_option("--color", cfg.color, "color i")->required();
  hyper->add_option("--out", cfg.out, "directory for hyperplane complexes");

  auto* rank = app.add_subcommand("rank", "splitting / rank one analysis (exit 0 split, 1 rank one, 2 inconclusive)");
  with_input(rank);
  with_folding(rank);
  auto* dim3 = rank->add_flag("--dim3", cfg.dim3, "dimension 3 decision procedure");
  rank->add_flag("--general", cfg.general, "any dimension, with bounded search")->excludes(dim3);
  rank->add_option("--length-cap", cfg.length_cap, "search length cap (0: 4 * n * diameter)");
  rank->add_option("--node-budget", cfg.node_budget, "search node budget")->check(CLI::PositiveNumber);
  rank->add_option("--out", cfg.out, "write the witness path here");

  auto* geodesic = app.add_subcommand("geodesic", "build a closed local geodesic at a vertex");
  with_input(geodesic);
  with_folding(geodesic);
  geodesic->add_option("--from", cfg.from, "base vertex")->required();
  auto* colors = geodesic->add_option("--colors", cfg.colors, "color class to cover (default: all)")->delimiter(',');
  geodesic->add_option("--strict", cfg.strict, "two neighbours of the base at angle more than pi")
      ->delimiter(',')
      ->excludes(colors);
  geodesic->add_option("--out", cfg.out, "write the path file here");

  auto* generate = app.add_subcommand("generate", "build a complex from a generator spec");
  generate->add_option("spec", cfg.spec, "e.g. torus:4,4 or davisX:K=hemispherex:n=2,m=1,1,1")->required();
  generate->add_flag("--extension", cfg.extension, "allow hemispherex with n = 1");
  generate->add_option("--davis-cap", cfg.davis_cap, "largest |S| for davisY/davisX");
  generate->add_option("--out", cfg.out, "output file");

  auto* info = app.add_subcommand("info", "cube counts and degrees");
  with_input(info);

  auto* batch = app.add_subcommand("batch", "generate, validate and analyse a list of specs");
  batch->add_option("input", cfg.input, "file with one spec per line")->required();
  batch->add_flag("--extension", cfg.extension, "allow hemispherex with n = 1");
  batch->add_option("--length-cap", cfg.length_cap, "search length cap");
  batch->add_option("--out", cfg.out, "write JSON lines here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*validate) return cmd_validate(cfg);
    if (*fold) return cmd_fold(cfg);
    if (*decompose) return cmd_decompose(cfg);
    if (*hyper) return cmd_hyperplanes(cfg);
    if (*rank) return cmd_rank(cfg);
    if (*geodesic) return cmd_geodesic(cfg);
    if (*generate) return cmd_generate(cfg);
    if (*info) return cmd_info(cfg);
    if (*batch) return cmd_batch(cfg);
  } catch (const fcc::Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
