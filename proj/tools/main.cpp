#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "csv.hpp"
#include "spherecross/blowup_theory.hpp"
#include "spherecross/crossing.hpp"
#include "spherecross/density.hpp"
#include "spherecross/drawings.hpp"
#include "spherecross/measures.hpp"

namespace sx = spherecross;
using json = nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitDegenerate = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw sx::InvalidSpec("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

/// Provenance header embedded in every output.
json provenance(const std::string& command, const json& options) {
  return json{{"tool", "spherecross"}, {"version", kVersion}, {"command", command},
              {"options", options}};
}

struct ConfigSource {
  std::string config_path;
  std::uint64_t config_seed = 0;
  bool have_seed = false;

  sx::BlowupConfig load(std::uint32_t n, double radius) const {
    if (!config_path.empty()) {
      auto cfg = sx::BlowupConfig::from_json(read_file(config_path));
      if (n > 0) cfg.n = n;
      if (radius > 0.0) cfg.radius = radius;
      cfg.validate();
      return cfg;
    }
    return sx::BlowupConfig::random(have_seed ? config_seed : 1, n > 0 ? n : 1, radius);
  }
};

sx::MeasureSpec parse_measure(const std::string& text, const ConfigSource& cfgsrc, double radius,
                              bool first_part) {
  if (!text.empty() && text.front() == '{') return sx::MeasureSpec::from_json(text);
  if (text == "uniform") return sx::MeasureSpec::uniform();
  if (text == "sym-uniform") return sx::MeasureSpec::symmetrized(sx::MeasureSpec::uniform());
  if (text == "circles4") {
    const auto cfg = cfgsrc.load(1, radius);
    auto [mu1, mu2] = sx::circles4_measures(cfg);
    return first_part ? mu1 : mu2;
  }
  throw sx::InvalidSpec("unknown measure spec: " + text +
                        " (use uniform | sym-uniform | circles4 | inline JSON)");
}

sx::PatternGraph parse_pattern(const std::string& name) {
  if (name == "k2") return sx::PatternGraph::k2();
  if (name == "k3") return sx::PatternGraph::k3();
  if (name == "p3") return sx::PatternGraph::p3();
  throw sx::InvalidSpec("unknown pattern: " + name + " (use k2 | k3 | p3)");
}

// ---------------------------------------------------------------------------

int cmd_draw(const std::string& mu1_text, const std::string& mu2_text, std::size_t n,
             std::uint64_t seed, const ConfigSource& cfgsrc, double radius,
             const std::string& out_path) {
  const auto mu1 = parse_measure(mu1_text, cfgsrc, radius, true);
  const auto mu2 = parse_measure(mu2_text, cfgsrc, radius, false);
  sx::RngStream rng(seed, 0);
  const auto d = sx::random_bipartite_drawing(mu1, mu2, n, rng);

  json j = json::parse(d.to_json());
  j["meta"] = provenance("draw", json{{"mu1", json::parse(mu1.to_json())},
                                      {"mu2", json::parse(mu2.to_json())},
                                      {"n", n},
                                      {"seed", seed}});
  const std::string text = j.dump() + "\n";
  if (out_path.empty()) std::cout << text;
  else write_file(out_path, text);
  return kExitOk;
}

int cmd_crossings(const std::string& in_path, unsigned threads, const std::string& out_path,
                  const std::string& csv_path) {
  const auto d = sx::BipartiteDrawing::from_json(read_file(in_path));
  const auto crossings = sx::count_crossings(d, threads);
  const auto na = static_cast<std::int64_t>(d.partA.size());
  const auto nb = static_cast<std::int64_t>(d.partB.size());
  const double edges = static_cast<double>(d.num_edges());
  const double t_k2 = 2.0 * static_cast<double>(crossings) / (edges * edges);
  const auto z = sx::zarankiewicz(na, nb);

  json j = provenance("crossings", json{{"input", in_path}});
  j["n_a"] = na;
  j["n_b"] = nb;
  j["crossings"] = crossings;
  j["t_k2"] = t_k2;
  j["zarankiewicz"] = z;
  if (z > 0) j["ratio"] = static_cast<double>(crossings) / static_cast<double>(z);

  std::optional<sx::CrossingCensus> census;
  if (d.blowup) {
    census = sx::crossing_census(d, threads);
    json jc{{"total", census->total}, {"C", census->c}, {"B", census->b}, {"N", census->n}};
    json per_bundle = json::array();
    for (auto v : census->per_bundle_b) per_bundle.push_back(v);
    jc["per_bundle_B"] = per_bundle;
    json per_pair = json::array();
    for (int a = 0; a < 16; ++a)
      for (int b = a + 1; b < 16; ++b)
        if (census->per_pair_c[a][b] != 0)
          per_pair.push_back(json{{"bundles", {a, b}}, {"count", census->per_pair_c[a][b]}});
    jc["per_pair_C"] = per_pair;
    json per_node = json::array();
    for (int node = 0; node < 8; ++node) {
      json slots = json::array();
      for (int s = 0; s < 6; ++s) slots.push_back(census->per_node_n[node][s]);
      per_node.push_back(slots);
    }
    jc["per_node_N"] = per_node;
    j["census"] = jc;
  }

  const std::string text = j.dump() + "\n";
  if (out_path.empty()) std::cout << text;
  else write_file(out_path, text);

  if (!csv_path.empty()) {
    sx::cli::CsvAppender csv(csv_path, provenance("crossings", json{{"input", in_path}}).dump(),
                             {"n_a", "n_b", "crossings", "t_k2", "zarankiewicz", "ratio", "C",
                              "B", "N"});
    csv.append({sx::cli::fmt_int(na), sx::cli::fmt_int(nb), sx::cli::fmt_int(crossings),
                sx::cli::fmt_double(t_k2), sx::cli::fmt_int(z),
                z > 0 ? sx::cli::fmt_double(static_cast<double>(crossings) / z) : "",
                census ? sx::cli::fmt_int(census->c) : "",
                census ? sx::cli::fmt_int(census->b) : "",
                census ? sx::cli::fmt_int(census->n) : ""});
  }
  return kExitOk;
}

int cmd_density(const std::string& pattern_name, const std::string& mu1_text,
                const std::string& mu2_text, std::int64_t samples, std::uint64_t seed,
                unsigned threads, const ConfigSource& cfgsrc, double radius,
                const std::string& out_path, const std::string& csv_path) {
  const auto H = parse_pattern(pattern_name);
  const auto mu1 = parse_measure(mu1_text, cfgsrc, radius, true);
  const auto mu2 = parse_measure(mu2_text, cfgsrc, radius, false);
  if (samples < 1) throw sx::InvalidSpec("--samples must be >= 1");
  const auto est = sx::estimate_pH(H, mu1, mu2, samples, sx::RngStream(seed, 0), threads);

  json j = provenance("density", json{{"h", pattern_name},
                                      {"mu1", json::parse(mu1.to_json())},
                                      {"mu2", json::parse(mu2.to_json())},
                                      {"samples", samples},
                                      {"seed", seed}});
  j.update(json::parse(est.to_json()));
  const std::string text = j.dump() + "\n";
  if (out_path.empty()) std::cout << text;
  else write_file(out_path, text);

  if (!csv_path.empty()) {
    sx::cli::CsvAppender csv(csv_path, provenance("density", json{{"h", pattern_name}}).dump(),
                             {"h", "value", "std_error", "samples", "seed"});
    csv.append({pattern_name, sx::cli::fmt_double(est.value), sx::cli::fmt_double(est.std_error),
                sx::cli::fmt_int(est.samples), sx::cli::fmt_int(static_cast<long long>(seed))});
  }
  return kExitOk;
}

int cmd_blowup(std::uint32_t n, double radius, const ConfigSource& cfgsrc, unsigned threads,
               const std::string& out_path) {
  auto cfg = cfgsrc.load(n, radius);

  // Degenerate rotations are retried with perturbed offsets.
  sx::BipartiteDrawing d;
  const int budget = 8;
  for (int attempt = 0;; ++attempt) {
    try {
      d = sx::blowup_drawing(cfg);
      break;
    } catch (const sx::GeneralPositionViolation&) {
      if (attempt + 1 >= budget) throw;
      for (int k = 0; k < 8; ++k) cfg.rotation_offsets[k] += 1e-3 * (k + 1) * (attempt + 1);
    }
  }

  const auto census = sx::crossing_census(d, threads);
  const auto g = sx::build_crossing_graph(d, threads);
  const auto tri = sx::triangle_census(g, &*d.blowup, threads);
  const auto quad = sx::base_angles(cfg);
  const auto pred_cross = sx::predicted_crossing_census(quad, cfg.n);
  const auto pred_tri = sx::predicted_triangle_census(quad, cfg.n);
  const double v3 = std::pow(static_cast<double>(g.num_vertices), 3);
  const double t_k3_measured = 6.0 * static_cast<double>(tri.total) / v3;
  const double t_k3_predicted = sx::t_k3_formula(quad);

  const json prov = provenance(
      "blowup", json{{"config", json::parse(cfg.to_json())}, {"n", cfg.n}, {"r", cfg.radius}});

  std::ostringstream out;
  out << "# " << prov.dump() << "\n";
  out << "quantity,measured,predicted,rel_error\n";
  const auto row = [&out](const std::string& name, double measured, double predicted) {
    const double rel = predicted != 0.0 ? (measured - predicted) / predicted : 0.0;
    out << name << "," << sx::cli::fmt_double(measured) << "," << sx::cli::fmt_double(predicted)
        << "," << sx::cli::fmt_double(rel) << "\n";
  };
  row("crossings_total", static_cast<double>(census.total), pred_cross.total());
  row("crossings_C", static_cast<double>(census.c), pred_cross.c);
  row("crossings_B", static_cast<double>(census.b), pred_cross.b);
  row("crossings_N", static_cast<double>(census.n), pred_cross.n);
  row("triangles_total", static_cast<double>(tri.total), pred_tri.total);
  row("triangles_CNN", static_cast<double>(tri.by_type("CNN")), pred_tri.cnn);
  row("triangles_BBB", static_cast<double>(tri.by_type("BBB")),
      static_cast<double>(pred_tri.bbb_exact));
  row("triangles_CCB", static_cast<double>(tri.by_type("CCB")),
      static_cast<double>(pred_tri.ccb_exact));
  row("triangles_BNN", static_cast<double>(tri.by_type("BNN")), pred_tri.bnn);
  row("triangles_CCC", static_cast<double>(tri.by_type("CCC")), 0.0);
  row("triangles_CCN", static_cast<double>(tri.by_type("CCN")), 0.0);
  row("triangles_NNN", static_cast<double>(tri.by_type("NNN")), 0.0);
  row("t_k3", t_k3_measured, t_k3_predicted);

  if (out_path.empty()) std::cout << out.str();
  else write_file(out_path, out.str());
  return kExitOk;
}

int cmd_sweep(int steps, const std::string& out_path) {
  if (steps < 1) throw sx::InvalidSpec("--steps must be >= 1 (non-empty family)");
  const json prov = provenance("sweep", json{{"steps", steps}});
  std::ostringstream out;
  out << "# " << prov.dump() << "\n";
  out << "t,alpha,beta,gamma,delta,t_k3\n";
  for (int i = 0; i <= steps; ++i) {
    const double t = static_cast<double>(i) / steps;
    const auto q = sx::base_angles(sx::sweep_family(t));
    out << sx::cli::fmt_double(t) << "," << sx::cli::fmt_double(q.alpha) << ","
        << sx::cli::fmt_double(q.beta) << "," << sx::cli::fmt_double(q.gamma) << ","
        << sx::cli::fmt_double(q.delta) << "," << sx::cli::fmt_double(sx::t_k3_formula(q))
        << "\n";
  }
  if (out_path.empty()) std::cout << out.str();
  else write_file(out_path, out.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spherecross: geodesic drawings of K_{n,n} on the sphere, crossing censuses, and "
               "graphon density estimation"};
  app.require_subcommand(1);

  std::string mu1_text = "uniform", mu2_text = "uniform";
  std::string in_path, out_path, csv_path;
  std::size_t n = 1;
  std::uint32_t blowup_n = 0;
  double radius = 0.0;
  std::uint64_t seed = 0;
  std::int64_t samples = 0;
  unsigned threads = 0;
  std::string pattern = "k2";
  int steps = 50;
  ConfigSource cfgsrc;

  auto add_config_opts = [&](CLI::App* cmd) {
    cmd->add_option("--config", cfgsrc.config_path, "blow-up base configuration JSON file");
    cmd->add_option("--config-seed", cfgsrc.config_seed, "random base configuration seed")
        ->each([&](const std::string&) { cfgsrc.have_seed = true; });
  };

  auto* draw = app.add_subcommand("draw", "sample a random bipartite geodesic drawing");
  draw->add_option("--mu1", mu1_text, "part-A measure (uniform|sym-uniform|circles4|JSON)");
  draw->add_option("--mu2", mu2_text, "part-B measure");
  draw->add_option("--n", n, "points per part")->required()->check(CLI::PositiveNumber);
  draw->add_option("--seed", seed, "RNG seed");
  draw->add_option("--r", radius, "circle radius for circles4");
  draw->add_option("-o,--output", out_path, "output JSON path (default stdout)");
  add_config_opts(draw);

  auto* crossings = app.add_subcommand("crossings", "exact crossing count and census");
  crossings->add_option("-i,--input", in_path, "drawing JSON file")->required();
  crossings->add_option("--threads", threads, "worker threads (0 = all)");
  crossings->add_option("-o,--output", out_path, "output JSON path (default stdout)");
  crossings->add_option("--csv", csv_path, "append a CSV row to this file");

  auto* density = app.add_subcommand("density", "Monte-Carlo homomorphism density p_H");
  density->set_help_flag("--help", "print this help message and exit");
  density->add_option("--h", pattern, "pattern graph: k2 | k3 | p3");
  density->add_option("--mu1", mu1_text, "part-A measure");
  density->add_option("--mu2", mu2_text, "part-B measure");
  density->add_option("--samples", samples, "sample count")->required();
  density->add_option("--seed", seed, "RNG seed");
  density->add_option("--r", radius, "circle radius for circles4");
  density->add_option("--threads", threads, "worker threads (0 = all)");
  density->add_option("-o,--output", out_path, "output JSON path (default stdout)");
  density->add_option("--csv", csv_path, "append a CSV row to this file");
  add_config_opts(density);

  auto* blowup = app.add_subcommand("blowup", "blow-up census vs closed-form predictions");
  blowup->add_option("--n", blowup_n, "vertices per node")->required()->check(CLI::PositiveNumber);
  blowup->add_option("--r", radius, "circle radius (default min(1e-3, 1/(10n)))");
  blowup->add_option("--threads", threads, "worker threads (0 = all)");
  blowup->add_option("-o,--output", out_path, "output CSV path (default stdout)");
  add_config_opts(blowup);

  auto* sweep = app.add_subcommand("sweep", "triangle density along the interpolation family");
  sweep->add_option("--steps", steps, "number of interpolation steps");
  sweep->add_option("-o,--output", out_path, "output CSV path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (draw->parsed())
      return cmd_draw(mu1_text, mu2_text, n, seed, cfgsrc, radius, out_path);
    if (crossings->parsed()) return cmd_crossings(in_path, threads, out_path, csv_path);
    if (density->parsed())
      return cmd_density(pattern, mu1_text, mu2_text, samples, seed, threads, cfgsrc, radius,
                         out_path, csv_path);
    if (blowup->parsed()) return cmd_blowup(blowup_n, radius, cfgsrc, threads, out_path);
    if (sweep->parsed()) return cmd_sweep(steps, out_path);
  } catch (const sx::InvalidSpec& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const sx::UnsupportedPattern& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const sx::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const sx::TooManyRejections& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const sx::GeneralPositionViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const sx::DegenerateConfiguration& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const sx::ConfigurationNotCanonical& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}
