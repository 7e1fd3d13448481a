// Copyright 2026 The prasym Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// prasym: command-line front end for the random-graph PageRank toolkit.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "prasym/asymptotics.hpp"
#include "prasym/errors.hpp"
#include "prasym/experiment.hpp"
#include "prasym/graph_models.hpp"
#include "prasym/io.hpp"
#include "prasym/metrics.hpp"
#include "prasym/pagerank.hpp"
#include "prasym/plot.hpp"
#include "prasym/spectral.hpp"
#include "prasym/verifiers.hpp"

namespace {

using namespace prasym;

constexpr int kExitParameter = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitIo = 3;

struct Common {
  std::optional<std::uint64_t> seed;
  double alpha = 0.85;
  double tol = 1e-12;
  std::size_t max_iter = 10000;
  unsigned threads = 1;
  std::string output_dir = ".";
};

std::uint64_t resolve_seed(const Common& c, std::uint64_t fallback) {
  if (c.seed) return *c.seed;
  if (const char* env = std::getenv("PRASYM_SEED")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') throw ParameterError("PRASYM_SEED is not an integer");
    return v;
  }
  return fallback;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ExperimentConfig load_config(const std::string& preset_name, const std::string& config_path) {
  if (!config_path.empty()) return config_from_json(read_file(config_path));
  if (!preset_name.empty()) return preset(preset_name);
  throw ParameterError("need --preset or --config");
}

// Applies flags that were given explicitly on top of a preset or JSON config.
void apply_overrides(ExperimentConfig& cfg, const CLI::App& app, const Common& c,
                     const std::vector<std::size_t>& sizes, std::optional<std::size_t> seeds) {
  if (app.count("--alpha")) cfg.alpha = c.alpha;
  if (app.count("--tol")) cfg.tol = c.tol;
  if (app.count("--max-iter")) cfg.max_iter = c.max_iter;
  if (app.count("--threads")) cfg.threads = c.threads;
  if (app.count("--output-dir")) cfg.output_dir = c.output_dir;
  if (!sizes.empty()) cfg.sizes = sizes;
  if (seeds) cfg.seeds_per_size = *seeds;
  cfg.master_seed = resolve_seed(c, cfg.master_seed);
  cfg.validate();
}

void add_common(CLI::App* app, Common& c) {
  app->add_option("--seed", c.seed, "Master seed (default: $PRASYM_SEED, else 1)");
  app->add_option("--alpha", c.alpha, "Damping factor in [0, 1)");
  app->add_option("--tol", c.tol, "Iteration tolerance");
  app->add_option("--max-iter", c.max_iter, "Iteration cap");
  app->add_option("--threads", c.threads, "Worker threads")->check(CLI::PositiveNumber);
  app->add_option("--output-dir", c.output_dir, "Directory for output files");
}

PreferenceVector preference_for(const std::string& spec, std::size_t n, std::size_t split) {
  return make_preference(PreferenceSpec::parse(spec), n, split);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Personalized PageRank on random graphs: exact solves, asymptotic approximations, sweeps"};
  app.require_subcommand(1);
  Common c;

  // generate
  auto* gen = app.add_subcommand("generate", "Sample a random graph and write its edge list");
  add_common(gen, c);
  std::string gen_model = "er";
  std::size_t gen_n = 1000;
  std::optional<double> gen_p;
  double sbm_p = 0.1;
  double sbm_q = 0.01;
  std::string gen_out = "graph.txt";
  gen->add_option("--model", gen_model, "er | chung_lu | sbm | power_law");
  gen->add_option("--n", gen_n, "Number of vertices")->check(CLI::PositiveNumber);
  gen->add_option("--p", gen_p, "ER edge probability (default: the preset density rule)");
  gen->add_option("--sbm-p", sbm_p, "SBM within-community probability");
  gen->add_option("--sbm-q", sbm_q, "SBM cross-community probability");
  gen->add_option("-o,--output", gen_out, "Edge-list file name (inside --output-dir)");

  // pagerank
  auto* pr = app.add_subcommand("pagerank", "Personalized PageRank of an edge-list graph");
  add_common(pr, c);
  std::string pr_graph;
  std::string pr_pref = "uniform";
  std::string pr_method = "power";
  std::string pr_out = "pagerank.txt";
  pr->add_option("--graph", pr_graph, "Edge-list file")->required();
  pr->add_option("--preference", pr_pref, "uniform | point_mass:K | community:B");
  pr->add_option("--method", pr_method, "power | dense")->check(CLI::IsMember({"power", "dense"}));
  pr->add_option("-o,--output", pr_out, "Vector file name (inside --output-dir)");

  // approx
  auto* ap = app.add_subcommand("approx", "Asymptotic PageRank approximation");
  add_common(ap, c);
  std::string ap_graph;
  std::string ap_pref = "uniform";
  std::optional<std::size_t> ap_sbm_n;
  std::size_t ap_sbm_m = 0;
  std::string ap_out = "approx.txt";
  ap->add_option("--graph", ap_graph, "Edge-list file (mixture approximation)");
  ap->add_option("--sbm-n", ap_sbm_n, "SBM size (block-model approximation, no graph needed)");
  ap->add_option("--sbm-m", ap_sbm_m, "SBM first-community size (default n/2)");
  ap->add_option("--sbm-p", sbm_p, "SBM within-community probability");
  ap->add_option("--sbm-q", sbm_q, "SBM cross-community probability");
  ap->add_option("--preference", ap_pref, "uniform | point_mass:K | community:B");
  ap->add_option("-o,--output", ap_out, "Vector file name (inside --output-dir)");

  // verify
  auto* ver = app.add_subcommand("verify", "Run the concentration-bound checks over a sweep");
  add_common(ver, c);
  std::string ver_preset;
  std::string ver_config;
  std::vector<std::size_t> ver_sizes;
  std::optional<std::size_t> ver_seeds;
  double min_rate = 0.9;
  ver->add_option("--preset", ver_preset, "Preset name");
  ver->add_option("--config", ver_config, "JSON config file");
  ver->add_option("--sizes", ver_sizes, "Override sweep sizes");
  ver->add_option("--seeds-per-size", ver_seeds, "Override seeds per size");
  ver->add_option("--min-pass-rate", min_rate, "Required pass fraction per check and n");

  // experiment
  auto* ex = app.add_subcommand("experiment", "Run a size sweep and emit CSV and SVG plots");
  add_common(ex, c);
  std::string ex_preset;
  std::string ex_config;
  std::vector<std::size_t> ex_sizes;
  std::optional<std::size_t> ex_seeds;
  bool dump = false;
  bool timings = false;
  ex->add_option("--preset", ex_preset, "Preset name")->check(CLI::IsMember(preset_names()));
  ex->add_option("--config", ex_config, "JSON config file");
  ex->add_option("--sizes", ex_sizes, "Override sweep sizes");
  ex->add_option("--seeds-per-size", ex_seeds, "Override seeds per size");
  ex->add_flag("--dump-vectors", dump, "Write pi and pibar for every cell");
  ex->add_flag("--timings", timings, "Record wall times (output is then not byte-reproducible)");

  // spectrum
  auto* sp = app.add_subcommand("spectrum", "Spectral estimates of the normalized adjacency");
  add_common(sp, c);
  std::string sp_graph;
  bool sp_dense = false;
  sp->add_option("--graph", sp_graph, "Edge-list file")->required();
  sp->add_flag("--dense", sp_dense, "Also compute the full dense spectrum (small graphs)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParameter;
  }

  try {
    const std::filesystem::path out_dir = c.output_dir;

    if (*gen) {
      ExperimentConfig cfg;
      cfg.model = parse_model(gen_model);
      cfg.params.er_C = er_preset_constant();
      cfg.params.er_fixed_p = gen_p;
      cfg.params.sbm_p = sbm_p;
      cfg.params.sbm_q = sbm_q;
      const auto sample = sample_model(cfg, gen_n, resolve_seed(c, 1), c.threads);
      io::write_edge_list(out_dir / gen_out, sample.graph);
      std::cout << "n=" << sample.graph.num_vertices() << " m=" << sample.graph.num_edges()
                << " -> " << (out_dir / gen_out).string() << '\n';
      return 0;
    }

    if (*pr) {
      const Graph g = io::read_edge_list(pr_graph);
      const auto v = preference_for(pr_pref, g.num_vertices(), g.num_vertices() / 2);
      const PageRankResult res = pr_method == "dense"
                                     ? pagerank_dense(g, v, c.alpha)
                                     : pagerank_power(g, v, {c.alpha, c.tol, c.max_iter});
      io::write_vector(out_dir / pr_out, res.pi);
      std::cout << "method=" << to_string(res.method) << " iterations=" << res.iterations
                << " residual=" << res.residual << '\n';
      if (!res.converged) {
        std::cerr << "error: PageRank did not converge within " << c.max_iter << " iterations\n";
        return kExitNumerical;
      }
      return 0;
    }

    if (*ap) {
      std::vector<double> pibar;
      if (ap_sbm_n) {
        const std::size_t n = *ap_sbm_n;
        const SbmParams params{ap_sbm_m ? ap_sbm_m : n / 2, n, sbm_p, sbm_q};
        const auto v = preference_for(ap_pref, n, params.m);
        pibar = 2 * params.m == n ? approx_sbm_equal(n, sbm_p, sbm_q, v, c.alpha)
                                  : approx_sbm_general(params, v, c.alpha);
      } else if (!ap_graph.empty()) {
        const Graph g = io::read_edge_list(ap_graph);
        const auto v = preference_for(ap_pref, g.num_vertices(), g.num_vertices() / 2);
        pibar = approx_mixture(g, v, c.alpha);
      } else {
        throw ParameterError("approx needs --graph or --sbm-n");
      }
      io::write_vector(out_dir / ap_out, pibar);
      return 0;
    }

    if (*ver) {
      ExperimentConfig cfg = load_config(ver_preset, ver_config);
      apply_overrides(cfg, *ver, c, ver_sizes, ver_seeds);
      const VerifyResult res = run_verify(cfg, BoundConstants{});
      print_verify_table(std::cout, res, min_rate);
      const auto csv = cfg.output_dir / (cfg.name + "_checks.csv");
      std::filesystem::create_directories(cfg.output_dir);
      std::ofstream out(csv, std::ios::binary);
      if (!out) throw IoError("cannot open " + csv.string());
      emit_checks_csv(out, res.checks);
      std::cout << (res.all_pass(min_rate) ? "all checks pass" : "some checks fail") << " -> "
                << csv.string() << '\n';
      return 0;
    }

    if (*ex) {
      ExperimentConfig cfg = load_config(ex_preset, ex_config);
      apply_overrides(cfg, *ex, c, ex_sizes, ex_seeds);
      if (dump) cfg.dump_vectors = true;
      if (timings) cfg.record_timings = true;
      const ExperimentResult res = run_experiment(cfg);
      const auto csv = cfg.output_dir / (cfg.name + ".csv");
      emit_csv(csv, res.records);
      std::cout << std::left << std::setw(8) << "n" << std::setw(6) << "used" << std::setw(10)
                << "excluded" << std::setw(16) << "median_tv" << std::setw(16)
                << "median_maxrel" << "median_lambda2\n";
      for (const auto& s : res.summary.sizes) {
        std::cout << std::setw(8) << s.n << std::setw(6) << s.used << std::setw(10) << s.excluded
                  << std::setw(16) << s.median_tv << std::setw(16) << s.median_max_relative
                  << s.median_lambda2 << '\n';
      }
      std::cout << "slope(tv)=" << res.summary.slope_tv
                << " slope(max_relative)=" << res.summary.slope_max_relative << '\n';
      for (const auto& field : cfg.plot_fields) {
        const auto svg = cfg.output_dir / (cfg.name + "_" + field + ".svg");
        const auto ps = emit_loglog_plot(res.records, "n", field, svg, cfg.name + ": " + field);
        if (ps.skipped) std::cerr << "warning: " << ps.skipped << " records skipped in " << svg.string() << '\n';
        std::cout << "plot " << svg.string() << " slope=" << ps.slope << '\n';
      }
      std::cout << "csv " << csv.string() << '\n';
      return 0;
    }

    if (*sp) {
      const Graph g = io::read_edge_list(sp_graph);
      SpectralOptions opts;
      opts.seed = resolve_seed(c, 0);
      if (sp->count("--tol")) opts.tol = c.tol;
      if (sp->count("--max-iter")) opts.max_iter = c.max_iter;
      const auto est = second_eigenvalue_magnitude(g, opts);
      std::cout << std::setprecision(12) << "lambda_max_nontrivial=" << est.value
                << " residual=" << est.residual << " iterations=" << est.iterations
                << " converged=" << (est.converged ? "yes" : "no") << '\n';
      if (sp_dense) {
        const auto spec = dense_spectrum(g);
        std::cout << "lambda_1=" << spec.eigenvalues.front() << " lambda_2=" << spec.eigenvalues[1]
                  << " lambda_n=" << spec.eigenvalues.back() << '\n';
      }
      if (!est.converged) return kExitNumerical;
      return 0;
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const NumericalError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParameter;
  }
  return 0;
}
