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

#include "prasym/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "prasym/asymptotics.hpp"
#include "prasym/errors.hpp"
#include "prasym/io.hpp"
#include "prasym/metrics.hpp"
#include "prasym/rng.hpp"

namespace prasym {
namespace {

bool has_flag(const std::string& flags, std::string_view flag) {
  std::size_t start = 0;
  while (start <= flags.size()) {
    const std::size_t end = std::min(flags.find(';', start), flags.size());
    if (std::string_view(flags).substr(start, end - start) == flag) return true;
    start = end + 1;
  }
  return false;
}

void add_flag(std::string& flags, std::string_view flag) {
  if (!flags.empty()) flags += ';';
  flags += flag;
}

std::size_t community_split(const ExperimentConfig& cfg, std::size_t n) {
  if (cfg.model != ModelKind::kSbm) return n / 2;
  const auto m = static_cast<std::size_t>(std::llround(cfg.params.sbm_fraction * n));
  return std::clamp<std::size_t>(m, 1, n - 1);
}

// Runs fn(i) for i in [0, count) on `threads` workers.
template <class Fn>
void parallel_for(std::size_t count, unsigned threads, const Fn& fn) {
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mu);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_double(const std::string& s) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0') throw IoError("CSV: not a number: " + s);
  return v;
}

std::uint64_t parse_u64(const std::string& s) {
  char* end = nullptr;
  const auto v = std::strtoull(s.c_str(), &end, 10);
  if (end == s.c_str() || *end != '\0') throw IoError("CSV: not an integer: " + s);
  return v;
}

}  // namespace

std::string_view to_string(ModelKind m) {
  switch (m) {
    case ModelKind::kEr: return "er";
    case ModelKind::kChungLu: return "chung_lu";
    case ModelKind::kSbm: return "sbm";
    case ModelKind::kPowerLaw: return "power_law";
  }
  return "unknown";
}

ModelKind parse_model(std::string_view s) {
  if (s == "er") return ModelKind::kEr;
  if (s == "chung_lu") return ModelKind::kChungLu;
  if (s == "sbm") return ModelKind::kSbm;
  if (s == "power_law") return ModelKind::kPowerLaw;
  throw ParameterError("unknown model: " + std::string(s));
}

std::string PreferenceSpec::tag() const {
  switch (kind) {
    case Kind::kUniform: return "uniform";
    case Kind::kPointMass: return "point_mass(" + std::to_string(index) + ")";
    case Kind::kCommunity: return "community_indicator(" + std::to_string(index) + ")";
  }
  return "unknown";
}

PreferenceSpec PreferenceSpec::parse(std::string_view s) {
  PreferenceSpec p;
  if (s == "uniform") return p;
  const auto colon = s.find(':');
  const std::string_view head = s.substr(0, colon);
  if (colon == std::string_view::npos) throw ParameterError("preference needs KIND:INDEX: " + std::string(s));
  const std::string tail(s.substr(colon + 1));
  const auto idx = static_cast<std::size_t>(parse_u64(tail));
  if (head == "point_mass") {
    if (idx < 1) throw ParameterError("point_mass index is 1-based");
    p.kind = Kind::kPointMass;
  } else if (head == "community") {
    if (idx != 1 && idx != 2) throw ParameterError("community block must be 1 or 2");
    p.kind = Kind::kCommunity;
  } else {
    throw ParameterError("unknown preference kind: " + std::string(head));
  }
  p.index = idx;
  return p;
}

void ExperimentConfig::validate() const {
  if (sizes.empty()) throw ParameterError("sweep needs at least one size");
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    if (sizes[k] < 2) throw ParameterError("sizes must be >= 2");
    if (k > 0 && sizes[k] <= sizes[k - 1]) throw ParameterError("sizes must be strictly increasing");
  }
  if (seeds_per_size < 1) throw ParameterError("seeds_per_size must be >= 1");
  if (!(alpha >= 0.0 && alpha < 1.0)) throw ParameterError("alpha must lie in [0, 1)");
  if (!(tol > 0.0)) throw ParameterError("tolerance must be positive");
}

double er_preset_constant(double cap, std::size_t n_ref) {
  const double nr = static_cast<double>(n_ref);
  return cap * nr / std::pow(std::log(nr), 7.0);
}

double er_probability(const ModelParams& params, std::size_t n) {
  if (params.er_fixed_p) return *params.er_fixed_p;
  const double nn = static_cast<double>(n);
  return std::min(params.er_cap, params.er_C * std::pow(std::log(nn), 7.0) / nn);
}

std::vector<std::string> preset_names() {
  return {"fig1_er", "fig1_cl", "fig2_er", "fig2_cl", "fig3_powerlaw", "fig4_pointmass", "fig5_sbm"};
}

ExperimentConfig preset(std::string_view name) {
  ExperimentConfig cfg;
  cfg.name = std::string(name);
  cfg.sizes = {1024, 2048, 4096, 8192};
  cfg.seeds_per_size = 10;
  cfg.alpha = 0.85;
  cfg.params.er_C = er_preset_constant();
  if (name == "fig1_er" || name == "fig2_er") {
    cfg.model = ModelKind::kEr;
  } else if (name == "fig1_cl" || name == "fig2_cl") {
    cfg.model = ModelKind::kChungLu;
  } else if (name == "fig3_powerlaw") {
    cfg.model = ModelKind::kPowerLaw;
    cfg.restrict_to_lcc = true;
  } else if (name == "fig4_pointmass") {
    cfg.model = ModelKind::kEr;
    cfg.preference = {PreferenceSpec::Kind::kPointMass, 1};
  } else if (name == "fig5_sbm") {
    cfg.model = ModelKind::kSbm;
  } else {
    throw ParameterError("unknown preset: " + std::string(name));
  }
  if (name.starts_with("fig1")) cfg.plot_fields = {"max_relative_error"};
  if (name.starts_with("fig2")) cfg.plot_fields = {"tv_error"};
  return cfg;
}

bool ExperimentRecord::excluded() const {
  return has_flag(flags, "disconnected") || has_flag(flags, "isolated_vertex");
}

std::uint64_t cell_seed(std::uint64_t master_seed, std::size_t n, std::size_t index) {
  const CounterRng rng(master_seed, Stream::kCells);
  return rng.bits((static_cast<std::uint64_t>(n) << 20) ^ index);
}

PreferenceVector make_preference(const PreferenceSpec& spec, std::size_t n,
                                 std::size_t community_split) {
  switch (spec.kind) {
    case PreferenceSpec::Kind::kUniform:
      return PreferenceVector::uniform(n);
    case PreferenceSpec::Kind::kPointMass:
      return PreferenceVector::point_mass(n, spec.index - 1);
    case PreferenceSpec::Kind::kCommunity:
      return spec.index == 1 ? PreferenceVector::indicator(n, 0, community_split)
                             : PreferenceVector::indicator(n, community_split, n);
  }
  throw ParameterError("unknown preference kind");
}

SampledModel sample_model(const ExperimentConfig& cfg, std::size_t n, std::uint64_t seed,
                          unsigned threads) {
  const ModelParams& mp = cfg.params;
  const double nn = static_cast<double>(n);
  switch (cfg.model) {
    case ModelKind::kEr: {
      const double p = er_probability(mp, n);
      return {gen_er(n, p, seed, threads),
              ChungLuExpectation(std::vector<double>(n, p * nn)), std::nullopt};
    }
    case ModelKind::kChungLu: {
      const GeometricClippedWeights spec{mp.cl_mean_coeff * std::pow(nn, mp.cl_mean_exponent),
                                         mp.cl_ratio};
      auto w = realize_weights(spec, n, seed);
      Graph g = gen_chung_lu(w, seed, threads);
      return {std::move(g), ChungLuExpectation(std::move(w)), std::nullopt};
    }
    case ModelKind::kPowerLaw: {
      const PowerLawWeights spec{mp.pl_beta, std::pow(nn, mp.pl_avg_exponent),
                                 std::pow(nn, mp.pl_max_exponent), mp.pl_offset};
      auto w = realize_weights(spec, n, seed);
      Graph g = gen_chung_lu(w, seed, threads);
      return {std::move(g), ChungLuExpectation(std::move(w)), std::nullopt};
    }
    case ModelKind::kSbm: {
      const SbmParams params{community_split(cfg, n), n, mp.sbm_p, mp.sbm_q};
      return {gen_sbm(params, seed, threads), SbmExpectation(params), params};
    }
  }
  throw ParameterError("unknown model");
}

ExperimentRecord run_cell(const ExperimentConfig& cfg, std::size_t n, std::uint64_t seed,
                          unsigned gen_threads) {
  const auto start = std::chrono::steady_clock::now();
  ExperimentRecord rec;
  rec.model = std::string(to_string(cfg.model));
  rec.n = n;
  rec.seed = seed;
  rec.alpha = cfg.alpha;
  rec.preference = cfg.preference.tag();

  SampledModel sample = sample_model(cfg, n, seed, gen_threads);
  Graph graph = std::move(sample.graph);
  if (cfg.restrict_to_lcc) {
    auto lcc = largest_component(graph);
    if (lcc.graph.num_vertices() < graph.num_vertices()) {
      add_flag(rec.flags, "lcc");
      graph = std::move(lcc.graph);
    }
  }
  const std::size_t nv = graph.num_vertices();
  if (graph.min_degree() == 0 || nv < 2) {
    add_flag(rec.flags, "isolated_vertex");
    const double nan = std::numeric_limits<double>::quiet_NaN();
    rec.tv_error = rec.max_relative_error = rec.lambda2 = rec.degree_ratio = nan;
    return rec;
  }
  if (!is_connected(graph)) add_flag(rec.flags, "disconnected");

  const std::size_t split = sample.sbm ? sample.sbm->m : nv / 2;
  const PreferenceVector v = make_preference(cfg.preference, nv, split);
  const auto exact = pagerank_power(graph, v, {cfg.alpha, cfg.tol, cfg.max_iter});
  if (!exact.converged) add_flag(rec.flags, "unconverged");

  std::vector<double> approx;
  if (sample.sbm && !cfg.restrict_to_lcc) {
    const SbmParams& sp = *sample.sbm;
    approx = (2 * sp.m == sp.n) ? approx_sbm_equal(sp.n, sp.p, sp.q, v, cfg.alpha)
                                : approx_sbm_general(sp, v, cfg.alpha);
  } else {
    approx = approx_mixture(graph, v, cfg.alpha);
  }

  rec.tv_error = tv_distance(exact.pi, approx);
  rec.max_relative_error = max_relative_error(exact.pi, approx);
  rec.iterations = exact.iterations;
  rec.degree_ratio = static_cast<double>(graph.max_degree()) / graph.min_degree();

  SpectralOptions lopts = cfg.lambda_opts;
  lopts.seed = seed;
  const auto lambda = second_eigenvalue_magnitude(graph, lopts);
  rec.lambda2 = lambda.value;
  if (!lambda.converged) add_flag(rec.flags, "lambda2_unconverged");

  if (cfg.dump_vectors) {
    const std::string stem = rec.model + "_n" + std::to_string(n) + "_seed" + std::to_string(seed);
    const auto dir = cfg.output_dir / "vectors";
    io::write_vector(dir / (stem + "_pi.txt"), exact.pi);
    io::write_vector(dir / (stem + "_pibar.txt"), approx);
  }
  if (cfg.record_timings) {
    const auto elapsed = std::chrono::steady_clock::now() - start;
    rec.wall_time_ms = std::chrono::duration<double, std::milli>(elapsed).count();
  }
  return rec;
}

double median(std::vector<double> values) {
  if (values.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::sort(values.begin(), values.end());
  const std::size_t k = values.size() / 2;
  return values.size() % 2 == 1 ? values[k] : 0.5 * (values[k - 1] + values[k]);
}

double fit_loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw ParameterError("slope fit: length mismatch");
  std::vector<double> lx;
  std::vector<double> ly;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > 0.0 && y[i] > 0.0 && std::isfinite(y[i])) {
      lx.push_back(std::log(x[i]));
      ly.push_back(std::log(y[i]));
    }
  }
  if (lx.size() < 2) return 0.0;
  const double k = static_cast<double>(lx.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= k;
  my /= k;
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxy += (lx[i] - mx) * (ly[i] - my);
    sxx += (lx[i] - mx) * (lx[i] - mx);
  }
  return sxx == 0.0 ? 0.0 : sxy / sxx;
}

ExperimentSummary summarize(const std::vector<ExperimentRecord>& records) {
  ExperimentSummary s;
  std::map<std::size_t, std::vector<const ExperimentRecord*>> by_n;
  for (const auto& r : records) by_n[r.n].push_back(&r);
  std::vector<double> xs;
  std::vector<double> tv;
  std::vector<double> mre;
  for (const auto& [n, rows] : by_n) {
    SizeSummary z;
    z.n = n;
    std::vector<double> a;
    std::vector<double> b;
    std::vector<double> c;
    for (const auto* r : rows) {
      if (r->excluded()) {
        ++z.excluded;
        continue;
      }
      a.push_back(r->tv_error);
      b.push_back(r->max_relative_error);
      c.push_back(r->lambda2);
    }
    z.used = a.size();
    z.median_tv = median(a);
    z.median_max_relative = median(b);
    z.median_lambda2 = median(c);
    s.excluded += z.excluded;
    s.sizes.push_back(z);
    xs.push_back(static_cast<double>(n));
    tv.push_back(z.median_tv);
    mre.push_back(z.median_max_relative);
  }
  s.slope_tv = fit_loglog_slope(xs, tv);
  s.slope_max_relative = fit_loglog_slope(xs, mre);
  return s;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  struct Cell {
    std::size_t n;
    std::uint64_t seed;
  };
  std::vector<Cell> cells;
  for (std::size_t n : cfg.sizes) {
    for (std::size_t k = 0; k < cfg.seeds_per_size; ++k) {
      cells.push_back({n, cell_seed(cfg.master_seed, n, k)});
    }
  }
  ExperimentResult result;
  result.records.resize(cells.size());
  const unsigned threads = std::max(1u, cfg.threads);
  // Cells run in parallel; with a single cell per worker the generator gets
  // the threads instead.
  const unsigned gen_threads = cells.size() == 1 ? threads : 1;
  parallel_for(cells.size(), threads, [&](std::size_t i) {
    result.records[i] = run_cell(cfg, cells[i].n, cells[i].seed, gen_threads);
  });
  std::sort(result.records.begin(), result.records.end(),
            [](const ExperimentRecord& a, const ExperimentRecord& b) {
              return std::tie(a.model, a.n, a.seed) < std::tie(b.model, b.n, b.seed);
            });
  result.summary = summarize(result.records);
  return result;
}

void emit_csv(std::ostream& out, const std::vector<ExperimentRecord>& records) {
  if (records.empty()) throw ParameterError("emit_csv: no records");
  out << kCsvHeader << '\n';
  for (const auto& r : records) {
    out << r.model << ',' << r.n << ',' << r.seed << ',' << io::format_double(r.alpha) << ','
        << r.preference << ',' << io::format_double(r.tv_error) << ','
        << io::format_double(r.max_relative_error) << ',' << io::format_double(r.lambda2) << ','
        << io::format_double(r.degree_ratio) << ',' << r.iterations << ','
        << io::format_double(r.wall_time_ms) << ',' << r.flags << '\n';
  }
  if (!out) throw IoError("CSV write failed");
}

void emit_csv(const std::filesystem::path& path, const std::vector<ExperimentRecord>& records) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  emit_csv(out, records);
}

std::vector<ExperimentRecord> parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw IoError("CSV: unexpected header");
  std::vector<ExperimentRecord> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cells = split_csv_line(line);
    if (cells.size() != 12) throw IoError("CSV: expected 12 fields, got " + std::to_string(cells.size()));
    ExperimentRecord r;
    r.model = cells[0];
    r.n = static_cast<std::size_t>(parse_u64(cells[1]));
    r.seed = parse_u64(cells[2]);
    r.alpha = parse_double(cells[3]);
    r.preference = cells[4];
    r.tv_error = parse_double(cells[5]);
    r.max_relative_error = parse_double(cells[6]);
    r.lambda2 = parse_double(cells[7]);
    r.degree_ratio = parse_double(cells[8]);
    r.iterations = static_cast<std::size_t>(parse_u64(cells[9]));
    r.wall_time_ms = parse_double(cells[10]);
    r.flags = cells[11];
    out.push_back(std::move(r));
  }
  return out;
}

double record_field(const ExperimentRecord& r, std::string_view field) {
  if (field == "tv_error") return r.tv_error;
  if (field == "max_relative_error") return r.max_relative_error;
  if (field == "lambda2") return r.lambda2;
  if (field == "degree_ratio") return r.degree_ratio;
  if (field == "iterations") return static_cast<double>(r.iterations);
  if (field == "wall_time_ms") return r.wall_time_ms;
  if (field == "n") return static_cast<double>(r.n);
  throw ParameterError("unknown record field: " + std::string(field));
}

// --- verify -------------------------------------------------------------------

bool VerifyResult::all_pass(double min_pass_rate) const {
  return std::all_of(rates.begin(), rates.end(), [&](const CheckRate& r) {
    return !is_gating_check(r.name) || r.rate() >= min_pass_rate;
  });
}

VerifyResult run_verify(const ExperimentConfig& cfg, const BoundConstants& constants) {
  cfg.validate();
  struct Cell {
    std::size_t n;
    std::uint64_t seed;
  };
  std::vector<Cell> cells;
  for (std::size_t n : cfg.sizes) {
    for (std::size_t k = 0; k < cfg.seeds_per_size; ++k) {
      cells.push_back({n, cell_seed(cfg.master_seed, n, k)});
    }
  }
  std::vector<std::vector<BoundCheck>> per_cell(cells.size());
  BoundConstants k = constants;
  k.alpha = cfg.alpha;
  parallel_for(cells.size(), std::max(1u, cfg.threads), [&](std::size_t i) {
    const auto sample = sample_model(cfg, cells[i].n, cells[i].seed);
    const std::size_t split = sample.sbm ? sample.sbm->m : cells[i].n / 2;
    const auto v = make_preference(cfg.preference, cells[i].n, split);
    per_cell[i] = run_bound_suite(sample.graph, sample.expected, v, k, cells[i].seed);
  });

  VerifyResult out;
  std::map<std::pair<std::string, std::size_t>, CheckRate> rates;
  for (auto& cell : per_cell) {
    for (auto& c : cell) {
      auto& r = rates[{c.name, c.n}];
      r.name = c.name;
      r.n = c.n;
      ++r.total;
      if (c.passed) ++r.passed;
      out.checks.push_back(std::move(c));
    }
  }
  for (auto& [key, r] : rates) out.rates.push_back(r);
  std::stable_sort(out.checks.begin(), out.checks.end(), [](const BoundCheck& a, const BoundCheck& b) {
    return std::tie(a.name, a.n, a.seed) < std::tie(b.name, b.n, b.seed);
  });
  return out;
}

void emit_checks_csv(std::ostream& out, const std::vector<BoundCheck>& checks) {
  out << "name,n,seed,measured,bound,constant,passed,flags\n";
  for (const auto& c : checks) {
    out << c.name << ',' << c.n << ',' << c.seed << ',' << io::format_double(c.measured) << ','
        << io::format_double(c.bound) << ',' << io::format_double(c.constant_used) << ','
        << (c.passed ? 1 : 0) << ',' << c.flags << '\n';
  }
  if (!out) throw IoError("CSV write failed");
}

void print_verify_table(std::ostream& out, const VerifyResult& result, double min_pass_rate) {
  out << std::left << std::setw(28) << "check" << std::setw(8) << "n" << std::setw(10) << "passed"
      << std::setw(14) << "median" << std::setw(14) << "bound" << "verdict\n";
  for (const auto& r : result.rates) {
    std::vector<double> measured;
    double bound = 0.0;
    for (const auto& c : result.checks) {
      if (c.name == r.name && c.n == r.n) {
        measured.push_back(c.measured);
        bound = c.bound;
      }
    }
    std::ostringstream frac;
    frac << r.passed << '/' << r.total;
    out << std::left << std::setw(28) << r.name << std::setw(8) << r.n << std::setw(10)
        << frac.str() << std::setw(14) << std::setprecision(6) << median(measured)
        << std::setw(14) << bound << (r.rate() >= min_pass_rate ? "PASS" : "FAIL")
        << (is_gating_check(r.name) ? "" : " (diagnostic)") << '\n';
  }
}

// --- JSON config ----------------------------------------------------------------

ExperimentConfig config_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError(std::string("config JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParameterError("config JSON must be an object");
  ExperimentConfig cfg = j.contains("preset") ? preset(j.at("preset").get<std::string>())
                                              : ExperimentConfig{};
  if (!j.contains("preset")) cfg.params.er_C = er_preset_constant();
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "preset") continue;
      if (key == "name") cfg.name = value.get<std::string>();
      else if (key == "model") cfg.model = parse_model(value.get<std::string>());
      else if (key == "sizes") cfg.sizes = value.get<std::vector<std::size_t>>();
      else if (key == "seeds_per_size") cfg.seeds_per_size = value.get<std::size_t>();
      else if (key == "alpha") cfg.alpha = value.get<double>();
      else if (key == "preference") cfg.preference = PreferenceSpec::parse(value.get<std::string>());
      else if (key == "output_dir") cfg.output_dir = value.get<std::string>();
      else if (key == "master_seed") cfg.master_seed = value.get<std::uint64_t>();
      else if (key == "threads") cfg.threads = value.get<unsigned>();
      else if (key == "restrict_to_lcc") cfg.restrict_to_lcc = value.get<bool>();
      else if (key == "dump_vectors") cfg.dump_vectors = value.get<bool>();
      else if (key == "record_timings") cfg.record_timings = value.get<bool>();
      else if (key == "tol") cfg.tol = value.get<double>();
      else if (key == "max_iter") cfg.max_iter = value.get<std::size_t>();
      else if (key == "plot_fields") cfg.plot_fields = value.get<std::vector<std::string>>();
      else if (key == "model_params") {
        ModelParams& mp = cfg.params;
        for (const auto& [pk, pv] : value.items()) {
          if (pk == "er_C") mp.er_C = pv.get<double>();
          else if (pk == "er_cap") mp.er_cap = pv.get<double>();
          else if (pk == "er_p") mp.er_fixed_p = pv.get<double>();
          else if (pk == "cl_mean_coeff") mp.cl_mean_coeff = pv.get<double>();
          else if (pk == "cl_mean_exponent") mp.cl_mean_exponent = pv.get<double>();
          else if (pk == "cl_ratio") mp.cl_ratio = pv.get<double>();
          else if (pk == "pl_beta") mp.pl_beta = pv.get<double>();
          else if (pk == "pl_max_exponent") mp.pl_max_exponent = pv.get<double>();
          else if (pk == "pl_avg_exponent") mp.pl_avg_exponent = pv.get<double>();
          else if (pk == "pl_offset") {
            const auto s = pv.get<std::string>();
            if (s == "verbatim") mp.pl_offset = PowerLawOffset::kVerbatim;
            else if (s == "standard") mp.pl_offset = PowerLawOffset::kStandard;
            else throw ParameterError("pl_offset must be 'verbatim' or 'standard'");
          } else if (pk == "sbm_p") mp.sbm_p = pv.get<double>();
          else if (pk == "sbm_q") mp.sbm_q = pv.get<double>();
          else if (pk == "sbm_fraction") mp.sbm_fraction = pv.get<double>();
          else throw ParameterError("unknown model_params key: " + pk);
        }
      } else {
        throw ParameterError("unknown config key: " + key);
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError(std::string("config JSON: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

}  // namespace prasym
