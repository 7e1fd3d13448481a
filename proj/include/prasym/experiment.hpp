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

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "prasym/graph.hpp"
#include "prasym/graph_models.hpp"
#include "prasym/pagerank.hpp"
#include "prasym/spectral.hpp"
#include "prasym/verifiers.hpp"

namespace prasym {

enum class ModelKind { kEr, kChungLu, kSbm, kPowerLaw };
std::string_view to_string(ModelKind m);
ModelKind parse_model(std::string_view s);

struct PreferenceSpec {
  enum class Kind { kUniform, kPointMass, kCommunity };
  Kind kind = Kind::kUniform;
  // kPointMass: 1-based vertex (1 means e_1, vertex 0). kCommunity: block 1 or 2.
  std::size_t index = 1;

  std::string tag() const;
  static PreferenceSpec parse(std::string_view s);  // "uniform", "point_mass:K", "community:B"
};

// Per-model knobs; each model reads only its own block.
struct ModelParams {
  // ER: p_n = min(er_cap, er_C log^7(n) / n), or er_fixed_p when set.
  double er_C = 0.0;
  double er_cap = 0.5;
  std::optional<double> er_fixed_p;
  // Geometric-clipped Chung-Lu: mean = cl_mean_coeff * n^cl_mean_exponent.
  double cl_mean_coeff = 10.0;
  double cl_mean_exponent = 1.0 / 3.0;
  double cl_ratio = 7.0;
  // Power law: max degree n^pl_max_exponent, average degree n^pl_avg_exponent.
  double pl_beta = 4.0;
  double pl_max_exponent = 1.0 / 3.0;
  double pl_avg_exponent = 1.0 / 6.0;
  PowerLawOffset pl_offset = PowerLawOffset::kVerbatim;
  // SBM: m = round(sbm_fraction * n).
  double sbm_p = 0.1;
  double sbm_q = 0.01;
  double sbm_fraction = 0.5;
};

struct ExperimentConfig {
  std::string name = "experiment";
  ModelKind model = ModelKind::kEr;
  std::vector<std::size_t> sizes;
  std::size_t seeds_per_size = 10;
  double alpha = 0.85;
  PreferenceSpec preference;
  ModelParams params;
  std::filesystem::path output_dir = ".";
  std::uint64_t master_seed = 1;
  unsigned threads = 1;
  // Run on the largest connected component (flag "lcc" when vertices drop).
  bool restrict_to_lcc = false;
  bool dump_vectors = false;
  // Off: wall_time_ms is written as 0 so output bytes depend only on the
  // config and master seed.
  bool record_timings = false;
  double tol = 1e-12;
  std::size_t max_iter = 10000;
  SpectralOptions lambda_opts{1e-6, 50, 0};
  std::vector<std::string> plot_fields{"max_relative_error", "tv_error"};

  // Throws ParameterError on an invalid sweep.
  void validate() const;
};

// ER preset constant giving p = cap at n = 1024.
double er_preset_constant(double cap = 0.5, std::size_t n_ref = 1024);
double er_probability(const ModelParams& params, std::size_t n);

std::vector<std::string> preset_names();
ExperimentConfig preset(std::string_view name);

struct ExperimentRecord {
  std::string model;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  double alpha = 0.0;
  std::string preference;
  double tv_error = 0.0;
  double max_relative_error = 0.0;
  double lambda2 = 0.0;
  double degree_ratio = 0.0;
  std::size_t iterations = 0;
  double wall_time_ms = 0.0;
  std::string flags;

  bool excluded() const;  // disconnected or unusable samples
  bool operator==(const ExperimentRecord&) const = default;
};

struct SizeSummary {
  std::size_t n = 0;
  std::size_t used = 0;
  std::size_t excluded = 0;
  double median_tv = 0.0;
  double median_max_relative = 0.0;
  double median_lambda2 = 0.0;
};

struct ExperimentSummary {
  std::vector<SizeSummary> sizes;
  double slope_tv = 0.0;
  double slope_max_relative = 0.0;
  std::size_t excluded = 0;
};

struct ExperimentResult {
  std::vector<ExperimentRecord> records;
  ExperimentSummary summary;
};

std::uint64_t cell_seed(std::uint64_t master_seed, std::size_t n, std::size_t index);

struct SampledModel {
  Graph graph;
  ExpectedAdjacency expected;
  std::optional<SbmParams> sbm;
};

SampledModel sample_model(const ExperimentConfig& cfg, std::size_t n, std::uint64_t seed,
                          unsigned threads = 1);
PreferenceVector make_preference(const PreferenceSpec& spec, std::size_t n,
                                 std::size_t community_split);

ExperimentRecord run_cell(const ExperimentConfig& cfg, std::size_t n, std::uint64_t seed,
                          unsigned gen_threads = 1);
ExperimentResult run_experiment(const ExperimentConfig& cfg);
ExperimentSummary summarize(const std::vector<ExperimentRecord>& records);

double median(std::vector<double> values);
// Least-squares slope of log(y) against log(x).
double fit_loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

inline constexpr std::string_view kCsvHeader =
    "model,n,seed,alpha,preference,tv_error,max_relative_error,lambda2,degree_ratio,"
    "iterations,wall_time_ms,flags";

void emit_csv(std::ostream& out, const std::vector<ExperimentRecord>& records);
void emit_csv(const std::filesystem::path& path, const std::vector<ExperimentRecord>& records);
std::vector<ExperimentRecord> parse_csv(std::istream& in);

// Field accessor used by the plotter: "tv_error", "max_relative_error",
// "lambda2", "degree_ratio", "iterations", "wall_time_ms", "n".
double record_field(const ExperimentRecord& r, std::string_view field);

// Bound-check sweeps ---------------------------------------------------------

struct CheckRate {
  std::string name;
  std::size_t n = 0;
  std::size_t passed = 0;
  std::size_t total = 0;
  double rate() const { return total == 0 ? 0.0 : static_cast<double>(passed) / total; }
};

struct VerifyResult {
  std::vector<BoundCheck> checks;
  std::vector<CheckRate> rates;  // ordered by (name, n)
  // Every check reaches min_pass_rate at every n.
  bool all_pass(double min_pass_rate = 0.9) const;
};

VerifyResult run_verify(const ExperimentConfig& cfg, const BoundConstants& constants);
void emit_checks_csv(std::ostream& out, const std::vector<BoundCheck>& checks);
void print_verify_table(std::ostream& out, const VerifyResult& result, double min_pass_rate = 0.9);

// JSON config: an optional "preset" base overlaid with any ExperimentConfig
// field. Unknown keys are rejected.
ExperimentConfig config_from_json(std::string_view text);

}  // namespace prasym
