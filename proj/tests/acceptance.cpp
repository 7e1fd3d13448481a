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

// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero
// when a criterion fails, unless its number was given with --allow-red.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "prasym/asymptotics.hpp"
#include "prasym/experiment.hpp"
#include "prasym/kernels.hpp"
#include "prasym/metrics.hpp"
#include "prasym/pagerank.hpp"
#include "prasym/spectral.hpp"
#include "prasym/verifiers.hpp"
#include "support.hpp"

using namespace prasym;
namespace k = prasym::kernels;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::string join(const std::vector<double>& xs) {
  std::string s;
  for (double x : xs) s += (s.empty() ? "" : " ") + fmt("%.4g", x);
  return s;
}

// Connected model sample with n in [lo, hi] after restricting to the
// largest component.
Graph sample_connected(int model, std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  for (;;) {
    Graph g = prasym::testing::random_model_graph(model, rng, lo, hi);
    if (g.num_vertices() >= lo) return g;
  }
}

// Sweep results are shared between criteria that use the same configuration
// (fig1_er and fig2_er differ only in which column is plotted).
std::map<std::string, ExperimentResult> g_runs;
double g_sweep_seconds = 0.0;

const ExperimentResult& sweep(const std::string& name) {
  const ExperimentConfig cfg = preset(name);
  const std::string key = std::string(to_string(cfg.model)) + "/" + cfg.preference.tag();
  auto it = g_runs.find(key);
  if (it == g_runs.end()) {
    const auto t0 = Clock::now();
    it = g_runs.emplace(key, run_experiment(cfg)).first;
    g_sweep_seconds += seconds_since(t0);
  }
  return it->second;
}

std::vector<double> medians(const ExperimentResult& r, bool tv) {
  std::vector<double> out;
  for (const auto& s : r.summary.sizes) out.push_back(tv ? s.median_tv : s.median_max_relative);
  return out;
}

bool strictly_decreasing(const std::vector<double>& m) {
  for (std::size_t i = 1; i < m.size(); ++i)
    if (!(m[i] < m[i - 1])) return false;
  return true;
}

// 1. Power and series iterations against the dense solve.
Outcome criterion1() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(101);
  double worst_inf = 0.0;
  double worst_series_excess = -1.0;
  for (int i = 0; i < 50; ++i) {
    const Graph g = sample_connected(i % 4, rng, 20, 200);
    const auto v = prasym::testing::random_preference(g.num_vertices(), rng);
    for (double alpha : {0.15, 0.5, 0.85}) {
      const auto d = pagerank_dense(g, v, alpha);
      const auto p = pagerank_power(g, v, {alpha, 1e-12, 10000});
      worst_inf = std::max(worst_inf, k::max_abs_diff(p.pi, d.pi));
      const auto s = pagerank_series(g, v, alpha, 60);
      const double excess = k::abs_diff_sum(s.partial_sum, d.pi) - (std::pow(alpha, 61) + 1e-12);
      worst_series_excess = std::max(worst_series_excess, excess);
    }
  }
  const double secs = seconds_since(t0);
  Outcome o;
  o.pass = worst_inf <= 1e-10 && worst_series_excess <= 0.0 && secs < 30.0;
  o.detail = "max |power-dense|_inf=" + fmt("%.2e", worst_inf) +
             ", series slack " + fmt("%.2e", -worst_series_excess) + ", " + fmt("%.1fs", secs);
  return o;
}

// 2. 3-path closed forms.
Outcome criterion2() {
  const Graph g = prasym::testing::path3();
  const auto v = PreferenceVector::uniform(3);
  const auto pi = pagerank_dense(g, v, 0.5).pi;
  const auto pb = approx_mixture(g, v, 0.5);
  const std::vector<double> pi_ref{5.0 / 18.0, 4.0 / 9.0, 5.0 / 18.0};
  const std::vector<double> pb_ref{7.0 / 24.0, 5.0 / 12.0, 7.0 / 24.0};
  const double e_pi = k::max_abs_diff(pi, pi_ref);
  const double e_pb = k::max_abs_diff(pb, pb_ref);
  const double e_tv = std::abs(tv_distance(pi, pb) - 1.0 / 36.0);
  const double e_mre = std::abs(max_relative_error(pi, pb) - 1.0 / 15.0);
  const double e_vp =
      std::abs(check_qtilde_vprime(g, v, 1.0).measured - std::sqrt(2.0) / 4.0);
  const double worst = std::max({e_pi, e_pb, e_tv, e_mre, e_vp});
  return {worst <= 1e-12, "worst deviation " + fmt("%.2e", worst)};
}

// 3. Block-model routes.
Outcome criterion3() {
  double gen_vs_eq = 0.0;
  double vs_dense = 0.0;
  for (std::size_t n : {100, 1000}) {
    for (double ratio : {2.0, 10.0}) {
      for (double alpha : {0.15, 0.85}) {
        for (bool uniform : {true, false}) {
          const double p = 0.1;
          const double q = p / ratio;
          const auto v = uniform ? PreferenceVector::uniform(n)
                                 : PreferenceVector::indicator(n, 0, n / 2);
          const SbmParams sp{n / 2, n, p, q};
          const auto a = approx_sbm_general(sp, v, alpha);
          const auto b = approx_sbm_equal(n, p, q, v, alpha);
          gen_vs_eq = std::max(gen_vs_eq, k::max_abs_diff(a, b));
          if (n == 100) {
            const auto d = approx_sbm_dense(sp, v, alpha);
            vs_dense = std::max({vs_dense, k::max_abs_diff(a, d), k::max_abs_diff(b, d)});
          }
        }
      }
    }
  }
  return {gen_vs_eq <= 1e-12 && vs_dense <= 1e-12,
          "general vs closed form " + fmt("%.2e", gen_vs_eq) + ", vs dense " +
              fmt("%.2e", vs_dense)};
}

// 4. TV error trend.
Outcome criterion4() {
  Outcome o;
  for (const char* name : {"fig2_er", "fig2_cl", "fig5_sbm"}) {
    const auto m = medians(sweep(name), true);
    const bool ok = strictly_decreasing(m) && m.back() < 0.5 * m.front();
    o.pass = o.pass && ok;
    o.detail += std::string(o.detail.empty() ? "" : "; ") + name + (ok ? " ok" : " FAIL") +
                " [" + join(m) + "] last/first=" + fmt("%.3f", m.back() / m.front());
  }
  o.pass = o.pass && g_sweep_seconds < 600.0;
  o.detail += "; sweeps " + fmt("%.0fs", g_sweep_seconds);
  return o;
}

// 5. Max relative error trend.
Outcome criterion5() {
  Outcome o;
  for (const char* name : {"fig1_er", "fig1_cl"}) {
    const auto m = medians(sweep(name), false);
    const bool ok = strictly_decreasing(m);
    o.pass = o.pass && ok;
    o.detail += std::string(o.detail.empty() ? "" : "; ") + name + (ok ? " ok" : " FAIL") +
                " [" + join(m) + "]";
  }
  return o;
}

// 6. Regimes where the approximation is not expected to converge.
Outcome criterion6() {
  Outcome o;
  const auto pm = medians(sweep("fig4_pointmass"), false);
  const bool pm_ok = !(pm.back() < 0.5 * pm.front());
  const auto& pl = sweep("fig3_powerlaw");
  const auto pl_mre = medians(pl, false);
  const auto pl_tv = medians(pl, true);
  bool nondecreasing = true;
  for (std::size_t i = 1; i < pl_mre.size(); ++i) nondecreasing &= pl_mre[i] >= pl_mre[i - 1];
  // "Flat": the fitted log-log slope is no steeper than -0.1.
  const bool flat = pl.summary.slope_max_relative >= -0.1;
  bool tv_nonincreasing = true;
  for (std::size_t i = 1; i < pl_tv.size(); ++i) tv_nonincreasing &= pl_tv[i] <= pl_tv[i - 1];
  const bool pl_ok = (nondecreasing || flat) && tv_nonincreasing;
  o.pass = pm_ok && pl_ok;
  o.detail = std::string("fig4_pointmass max_rel [") + join(pm) + "]" + (pm_ok ? " ok" : " FAIL") +
             "; fig3_powerlaw max_rel [" + join(pl_mre) + "] slope " +
             fmt("%.3f", pl.summary.slope_max_relative) + ", tv [" + join(pl_tv) + "]" +
             (pl_ok ? " ok" : " FAIL");
  return o;
}

// 7. Concentration bounds over sweeps and the expansion rate on ER.
Outcome criterion7() {
  Outcome o;
  const BoundConstants constants;
  for (const char* name : {"fig1_er", "fig1_cl", "fig5_sbm"}) {
    const auto res = run_verify(preset(name), constants);
    double worst = 1.0;
    std::string worst_name;
    for (const auto& r : res.rates) {
      if (is_gating_check(r.name) && r.rate() < worst) {
        worst = r.rate();
        worst_name = r.name + "@" + std::to_string(r.n);
      }
    }
    const bool ok = res.all_pass(0.9);
    o.pass = o.pass && ok;
    o.detail += std::string(o.detail.empty() ? "" : "; ") + name + " min rate " +
                fmt("%.2f", worst) + (worst_name.empty() ? "" : " (" + worst_name + ")");
  }
  int passes = 0;
  double worst_ratio = 0.0;
  for (std::uint64_t s = 0; s < 10; ++s) {
    const std::uint64_t seed = cell_seed(1, 8192, s);
    const Graph g = gen_er(8192, 0.02, seed);
    const double threshold = 3.0 / std::sqrt(8192.0 * 0.02);
    const auto c = check_spectral_expansion(g, threshold, {1e-6, 200, seed});
    passes += c.passed;
    worst_ratio = std::max(worst_ratio, c.measured / threshold);
  }
  const bool ok = passes >= 9;
  o.pass = o.pass && ok;
  o.detail += "; ER 8192 expansion " + std::to_string(passes) + "/10 (max measured/bound " +
              fmt("%.3f", worst_ratio) + ")";
  return o;
}

// 8. Inequalities that hold on every instance.
Outcome criterion8() {
  std::mt19937_64 rng(808);
  std::uniform_int_distribution<std::size_t> nd(1, 200);
  std::uniform_real_distribution<double> fu(-1.0, 1.0);
  int weak_violations = 0;
  for (int i = 0; i < 10000; ++i) {
    const std::size_t n = nd(rng);
    const auto a = prasym::testing::random_simplex(n, rng);
    const auto b = prasym::testing::random_simplex(n, rng);
    std::vector<double> f(n);
    for (auto& x : f) x = fu(rng);
    if (i % 4 == 0) {
      for (std::size_t j = 0; j < n; ++j) f[j] = a[j] > b[j] ? 1.0 : -1.0;
    }
    if (weak_convergence_gap(a, b, f) > 2.0 * tv_distance(a, b)) ++weak_violations;
  }
  int chain_violations = 0;
  int chain_instances = 0;
  for (int i = 0; i < 60; ++i) {
    const Graph g = sample_connected(i % 4, rng, 20, 200);
    const auto v = prasym::testing::random_preference(g.num_vertices(), rng);
    for (double alpha : {0.15, 0.5, 0.85}) {
      ++chain_instances;
      if (!check_error_chain(g, v, alpha).passed) ++chain_violations;
    }
  }
  double spectral_worst = 0.0;
  for (int i = 0; i < 16; ++i) {
    const Graph g = sample_connected(i % 4, rng, 40, 512);
    const auto v = prasym::testing::random_preference(g.num_vertices(), rng);
    for (double alpha : {0.15, 0.85}) {
      const auto a = pagerank_spectral_form(g, v, alpha);
      const auto b = pagerank_dense(g, v, alpha).pi;
      spectral_worst = std::max(spectral_worst, k::max_abs_diff(a, b));
    }
  }
  Outcome o;
  o.pass = weak_violations == 0 && chain_violations == 0 && spectral_worst <= 1e-8;
  o.detail = "weak-gap violations " + std::to_string(weak_violations) + "/10000, chain violations " +
             std::to_string(chain_violations) + "/" + std::to_string(chain_instances) +
             ", spectral form vs dense " + fmt("%.2e", spectral_worst);
  return o;
}

// 9. Byte-identical CSV across runs and thread counts.
Outcome criterion9() {
  Outcome o;
  int identical = 0;
  int total = 0;
  for (const auto& name : preset_names()) {
    ExperimentConfig cfg = preset(name);
    std::ostringstream first;
    emit_csv(first, sweep(name).records);
    cfg.threads = 3;
    std::ostringstream second;
    const std::string key = std::string(to_string(cfg.model)) + "/" + cfg.preference.tag();
    // Presets sharing a configuration are rerun once.
    static std::map<std::string, std::string> rerun;
    auto it = rerun.find(key);
    if (it == rerun.end()) {
      emit_csv(second, run_experiment(cfg).records);
      it = rerun.emplace(key, second.str()).first;
    }
    ++total;
    if (it->second == first.str()) {
      ++identical;
    } else {
      o.detail += name + " differs; ";
    }
  }
  o.pass = identical == total;
  o.detail += std::to_string(identical) + "/" + std::to_string(total) +
              " presets byte-identical (1 vs 3 threads)";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> allow_red;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg.rfind("--allow-red=", 0) == 0) {
      std::stringstream ss(arg.substr(12));
      std::string item;
      while (std::getline(ss, item, ',')) allow_red.insert(std::stoi(item));
    }
  }
  std::printf("kernels: %s\n", std::string(k::active().name).c_str());

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"oracle equivalence", criterion1},
      {"closed-form fixtures", criterion2},
      {"block-model cross-route", criterion3},
      {"TV error decreases", criterion4},
      {"max relative error decreases", criterion5},
      {"non-convergent regimes", criterion6},
      {"concentration bounds", criterion7},
      {"exact inequalities", criterion8},
      {"determinism", criterion9},
  };
  int unexpected = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i + 1);
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const bool known = !o.pass && allow_red.count(id) > 0;
    if (!o.pass && !known) ++unexpected;
    std::printf("[%s] criterion %d: %s: %s (%.1fs)%s\n", o.pass ? "PASS" : "FAIL", id,
                criteria[i].first.c_str(), o.detail.c_str(), seconds_since(t0),
                known ? " [known red]" : "");
    std::fflush(stdout);
  }
  return unexpected == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
