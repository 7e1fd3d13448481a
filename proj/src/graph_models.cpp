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

#include "prasym/graph_models.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <string>
#include <thread>

#include "prasym/errors.hpp"
#include "prasym/kernels.hpp"
#include "prasym/rng.hpp"

namespace prasym {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ParameterError(std::string(what) + " must lie in [0, 1], got " + std::to_string(p));
  }
}

// Samples every pair i < j with probability prob(i, j). Rows are dealt to
// workers round-robin; each worker owns its rows, so the result is the same
// for any thread count.
template <class Prob>
Graph sample_pairs(std::size_t n, std::uint64_t seed, unsigned threads, const Prob& prob) {
  const CounterRng rng(seed, Stream::kEdges);
  std::vector<std::vector<std::uint32_t>> upper(n);
  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < n; i += stride) {
      auto& row = upper[i];
      const auto ii = static_cast<std::uint32_t>(i);
      for (std::size_t j = i + 1; j < n; ++j) {
        const auto jj = static_cast<std::uint32_t>(j);
        if (rng.uniform(CounterRng::pair(ii, jj)) < prob(i, j)) row.push_back(jj);
      }
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work, t, workers);
    for (auto& th : pool) th.join();
  }
  return Graph::from_upper_rows(n, upper);
}

std::vector<double> geometric_clipped(const GeometricClippedWeights& spec, std::size_t n,
                                      std::uint64_t seed) {
  if (!(spec.target_mean > 0.0) || !std::isfinite(spec.target_mean)) {
    throw ParameterError("geometric_clipped: target mean must be positive");
  }
  if (!(spec.ratio >= 1.0)) throw ParameterError("geometric_clipped: ratio must be >= 1");

  // Geometric on {1, 2, ...} with mean target_mean, by inversion.
  const double theta = std::min(1.0, 1.0 / spec.target_mean);
  const CounterRng rng(seed, Stream::kWeights);
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (theta >= 1.0) {
      x[i] = 1.0;
      continue;
    }
    const double u = 1.0 - rng.uniform(i);  // (0, 1]
    x[i] = 1.0 + std::floor(std::log(u) / std::log1p(-theta));
  }
  const double raw_mean = kernels::sum(x) / static_cast<double>(n);
  for (double& v : x) v *= spec.target_mean / raw_mean;

  auto clipped_mean = [&](double lo) {
    const double hi = spec.ratio * lo;
    double s = 0.0;
    for (double v : x) s += std::clamp(v, lo, hi);
    return s / static_cast<double>(n);
  };
  // clipped_mean is continuous and nondecreasing in L, ~0 near L = 0 and
  // >= target at L = target.
  double lo = 0.0;
  double hi = spec.target_mean;
  for (int it = 0; it < 200 && hi - lo > 1e-15 * spec.target_mean; ++it) {
    const double mid = 0.5 * (lo + hi);
    (clipped_mean(mid) < spec.target_mean ? lo : hi) = mid;
  }
  const double floor_w = hi;
  double ceil_w = spec.ratio * floor_w;
  while (ceil_w / floor_w > spec.ratio) ceil_w = std::nextafter(ceil_w, 0.0);
  for (double& v : x) v = std::clamp(v, floor_w, ceil_w);

  const double mean = kernels::sum(x) / static_cast<double>(n);
  if (std::fabs(mean / spec.target_mean - 1.0) > 0.01) {
    throw ParameterError("geometric_clipped: target mean infeasible under clipping");
  }
  return x;
}

}  // namespace

double power_law_scale(const PowerLawWeights& spec, std::size_t n) {
  const double b = spec.beta;
  return (b - 2.0) / (b - 1.0) * spec.avg_degree *
         std::pow(static_cast<double>(n), 1.0 / (b - 1.0));
}

double power_law_offset(const PowerLawWeights& spec, std::size_t n) {
  const double b = spec.beta;
  const double d = spec.avg_degree;
  const double m = spec.max_degree;
  const double nn = static_cast<double>(n);
  switch (spec.offset) {
    case PowerLawOffset::kVerbatim:
      return nn * (d * (b - 1.0) / (m * (b - 2.0)));
    case PowerLawOffset::kStandard:
      return nn * std::pow(d * (b - 2.0) / (m * (b - 1.0)), b - 1.0);
  }
  return 0.0;
}

std::vector<double> realize_weights(const WeightSpec& spec, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw ParameterError("weight vector needs n >= 1");
  std::vector<double> w = std::visit(
      Overloaded{
          [&](const ConstantWeights& c) {
            if (!(c.w > 0.0)) throw ParameterError("constant weight must be positive");
            return std::vector<double>(n, c.w);
          },
          [&](const GeometricClippedWeights& g) { return geometric_clipped(g, n, seed); },
          [&](const PowerLawWeights& pl) {
            if (!(pl.beta > 2.0)) throw ParameterError("power law requires beta > 2");
            if (!(pl.avg_degree > 0.0) || !(pl.max_degree > 0.0)) {
              throw ParameterError("power law degrees must be positive");
            }
            const double c = power_law_scale(pl, n);
            const double i0 = power_law_offset(pl, n);
            const double expo = -1.0 / (pl.beta - 1.0);
            std::vector<double> out(n);
            for (std::size_t i = 0; i < n; ++i) {
              out[i] = c * std::pow(i0 + static_cast<double>(i + 1), expo);
            }
            return out;
          },
          [&](const ExplicitWeights& e) {
            if (e.w.size() != n) throw ParameterError("explicit weight vector length differs from n");
            return e.w;
          },
      },
      spec);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(w[i] > 0.0) || !std::isfinite(w[i])) {
      throw ParameterError("weight " + std::to_string(i) + " is not a positive finite number");
    }
  }
  return w;
}

void check_weights_feasible(std::span<const double> w) {
  const double total = kernels::sum(w);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!(w[i] > 0.0)) {
      throw ParameterError("weight " + std::to_string(i) + " is not positive");
    }
    if (w[i] * w[i] > total) {
      throw ParameterError("infeasible weights: w[" + std::to_string(i) + "]^2 = " +
                           std::to_string(w[i] * w[i]) + " exceeds sum(w) = " +
                           std::to_string(total));
    }
  }
}

// --- SBM --------------------------------------------------------------------

double SbmParams::w_max() const { return std::max(degree_c1(), degree_c2()); }
double SbmParams::w_min() const { return std::min(degree_c1(), degree_c2()); }

double SbmParams::beta() const {
  if (!(p + q > 0.0)) throw ParameterError("beta undefined for p + q = 0");
  return (p - q) / (p + q);
}

void SbmParams::validate(bool allow_q_above_p) const {
  if (n < 2 || m < 1 || m > n - 1) {
    throw ParameterError("SBM requires 1 <= m <= n-1, got m=" + std::to_string(m) +
                         " n=" + std::to_string(n));
  }
  check_probability(p, "SBM p");
  check_probability(q, "SBM q");
  if (q > p) {
    if (!allow_q_above_p) {
      throw ParameterError("SBM requires q <= p (pass the override to allow q > p)");
    }
    std::cerr << "warning: SBM sampled with q > p; community structure is disassortative\n";
  }
}

SbmExpectation::SbmExpectation(SbmParams params) : params_(params) {
  if (params_.m > params_.n) throw ParameterError("SBM m exceeds n");
}

void SbmExpectation::apply(std::span<const double> x, std::span<double> y) const {
  const std::size_t n = params_.n;
  const std::size_t m = params_.m;
  if (x.size() != n || y.size() != n) throw ParameterError("SBM matvec size mismatch");
  const double s1 = kernels::sum(x.subspan(0, m));
  const double s2 = kernels::sum(x.subspan(m));
  const double a1 = params_.p * s1 + params_.q * s2;
  const double a2 = params_.q * s1 + params_.p * s2;
  std::fill(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(m), a1);
  std::fill(y.begin() + static_cast<std::ptrdiff_t>(m), y.end(), a2);
}

std::vector<double> SbmExpectation::apply(std::span<const double> x) const {
  std::vector<double> y(params_.n);
  apply(x, y);
  return y;
}

std::vector<double> SbmExpectation::expected_degrees() const {
  std::vector<double> w(params_.n, params_.degree_c2());
  std::fill(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(params_.m), params_.degree_c1());
  return w;
}

SbmExpectation expected_adjacency_sbm(const SbmParams& params) {
  params.validate(true);
  return SbmExpectation(params);
}

ChungLuExpectation::ChungLuExpectation(std::vector<double> w) : w_(std::move(w)) {
  total_ = kernels::sum(w_);
  if (!(total_ > 0.0)) throw ParameterError("expected degrees must have positive sum");
}

void ChungLuExpectation::apply(std::span<const double> x, std::span<double> y) const {
  if (x.size() != w_.size() || y.size() != w_.size()) {
    throw ParameterError("Chung-Lu matvec size mismatch");
  }
  const double c = kernels::dot(w_, x) / total_;
  for (std::size_t i = 0; i < w_.size(); ++i) y[i] = c * w_[i];
}

void apply_expected(const ExpectedAdjacency& e, std::span<const double> x, std::span<double> y) {
  std::visit([&](const auto& model) { model.apply(x, y); }, e);
}

std::vector<double> expected_degrees(const ExpectedAdjacency& e) {
  return std::visit([](const auto& model) { return model.expected_degrees(); }, e);
}

double expected_diagonal(const ExpectedAdjacency& e, std::size_t i) {
  return std::visit([i](const auto& model) { return model.diagonal(i); }, e);
}

// --- generators --------------------------------------------------------------

Graph gen_er(std::size_t n, double p, std::uint64_t seed, unsigned threads) {
  if (n < 1) throw ParameterError("gen_er requires n >= 1");
  check_probability(p, "ER edge probability");
  return sample_pairs(n, seed, threads, [p](std::size_t, std::size_t) { return p; });
}

Graph gen_chung_lu(std::span<const double> w, std::uint64_t seed, unsigned threads) {
  if (w.empty()) throw ParameterError("gen_chung_lu requires n >= 1");
  check_weights_feasible(w);
  const double total = kernels::sum(w);
  return sample_pairs(w.size(), seed, threads,
                      [&](std::size_t i, std::size_t j) { return w[i] * w[j] / total; });
}

Graph gen_chung_lu(const WeightSpec& spec, std::size_t n, std::uint64_t seed, unsigned threads) {
  const auto w = realize_weights(spec, n, seed);
  return gen_chung_lu(w, seed, threads);
}

Graph gen_sbm(const SbmParams& params, std::uint64_t seed, unsigned threads,
              bool allow_q_above_p) {
  params.validate(allow_q_above_p);
  const std::size_t m = params.m;
  return sample_pairs(params.n, seed, threads, [&](std::size_t i, std::size_t j) {
    return ((i < m) == (j < m)) ? params.p : params.q;
  });
}

}  // namespace prasym
