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

#include "prasym/pagerank.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "prasym/errors.hpp"
#include "prasym/kernels.hpp"

namespace prasym {
namespace {

void check_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0)) {
    throw ParameterError("damping factor must satisfy 0 <= alpha < 1, got " +
                         std::to_string(alpha));
  }
}

void check_size(const Graph& g, const PreferenceVector& v) {
  if (v.size() != g.num_vertices()) {
    throw ParameterError("preference vector length " + std::to_string(v.size()) +
                         " differs from n = " + std::to_string(g.num_vertices()));
  }
}

}  // namespace

PreferenceVector::PreferenceVector(std::vector<double> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw ParameterError("preference vector is empty");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!(entries_[i] >= 0.0) || !std::isfinite(entries_[i])) {
      throw ParameterError("preference entry " + std::to_string(i) + " is negative or not finite");
    }
  }
  const double total = kernels::sum(entries_);
  if (std::fabs(total - 1.0) > 1e-12) {
    throw ParameterError("preference vector sums to " + std::to_string(total) + ", not 1");
  }
}

PreferenceVector PreferenceVector::uniform(std::size_t n) {
  if (n == 0) throw ParameterError("uniform preference needs n >= 1");
  return PreferenceVector(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

PreferenceVector PreferenceVector::point_mass(std::size_t n, std::size_t k) {
  if (k >= n) throw ParameterError("point mass index out of range");
  std::vector<double> v(n, 0.0);
  v[k] = 1.0;
  return PreferenceVector(std::move(v));
}

PreferenceVector PreferenceVector::indicator(std::size_t n, std::size_t begin, std::size_t end) {
  if (begin >= end || end > n) throw ParameterError("indicator range is empty or out of bounds");
  std::vector<double> v(n, 0.0);
  const double mass = 1.0 / static_cast<double>(end - begin);
  std::fill(v.begin() + static_cast<std::ptrdiff_t>(begin),
            v.begin() + static_cast<std::ptrdiff_t>(end), mass);
  return PreferenceVector(std::move(v));
}

std::string_view to_string(PageRankMethod m) {
  switch (m) {
    case PageRankMethod::kPower: return "power";
    case PageRankMethod::kDense: return "dense";
    case PageRankMethod::kSeries: return "series";
    case PageRankMethod::kStationary: return "stationary";
  }
  return "unknown";
}

PageRankResult pagerank_power(const Graph& g, const PreferenceVector& v,
                              const PageRankConfig& cfg) {
  check_alpha(cfg.alpha);
  check_size(g, v);
  if (!(cfg.tol > 0.0)) throw ParameterError("tolerance must be positive");
  const WalkOperator op(g);
  const std::size_t n = g.num_vertices();
  const double alpha = cfg.alpha;

  PageRankResult result;
  result.method = PageRankMethod::kPower;
  std::vector<double> x(v.entries().begin(), v.entries().end());
  std::vector<double> px(n);
  std::vector<double> next(n);
  for (std::size_t it = 1; it <= cfg.max_iter; ++it) {
    op.apply_P(x, px);
    kernels::axpby(alpha, px, 1.0 - alpha, v.entries(), next);
    result.residual = kernels::abs_diff_sum(x, next);
    // At alpha = 0 the iterate is v itself; rescaling would only add rounding.
    if (alpha > 0.0) {
      const double mass = kernels::sum(next);
      for (double& e : next) e /= mass;
    }
    x.swap(next);
    result.iterations = it;
    if (result.residual <= cfg.tol) {
      result.converged = true;
      break;
    }
  }
  result.pi = std::move(x);
  return result;
}

PageRankResult pagerank_dense(const Graph& g, const PreferenceVector& v, double alpha,
                              std::size_t dense_limit) {
  check_alpha(alpha);
  check_size(g, v);
  const Eigen::MatrixXd p = dense_P(g, dense_limit);
  const Eigen::Index n = p.rows();
  const Eigen::MatrixXd lhs = Eigen::MatrixXd::Identity(n, n) - alpha * p;
  const Eigen::VectorXd rhs =
      (1.0 - alpha) * Eigen::Map<const Eigen::VectorXd>(v.entries().data(), n);
  const Eigen::VectorXd pi = lhs.partialPivLu().solve(rhs);

  PageRankResult result;
  result.method = PageRankMethod::kDense;
  result.pi.assign(pi.data(), pi.data() + n);
  const Eigen::VectorXd fixed = alpha * (p * pi) + rhs;
  result.residual = (pi - fixed).lpNorm<1>();
  result.iterations = 1;
  result.converged = true;
  return result;
}

SeriesResult pagerank_series(const Graph& g, const PreferenceVector& v, double alpha,
                             std::size_t k) {
  check_alpha(alpha);
  check_size(g, v);
  const std::size_t n = g.num_vertices();
  SeriesResult out;
  out.partial_sum.assign(n, 0.0);
  std::vector<double> term(v.entries().begin(), v.entries().end());  // αᵗ Pᵗ v
  kernels::axpby(1.0, out.partial_sum, 1.0 - alpha, term, out.partial_sum);
  if (k > 0 && alpha > 0.0) {
    const WalkOperator op(g);
    std::vector<double> next(n);
    for (std::size_t t = 1; t <= k; ++t) {
      op.apply_P(term, next);
      for (double& e : next) e *= alpha;
      term.swap(next);
      kernels::axpby(1.0, out.partial_sum, 1.0 - alpha, term, out.partial_sum);
    }
  }
  out.tail_bound = std::pow(alpha, static_cast<double>(k + 1));
  return out;
}

StationaryResult stationary(const Graph& g) {
  if (g.volume() == 0) throw StructuralError("stationary distribution undefined for vol(G) = 0");
  StationaryResult out;
  const double vol = static_cast<double>(g.volume());
  out.pi.resize(g.num_vertices());
  for (std::size_t i = 0; i < out.pi.size(); ++i) out.pi[i] = g.degree(i) / vol;
  out.connected = is_connected(g);
  return out;
}

}  // namespace prasym
