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

#include "prasym/verifiers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "prasym/errors.hpp"
#include "prasym/kernels.hpp"

namespace prasym {
namespace {

std::string join_flags(std::string a, const std::string& b) {
  if (b.empty()) return a;
  if (a.empty()) return b;
  return a + ";" + b;
}

double log_n(std::size_t n) { return std::log(static_cast<double>(n)); }

void require_size(const Graph& g, std::size_t n, const char* what) {
  if (g.num_vertices() != n) {
    throw ParameterError(std::string(what) + ": size differs from the graph's vertex count");
  }
}

}  // namespace

BoundCheck make_check(std::string name, double measured, double bound, double constant,
                      std::size_t n, std::string flags) {
  BoundCheck c;
  c.name = std::move(name);
  c.measured = measured;
  c.bound = bound;
  c.constant_used = constant;
  c.passed = measured <= bound;
  c.n = n;
  c.flags = std::move(flags);
  return c;
}

BoundCheck check_degree_concentration(const Graph& g, std::span<const double> w, double C) {
  require_size(g, w.size(), "expected degrees");
  double worst = 0.0;
  double w_min = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!(w[i] > 0.0)) throw ParameterError("expected degree " + std::to_string(i) + " is not positive");
    worst = std::max(worst, std::fabs(g.degree(i) / w[i] - 1.0));
    w_min = std::min(w_min, w[i]);
  }
  const double bound = C * std::sqrt(log_n(w.size()) / w_min);
  return make_check("degree_concentration", worst, bound, C, g.num_vertices(),
                    bound >= 1.0 ? "uninformative" : "");
}

BoundCheck check_degree_ratio(const Graph& g, double K) {
  if (g.num_vertices() == 0 || g.min_degree() == 0) {
    throw StructuralError("degree ratio undefined with an isolated vertex");
  }
  const double ratio = static_cast<double>(g.max_degree()) / g.min_degree();
  return make_check("degree_ratio", ratio, K, K, g.num_vertices());
}

BoundCheck check_spectral_expansion(const Graph& g, double threshold, const SpectralOptions& opts) {
  const auto est = second_eigenvalue_magnitude(g, opts);
  return make_check("spectral_expansion", est.value, threshold, threshold, g.num_vertices(),
                    est.converged ? "" : "unconverged");
}

BoundCheck check_adjacency_norm(const Graph& g, const ExpectedAdjacency& expected, double K,
                                const SpectralOptions& opts, bool zero_diagonal) {
  const std::size_t n = g.num_vertices();
  const auto w = expected_degrees(expected);
  require_size(g, w.size(), "expected adjacency");
  std::vector<double> diag;
  if (zero_diagonal) {
    diag.resize(n);
    for (std::size_t i = 0; i < n; ++i) diag[i] = expected_diagonal(expected, i);
  }
  std::vector<double> abar_x(n);
  auto op = [&](std::span<const double> x, std::span<double> y) {
    kernels::gather_row_sums(g.offsets(), g.targets(), x, y);
    apply_expected(expected, x, abar_x);
    kernels::axpby(1.0, y, -1.0, abar_x, y);
    if (zero_diagonal) {
      for (std::size_t i = 0; i < n; ++i) y[i] += diag[i] * x[i];
    }
  };
  const auto est = spectral_norm_sym(op, n, opts);
  const double w_max = *std::max_element(w.begin(), w.end());
  const double bound = K * std::sqrt(log_n(n) * w_max);
  return make_check("adjacency_norm", est.value, bound, K, n,
                    est.converged ? "" : "unconverged");
}

BoundCheck check_adjacency_norm(const Graph& g, const SbmParams& params, double K,
                                const SpectralOptions& opts, bool zero_diagonal) {
  return check_adjacency_norm(g, ExpectedAdjacency{expected_adjacency_sbm(params)}, K, opts,
                              zero_diagonal);
}

BoundCheck check_q_norm(const Graph& g, const ExpectedAdjacency& expected, double C,
                        const SpectralOptions& opts) {
  const WalkOperator walk(g);
  const std::size_t n = g.num_vertices();
  const auto w = expected_degrees(expected);
  require_size(g, w.size(), "expected adjacency");
  std::vector<double> inv_sqrt_w(n);
  for (std::size_t i = 0; i < n; ++i) inv_sqrt_w[i] = 1.0 / std::sqrt(w[i]);
  std::vector<double> t(n);
  std::vector<double> u(n);
  auto op = [&](std::span<const double> x, std::span<double> y) {
    walk.apply_Q(x, y);
    kernels::hadamard(x, inv_sqrt_w, t);
    apply_expected(expected, t, u);
    kernels::hadamard(u, inv_sqrt_w, u);
    kernels::axpby(1.0, y, -1.0, u, y);
  };
  const auto est = spectral_norm_sym(op, n, opts);
  const auto [lo, hi] = std::minmax_element(w.begin(), w.end());
  const double bound = C * std::sqrt(log_n(n) * *hi) / *lo;
  return make_check("normalized_adjacency_norm", est.value, bound, C, n,
                    est.converged ? "" : "unconverged");
}

BoundCheck check_q_norm(const Graph& g, std::span<const double> w, double C,
                        const SpectralOptions& opts) {
  return check_q_norm(g, ExpectedAdjacency{ChungLuExpectation({w.begin(), w.end()})}, C, opts);
}

BoundCheck check_qtilde_vprime(const Graph& g, const PreferenceVector& v, double w_min,
                               double ratio_threshold) {
  require_size(g, v.size(), "preference vector");
  if (!(w_min > 0.0)) throw ParameterError("w_min must be positive");
  const WalkOperator walk(g);
  const std::size_t n = g.num_vertices();
  std::vector<double> vprime(n);
  kernels::hadamard(v.entries(), walk.inv_sqrt_degree(), vprime);
  for (double& x : vprime) x *= static_cast<double>(n);
  std::vector<double> y(n);
  walk.apply_Q(vprime, y);
  const double c = kernels::dot(walk.perron(), vprime);
  kernels::axpby(1.0, y, -c, walk.perron(), y);
  const double measured = kernels::max_abs(y);
  return make_check("deflated_vprime", measured, ratio_threshold / std::sqrt(w_min),
                    ratio_threshold, n);
}

BoundCheck check_s_infty_norm(const Graph& g, double alpha, double tol) {
  if (!(alpha >= 0.0 && alpha < 1.0)) throw ParameterError("resolvent needs 0 <= alpha < 1");
  const WalkOperator walk(g);
  const std::size_t n = g.num_vertices();
  const auto u1 = walk.perron();

  // 1 = c u1 + r with r ⟂ u1. S u1 = u1/(1-α); S r solves y = r + αQ̃y,
  // which contracts at rate α max(|λ2|, |λn|).
  const std::vector<double> ones(n, 1.0);
  const double c = kernels::dot(u1, ones);
  std::vector<double> r(n);
  kernels::axpby(1.0, ones, -c, u1, r);
  walk.project_out_perron(r);
  std::vector<double> y = r;
  std::vector<double> qy(n);
  std::vector<double> next(n);
  bool converged = false;
  constexpr std::size_t kMaxIter = 100000;
  for (std::size_t it = 0; it < kMaxIter; ++it) {
    walk.apply_Q_deflated(y, qy);
    kernels::axpby(1.0, r, alpha, qy, next);
    const double change = kernels::max_abs_diff(next, y);
    y.swap(next);
    if (change <= tol * std::max(1.0, kernels::max_abs(y))) {
      converged = true;
      break;
    }
  }
  kernels::axpby(1.0, y, c / (1.0 - alpha), u1, y);
  double measured = 0.0;
  for (double v : y) measured = std::max(measured, v);
  const double bound =
      std::sqrt(static_cast<double>(g.max_degree()) / g.min_degree()) / (1.0 - alpha);
  return make_check("resolvent_inf_norm", measured, bound, 1.0 / (1.0 - alpha), n,
                    converged ? "" : "unconverged");
}

double s_infty_norm_dense(const Graph& g, double alpha) {
  const Eigen::MatrixXd q = dense_Q(g);
  const Eigen::Index n = q.rows();
  const Eigen::MatrixXd s = (Eigen::MatrixXd::Identity(n, n) - alpha * q).inverse();
  return s.cwiseAbs().rowwise().sum().maxCoeff();
}

BoundCheck check_error_chain(const Graph& g, const PreferenceVector& v, double alpha) {
  const auto exact = pagerank_dense(g, v, alpha);
  const double vol = static_cast<double>(g.volume());
  double l1 = 0.0;
  for (std::size_t i = 0; i < exact.pi.size(); ++i) {
    const double pibar = alpha * g.degree(i) / vol + (1.0 - alpha) * v[i];
    l1 += std::fabs(exact.pi[i] - pibar);
  }
  const auto spec = dense_spectrum(g);
  double worst = 0.0;
  for (std::size_t i = 1; i < spec.eigenvalues.size(); ++i) {
    const double al = alpha * spec.eigenvalues[i];
    worst = std::max(worst, std::fabs(al / (1.0 - al)));
  }
  const double n = static_cast<double>(g.num_vertices());
  const double ratio = static_cast<double>(g.max_degree()) / g.min_degree();
  const double bound =
      std::sqrt(ratio) * std::sqrt(n) * worst * std::sqrt(kernels::sq_sum(v.entries()));
  return make_check("error_chain", l1 / (1.0 - alpha), bound, 1.0, g.num_vertices());
}

BoundCheck check_weyl(const Graph& g, const ExpectedAdjacency& expected) {
  const Eigen::MatrixXd q = dense_Q(g);
  const Eigen::Index n = q.rows();
  const auto w = expected_degrees(expected);
  require_size(g, w.size(), "expected adjacency");
  Eigen::MatrixXd qbar(n, n);
  std::vector<double> e(static_cast<std::size_t>(n));
  std::vector<double> col(static_cast<std::size_t>(n));
  for (Eigen::Index j = 0; j < n; ++j) {
    std::fill(e.begin(), e.end(), 0.0);
    e[static_cast<std::size_t>(j)] = 1.0;
    apply_expected(expected, e, col);
    for (Eigen::Index i = 0; i < n; ++i) {
      qbar(i, j) = col[static_cast<std::size_t>(i)] /
                   std::sqrt(w[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(j)]);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> sq(q, Eigen::EigenvaluesOnly);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> sqbar(qbar, Eigen::EigenvaluesOnly);
  const double shift = (sq.eigenvalues() - sqbar.eigenvalues()).cwiseAbs().maxCoeff();
  const double norm = dense_spectral_norm(q - qbar);
  // Rounding in the two eigensolvers is the only slack.
  return make_check("weyl", shift, norm + 1e-12, 1.0, g.num_vertices());
}

double bernstein_tail(double B2, double b, double eps) {
  if (B2 < 0.0 || !(b > 0.0) || !(eps > 0.0)) {
    throw ParameterError("bernstein_tail needs B2 >= 0, b > 0, eps > 0");
  }
  return 2.0 * std::exp(-eps * eps / (2.0 * (B2 + b * eps / 3.0)));
}

double matrix_bernstein_tail(double sigma2, double R, double t, double d1, double d2) {
  if (sigma2 < 0.0 || R < 0.0 || t < 0.0 || d1 < 0.0 || d2 < 0.0) {
    throw ParameterError("matrix_bernstein_tail needs nonnegative arguments");
  }
  if (t == 0.0) return d1 + d2;
  return (d1 + d2) * std::exp(-(t * t / 2.0) / (sigma2 + R * t / 3.0));
}

bool is_gating_check(std::string_view name) {
  return name == "degree_concentration" || name == "adjacency_norm" ||
         name == "normalized_adjacency_norm" || name == "resolvent_inf_norm";
}

std::vector<BoundCheck> run_bound_suite(const Graph& g, const ExpectedAdjacency& expected,
                                        const PreferenceVector& v, const BoundConstants& k,
                                        std::uint64_t seed) {
  const auto w = expected_degrees(expected);
  const double w_min = *std::min_element(w.begin(), w.end());
  const double w_bar = kernels::sum(w) / static_cast<double>(w.size());
  SpectralOptions opts = k.spectral;
  opts.seed = seed;

  std::vector<BoundCheck> out;
  out.push_back(check_degree_concentration(g, w, k.concentration_C));
  if (g.min_degree() == 0) {
    // The walk operators are undefined; record the structural failure.
    out.push_back(make_check("degree_ratio", std::numeric_limits<double>::infinity(),
                             k.degree_ratio_K, k.degree_ratio_K, g.num_vertices(),
                             "isolated_vertex"));
  } else {
    out.push_back(check_degree_ratio(g, k.degree_ratio_K));
    if (!std::holds_alternative<SbmExpectation>(expected)) {
      out.push_back(
          check_spectral_expansion(g, k.expansion_slack * 2.0 / std::sqrt(w_bar), opts));
    }
    out.push_back(check_q_norm(g, expected, k.q_norm_C, opts));
    out.push_back(check_qtilde_vprime(g, v, w_min, k.vprime_ratio));
    out.push_back(check_s_infty_norm(g, k.alpha));
  }
  out.push_back(check_adjacency_norm(g, expected, k.adjacency_K, opts));
  for (auto& c : out) {
    c.seed = seed;
    if (!is_connected(g)) c.flags = join_flags(c.flags, "disconnected");
  }
  return out;
}

}  // namespace prasym
