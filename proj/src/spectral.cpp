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

#include "prasym/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "prasym/errors.hpp"
#include "prasym/kernels.hpp"
#include "prasym/rng.hpp"

namespace prasym {
namespace {

void require_no_isolated(const Graph& g) {
  if (g.num_vertices() == 0) throw StructuralError("empty graph");
  if (g.min_degree() == 0) {
    const auto d = g.degrees();
    const auto it = std::find(d.begin(), d.end(), 0u);
    throw StructuralError("isolated vertex " + std::to_string(it - d.begin()) +
                          " makes D^-1 undefined");
  }
}

void require_dense(std::size_t n, std::size_t limit) {
  if (n > limit) {
    throw SizeError("dense route limited to n <= " + std::to_string(limit) + ", got " +
                    std::to_string(n));
  }
}

double norm2(std::span<const double> x) { return std::sqrt(kernels::sq_sum(x)); }

void scale(std::span<double> x, double s) {
  for (double& v : x) v *= s;
}

// Power iteration on op² with a rolling relative-change window and a
// residual certificate. `project` (optional) restricts the iteration to an
// invariant subspace.
SpectralEstimate power_squared(const SymmetricOperator& op, std::size_t n,
                               const SpectralOptions& opts,
                               const std::function<void(std::span<double>)>& project) {
  constexpr int kStableWindow = 5;
  SpectralEstimate est;
  if (n == 0) {
    est.converged = true;
    return est;
  }
  const CounterRng rng(opts.seed, Stream::kStartVector);
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = 2.0 * rng.uniform(i) - 1.0;
  if (project) project(x);
  double nx = norm2(x);
  if (nx == 0.0) {
    est.converged = true;
    return est;
  }
  scale(x, 1.0 / nx);

  std::vector<double> y(n);
  std::vector<double> z(n);
  std::vector<double> r(n);
  double mu_prev = -1.0;
  int stable = 0;
  for (std::size_t it = 1; it <= opts.max_iter; ++it) {
    op(x, y);
    if (project) project(y);
    op(y, z);
    if (project) project(z);
    const double mu = kernels::sq_sum(y);  // xᵀ op² x with ||x|| = 1
    est.iterations = it;
    est.value = std::sqrt(mu);
    if (mu <= std::numeric_limits<double>::min()) {
      est.value = 0.0;
      est.residual = 0.0;
      est.converged = true;
      return est;
    }
    kernels::axpby(1.0, z, -mu, x, r);
    est.residual = norm2(r) / mu;
    const double change = mu_prev < 0.0 ? std::numeric_limits<double>::infinity()
                                        : std::fabs(mu - mu_prev) / mu;
    stable = change <= opts.tol ? stable + 1 : 0;
    mu_prev = mu;
    if (stable >= kStableWindow && est.residual <= opts.tol) {
      est.converged = true;
      return est;
    }
    const double nz = norm2(z);
    if (nz == 0.0) break;
    for (std::size_t i = 0; i < n; ++i) x[i] = z[i] / nz;
  }
  return est;
}

}  // namespace

WalkOperator::WalkOperator(const Graph& g) : graph_(&g) {
  require_no_isolated(g);
  const std::size_t n = g.num_vertices();
  inv_degree_.resize(n);
  inv_sqrt_degree_.resize(n);
  perron_.resize(n);
  scratch_.resize(n);
  const double inv_sqrt_vol = 1.0 / std::sqrt(static_cast<double>(g.volume()));
  for (std::size_t i = 0; i < n; ++i) {
    const double d = g.degree(i);
    inv_degree_[i] = 1.0 / d;
    inv_sqrt_degree_[i] = 1.0 / std::sqrt(d);
    perron_[i] = std::sqrt(d) * inv_sqrt_vol;
  }
}

void WalkOperator::apply_P(std::span<const double> x, std::span<double> y) const {
  if (x.size() != size() || y.size() != size()) throw ParameterError("matvec size mismatch");
  kernels::hadamard(x, inv_degree_, scratch_);
  kernels::gather_row_sums(graph_->offsets(), graph_->targets(), scratch_, y);
}

void WalkOperator::apply_Q(std::span<const double> x, std::span<double> y) const {
  if (x.size() != size() || y.size() != size()) throw ParameterError("matvec size mismatch");
  kernels::hadamard(x, inv_sqrt_degree_, scratch_);
  kernels::gather_row_sums(graph_->offsets(), graph_->targets(), scratch_, y);
  kernels::hadamard(y, inv_sqrt_degree_, y);
}

void WalkOperator::project_out_perron(std::span<double> x) const {
  // Twice: classical Gram-Schmidt loses orthogonality once per pass.
  for (int pass = 0; pass < 2; ++pass) {
    const double c = kernels::dot(perron_, x);
    kernels::axpby(1.0, x, -c, perron_, x);
  }
}

void WalkOperator::apply_Q_deflated(std::span<const double> x, std::span<double> y) const {
  apply_Q(x, y);
  const double c = kernels::dot(perron_, x);
  kernels::axpby(1.0, y, -c, perron_, y);
  project_out_perron(y);
}

std::vector<double> matvec_P(const Graph& g, std::span<const double> x) {
  WalkOperator op(g);
  std::vector<double> y(g.num_vertices());
  op.apply_P(x, y);
  return y;
}

std::vector<double> matvec_Q(const Graph& g, std::span<const double> x) {
  WalkOperator op(g);
  std::vector<double> y(g.num_vertices());
  op.apply_Q(x, y);
  return y;
}

std::vector<double> perron_vector(const Graph& g) {
  if (g.volume() == 0) throw StructuralError("Perron vector undefined for vol(G) = 0");
  const double inv_sqrt_vol = 1.0 / std::sqrt(static_cast<double>(g.volume()));
  std::vector<double> u(g.num_vertices());
  for (std::size_t i = 0; i < u.size(); ++i) u[i] = std::sqrt(double(g.degree(i))) * inv_sqrt_vol;
  return u;
}

SpectralEstimate second_eigenvalue_magnitude(const Graph& g, const SpectralOptions& opts) {
  WalkOperator op(g);
  return power_squared(
      [&op](std::span<const double> x, std::span<double> y) { op.apply_Q_deflated(x, y); },
      g.num_vertices(), opts, [&op](std::span<double> x) { op.project_out_perron(x); });
}

SpectralEstimate spectral_norm_sym(const SymmetricOperator& op, std::size_t n,
                                   const SpectralOptions& opts) {
  return power_squared(op, n, opts, {});
}

Eigen::MatrixXd dense_adjacency(const Graph& g, std::size_t dense_limit) {
  const std::size_t n = g.num_vertices();
  require_dense(n, dense_limit);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::uint32_t j : g.neighbors(i)) a(static_cast<Eigen::Index>(i), j) = 1.0;
  }
  return a;
}

Eigen::MatrixXd dense_P(const Graph& g, std::size_t dense_limit) {
  require_no_isolated(g);
  Eigen::MatrixXd a = dense_adjacency(g, dense_limit);
  for (Eigen::Index j = 0; j < a.cols(); ++j) a.col(j) /= static_cast<double>(g.degree(j));
  return a;
}

Eigen::MatrixXd dense_Q(const Graph& g, std::size_t dense_limit) {
  require_no_isolated(g);
  Eigen::MatrixXd a = dense_adjacency(g, dense_limit);
  Eigen::VectorXd s(a.rows());
  for (Eigen::Index i = 0; i < a.rows(); ++i) s(i) = 1.0 / std::sqrt(double(g.degree(i)));
  return s.asDiagonal() * a * s.asDiagonal();
}

DenseSpectrum dense_spectrum(const Graph& g, std::size_t dense_limit) {
  const Eigen::MatrixXd q = dense_Q(g, dense_limit);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(q);
  if (solver.info() != Eigen::Success) throw NumericalError("dense eigensolver failed");
  const Eigen::Index n = q.rows();
  DenseSpectrum out;
  out.eigenvalues.resize(static_cast<std::size_t>(n));
  out.eigenvectors.resize(n, n);
  // Eigen returns ascending order.
  for (Eigen::Index k = 0; k < n; ++k) {
    out.eigenvalues[static_cast<std::size_t>(k)] = solver.eigenvalues()(n - 1 - k);
    out.eigenvectors.col(k) = solver.eigenvectors().col(n - 1 - k);
  }
  return out;
}

double dense_spectral_norm(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalError("dense eigensolver failed");
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace prasym
