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

#include "prasym/asymptotics.hpp"

#include <cmath>
#include <string>

#include "prasym/errors.hpp"
#include "prasym/kernels.hpp"

namespace prasym {
namespace {

void check_sbm_inputs(const SbmParams& params, const PreferenceVector& v, double alpha) {
  params.validate(true);
  if (v.size() != params.n) throw ParameterError("preference length differs from SBM n");
  if (!(alpha >= 0.0 && alpha < 1.0)) throw ParameterError("SBM approximation needs 0 <= alpha < 1");
  if (!(params.w_min() > 0.0)) throw ParameterError("SBM expected degrees must be positive");
}

}  // namespace

std::vector<double> approx_mixture(const Graph& g, const PreferenceVector& v, double alpha) {
  if (g.volume() == 0) throw StructuralError("mixture approximation needs vol(G) > 0");
  if (v.size() != g.num_vertices()) throw ParameterError("preference length differs from n");
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw ParameterError("alpha must lie in [0, 1]");
  const double vol = static_cast<double>(g.volume());
  std::vector<double> out(g.num_vertices());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = alpha * (g.degree(i) / vol) + (1.0 - alpha) * v[i];
  }
  return out;
}

SbmApproxStructure sbm_structure(const SbmParams& params, const PreferenceVector& v) {
  if (v.size() != params.n) throw ParameterError("preference length differs from SBM n");
  SbmApproxStructure s;
  s.beta = params.beta();
  const double h = 1.0 / std::sqrt(static_cast<double>(params.n));
  s.u.assign(params.n, -h);
  std::fill(s.u.begin(), s.u.begin() + static_cast<std::ptrdiff_t>(params.m), h);
  s.mass_c1 = kernels::sum(v.entries().subspan(0, params.m));
  s.mass_c2 = kernels::sum(v.entries().subspan(params.m));
  return s;
}

std::vector<double> approx_sbm_general(const SbmParams& params, const PreferenceVector& v,
                                       double alpha) {
  check_sbm_inputs(params, v, alpha);
  const auto st = sbm_structure(params, v);
  const double m1 = static_cast<double>(params.m);
  const double m2 = static_cast<double>(params.n - params.m);
  const double w1 = params.degree_c1();
  const double w2 = params.degree_c2();
  const double p = params.p;
  const double q = params.q;

  // With s_k = Σ_{C_k} π̄_i / w_k, π̄_i = α a_k + (1-α) v_i where
  // a_1 = p s1 + q s2 and a_2 = q s1 + p s2. Summing over each community:
  //   (w1 - α m1 p) s1 - α m1 q s2 = (1-α) V1
  //   -α m2 q s1 + (w2 - α m2 p) s2 = (1-α) V2
  const double a11 = w1 - alpha * m1 * p;
  const double a12 = -alpha * m1 * q;
  const double a21 = -alpha * m2 * q;
  const double a22 = w2 - alpha * m2 * p;
  const double det = a11 * a22 - a12 * a21;
  if (!(std::fabs(det) > 0.0)) throw NumericalError("singular community reduction");
  const double b1 = (1.0 - alpha) * st.mass_c1;
  const double b2 = (1.0 - alpha) * st.mass_c2;
  const double s1 = (b1 * a22 - a12 * b2) / det;
  const double s2 = (a11 * b2 - a21 * b1) / det;
  const double c1 = alpha * (p * s1 + q * s2);
  const double c2 = alpha * (q * s1 + p * s2);

  std::vector<double> out(params.n);
  for (std::size_t i = 0; i < params.n; ++i) {
    out[i] = (i < params.m ? c1 : c2) + (1.0 - alpha) * v[i];
  }
  return out;
}

std::vector<double> approx_sbm_equal(std::size_t n, double p, double q,
                                     const PreferenceVector& v, double alpha) {
  if (n < 2 || n % 2 != 0) throw ParameterError("equal-community SBM needs even n >= 2");
  const SbmParams params{n / 2, n, p, q};
  params.validate(true);
  if (v.size() != n) throw ParameterError("preference length differs from n");
  if (!(alpha >= 0.0 && alpha < 1.0)) throw ParameterError("alpha must lie in [0, 1)");
  const auto st = sbm_structure(params, v);
  const double ab = alpha * st.beta;
  if (!(ab < 1.0)) throw ParameterError("closed form needs alpha * beta < 1");
  const double vu = kernels::dot(v.entries(), st.u);
  const double coef = ab / (1.0 - ab) * vu;
  const double flat = alpha / static_cast<double>(n);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = flat + (1.0 - alpha) * (v[i] + coef * st.u[i]);
  return out;
}

Eigen::MatrixXd dense_average_transition(const SbmParams& params) {
  params.validate(true);
  const auto n = static_cast<Eigen::Index>(params.n);
  const auto m = static_cast<Eigen::Index>(params.m);
  Eigen::MatrixXd a(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = ((i < m) == (j < m)) ? params.p : params.q;
  }
  const Eigen::VectorXd w = a.rowwise().sum();
  return a * w.cwiseInverse().asDiagonal();
}

std::vector<double> approx_sbm_dense(const SbmParams& params, const PreferenceVector& v,
                                     double alpha) {
  check_sbm_inputs(params, v, alpha);
  const Eigen::MatrixXd pbar = dense_average_transition(params);
  const Eigen::Index n = pbar.rows();
  const Eigen::MatrixXd lhs = Eigen::MatrixXd::Identity(n, n) - alpha * pbar;
  const Eigen::VectorXd rhs =
      (1.0 - alpha) * Eigen::Map<const Eigen::VectorXd>(v.entries().data(), n);
  const Eigen::VectorXd x = lhs.partialPivLu().solve(rhs);
  return {x.data(), x.data() + n};
}

std::vector<double> pagerank_spectral_form(const Graph& g, const PreferenceVector& v,
                                           double alpha, std::size_t dense_limit) {
  if (v.size() != g.num_vertices()) throw ParameterError("preference length differs from graph");
  if (!(alpha >= 0.0 && alpha < 1.0)) throw ParameterError("spectral form needs 0 <= alpha < 1");
  if (g.min_degree() == 0) throw StructuralError("spectral form needs every degree positive");
  const DenseSpectrum spec = dense_spectrum(g, dense_limit);
  const auto n = static_cast<Eigen::Index>(g.num_vertices());
  Eigen::VectorXd sqrt_d(n);
  for (Eigen::Index i = 0; i < n; ++i) sqrt_d(i) = std::sqrt(static_cast<double>(g.degree(i)));
  const Eigen::VectorXd x =
      Eigen::Map<const Eigen::VectorXd>(v.entries().data(), n).cwiseQuotient(sqrt_d);
  const Eigen::VectorXd coeff = spec.eigenvectors.transpose() * x;
  Eigen::VectorXd scaled(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    scaled(k) = coeff(k) / (1.0 - alpha * spec.eigenvalues[static_cast<std::size_t>(k)]);
  }
  const Eigen::VectorXd pi = (1.0 - alpha) * sqrt_d.cwiseProduct(spec.eigenvectors * scaled);
  return {pi.data(), pi.data() + n};
}

std::vector<double> error_vector(std::span<const double> pi, std::span<const double> pibar) {
  if (pi.size() != pibar.size()) throw ParameterError("error_vector: length mismatch");
  std::vector<double> out(pi.size());
  kernels::axpby(1.0, pi, -1.0, pibar, out);
  return out;
}

}  // namespace prasym
