// Copyright 2026 The tscramble Authors
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

// First-order reference solver for the steerable weight (ADMM on the
// standard-form conic program). Slow and only moderately accurate, but it
// shares no code with the interior-point solver.

#include <Eigen/Dense>

#include <cmath>
#include <cstddef>
#include <vector>

namespace tscramble::oracle {

struct AdmmResult {
  double mu = 0.0;
  int iterations = 0;
  double residual = 0.0;
};

// members[x][a], 2 x 2 or larger. Variables: one hidden state per strategy
// followed by one slack per (x, a); constraints sum_{lambda(x)=a} s_lambda +
// Z_ax = sigma_ax.
inline AdmmResult admm_steering_weight(const std::vector<std::vector<Eigen::MatrixXcd>>& members,
                                       int max_iter = 200000, double tol = 1e-11) {
  using M = Eigen::MatrixXcd;
  const std::size_t m = members.size();
  const std::size_t o = members[0].size();
  const auto d = members[0][0].rows();
  std::size_t n_lambda = 1;
  for (std::size_t x = 0; x < m; ++x) n_lambda *= o;
  const std::size_t n_rows = m * o;
  const std::size_t n_vars = n_lambda + n_rows;

  Eigen::MatrixXd a0 = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n_rows),
                                             static_cast<Eigen::Index>(n_vars));
  for (std::size_t l = 0; l < n_lambda; ++l) {
    std::size_t rest = l;
    for (std::size_t xi = 0; xi < m; ++xi) {
      const std::size_t x = m - 1 - xi;  // last setting is the least significant digit
      const std::size_t a = rest % o;
      rest /= o;
      a0(static_cast<Eigen::Index>(x * o + a), static_cast<Eigen::Index>(l)) = 1.0;
    }
  }
  for (std::size_t r = 0; r < n_rows; ++r)
    a0(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(n_lambda + r)) = 1.0;
  // Projection coefficients: v - A0^T (A0 A0^T)^{-1} (A0 v - b).
  const Eigen::MatrixXd gram_inv =
      (a0 * a0.transpose()).completeOrthogonalDecomposition().pseudoInverse();
  const Eigen::MatrixXd back = a0.transpose() * gram_inv;

  std::vector<M> b(n_rows);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t a = 0; a < o; ++a) b[x * o + a] = members[x][a];

  auto project_affine = [&](std::vector<M>& v) {
    std::vector<M> res(n_rows);
    for (std::size_t r = 0; r < n_rows; ++r) {
      res[r] = -b[r];
      for (std::size_t j = 0; j < n_vars; ++j) {
        const double c = a0(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(j));
        if (c != 0.0) res[r] += c * v[j];
      }
    }
    for (std::size_t j = 0; j < n_vars; ++j)
      for (std::size_t r = 0; r < n_rows; ++r) {
        const double c = back(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(r));
        if (c != 0.0) v[j] -= c * res[r];
      }
  };
  auto project_psd = [](const M& h) {
    Eigen::SelfAdjointEigenSolver<M> es(0.5 * (h + h.adjoint()));
    const Eigen::VectorXd lam = es.eigenvalues().cwiseMax(0.0);
    return M(es.eigenvectors() * lam.cast<std::complex<double>>().asDiagonal() *
             es.eigenvectors().adjoint());
  };

  const double rho = 1.0;
  const M id = M::Identity(d, d);
  std::vector<M> v(n_vars, M::Zero(d, d)), w(n_vars, M::Zero(d, d)), u(n_vars, M::Zero(d, d));
  AdmmResult out;
  for (int it = 1; it <= max_iter; ++it) {
    for (std::size_t j = 0; j < n_vars; ++j) {
      v[j] = w[j] - u[j];
      if (j < n_lambda) v[j] += id / rho;  // gradient of -sum tr s_lambda
    }
    project_affine(v);
    double primal = 0.0, dual = 0.0;
    for (std::size_t j = 0; j < n_vars; ++j) {
      M next = project_psd(v[j] + u[j]);
      dual = std::max(dual, (next - w[j]).cwiseAbs().maxCoeff());
      w[j] = std::move(next);
      u[j] += v[j] - w[j];
      primal = std::max(primal, (v[j] - w[j]).cwiseAbs().maxCoeff());
    }
    out.iterations = it;
    out.residual = std::max(primal, rho * dual);
    if (out.residual < tol) break;
  }
  out.mu = 0.0;
  for (std::size_t l = 0; l < n_lambda; ++l) out.mu += w[l].trace().real();
  return out;
}

}  // namespace tscramble::oracle
