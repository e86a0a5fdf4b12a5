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


#include "tscramble/sdp.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iostream>
#include <limits>
#include <sstream>

namespace tscramble {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kInvSqrt2 = 0.7071067811865476;
constexpr double kDegenerateTrace = 1e-12;

enum class Kind : unsigned char { Diag, Re, Im };

struct BasisEntry {
  Eigen::Index k;
  Eigen::Index l;
  Kind kind;
};

// Column-by-column: for l, rows k <= l; the diagonal, then a (Re, Im) pair
// for every strictly upper entry.
std::vector<BasisEntry> make_basis(std::size_t d) {
  std::vector<BasisEntry> out;
  out.reserve(d * d);
  const auto n = static_cast<Eigen::Index>(d);
  for (Eigen::Index l = 0; l < n; ++l) {
    for (Eigen::Index k = 0; k < l; ++k) {
      out.push_back({k, l, Kind::Re});
      out.push_back({k, l, Kind::Im});
    }
    out.push_back({l, l, Kind::Diag});
  }
  return out;
}

// Coordinates of Herm(Z) = (Z + Z^dag)/2, i.e. Re tr(E_p Z), written to out.
template <class Out>
void pack_herm(const ComplexMatrix& z, const std::vector<BasisEntry>& basis, Out&& out) {
  for (std::size_t p = 0; p < basis.size(); ++p) {
    const auto [k, l, kind] = basis[p];
    switch (kind) {
      case Kind::Diag: out[static_cast<Eigen::Index>(p)] = z(k, k).real(); break;
      case Kind::Re:
        out[static_cast<Eigen::Index>(p)] = (z(k, l).real() + z(l, k).real()) * kInvSqrt2;
        break;
      case Kind::Im:
        out[static_cast<Eigen::Index>(p)] = (z(k, l).imag() - z(l, k).imag()) * kInvSqrt2;
        break;
    }
  }
}

template <class In>
ComplexMatrix unpack_into(const In& v, const std::vector<BasisEntry>& basis, std::size_t d) {
  const auto n = static_cast<Eigen::Index>(d);
  ComplexMatrix h = ComplexMatrix::Zero(n, n);
  for (std::size_t p = 0; p < basis.size(); ++p) {
    const auto [k, l, kind] = basis[p];
    const double x = v[static_cast<Eigen::Index>(p)];
    switch (kind) {
      case Kind::Diag: h(k, k) += x; break;
      case Kind::Re:
        h(k, l) += x * kInvSqrt2;
        h(l, k) += x * kInvSqrt2;
        break;
      case Kind::Im:
        h(k, l) += Complex(0.0, x * kInvSqrt2);
        h(l, k) -= Complex(0.0, x * kInvSqrt2);
        break;
    }
  }
  return h;
}

ComplexMatrix herm(const ComplexMatrix& z) { return 0.5 * (z + z.adjoint()); }

double re_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  // Re tr(a b) for Hermitian a, b
  return (a.cwiseProduct(b.transpose())).sum().real();
}

// K(P, Q)_pq = Re tr(E_p P E_q Q)
Eigen::MatrixXd schur_block(const ComplexMatrix& p, const ComplexMatrix& q,
                            const std::vector<BasisEntry>& basis) {
  const auto n2 = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXd out(n2, n2);
  ComplexMatrix z(p.rows(), p.cols());
  for (Eigen::Index c = 0; c < n2; ++c) {
    const auto [k, l, kind] = basis[static_cast<std::size_t>(c)];
    switch (kind) {
      case Kind::Diag: z.noalias() = p.col(k) * q.row(k); break;
      case Kind::Re:
        z.noalias() = kInvSqrt2 * (p.col(k) * q.row(l));
        z.noalias() += kInvSqrt2 * (p.col(l) * q.row(k));
        break;
      case Kind::Im:
        z.noalias() = Complex(0.0, kInvSqrt2) * (p.col(k) * q.row(l));
        z.noalias() -= Complex(0.0, kInvSqrt2) * (p.col(l) * q.row(k));
        break;
    }
    pack_herm(z, basis, out.col(c));
  }
  return out;
}

// Largest alpha with x + alpha dx ⪰ 0 (infinity if unbounded). Returns a
// negative value if x itself is not positive definite.
double max_step(const ComplexMatrix& x, const ComplexMatrix& dx) {
  Eigen::LLT<ComplexMatrix> llt(x);
  if (llt.info() != Eigen::Success) return -1.0;
  const ComplexMatrix linv_dx = llt.matrixL().solve(dx);
  const ComplexMatrix w = llt.matrixL().solve(linv_dx.adjoint()).adjoint();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(herm(w), Eigen::EigenvaluesOnly);
  const double lmin = es.eigenvalues().minCoeff();
  return lmin < 0.0 ? -1.0 / lmin : std::numeric_limits<double>::infinity();
}

}  // namespace

namespace svec {

RealVector pack(const ComplexMatrix& h) {
  const auto basis = make_basis(static_cast<std::size_t>(h.rows()));
  RealVector v(static_cast<Eigen::Index>(basis.size()));
  pack_herm(h, basis, v);
  return v;
}

ComplexMatrix unpack(const RealVector& v, std::size_t d) {
  if (static_cast<std::size_t>(v.size()) != d * d) {
    throw std::invalid_argument("svec::unpack: length is not d^2");
  }
  return unpack_into(v, make_basis(d), d);
}

}  // namespace svec

const char* to_string(SdpStatus status) {
  switch (status) {
    case SdpStatus::Optimal: return "optimal";
    case SdpStatus::MaxIter: return "max-iter";
    case SdpStatus::Infeasible: return "infeasible";
    case SdpStatus::NumericalError: return "numerical-error";
  }
  return "unknown";
}

void LmiProblem::validate() const {
  if (dim == 0) throw std::invalid_argument("LmiProblem: zero dimension");
  if (objective.empty() || blocks.empty()) throw std::invalid_argument("LmiProblem: empty problem");
  const auto d = static_cast<Eigen::Index>(dim);
  for (const auto& b : objective) {
    if (b.rows() != d || b.cols() != d || !is_hermitian(b, 1e-12 * std::max(1.0, max_abs(b)))) {
      throw std::invalid_argument("LmiProblem: objective blocks must be Hermitian d x d");
    }
  }
  std::vector<bool> used(objective.size(), false);
  for (const auto& blk : blocks) {
    if (blk.constant.rows() != d || blk.constant.cols() != d || !is_hermitian(blk.constant, 1e-12)) {
      throw std::invalid_argument("LmiProblem: constraint constants must be Hermitian d x d");
    }
    for (const auto& [j, c] : blk.terms) {
      if (j >= objective.size()) throw std::invalid_argument("LmiProblem: term index out of range");
      if (!std::isfinite(c)) throw std::invalid_argument("LmiProblem: non-finite coefficient");
      used[j] = true;
    }
  }
  if (std::find(used.begin(), used.end(), false) != used.end()) {
    throw std::invalid_argument("LmiProblem: a variable appears in no constraint");
  }
}

LmiSolution solve_lmi(const LmiProblem& problem, const SdpOptions& options, double objective_scale) {
  problem.validate();
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t d = problem.dim;
  const auto dd = static_cast<Eigen::Index>(d);
  const std::size_t nv = problem.n_vars();
  const std::size_t nb = problem.blocks.size();
  const auto basis = make_basis(d);
  const auto n2 = static_cast<Eigen::Index>(basis.size());
  const Eigen::Index ny = n2 * static_cast<Eigen::Index>(nv);
  const double total_dim = static_cast<double>(nb * d);
  if (static_cast<double>(ny) * static_cast<double>(ny) * sizeof(double) > options.max_schur_bytes) {
    LmiSolution refused;
    refused.status = SdpStatus::NumericalError;
    std::ostringstream msg;
    msg << "Newton system of order " << ny << " exceeds the memory limit of "
        << options.max_schur_bytes / (1024.0 * 1024.0) << " MiB";
    refused.message = msg.str();
    return refused;
  }

  RealVector b(ny);
  for (std::size_t j = 0; j < nv; ++j) {
    pack_herm(problem.objective[j], basis, b.segment(static_cast<Eigen::Index>(j) * n2, n2));
  }
  double c_norm2 = 0.0;
  for (const auto& blk : problem.blocks) c_norm2 += blk.constant.squaredNorm();
  const double b_norm = b.norm();
  const double c_norm = std::sqrt(c_norm2);

  auto apply_a = [&](const std::vector<ComplexMatrix>& blocks_in) {
    RealVector out = RealVector::Zero(ny);
    RealVector tmp(n2);
    for (std::size_t k = 0; k < nb; ++k) {
      pack_herm(blocks_in[k], basis, tmp);
      for (const auto& [j, c] : problem.blocks[k].terms) {
        out.segment(static_cast<Eigen::Index>(j) * n2, n2) += c * tmp;
      }
    }
    return out;
  };
  auto apply_at = [&](const RealVector& v) {
    std::vector<ComplexMatrix> mats(nv);
    for (std::size_t j = 0; j < nv; ++j) {
      mats[j] = unpack_into(v.segment(static_cast<Eigen::Index>(j) * n2, n2), basis, d);
    }
    std::vector<ComplexMatrix> out(nb, ComplexMatrix::Zero(dd, dd));
    for (std::size_t k = 0; k < nb; ++k)
      for (const auto& [j, c] : problem.blocks[k].terms) out[k] += c * mats[j];
    return out;
  };

  // infeasible start on the central ray
  double scale0 = 1.0;
  for (const auto& bj : problem.objective) scale0 = std::max(scale0, max_abs(bj));
  for (const auto& blk : problem.blocks) scale0 = std::max(scale0, max_abs(blk.constant));
  const double xi = std::max(1.0, std::sqrt(static_cast<double>(d)) * scale0);
  std::vector<ComplexMatrix> x(nb, xi * ComplexMatrix::Identity(dd, dd));
  std::vector<ComplexMatrix> s(nb, xi * ComplexMatrix::Identity(dd, dd));
  RealVector y = RealVector::Zero(ny);

  LmiSolution sol;
  sol.status = SdpStatus::MaxIter;
  Eigen::MatrixXd m;
  int it = 0;
  for (;; ++it) {
    const std::vector<ComplexMatrix> aty = apply_at(y);
    std::vector<ComplexMatrix> rd(nb);
    double rd_norm2 = 0.0;
    for (std::size_t k = 0; k < nb; ++k) {
      rd[k] = problem.blocks[k].constant - s[k] - aty[k];
      rd_norm2 += rd[k].squaredNorm();
    }
    const RealVector rp = b - apply_a(x);
    double pobj = 0.0, xs = 0.0;
    for (std::size_t k = 0; k < nb; ++k) {
      pobj += re_inner(problem.blocks[k].constant, x[k]);
      xs += re_inner(x[k], s[k]);
    }
    const double dobj = b.dot(y);
    const double mu = xs / total_dim;
    const double pinf = rp.norm() / (1.0 + b_norm);
    const double dinf = std::sqrt(rd_norm2) / (1.0 + c_norm);
    const double gap = std::max(std::abs(pobj - dobj), std::abs(xs)) / objective_scale;
    sol.stats = {it, pinf, dinf, gap, 0.0};
    sol.primal_objective = pobj;
    sol.dual_objective = dobj;
    if (options.verbose) {
      std::cerr << "  ipm " << it << " pobj " << pobj << " dobj " << dobj << " gap " << gap
                << " pinf " << pinf << " dinf " << dinf << '\n';
    }
    if (pinf <= options.feas_tol && dinf <= options.feas_tol && gap <= options.gap_tol) {
      sol.status = SdpStatus::Optimal;
      break;
    }
    if (it >= options.max_iter) break;
    if (!std::isfinite(pobj) || !std::isfinite(dobj)) {
      sol.status = SdpStatus::NumericalError;
      break;
    }

    std::vector<ComplexMatrix> sinv(nb);
    bool ok = true;
    for (std::size_t k = 0; k < nb && ok; ++k) {
      Eigen::LLT<ComplexMatrix> llt(s[k]);
      ok = llt.info() == Eigen::Success;
      if (ok) sinv[k] = herm(llt.solve(ComplexMatrix::Identity(dd, dd)));
    }
    if (!ok) {
      sol.status = SdpStatus::NumericalError;
      break;
    }

    // Schur complement M = sum_k c_kj c_kj' K(X_k, S_k^-1), factorized in place
    std::vector<Eigen::MatrixXd> kblocks(nb);
    for (std::size_t k = 0; k < nb; ++k) kblocks[k] = schur_block(x[k], sinv[k], basis);
    auto assemble = [&](double shift) {
      m.setZero(ny, ny);
      for (std::size_t k = 0; k < nb; ++k)
        for (const auto& [j1, c1] : problem.blocks[k].terms)
          for (const auto& [j2, c2] : problem.blocks[k].terms)
            m.block(static_cast<Eigen::Index>(j1) * n2, static_cast<Eigen::Index>(j2) * n2, n2, n2) +=
                (c1 * c2) * kblocks[k];
      if (shift > 0.0) m.diagonal().array() += shift * m.diagonal().cwiseAbs().maxCoeff();
    };
    assemble(0.0);
    Eigen::LLT<Eigen::Ref<Eigen::MatrixXd>> mchol(m);
    if (mchol.info() != Eigen::Success) {
      assemble(1e-13);
      mchol.compute(m);
      if (mchol.info() != Eigen::Success) {
        sol.status = SdpStatus::NumericalError;
        sol.message = "Newton system lost positive definiteness";
        break;
      }
    }

    std::vector<ComplexMatrix> x_rd_sinv(nb);
    for (std::size_t k = 0; k < nb; ++k) x_rd_sinv[k] = x[k] * rd[k] * sinv[k];
    const RealVector base_rhs = b + apply_a(x_rd_sinv);

    auto directions = [&](const RealVector& rhs, const std::vector<ComplexMatrix>& extra_x,
                          RealVector& dy, std::vector<ComplexMatrix>& dx,
                          std::vector<ComplexMatrix>& ds) {
      dy = mchol.solve(rhs);
      const std::vector<ComplexMatrix> at_dy = apply_at(dy);
      dx.resize(nb);
      ds.resize(nb);
      for (std::size_t k = 0; k < nb; ++k) {
        ds[k] = rd[k] - at_dy[k];
        dx[k] = herm(extra_x[k] - x[k] - x[k] * ds[k] * sinv[k]);
      }
    };
    auto step_lengths = [&](const std::vector<ComplexMatrix>& dx, const std::vector<ComplexMatrix>& ds,
                            double& ap, double& ad) {
      ap = std::numeric_limits<double>::infinity();
      ad = std::numeric_limits<double>::infinity();
      for (std::size_t k = 0; k < nb; ++k) {
        ap = std::min(ap, max_step(x[k], dx[k]));
        ad = std::min(ad, max_step(s[k], ds[k]));
      }
    };

    // predictor
    RealVector dy;
    std::vector<ComplexMatrix> dx, ds;
    const std::vector<ComplexMatrix> zeros(nb, ComplexMatrix::Zero(dd, dd));
    directions(base_rhs, zeros, dy, dx, ds);
    double ap = 0.0, ad = 0.0;
    step_lengths(dx, ds, ap, ad);
    if (ap < 0.0 || ad < 0.0) {
      sol.status = SdpStatus::NumericalError;
      break;
    }
    const double ap_pred = std::min(1.0, ap);
    const double ad_pred = std::min(1.0, ad);
    double xs_aff = 0.0;
    for (std::size_t k = 0; k < nb; ++k) {
      xs_aff += re_inner(x[k] + ap_pred * dx[k], s[k] + ad_pred * ds[k]);
    }
    const double mu_aff = xs_aff / total_dim;
    const double sigma = std::clamp(std::pow(std::max(mu_aff, 0.0) / mu, 3.0), 0.0, 1.0);

    // corrector
    std::vector<ComplexMatrix> extra(nb), corr(nb);
    for (std::size_t k = 0; k < nb; ++k) {
      corr[k] = dx[k] * ds[k] * sinv[k];
      extra[k] = sigma * mu * sinv[k] - corr[k];
    }
    RealVector rhs = base_rhs + apply_a(corr);
    {
      std::vector<ComplexMatrix> smu(nb);
      for (std::size_t k = 0; k < nb; ++k) smu[k] = sigma * mu * sinv[k];
      rhs -= apply_a(smu);
    }
    directions(rhs, extra, dy, dx, ds);
    step_lengths(dx, ds, ap, ad);
    if (ap < 0.0 || ad < 0.0) {
      sol.status = SdpStatus::NumericalError;
      break;
    }
    const double gamma = std::min(options.step_fraction, 0.9 + 0.09 * std::min(ap_pred, ad_pred));
    ap = std::min(1.0, gamma * ap);
    ad = std::min(1.0, gamma * ad);
    for (std::size_t k = 0; k < nb; ++k) {
      x[k] = herm(x[k] + ap * dx[k]);
      s[k] = herm(s[k] + ad * ds[k]);
    }
    y += ad * dy;
  }

  sol.y.resize(nv);
  for (std::size_t j = 0; j < nv; ++j) {
    sol.y[j] = unpack_into(y.segment(static_cast<Eigen::Index>(j) * n2, n2), basis, d);
  }
  sol.x = std::move(x);
  sol.s = std::move(s);
  sol.stats.iterations = it;
  sol.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return sol;
}

// ---------------------------------------------------------------------------

std::vector<DeterministicStrategy> enumerate_strategies(std::size_t n_settings, std::size_t n_outcomes) {
  if (n_settings < 1 || n_outcomes < 1) {
    throw std::invalid_argument("enumerate_strategies: need at least one setting and one outcome");
  }
  std::size_t count = 1;
  for (std::size_t x = 0; x < n_settings; ++x) {
    if (count > 1000000 / n_outcomes) {
      throw std::overflow_error("enumerate_strategies: more than 10^6 strategies");
    }
    count *= n_outcomes;
  }
  std::vector<DeterministicStrategy> out(count);
  for (std::size_t lambda = 0; lambda < count; ++lambda) {
    out[lambda].index = lambda;
    out[lambda].outcome.assign(n_settings, 0);
    std::size_t rest = lambda;
    for (std::size_t x = n_settings; x-- > 0;) {
      out[lambda].outcome[x] = rest % n_outcomes;
      rest /= n_outcomes;
    }
  }
  return out;
}

SteeringWeightProblem SteeringWeightProblem::from_members(std::vector<std::vector<ComplexMatrix>> members) {
  if (members.empty() || members.front().empty()) {
    throw std::invalid_argument("SteeringWeightProblem: empty assemblage");
  }
  SteeringWeightProblem p;
  p.strategies = enumerate_strategies(members.size(), members.front().size());
  p.members = std::move(members);
  p.validate();
  return p;
}

void SteeringWeightProblem::validate() const {
  if (members.empty() || members.front().empty()) {
    throw std::invalid_argument("SteeringWeightProblem: empty assemblage");
  }
  const std::size_t o = members.front().size();
  const Eigen::Index d = members.front().front().rows();
  for (const auto& setting : members) {
    if (setting.size() != o) throw std::invalid_argument("SteeringWeightProblem: ragged outcomes");
    for (const auto& m : setting) {
      if (m.rows() != d || m.cols() != d) {
        throw std::invalid_argument("SteeringWeightProblem: member dimension mismatch");
      }
      if (!is_hermitian(m, 1e-9)) throw std::invalid_argument("SteeringWeightProblem: non-Hermitian member");
      if (hermitian_eigenvalues(herm(m)).minCoeff() < -1e-9) {
        throw std::invalid_argument("SteeringWeightProblem: member is not PSD");
      }
    }
  }
  if (strategies.empty()) throw std::invalid_argument("SteeringWeightProblem: no strategies");
  for (const auto& st : strategies) {
    if (st.outcome.size() != members.size()) {
      throw std::invalid_argument("SteeringWeightProblem: strategy length mismatch");
    }
    for (std::size_t a : st.outcome) {
      if (a >= o) throw std::invalid_argument("SteeringWeightProblem: strategy outcome out of range");
    }
  }
}

SdpSolution solve_steering_weight(const SteeringWeightProblem& problem, const SdpOptions& options) {
  problem.validate();
  const std::size_t m = problem.n_settings();
  const std::size_t o = problem.n_outcomes();
  const std::size_t d = problem.dim();
  const auto dd = static_cast<Eigen::Index>(d);
  const double scale = static_cast<double>(d);

  // variables F_ax for non-degenerate members
  std::vector<std::vector<long>> var(m, std::vector<long>(o, -1));
  LmiProblem lmi;
  lmi.dim = d;
  std::size_t dropped = 0;
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t a = 0; a < o; ++a) {
      const ComplexMatrix& sigma = problem.members[x][a];
      if (sigma.trace().real() < kDegenerateTrace) {
        ++dropped;
        continue;
      }
      var[x][a] = static_cast<long>(lmi.objective.size());
      lmi.objective.push_back(-scale * herm(sigma));
      LmiBlock f;  // F_ax ⪰ 0
      f.constant = ComplexMatrix::Zero(dd, dd);
      f.terms.emplace_back(lmi.objective.size() - 1, -1.0);
      lmi.blocks.push_back(std::move(f));
    }
  }
  std::vector<std::size_t> active;  // strategies avoiding degenerate members
  for (std::size_t l = 0; l < problem.strategies.size(); ++l) {
    const auto& st = problem.strategies[l];
    bool keep = true;
    for (std::size_t x = 0; x < m && keep; ++x) keep = var[x][st.outcome[x]] >= 0;
    if (!keep) continue;
    active.push_back(l);
    LmiBlock blk;  // sum_x F_{lambda(x)|x} - 1 ⪰ 0
    blk.constant = -ComplexMatrix::Identity(dd, dd);
    for (std::size_t x = 0; x < m; ++x) {
      blk.terms.emplace_back(static_cast<std::size_t>(var[x][st.outcome[x]]), -1.0);
    }
    lmi.blocks.push_back(std::move(blk));
  }
  if (active.empty()) {
    throw std::invalid_argument("solve_steering_weight: every strategy hits a zero-probability member");
  }

  const LmiSolution lsol = solve_lmi(lmi, options, scale);

  SdpSolution out;
  out.status = lsol.status;
  out.stats = lsol.stats;
  out.message = lsol.message;
  if (lsol.x.empty()) return out;
  out.dropped_members = dropped;
  const std::size_t n_f = lmi.objective.size();
  out.hidden_states.assign(problem.strategies.size(), ComplexMatrix::Zero(dd, dd));
  double mu = 0.0;
  for (std::size_t i = 0; i < active.size(); ++i) {
    out.hidden_states[active[i]] = lsol.x[n_f + i] / scale;
    mu += out.hidden_states[active[i]].trace().real();
  }
  out.mu_star = mu;
  out.dual_certificate.assign(m, std::vector<ComplexMatrix>(o));
  double bound = 0.0;
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t a = 0; a < o; ++a) {
      // a zero-probability member costs nothing, so F = 1 satisfies every
      // strategy that uses it
      out.dual_certificate[x][a] = var[x][a] >= 0 ? lsol.y[static_cast<std::size_t>(var[x][a])]
                                                  : ComplexMatrix::Identity(dd, dd);
      bound += re_inner(out.dual_certificate[x][a], problem.members[x][a]);
    }
  }
  out.dual_bound = bound;
  out.gap = std::abs(out.dual_bound - out.mu_star);
  return out;
}

bool verify_certificate(const SteeringWeightProblem& problem, const SdpSolution& solution,
                        std::string* diagnostics, double tol) {
  std::ostringstream why;
  bool ok = true;
  const std::size_t m = problem.n_settings();
  const std::size_t o = problem.n_outcomes();
  if (solution.dual_certificate.size() != m) {
    if (diagnostics) *diagnostics = "certificate has the wrong number of settings";
    return false;
  }
  const auto dd = static_cast<Eigen::Index>(problem.dim());
  double objective = 0.0;
  for (std::size_t x = 0; x < m; ++x) {
    if (solution.dual_certificate[x].size() != o) {
      if (diagnostics) *diagnostics = "certificate has the wrong number of outcomes";
      return false;
    }
    for (std::size_t a = 0; a < o; ++a) {
      const ComplexMatrix& f = solution.dual_certificate[x][a];
      if (f.rows() != dd || !is_hermitian(f, tol)) {
        why << "F(" << a << "|" << x << ") is not a Hermitian block; ";
        ok = false;
        continue;
      }
      const double lmin = hermitian_eigenvalues(herm(f)).minCoeff();
      if (lmin < -tol) {
        why << "F(" << a << "|" << x << ") has eigenvalue " << lmin << "; ";
        ok = false;
      }
      objective += re_inner(f, problem.members[x][a]);
    }
  }
  if (!ok) {
    if (diagnostics) *diagnostics = why.str();
    return false;
  }
  for (const auto& st : problem.strategies) {
    ComplexMatrix sum = -ComplexMatrix::Identity(dd, dd);
    for (std::size_t x = 0; x < m; ++x) sum += solution.dual_certificate[x][st.outcome[x]];
    const double lmin = hermitian_eigenvalues(herm(sum)).minCoeff();
    if (lmin < -tol) {
      why << "strategy " << st.index << " violates sum_x F - 1 >= 0 by " << -lmin << "; ";
      ok = false;
    }
  }
  if (std::abs(objective - solution.mu_star) > tol) {
    why << "dual objective " << objective << " differs from mu* " << solution.mu_star << "; ";
    ok = false;
  }
  if (diagnostics) *diagnostics = why.str();
  return ok;
}

}  // namespace tscramble
