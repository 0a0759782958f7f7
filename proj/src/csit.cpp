//
// Copyright 2026 The dualband Authors
// SPDX-License-Identifier: Apache-2.0
//

#include "dualband/csit.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "dualband/specialfn.hpp"

namespace dualband {

namespace {

// Eigen-decomposition of Sigma with eigenvalues sorted descending.
void sigma_eigs(const CsitModel& model, Eigen::VectorXd* values,
                Eigen::MatrixXcd* vectors) {
  const Eigen::MatrixXcd sigma = equivalent_covariance(model);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(sigma);
  const Eigen::Index n = sigma.rows();
  values->resize(n);
  if (vectors) vectors->resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Eigen::Index src = n - 1 - i;  // Eigen sorts ascending
    (*values)(i) = std::max(0.0, es.eigenvalues()(src));
    if (vectors) vectors->col(i) = es.eigenvectors().col(src);
  }
}

double worst_gain(const CsitModel& model) {
  const double g = std::max(0.0, std::sqrt(model.los_gain) - model.epsilon);
  return g * g;
}

}  // namespace

double mimo_rate(const Eigen::MatrixXcd& h, const Eigen::MatrixXcd& k,
                 double w) {
  if (!(w >= 0.0)) throw std::domain_error("mimo_rate: negative bandwidth");
  if (w == 0.0) return 0.0;
  const Eigen::MatrixXcd m = h * k * h.adjoint();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
  double rate = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    rate += rate_kernel(w, std::max(0.0, es.eigenvalues()(i)));
  }
  return rate;
}

Eigen::MatrixXcd equivalent_covariance(const CsitModel& model) {
  const Eigen::Index n_t = model.u.size();
  const Eigen::MatrixXcd hbar =
      std::sqrt(model.los_gain) * model.v * model.u.adjoint();
  return hbar.adjoint() * hbar +
         model.sigma_e2 * Eigen::MatrixXcd::Identity(n_t, n_t);
}

Eigen::MatrixXcd covariance_matrix(const CsitModel& model,
                                   const Sub6Covariance& cov) {
  const Eigen::Index n_t = model.u.size();
  switch (cov.mode) {
    case CovarianceMode::Uniform:
      return (cov.total_power / static_cast<double>(n_t)) *
             Eigen::MatrixXcd::Identity(n_t, n_t);
    case CovarianceMode::UnitRank:
      return cov.total_power * cov.q * cov.q.adjoint();
    case CovarianceMode::EigenPowers: {
      Eigen::VectorXd values;
      Eigen::MatrixXcd vectors;
      sigma_eigs(model, &values, &vectors);
      Eigen::MatrixXcd k = Eigen::MatrixXcd::Zero(n_t, n_t);
      for (Eigen::Index i = 0; i < cov.antenna_powers.size() && i < n_t; ++i) {
        k += cov.antenna_powers(i) * vectors.col(i) * vectors.col(i).adjoint();
      }
      return k;
    }
  }
  return Eigen::MatrixXcd::Zero(n_t, n_t);
}

double lower_bound_rate(const CsitModel& model, const Sub6Covariance& cov,
                        double w) {
  if (!(w >= 0.0)) {
    throw std::domain_error("lower_bound_rate: negative bandwidth");
  }
  if (w == 0.0) return 0.0;
  // u^H K u for each covariance shape.
  double uku = 0.0;
  switch (cov.mode) {
    case CovarianceMode::Uniform:
      uku = cov.total_power / static_cast<double>(model.u.size());
      break;
    case CovarianceMode::UnitRank: {
      const std::complex<double> align = (model.u.adjoint() * cov.q)(0, 0);
      uku = cov.total_power * std::norm(align);
      break;
    }
    case CovarianceMode::EigenPowers: {
      const Eigen::MatrixXcd k = covariance_matrix(model, cov);
      uku = std::real((model.u.adjoint() * k * model.u)(0, 0));
      break;
    }
  }
  return rate_kernel(w, worst_gain(model) * uku);
}

Sub6Covariance worst_case_covariance(const CsitModel& model,
                                     double total_power) {
  Sub6Covariance cov;
  cov.mode = CovarianceMode::UnitRank;
  cov.total_power = total_power;
  cov.q = model.u;
  return cov;
}

double upper_bound_rate(const CsitModel& model, const Sub6Covariance& cov,
                        double w) {
  if (!(w >= 0.0)) {
    throw std::domain_error("upper_bound_rate: negative bandwidth");
  }
  if (w == 0.0) return 0.0;
  const Eigen::MatrixXcd k = covariance_matrix(model, cov);
  const Eigen::MatrixXcd sigma = equivalent_covariance(model);
  // Eigenvalues of K^(1/2) Sigma K^(1/2) via the self-adjoint square root.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ek(k);
  Eigen::VectorXd sq = ek.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const Eigen::MatrixXcd k_half =
      ek.eigenvectors() * sq.asDiagonal() * ek.eigenvectors().adjoint();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> em(k_half * sigma * k_half);
  double rate = 0.0;
  for (Eigen::Index i = 0; i < em.eigenvalues().size(); ++i) {
    rate += rate_kernel(w, std::max(0.0, em.eigenvalues()(i)));
  }
  return rate;
}

FixedPointState fixed_point_powers(const CsitModel& model, double total_power,
                                   int mc_samples, double tol,
                                   std::uint64_t seed) {
  if (mc_samples < 1000) {
    throw std::domain_error("fixed_point_powers: mc_samples must be >= 1000");
  }
  if (!(tol > 0.0)) {
    throw std::domain_error("fixed_point_powers: tol must be positive");
  }
  const int n_t = static_cast<int>(model.u.size());
  const int n_r = static_cast<int>(model.v.size());

  Eigen::VectorXd sigma;
  sigma_eigs(model, &sigma, nullptr);

  FixedPointState st;
  st.mc_samples = mc_samples;
  st.p = Eigen::VectorXd::Constant(n_t, total_power / n_t);
  st.e_values.assign(n_t, 0.0);

  if (n_t == 1) {
    st.p(0) = total_power;
    st.converged = true;
    return st;
  }

  // Common random numbers: one set of mixing matrices reused across all
  // fixed-point iterations.
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n01(0.0, 1.0);
  constexpr double kInvSqrt2 = 0.7071067811865476;
  std::vector<Eigen::MatrixXcd> samples;
  samples.reserve(mc_samples);
  for (int s = 0; s < mc_samples; ++s) {
    Eigen::MatrixXcd z(n_r, n_t);
    for (int i = 0; i < n_r; ++i) {
      for (int j = 0; j < n_t; ++j) {
        z(i, j) = std::complex<double>(n01(rng), n01(rng)) * kInvSqrt2;
      }
    }
    samples.push_back(std::move(z));
  }

  Eigen::VectorXd e(n_t);
  for (int iter = 0; iter < 500; ++iter) {
    e.setZero();
    for (const Eigen::MatrixXcd& z : samples) {
      // Shared factorization: M = I + sum_j p_j sigma_j z_j z_j^H; each A_i
      // is a rank-one downdate handled through Sherman-Morrison.
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(n_r, n_r);
      for (int j = 0; j < n_t; ++j) {
        if (st.p(j) * sigma(j) > 0.0) {
          m.noalias() += (st.p(j) * sigma(j)) * z.col(j) * z.col(j).adjoint();
        }
      }
      Eigen::LLT<Eigen::MatrixXcd> llt(m);
      for (int i = 0; i < n_t; ++i) {
        if (!(sigma(i) > 0.0)) continue;
        const Eigen::VectorXcd sol = llt.solve(z.col(i));
        const double beta_i = std::real(z.col(i).dot(sol));
        const double denom = std::max(1e-300, 1.0 - st.p(i) * sigma(i) * beta_i);
        const double gamma_i = beta_i / denom;  // z_i^H A_i^{-1} z_i
        e(i) += sigma(i) * gamma_i / (1.0 + st.p(i) * sigma(i) * gamma_i);
      }
    }
    e /= static_cast<double>(mc_samples);

    const double weighted = st.p.dot(e);
    st.iterations = iter + 1;
    if (!(weighted > 0.0)) {
      st.converged = true;  // degenerate: no mode carries value
      break;
    }
    Eigen::VectorXd p_next = st.p.cwiseProduct(e) * (total_power / weighted);
    st.residual = ((p_next - st.p).cwiseAbs().maxCoeff()) / total_power;
    st.p = p_next;
    for (int i = 0; i < n_t; ++i) st.e_values[i] = e(i);
    if (st.residual <= tol) {
      st.converged = true;
      break;
    }
  }
  return st;
}

RateModel csit_rate_model(const CsitModel& model, const MmWaveLink& link,
                          const SystemParams& params, CsitBound bound) {
  RateModel rm;
  rm.mm_gain = link.gain_a;
  if (bound == CsitBound::Lower) {
    // Unit-rank covariance along u: a single effective mode of gain
    // [(sqrt(lambda) - eps)^+]^2 carrying the whole sub-6 transmit power.
    rm.sub6_gains = {worst_gain(model)};
    return rm;
  }
  Eigen::VectorXd sigma;
  sigma_eigs(model, &sigma, nullptr);
  const FixedPointState fp =
      fixed_point_powers(model, params.p_max, 2000, 1e-6);
  rm.sub6_gains.reserve(sigma.size());
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    const double frac = fp.p(i) / params.p_max;
    rm.sub6_gains.push_back(frac * sigma(i));
  }
  return rm;
}

SolveReport solve_with_csit(const CsitModel& model, const MmWaveLink& link,
                            const SystemParams& params, CsitBound bound) {
  const RateModel rm = csit_rate_model(model, link, params, bound);
  SolveReport report = solve_model(rm, params);
  report.warnings.insert(report.warnings.begin(),
                         bound == CsitBound::Lower
                             ? "sub-6 rate: worst-case lower bound"
                             : "sub-6 rate: equivalent-covariance upper bound");
  return report;
}

}  // namespace dualband
