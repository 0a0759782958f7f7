//
// Copyright 2026 The dualband Authors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef DUALBAND_CSIT_HPP_
#define DUALBAND_CSIT_HPP_

#include <cstdint>
#include <vector>

#include "dualband/sumrate.hpp"

namespace dualband {

enum class CovarianceMode { Uniform, UnitRank, EigenPowers };

/// Transmit covariance description in terms the bounds understand: Uniform
/// spreads total_power equally over n_t antennas, UnitRank focuses it along
/// q, EigenPowers distributes antenna_powers[i] over the eigenvectors of the
/// equivalent channel covariance (descending eigenvalue order).
struct Sub6Covariance {
  CovarianceMode mode = CovarianceMode::Uniform;
  double total_power = 0.0;
  Eigen::VectorXcd q;             // UnitRank direction, unit norm
  Eigen::VectorXd antenna_powers; // EigenPowers, sums to total_power
};

enum class CsitBound { Lower, Upper };

/// w * ln det(I + H K H^H / w) in nats/s; the generic MIMO rate used by the
/// bound cross-checks.
double mimo_rate(const Eigen::MatrixXcd& h, const Eigen::MatrixXcd& k,
                 double w);

/// Sigma = Hbar^H Hbar + sigma_e2 * I, the equivalent channel covariance the
/// transmitter observes under the partial-CSIT model.
Eigen::MatrixXcd equivalent_covariance(const CsitModel& model);

/// Explicit n_t x n_t covariance matrix of a Sub6Covariance (EigenPowers is
/// expanded in the eigenbasis of Sigma).
Eigen::MatrixXcd covariance_matrix(const CsitModel& model,
                                   const Sub6Covariance& cov);

/// Worst-compound-channel rate: w * ln(1 + [(sqrt(lambda)-eps)^+]^2
/// * (u^H K u) / w). Every channel of the compound set achieves at least
/// this for the given covariance.
double lower_bound_rate(const CsitModel& model, const Sub6Covariance& cov,
                        double w);

/// The covariance maximizing the worst-case rate: unit rank along u.
Sub6Covariance worst_case_covariance(const CsitModel& model,
                                     double total_power);

/// w * ln det(I + K Sigma / w) evaluated through the eigenvalues of
/// K^(1/2) Sigma K^(1/2).
double upper_bound_rate(const CsitModel& model, const Sub6Covariance& cov,
                        double w);

/// State of the Monte-Carlo fixed-point antenna power allocation. The power
/// vector sums to the requested total at every iteration by construction.
struct FixedPointState {
  Eigen::VectorXd p;
  std::vector<double> e_values;
  int mc_samples = 0;
  double residual = 0.0;  // max relative change in the last iteration
  int iterations = 0;
  bool converged = false;
};

/// Per-eigenmode transmit powers from the fixed-point recursion
/// p_i <- p_i E_i(p) / sum_j p_j E_j(p) * total_power, with E_i estimated by
/// Monte Carlo over Gaussian mixing matrices (common random numbers across
/// iterations, so the recursion is deterministic per seed).
FixedPointState fixed_point_powers(const CsitModel& model, double total_power,
                                   int mc_samples, double tol,
                                   std::uint64_t seed = 0x5eedf12dULL);

/// Runs the Problem-1 solver with the sub-6 rate replaced by the selected
/// bound: UnitRank covariance along u for Lower, the fixed-point EigenPowers
/// covariance for Upper (fractions computed at total power p_max).
SolveReport solve_with_csit(const CsitModel& model, const MmWaveLink& link,
                            const SystemParams& params, CsitBound bound);

/// The rate model solve_with_csit hands to the shared solver core.
RateModel csit_rate_model(const CsitModel& model, const MmWaveLink& link,
                          const SystemParams& params, CsitBound bound);

}  // namespace dualband

#endif  // DUALBAND_CSIT_HPP_
