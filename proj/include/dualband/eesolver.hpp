//
// Copyright 2026 The dualband Authors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef DUALBAND_EESOLVER_HPP_
#define DUALBAND_EESOLVER_HPP_

#include <utility>
#include <vector>

#include "dualband/sumrate.hpp"

namespace dualband {

/// Trace of one Dinkelbach run. beta is the current energy-efficiency
/// parameter, big_f = F(beta) = max_x {f(x) - beta g(x)}; the beta sequence
/// is strictly increasing and big_f decreases to <= delta.
struct DinkelbachState {
  double beta = 0.0;      // nats/joule
  double f_value = 0.0;   // nats/s
  double g_value = 0.0;   // W
  double big_f = 0.0;     // nats/s
  double delta = 0.0;     // the stopping threshold actually used
  int iteration = 0;
  std::vector<std::pair<double, double>> history;  // (beta, big_f)
};

struct EeOptions {
  double delta = 0.0;        // stopping threshold; <= 0 selects 1e-9 * f0
  double p_cap = 100.0;      // W, keeps the feasible set compact
  double beta_floor = 1e-12; // nats/joule
  int max_iterations = 100;
};

struct InnerSolveResult {
  Allocation allocation;
  double f = 0.0;  // rate_total, nats/s
  double g = 0.0;  // consumed power, W
};

/// argmax of rate_total(x) - beta * consumed_power(x) over the box
/// constraints (bandwidth caps, powers in [0, p_cap]); the activation
/// indicators make the two interfaces separable, so each side reduces to a
/// 1-D concave search. Throws std::domain_error for beta below 1e-12.
InnerSolveResult inner_solve(double beta, const Sub6Channel& ch,
                             const MmWaveLink& link,
                             const SystemParams& params,
                             double p_cap = 100.0);

/// Dinkelbach's parametric algorithm for max rate/power: iterates
/// beta_{n+1} = f(x_n)/g(x_n) with x_n the inner argmax at beta_n until
/// F(beta_n) <= delta. The returned report carries ee = beta_final.
SolveReport dinkelbach(const Sub6Channel& ch, const MmWaveLink& link,
                       const SystemParams& params, double delta);
SolveReport dinkelbach(const Sub6Channel& ch, const MmWaveLink& link,
                       const SystemParams& params, const EeOptions& options,
                       DinkelbachState* state_out = nullptr);

// Model-level entry points (shared with the partial-CSIT bounds and tests).
InnerSolveResult inner_solve_model(double beta, const RateModel& model,
                                   const SystemParams& params, double p_cap);
SolveReport dinkelbach_model(const RateModel& model,
                             const SystemParams& params,
                             const EeOptions& options,
                             DinkelbachState* state_out = nullptr);

/// Energy efficiency of a forced full-bandwidth allocation (both bandwidths
/// pinned at their caps, powers EE-optimal). Used for the full-allocation
/// comparison curves.
double full_bandwidth_ee(const RateModel& model, const SystemParams& params,
                         const EeOptions& options = {});

}  // namespace dualband

#endif  // DUALBAND_EESOLVER_HPP_
