//
// Copyright 2026 The dualband Authors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef DUALBAND_SUMRATE_HPP_
#define DUALBAND_SUMRATE_HPP_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dualband/linkmodel.hpp"

namespace dualband {

enum class SolveMode { Auto, HighSnr, LowSnr, Numeric };

enum class ActiveCase { FullSub6, FullMmWave, Sub6Only, MmWaveOnly,
                        NumericInterior };

enum class SnrRegime { High, Low, Mixed };

const char* to_string(ActiveCase c);
const char* to_string(SnrRegime r);

/// Constants of the high-SNR closed forms:
///   B = omega(ln(a*A) - 1)                          (full sub-6 bandwidth)
///   C = n_r*a + n*n_r*a/B
///   D = omega(mean_i ln(lambda_i^2) - ln(n_t/a) - 1) (full mmWave bandwidth)
///   E = a + a/D
/// d_valid is false when a zero singular value makes D's argument diverge.
struct ClosedFormConstants {
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
  double e = 0.0;
  bool b_valid = false;
  bool d_valid = false;
};

ClosedFormConstants closed_form_constants(const Sub6Channel& ch,
                                          const MmWaveLink& link,
                                          const SystemParams& params);

/// Multipliers recovered from the stationarity system plus the residuals
/// that certify optimality. Stationarity residuals are normalized by the
/// magnitude of the terms entering each equation, so max_residual is
/// scale-free; slackness residuals are normalized by p_max and the caps.
struct KktDiagnostics {
  std::array<double, 5> multipliers{};            // mu0..mu4
  std::array<double, 4> stationarity_residuals{}; // d/dW_s, d/dP_s, d/dW_m, d/dP_m
  std::array<double, 5> slackness_residuals{};
  ActiveCase active_case = ActiveCase::NumericInterior;
  double max_residual = 0.0;
};

struct SolveReport {
  Allocation allocation;
  EvalReport eval;
  KktDiagnostics kkt;
  SnrRegime snr_regime = SnrRegime::Mixed;
  std::vector<std::string> warnings;
};

/// Case I closed form (full sub-6 bandwidth). Clamps at the mmWave cap with
/// a power re-solve on the clamped face; rebalances any budget residual into
/// p_sub6. Never throws: degenerate budgets come back clamped at zero.
Allocation solve_case1(const Sub6Channel& ch, const MmWaveLink& link,
                       const SystemParams& params);

/// Case II closed form (full mmWave bandwidth). Throws std::domain_error on
/// a rank-deficient channel (a zero singular value makes the constant D
/// diverge); solve() falls back to the numeric path in that situation.
Allocation solve_case2(const Sub6Channel& ch, const MmWaveLink& link,
                       const SystemParams& params);

/// Low-SNR rule: all transmit power to the interface with the larger
/// linearized slope (sum lambda_i^2 / n_t vs. A; ties go to sub-6), with
/// bandwidth capped so component cost stays within 1% of the budget.
Allocation solve_low_snr(const Sub6Channel& ch, const MmWaveLink& link,
                         const SystemParams& params);

/// Enumerates candidates (closed forms, low-SNR rule, per-activation-pattern
/// numeric maximization), evaluates each, and returns the best feasible one
/// with KKT diagnostics. Never throws on an infeasible instance: the all-zero
/// allocation is returned with a warning.
SolveReport solve(const Sub6Channel& ch, const MmWaveLink& link,
                  const SystemParams& params,
                  SolveMode mode = SolveMode::Auto);

/// KKT residual certificate for an arbitrary allocation (reduced system when
/// an interface is off).
KktDiagnostics kkt_residuals(const Allocation& alloc, const Sub6Channel& ch,
                             const MmWaveLink& link,
                             const SystemParams& params);

// Model-level entry points shared with the partial-CSIT solver.
SolveReport solve_model(const RateModel& model, const SystemParams& params,
                        SolveMode mode = SolveMode::Auto);
KktDiagnostics kkt_residuals_model(const Allocation& alloc,
                                   const RateModel& model,
                                   const SystemParams& params);

/// Post-hoc per-interface SNR classification (>= 10 on every active
/// interface -> High, <= 0.1 -> Low, otherwise Mixed).
SnrRegime classify_snr_regime(const Allocation& alloc, const RateModel& model);

namespace detail {

/// Root of a strictly decreasing function on [lo, hi] by bisection, with the
/// convention that a root outside the bracket clamps to the nearer endpoint.
template <typename F>
double decreasing_root(F&& f, double lo, double hi) {
  double flo = f(lo);
  if (!(flo > 0.0)) return lo;
  double fhi = f(hi);
  if (!(fhi < 0.0)) return hi;
  for (int i = 0; i < 200 && hi - lo > 1e-15 * (1.0 + hi); ++i) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Optimal split of transmit budget p_total between the two interfaces at
/// fixed bandwidths; returns p_sub6.
double split_power(const RateModel& model, double w_s, double w_m,
                   double p_total);

}  // namespace detail

}  // namespace dualband

#endif  // DUALBAND_SUMRATE_HPP_
