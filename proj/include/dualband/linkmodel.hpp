//
// Copyright 2026 The dualband Authors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef DUALBAND_LINKMODEL_HPP_
#define DUALBAND_LINKMODEL_HPP_

#include <vector>

#include "dualband/channel.hpp"

namespace dualband {

/// System-wide constants: total power budget for transmission plus
/// components, the per-hertz ADC consumption a = c_ox * 2^r_adc, antenna
/// counts, and the per-interface bandwidth caps.
struct SystemParams {
  double p_max = 1.0;       // W
  double adc_a = 1e-9;      // W/Hz
  int n_t = 64;
  int n_r = 16;
  double w_sub6_max = 1e6;  // Hz
  double w_m_max = 1e9;     // Hz
};

/// The four decision variables. An interface is active iff its bandwidth is
/// positive; an inactive interface must carry zero transmit power.
struct Allocation {
  double w_sub6 = 0.0;  // Hz
  double w_m = 0.0;     // Hz
  double p_sub6 = 0.0;  // W
  double p_m = 0.0;     // W
};

struct EvalReport {
  double rate_sub6 = 0.0;       // nats/s
  double rate_m = 0.0;          // nats/s
  double rate_total = 0.0;      // nats/s
  double consumed_power = 0.0;  // W
  double ee = 0.0;              // nats/joule; 0 when no power is consumed
  bool feasible = false;
};

/// Internal rate abstraction shared by the solvers: the sub-6 GHz interface
/// behaves as parallel scalar modes with power gains sub6_gains[i]
/// (rate = sum_i w * ln(1 + gains[i] * p / w)), the mmWave interface as a
/// single mode with gain mm_gain. The no-CSIT uniform covariance yields
/// gains[i] = lambda_i^2 / n_t; the partial-CSIT bounds plug in their own.
struct RateModel {
  std::vector<double> sub6_gains;
  double mm_gain = 0.0;
};

RateModel uniform_rate_model(const Sub6Channel& ch, const MmWaveLink& link);

double model_rate_sub6(const RateModel& m, double w, double p);
double model_rate_sub6_dw(const RateModel& m, double w, double p);
double model_rate_sub6_dp(const RateModel& m, double w, double p);
double model_rate_mm(const RateModel& m, double w, double p);
double model_rate_mm_dw(const RateModel& m, double w, double p);
double model_rate_mm_dp(const RateModel& m, double w, double p);

/// Sum over eigenmodes of w * ln(1 + p * lambda_i^2 / (w * n_t)); the
/// achievable rate under the uniform (no-CSIT) covariance. Zero at w = 0.
double rate_sub6_uniform(const Sub6Channel& ch, double w, double p);

/// w * ln(1 + p * A / w); zero at w = 0.
double rate_mmwave(const MmWaveLink& link, double w, double p);

/// p_sub6 * [w_sub6 > 0] + n_r * a * w_sub6 + p_m * [w_m > 0] + a * w_m.
double consumed_power(const Allocation& alloc, const SystemParams& params);

/// Rates, consumed power, energy efficiency, and feasibility (power budget
/// and bandwidth caps) for a candidate allocation.
EvalReport evaluate(const Allocation& alloc, const Sub6Channel& ch,
                    const MmWaveLink& link, const SystemParams& params);

/// evaluate() against an explicit rate model (used by the CSIT bounds).
EvalReport evaluate_model(const Allocation& alloc, const RateModel& model,
                          const SystemParams& params);

}  // namespace dualband

#endif  // DUALBAND_LINKMODEL_HPP_
