//
// Copyright 2026 The dualband Authors
// SPDX-License-Identifier: Apache-2.0
//

#include "dualband/linkmodel.hpp"

#include <cmath>
#include <stdexcept>

#include "dualband/specialfn.hpp"

namespace dualband {

RateModel uniform_rate_model(const Sub6Channel& ch, const MmWaveLink& link) {
  RateModel m;
  m.sub6_gains.reserve(ch.singular_values.size());
  for (double sv : ch.singular_values) {
    m.sub6_gains.push_back(sv * sv / static_cast<double>(ch.n_t));
  }
  m.mm_gain = link.gain_a;
  return m;
}

double model_rate_sub6(const RateModel& m, double w, double p) {
  if (!(w >= 0.0) || !(p >= 0.0)) {
    throw std::domain_error("rate_sub6: negative bandwidth or power");
  }
  if (w == 0.0) return 0.0;
  double r = 0.0;
  for (double g : m.sub6_gains) r += rate_kernel(w, g * p);
  return r;
}

double model_rate_sub6_dw(const RateModel& m, double w, double p) {
  double d = 0.0;
  for (double g : m.sub6_gains) d += rate_kernel_dx(w, g * p);
  return d;
}

double model_rate_sub6_dp(const RateModel& m, double w, double p) {
  double d = 0.0;
  for (double g : m.sub6_gains) d += g * rate_kernel_dc(w, g * p);
  return d;
}

double model_rate_mm(const RateModel& m, double w, double p) {
  if (!(w >= 0.0) || !(p >= 0.0)) {
    throw std::domain_error("rate_mmwave: negative bandwidth or power");
  }
  if (w == 0.0) return 0.0;
  return rate_kernel(w, m.mm_gain * p);
}

double model_rate_mm_dw(const RateModel& m, double w, double p) {
  return rate_kernel_dx(w, m.mm_gain * p);
}

double model_rate_mm_dp(const RateModel& m, double w, double p) {
  return m.mm_gain * rate_kernel_dc(w, m.mm_gain * p);
}

double rate_sub6_uniform(const Sub6Channel& ch, double w, double p) {
  if (!(w >= 0.0) || !(p >= 0.0)) {
    throw std::domain_error("rate_sub6_uniform: negative bandwidth or power");
  }
  if (w == 0.0) return 0.0;
  const double nt = static_cast<double>(ch.n_t);
  double r = 0.0;
  for (double sv : ch.singular_values) {
    r += rate_kernel(w, p * sv * sv / nt);
  }
  return r;
}

double rate_mmwave(const MmWaveLink& link, double w, double p) {
  if (!(w >= 0.0) || !(p >= 0.0)) {
    throw std::domain_error("rate_mmwave: negative bandwidth or power");
  }
  if (w == 0.0) return 0.0;
  return rate_kernel(w, p * link.gain_a);
}

double consumed_power(const Allocation& alloc, const SystemParams& params) {
  double total = params.n_r * params.adc_a * alloc.w_sub6 +
                 params.adc_a * alloc.w_m;
  if (alloc.w_sub6 > 0.0) total += alloc.p_sub6;
  if (alloc.w_m > 0.0) total += alloc.p_m;
  return total;
}

namespace {

EvalReport fill_report(double rate_s, double rate_m, const Allocation& alloc,
                       const SystemParams& params) {
  EvalReport rep;
  rep.rate_sub6 = rate_s;
  rep.rate_m = rate_m;
  rep.rate_total = rate_s + rate_m;
  rep.consumed_power = consumed_power(alloc, params);
  rep.ee = rep.consumed_power > 0.0 ? rep.rate_total / rep.consumed_power : 0.0;
  const double budget_slack = 1.0 + 1e-12;
  rep.feasible = rep.consumed_power <= params.p_max * budget_slack &&
                 alloc.w_sub6 <= params.w_sub6_max * budget_slack &&
                 alloc.w_m <= params.w_m_max * budget_slack &&
                 alloc.w_sub6 >= 0.0 && alloc.w_m >= 0.0 &&
                 alloc.p_sub6 >= 0.0 && alloc.p_m >= 0.0;
  return rep;
}

}  // namespace

EvalReport evaluate(const Allocation& alloc, const Sub6Channel& ch,
                    const MmWaveLink& link, const SystemParams& params) {
  return fill_report(rate_sub6_uniform(ch, alloc.w_sub6, alloc.p_sub6),
                     rate_mmwave(link, alloc.w_m, alloc.p_m), alloc, params);
}

EvalReport evaluate_model(const Allocation& alloc, const RateModel& model,
                          const SystemParams& params) {
  return fill_report(model_rate_sub6(model, alloc.w_sub6, alloc.p_sub6),
                     model_rate_mm(model, alloc.w_m, alloc.p_m), alloc,
                     params);
}

}  // namespace dualband
