//
// Copyright 2026 The dualband Authors
// SPDX-License-Identifier: Apache-2.0
//

#include "dualband/eesolver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dualband/specialfn.hpp"

namespace dualband {

namespace {

struct InterfaceBest {
  double w = 0.0;
  double p = 0.0;
  double rate = 0.0;
  double cost = 0.0;  // p + (per-hertz component cost) * w
};

// Best (w, p) for one interface under the linear power price beta. On the
// interior-power ray p/w is constant, so the net value is linear in w up to
// the point where p hits p_cap; past it the problem is concave in w.
InterfaceBest best_mmwave(const RateModel& model, const SystemParams& params,
                          double beta, double p_cap) {
  InterfaceBest out;
  const double big_a = model.mm_gain;
  const double a = params.adc_a;
  if (!(big_a > beta)) return out;
  const double s = (big_a - beta) / beta;  // per-hertz SNR on the interior ray
  const double per_hz_value = std::log1p(s) - beta * (s / big_a + a);
  if (!(per_hz_value > 0.0)) return out;

  const double w_c = p_cap * big_a / s;
  if (w_c >= params.w_m_max) {
    out.w = params.w_m_max;
    out.p = out.w * s / big_a;
  } else {
    out.w = detail::decreasing_root(
        [&](double w) { return rate_kernel_dx(w, p_cap * big_a) - beta * a; },
        w_c, params.w_m_max);
    out.p = p_cap;
  }
  out.rate = rate_kernel(out.w, big_a * out.p);
  out.cost = out.p + a * out.w;
  return out;
}

InterfaceBest best_sub6(const RateModel& model, const SystemParams& params,
                        double beta, double p_cap) {
  InterfaceBest out;
  const double cost_hz = params.n_r * params.adc_a;
  double slope0 = 0.0;
  for (double g : model.sub6_gains) slope0 += g;
  if (!(slope0 > beta)) return out;

  // Power-per-hertz ratio equalizing the marginal rate to beta.
  auto marginal = [&](double y) {
    double m = 0.0;
    for (double g : model.sub6_gains) m += g / (1.0 + y * g);
    return m - beta;
  };
  double y_hi = 1.0;
  while (marginal(y_hi) > 0.0 && y_hi < 1e300) y_hi *= 2.0;
  const double y = detail::decreasing_root(marginal, 0.0, y_hi);

  double per_hz_value = -beta * (y + cost_hz);
  for (double g : model.sub6_gains) per_hz_value += std::log1p(y * g);
  if (!(per_hz_value > 0.0)) return out;

  const double w_c = y > 0.0 ? p_cap / y : 1e300;
  if (w_c >= params.w_sub6_max) {
    out.w = params.w_sub6_max;
    out.p = y * out.w;
  } else {
    auto deriv = [&](double w) {
      double d = -beta * cost_hz;
      for (double g : model.sub6_gains) d += rate_kernel_dx(w, p_cap * g);
      return d;
    };
    out.w = detail::decreasing_root(deriv, w_c, params.w_sub6_max);
    out.p = p_cap;
  }
  out.rate = model_rate_sub6(model, out.w, out.p);
  out.cost = out.p + cost_hz * out.w;
  return out;
}

// Stationarity certificate of the inner problem at its solution: mu0 is
// played by beta itself (budget slackness does not apply, Problem 2 carries
// only box constraints).
KktDiagnostics ee_certificate(const Allocation& al, const RateModel& model,
                              const SystemParams& params, double beta,
                              double p_cap) {
  KktDiagnostics kd = kkt_residuals_model(al, model, params);
  const double a = params.adc_a;
  const double nra = params.n_r * a;
  double max_res = 0.0;
  auto track = [&](double r, double scale) {
    max_res = std::max(max_res, std::fabs(r) / std::max(scale, 1e-30));
  };
  if (al.w_sub6 > 0.0) {
    const double dw = model_rate_sub6_dw(model, al.w_sub6, al.p_sub6);
    const double dp = model_rate_sub6_dp(model, al.w_sub6, al.p_sub6);
    if (al.w_sub6 < params.w_sub6_max * (1.0 - 1e-9)) {
      track(dw - nra * beta, std::max(std::fabs(dw), nra * beta));
    } else {
      track(std::min(0.0, dw - nra * beta),
            std::max(std::fabs(dw), nra * beta));
    }
    if (al.p_sub6 > 0.0 && al.p_sub6 < p_cap * (1.0 - 1e-9)) {
      track(dp - beta, std::max(std::fabs(dp), beta));
    } else if (al.p_sub6 >= p_cap * (1.0 - 1e-9)) {
      track(std::max(0.0, beta - dp), std::max(std::fabs(dp), beta));
    }
  }
  if (al.w_m > 0.0) {
    const double dw = model_rate_mm_dw(model, al.w_m, al.p_m);
    const double dp = model_rate_mm_dp(model, al.w_m, al.p_m);
    if (al.w_m < params.w_m_max * (1.0 - 1e-9)) {
      track(dw - a * beta, std::max(std::fabs(dw), a * beta));
    } else {
      track(std::min(0.0, dw - a * beta), std::max(std::fabs(dw), a * beta));
    }
    if (al.p_m > 0.0 && al.p_m < p_cap * (1.0 - 1e-9)) {
      track(dp - beta, std::max(std::fabs(dp), beta));
    } else if (al.p_m >= p_cap * (1.0 - 1e-9)) {
      track(std::max(0.0, beta - dp), std::max(std::fabs(dp), beta));
    }
  }
  kd.multipliers[0] = beta;
  kd.max_residual = max_res;
  return kd;
}

}  // namespace

InnerSolveResult inner_solve_model(double beta, const RateModel& model,
                                   const SystemParams& params, double p_cap) {
  if (!(beta >= 1e-12)) {
    throw std::domain_error("inner_solve: beta must be positive (>= 1e-12)");
  }
  if (!(p_cap > 0.0)) {
    throw std::domain_error("inner_solve: p_cap must be positive");
  }
  const InterfaceBest s = best_sub6(model, params, beta, p_cap);
  const InterfaceBest m = best_mmwave(model, params, beta, p_cap);
  InnerSolveResult out;
  out.allocation.w_sub6 = s.w;
  out.allocation.p_sub6 = s.p;
  out.allocation.w_m = m.w;
  out.allocation.p_m = m.p;
  out.f = s.rate + m.rate;
  out.g = s.cost + m.cost;
  return out;
}

InnerSolveResult inner_solve(double beta, const Sub6Channel& ch,
                             const MmWaveLink& link,
                             const SystemParams& params, double p_cap) {
  return inner_solve_model(beta, uniform_rate_model(ch, link), params, p_cap);
}

SolveReport dinkelbach_model(const RateModel& model,
                             const SystemParams& params,
                             const EeOptions& options,
                             DinkelbachState* state_out) {
  SolveReport report;
  DinkelbachState st;
  double beta = std::max(options.beta_floor, 1e-12);
  st.beta = beta;

  InnerSolveResult inner = inner_solve_model(beta, model, params,
                                             options.p_cap);
  if (!(inner.f > 0.0) || !(inner.g > 0.0)) {
    report.warnings.push_back(
        "degenerate channel: zero achievable rate, ee = 0");
    report.allocation = Allocation{};
    report.eval = evaluate_model(report.allocation, model, params);
    report.kkt = kkt_residuals_model(report.allocation, model, params);
    report.snr_regime = SnrRegime::Low;
    st.history.emplace_back(beta, 0.0);
    if (state_out) *state_out = st;
    return report;
  }

  const double delta =
      options.delta > 0.0 ? options.delta : 1e-9 * inner.f;
  st.delta = delta;

  // When beta reaches the optimal ratio, F(beta) ~ 0 and the zero allocation
  // is also an argmax; the iterate that produced beta stays the answer.
  InnerSolveResult incumbent = inner;
  for (int n = 0; n < options.max_iterations; ++n) {
    const double big_f = inner.f - beta * inner.g;
    st.beta = beta;
    st.f_value = inner.f;
    st.g_value = inner.g;
    st.big_f = big_f;
    st.iteration = n;
    st.history.emplace_back(beta, big_f);
    if (inner.g > 0.0) incumbent = inner;
    if (big_f <= delta) break;
    beta = inner.f / inner.g;
    inner = inner_solve_model(beta, model, params, options.p_cap);
  }

  report.allocation = incumbent.allocation;
  report.eval = evaluate_model(report.allocation, model, params);
  const double ee = incumbent.g > 0.0 ? incumbent.f / incumbent.g : 0.0;
  report.kkt = ee_certificate(report.allocation, model, params, ee,
                              options.p_cap);
  report.snr_regime = classify_snr_regime(report.allocation, model);
  if (report.eval.consumed_power > params.p_max) {
    report.warnings.push_back(
        "consumed power exceeds p_max (Problem 2 imposes box constraints "
        "only)");
  }
  if (report.allocation.p_sub6 >= options.p_cap * (1.0 - 1e-9) ||
      report.allocation.p_m >= options.p_cap * (1.0 - 1e-9)) {
    report.warnings.push_back("p_cap active at the solution");
  }
  if (state_out) *state_out = st;
  return report;
}

SolveReport dinkelbach(const Sub6Channel& ch, const MmWaveLink& link,
                       const SystemParams& params, double delta) {
  EeOptions opts;
  opts.delta = delta;
  return dinkelbach_model(uniform_rate_model(ch, link), params, opts, nullptr);
}

SolveReport dinkelbach(const Sub6Channel& ch, const MmWaveLink& link,
                       const SystemParams& params, const EeOptions& options,
                       DinkelbachState* state_out) {
  return dinkelbach_model(uniform_rate_model(ch, link), params, options,
                          state_out);
}

double full_bandwidth_ee(const RateModel& model, const SystemParams& params,
                         const EeOptions& options) {
  const double p_cap = options.p_cap;
  const double cost_s = params.n_r * params.adc_a * params.w_sub6_max;
  const double cost_m = params.adc_a * params.w_m_max;

  // Inner argmax with both bandwidths pinned at their caps.
  auto inner = [&](double beta) {
    double p_s = 0.0;
    if (!model.sub6_gains.empty()) {
      auto marg = [&](double p) {
        return model_rate_sub6_dp(model, params.w_sub6_max, p) - beta;
      };
      p_s = detail::decreasing_root(marg, 0.0, p_cap);
    }
    double p_m = 0.0;
    if (model.mm_gain > beta) {
      p_m = std::clamp(params.w_m_max * (1.0 / beta - 1.0 / model.mm_gain),
                       0.0, p_cap);
    }
    const double f = model_rate_sub6(model, params.w_sub6_max, p_s) +
                     model_rate_mm(model, params.w_m_max, p_m);
    const double g = p_s + p_m + cost_s + cost_m;
    return std::pair<double, double>{f, g};
  };

  double beta = std::max(options.beta_floor, 1e-12);
  auto [f, g] = inner(beta);
  if (!(f > 0.0)) return 0.0;
  const double delta = options.delta > 0.0 ? options.delta : 1e-9 * f;
  double best_ratio = 0.0;
  for (int n = 0; n < options.max_iterations; ++n) {
    if (g > 0.0) best_ratio = std::max(best_ratio, f / g);
    if (f - beta * g <= delta) break;
    beta = f / g;
    std::tie(f, g) = inner(beta);
  }
  return best_ratio;
}

}  // namespace dualband
