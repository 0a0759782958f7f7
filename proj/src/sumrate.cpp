//
// Copyright 2026 The dualband Authors
// SPDX-License-Identifier: Apache-2.0
//

#include "dualband/sumrate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

#include "dualband/specialfn.hpp"

namespace dualband {

const char* to_string(ActiveCase c) {
  switch (c) {
    case ActiveCase::FullSub6: return "full_sub6";
    case ActiveCase::FullMmWave: return "full_mmwave";
    case ActiveCase::Sub6Only: return "sub6_only";
    case ActiveCase::MmWaveOnly: return "mmwave_only";
    case ActiveCase::NumericInterior: return "numeric_interior";
  }
  return "?";
}

const char* to_string(SnrRegime r) {
  switch (r) {
    case SnrRegime::High: return "high";
    case SnrRegime::Low: return "low";
    case SnrRegime::Mixed: return "mixed";
  }
  return "?";
}

namespace detail {

double split_power(const RateModel& model, double w_s, double w_m,
                   double p_total) {
  if (p_total <= 0.0) return 0.0;
  if (w_s <= 0.0) return 0.0;
  if (w_m <= 0.0 || model.mm_gain <= 0.0) return p_total;
  // Marginal-rate difference is strictly decreasing in the sub-6 share.
  auto diff = [&](double p) {
    return model_rate_sub6_dp(model, w_s, p) -
           model_rate_mm_dp(model, w_m, p_total - p);
  };
  return decreasing_root(diff, 0.0, p_total);
}

}  // namespace detail

namespace {

constexpr double kTieTol = 1e-9;

struct Candidate {
  Allocation alloc;
  // Origin tags: "zero", "numeric", "case1", "case2", "low_snr".
  const char* origin = "numeric";
  std::vector<std::string> warnings;  // surfaced only if this candidate wins
};

int active_count(const Allocation& a) {
  return (a.w_sub6 > 0.0 ? 1 : 0) + (a.w_m > 0.0 ? 1 : 0);
}

// Marginal utility of transmit budget at a split point.
double budget_marginal(const RateModel& model, double w_s, double w_m,
                       double p_s, double p_m) {
  if (w_m > 0.0 && p_m > 0.0) return model_rate_mm_dp(model, w_m, p_m);
  if (w_s > 0.0) return model_rate_sub6_dp(model, w_s, p_s);
  if (w_m > 0.0) return model_rate_mm_dp(model, w_m, p_m);
  return 0.0;
}

// ---- Numeric per-pattern maximization -------------------------------------
//
// Transmit powers are eliminated through the budget equality (the power
// constraint binds whenever any transmit power is positive), leaving a
// concave problem over the bandwidths that cyclic 1-D maximization solves
// exactly.

std::optional<Allocation> numeric_both(const RateModel& model,
                                       const SystemParams& params) {
  const double a = params.adc_a;
  const double nra = params.n_r * a;
  const double reserve = 1e-9 * params.p_max;

  auto ws_hi = [&](double wm) {
    return std::min(params.w_sub6_max, (params.p_max - reserve - a * wm) / nra);
  };
  auto wm_hi = [&](double ws) {
    return std::min(params.w_m_max, (params.p_max - reserve - nra * ws) / a);
  };
  if (!(ws_hi(0.0) > 0.0) || !(wm_hi(0.0) > 0.0)) return std::nullopt;

  const double ws_lo = 1e-9 * ws_hi(0.0);
  const double wm_lo = 1e-9 * wm_hi(0.0);

  auto split_at = [&](double ws, double wm) {
    const double p_total = std::max(0.0, params.p_max - nra * ws - a * wm);
    return std::pair<double, double>{
        detail::split_power(model, ws, wm, p_total), p_total};
  };
  auto dphi_ws = [&](double ws, double wm) {
    auto [ps, p_total] = split_at(ws, wm);
    const double pm = p_total - ps;
    const double mu = budget_marginal(model, ws, wm, ps, pm);
    return model_rate_sub6_dw(model, ws, ps) - nra * mu;
  };
  auto dphi_wm = [&](double ws, double wm) {
    auto [ps, p_total] = split_at(ws, wm);
    const double pm = p_total - ps;
    const double mu = budget_marginal(model, ws, wm, ps, pm);
    return model_rate_mm_dw(model, wm, pm) - a * mu;
  };

  double ws = 0.5 * ws_hi(0.0);
  double wm = std::min(0.5 * wm_hi(0.0), wm_hi(ws));
  for (int sweep = 0; sweep < 300; ++sweep) {
    const double ws_prev = ws, wm_prev = wm;
    ws = detail::decreasing_root([&](double w) { return dphi_ws(w, wm); },
                                 ws_lo, std::max(ws_lo, ws_hi(wm)));
    wm = detail::decreasing_root([&](double w) { return dphi_wm(ws, w); },
                                 wm_lo, std::max(wm_lo, wm_hi(ws)));
    if (std::fabs(ws - ws_prev) <= 1e-13 * ws_prev &&
        std::fabs(wm - wm_prev) <= 1e-13 * wm_prev) {
      break;
    }
  }

  auto [ps, p_total] = split_at(ws, wm);
  Allocation out;
  out.w_sub6 = ws;
  out.w_m = wm;
  out.p_sub6 = ps;
  out.p_m = std::max(0.0, p_total - ps);
  return out;
}

std::optional<Allocation> numeric_single(const RateModel& model,
                                         const SystemParams& params,
                                         bool sub6) {
  const double cost = sub6 ? params.n_r * params.adc_a : params.adc_a;
  const double cap = sub6 ? params.w_sub6_max : params.w_m_max;
  const double reserve = 1e-9 * params.p_max;
  const double hi = std::min(cap, (params.p_max - reserve) / cost);
  if (!(hi > 0.0)) return std::nullopt;
  const double lo = 1e-9 * hi;

  auto deriv = [&](double w) {
    const double p = std::max(0.0, params.p_max - cost * w);
    return sub6 ? model_rate_sub6_dw(model, w, p) -
                      cost * model_rate_sub6_dp(model, w, p)
                : model_rate_mm_dw(model, w, p) -
                      cost * model_rate_mm_dp(model, w, p);
  };
  const double w = detail::decreasing_root(deriv, lo, hi);
  Allocation out;
  if (sub6) {
    out.w_sub6 = w;
    out.p_sub6 = std::max(0.0, params.p_max - cost * w);
  } else {
    out.w_m = w;
    out.p_m = std::max(0.0, params.p_max - cost * w);
  }
  return out;
}

// ---- Closed-form candidates ------------------------------------------------

// Rebalances any budget residual into p_sub6, spilling into p_m when p_sub6
// cannot absorb it.
void rebalance_into_psub6(Allocation& al, const SystemParams& params,
                          std::vector<std::string>* warnings,
                          const char* tag) {
  const double resid = params.p_max - consumed_power(al, params);
  if (warnings && std::fabs(resid) > 1e-9 * params.p_max) {
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "%s: budget residual %.3e W rebalanced into p_sub6", tag,
                  resid);
    warnings->push_back(buf);
  }
  if (al.w_sub6 > 0.0) {
    al.p_sub6 += resid;
  } else {
    al.p_m += resid;
  }
  if (al.p_sub6 < 0.0) {
    al.p_m += al.p_sub6;
    al.p_sub6 = 0.0;
  }
  if (al.p_m < 0.0) al.p_m = 0.0;
}

std::optional<Allocation> case1_candidate(const RateModel& model,
                                          const SystemParams& params,
                                          std::vector<std::string>* warnings) {
  const double a = params.adc_a;
  const double big_a = model.mm_gain;
  if (!(big_a > 0.0)) return std::nullopt;
  const double n = static_cast<double>(model.sub6_gains.size());
  const double b = wright_omega(std::log(a * big_a) - 1.0).value;
  const double c = params.n_r * a + n * params.n_r * a / b;

  Allocation al;
  al.w_sub6 = params.w_sub6_max;
  if (params.n_r * a * al.w_sub6 >= params.p_max) {
    // Even the sub-6 component cost at full bandwidth exceeds the budget;
    // shrink to the affordable boundary.
    al.w_sub6 = params.p_max / (params.n_r * a) * (1.0 - 1e-9);
    if (warnings) {
      warnings->push_back(
          "case1: full sub-6 bandwidth unaffordable; shrunk to budget");
    }
    return al;
  }
  al.p_sub6 = std::max(0.0, n * params.n_r * a * al.w_sub6 / b);
  const double rem = params.p_max - c * al.w_sub6;
  al.p_m = std::max(0.0, rem / (b + 1.0));
  al.w_m = std::max(0.0, rem / (a + a / b));
  if (al.w_m > params.w_m_max) {
    al.w_m = params.w_m_max;
    const double p_total =
        params.p_max - params.n_r * a * al.w_sub6 - a * al.w_m;
    al.p_sub6 = detail::split_power(model, al.w_sub6, al.w_m, p_total);
    al.p_m = p_total - al.p_sub6;
    if (warnings) {
      warnings->push_back(
          "case1: w_m clamped at cap; powers re-solved on the face");
    }
  } else {
    rebalance_into_psub6(al, params, warnings, "case1");
  }
  if (al.w_m == 0.0) al.p_m = 0.0;
  return al;
}

std::optional<Allocation> case2_candidate(const RateModel& model,
                                          const SystemParams& params,
                                          std::vector<std::string>* warnings) {
  const double a = params.adc_a;
  const double n = static_cast<double>(model.sub6_gains.size());
  if (model.sub6_gains.empty()) return std::nullopt;
  double mean_log_lambda2 = 0.0;
  for (double g : model.sub6_gains) {
    const double lambda2 = g * params.n_t;
    if (!(lambda2 > 0.0)) {
      if (warnings) {
        warnings->push_back(
            "case2: rank-deficient channel; deferred to the numeric fallback");
      }
      return std::nullopt;
    }
    mean_log_lambda2 += std::log(lambda2);
  }
  mean_log_lambda2 /= n;

  const double d =
      wright_omega(mean_log_lambda2 - std::log(params.n_t / a) - 1.0).value;
  const double e = a + a / d;

  Allocation al;
  al.w_m = params.w_m_max;
  if (a * al.w_m >= params.p_max) {
    al.w_m = params.p_max / a * (1.0 - 1e-9);
    if (warnings) {
      warnings->push_back(
          "case2: full mmWave bandwidth unaffordable; shrunk to budget");
    }
    return al;
  }
  al.p_m = std::max(0.0, a * al.w_m / d);
  const double rem = params.p_max - e * al.w_m;
  al.p_sub6 = std::max(0.0, rem / (d + 1.0));
  al.w_sub6 = std::max(0.0, rem / (params.n_r * e));
  if (al.w_sub6 > params.w_sub6_max) {
    al.w_sub6 = params.w_sub6_max;
    const double p_total =
        params.p_max - params.n_r * a * al.w_sub6 - a * al.w_m;
    al.p_sub6 = detail::split_power(model, al.w_sub6, al.w_m, p_total);
    al.p_m = p_total - al.p_sub6;
    if (warnings) {
      warnings->push_back(
          "case2: w_sub6 clamped at cap; powers re-solved on the face");
    }
  } else {
    rebalance_into_psub6(al, params, warnings, "case2");
  }
  if (al.w_sub6 == 0.0) al.p_sub6 = 0.0;
  return al;
}

Allocation low_snr_candidate(const RateModel& model,
                             const SystemParams& params) {
  const double slope_s =
      std::accumulate(model.sub6_gains.begin(), model.sub6_gains.end(), 0.0);
  const double slope_m = model.mm_gain;
  Allocation al;
  if (slope_s <= 0.0 && slope_m <= 0.0) return al;
  const bool sub6_wins = slope_s >= slope_m;  // tie goes to sub-6
  const double cost = sub6_wins ? params.n_r * params.adc_a : params.adc_a;
  const double cap = sub6_wins ? params.w_sub6_max : params.w_m_max;
  // Linearized rates are bandwidth-independent; spend at most 1% of the
  // budget on component cost and the rest on transmit power.
  const double w = std::min(cap, 0.01 * params.p_max / cost);
  const double p = params.p_max - cost * w;
  if (sub6_wins) {
    al.w_sub6 = w;
    al.p_sub6 = p;
  } else {
    al.w_m = w;
    al.p_m = p;
  }
  return al;
}

ActiveCase classify(const Allocation& al, const SystemParams& params) {
  const bool s_on = al.w_sub6 > 0.0;
  const bool m_on = al.w_m > 0.0;
  if (s_on && m_on) {
    if (al.w_sub6 >= params.w_sub6_max * (1.0 - 1e-9)) {
      return ActiveCase::FullSub6;
    }
    if (al.w_m >= params.w_m_max * (1.0 - 1e-9)) return ActiveCase::FullMmWave;
    return ActiveCase::NumericInterior;
  }
  if (s_on) return ActiveCase::Sub6Only;
  if (m_on) return ActiveCase::MmWaveOnly;
  return ActiveCase::NumericInterior;  // all-zero allocation
}

}  // namespace

SnrRegime classify_snr_regime(const Allocation& al, const RateModel& model) {
  std::vector<double> snrs;
  if (al.w_sub6 > 0.0 && !model.sub6_gains.empty()) {
    const double mean_gain =
        std::accumulate(model.sub6_gains.begin(), model.sub6_gains.end(),
                        0.0) /
        static_cast<double>(model.sub6_gains.size());
    snrs.push_back(al.p_sub6 * mean_gain / al.w_sub6);
  }
  if (al.w_m > 0.0) snrs.push_back(al.p_m * model.mm_gain / al.w_m);
  if (snrs.empty()) return SnrRegime::Low;
  const bool all_high =
      std::all_of(snrs.begin(), snrs.end(), [](double s) { return s >= 10.0; });
  const bool all_low =
      std::all_of(snrs.begin(), snrs.end(), [](double s) { return s <= 0.1; });
  if (all_high) return SnrRegime::High;
  if (all_low) return SnrRegime::Low;
  return SnrRegime::Mixed;
}

ClosedFormConstants closed_form_constants(const Sub6Channel& ch,
                                          const MmWaveLink& link,
                                          const SystemParams& params) {
  const RateModel model = uniform_rate_model(ch, link);
  ClosedFormConstants k;
  const double a = params.adc_a;
  if (model.mm_gain > 0.0) {
    k.b = wright_omega(std::log(a * model.mm_gain) - 1.0).value;
    k.c = params.n_r * a +
          static_cast<double>(model.sub6_gains.size()) * params.n_r * a / k.b;
    k.b_valid = true;
  }
  const bool full_rank =
      !ch.singular_values.empty() &&
      std::all_of(ch.singular_values.begin(), ch.singular_values.end(),
                  [](double sv) { return sv > 0.0; });
  if (full_rank) {
    double mean_log_lambda2 = 0.0;
    for (double sv : ch.singular_values) mean_log_lambda2 += 2.0 * std::log(sv);
    mean_log_lambda2 /= static_cast<double>(ch.singular_values.size());
    k.d = wright_omega(mean_log_lambda2 - std::log(params.n_t / a) - 1.0).value;
    k.e = a + a / k.d;
    k.d_valid = true;
  }
  return k;
}

Allocation solve_case1(const Sub6Channel& ch, const MmWaveLink& link,
                       const SystemParams& params) {
  const RateModel model = uniform_rate_model(ch, link);
  auto al = case1_candidate(model, params, nullptr);
  if (!al) {
    // A = 0: the mmWave side of the system never activates.
    Allocation out;
    out.w_sub6 = params.w_sub6_max;
    out.p_sub6 =
        std::max(0.0, params.p_max - params.n_r * params.adc_a * out.w_sub6);
    return out;
  }
  return *al;
}

Allocation solve_case2(const Sub6Channel& ch, const MmWaveLink& link,
                       const SystemParams& params) {
  const RateModel model = uniform_rate_model(ch, link);
  for (double g : model.sub6_gains) {
    if (!(g > 0.0)) {
      throw std::domain_error("solve_case2: rank-deficient channel");
    }
  }
  auto al = case2_candidate(model, params, nullptr);
  if (!al) throw std::domain_error("solve_case2: empty channel");
  return *al;
}

Allocation solve_low_snr(const Sub6Channel& ch, const MmWaveLink& link,
                         const SystemParams& params) {
  return low_snr_candidate(uniform_rate_model(ch, link), params);
}

SolveReport solve_model(const RateModel& model, const SystemParams& params,
                        SolveMode mode) {
  SolveReport report;
  std::vector<Candidate> cands;
  cands.push_back({Allocation{}, "zero", {}});

  const bool want_numeric =
      mode == SolveMode::Auto || mode == SolveMode::Numeric;
  const bool want_closed = mode == SolveMode::Auto || mode == SolveMode::HighSnr;
  const bool want_low = mode == SolveMode::Auto || mode == SolveMode::LowSnr;

  if (want_numeric) {
    if (auto al = numeric_single(model, params, true)) {
      cands.push_back({*al, "numeric", {}});
    }
    if (auto al = numeric_single(model, params, false)) {
      cands.push_back({*al, "numeric", {}});
    }
    if (auto al = numeric_both(model, params)) {
      cands.push_back({*al, "numeric", {}});
    }
  }
  if (want_closed) {
    std::vector<std::string> w1;
    if (auto al = case1_candidate(model, params, &w1)) {
      cands.push_back({*al, "case1", std::move(w1)});
    }
    std::vector<std::string> w2;
    if (auto al = case2_candidate(model, params, &w2)) {
      cands.push_back({*al, "case2", std::move(w2)});
    }
  }
  if (want_low) {
    cands.push_back({low_snr_candidate(model, params), "low_snr", {}});
  }

  const Candidate* best = nullptr;
  EvalReport best_eval;
  for (const Candidate& cand : cands) {
    const EvalReport ev = evaluate_model(cand.alloc, model, params);
    if (!ev.feasible) continue;
    if (best == nullptr) {
      best = &cand;
      best_eval = ev;
      continue;
    }
    const double scale =
        std::max({std::fabs(ev.rate_total), std::fabs(best_eval.rate_total),
                  1e-300});
    const bool tie = std::fabs(ev.rate_total - best_eval.rate_total) <=
                     kTieTol * scale;
    if (tie) {
      const int nc = active_count(cand.alloc);
      const int nb = active_count(best->alloc);
      const bool cand_preferred =
          nc < nb || (nc == nb && nc == 1 && cand.alloc.w_sub6 > 0.0 &&
                      best->alloc.w_sub6 == 0.0);
      if (cand_preferred) {
        best = &cand;
        best_eval = ev;
      }
    } else if (ev.rate_total > best_eval.rate_total) {
      best = &cand;
      best_eval = ev;
    }
  }

  if (best == nullptr) {
    report.warnings.push_back(
        "no feasible candidate; returning the all-zero allocation");
    report.allocation = Allocation{};
    report.eval = evaluate_model(report.allocation, model, params);
    report.kkt = kkt_residuals_model(report.allocation, model, params);
    report.snr_regime = SnrRegime::Low;
    return report;
  }

  report.allocation = best->alloc;
  report.eval = best_eval;
  report.warnings.insert(report.warnings.end(), best->warnings.begin(),
                         best->warnings.end());
  report.kkt = kkt_residuals_model(best->alloc, model, params);
  report.snr_regime = classify_snr_regime(best->alloc, model);
  if (best_eval.rate_total <= 0.0) {
    report.warnings.push_back(
        "no candidate with positive rate; returning the all-zero allocation");
  }

  const bool closed_origin = best->origin == std::string("case1") ||
                             best->origin == std::string("case2");
  if (closed_origin && report.snr_regime != SnrRegime::High) {
    report.warnings.push_back(
        "closed-form solution selected outside the high-SNR regime");
  }
  if (best->origin == std::string("low_snr") &&
      report.snr_regime != SnrRegime::Low) {
    report.warnings.push_back(
        "low-SNR rule selected outside the low-SNR regime");
  }
  return report;
}

SolveReport solve(const Sub6Channel& ch, const MmWaveLink& link,
                  const SystemParams& params, SolveMode mode) {
  return solve_model(uniform_rate_model(ch, link), params, mode);
}

KktDiagnostics kkt_residuals_model(const Allocation& al,
                                   const RateModel& model,
                                   const SystemParams& params) {
  KktDiagnostics kd;
  kd.active_case = classify(al, params);

  const double a = params.adc_a;
  const double nra = params.n_r * a;
  const bool s_on = al.w_sub6 > 0.0;
  const bool m_on = al.w_m > 0.0;
  const bool s_cap = s_on && al.w_sub6 >= params.w_sub6_max * (1.0 - 1e-9);
  const bool m_cap = m_on && al.w_m >= params.w_m_max * (1.0 - 1e-9);

  const double drs_dw =
      s_on ? model_rate_sub6_dw(model, al.w_sub6, al.p_sub6) : 0.0;
  const double drs_dp =
      s_on ? model_rate_sub6_dp(model, al.w_sub6, al.p_sub6) : 0.0;
  const double drm_dw = m_on ? model_rate_mm_dw(model, al.w_m, al.p_m) : 0.0;
  const double drm_dp = m_on ? model_rate_mm_dp(model, al.w_m, al.p_m) : 0.0;

  double mu0 = 0.0;
  if (m_on && al.p_m > 0.0) {
    mu0 = drm_dp;  // W_m A / (W_m + P_m A)
  } else if (s_on && al.p_sub6 > 0.0) {
    mu0 = drs_dp;
  }
  const double mu3 = (s_on && al.p_sub6 == 0.0) ? std::max(0.0, mu0 - drs_dp)
                                                : 0.0;
  const double mu4 = (m_on && al.p_m == 0.0) ? std::max(0.0, mu0 - drm_dp)
                                             : 0.0;
  const double mu1 = s_cap ? std::max(0.0, drs_dw - nra * mu0) : 0.0;
  const double mu2 = m_cap ? std::max(0.0, drm_dw - a * mu0) : 0.0;
  kd.multipliers = {mu0, mu1, mu2, mu3, mu4};

  auto norm = [](double r, double scale) {
    return scale > 0.0 ? r / scale : 0.0;
  };
  double max_res = 0.0;
  auto track = [&](double r) { max_res = std::max(max_res, std::fabs(r)); };

  // Stationarity of the reduced system (off interfaces contribute nothing).
  if (s_on) {
    const double r_ws = drs_dw - nra * mu0 - mu1;
    const double s_ws = std::max({std::fabs(drs_dw), nra * mu0, mu1, 1e-30});
    kd.stationarity_residuals[0] = r_ws;
    track(norm(r_ws, s_ws));

    const double r_ps = drs_dp - mu0 + mu3;
    const double s_ps = std::max({std::fabs(drs_dp), mu0, mu3, 1e-30});
    kd.stationarity_residuals[1] = r_ps;
    track(norm(r_ps, s_ps));
  }
  if (m_on) {
    const double r_wm = drm_dw - a * mu0 - mu2;
    const double s_wm = std::max({std::fabs(drm_dw), a * mu0, mu2, 1e-30});
    kd.stationarity_residuals[2] = r_wm;
    track(norm(r_wm, s_wm));

    const double r_pm = drm_dp - mu0 + mu4;
    const double s_pm = std::max({std::fabs(drm_dp), mu0, mu4, 1e-30});
    kd.stationarity_residuals[3] = r_pm;
    track(norm(r_pm, s_pm));
  }

  const double consumed = consumed_power(al, params);
  kd.slackness_residuals = {mu0 * (params.p_max - consumed),
                            mu1 * (params.w_sub6_max - al.w_sub6),
                            mu2 * (params.w_m_max - al.w_m),
                            mu3 * al.p_sub6, mu4 * al.p_m};
  if (mu0 > 0.0) track((params.p_max - consumed) / params.p_max);
  if (mu1 > 0.0) track((params.w_sub6_max - al.w_sub6) / params.w_sub6_max);
  if (mu2 > 0.0) track((params.w_m_max - al.w_m) / params.w_m_max);
  if (mu3 > 0.0) track(al.p_sub6 / params.p_max);
  if (mu4 > 0.0) track(al.p_m / params.p_max);

  kd.max_residual = max_res;
  return kd;
}

KktDiagnostics kkt_residuals(const Allocation& alloc, const Sub6Channel& ch,
                             const MmWaveLink& link,
                             const SystemParams& params) {
  return kkt_residuals_model(alloc, uniform_rate_model(ch, link), params);
}

}  // namespace dualband
