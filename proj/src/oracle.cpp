//
// Copyright 2026 The dualband Authors
// SPDX-License-Identifier: Apache-2.0
//

#include "dualband/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

namespace dualband {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Axis {
  double glo = 0.0;  // global bounds
  double ghi = 0.0;
  bool log = false;
  double lo = 0.0;  // current window
  double hi = 0.0;
};

struct GridBest {
  std::vector<double> x;
  double f = -kInf;
  double resolution = 0.0;
  bool found = false;
};

// Objective over axis coordinates; returns -inf for infeasible points.
using ObjectiveFn = std::function<double(const std::vector<double>&)>;

std::vector<double> axis_points(const Axis& ax, int n) {
  std::vector<double> pts(n);
  if (n == 1 || ax.hi <= ax.lo) {
    pts.assign(n, ax.lo);
    return pts;
  }
  if (ax.log) {
    const double llo = std::log(ax.lo), lhi = std::log(ax.hi);
    for (int i = 0; i < n; ++i) {
      pts[i] = std::exp(llo + (lhi - llo) * i / (n - 1));
    }
    pts.front() = ax.lo;
    pts.back() = ax.hi;
  } else {
    for (int i = 0; i < n; ++i) pts[i] = ax.lo + (ax.hi - ax.lo) * i / (n - 1);
    pts.back() = ax.hi;
  }
  return pts;
}

void shrink_window(Axis& ax, double center, double factor) {
  if (ax.log) {
    const double lc = std::log(center);
    const double half = 0.5 * (std::log(ax.hi) - std::log(ax.lo)) * factor;
    ax.lo = std::max(ax.glo, std::exp(lc - half));
    ax.hi = std::min(ax.ghi, std::exp(lc + half));
  } else {
    const double half = 0.5 * (ax.hi - ax.lo) * factor;
    ax.lo = std::max(ax.glo, center - half);
    ax.hi = std::min(ax.ghi, center + half);
  }
  if (!(ax.hi > ax.lo)) {
    ax.lo = std::max(ax.glo, std::min(center, ax.ghi));
    ax.hi = ax.lo;
  }
}

GridBest refine(std::vector<Axis> axes, const GridSpec& spec,
                const ObjectiveFn& objective) {
  GridBest best;
  const int dims = static_cast<int>(axes.size());
  for (int round = 0; round < spec.refinement_rounds; ++round) {
    std::vector<std::vector<double>> pts(dims);
    for (int d = 0; d < dims; ++d) {
      pts[d] = axis_points(axes[d], spec.points_per_axis);
    }
    std::vector<int> idx(dims, 0);
    std::vector<double> x(dims);
    bool done = false;
    while (!done) {
      for (int d = 0; d < dims; ++d) x[d] = pts[d][idx[d]];
      const double f = objective(x);
      if (f > best.f) {  // strict: first (lexicographic) point wins ties
        best.f = f;
        best.x = x;
        best.found = true;
      }
      int d = dims - 1;
      for (; d >= 0; --d) {
        if (++idx[d] < static_cast<int>(pts[d].size())) break;
        idx[d] = 0;
      }
      done = d < 0;
    }
    if (!best.found) break;
    for (int d = 0; d < dims; ++d) {
      shrink_window(axes[d], best.x[d], spec.shrink_factor);
    }
  }

  if (best.found) {
    // Resolution estimate from the steepest finite-difference slope to the
    // incumbent's neighbors at the final spacing.
    double bound = 0.0;
    for (int d = 0; d < dims; ++d) {
      const double h =
          axes[d].log
              ? best.x[d] * ((std::log(axes[d].hi) - std::log(axes[d].lo)) /
                             std::max(1, spec.points_per_axis - 1))
              : (axes[d].hi - axes[d].lo) /
                    std::max(1, spec.points_per_axis - 1);
      double delta = 0.0;
      std::vector<double> x = best.x;
      for (double step : {h, -h}) {
        x[d] = std::clamp(best.x[d] + step, axes[d].glo, axes[d].ghi);
        const double f = objective(x);
        if (f > -kInf) delta = std::max(delta, std::fabs(best.f - f));
        x[d] = best.x[d];
      }
      bound += 2.0 * delta;
    }
    best.resolution = bound + 1e-12 * std::max(1.0, std::fabs(best.f));
  }
  return best;
}

struct PatternBest {
  Allocation alloc;
  double f = 0.0;
  double resolution = 0.0;
};

void consider(PatternBest& best, const GridBest& gb,
              const std::function<Allocation(const std::vector<double>&)>&
                  to_alloc) {
  if (!gb.found || !(gb.f > best.f)) return;
  best.alloc = to_alloc(gb.x);
  best.f = gb.f;
  best.resolution = gb.resolution;
}

}  // namespace

namespace {

void validate_spec(const GridSpec& spec) {
  if (spec.points_per_axis < 8) {
    throw std::domain_error("grid_search: points_per_axis must be >= 8");
  }
  if (!(spec.shrink_factor > 0.0) || !(spec.shrink_factor < 1.0) ||
      spec.shrink_factor * spec.points_per_axis < 2.0) {
    throw std::domain_error(
        "grid_search: shrink_factor must lie in (0, 1) with "
        "shrink_factor * points_per_axis >= 2");
  }
  if (spec.refinement_rounds < 1) {
    throw std::domain_error("grid_search: refinement_rounds must be >= 1");
  }
}

}  // namespace

GridResult grid_search_sumrate_model(const RateModel& model,
                                     const SystemParams& params,
                                     const GridSpec& spec) {
  validate_spec(spec);
  const double a = params.adc_a;
  const double nra = params.n_r * a;
  const double ws_top = std::min(params.w_sub6_max, params.p_max / nra);
  const double wm_top = std::min(params.w_m_max, params.p_max / a);

  PatternBest best;  // seeded with the all-zero allocation at f = 0

  auto w_axis = [](double top) {
    Axis ax;
    ax.glo = ax.lo = 1e-9 * top;
    ax.ghi = ax.hi = top;
    ax.log = true;
    return ax;
  };

  if (ws_top > 0.0) {  // sub-6 only
    Axis ax = w_axis(ws_top);
    auto obj = [&](const std::vector<double>& x) {
      const double p = params.p_max - nra * x[0];
      if (p < 0.0) return -kInf;
      return model_rate_sub6(model, x[0], p);
    };
    consider(best, refine({ax}, spec, obj), [&](const std::vector<double>& x) {
      Allocation al;
      al.w_sub6 = x[0];
      al.p_sub6 = params.p_max - nra * x[0];
      return al;
    });
  }
  if (wm_top > 0.0) {  // mmWave only
    Axis ax = w_axis(wm_top);
    auto obj = [&](const std::vector<double>& x) {
      const double p = params.p_max - a * x[0];
      if (p < 0.0) return -kInf;
      return model_rate_mm(model, x[0], p);
    };
    consider(best, refine({ax}, spec, obj), [&](const std::vector<double>& x) {
      Allocation al;
      al.w_m = x[0];
      al.p_m = params.p_max - a * x[0];
      return al;
    });
  }
  if (ws_top > 0.0 && wm_top > 0.0) {  // both interfaces
    Axis t;
    t.glo = t.lo = 0.0;
    t.ghi = t.hi = 1.0;
    auto obj = [&](const std::vector<double>& x) {
      const double p_total = params.p_max - nra * x[0] - a * x[1];
      if (p_total < 0.0) return -kInf;
      const double ps = x[2] * p_total;
      return model_rate_sub6(model, x[0], ps) +
             model_rate_mm(model, x[1], p_total - ps);
    };
    consider(best, refine({w_axis(ws_top), w_axis(wm_top), t}, spec, obj),
             [&](const std::vector<double>& x) {
               Allocation al;
               al.w_sub6 = x[0];
               al.w_m = x[1];
               const double p_total = params.p_max - nra * x[0] - a * x[1];
               al.p_sub6 = x[2] * p_total;
               al.p_m = p_total - al.p_sub6;
               return al;
             });
  }

  GridResult out;
  out.allocation = best.alloc;
  out.objective = best.f;
  out.resolution_bound = best.resolution;
  return out;
}

GridResult grid_search_sumrate(const Sub6Channel& ch, const MmWaveLink& link,
                               const SystemParams& params,
                               const GridSpec& spec) {
  return grid_search_sumrate_model(uniform_rate_model(ch, link), params, spec);
}

GridResult grid_search_ee_model(const RateModel& model,
                                const SystemParams& params,
                                const GridSpec& spec, double p_cap) {
  validate_spec(spec);
  const double a = params.adc_a;
  const double nra = params.n_r * a;

  auto w_axis = [](double top) {
    Axis ax;
    ax.glo = ax.lo = 1e-9 * top;
    ax.ghi = ax.hi = top;
    ax.log = true;
    return ax;
  };
  auto p_axis = [&]() {
    Axis ax;
    ax.glo = ax.lo = 1e-10 * p_cap;
    ax.ghi = ax.hi = p_cap;
    ax.log = true;
    return ax;
  };

  PatternBest best;  // all-zero allocation has ee = 0 by convention

  {  // sub-6 only
    auto obj = [&](const std::vector<double>& x) {
      const double rate = model_rate_sub6(model, x[0], x[1]);
      const double power = x[1] + nra * x[0];
      return power > 0.0 ? rate / power : 0.0;
    };
    consider(best, refine({w_axis(params.w_sub6_max), p_axis()}, spec, obj),
             [&](const std::vector<double>& x) {
               Allocation al;
               al.w_sub6 = x[0];
               al.p_sub6 = x[1];
               return al;
             });
  }
  {  // mmWave only
    auto obj = [&](const std::vector<double>& x) {
      const double rate = model_rate_mm(model, x[0], x[1]);
      const double power = x[1] + a * x[0];
      return power > 0.0 ? rate / power : 0.0;
    };
    consider(best, refine({w_axis(params.w_m_max), p_axis()}, spec, obj),
             [&](const std::vector<double>& x) {
               Allocation al;
               al.w_m = x[0];
               al.p_m = x[1];
               return al;
             });
  }
  {  // both interfaces
    auto obj = [&](const std::vector<double>& x) {
      const double rate = model_rate_sub6(model, x[0], x[2]) +
                          model_rate_mm(model, x[1], x[3]);
      const double power = x[2] + x[3] + nra * x[0] + a * x[1];
      return power > 0.0 ? rate / power : 0.0;
    };
    consider(best,
             refine({w_axis(params.w_sub6_max), w_axis(params.w_m_max),
                     p_axis(), p_axis()},
                    spec, obj),
             [&](const std::vector<double>& x) {
               Allocation al;
               al.w_sub6 = x[0];
               al.w_m = x[1];
               al.p_sub6 = x[2];
               al.p_m = x[3];
               return al;
             });
  }

  GridResult out;
  out.allocation = best.alloc;
  out.objective = best.f;
  out.resolution_bound = best.resolution;
  return out;
}

GridResult grid_search_ee(const Sub6Channel& ch, const MmWaveLink& link,
                          const SystemParams& params, const GridSpec& spec,
                          double p_cap) {
  return grid_search_ee_model(uniform_rate_model(ch, link), params, spec,
                              p_cap);
}

}  // namespace dualband
