//
// Copyright 2026 The dualband Authors
// SPDX-License-Identifier: Apache-2.0
//

#include "dualband/specialfn.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dualband {

namespace {

inline double omega_f(double w, double z) { return w + std::log(w) - z; }

}  // namespace

OmegaResult wright_omega(double z) {
  if (!std::isfinite(z)) {
    throw std::domain_error("wright_omega: argument must be finite");
  }

  // Initial guess: w ~ exp(z) for z << 0, w ~ z for large z. The max()
  // keeps the bracket expansion away from zero when exp underflows (for
  // z below about -708 no positive double satisfies the equation and the
  // smallest normal is returned with an honestly large residual).
  double w;
  if (z < 0.0) {
    w = std::max(std::exp(z), 2.2250738585072014e-308);
  } else if (z >= 1.0) {
    w = z;
  } else {
    w = 0.5;
  }

  const double tol = 0.25e-12 * std::max(1.0, std::fabs(z));
  int iters = 0;

  // Establish a sign-changing bracket around the root. f is strictly
  // increasing in w, so expansion by doubling/halving terminates.
  double lo = w, hi = w;
  double flo = omega_f(lo, z);
  double fhi = flo;
  while (flo > 0.0 && lo > 1e-300) {
    lo *= 0.5;
    flo = omega_f(lo, z);
    ++iters;
  }
  while (fhi < 0.0 && hi < 1e300) {
    hi *= 2.0;
    fhi = omega_f(hi, z);
    ++iters;
  }

  double f = omega_f(w, z);
  for (int k = 0; k < 100 && std::fabs(f) > tol; ++k) {
    if (f > 0.0) {
      hi = std::min(hi, w);
    } else {
      lo = std::max(lo, w);
    }
    // Newton: f' = 1 + 1/w, step = f * w / (w + 1).
    double next = w - f * w / (w + 1.0);
    if (!(next > lo && next < hi)) {
      next = 0.5 * (lo + hi);  // fall back to bisection
    }
    w = next;
    f = omega_f(w, z);
    ++iters;
  }

  return OmegaResult{w, f, iters};
}

double rate_kernel(double x, double c) {
  if (!(x >= 0.0) || !(c >= 0.0)) {
    throw std::domain_error("rate_kernel: arguments must be nonnegative");
  }
  if (x == 0.0 || c == 0.0) return 0.0;
  return x * std::log1p(c / x);
}

double rate_kernel_dx(double x, double c) {
  if (!(x > 0.0) || !(c >= 0.0)) {
    throw std::domain_error("rate_kernel_dx: requires x > 0, c >= 0");
  }
  const double u = c / x;
  return std::log1p(u) - u / (1.0 + u);
}

double rate_kernel_dc(double x, double c) {
  if (!(x > 0.0) || !(c >= 0.0)) {
    throw std::domain_error("rate_kernel_dc: requires x > 0, c >= 0");
  }
  return x / (x + c);
}

}  // namespace dualband
