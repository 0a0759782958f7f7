//
// Copyright 2026 The dualband Authors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef DUALBAND_SPECIALFN_HPP_
#define DUALBAND_SPECIALFN_HPP_

namespace dualband {

/// Result of a Wright omega evaluation. `value` is the unique w > 0 with
/// w + ln(w) = z; `residual` is value + ln(value) - z after convergence.
struct OmegaResult {
  double value = 0.0;
  double residual = 0.0;
  int iterations = 0;
};

/// Wright omega function on the real line: solves w + ln(w) = z for w > 0.
/// Bracketed, safeguarded Newton; |residual| <= 1e-12 * max(1, |z|).
/// Throws std::domain_error for non-finite z.
OmegaResult wright_omega(double z);

/// x * ln(1 + c/x) in nats. Defined as 0 at x = 0 (an interface with zero
/// bandwidth carries zero rate). Increasing and concave in x, increasing
/// in c. Throws std::domain_error for negative inputs.
double rate_kernel(double x, double c);

/// d/dx of rate_kernel: ln(1 + c/x) - (c/x) / (1 + c/x).
double rate_kernel_dx(double x, double c);

/// d/dc of rate_kernel: x / (x + c).
double rate_kernel_dc(double x, double c);

}  // namespace dualband

#endif  // DUALBAND_SPECIALFN_HPP_
