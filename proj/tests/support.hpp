//
// Copyright 2026 The dualband Authors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef DUALBAND_TESTS_SUPPORT_HPP_
#define DUALBAND_TESTS_SUPPORT_HPP_

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <complex>
#include <random>

#include "dualband/linkmodel.hpp"

namespace testsupport {

inline std::complex<double> cgauss(std::mt19937_64& rng) {
  std::normal_distribution<double> n01(0.0, 1.0);
  return {n01(rng) * 0.7071067811865476, n01(rng) * 0.7071067811865476};
}

inline Eigen::MatrixXcd random_complex_matrix(int rows, int cols,
                                              std::mt19937_64& rng) {
  Eigen::MatrixXcd m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = cgauss(rng);
  }
  return m;
}

// Random positive semidefinite Hermitian matrix with trace ~ n.
inline Eigen::MatrixXcd random_psd(int n, std::mt19937_64& rng) {
  const Eigen::MatrixXcd g = random_complex_matrix(n, n, rng);
  return g * g.adjoint() / static_cast<double>(n);
}

// Eigenvalues of a 3x3 Hermitian matrix via the characteristic cubic solved
// with the trigonometric formula; fully independent of any linear-algebra
// library. Returned descending.
inline std::array<double, 3> hermitian3_eigenvalues(
    const Eigen::Matrix3cd& m) {
  // Characteristic polynomial x^3 - c2 x^2 + c1 x - c0.
  const double c2 = m.trace().real();
  double c1 = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      c1 += (m(i, i) * m(j, j) - m(i, j) * m(j, i)).real();
    }
  }
  const std::complex<double> det =
      m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
      m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
      m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
  const double c0 = det.real();

  // Depressed cubic t^3 + p t + q with x = t + c2/3.
  const double s = c2 / 3.0;
  const double p = c1 - 3.0 * s * s;
  const double q = -2.0 * s * s * s + c1 * s - c0;
  std::array<double, 3> roots{};
  if (std::fabs(p) < 1e-300) {
    roots.fill(s + std::cbrt(-q));
  } else {
    const double r = std::sqrt(std::max(0.0, -4.0 * p / 3.0));
    double arg = 3.0 * q / (p * r);
    arg = std::min(1.0, std::max(-1.0, arg));
    const double phi = std::acos(arg) / 3.0;
    static constexpr double kTwoPiOver3 = 2.0943951023931953;
    for (int k = 0; k < 3; ++k) {
      roots[k] = s + r * std::cos(phi - kTwoPiOver3 * k);
    }
  }
  std::sort(roots.begin(), roots.end(), std::greater<double>());
  return roots;
}

// Inverse of h(s) = (1+s)ln(1+s) - s, the interior-bandwidth stationarity
// map: at an optimum with interior w and positive p, the per-hertz SNR
// satisfies h(s) = a * gain. Pure bisection, independent of the solvers.
inline double h_inverse(double target) {
  if (!(target > 0.0)) return 0.0;
  auto h = [](double s) { return (1.0 + s) * std::log1p(s) - s; };
  double lo = 0.0, hi = 1.0;
  while (h(hi) < target && hi < 1e300) hi *= 2.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (h(mid) > target ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

struct Instance {
  dualband::Sub6Channel ch;
  dualband::MmWaveLink link;
  dualband::SystemParams params;
};

// Random instance family used by the solver / oracle cross-checks: antenna
// counts from the small-to-64x16 set, ADC constants over three decades, and
// wide log-uniform channel strengths so every SNR regime shows up.
inline Instance random_instance(std::mt19937_64& rng) {
  static constexpr int kNt[] = {1, 2, 4, 64};
  static constexpr int kNr[] = {1, 2, 16};
  std::uniform_int_distribution<int> pick_t(0, 3);
  std::uniform_int_distribution<int> pick_r(0, 2);
  std::uniform_real_distribution<double> u01(0.0, 1.0);

  Instance inst;
  inst.params.n_t = kNt[pick_t(rng)];
  inst.params.n_r = kNr[pick_r(rng)];
  inst.params.adc_a = std::pow(10.0, -10.0 + 3.0 * u01(rng));
  inst.params.p_max = 0.05 + 9.95 * u01(rng);
  inst.params.w_sub6_max = 1e6;
  inst.params.w_m_max = 1e9;

  const double gain_scale = std::pow(10.0, 10.0 * u01(rng));
  dualband::Sub6Channel raw = dualband::generate_rayleigh(
      inst.params.n_t, inst.params.n_r, rng());
  inst.ch =
      dualband::make_sub6_channel(std::sqrt(gain_scale) * raw.entries);
  inst.link.gain_a = std::pow(10.0, -1.0 + 11.0 * u01(rng));
  return inst;
}

}  // namespace testsupport

#endif  // DUALBAND_TESTS_SUPPORT_HPP_
