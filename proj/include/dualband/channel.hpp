//
// Copyright 2026 The dualband Authors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef DUALBAND_CHANNEL_HPP_
#define DUALBAND_CHANNEL_HPP_

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace dualband {

/// A sub-6 GHz MIMO channel: the raw complex gain matrix (n_r x n_t, noise
/// normalized to unit variance) together with its singular values in
/// descending order.
struct Sub6Channel {
  int n_t = 0;
  int n_r = 0;
  Eigen::MatrixXcd entries;              // n_r x n_t
  std::vector<double> singular_values;   // size min(n_t, n_r), descending
};

/// A millimeter-wave link after analog beamforming collapses the array to a
/// single effective scalar power gain A = |w_r^H H w_t|^2.
struct MmWaveLink {
  double gain_a = 0.0;
};

/// Compound-set description of partial transmitter channel knowledge: a
/// rank-one LOS mean sqrt(los_gain) * v * u^H plus perturbations of spectral
/// norm at most epsilon whose entries have variance sigma_e2.
struct CsitModel {
  double los_gain = 0.0;   // mean-channel power (lambda)
  Eigen::VectorXcd u;      // n_t, unit norm
  Eigen::VectorXcd v;      // n_r, unit norm
  double epsilon = 0.0;    // spectral-norm radius of the perturbation
  double sigma_e2 = 0.0;   // per-entry error variance
};

/// Singular values of an arbitrary complex matrix, descending.
/// Throws std::domain_error if any entry is non-finite.
std::vector<double> singular_values(const Eigen::MatrixXcd& m);

/// Wraps a matrix into a Sub6Channel, computing its singular values.
Sub6Channel make_sub6_channel(Eigen::MatrixXcd entries);

/// i.i.d. circularly symmetric complex Gaussian entries with unit variance,
/// deterministic for a given seed.
Sub6Channel generate_rayleigh(int n_t, int n_r, std::uint64_t seed);

/// Effective beamformed mmWave power gain: antenna-count-scaled Rician power
/// draw with Rice factor rice_k, mean n_t * n_r. Deterministic per seed.
double generate_mmwave_gain(int n_t, int n_r, double rice_k,
                            std::uint64_t seed);

/// Random compound-set model with unit-norm directions drawn from seed.
CsitModel make_random_csit_model(int n_t, int n_r, double los_gain,
                                 double epsilon, double sigma_e2,
                                 std::uint64_t seed);

/// Draws H = Hbar + dH with Gaussian dH (entry variance sigma_e2), rescaled
/// when its spectral norm exceeds epsilon so every sample stays inside the
/// compound set.
Sub6Channel sample_compound_channel(const CsitModel& model,
                                    std::uint64_t seed);

/// The worst channel of the compound set: (sqrt(los_gain) - epsilon)^+ v u^H.
Sub6Channel worst_case_channel(const CsitModel& model);

/// Plain-text channel exchange format: first line "n_r n_t", then n_r lines
/// of n_t entries "re+imj" separated by spaces.
void write_channel(std::ostream& os, const Eigen::MatrixXcd& m);
void write_channel_file(const std::string& path, const Eigen::MatrixXcd& m);
Eigen::MatrixXcd read_channel(std::istream& is);
Eigen::MatrixXcd read_channel_file(const std::string& path);

}  // namespace dualband

#endif  // DUALBAND_CHANNEL_HPP_
