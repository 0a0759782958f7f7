//
// Copyright 2026 The dualband Authors
// SPDX-License-Identifier: Apache-2.0
//

#include "dualband/channel.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace dualband {

namespace {

std::complex<double> standard_complex_gaussian(std::mt19937_64& rng) {
  static constexpr double kInvSqrt2 = 0.7071067811865476;
  std::normal_distribution<double> n01(0.0, 1.0);
  const double re = n01(rng);
  const double im = n01(rng);
  return {re * kInvSqrt2, im * kInvSqrt2};
}

Eigen::MatrixXcd complex_gaussian_matrix(int rows, int cols,
                                         std::mt19937_64& rng) {
  Eigen::MatrixXcd m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      m(i, j) = standard_complex_gaussian(rng);
    }
  }
  return m;
}

Eigen::VectorXcd random_unit_vector(int n, std::mt19937_64& rng) {
  Eigen::VectorXcd v(n);
  for (int i = 0; i < n; ++i) v(i) = standard_complex_gaussian(rng);
  const double norm = v.norm();
  if (norm == 0.0) {
    v.setZero();
    v(0) = 1.0;
    return v;
  }
  return v / norm;
}

}  // namespace

std::vector<double> singular_values(const Eigen::MatrixXcd& m) {
  if (m.size() == 0) {
    throw std::domain_error("singular_values: empty matrix");
  }
  if (!m.allFinite()) {
    throw std::domain_error("singular_values: non-finite entries");
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& sv = svd.singularValues();
  return {sv.data(), sv.data() + sv.size()};
}

Sub6Channel make_sub6_channel(Eigen::MatrixXcd entries) {
  Sub6Channel ch;
  ch.n_r = static_cast<int>(entries.rows());
  ch.n_t = static_cast<int>(entries.cols());
  ch.singular_values = singular_values(entries);
  ch.entries = std::move(entries);
  return ch;
}

Sub6Channel generate_rayleigh(int n_t, int n_r, std::uint64_t seed) {
  if (n_t < 1 || n_r < 1) {
    throw std::domain_error("generate_rayleigh: antenna counts must be >= 1");
  }
  std::mt19937_64 rng(seed);
  return make_sub6_channel(complex_gaussian_matrix(n_r, n_t, rng));
}

double generate_mmwave_gain(int n_t, int n_r, double rice_k,
                            std::uint64_t seed) {
  if (n_t < 1 || n_r < 1) {
    throw std::domain_error("generate_mmwave_gain: antenna counts must be >= 1");
  }
  if (!(rice_k >= 0.0)) {
    throw std::domain_error("generate_mmwave_gain: rice_k must be >= 0");
  }
  std::mt19937_64 rng(seed ^ 0x6d6d5761766521ULL);
  // Rician fading amplitude with E[|h|^2] = 1: fixed LOS component of power
  // K/(K+1) plus scattered power 1/(K+1).
  const double los = std::sqrt(rice_k / (rice_k + 1.0));
  const std::complex<double> scatter =
      standard_complex_gaussian(rng) / std::sqrt(rice_k + 1.0);
  const double h2 = std::norm(std::complex<double>(los, 0.0) + scatter);
  return static_cast<double>(n_t) * static_cast<double>(n_r) * h2;
}

CsitModel make_random_csit_model(int n_t, int n_r, double los_gain,
                                 double epsilon, double sigma_e2,
                                 std::uint64_t seed) {
  if (n_t < 1 || n_r < 1) {
    throw std::domain_error("make_random_csit_model: antenna counts must be >= 1");
  }
  if (!(los_gain >= 0.0) || !(epsilon >= 0.0) || !(sigma_e2 >= 0.0)) {
    throw std::domain_error("make_random_csit_model: negative parameter");
  }
  std::mt19937_64 rng(seed ^ 0x637369744d6f64ULL);
  CsitModel model;
  model.los_gain = los_gain;
  model.u = random_unit_vector(n_t, rng);
  model.v = random_unit_vector(n_r, rng);
  model.epsilon = epsilon;
  model.sigma_e2 = sigma_e2;
  return model;
}

Sub6Channel sample_compound_channel(const CsitModel& model,
                                    std::uint64_t seed) {
  const int n_t = static_cast<int>(model.u.size());
  const int n_r = static_cast<int>(model.v.size());
  Eigen::MatrixXcd hbar =
      std::sqrt(model.los_gain) * model.v * model.u.adjoint();

  Eigen::MatrixXcd dh = Eigen::MatrixXcd::Zero(n_r, n_t);
  if (model.sigma_e2 > 0.0) {
    std::mt19937_64 rng(seed);
    dh = std::sqrt(model.sigma_e2) * complex_gaussian_matrix(n_r, n_t, rng);
    // Truncate (not reject) to honor the spectral-norm bound.
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(dh);
    const double norm2 = svd.singularValues()(0);
    if (norm2 > model.epsilon) {
      dh *= (norm2 > 0.0 ? model.epsilon / norm2 : 0.0);
    }
  }
  return make_sub6_channel(hbar + dh);
}

Sub6Channel worst_case_channel(const CsitModel& model) {
  const double g = std::max(0.0, std::sqrt(model.los_gain) - model.epsilon);
  Eigen::MatrixXcd h = g * model.v * model.u.adjoint();
  return make_sub6_channel(std::move(h));
}

void write_channel(std::ostream& os, const Eigen::MatrixXcd& m) {
  os << m.rows() << ' ' << m.cols() << '\n';
  char buf[96];
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g%+.17gj", m(i, j).real(),
                    m(i, j).imag());
      if (j > 0) os << ' ';
      os << buf;
    }
    os << '\n';
  }
}

void write_channel_file(const std::string& path, const Eigen::MatrixXcd& m) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("write_channel_file: cannot open " + path);
  write_channel(os, m);
}

namespace {

std::complex<double> parse_complex_entry(const std::string& tok) {
  if (tok.size() < 2 || tok.back() != 'j') {
    throw std::runtime_error("channel parse: entry '" + tok +
                             "' does not end in 'j'");
  }
  const std::string body = tok.substr(0, tok.size() - 1);
  // Split at the sign of the imaginary part: the first '+'/'-' that is not
  // leading and not part of an exponent.
  std::size_t split = std::string::npos;
  for (std::size_t i = 1; i < body.size(); ++i) {
    const char c = body[i];
    if ((c == '+' || c == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos) {
    throw std::runtime_error("channel parse: entry '" + tok +
                             "' lacks an imaginary part");
  }
  std::size_t used = 0;
  const double re = std::stod(body.substr(0, split), &used);
  if (used != split) {
    throw std::runtime_error("channel parse: bad real part in '" + tok + "'");
  }
  const std::string imnum = body.substr(split);
  const double im = std::stod(imnum, &used);
  if (used != imnum.size()) {
    throw std::runtime_error("channel parse: bad imaginary part in '" + tok +
                             "'");
  }
  return {re, im};
}

}  // namespace

Eigen::MatrixXcd read_channel(std::istream& is) {
  int n_r = 0, n_t = 0;
  if (!(is >> n_r >> n_t) || n_r < 1 || n_t < 1) {
    throw std::runtime_error("channel parse: bad header (expected 'n_r n_t')");
  }
  Eigen::MatrixXcd m(n_r, n_t);
  for (int i = 0; i < n_r; ++i) {
    for (int j = 0; j < n_t; ++j) {
      std::string tok;
      if (!(is >> tok)) {
        throw std::runtime_error("channel parse: truncated matrix data");
      }
      m(i, j) = parse_complex_entry(tok);
    }
  }
  return m;
}

Eigen::MatrixXcd read_channel_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("read_channel_file: cannot open " + path);
  return read_channel(is);
}

}  // namespace dualband
