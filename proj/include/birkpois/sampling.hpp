#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "birkpois/symspace.hpp"

namespace bp {

/// Seeded random samples of the objects the checks run on.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double normal(double sigma = 1.0) { return sigma * std::normal_distribution<double>(0.0, 1.0)(rng_); }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  Complex cnormal(double sigma = 1.0) {
    const double re = normal(sigma);
    return {re, normal(sigma)};
  }

  CMatrix gaussian(int rows, int cols, double sigma = 1.0) {
    CMatrix a(rows, cols);
    for (int j = 0; j < rows; ++j)
      for (int k = 0; k < cols; ++k) a(j, k) = cnormal(sigma);
    return a;
  }

  CMatrix random_sl(int n) {
    CMatrix g = gaussian(n, n);
    const Complex det = g.determinant();
    return g / std::pow(det, 1.0 / n);
  }

  /// Haar-distributed unitary.
  CMatrix random_unitary(int n) {
    Eigen::HouseholderQR<CMatrix> qr(gaussian(n, n));
    CMatrix q = qr.householderQ();
    const CMatrix r = qr.matrixQR();
    for (int j = 0; j < n; ++j) {
      const Complex d = r(j, j);
      if (std::abs(d) > 0.0) q.col(j) *= d / std::abs(d);
    }
    return q;
  }

  CMatrix random_su(int n) {
    CMatrix q = random_unitary(n);
    const Complex det = q.determinant();
    return q * std::exp(Complex(0.0, -std::arg(det) / n));
  }

  CMatrix random_u(const SymmetricSpace& space) {
    if (space.kind() == SpaceKind::GroupCase) return to_block({random_su(space.n()), random_su(space.n())});
    return random_su(space.dim());
  }

  CMatrix random_k(const SymmetricSpace& space) {
    if (space.kind() == SpaceKind::GroupCase) {
      const CMatrix k = random_su(space.n());
      return to_block({k, k});
    }
    const int m = space.m();
    const int n = space.n();
    CMatrix k = CMatrix::Zero(m + n, m + n);
    k.topLeftCorner(m, m) = random_unitary(m);
    k.bottomRightCorner(n, n) = random_unitary(n);
    const Complex det = k.determinant();
    k.col(m + n - 1) *= std::conj(det) / std::abs(det);
    return k;
  }

  /// Graph chart point Z (n x m) with Gaussian entries.
  CMatrix chart_point(const SymmetricSpace& space, double sigma) { return gaussian(space.n(), space.m(), sigma); }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace bp
