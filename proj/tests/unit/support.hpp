#pragma once

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "krzyz/config.hpp"

namespace krzyz::testing {

inline constexpr double kTwoOverE = 2.0 / std::numbers::e;
inline constexpr double kInvE = 1.0 / std::numbers::e;

/// Random config with 1..max_atoms atoms, total mass in (0.2, max_mass),
/// atoms at least 0.05 apart.
inline AtomicConfig random_config(std::mt19937_64& rng, int n, int max_atoms = 6, double max_mass = 4.0) {
  std::uniform_int_distribution<int> count(1, max_atoms);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const int N = count(rng);
  std::vector<Atom> atoms;
  while (static_cast<int>(atoms.size()) < N) {
    const double th = kTwoPi * u(rng);
    bool close = false;
    for (const auto& a : atoms) close = close || std::abs(angle_diff(a.theta, th)) < 0.05;
    if (!close) atoms.push_back({th, 0.05 + u(rng)});
  }
  double sum = 0.0;
  for (const auto& a : atoms) sum += a.lambda;
  const double t = 0.2 + (max_mass - 0.2) * u(rng);
  for (auto& a : atoms) a.lambda *= t / sum;
  return AtomicConfig::make(std::move(atoms), n);
}

/// Uniform by area in the disk of the given radius.
inline cplx random_disk_point(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return std::polar(radius * std::sqrt(u(rng)), kTwoPi * u(rng));
}

/// The n-th roots of -1: e^{i (2k - 1) pi / n}.
inline std::vector<cplx> roots_of_minus_one(int n) {
  std::vector<cplx> z;
  for (int k = 1; k <= n; ++k) z.push_back(std::polar(1.0, (2 * k - 1) * std::numbers::pi / n));
  return z;
}

}  // namespace krzyz::testing
