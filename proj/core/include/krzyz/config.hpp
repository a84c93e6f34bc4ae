#pragma once

#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

namespace krzyz {

using cplx = std::complex<double>;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Atoms closer than this (in radians, on the circle) are merged.
inline constexpr double kMergeThreshold = 1e-9;

/// One point mass of the Herglotz measure of -log f. The atom sits at
/// e^{i theta} on the circle; the series parameter is alpha = e^{-i theta}.
struct Atom {
  double theta = 0.0;
  double lambda = 0.0;

  [[nodiscard]] cplx alpha() const { return std::polar(1.0, -theta); }
  bool operator==(const Atom&) const = default;
};

/// Total mass t = sum of weights; f(0) = e^{-t}.
struct TotalMass {
  double t = 0.0;
};

/// Validated atomic singular inner function
///   f(z) = exp(-sum_j lambda_j (1 + alpha_j z) / (1 - alpha_j z))
/// together with the coefficient index n being studied.
///
/// Invariants: n >= 1, at least one atom, weights > 0, angles in [0, 2pi)
/// sorted ascending and pairwise separated by more than kMergeThreshold.
class AtomicConfig {
public:
  /// Reduces angles mod 2pi, sorts, and merges near-duplicate atoms
  /// (weights summed). Throws ValidationError naming the bad field.
  static AtomicConfig make(std::vector<Atom> atoms, int n);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] std::size_t size() const { return atoms_.size(); }
  [[nodiscard]] std::span<const Atom> atoms() const { return atoms_; }
  [[nodiscard]] const Atom& operator[](std::size_t i) const { return atoms_[i]; }
  [[nodiscard]] TotalMass total_mass() const;

  /// Same atoms, different target index.
  [[nodiscard]] AtomicConfig with_n(int n) const;
  /// Every angle shifted by tau (mod 2pi). Coefficient a_j picks up e^{-ij tau}.
  [[nodiscard]] AtomicConfig rotated(double tau) const;

  bool operator==(const AtomicConfig&) const = default;

private:
  AtomicConfig() = default;
  std::vector<Atom> atoms_;
  int n_ = 1;
};

/// f_n(z) = exp((z^n - 1)/(z^n + 1)): n atoms of weight 1/n at the angles
/// (2j - 1) pi / n, i.e. alpha_j ranges over the n-th roots of -1.
AtomicConfig reference_config(int n);

/// Reduce an angle to [0, 2pi).
double wrap_angle(double theta);

/// Signed angular difference reduced to (-pi, pi].
double angle_diff(double a, double b);

}  // namespace krzyz
