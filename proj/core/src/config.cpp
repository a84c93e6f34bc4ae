#include "krzyz/config.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "krzyz/errors.hpp"

namespace krzyz {

double wrap_angle(double theta) {
  double r = std::fmod(theta, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

double angle_diff(double a, double b) {
  double d = std::remainder(a - b, kTwoPi);
  if (d <= -std::numbers::pi) d += kTwoPi;
  return d;
}

AtomicConfig AtomicConfig::make(std::vector<Atom> atoms, int n) {
  if (n < 1) throw ValidationError("n: must be >= 1, got " + std::to_string(n));
  if (atoms.empty()) throw ValidationError("atoms: empty atom list");
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const auto& a = atoms[i];
    const std::string where = "atoms[" + std::to_string(i) + "]";
    if (!std::isfinite(a.theta)) throw ValidationError(where + ".theta: non-finite value");
    if (!std::isfinite(a.lambda)) throw ValidationError(where + ".lambda: non-finite value");
    if (a.lambda <= 0.0) throw ValidationError(where + ".lambda: non-positive weight");
  }
  for (auto& a : atoms) a.theta = wrap_angle(a.theta);
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& x, const Atom& y) { return x.theta < y.theta; });

  std::vector<Atom> merged;
  merged.reserve(atoms.size());
  for (const auto& a : atoms) {
    if (!merged.empty() && std::abs(angle_diff(a.theta, merged.back().theta)) < kMergeThreshold) {
      merged.back().lambda += a.lambda;
    } else {
      merged.push_back(a);
    }
  }
  // Wrap-around: last atom just below 2pi vs first atom just above 0.
  if (merged.size() > 1 &&
      std::abs(angle_diff(merged.back().theta, merged.front().theta)) < kMergeThreshold) {
    merged.front().lambda += merged.back().lambda;
    merged.pop_back();
  }

  AtomicConfig cfg;
  cfg.atoms_ = std::move(merged);
  cfg.n_ = n;
  return cfg;
}

TotalMass AtomicConfig::total_mass() const {
  double t = 0.0;
  for (const auto& a : atoms_) t += a.lambda;
  return {t};
}

AtomicConfig AtomicConfig::with_n(int n) const { return make(atoms_, n); }

AtomicConfig AtomicConfig::rotated(double tau) const {
  auto shifted = atoms_;
  for (auto& a : shifted) a.theta += tau;
  return make(std::move(shifted), n_);
}

AtomicConfig reference_config(int n) {
  if (n < 1) throw ValidationError("n: must be >= 1, got " + std::to_string(n));
  std::vector<Atom> atoms;
  atoms.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    atoms.push_back({(2.0 * j - 1.0) * std::numbers::pi / n, 1.0 / n});
  }
  return AtomicConfig::make(std::move(atoms), n);
}

}  // namespace krzyz
