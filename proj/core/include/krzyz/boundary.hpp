#pragma once

#include <cstddef>
#include <vector>

#include "krzyz/config.hpp"

namespace krzyz {

/// Boundary phase of f: f(e^{i theta}) = e^{i phi(theta)} with
///   phi(theta) = -sum_j lambda_j cot((theta - theta_j)/2)
/// away from the atoms. Holds a copy of the config.
///
/// On each gap (theta_j, theta_{j+1}) between consecutive atoms, phi and phi''
/// increase from -inf to +inf and phi' is positive and convex.
class PhaseFunction {
public:
  explicit PhaseFunction(AtomicConfig cfg);

  [[nodiscard]] const AtomicConfig& config() const { return cfg_; }
  [[nodiscard]] std::size_t gap_count() const { return cfg_.size(); }
  /// Gap j is (gap_start(j), gap_start(j) + gap_length(j)); may extend past 2pi.
  [[nodiscard]] double gap_start(std::size_t j) const;
  [[nodiscard]] double gap_length(std::size_t j) const;

  /// Throw PoleError within 1e-12 of an atom.
  [[nodiscard]] double phi(double theta) const;
  [[nodiscard]] double phi_prime(double theta) const;
  [[nodiscard]] double phi_second(double theta) const;

  /// Unchecked versions for use strictly inside a gap.
  [[nodiscard]] double phi_raw(double theta) const;
  [[nodiscard]] double phi_prime_raw(double theta) const;
  [[nodiscard]] double phi_second_raw(double theta) const;

  /// The unique zero of phi'' in gap j (the minimiser of phi' there).
  [[nodiscard]] double phi_prime_argmin(std::size_t j) const;

private:
  void check_pole(double theta) const;
  AtomicConfig cfg_;
};

/// Zeros mu_1..mu_N of phi, one per gap, each lifted into its gap
/// (theta_j < mu_j < theta_{j+1}, so mu_j may exceed 2pi).
std::vector<double> phi_zeros(const AtomicConfig& cfg);

/// t prod sin((theta - mu_j)/2) / prod sin((theta - theta_j)/2).
double phi_product_form(const AtomicConfig& cfg, double theta);
/// Same, reusing precomputed (lifted) zeros.
double phi_product_form(const AtomicConfig& cfg, const std::vector<double>& zeros,
                        double theta);

/// |{theta : phi(theta) < 0}| = sum_j (mu_j - theta_j).
double negativity_measure(const AtomicConfig& cfg);

/// Open arc (a, b) of R / 2piZ with a < b (b may exceed 2pi).
struct Arc {
  double a = 0.0;
  double b = 0.0;
  [[nodiscard]] double length() const { return b - a; }
};

struct IntervalSet {
  std::vector<Arc> arcs;
  [[nodiscard]] double measure() const;
};

struct LevelSets {
  IntervalSet k1;  ///< phi' > k1 n, two arcs per gap split at the phi'' zero
  IntervalSet k2;  ///< phi' < k2 n, at most one arc per gap
};

/// Requires k1 > 1 and 0 < k2 < 1; endpoints located to 1e-12.
LevelSets level_sets(const AtomicConfig& cfg, int n, double k1, double k2);

struct ErmersAudit {
  LevelSets sets;
  double slack = 0.0;  ///< ((k1 + k2)/k2) |K1| + |K2| - 2pi
};

ErmersAudit ermers_audit(const AtomicConfig& cfg, int n, double k1, double k2);

struct VdcArc {
  Arc arc;
  double integral = 0.0;  ///< | int_arc exp(i (phi - n theta)) dtheta |
  double bound = 0.0;     ///< 2 / ((k1 - 1) n)
  [[nodiscard]] bool passes() const { return integral <= bound + 1e-6; }
};

/// Oscillatory integral over every K1 arc against the van der Corput bound.
/// Integrates in the phase variable u = phi(theta); near atoms the tail where
/// 1/phi' < 1e-6 is replaced by its leading integration-by-parts term.
std::vector<VdcArc> vdc_audit(const AtomicConfig& cfg, int n, double k1);

/// Same quadrature for an arbitrary arc inside a single gap.
double oscillatory_integral(const PhaseFunction& phase, std::size_t gap, Arc arc, int n);

struct LevelSetConstant {
  double k1 = 0.0;
  double k2 = 0.0;                 ///< (-k1 + sqrt(k1^2 + 4 k1)) / 2
  double ratio = 0.0;              ///< (k1 + 1)/(k1 - 1): coefficient of N/(pi n)
  double c = 0.0;                  ///< N >= c n
};

/// The constant in N >= c n for the given k1 > 1. For k1 = 4/3 this is
/// k2 = 2/3 and c = (2pi/7)(1/e - 1/3).
LevelSetConstant theorem1_constant(double k1);

}  // namespace krzyz
