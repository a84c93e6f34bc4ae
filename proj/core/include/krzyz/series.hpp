#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "krzyz/config.hpp"

namespace krzyz {

/// Truncated power series c_0 + c_1 z + ... + c_M z^M.
class PowerSeries {
public:
  PowerSeries() : coeffs_(1, cplx{0.0}) {}
  explicit PowerSeries(std::vector<cplx> coeffs);
  /// Zero series of the given truncation order.
  static PowerSeries zeros(std::size_t order);

  [[nodiscard]] std::size_t order() const { return coeffs_.size() - 1; }
  [[nodiscard]] std::span<const cplx> coeffs() const { return coeffs_; }
  [[nodiscard]] const cplx& operator[](std::size_t j) const { return coeffs_[j]; }
  cplx& operator[](std::size_t j) { return coeffs_[j]; }

  /// Horner evaluation of the truncated sum.
  [[nodiscard]] cplx eval(cplx z) const;
  /// Termwise derivative of the truncated sum, evaluated at z.
  [[nodiscard]] cplx eval_derivative(cplx z) const;
  [[nodiscard]] PowerSeries truncated(std::size_t order) const;
  /// sum |c_j|^2
  [[nodiscard]] double energy() const;

private:
  std::vector<cplx> coeffs_;
};

/// Cauchy product truncated at min(a.order(), b.order()).
PowerSeries multiply(const PowerSeries& a, const PowerSeries& b);

/// e^s via j a_j = sum_{k=1}^j k s_k a_{j-k}, a_0 = e^{s_0}.
PowerSeries series_exp(const PowerSeries& s);

/// Coefficients of g = log f: b_0 = -t, b_j = -2 sum_k lambda_k alpha_k^j.
PowerSeries g_series(const AtomicConfig& cfg, std::size_t order);
/// Coefficients a_j of f = exp(g).
PowerSeries f_series(const AtomicConfig& cfg, std::size_t order);
/// Coefficients T_j(fg).
PowerSeries fg_series(const AtomicConfig& cfg, std::size_t order);

/// M_n(f) = Re a_n for the config's own n.
double m_n(const AtomicConfig& cfg);

/// Closed-form g(z) = -sum lambda (1 + alpha z)/(1 - alpha z), |z| < 1.
cplx g_value(const AtomicConfig& cfg, cplx z);
/// Closed-form g'(z) = -sum 2 lambda alpha / (1 - alpha z)^2.
cplx g_prime_value(const AtomicConfig& cfg, cplx z);
/// f(z) = exp(g(z)).
cplx f_value(const AtomicConfig& cfg, cplx z);

/// Smallest truncation order making the tail of a bounded-coefficient
/// series at |z| = radius negligible (about 1e-16 relative).
std::size_t order_for_radius(double radius, std::size_t min_order = 16);

/// Default contour sample count: max(256, 16 * order), rounded up to a power of two.
std::size_t default_contour_samples(std::size_t order);

/// Taylor coefficient j of f recovered from samples of f on |z| = radius by
/// the trapezoidal rule. Independent of the series recurrence; used as a
/// cross-check. Requires 0 < radius < 1 and samples >= max(64, 8j).
cplx coefficient_via_contour(const AtomicConfig& cfg, std::size_t j, double radius = 0.5,
                             std::size_t samples = 0);

}  // namespace krzyz
