#include "krzyz/series.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "krzyz/errors.hpp"

namespace krzyz {

PowerSeries::PowerSeries(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(cplx{0.0});
}

PowerSeries PowerSeries::zeros(std::size_t order) {
  return PowerSeries(std::vector<cplx>(order + 1, cplx{0.0}));
}

cplx PowerSeries::eval(cplx z) const {
  cplx acc{0.0};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

cplx PowerSeries::eval_derivative(cplx z) const {
  cplx acc{0.0};
  for (std::size_t j = coeffs_.size() - 1; j >= 1; --j) {
    acc = acc * z + static_cast<double>(j) * coeffs_[j];
  }
  return acc;
}

PowerSeries PowerSeries::truncated(std::size_t order) const {
  std::vector<cplx> c(order + 1, cplx{0.0});
  std::copy_n(coeffs_.begin(), std::min(c.size(), coeffs_.size()), c.begin());
  return PowerSeries(std::move(c));
}

double PowerSeries::energy() const {
  double s = 0.0;
  for (const auto& c : coeffs_) s += std::norm(c);
  return s;
}

PowerSeries multiply(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t m = std::min(a.order(), b.order());
  auto out = PowerSeries::zeros(m);
  for (std::size_t j = 0; j <= m; ++j) {
    cplx s{0.0};
    for (std::size_t k = 0; k <= j; ++k) s += a[k] * b[j - k];
    out[j] = s;
  }
  return out;
}

PowerSeries series_exp(const PowerSeries& s) {
  const std::size_t m = s.order();
  auto a = PowerSeries::zeros(m);
  a[0] = std::exp(s[0]);
  for (std::size_t j = 1; j <= m; ++j) {
    cplx acc{0.0};
    for (std::size_t k = 1; k <= j; ++k) acc += static_cast<double>(k) * s[k] * a[j - k];
    a[j] = acc / static_cast<double>(j);
  }
  return a;
}

PowerSeries g_series(const AtomicConfig& cfg, std::size_t order) {
  auto b = PowerSeries::zeros(order);
  b[0] = -cfg.total_mass().t;
  for (const auto& atom : cfg.atoms()) {
    // alpha^j through polar() per term keeps the phase error flat in j.
    for (std::size_t j = 1; j <= order; ++j) {
      b[j] += -2.0 * atom.lambda * std::polar(1.0, -static_cast<double>(j) * atom.theta);
    }
  }
  return b;
}

PowerSeries f_series(const AtomicConfig& cfg, std::size_t order) {
  return series_exp(g_series(cfg, order));
}

PowerSeries fg_series(const AtomicConfig& cfg, std::size_t order) {
  const auto g = g_series(cfg, order);
  return multiply(series_exp(g), g);
}

double m_n(const AtomicConfig& cfg) {
  const auto n = static_cast<std::size_t>(cfg.n());
  return f_series(cfg, n)[n].real();
}

cplx g_value(const AtomicConfig& cfg, cplx z) {
  cplx s{0.0};
  for (const auto& atom : cfg.atoms()) {
    const cplx az = atom.alpha() * z;
    s -= atom.lambda * (1.0 + az) / (1.0 - az);
  }
  return s;
}

cplx g_prime_value(const AtomicConfig& cfg, cplx z) {
  cplx s{0.0};
  for (const auto& atom : cfg.atoms()) {
    const cplx a = atom.alpha();
    const cplx d = 1.0 - a * z;
    s -= 2.0 * atom.lambda * a / (d * d);
  }
  return s;
}

cplx f_value(const AtomicConfig& cfg, cplx z) { return std::exp(g_value(cfg, z)); }

std::size_t order_for_radius(double radius, std::size_t min_order) {
  if (radius <= 0.0) return min_order;
  if (radius >= 1.0) throw ValidationError("radius: must be < 1");
  // |z|^M * M < 1e-16 is ample for |c_j| <= 1 and first derivatives.
  std::size_t m = min_order;
  while (std::pow(radius, static_cast<double>(m)) * static_cast<double>(m + 1) > 1e-17) m += 8;
  return m;
}

std::size_t default_contour_samples(std::size_t order) {
  return std::bit_ceil(std::max<std::size_t>(256, 16 * order));
}

cplx coefficient_via_contour(const AtomicConfig& cfg, std::size_t j, double radius,
                             std::size_t samples) {
  if (!(radius > 0.0 && radius < 1.0)) {
    throw ValidationError("radius: must lie in (0, 1), got " + std::to_string(radius));
  }
  if (samples == 0) samples = default_contour_samples(j);
  if (samples < std::max<std::size_t>(64, 8 * j)) {
    throw ValidationError("samples: need at least max(64, 8j)");
  }
  cplx acc{0.0};
  const double jd = static_cast<double>(j);
  for (std::size_t s = 0; s < samples; ++s) {
    const double th = kTwoPi * static_cast<double>(s) / static_cast<double>(samples);
    acc += f_value(cfg, std::polar(radius, th)) * std::polar(1.0, -jd * th);
  }
  return acc / static_cast<double>(samples) / std::pow(radius, jd);
}

}  // namespace krzyz
