#include "krzyz/boundary.hpp"

#include <array>
#include <cmath>
#include <string>

#include "krzyz/errors.hpp"

namespace krzyz {

namespace {

constexpr double kPoleTol = 1e-12;

// Bisection for an increasing function crossing `target` inside (lo, hi).
// The endpoints are never evaluated (they may be poles).
template <class F>
double bisect_increasing(F f, double lo, double hi, double target) {
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi || hi - lo < 1e-15) break;
    if (f(mid) < target) lo = mid; else hi = mid;
  }
  return 0.5 * (lo + hi);
}

template <class F>
double bisect_decreasing(F f, double lo, double hi, double target) {
  return bisect_increasing([&](double x) { return -f(x); }, lo, hi, -target);
}

// 16-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendre16 {
  std::array<double, 16> x{};
  std::array<double, 16> w{};
  GaussLegendre16() {
    constexpr int m = 16;
    for (int i = 0; i < m; ++i) {
      double z = std::cos(std::numbers::pi * (i + 0.75) / (m + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0;
        double p1 = z;
        for (int k = 2; k <= m; ++k) {
          const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = m * (z * p1 - p0) / (z * z - 1.0);
        const double dz = p1 / dp;
        z -= dz;
        if (std::abs(dz) < 1e-16) break;
      }
      x[static_cast<std::size_t>(i)] = z;
      w[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - z * z) * dp * dp);
    }
  }
};

const GaussLegendre16& gauss16() {
  static const GaussLegendre16 rule;
  return rule;
}

}  // namespace

// ---- PhaseFunction ------------------------------------------------------

PhaseFunction::PhaseFunction(AtomicConfig cfg) : cfg_(std::move(cfg)) {}

double PhaseFunction::gap_start(std::size_t j) const { return cfg_[j].theta; }

double PhaseFunction::gap_length(std::size_t j) const {
  if (cfg_.size() == 1) return kTwoPi;
  const double next = (j + 1 < cfg_.size()) ? cfg_[j + 1].theta : cfg_[0].theta + kTwoPi;
  return next - cfg_[j].theta;
}

void PhaseFunction::check_pole(double theta) const {
  for (const auto& a : cfg_.atoms()) {
    if (std::abs(angle_diff(theta, a.theta)) < kPoleTol) {
      throw PoleError("phi: theta = " + std::to_string(theta) + " is an atom");
    }
  }
}

double PhaseFunction::phi_raw(double theta) const {
  double s = 0.0;
  for (const auto& a : cfg_.atoms()) {
    const double x = 0.5 * (theta - a.theta);
    s -= a.lambda * std::cos(x) / std::sin(x);
  }
  return s;
}

double PhaseFunction::phi_prime_raw(double theta) const {
  double s = 0.0;
  for (const auto& a : cfg_.atoms()) {
    const double sn = std::sin(0.5 * (theta - a.theta));
    s += a.lambda / (2.0 * sn * sn);
  }
  return s;
}

double PhaseFunction::phi_second_raw(double theta) const {
  double s = 0.0;
  for (const auto& a : cfg_.atoms()) {
    const double x = 0.5 * (theta - a.theta);
    const double sn = std::sin(x);
    s -= a.lambda * std::cos(x) / (2.0 * sn * sn * sn);
  }
  return s;
}

double PhaseFunction::phi(double theta) const {
  check_pole(theta);
  return phi_raw(theta);
}

double PhaseFunction::phi_prime(double theta) const {
  check_pole(theta);
  return phi_prime_raw(theta);
}

double PhaseFunction::phi_second(double theta) const {
  check_pole(theta);
  return phi_second_raw(theta);
}

double PhaseFunction::phi_prime_argmin(std::size_t j) const {
  const double s = gap_start(j);
  return bisect_increasing([this](double x) { return phi_second_raw(x); }, s,
                           s + gap_length(j), 0.0);
}

// ---- zeros and product form ----------------------------------------------

std::vector<double> phi_zeros(const AtomicConfig& cfg) {
  const PhaseFunction phase(cfg);
  std::vector<double> mu;
  mu.reserve(cfg.size());
  for (std::size_t j = 0; j < phase.gap_count(); ++j) {
    const double s = phase.gap_start(j);
    mu.push_back(bisect_increasing([&](double x) { return phase.phi_raw(x); }, s,
                                   s + phase.gap_length(j), 0.0));
  }
  return mu;
}

double phi_product_form(const AtomicConfig& cfg, const std::vector<double>& zeros,
                        double theta) {
  for (const auto& a : cfg.atoms()) {
    if (std::abs(angle_diff(theta, a.theta)) < kPoleTol) {
      throw PoleError("phi_product_form: theta is an atom");
    }
  }
  // With theta_j < mu_j < theta_{j+1} the phases sum to pi and the overall
  // unimodular factor is exactly 1.
  double v = cfg.total_mass().t;
  for (std::size_t j = 0; j < cfg.size(); ++j) {
    v *= std::sin(0.5 * (theta - zeros[j])) / std::sin(0.5 * (theta - cfg[j].theta));
  }
  return v;
}

double phi_product_form(const AtomicConfig& cfg, double theta) {
  return phi_product_form(cfg, phi_zeros(cfg), theta);
}

double negativity_measure(const AtomicConfig& cfg) {
  const auto mu = phi_zeros(cfg);
  double s = 0.0;
  for (std::size_t j = 0; j < cfg.size(); ++j) s += mu[j] - cfg[j].theta;
  return s;
}

// ---- level sets -----------------------------------------------------------

double IntervalSet::measure() const {
  double m = 0.0;
  for (const auto& a : arcs) m += a.length();
  return m;
}

namespace {

struct GapLevels {
  double start = 0.0;
  double end = 0.0;
  double argmin = 0.0;
  double min_value = 0.0;
};

GapLevels gap_levels(const PhaseFunction& phase, std::size_t j) {
  GapLevels g;
  g.start = phase.gap_start(j);
  g.end = g.start + phase.gap_length(j);
  g.argmin = phase.phi_prime_argmin(j);
  g.min_value = phase.phi_prime_raw(g.argmin);
  return g;
}

// The two arcs of {phi' > level} in one gap, split at the phi'' zero.
std::array<Arc, 2> above_arcs(const PhaseFunction& phase, const GapLevels& g, double level) {
  auto dphi = [&](double x) { return phase.phi_prime_raw(x); };
  if (g.min_value > level) return {Arc{g.start, g.argmin}, Arc{g.argmin, g.end}};
  const double left = bisect_decreasing(dphi, g.start, g.argmin, level);
  const double right = bisect_increasing(dphi, g.argmin, g.end, level);
  return {Arc{g.start, left}, Arc{right, g.end}};
}

void require_k1(double k1) {
  if (!(k1 > 1.0)) throw ValidationError("k1: must exceed 1");
}

}  // namespace

LevelSets level_sets(const AtomicConfig& cfg, int n, double k1, double k2) {
  require_k1(k1);
  if (!(k2 > 0.0 && k2 < 1.0)) throw ValidationError("k2: must lie in (0, 1)");
  if (n < 1) throw ValidationError("n: must be >= 1");
  const PhaseFunction phase(cfg);
  auto dphi = [&](double x) { return phase.phi_prime_raw(x); };
  LevelSets out;
  for (std::size_t j = 0; j < phase.gap_count(); ++j) {
    const auto g = gap_levels(phase, j);
    for (const auto& arc : above_arcs(phase, g, k1 * n)) out.k1.arcs.push_back(arc);
    const double low = k2 * n;
    if (g.min_value < low) {
      const double left = bisect_decreasing(dphi, g.start, g.argmin, low);
      const double right = bisect_increasing(dphi, g.argmin, g.end, low);
      out.k2.arcs.push_back({left, right});
    }
  }
  return out;
}

ErmersAudit ermers_audit(const AtomicConfig& cfg, int n, double k1, double k2) {
  ErmersAudit audit;
  audit.sets = level_sets(cfg, n, k1, k2);
  audit.slack = (k1 + k2) / k2 * audit.sets.k1.measure() + audit.sets.k2.measure() - kTwoPi;
  return audit;
}

// ---- oscillatory integrals ---------------------------------------------------

double oscillatory_integral(const PhaseFunction& phase, std::size_t gap, Arc arc, int n) {
  constexpr double kTail = 1e-6;  // 1/phi' below this is handled analytically
  const double start = phase.gap_start(gap);
  const double end = start + phase.gap_length(gap);
  if (!(arc.b > arc.a)) return 0.0;
  const double nd = static_cast<double>(n);
  auto dphi = [&](double x) { return phase.phi_prime_raw(x); };
  auto Phi = [&](double x) { return phase.phi_raw(x) - nd * x; };

  const double argmin = phase.phi_prime_argmin(gap);
  const bool left_atom = arc.a - start < 1e-14;
  const bool right_atom = end - arc.b < 1e-14;
  double lo = arc.a;
  double hi = arc.b;
  cplx tail{0.0};
  // Leading boundary term of int e^{i Phi} dtheta over the excised tail.
  auto boundary_term = [&](double x) {
    return std::polar(1.0, Phi(x)) / (cplx{0.0, 1.0} * (dphi(x) - nd));
  };
  if (left_atom) {
    const double cut = bisect_decreasing(dphi, start, std::min(argmin, arc.b), 1.0 / kTail);
    lo = std::min(cut, arc.b);
    tail += boundary_term(lo);
  }
  if (right_atom) {
    const double cut = bisect_increasing(dphi, std::max(argmin, arc.a), end, 1.0 / kTail);
    hi = std::max(cut, lo);
    tail -= boundary_term(hi);
  }
  if (hi <= lo) return std::abs(tail);

  // Substitute u = phi(theta): dtheta = du / phi'(theta(u)).
  const double u0 = phase.phi_raw(lo);
  const double u1 = phase.phi_raw(hi);
  const auto& gl = gauss16();
  const auto panels = static_cast<std::size_t>(std::ceil((u1 - u0) / std::numbers::pi)) + 1;
  const double h = (u1 - u0) / static_cast<double>(panels);
  cplx sum{0.0};
  double theta = lo;
  for (std::size_t p = 0; p < panels; ++p) {
    const double ua = u0 + h * static_cast<double>(p);
    // x[] is descending, so ascending k visits increasing u and theta(u).
    for (std::size_t k = 0; k < 16; ++k) {
      const double u = ua + 0.5 * h * (1.0 - gl.x[k]);
      double blo = theta;
      double bhi = hi;
      double x = theta;
      for (int it = 0; it < 80; ++it) {
        const double fval = phase.phi_raw(x) - u;
        if (fval < 0.0) blo = x; else bhi = x;
        double next = x - fval / dphi(x);
        if (!(next > blo && next < bhi)) next = 0.5 * (blo + bhi);
        if (std::abs(next - x) <= 1e-15 * (1.0 + std::abs(x))) {
          x = next;
          break;
        }
        x = next;
      }
      theta = x;
      sum += 0.5 * h * gl.w[k] * std::polar(1.0 / dphi(x), u - nd * x);
    }
  }
  return std::abs(sum + tail);
}

std::vector<VdcArc> vdc_audit(const AtomicConfig& cfg, int n, double k1) {
  require_k1(k1);
  if (n < 1) throw ValidationError("n: must be >= 1");
  const PhaseFunction phase(cfg);
  const double bound = 2.0 / ((k1 - 1.0) * n);
  std::vector<VdcArc> out;
  for (std::size_t j = 0; j < phase.gap_count(); ++j) {
    const auto g = gap_levels(phase, j);
    for (const auto& arc : above_arcs(phase, g, k1 * n)) {
      out.push_back({arc, oscillatory_integral(phase, j, arc, n), bound});
    }
  }
  return out;
}

LevelSetConstant theorem1_constant(double k1) {
  require_k1(k1);
  LevelSetConstant c;
  c.k1 = k1;
  c.k2 = 0.5 * (-k1 + std::sqrt(k1 * k1 + 4.0 * k1));
  c.ratio = (k1 + 1.0) / (k1 - 1.0);
  // 2/e <= k2 + (N / (pi n)) ratio  =>  N / n >= pi (2/e - k2) / ratio
  c.c = std::numbers::pi * (2.0 / std::numbers::e - c.k2) / c.ratio;
  return c;
}

}  // namespace krzyz
