#include "krzyz/inner.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "krzyz/errors.hpp"
#include "krzyz/series.hpp"

namespace krzyz {

// ---- BlaschkeProduct ---------------------------------------------------------

BlaschkeProduct::BlaschkeProduct(cplx unimodular, std::vector<cplx> zeros)
    : xi_(unimodular), zeros_(std::move(zeros)) {
  if (std::abs(std::abs(xi_) - 1.0) > 1e-12) {
    throw ValidationError("BlaschkeProduct: unimodular factor must have modulus 1");
  }
  for (const auto& z : zeros_) {
    if (!(std::abs(z) < 1.0)) throw ValidationError("BlaschkeProduct: zero outside the disk");
  }
}

cplx BlaschkeProduct::operator()(cplx z) const {
  cplx v = xi_;
  for (const auto& a : zeros_) v *= (z - a) / (1.0 - std::conj(a) * z);
  return v;
}

cplx BlaschkeProduct::derivative(cplx z) const {
  const auto num = numerator();
  const auto den = denominator();
  const cplx d = den(z);
  return (num.derivative()(z) * d - num(z) * den.derivative()(z)) / (d * d);
}

ComplexPoly BlaschkeProduct::numerator() const { return ComplexPoly::from_roots(zeros_, xi_); }

ComplexPoly BlaschkeProduct::denominator() const {
  ComplexPoly d({cplx{1.0}});
  for (const auto& a : zeros_) d = d * ComplexPoly({cplx{1.0}, -std::conj(a)});
  return d;
}

double BlaschkeProduct::circle_modulus_error(std::size_t samples) const {
  double err = 0.0;
  for (std::size_t k = 0; k < samples; ++k) {
    const double th = kTwoPi * static_cast<double>(k) / static_cast<double>(samples);
    err = std::max(err, std::abs(std::abs((*this)(std::polar(1.0, th))) - 1.0));
  }
  return err;
}

// ---- h from the config ---------------------------------------------------------

RationalLog rational_log(const AtomicConfig& cfg) {
  const std::size_t N = cfg.size();
  RationalLog out;
  out.t = cfg.total_mass().t;
  ComplexPoly q({cplx{1.0}});
  for (const auto& atom : cfg.atoms()) q = q * ComplexPoly({cplx{1.0}, -atom.alpha()});
  const std::size_t order = N + 4;
  const auto g = g_series(cfg, order);
  std::vector<cplx> r(N + 1, cplx{0.0});
  for (std::size_t k = 0; k <= order; ++k) {
    cplx s{0.0};
    for (std::size_t i = 0; i <= std::min(k, N); ++i) s += q[i] * g[k - i];
    if (k <= N) {
      r[k] = s;
    } else {
      out.tail_residual = std::max(out.tail_residual, std::abs(s));
    }
  }
  out.q = std::move(q);
  out.r = ComplexPoly(std::move(r));
  return out;
}

BlaschkeProduct blaschke_h(const AtomicConfig& cfg) {
  const auto rl = rational_log(cfg);
  const auto num = rl.t * rl.q + rl.r;
  const auto den = rl.t * rl.q - rl.r;
  const auto zs = roots(num);
  std::vector<cplx> inside;
  for (const auto& z : zs) {
    if (std::abs(z) < 1.0) inside.push_back(z);
  }
  if (inside.size() != cfg.size()) {
    throw NumericalError("blaschke_h: extracted degree " + std::to_string(inside.size()) +
                         " != N = " + std::to_string(cfg.size()) +
                         " (tail residual " + std::to_string(rl.tail_residual) + ")");
  }
  // Fix the unimodular factor by averaging h / (zero product) over circle points.
  const BlaschkeProduct bare(cplx{1.0}, inside);
  cplx acc{0.0};
  constexpr int kPoints = 8;
  for (int k = 0; k < kPoints; ++k) {
    const cplx z = std::polar(1.0, kTwoPi * (k + 0.5) / kPoints);
    acc += (num(z) / den(z)) / bare(z);
  }
  const cplx xi = acc / std::abs(acc);
  BlaschkeProduct h(xi, std::move(inside));
  const double err = h.circle_modulus_error();
  if (err > 1e-6) {
    throw NumericalError("blaschke_h: |h| deviates from 1 on the circle by " + std::to_string(err));
  }
  return h;
}

cplx check_fprime_relation(const AtomicConfig& cfg, const BlaschkeProduct& h, cplx z) {
  if (!(std::abs(z) < 1.0)) throw ValidationError("check_fprime_relation: need |z| < 1");
  const cplx hz = h(z);
  if (std::abs(hz + 1.0) < 1e-10) throw PoleError("check_fprime_relation: h(z) = -1");
  const auto a = f_series(cfg, order_for_radius(std::abs(z), 32));
  const cplx f = a.eval(z);
  const cplx df = a.eval_derivative(z);
  const double t = cfg.total_mass().t;
  return df - 2.0 * t * f * h.derivative(z) / ((hz + 1.0) * (hz + 1.0));
}

cplx check_fprime_relation(const AtomicConfig& cfg, cplx z) {
  return check_fprime_relation(cfg, blaschke_h(cfg), z);
}

// ---- Mobius maps and invariance ----------------------------------------------

std::array<cplx, 4> MobiusMap::coefficients() const {
  const double a2 = std::norm(a);
  return {xi - a2, a * (1.0 - xi), std::conj(a) * (xi - 1.0), 1.0 - a2 * xi};
}

cplx MobiusMap::operator()(cplx z) const {
  const auto [A, B, C, D] = coefficients();
  return (A * z + B) / (C * z + D);
}

namespace {

constexpr double kInvariantTol = 1e-9;

bool same_multiset(const AtomicConfig& cfg, double tau) {
  for (const auto& atom : cfg.atoms()) {
    const double target = atom.theta + tau;
    const bool hit = std::any_of(cfg.atoms().begin(), cfg.atoms().end(), [&](const Atom& b) {
      return std::abs(angle_diff(b.theta, target)) < kInvariantTol &&
             std::abs(b.lambda - atom.lambda) < kInvariantTol;
    });
    if (!hit) return false;
  }
  return true;
}

}  // namespace

std::vector<double> rotation_invariants(const AtomicConfig& cfg) {
  std::vector<double> taus{0.0};
  const auto& first = cfg[0];
  for (std::size_t k = 1; k < cfg.size(); ++k) {
    const double tau = wrap_angle(cfg[k].theta - first.theta);
    if (same_multiset(cfg, tau)) taus.push_back(tau);
  }
  std::sort(taus.begin(), taus.end());
  return taus;
}

double mobius_coefficient_gap(const AtomicConfig& cfg, const MobiusMap& psi, std::size_t order) {
  const auto [A, B, C, D] = psi.coefficients();
  const cplx w0 = B / D;
  // psi(z) - w0 as a series: (A z + B)/D * sum (-C z / D)^k minus the constant.
  auto s = PowerSeries::zeros(order);
  {
    cplx geo{1.0};
    std::vector<cplx> inv(order + 1);
    for (std::size_t k = 0; k <= order; ++k) {
      inv[k] = geo / D;
      geo *= -C / D;
    }
    for (std::size_t k = 0; k <= order; ++k) {
      s[k] = B * inv[k] + (k > 0 ? A * inv[k - 1] : cplx{0.0});
    }
    s[0] = 0.0;
  }
  // log f about w0: c_0 = t - 2 sum lambda/(1 - alpha w0),
  // c_k = -2 sum lambda alpha^k / (1 - alpha w0)^{k+1}.
  std::vector<cplx> c(order + 1, cplx{0.0});
  for (const auto& atom : cfg.atoms()) {
    const cplx al = atom.alpha();
    const cplx inv = 1.0 / (1.0 - al * w0);
    c[0] += atom.lambda - 2.0 * atom.lambda * inv;
    cplx pw = inv;
    for (std::size_t k = 1; k <= order; ++k) {
      pw *= al * inv;
      c[k] -= 2.0 * atom.lambda * pw;
    }
  }
  // Horner composition: G(s) = c_0 + s (c_1 + s (c_2 + ...)).
  auto acc = PowerSeries::zeros(order);
  acc[0] = c[order];
  for (std::size_t k = order; k-- > 0;) {
    acc = multiply(acc, s);
    acc[0] += c[k];
  }
  const auto composed = series_exp(acc);
  const auto direct = f_series(cfg, order);
  double gap = 0.0;
  for (std::size_t j = 0; j <= order; ++j) gap = std::max(gap, std::abs(composed[j] - direct[j]));
  return gap;
}

bool mobius_invariance_check(const AtomicConfig& cfg, const MobiusMap& psi, std::size_t order) {
  if (order < 2 * static_cast<std::size_t>(cfg.n())) {
    throw ValidationError("mobius_invariance_check: order must be >= 2n");
  }
  if (!(std::abs(psi.a) < 1.0) || std::abs(std::abs(psi.xi) - 1.0) > 1e-12) {
    throw ValidationError("mobius_invariance_check: need |a| < 1 and |xi| = 1");
  }
  return mobius_coefficient_gap(cfg, psi, order) <= 1e-8;
}

// ---- conditions (1)-(5) ---------------------------------------------------------

namespace {

// Roots of p in the open disk after removing `tol`-small low coefficients
// (which are roots at the origin).
std::size_t nonzero_roots_in_disk(const ComplexPoly& p, double tol) {
  const double cut = tol * p.max_abs_coeff();
  const std::size_t deg = p.degree();
  std::size_t k = 0;
  while (k < deg && std::abs(p[k]) <= cut) ++k;
  std::vector<cplx> rest;
  for (std::size_t i = k; i <= deg; ++i) rest.push_back(p[i]);
  const ComplexPoly deflated(std::move(rest));
  if (deflated.degree() == 0) return 0;
  const auto zs = roots(deflated);
  return static_cast<std::size_t>(
      std::count_if(zs.begin(), zs.end(), [](cplx z) { return std::abs(z) < 1.0; }));
}

bool coefficients_vanish(const AtomicConfig& cfg, long last, double tol) {
  if (last < 1) return true;
  const auto a = f_series(cfg, static_cast<std::size_t>(last));
  for (long j = 1; j <= last; ++j) {
    if (std::abs(a[static_cast<std::size_t>(j)]) >= tol) return false;
  }
  return true;
}

}  // namespace

bool krzyz_condition_check(const AtomicConfig& cfg, int which, double tol) {
  const int n = cfg.n();
  switch (which) {
    case 1: {
      const double limit = 2.0 * kTwoPi / n;  // 4 pi / n
      if (kTwoPi < limit) return true;         // the full turn already qualifies
      const auto taus = rotation_invariants(cfg);
      return std::any_of(taus.begin(), taus.end(),
                         [&](double tau) { return tau > 0.0 && tau < limit; });
    }
    case 2: {
      // g(z) = g(0) = -t  <=>  t q(z) + r(z) = 0
      const auto rl = rational_log(cfg);
      return nonzero_roots_in_disk(rl.t * rl.q + rl.r, tol) == 0;
    }
    case 3: {
      // f' = g' f; g' = (r' q - r q') / q^2
      const auto rl = rational_log(cfg);
      const auto num = rl.r.derivative() * rl.q - rl.r * rl.q.derivative();
      return nonzero_roots_in_disk(num, tol) == 0;
    }
    case 4:
      return coefficients_vanish(cfg, static_cast<long>(cfg.size()) - 1, tol);
    case 5:
      return coefficients_vanish(cfg, n / 3, tol);  // ceil((n - 2)/3) for n >= 1
    default:
      throw ValidationError("krzyz_condition_check: condition must be 1..5");
  }
}

int rotation_orbit_count(const AtomicConfig& cfg) {
  const int n = cfg.n();
  std::vector<AtomicConfig> seen;
  for (int j = 1; j <= n; ++j) {
    const auto rot = cfg.rotated(kTwoPi * j / n);
    const bool dup = std::any_of(seen.begin(), seen.end(), [&](const AtomicConfig& other) {
      if (other.size() != rot.size()) return false;
      for (std::size_t k = 0; k < rot.size(); ++k) {
        if (std::abs(angle_diff(other[k].theta, rot[k].theta)) >= kInvariantTol ||
            std::abs(other[k].lambda - rot[k].lambda) >= kInvariantTol) {
          return false;
        }
      }
      return true;
    });
    if (!dup) seen.push_back(rot);
  }
  return static_cast<int>(seen.size());
}

GcdCertificate gcd_certificate(const AtomicConfig& cfg) {
  if (rotation_invariants(cfg).size() <= 1) return {1, true};
  const int g = std::gcd(static_cast<int>(cfg.size()), cfg.n());
  return {g, g > 1};
}

BlaschkeProduct compose(const BlaschkeProduct& outer, const BlaschkeProduct& inner) {
  const auto n1 = outer.numerator();
  const auto d1 = outer.denominator();
  const auto n2 = inner.numerator();
  const auto d2 = inner.denominator();
  const std::size_t deg1 = outer.degree();
  // sum_k c_k N2^k D2^{deg1 - k}
  auto homogenise = [&](const ComplexPoly& c) {
    ComplexPoly acc({cplx{0.0}});
    for (std::size_t k = 0; k <= deg1; ++k) {
      ComplexPoly term({c[k]});
      for (std::size_t i = 0; i < k; ++i) term = term * n2;
      for (std::size_t i = k; i < deg1; ++i) term = term * d2;
      acc = acc + term;
    }
    return acc;
  };
  const auto num = homogenise(n1);
  const auto den = homogenise(d1);
  std::vector<cplx> inside;
  for (const auto& z : roots(num)) {
    if (std::abs(z) < 1.0) inside.push_back(z);
  }
  const BlaschkeProduct bare(cplx{1.0}, inside);
  const cplx z0 = std::polar(1.0, 0.3);
  const cplx ratio = (num(z0) / den(z0)) / bare(z0);
  return BlaschkeProduct(ratio / std::abs(ratio), std::move(inside));
}

}  // namespace krzyz
