#include "krzyz/poly.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "krzyz/errors.hpp"
#include "krzyz/series.hpp"

namespace krzyz {

// ---- ComplexPoly --------------------------------------------------------

ComplexPoly::ComplexPoly(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(cplx{0.0});
}

ComplexPoly ComplexPoly::from_roots(std::span<const cplx> roots, cplx lead) {
  std::vector<cplx> c{lead};
  for (const auto& r : roots) {
    c.push_back(cplx{0.0});
    for (std::size_t k = c.size() - 1; k >= 1; --k) c[k] = c[k - 1] - r * c[k];
    c[0] *= -r;
  }
  return ComplexPoly(std::move(c));
}

double ComplexPoly::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

bool ComplexPoly::is_zero() const { return max_abs_coeff() == 0.0; }

std::size_t ComplexPoly::degree() const {
  const double cut = kCoeffZeroTol * max_abs_coeff();
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (std::abs(coeffs_[k]) > cut) return k;
  }
  return 0;
}

cplx ComplexPoly::operator()(cplx z) const {
  cplx acc{0.0};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

ComplexPoly ComplexPoly::derivative() const {
  if (coeffs_.size() <= 1) return ComplexPoly({cplx{0.0}});
  std::vector<cplx> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
  return ComplexPoly(std::move(d));
}

ComplexPoly ComplexPoly::trimmed() const {
  return ComplexPoly(std::vector<cplx>(coeffs_.begin(), coeffs_.begin() + degree() + 1));
}

ComplexPoly ComplexPoly::reflected() const {
  std::vector<cplx> r(coeffs_.rbegin(), coeffs_.rend());
  for (auto& c : r) c = std::conj(c);
  return ComplexPoly(std::move(r));
}

ComplexPoly operator+(const ComplexPoly& a, const ComplexPoly& b) {
  std::vector<cplx> c(std::max(a.size(), b.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a[k] + b[k];
  return ComplexPoly(std::move(c));
}

ComplexPoly operator-(const ComplexPoly& a, const ComplexPoly& b) {
  std::vector<cplx> c(std::max(a.size(), b.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a[k] - b[k];
  return ComplexPoly(std::move(c));
}

ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b) {
  std::vector<cplx> c(a.size() + b.size() - 1, cplx{0.0});
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return ComplexPoly(std::move(c));
}

ComplexPoly operator*(cplx s, const ComplexPoly& a) {
  std::vector<cplx> c(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : c) x *= s;
  return ComplexPoly(std::move(c));
}

// ---- TrigPolyReal -------------------------------------------------------

TrigPolyReal::TrigPolyReal(double c0, std::vector<cplx> positive)
    : c0_(c0), pos_(std::move(positive)) {}

TrigPolyReal TrigPolyReal::real_part_on_circle(const ComplexPoly& p) {
  // Re p(e^{it}) = Re c_0 + sum_k (c_k e^{ikt} + conj(c_k) e^{-ikt}) / 2
  std::vector<cplx> pos;
  for (std::size_t k = 1; k < p.size(); ++k) pos.push_back(p[k] / 2.0);
  return TrigPolyReal(p[0].real(), std::move(pos));
}

std::size_t TrigPolyReal::degree() const {
  double m = std::abs(c0_);
  for (const auto& c : pos_) m = std::max(m, std::abs(c));
  for (std::size_t k = pos_.size(); k-- > 0;) {
    if (std::abs(pos_[k]) > kCoeffZeroTol * m) return k + 1;
  }
  return 0;
}

cplx TrigPolyReal::coeff(long k) const {
  if (k == 0) return c0_;
  const auto idx = static_cast<std::size_t>(std::labs(k)) - 1;
  if (idx >= pos_.size()) return cplx{0.0};
  return k > 0 ? pos_[idx] : std::conj(pos_[idx]);
}

double TrigPolyReal::operator()(double theta) const {
  double s = c0_;
  for (std::size_t k = 0; k < pos_.size(); ++k) {
    s += 2.0 * (pos_[k] * std::polar(1.0, static_cast<double>(k + 1) * theta)).real();
  }
  return s;
}

// ---- P and Q ------------------------------------------------------------

namespace {

ComplexPoly reversed_doubled(const PowerSeries& s, std::size_t n) {
  std::vector<cplx> c(n + 1);
  c[0] = s[n];
  for (std::size_t j = 1; j <= n; ++j) c[j] = 2.0 * s[n - j];
  return ComplexPoly(std::move(c));
}

}  // namespace

ComplexPoly build_P(const AtomicConfig& cfg) {
  const auto n = static_cast<std::size_t>(cfg.n());
  return reversed_doubled(f_series(cfg, n), n);
}

ComplexPoly build_Q(const AtomicConfig& cfg) {
  const auto n = static_cast<std::size_t>(cfg.n());
  return reversed_doubled(fg_series(cfg, n), n);
}

// ---- roots --------------------------------------------------------------

namespace {

// Backward-error style residual |p(z)| / sum |c_k| |z|^k.
double relative_residual(std::span<const cplx> c, cplx z) {
  cplx acc{0.0};
  double scale = 0.0;
  const double az = std::abs(z);
  for (std::size_t k = c.size(); k-- > 0;) {
    acc = acc * z + c[k];
    scale = scale * az + std::abs(c[k]);
  }
  return scale > 0.0 ? std::abs(acc) / scale : 0.0;
}

double max_residual(std::span<const cplx> c, std::span<const cplx> zs) {
  double m = 0.0;
  for (const auto& z : zs) m = std::max(m, relative_residual(c, z));
  return m;
}

std::vector<cplx> companion_roots(std::span<const cplx> c) {
  const std::size_t d = c.size() - 1;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(d),
                                              static_cast<Eigen::Index>(d));
  for (std::size_t i = 1; i < d; ++i) {
    m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
  }
  for (std::size_t i = 0; i < d; ++i) {
    m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(d - 1)) = -c[i] / c[d];
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, false);
  if (es.info() != Eigen::Success) throw NumericalError("roots: companion eigensolver failed");
  std::vector<cplx> out(d);
  for (std::size_t i = 0; i < d; ++i) out[i] = es.eigenvalues()(static_cast<Eigen::Index>(i));
  return out;
}

struct AberthOutcome {
  std::vector<cplx> z;
  bool converged = false;
};

AberthOutcome aberth(std::span<const cplx> c, const RootOptions& opts) {
  const std::size_t d = c.size() - 1;
  // Initial guesses on a circle whose radius is the geometric mean root modulus.
  const double radius = std::pow(std::abs(c[0]) / std::abs(c[d]), 1.0 / static_cast<double>(d));
  AberthOutcome out;
  out.z.resize(d);
  for (std::size_t k = 0; k < d; ++k) {
    out.z[k] = std::polar(radius, kTwoPi * static_cast<double>(k) / static_cast<double>(d) + 0.4);
  }
  std::vector<cplx> dc(d);
  for (std::size_t k = 1; k <= d; ++k) dc[k - 1] = static_cast<double>(k) * c[k];

  for (int it = 0; it < opts.max_iterations; ++it) {
    bool done = true;
    for (std::size_t i = 0; i < d; ++i) {
      cplx pv{0.0};
      cplx dv{0.0};
      for (std::size_t k = d + 1; k-- > 0;) pv = pv * out.z[i] + c[k];
      for (std::size_t k = d; k-- > 0;) dv = dv * out.z[i] + dc[k];
      if (pv == cplx{0.0}) continue;
      const cplx ratio = pv / dv;
      cplx repulse{0.0};
      for (std::size_t j = 0; j < d; ++j) {
        if (j != i) repulse += 1.0 / (out.z[i] - out.z[j]);
      }
      const cplx w = ratio / (1.0 - ratio * repulse);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) continue;
      out.z[i] -= w;
      if (std::abs(w) > opts.tolerance * std::max(1.0, std::abs(out.z[i]))) done = false;
    }
    if (done) {
      out.converged = true;
      break;
    }
  }
  return out;
}

}  // namespace

std::vector<cplx> roots(const ComplexPoly& p, const RootOptions& opts) {
  if (p.is_zero()) throw ValidationError("roots: zero polynomial");
  const std::size_t deg = p.degree();
  if (deg == 0) return {};
  const double cut = kCoeffZeroTol * p.max_abs_coeff();
  std::size_t zero_roots = 0;
  while (zero_roots < deg && std::abs(p[zero_roots]) <= cut) ++zero_roots;

  std::vector<cplx> c;
  for (std::size_t k = zero_roots; k <= deg; ++k) c.push_back(p[k]);
  std::vector<cplx> result(zero_roots, cplx{0.0});
  const std::size_t d = c.size() - 1;
  if (d == 0) return result;
  if (d == 1) {
    result.push_back(-c[0] / c[1]);
    return result;
  }

  auto ab = aberth(c, opts);
  std::vector<cplx> found = std::move(ab.z);
  if (!ab.converged) {
    // Multiple roots make Aberth stagnate near sqrt(eps); keep whichever
    // candidate set has the smaller backward error.
    auto comp = companion_roots(c);
    if (max_residual(c, comp) < max_residual(c, found)) found = std::move(comp);
  }
  for (const auto& z : found) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw NumericalError("roots: non-finite root");
    }
  }
  result.insert(result.end(), found.begin(), found.end());
  return result;
}

int winding_number(const ComplexPoly& p, std::size_t samples) {
  const double floor = 1e-10 * std::max(p.max_abs_coeff(), 1e-300);
  auto count = [&](std::size_t s, bool& smooth) {
    double total = 0.0;
    smooth = true;
    cplx prev = p(cplx{1.0});  // theta = 0, e^{i0} = 1
    if (std::abs(prev) < floor) throw PoleError("winding_number: boundary root");
    const cplx first = prev;
    for (std::size_t k = 1; k <= s; ++k) {
      const double th = kTwoPi * static_cast<double>(k) / static_cast<double>(s);
      const cplx z = std::polar(1.0, th);
      const cplx v = (k == s) ? first : p(z) * z;
      if (std::abs(v) < floor) throw PoleError("winding_number: boundary root");
      const double step = std::arg(v / prev);
      if (std::abs(step) > std::numbers::pi / 4) smooth = false;
      total += step;
      prev = v;
    }
    return static_cast<int>(std::lround(total / kTwoPi));
  };
  std::size_t s = std::max<std::size_t>(samples, 16);
  bool smooth = false;
  int last = count(s, smooth);
  for (int guard = 0; guard < 16; ++guard) {
    s *= 2;
    bool smooth2 = false;
    const int next = count(s, smooth2);
    if (next == last && smooth && smooth2) return next;
    last = next;
    smooth = smooth2;
  }
  throw NumericalError("winding_number: argument count did not stabilise");
}

// ---- Fejer-Riesz --------------------------------------------------------

double fejer_riesz_error(const TrigPolyReal& T, double scale, const ComplexPoly& p,
                         std::size_t samples) {
  double err = 0.0;
  for (std::size_t k = 0; k < samples; ++k) {
    const double th = kTwoPi * static_cast<double>(k) / static_cast<double>(samples);
    const double v = scale * scale * std::norm(p(std::polar(1.0, th)));
    err = std::max(err, std::abs(v - T(th)));
  }
  return err;
}

namespace {

// Newton on T' from an approximate double zero of T on the circle.
double refine_double_zero(const TrigPolyReal& T, double theta) {
  auto derivs = [&](double th) {
    double d1 = 0.0, d2 = 0.0;
    for (std::size_t k = 1; k <= T.degree(); ++k) {
      const double kk = static_cast<double>(k);
      const cplx e = T.coeff(static_cast<long>(k)) * std::polar(1.0, kk * th);
      d1 -= 2.0 * kk * e.imag();
      d2 -= 2.0 * kk * kk * e.real();
    }
    return std::pair{d1, d2};
  };
  for (int it = 0; it < 8; ++it) {
    const auto [d1, d2] = derivs(theta);
    if (!(d2 > 0.0)) break;
    const double step = d1 / d2;
    if (std::abs(step) > 1e-4) break;
    theta -= step;
    if (std::abs(step) < 1e-16) break;
  }
  return theta;
}

}  // namespace

FejerRieszResult fejer_riesz(const TrigPolyReal& T, const FejerRieszOptions& opts) {
  for (std::size_t k = 0; k < 4096; ++k) {
    const double th = kTwoPi * static_cast<double>(k) / 4096.0;
    const double v = T(th);
    if (v < -opts.negativity_tol) {
      throw ValidationError("fejer_riesz: T is negative (" + std::to_string(v) +
                            ") at theta = " + std::to_string(th));
    }
  }
  FejerRieszResult out;
  const std::size_t d = T.degree();
  if (d == 0) {
    if (T.c0() <= 0.0) throw ValidationError("fejer_riesz: T is identically zero");
    out.scale = std::sqrt(T.c0());
    out.p = ComplexPoly({cplx{1.0}});
    out.sup_error = fejer_riesz_error(T, out.scale, out.p);
    return out;
  }

  // z^d T(z) as an ordinary polynomial of degree 2d; roots come in pairs
  // w, 1/conj(w).
  std::vector<cplx> rc(2 * d + 1);
  for (std::size_t i = 0; i <= 2 * d; ++i) {
    rc[i] = T.coeff(static_cast<long>(i) - static_cast<long>(d));
  }
  const auto all = roots(ComplexPoly(std::move(rc)));

  std::vector<cplx> outside;
  std::vector<double> circle_angles;
  std::size_t inside = 0;
  for (const auto& w : all) {
    const double m = std::abs(w);
    if (m > 1.0 + opts.circle_tol) {
      outside.push_back(w);
    } else if (m < 1.0 - opts.circle_tol) {
      ++inside;
    } else {
      circle_angles.push_back(wrap_angle(std::arg(w)));
    }
  }
  if (inside != outside.size() || circle_angles.size() % 2 != 0) {
    throw NumericalError("fejer_riesz: unpaired boundary root (odd multiplicity)");
  }

  std::vector<cplx> chosen = outside;
  if (!circle_angles.empty()) {
    std::sort(circle_angles.begin(), circle_angles.end());
    const std::size_t m = circle_angles.size();
    // Pair neighbours; the cyclic offset handles a pair split across angle 0.
    double best_gap = INFINITY;
    std::size_t best_offset = 0;
    for (std::size_t offset = 0; offset < 2; ++offset) {
      double gap = 0.0;
      for (std::size_t k = 0; k < m; k += 2) {
        const double a = circle_angles[(k + offset) % m];
        const double b = circle_angles[(k + offset + 1) % m];
        gap = std::max(gap, std::abs(angle_diff(b, a)));
      }
      if (gap < best_gap) {
        best_gap = gap;
        best_offset = offset;
      }
    }
    if (best_gap > opts.pairing_tol) {
      throw NumericalError("fejer_riesz: unpaired boundary root (odd multiplicity)");
    }
    for (std::size_t k = 0; k < m; k += 2) {
      const double a = circle_angles[(k + best_offset) % m];
      const double b = circle_angles[(k + best_offset + 1) % m];
      const cplx w = std::polar(1.0, refine_double_zero(T, a + 0.5 * angle_diff(b, a)));
      chosen.push_back(w);
      out.circle_roots.push_back(w);
    }
  }

  out.p = ComplexPoly::from_roots(chosen);
  out.roots = chosen;
  double energy = 0.0;
  for (const auto& c : out.p.coeffs()) energy += std::norm(c);
  out.scale = std::sqrt(T.c0() / energy);
  out.sup_error = fejer_riesz_error(T, out.scale, out.p);
  return out;
}

// ---- annulus ------------------------------------------------------------

AnnulusReport annulus_radius(const AtomicConfig& cfg) {
  const auto n = static_cast<std::size_t>(cfg.n());
  const auto a = f_series(cfg, n);
  double s = 0.0;
  for (std::size_t j = 0; j < n; ++j) s += std::norm(a[j]);
  s += std::norm(a[n]) / 4.0;
  AnnulusReport rep;
  rep.radius = std::sqrt(s) / std::abs(a[0]);
  rep.roots = roots(build_P(cfg));
  rep.contained = std::all_of(rep.roots.begin(), rep.roots.end(), [&](cplx z) {
    const double m = std::abs(z);
    return m >= 1.0 - 1e-8 && m <= rep.radius + 1e-8;
  });
  return rep;
}

}  // namespace krzyz
