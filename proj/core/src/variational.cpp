#include "krzyz/variational.hpp"

#include <cmath>
#include <string>

#include "krzyz/errors.hpp"
#include "krzyz/series.hpp"

namespace krzyz {

namespace {

constexpr double kDenominatorFloor = 1e-12;

// b_m for any integer m, with b_{-m} = conj(b_m).
cplx b_at(const PowerSeries& b, long m) {
  if (m >= 0) return b[static_cast<std::size_t>(m)];
  return std::conj(b[static_cast<std::size_t>(-m)]);
}

}  // namespace

IdentityResidual residual_identity(const AtomicConfig& cfg, int r, IdentityKind kind) {
  if (r < 0) throw ValidationError("r: must be >= 0");
  const long n = cfg.n();
  const auto order = static_cast<std::size_t>(n + r);
  const auto a = f_series(cfg, order);
  const auto b = g_series(cfg, order);
  auto A = [&](long j) { return a[static_cast<std::size_t>(j)]; };

  cplx lhs{0.0};
  cplx rhs{0.0};
  if (kind == IdentityKind::base) {
    for (long j = 0; j <= n; ++j) lhs += A(n - j) * b_at(b, r + j);
    for (long j = 1; j <= n; ++j) rhs -= std::conj(A(n - j)) * b_at(b, r - j);
    if (r <= n) rhs -= std::conj(A(n - r)) * b[0];
  } else {
    for (long j = 1; j <= n; ++j) lhs += static_cast<double>(j) * A(n - j) * b_at(b, r + j);
    for (long j = 1; j <= n; ++j) rhs += static_cast<double>(j) * std::conj(A(n - j)) * b_at(b, r - j);
    if (r >= 1 && r <= n) rhs += static_cast<double>(r) * std::conj(A(n - r)) * b[0];
  }
  return {r, kind, lhs - rhs};
}

// ---- closed forms ----------------------------------------------------------

RationalForms::RationalForms(const AtomicConfig& cfg)
    : n_(cfg.n()), P_(build_P(cfg)), Q_(build_Q(cfg)), dP_(P_.derivative()) {
  const auto n = static_cast<std::size_t>(n_);
  std::vector<cplx> den(2 * n + 1, cplx{0.0});
  std::vector<cplx> gnum(2 * n + 1, cplx{0.0});
  std::vector<cplx> zgnum(2 * n + 1, cplx{0.0});
  for (std::size_t j = 0; j <= n; ++j) {
    // z^n c(1/z) contributes c_j z^{n-j}; z^n conj(c(conj z)) contributes conj(c_j) z^{n+j}.
    den[n - j] += P_[j];
    den[n + j] += std::conj(P_[j]);
    gnum[n - j] += Q_[j];
    gnum[n + j] -= std::conj(Q_[j]);
    const double jd = static_cast<double>(j);
    zgnum[n - j] += jd * P_[j];
    zgnum[n + j] += jd * std::conj(P_[j]);
  }
  den_ = ComplexPoly(std::move(den));
  g_num_ = ComplexPoly(std::move(gnum));
  zg_num_ = ComplexPoly(std::move(zgnum));
}

cplx RationalForms::checked_denominator(cplx z) const {
  const cplx d = den_(z);
  if (std::abs(d) < kDenominatorFloor) {
    throw PoleError("rational forms: denominator vanishes near z");
  }
  return d;
}

double RationalForms::checked_re_p(cplx w) const {
  const double v = P_(w).real();
  if (std::abs(v) < kDenominatorFloor) throw PoleError("phi from P: Re P vanishes (atom)");
  return v;
}

cplx RationalForms::g(cplx z) const { return g_num_(z) / checked_denominator(z); }

cplx RationalForms::zg_prime(cplx z) const {
  return static_cast<double>(n_) - zg_num_(z) / checked_denominator(z);
}

double RationalForms::phi(double theta) const {
  const cplx w = std::polar(1.0, -theta);
  const double re = checked_re_p(w);
  return Q_(w).imag() / re;
}

double RationalForms::phi_prime(double theta) const {
  const cplx w = std::polar(1.0, -theta);
  const double re = checked_re_p(w);
  return static_cast<double>(n_) - (w * dP_(w)).real() / re;
}

cplx g_from_PQ(const AtomicConfig& cfg, cplx z) { return RationalForms(cfg).g(z); }
cplx zgprime_from_P(const AtomicConfig& cfg, cplx z) { return RationalForms(cfg).zg_prime(z); }
double phi_from_PQ(const AtomicConfig& cfg, double theta) { return RationalForms(cfg).phi(theta); }
double phi_prime_from_P(const AtomicConfig& cfg, double theta) {
  return RationalForms(cfg).phi_prime(theta);
}

// ---- stationarity ----------------------------------------------------------

StationarityReport first_order_conditions(const AtomicConfig& cfg) {
  const auto P = build_P(cfg);
  const auto dP = P.derivative();
  StationarityReport rep;
  for (const auto& atom : cfg.atoms()) {
    const cplx a = atom.alpha();
    AtomStationarity s{P(a).real(), (a * dP(a)).imag()};
    rep.max_residual = std::max({rep.max_residual, std::abs(s.re_p), std::abs(s.im_alpha_dp)});
    rep.atoms.push_back(s);
  }
  return rep;
}

AtomCountBound n_lower_bound(const AtomicConfig& cfg) {
  constexpr double kBoundaryTol = 1e-6;
  const auto dP = build_P(cfg).derivative();
  AtomCountBound out;
  if (!dP.is_zero()) out.critical_points = roots(dP);
  int inside = 0;
  for (const auto& z : out.critical_points) {
    const double m = std::abs(z);
    if (std::abs(m - 1.0) < kBoundaryTol) out.boundary_ambiguous = true;
    if (m < 1.0 - kBoundaryTol) ++inside;
  }
  out.m = 1 + inside;
  out.ok = static_cast<int>(cfg.size()) >= out.m;
  out.all_critical_in_disk =
      !out.boundary_ambiguous && inside == static_cast<int>(out.critical_points.size());
  return out;
}

}  // namespace krzyz
