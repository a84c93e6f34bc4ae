// Prints one PASS/FAIL line per acceptance criterion; exit status 1 when any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "krzyz/boundary.hpp"
#include "krzyz/inner.hpp"
#include "krzyz/optimizer.hpp"
#include "krzyz/poly.hpp"
#include "krzyz/reconstruct.hpp"
#include "krzyz/series.hpp"
#include "krzyz/special.hpp"
#include "krzyz/variational.hpp"
#include "support.hpp"

using namespace krzyz;
using namespace krzyz::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

std::string fmt(const char* f, double a) {
  char buf[96];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::string fmt(const char* f, double a, double b) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

double thm_x_error(const AtomicConfig& cfg) {
  std::mt19937_64 rng(2024);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const cplx z = random_disk_point(rng, 0.95);
    worst = std::max(worst, std::abs(g_from_PQ(cfg, z) - g_value(cfg, z)));
    worst = std::max(worst, std::abs(zgprime_from_P(cfg, z) - z * g_prime_value(cfg, z)));
  }
  return worst;
}

// Optimizer outputs shared between criteria 2 and 5.
std::vector<OptimizationResult> g_optima;

Outcome reference_values() {
  Outcome o;
  const auto t0 = Clock::now();
  double worst = 0.0;
  for (int n = 1; n <= 8; ++n) worst = std::max(worst, std::abs(m_n(reference_config(n)) - kTwoOverE));
  const double elapsed = seconds_since(t0);
  o.require(worst <= 1e-12, fmt("max error %.3g", worst));
  o.require(elapsed < 1.0, fmt("took %.2fs", elapsed));
  if (o.pass) o.detail = fmt("max |m_n - 2/e| = %.3g in %.3fs", worst, elapsed);
  return o;
}

Outcome optimizer() {
  Outcome o;
  const auto t0 = Clock::now();
  std::string values;
  for (int n = 1; n <= 4; ++n) {
    const auto r = maximize(n, n, 32, 1);
    g_optima.push_back(r);
    const double gap = r.value - kTwoOverE;
    if (n <= 2) {
      o.require(std::abs(gap) <= 1e-6, fmt("n=%g value off by %.3g", n, gap));
    } else {
      o.require(r.value >= kTwoOverE - 1e-4, fmt("n=%g value %.10f", n, r.value));
    }
    o.require(r.stationarity.max_residual < 1e-6, fmt("n=%g stationarity %.3g", n, r.stationarity.max_residual));
    values += fmt(" m%g=%.10f", n, r.value);
  }
  const double elapsed = seconds_since(t0);
  o.require(elapsed < 60.0, fmt("took %.1fs", elapsed));
  if (o.pass) o.detail = "32 starts," + values + fmt(" in %.2fs", elapsed);
  return o;
}

Outcome laguerre_sweep() {
  Outcome o;
  const double s3 = sweep_N(3, 1, 1, 32, 1).front().best_value;
  const double s4 = sweep_N(4, 1, 1, 32, 1).front().best_value;
  const auto b2 = beta_sup(2);
  o.require(std::abs(s3 - 0.55191) <= 1e-4, fmt("sweep n=3 gives %.8f", s3));
  o.require(std::abs(s4 - 0.50755) <= 1e-4, fmt("sweep n=4 gives %.8f", s4));
  o.require(std::abs(b2.value - 0.61801) <= 1e-5, fmt("beta_sup(2) = %.8f", b2.value));
  o.require(std::abs(b2.t_star - (3 + std::sqrt(5.0)) / 2) <= 1e-6, fmt("t* = %.10f", b2.t_star));
  if (o.pass) {
    o.detail = fmt("N=1 sweeps %.7f, %.7f", s3, s4) + fmt("; beta_sup(2) = %.8f at t* = %.9f", b2.value, b2.t_star);
  }
  return o;
}

Outcome rooney() {
  Outcome o;
  double worst_ratio = 0.0;
  for (int j = 5; j <= 40; ++j) {
    const auto rb = rooney_bound(j);
    o.require(rb.value < kTwoOverE && rb.below_two_over_e, fmt("j=%g bound %.6f", j, rb.value));
    for (int i = 0; i <= 400; ++i) {
      const double t = 0.05 * i;
      const double b = std::abs(beta(j, t));
      worst_ratio = std::max(worst_ratio, b / rb.value);
      if (b > rb.value + 1e-12) o.require(false, fmt("j=%g exceeds bound at t=%g", j, t));
    }
  }
  if (o.pass) o.detail = fmt("5 <= j <= 40, max |beta_j| / bound = %.4f", worst_ratio);
  return o;
}

Outcome rational_forms() {
  Outcome o;
  double worst = 0.0;
  for (int n = 1; n <= 6; ++n) worst = std::max(worst, thm_x_error(reference_config(n)));
  int checked = 0;
  for (const auto& r : g_optima) {
    if (!r.converged) continue;
    worst = std::max(worst, thm_x_error(r.config));
    ++checked;
  }
  o.require(worst <= 1e-8, fmt("sup error %.3g", worst));
  o.require(checked > 0, "no converged optimizer output");
  if (o.pass) o.detail = fmt("sup error %.3g over references and %g optimizer outputs", worst, checked);
  return o;
}

Outcome identities() {
  Outcome o;
  double worst = 0.0;
  for (int n = 1; n <= 6; ++n) {
    const auto cfg = reference_config(n);
    for (int r = 0; r <= 2 * n; ++r) {
      for (auto kind : {IdentityKind::base, IdentityKind::derivative}) {
        worst = std::max(worst, std::abs(residual_identity(cfg, r, kind).value));
      }
    }
  }
  o.require(worst <= 1e-10, fmt("max residual %.3g", worst));
  if (o.pass) o.detail = fmt("max residual %.3g", worst);
  return o;
}

Outcome fejer() {
  Outcome o;
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double random_err = 0.0;
  for (int i = 0; i < 40; ++i) {
    const int d = 1 + i % 16;
    std::vector<cplx> pos(static_cast<std::size_t>(d));
    double l1 = 0.0;
    for (auto& c : pos) {
      c = cplx(u(rng), u(rng));
      l1 += std::abs(c);
    }
    const TrigPolyReal T(2.0 * l1 + 0.5, pos);
    const auto fr = fejer_riesz(T);
    random_err = std::max(random_err, fr.sup_error);
  }
  double ref_err = 0.0;
  for (int n = 1; n <= 8; ++n) {
    const auto fr = fejer_riesz(TrigPolyReal::real_part_on_circle(build_P(reference_config(n))));
    ref_err = std::max(ref_err, fr.sup_error);
  }
  o.require(random_err <= 1e-9, fmt("random sup error %.3g", random_err));
  o.require(ref_err <= 1e-7, fmt("reference sup error %.3g", ref_err));
  if (o.pass) o.detail = fmt("sup error %.3g (random), %.3g (reference Re P)", random_err, ref_err);
  return o;
}

Outcome reconstruction() {
  Outcome o;
  double coeff_err = 0.0, b_err = 0.0;
  for (int n = 1; n <= 8; ++n) {
    const auto pts = roots_of_minus_one(n);
    const auto rec = reconstruct_f_mod(pts, kInvE);
    const auto ref = f_series(reference_config(n), static_cast<std::size_t>(n));
    for (std::size_t j = 0; j <= static_cast<std::size_t>(n); ++j) coeff_err = std::max(coeff_err, std::abs(rec[j] - ref[j]));
    for (int k = 1; k <= n; ++k) {
      const cplx expect = k == n ? cplx(2.0) : cplx(0.0);
      b_err = std::max(b_err, std::abs(b_from_points(pts, static_cast<std::size_t>(k)) - expect));
    }
  }
  std::mt19937_64 rng(91);
  std::uniform_real_distribution<double> u(0.0, kTwoPi);
  double slack = 1e300;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 10;
    std::vector<cplx> pts;
    for (int i = 0; i < n; ++i) pts.push_back(std::polar(1.0, u(rng)));
    for (int k = 1; k <= n; ++k) {
      slack = std::min(slack, 2.0 * n / k - std::abs(b_from_points(pts, static_cast<std::size_t>(k))));
    }
  }
  o.require(coeff_err <= 1e-12, fmt("coefficient error %.3g", coeff_err));
  o.require(b_err <= 1e-12, fmt("b_k error %.3g", b_err));
  o.require(slack >= -1e-12, fmt("|b_k| bound violated by %.3g", -slack));
  if (o.pass) o.detail = fmt("coefficient error %.3g, min slack of 2n/k - |b_k| %.3g", coeff_err, slack);
  return o;
}

Outcome level_set_audit() {
  Outcome o;
  const auto c = theorem1_constant(4.0 / 3.0);
  const double closed = 2.0 * std::numbers::pi / 7.0 * (kInvE - 1.0 / 3.0);
  o.require(std::abs(c.k2 - 2.0 / 3.0) <= 1e-15, fmt("k2 = %.17g", c.k2));
  o.require(std::abs(c.c - closed) <= 1e-9, fmt("c = %.12f", c.c));
  double min_slack = 1e300;
  int arcs = 0;
  auto audit = [&](const AtomicConfig& cfg) {
    const int n = cfg.n();
    const auto e = ermers_audit(cfg, n, c.k1, c.k2);
    min_slack = std::min(min_slack, e.slack);
    for (const auto& a : vdc_audit(cfg, n, c.k1)) {
      ++arcs;
      if (!a.passes()) o.require(false, fmt("vdc arc fails for n=%g (integral %.4g)", n, a.integral));
    }
  };
  for (int n = 1; n <= 16; ++n) audit(reference_config(n));
  std::mt19937_64 rng(4242);
  for (int i = 0; i < 20; ++i) audit(random_config(rng, 1 + i % 8));
  o.require(min_slack >= -1e-9, fmt("ermers slack %.3g", min_slack));
  if (o.pass) o.detail = fmt("c = %.10f, min slack %.3g", c.c, min_slack) + fmt(", %g arcs pass", arcs);
  return o;
}

Outcome restricted() {
  Outcome o;
  const double r0 = restricted_r0();
  const double t = (3 + std::sqrt(5.0)) / 2;
  const double expect = (4 + 2 * std::sqrt(5.0)) * std::exp(-t);
  const double tmin = -std::log(r0);
  const double two = constrained_maximize(2, 2, tmin, 32, 1).value;
  const double one = constrained_maximize(2, 1, tmin, 32, 1).value;
  o.require(std::abs(r0 - 0.18047) <= 1e-5, fmt("r0 = %.8f", r0));
  o.require(std::abs(two - expect) <= 1e-5, fmt("two-atom optimum %.8f", two));
  o.require(std::abs(one - expect) <= 1e-5, fmt("one-atom optimum %.8f", one));
  if (o.pass) o.detail = fmt("r0 = %.8f, optima %.8f", r0, two) + fmt(" and %.8f vs %.8f", one, expect);
  return o;
}

Outcome inner_functions() {
  Outcome o;
  double modulus = 0.0, h_err = 0.0;
  for (int n = 1; n <= 8; ++n) {
    const auto cfg = reference_config(n);
    const auto h = blaschke_h(cfg);
    o.require(h.degree() == cfg.size(), fmt("n=%g degree %g", n, static_cast<double>(h.degree())));
    modulus = std::max(modulus, h.circle_modulus_error());
    std::mt19937_64 rng(static_cast<unsigned>(n));
    for (int i = 0; i < 20; ++i) {
      const cplx z = random_disk_point(rng, 0.9);
      h_err = std::max(h_err, std::abs(h(z) - std::pow(z, n)));
    }
    for (int which = 1; which <= 5; ++which) {
      if (!krzyz_condition_check(cfg, which)) o.require(false, fmt("n=%g condition %g", n, which));
    }
    o.require(rotation_invariants(cfg).size() == static_cast<std::size_t>(n), fmt("n=%g invariant count", n));
    o.require(gcd_certificate(cfg).consistent, fmt("n=%g gcd certificate", n));
  }
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    const auto cfg = random_config(rng, 3);
    const auto h = blaschke_h(cfg);
    o.require(h.degree() == cfg.size(), "random degree");
    modulus = std::max(modulus, h.circle_modulus_error());
  }
  o.require(modulus <= 1e-8, fmt("circle modulus error %.3g", modulus));
  o.require(h_err <= 1e-10, fmt("h - z^n error %.3g", h_err));
  if (o.pass) o.detail = fmt("modulus error %.3g, |h - z^n| %.3g", modulus, h_err);
  return o;
}

double fd_gradient_error(const AtomicConfig& cfg) {
  const double h = 1e-6;
  const auto g = objective_and_gradient(cfg);
  std::vector<Atom> atoms(cfg.atoms().begin(), cfg.atoms().end());
  double scale = 1e-3, worst = 0.0;
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    scale = std::max({scale, std::abs(g.d_lambda[k]), std::abs(g.d_theta[k])});
  }
  auto value = [&](std::size_t k, double dl, double dt) {
    auto a = atoms;
    a[k].lambda += dl;
    a[k].theta += dt;
    return m_n(AtomicConfig::make(a, cfg.n()));
  };
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    const double fl = (value(k, h, 0) - value(k, -h, 0)) / (2 * h);
    const double ft = (value(k, 0, h) - value(k, 0, -h)) / (2 * h);
    worst = std::max({worst, std::abs(fl - g.d_lambda[k]) / scale, std::abs(ft - g.d_theta[k]) / scale});
  }
  return worst;
}

Outcome property_battery() {
  Outcome o;
  std::mt19937_64 rng(12);
  double energy = 0.0, a0_err = 0.0, grad_err = 0.0, neg_err = 0.0;
  for (int i = 0; i < 50; ++i) {
    const int n = 1 + i % 8;
    const auto cfg = random_config(rng, n);
    const auto a = f_series(cfg, 64);
    double sum = 0.0;
    for (std::size_t j = 0; j <= a.order(); ++j) sum += std::norm(a[j]);
    energy = std::max(energy, sum - 1.0);
    a0_err = std::max(a0_err, std::abs(a[0] - std::exp(-cfg.total_mass().t)));
    grad_err = std::max(grad_err, fd_gradient_error(cfg));
    neg_err = std::max(neg_err, std::abs(negativity_measure(cfg) - std::numbers::pi));
    for (int k = 2; k <= 4; ++k) {
      if (!mass_bounds_check(a, k).ok) o.require(false, fmt("mass bound k=%g config %g", k, i));
    }
  }
  const auto single = f_series(AtomicConfig::make({{0.0, 2.0}}, 2), 2);
  const auto eq = mass_bounds_check(single, 2);
  double annulus = 0.0;
  bool contained = true;
  for (int n = 1; n <= 8; ++n) {
    const auto rep = annulus_radius(reference_config(n));
    annulus = std::max(annulus, std::abs(rep.radius - std::numbers::sqrt2));
    contained = contained && rep.contained;
  }
  int winding_bad = 0;
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    std::vector<cplx> zs;
    const int deg = 1 + i % 12;
    while (static_cast<int>(zs.size()) < deg) {
      const cplx z(1.5 * u(rng), 1.5 * u(rng));
      if (std::abs(std::abs(z) - 1.0) > 1e-3) zs.push_back(z);
    }
    int inside = 1;  // the factor z
    for (const auto& z : zs) inside += std::abs(z) < 1.0;
    if (winding_number(ComplexPoly::from_roots(zs, cplx(u(rng) + 2.0, u(rng)))) != inside) ++winding_bad;
  }
  o.require(energy <= 1e-9, fmt("sum |a_j|^2 exceeds 1 by %.3g", energy));
  o.require(a0_err <= 1e-14, fmt("a0 error %.3g", a0_err));
  o.require(grad_err < 1e-6, fmt("gradient rel. error %.3g", grad_err));
  o.require(neg_err <= 1e-6, fmt("negativity error %.3g", neg_err));
  o.require(std::abs(eq.sum - eq.bound) <= 1e-10, fmt("k=2 equality gap %.3g", eq.sum - eq.bound));
  o.require(contained && annulus <= 1e-12, fmt("annulus radius error %.3g", annulus));
  o.require(winding_bad == 0, fmt("%g winding mismatches", winding_bad));
  if (o.pass) {
    o.detail = fmt("gradient rel. error %.3g, negativity error %.3g", grad_err, neg_err) +
               fmt(", k=2 equality gap %.3g, energy excess %.3g", eq.sum - eq.bound, energy);
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"reference values", reference_values},
      {"optimizer", optimizer},
      {"single-atom sweep and Laguerre suprema", laguerre_sweep},
      {"Rooney bound", rooney},
      {"P/Q representation of g and zg'", rational_forms},
      {"coefficient identities", identities},
      {"Fejer-Riesz factorization", fejer},
      {"reconstruction from circle points", reconstruction},
      {"level-set and oscillatory audit", level_set_audit},
      {"restricted problem", restricted},
      {"Blaschke and inner-function suite", inner_functions},
      {"property battery", property_battery},
  };
  int failed = 0;
  int index = 1;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s %2d %s: %s\n", o.pass ? "PASS" : "FAIL", index++, name, o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
