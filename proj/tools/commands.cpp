#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

#include "krzyz/errors.hpp"
#include "krzyz/io.hpp"

namespace krzyz::cli {
namespace {

using io::json;

void emit(const Common& c, const std::string& command, const std::string& text,
          json parameters = json::object(), std::uint64_t seed = 0) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  io::write_text(c.out, text);
  io::RunManifest m;
  m.command = command;
  m.config_path = c.config;
  m.parameters = std::move(parameters);
  m.seed = seed;
  m.outputs = {c.out};
  io::write_manifest(c.out, m);
}

struct Check {
  std::string name;
  bool required = true;
  bool passed = false;
  std::string detail;
};

// 100 points with |z| <= 0.9, uniform by area, from a fixed seed.
std::vector<cplx> interior_points() {
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<cplx> pts;
  for (int i = 0; i < 100; ++i) {
    const double r = 0.9 * std::sqrt(u(rng));
    pts.push_back(std::polar(r, kTwoPi * u(rng)));
  }
  return pts;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

}  // namespace

int cmd_coeffs(const Common& c, int order) {
  const auto cfg = io::load_config(c.config);
  emit(c, "coeffs", io::coefficients_csv(cfg, static_cast<std::size_t>(order)), {{"order", order}});
  return kOk;
}

int cmd_verify(const Common& c, const std::string& only, double tol) {
  static const std::vector<std::string> kNames{"stationarity", "identities", "thmX",   "m_bound",
                                               "negativity",   "annulus",    "reconstruct",
                                               "invariants"};
  if (!only.empty() && std::find(kNames.begin(), kNames.end(), only) == kNames.end()) {
    throw ValidationError("--only: unknown check '" + only + "'");
  }
  auto wanted = [&](const std::string& name) { return only.empty() || only == name; };

  const auto raw = io::load_config(c.config);
  const auto cfg = normalize_rotation(raw).config;
  const int n = cfg.n();
  json report = json::object();
  std::vector<Check> checks;

  if (wanted("stationarity")) {
    const auto st = first_order_conditions(cfg);
    report["stationarity"] = io::to_json(st);
    checks.push_back({"stationarity", true, st.max_residual <= tol, "max " + fmt(st.max_residual)});
  }
  if (wanted("identities")) {
    std::vector<IdentityResidual> res;
    double worst = 0.0;
    for (auto kind : {IdentityKind::base, IdentityKind::derivative}) {
      for (int r = 0; r <= 2 * n; ++r) {
        res.push_back(residual_identity(cfg, r, kind));
        worst = std::max(worst, std::abs(res.back().value));
      }
    }
    report["identities"] = io::to_json(res);
    checks.push_back({"identities", true, worst <= 1e-10, "max " + fmt(worst)});
  }
  if (wanted("thmX")) {
    double err = 0.0;
    bool ok = true;
    try {
      const RationalForms forms(cfg);
      for (const auto z : interior_points()) {
        err = std::max(err, std::abs(forms.g(z) - g_value(cfg, z)));
        err = std::max(err, std::abs(forms.zg_prime(z) - z * g_prime_value(cfg, z)));
      }
    } catch (const PoleError&) {
      ok = false;
      err = INFINITY;
    }
    report["thmX_sup_error"] = std::isfinite(err) ? json(err) : json(nullptr);
    checks.push_back({"thmX", true, ok && err <= 1e-8, "sup " + fmt(err)});
  }
  if (wanted("m_bound")) {
    const auto b = n_lower_bound(cfg);
    report["m_lower_bound"] = b.m;
    checks.push_back({"m_bound", true, b.ok, "N=" + std::to_string(cfg.size()) + " m=" + std::to_string(b.m)});
  }
  if (wanted("negativity")) {
    const double meas = negativity_measure(cfg);
    report["negativity_measure"] = meas;
    checks.push_back({"negativity", true, std::abs(meas - std::numbers::pi) <= 1e-6, fmt(meas)});
  }
  if (wanted("annulus")) {
    const auto a = annulus_radius(cfg);
    report["annulus"] = {{"radius", a.radius}, {"contained", a.contained}};
    checks.push_back({"annulus", false, a.contained, "r " + fmt(a.radius)});
  }
  if (wanted("reconstruct")) {
    const auto rep = rep_zero_match(cfg);
    report["reconstruct"] = io::to_json(rep);
    checks.push_back({"reconstruct", false, rep.match, rep.note});
  }
  if (wanted("invariants")) {
    std::vector<bool> conds;
    for (int w = 1; w <= 5; ++w) conds.push_back(krzyz_condition_check(cfg, w));
    const auto rot = rotation_invariants(cfg);
    const auto gcd = gcd_certificate(cfg);
    report["invariants"] = io::invariants_json(rot, rotation_orbit_count(cfg), gcd, conds);
    checks.push_back({"invariants", false, gcd.consistent, "gcd " + std::to_string(gcd.gcd)});
  }

  bool all_required = true;
  json list = json::array();
  for (const auto& ch : checks) {
    list.push_back({{"name", ch.name}, {"required", ch.required}, {"passed", ch.passed}, {"detail", ch.detail}});
    if (ch.required && !ch.passed) {
      all_required = false;
      std::cerr << "check failed: " << ch.name << " (" << ch.detail << ")\n";
    }
  }
  report["checks"] = list;
  emit(c, "verify", io::dump(report), {{"only", only}, {"tol", tol}});
  return all_required ? kOk : kCheckFailed;
}

int cmd_optimize(const Common& c, int n, int atoms, int starts, std::uint64_t seed) {
  const auto res = maximize(n, atoms, starts, seed);
  emit(c, "optimize", io::dump(io::to_json(res)), {{"n", n}, {"atoms", atoms}, {"starts", starts}}, seed);
  if (!res.converged) {
    std::cerr << "not converged: grad_norm " << fmt(res.grad_norm) << '\n';
    return kCheckFailed;
  }
  return kOk;
}

int cmd_sweep(const Common& c, int n, int starts, std::uint64_t seed) {
  const auto rows = sweep_N(n, 1, n, starts, seed);
  emit(c, "sweep", io::sweep_csv(rows), {{"n", n}, {"starts", starts}}, seed);
  return kOk;
}

int cmd_thm1_audit(const Common& c, double k1) {
  if (!(k1 > 1.0)) throw ValidationError("--k1: must exceed 1");
  const auto cfg = io::load_config(c.config);
  const auto constant = theorem1_constant(k1);
  const auto ermers = ermers_audit(cfg, cfg.n(), k1, constant.k2);
  const auto vdc = vdc_audit(cfg, cfg.n(), k1);
  emit(c, "thm1-audit", io::dump(io::audit_json(ermers, vdc, constant)), {{"k1", k1}});
  const bool ok = ermers.slack >= -1e-9 &&
                  std::all_of(vdc.begin(), vdc.end(), [](const VdcArc& a) { return a.passes(); });
  return ok ? kOk : kCheckFailed;
}

int cmd_fejer(const Common& c, double tol) {
  const auto cfg = normalize_rotation(io::load_config(c.config)).config;
  const auto fr = fejer_riesz(TrigPolyReal::real_part_on_circle(build_P(cfg)));
  emit(c, "fejer", io::dump(io::to_json(fr)), {{"tol", tol}});
  return fr.sup_error <= tol ? kOk : kCheckFailed;
}

int cmd_beta(const Common& c, int j, bool sup, std::optional<double> t) {
  if (sup) {
    if (j < 1) throw ValidationError("j: the supremum needs j >= 1");
    emit(c, "beta", io::beta_table_csv({beta_sup(j)}), {{"j", j}, {"sup", true}});
    return kOk;
  }
  if (!t) throw ValidationError("beta: pass --sup or --t");
  if (*t < 0.0) throw ValidationError("--t: must be non-negative");
  char buf[96];
  std::snprintf(buf, sizeof buf, "j,t,beta\n%d,%.17g,%.17g\n", j, *t, beta(j, *t));
  emit(c, "beta", buf, {{"j", j}, {"t", *t}});
  return kOk;
}

}  // namespace krzyz::cli
