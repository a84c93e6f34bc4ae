#include "krzyz/special.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "krzyz/errors.hpp"

namespace krzyz {
namespace {

double abs_beta(int j, double t) { return std::abs(beta(j, t)); }

double golden_max(int j, double lo, double hi) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = abs_beta(j, c);
  double fd = abs_beta(j, d);
  while (hi - lo > 1e-13 * std::max(1.0, hi)) {
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = abs_beta(j, c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = abs_beta(j, d);
    }
  }
  return 0.5 * (lo + hi);
}

// Zero of beta_j' = e^{-t}(2 L'(2t) - L(2t)) inside [lo, hi] if it brackets a sign change;
// sharper than golden section, whose resolution in t is only sqrt(eps).
double derivative(int j, double t) {
  const double lp = j >= 1 ? -laguerre(j - 1, 0.0, 2.0 * t) : 0.0;
  return std::exp(-t) * (2.0 * lp - laguerre(j, -1.0, 2.0 * t));
}

double refine_critical(int j, double t, double lo, double hi) {
  const double h = 1e-4 * std::max(1.0, t);
  double a = std::max(lo, t - h);
  double b = std::min(hi, t + h);
  double fa = derivative(j, a);
  if (fa * derivative(j, b) > 0.0) return t;
  for (int it = 0; it < 200 && b - a > 1e-15 * std::max(1.0, t); ++it) {
    const double m = 0.5 * (a + b);
    const double fm = derivative(j, m);
    if ((fm > 0.0) == (fa > 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

double laguerre(int j, double alpha, double x) {
  if (j < 0) throw ValidationError("laguerre: j must be non-negative");
  // Three-term recurrence in the degree.
  double prev = 1.0;
  if (j == 0) return prev;
  double cur = 1.0 + alpha - x;
  for (int k = 1; k < j; ++k) {
    const double next = ((2 * k + 1 + alpha - x) * cur - (k + alpha) * prev) / (k + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

double beta(int j, double t) {
  const double sign = (j % 2 == 0) ? 1.0 : -1.0;
  return sign * std::exp(-t) * laguerre(j, -1.0, 2.0 * t);
}

BetaSup beta_sup(int j) {
  if (j < 1) throw ValidationError("beta_sup: j must be at least 1");
  const double t_hi = 4.0 * j;
  const int panels = 4 * j + 8;
  const int sub = 64;

  // Cut [0, 4j] at sign changes of beta_j; |beta_j| is smooth between them.
  std::vector<double> cuts{0.0};
  double prev_t = 0.0;
  double prev_v = beta(j, 0.0);
  for (int p = 1; p <= panels * sub; ++p) {
    const double t = t_hi * p / (panels * sub);
    const double v = beta(j, t);
    if (prev_v != 0.0 && v != 0.0 && (prev_v > 0.0) != (v > 0.0)) {
      double a = prev_t;
      double b = t;
      double fa = prev_v;
      for (int it = 0; it < 200 && b - a > 1e-15; ++it) {
        const double m = 0.5 * (a + b);
        const double fm = beta(j, m);
        if ((fm > 0.0) == (fa > 0.0)) {
          a = m;
          fa = fm;
        } else {
          b = m;
        }
      }
      cuts.push_back(0.5 * (a + b));
    }
    prev_t = t;
    prev_v = v;
  }
  cuts.push_back(t_hi);

  BetaSup best{j, 0.0, abs_beta(j, 0.0)};
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double lo = cuts[i];
    const double hi = cuts[i + 1];
    if (hi - lo < 1e-14) continue;
    // Seed the bracket from a coarse scan so a panel with a shoulder still
    // converges to its highest hump.
    constexpr int kScan = 128;
    int arg = 0;
    double top = -1.0;
    for (int s = 0; s <= kScan; ++s) {
      const double v = abs_beta(j, lo + (hi - lo) * s / kScan);
      if (v > top) {
        top = v;
        arg = s;
      }
    }
    const double a = lo + (hi - lo) * std::max(0, arg - 1) / kScan;
    const double b = lo + (hi - lo) * std::min(kScan, arg + 1) / kScan;
    double t = golden_max(j, a, b);
    t = refine_critical(j, t, a, b);
    const double v = abs_beta(j, t);
    if (v > best.value) best = {j, t, v};
  }
  return best;
}

RooneyBound rooney_bound(int j) {
  if (j < 0) throw ValidationError("rooney_bound: j must be non-negative");
  const double log_value = 0.5 * (std::log(2.0) + std::lgamma(2.0 * j + 1.0)) -
                           j * std::log(2.0) - std::lgamma(j + 1.0);
  const double value = std::exp(log_value);
  return {value, value < 2.0 / std::numbers::e};
}

double mass_bound(int k) {
  const double e = std::numbers::e;
  switch (k) {
    case 2:
      return 32.0 / std::pow(e, 4);
    case 3:
      return 27.0 / (2.0 * std::pow(e, 3));
    case 4: {
      const double s3 = std::sqrt(3.0);
      return 96.0 * (33.0 - 19.0 * s3) * std::exp(2.0 * s3) / std::pow(e, 6);
    }
    default:
      throw ValidationError("k: mass bound available only for k in {2, 3, 4}");
  }
}

MassBoundCheck mass_bounds_check(const PowerSeries& a, int k) {
  MassBoundCheck out;
  out.k = k;
  out.bound = mass_bound(k);
  if (a.order() < static_cast<std::size_t>(k)) {
    throw ValidationError("series: order below k");
  }
  for (int j = 1; j <= k; ++j) out.sum += std::norm(a[static_cast<std::size_t>(j)]);
  out.ok = out.sum <= out.bound + 1e-10;
  return out;
}

double restricted_r0() {
  const double s5 = std::sqrt(5.0);
  const double rhs = -(2.0 + s5) * std::exp(-(3.0 + s5) / 2.0);
  // r log r decreases on (0, 1/e) from 0 to -1/e, below rhs at the right end.
  double lo = 1e-300;
  double hi = 1.0 / std::numbers::e;
  for (int it = 0; it < 300 && hi - lo > 1e-16; ++it) {
    const double m = 0.5 * (lo + hi);
    if (m * std::log(m) > rhs) {
      lo = m;
    } else {
      hi = m;
    }
  }
  return 0.5 * (lo + hi);
}

RestrictedProblem restricted_problem(double r) {
  if (!(r > 0.0 && r <= 1.0)) throw ValidationError("r: must lie in (0, 1]");
  RestrictedProblem out;
  out.r = r;
  out.t_min = -std::log(r);

  const double t2 = std::max(1.0, out.t_min);
  out.two_atom = {t2, 2.0 * t2 * std::exp(-t2)};

  auto one = [](double t) { return std::abs(2.0 * t * (t - 1.0) * std::exp(-t)); };
  const double s5 = std::sqrt(5.0);
  out.one_atom = {out.t_min, one(out.t_min)};
  for (double c : {(3.0 - s5) / 2.0, (3.0 + s5) / 2.0}) {
    if (c >= out.t_min && one(c) > out.one_atom.value) out.one_atom = {c, one(c)};
  }

  const double gap = out.two_atom.value - out.one_atom.value;
  if (std::abs(gap) <= 1e-9) {
    out.argmax = RestrictedFamily::tie;
  } else {
    out.argmax = gap > 0.0 ? RestrictedFamily::two_atom : RestrictedFamily::one_atom;
  }
  out.value = std::max(out.two_atom.value, out.one_atom.value);
  return out;
}

RestrictedProblem restricted_problem() { return restricted_problem(restricted_r0()); }

}  // namespace krzyz
