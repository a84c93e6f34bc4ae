#include "krzyz/reconstruct.hpp"

#include <algorithm>
#include <cmath>

#include "krzyz/errors.hpp"
#include "krzyz/poly.hpp"

namespace krzyz {

void CircleZeroSet::validate() const {
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (std::abs(std::abs(points[i]) - 1.0) > 1e-9) {
      throw ValidationError("points[" + std::to_string(i) + "]: not on the unit circle");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (std::abs(points[i] - points[j]) < 1e-9) {
        throw ValidationError("points: duplicate point at index " + std::to_string(i));
      }
    }
  }
}

std::vector<cplx> elementary_symmetric(const std::vector<cplx>& points) {
  if (points.empty()) throw ValidationError("elementary_symmetric: need at least one point");
  std::vector<cplx> e(points.size() + 1, cplx{0.0});
  e[0] = 1.0;
  std::size_t m = 0;
  for (const auto& w : points) {
    ++m;
    for (std::size_t k = m; k >= 1; --k) e[k] += w * e[k - 1];
  }
  return e;
}

std::vector<cplx> power_sums(const std::vector<cplx>& points, std::size_t max_k) {
  std::vector<cplx> p(max_k + 1, cplx{0.0});
  for (const auto& w : points) {
    cplx pw{1.0};
    for (std::size_t k = 0; k <= max_k; ++k) {
      p[k] += pw;
      pw *= w;
    }
  }
  return p;
}

PowerSeries reconstruct_f_mod(const std::vector<cplx>& points, double a0) {
  if (!(a0 > 0.0)) throw ValidationError("a0: must be positive");
  const auto e = elementary_symmetric(points);
  const std::size_t n = points.size();
  auto a = PowerSeries::zeros(n);
  for (std::size_t j = 0; j <= n; ++j) {
    cplx s{0.0};
    for (std::size_t k = 0; k <= j; ++k) s += e[j - k] * e[k];
    a[j] = (j % 2 == 0 ? a0 : -a0) * s;
  }
  return a;
}

double a_n_formula(const std::vector<cplx>& points, double a0) {
  const auto e = elementary_symmetric(points);
  double s = 2.0;
  for (std::size_t k = 1; k + 1 < e.size(); ++k) s += std::norm(e[k]);
  return a0 * s;
}

cplx b_from_points(const std::vector<cplx>& points, std::size_t k) {
  if (k < 1 || k > points.size()) {
    throw ValidationError("b_from_points: k must lie in 1..n");
  }
  cplx s{0.0};
  for (const auto& z : points) s += std::pow(z, static_cast<int>(k));
  return -2.0 / static_cast<double>(k) * s;
}

RepZeroReport rep_zero_match(const AtomicConfig& cfg) {
  constexpr double kMatchTol = 1e-6;
  RepZeroReport rep;
  const auto n = static_cast<std::size_t>(cfg.n());
  FejerRieszResult fr;
  try {
    fr = fejer_riesz(TrigPolyReal::real_part_on_circle(build_P(cfg)));
  } catch (const std::exception& e) {
    rep.note = std::string("not applicable: ") + e.what();
    return rep;
  }
  rep.points = fr.circle_roots;
  rep.atoms_matched = std::all_of(cfg.atoms().begin(), cfg.atoms().end(), [&](const Atom& atom) {
    const cplx al = atom.alpha();
    return std::any_of(rep.points.begin(), rep.points.end(),
                       [&](cplx z) { return std::abs(z - al) < kMatchTol; });
  });
  if (rep.points.size() != n) {
    rep.note = "not applicable: " + std::to_string(rep.points.size()) +
               " circle zeros, need " + std::to_string(n);
    return rep;
  }
  rep.applicable = true;
  cplx prod{1.0};
  for (const auto& z : rep.points) prod *= z;
  rep.product_check = std::abs(prod - (n % 2 == 0 ? 1.0 : -1.0));

  const auto a = f_series(cfg, n);
  const auto b = g_series(cfg, n);
  const double a0 = a[0].real();
  rep.a_n_formula = a_n_formula(rep.points, a0);
  const auto rebuilt = reconstruct_f_mod(rep.points, a0);
  double err = 0.0;
  for (std::size_t j = 0; j <= n; ++j) err = std::max(err, std::abs(rebuilt[j] - a[j]));
  for (std::size_t k = 1; k <= n; ++k) {
    err = std::max(err, std::abs(b_from_points(rep.points, k) - b[k]));
  }
  rep.sup_coeff_error = err;
  rep.match = rep.atoms_matched && err <= 1e-8;
  rep.note = rep.match ? "match" : "mismatch";
  return rep;
}

}  // namespace krzyz
