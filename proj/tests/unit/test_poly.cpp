#include <doctest.h>

#include <algorithm>

#include "krzyz/errors.hpp"
#include "krzyz/optimizer.hpp"
#include "krzyz/poly.hpp"
#include "support.hpp"

using namespace krzyz;
using namespace krzyz::testing;
using doctest::Approx;

namespace {

// Every expected root is matched by some computed root within tol.
bool same_roots(std::vector<cplx> got, const std::vector<cplx>& want, double tol) {
  if (got.size() != want.size()) return false;
  for (const auto& w : want) {
    auto it = std::min_element(got.begin(), got.end(),
                               [&](cplx a, cplx b) { return std::abs(a - w) < std::abs(b - w); });
    if (std::abs(*it - w) > tol) return false;
    got.erase(it);
  }
  return true;
}

ComplexPoly random_poly(std::mt19937_64& rng, std::size_t degree) {
  std::normal_distribution<double> g;
  std::vector<cplx> c(degree + 1);
  for (auto& x : c) x = {g(rng), g(rng)};
  return ComplexPoly(c);
}

}  // namespace

TEST_CASE("P and Q of the reference configs") {
  const auto P1 = build_P(reference_config(1));
  CHECK(std::abs(P1[0] - kTwoOverE) < 1e-15);
  CHECK(std::abs(P1[1] - kTwoOverE) < 1e-15);
  const auto Q1 = build_Q(reference_config(1));
  CHECK(std::abs(Q1[0]) < 1e-15);
  CHECK(std::abs(Q1[1] + kTwoOverE) < 1e-15);

  for (int n = 2; n <= 8; ++n) {
    const auto P = build_P(reference_config(n));
    const auto Q = build_Q(reference_config(n));
    REQUIRE(P.size() == static_cast<std::size_t>(n + 1));
    CHECK(std::abs(P[0] - kTwoOverE) < 1e-14);
    CHECK(std::abs(P[static_cast<std::size_t>(n)] - kTwoOverE) < 1e-14);
    CHECK(std::abs(Q[static_cast<std::size_t>(n)] + kTwoOverE) < 1e-14);
    for (int j = 1; j < n; ++j) {
      CHECK(std::abs(P[static_cast<std::size_t>(j)]) < 1e-14);
      CHECK(std::abs(Q[static_cast<std::size_t>(j)]) < 1e-14);
    }
  }
}

TEST_CASE("Im Q vanishes at the atoms of stationary configs") {
  for (int n = 1; n <= 6; ++n) {
    const auto cfg = reference_config(n);
    const auto Q = build_Q(cfg);
    for (const auto& a : cfg.atoms()) CHECK(std::abs(Q(a.alpha()).imag()) < 1e-13);
  }
}

TEST_CASE("P is continuous as the mass shrinks") {
  const auto P1 = build_P(AtomicConfig::make({{1.0, 1e-6}, {2.0, 1e-6}}, 2));
  const auto P2 = build_P(AtomicConfig::make({{1.0, 1.1e-6}, {2.0, 1e-6}}, 2));
  CHECK((P1 - P2).max_abs_coeff() < 1e-6);
  CHECK(std::abs(P1[2] - 2.0 * std::exp(-2e-6)) < 1e-12);
}

TEST_CASE("roots of simple polynomials") {
  CHECK(same_roots(roots(ComplexPoly({1.0, 0.0, 1.0})), {cplx(0, 1), cplx(0, -1)}, 1e-12));
  CHECK(same_roots(roots(ComplexPoly({1.0, -2.0, 1.0})), {1.0, 1.0}, 1e-7));
  for (int n = 1; n <= 10; ++n) {
    CHECK(same_roots(roots(build_P(reference_config(n))), roots_of_minus_one(n), 1e-12));
  }
  CHECK(same_roots(roots(ComplexPoly({0.0, 0.0, 1.0, 1.0})), {0.0, 0.0, -1.0}, 1e-14));
  CHECK_THROWS_AS(roots(ComplexPoly({0.0, 0.0})), ValidationError);
  CHECK(roots(ComplexPoly({3.0})).empty());
}

TEST_CASE("roots reproduce random polynomials") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 50; ++i) {
    const auto p = random_poly(rng, 1 + static_cast<std::size_t>(i % 20));
    const auto r = roots(p);
    REQUIRE(r.size() == p.degree());
    const auto rebuilt = ComplexPoly::from_roots(r, p[p.degree()]);
    CHECK((rebuilt - p).max_abs_coeff() <= 1e-9 * p.max_abs_coeff());
  }
}

TEST_CASE("winding numbers") {
  for (int n = 1; n <= 8; ++n) {
    CHECK(winding_number(build_P(reference_config(n)).derivative()) == n);
  }
  CHECK(winding_number(ComplexPoly({1.0})) == 1);
  CHECK(winding_number(ComplexPoly({-2.0, 1.0})) == 1);
  CHECK_THROWS_AS(winding_number(ComplexPoly({-1.0, 1.0})), PoleError);
}

TEST_CASE("winding number equals the root count of z p(z) in the disk") {
  std::mt19937_64 rng(7);
  int tested = 0;
  while (tested < 50) {
    const auto p = random_poly(rng, 1 + static_cast<std::size_t>(tested % 12));
    const auto r = roots(p);
    if (std::any_of(r.begin(), r.end(), [](cplx z) { return std::abs(std::abs(z) - 1.0) < 1e-3; })) continue;
    const auto inside = std::count_if(r.begin(), r.end(), [](cplx z) { return std::abs(z) < 1.0; });
    CHECK(winding_number(p) == 1 + inside);
    ++tested;
  }
}

TEST_CASE("Fejer-Riesz on closed-form examples") {
  const auto f1 = fejer_riesz(TrigPolyReal(2.0, {1.0}));
  CHECK(f1.scale == Approx(1.0));
  CHECK(std::abs(f1.p[0] - 1.0) < 1e-8);
  CHECK(std::abs(f1.p[1] - 1.0) < 1e-12);
  CHECK(f1.sup_error < 1e-12);

  const auto f0 = fejer_riesz(TrigPolyReal(1.0, {}));
  CHECK(f0.scale == Approx(1.0));
  CHECK(f0.p.degree() == 0);

  for (int n = 1; n <= 8; ++n) {
    const auto T = TrigPolyReal::real_part_on_circle(build_P(reference_config(n)));
    const auto fr = fejer_riesz(T);
    CHECK(fr.scale == Approx(std::exp(-0.5)).epsilon(1e-8));
    CHECK(std::abs(fr.p[0] - 1.0) < 1e-7);
    CHECK(std::abs(fr.p[static_cast<std::size_t>(n)] - 1.0) < 1e-12);
    CHECK(fr.circle_roots.size() == static_cast<std::size_t>(n));
    CHECK(fr.sup_error <= 1e-7);
  }
}

TEST_CASE("Fejer-Riesz on random strictly positive trigonometric polynomials") {
  std::mt19937_64 rng(2024);
  std::normal_distribution<double> g;
  for (int i = 0; i < 40; ++i) {
    const std::size_t d = 1 + static_cast<std::size_t>(i % 16);
    // T = |q|^2 + 0.1 is strictly positive.
    std::vector<cplx> qc(d + 1);
    for (auto& c : qc) c = {g(rng), g(rng)};
    std::vector<cplx> pos(d, cplx{0.0});
    double c0 = 0.1;
    for (std::size_t a = 0; a <= d; ++a) {
      c0 += std::norm(qc[a]);
      for (std::size_t b = a + 1; b <= d; ++b) pos[b - a - 1] += qc[b] * std::conj(qc[a]);
    }
    const TrigPolyReal T(c0, pos);
    const auto fr = fejer_riesz(T);
    CHECK(fr.sup_error <= 1e-9 * std::max(1.0, c0));
    for (const auto& r : fr.roots) CHECK(std::abs(r) >= 1.0 - 1e-9);
  }
}

TEST_CASE("Fejer-Riesz rejects negative input") {
  CHECK_THROWS_AS(fejer_riesz(TrigPolyReal(0.5, {1.0})), ValidationError);
}

TEST_CASE("annulus containing the roots of P") {
  for (int n = 1; n <= 8; ++n) {
    const auto rep = annulus_radius(reference_config(n));
    CHECK(rep.radius == Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(rep.contained);
  }
  const auto single = annulus_radius(AtomicConfig::make({{std::numbers::pi, 2.0}}, 1));
  CHECK(single.radius == Approx(std::sqrt(1.0 + 4.0 * 4.0 / 4.0)));
  CHECK(single.contained);
}

TEST_CASE("Re P is positive inside the disk at stationary configs") {
  std::mt19937_64 rng(3);
  for (int n = 1; n <= 6; ++n) {
    const auto P = build_P(reference_config(n));
    for (int i = 0; i < 1000; ++i) CHECK(P(random_disk_point(rng, 0.999)).real() > 0.0);
  }
  const auto res = maximize(3, 3, 16, 5);
  const auto P = build_P(res.config);
  for (int i = 0; i < 1000; ++i) CHECK(P(random_disk_point(rng, 0.999)).real() > 0.0);
}

TEST_CASE("polynomial arithmetic") {
  const ComplexPoly a({1.0, 2.0});
  const ComplexPoly b({0.0, 1.0, 1.0});
  CHECK(std::abs((a * b)[3] - 2.0) < 1e-15);
  CHECK((a + b).degree() == 2);
  CHECK(std::abs(a.derivative()[0] - 2.0) < 1e-15);
  CHECK(std::abs(ComplexPoly({cplx(1, 1), 2.0}).reflected()[1] - cplx(1, -1)) < 1e-15);
  CHECK(ComplexPoly({1.0, 0.0, 0.0}).trimmed().size() == 1);
  CHECK(ComplexPoly({0.0}).is_zero());
  const TrigPolyReal T(2.0, {1.0});
  CHECK(T(0.0) == Approx(4.0));
  CHECK(std::abs(T.coeff(-1) - 1.0) < 1e-15);
  CHECK(T.degree() == 1);
}
