#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "krzyz/config.hpp"
#include "krzyz/poly.hpp"

namespace krzyz {

/// xi * prod_j (z - z_j) / (1 - conj(z_j) z), |xi| = 1, every |z_j| < 1.
class BlaschkeProduct {
public:
  BlaschkeProduct() = default;
  BlaschkeProduct(cplx unimodular, std::vector<cplx> zeros);

  [[nodiscard]] cplx unimodular() const { return xi_; }
  [[nodiscard]] const std::vector<cplx>& zeros() const { return zeros_; }
  [[nodiscard]] std::size_t degree() const { return zeros_.size(); }

  [[nodiscard]] cplx operator()(cplx z) const;
  [[nodiscard]] cplx derivative(cplx z) const;
  /// xi prod (z - z_j)
  [[nodiscard]] ComplexPoly numerator() const;
  /// prod (1 - conj(z_j) z)
  [[nodiscard]] ComplexPoly denominator() const;
  /// sup over `samples` circle points of | |B| - 1 |.
  [[nodiscard]] double circle_modulus_error(std::size_t samples = 512) const;

private:
  cplx xi_{1.0};
  std::vector<cplx> zeros_;
};

/// The degree-N Blaschke product h with f = exp(t (h - 1)/(h + 1)), built from
/// h = (t q + r)/(t q - r), q = prod (1 - alpha_j z), r = q log f.
/// Throws NumericalError when the extracted degree is not N or |h| strays
/// from 1 on the circle by more than 1e-6.
BlaschkeProduct blaschke_h(const AtomicConfig& cfg);

/// q(z) = prod (1 - alpha_j z) and r(z) = q(z) g(z) (a polynomial of degree N).
struct RationalLog {
  ComplexPoly q;
  ComplexPoly r;
  double t = 0.0;
  double tail_residual = 0.0;  ///< size of the q g coefficients past degree N
};
RationalLog rational_log(const AtomicConfig& cfg);

/// f'(z) - 2 t f(z) h'(z) / (h(z) + 1)^2 with f, f' from the Taylor series and
/// h from blaschke_h. PoleError when h(z) is within 1e-10 of -1.
cplx check_fprime_relation(const AtomicConfig& cfg, cplx z);
cplx check_fprime_relation(const AtomicConfig& cfg, const BlaschkeProduct& h, cplx z);

/// psi(z) = psi_{-a}(xi psi_a(z)), psi_a(z) = (z - a)/(1 - conj(a) z).
struct MobiusMap {
  cplx a{0.0};
  cplx xi{1.0};

  static MobiusMap rotation(double tau) { return {cplx{0.0}, std::polar(1.0, tau)}; }
  [[nodiscard]] cplx operator()(cplx z) const;
  /// (A, B, C, D) with psi(z) = (A z + B)/(C z + D).
  [[nodiscard]] std::array<cplx, 4> coefficients() const;
};

/// Angles tau in [0, 2pi) whose rotation maps the atom multiset onto itself
/// (angles within 1e-9, weights within 1e-9). Always contains 0.
std::vector<double> rotation_invariants(const AtomicConfig& cfg);

/// Taylor coefficients of f o psi (series composition about psi(0)) against
/// those of f up to `order` >= 2n, within 1e-8.
bool mobius_invariance_check(const AtomicConfig& cfg, const MobiusMap& psi, std::size_t order);

/// Max coefficient difference |T_j(f o psi) - a_j| for j <= order.
double mobius_coefficient_gap(const AtomicConfig& cfg, const MobiusMap& psi, std::size_t order);

/// Conditions (1)-(5) that each pin down f_n among extremals:
///  1 rotation invariance by some angle in (0, 4pi/n)
///  2 g(z) = g(0) only at z = 0
///  3 f' zero-free on D minus the origin
///  4 a_j = 0 for 1 <= j <= N - 1
///  5 a_j = 0 for 1 <= j <= ceil((n - 2)/3)
bool krzyz_condition_check(const AtomicConfig& cfg, int which, double tol = 1e-9);

/// Number of distinct configs among the rotations by 2 pi j / n, j = 1..n.
int rotation_orbit_count(const AtomicConfig& cfg);

struct GcdCertificate {
  int gcd = 1;
  bool consistent = true;
};

/// With a nontrivial rotation invariant: gcd(N, n) and whether it exceeds 1.
/// Otherwise vacuously (1, true).
GcdCertificate gcd_certificate(const AtomicConfig& cfg);

/// B1 o B2, re-extracted from the composed numerator's roots.
BlaschkeProduct compose(const BlaschkeProduct& outer, const BlaschkeProduct& inner);

}  // namespace krzyz
