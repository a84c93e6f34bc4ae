#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "krzyz/config.hpp"

namespace krzyz {

/// Relative magnitude below which a coefficient counts as zero.
inline constexpr double kCoeffZeroTol = 1e-13;

/// Dense complex polynomial c_0 + c_1 z + ... + c_d z^d.
class ComplexPoly {
public:
  ComplexPoly() : coeffs_(1, cplx{0.0}) {}
  explicit ComplexPoly(std::vector<cplx> coeffs);

  /// prod_j (z - r_j), leading coefficient `lead`.
  static ComplexPoly from_roots(std::span<const cplx> roots, cplx lead = 1.0);

  /// Index of the last coefficient above kCoeffZeroTol * max|c|; 0 for constants
  /// (and for the zero polynomial).
  [[nodiscard]] std::size_t degree() const;
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] double max_abs_coeff() const;
  [[nodiscard]] std::span<const cplx> coeffs() const { return coeffs_; }
  [[nodiscard]] cplx operator[](std::size_t j) const {
    return j < coeffs_.size() ? coeffs_[j] : cplx{0.0};
  }
  [[nodiscard]] std::size_t size() const { return coeffs_.size(); }

  [[nodiscard]] cplx operator()(cplx z) const;
  [[nodiscard]] ComplexPoly derivative() const;
  /// Coefficients past degree() dropped.
  [[nodiscard]] ComplexPoly trimmed() const;
  /// z^d conj(p(1/conj z)) for d = size()-1: coefficient reversal with conjugation.
  [[nodiscard]] ComplexPoly reflected() const;

  friend ComplexPoly operator+(const ComplexPoly& a, const ComplexPoly& b);
  friend ComplexPoly operator-(const ComplexPoly& a, const ComplexPoly& b);
  friend ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b);
  friend ComplexPoly operator*(cplx s, const ComplexPoly& a);

private:
  std::vector<cplx> coeffs_;
};

/// Real-valued trigonometric polynomial T(theta) = sum_{k=-d}^{d} c_k e^{ik theta}
/// with c_{-k} = conj(c_k). Only c_0 (real) and c_1..c_d are stored.
class TrigPolyReal {
public:
  TrigPolyReal() = default;
  TrigPolyReal(double c0, std::vector<cplx> positive);

  /// theta -> Re p(e^{i theta}).
  static TrigPolyReal real_part_on_circle(const ComplexPoly& p);

  [[nodiscard]] std::size_t degree() const;
  [[nodiscard]] double c0() const { return c0_; }
  /// c_k for any integer k (zero outside the stored range).
  [[nodiscard]] cplx coeff(long k) const;
  [[nodiscard]] double operator()(double theta) const;

private:
  double c0_ = 0.0;
  std::vector<cplx> pos_;
};

// ---- polynomials built from the config ---------------------------------

/// P(z) = a_n + 2 sum_{j=1}^n a_{n-j} z^j, coefficients of f for the config as given.
ComplexPoly build_P(const AtomicConfig& cfg);
/// Q(z) = T_n(fg) + 2 sum_{j=1}^n T_{n-j}(fg) z^j.
ComplexPoly build_Q(const AtomicConfig& cfg);

// ---- root finding ------------------------------------------------------

struct RootOptions {
  int max_iterations = 200;
  double tolerance = 1e-13;  // relative Newton correction
};

/// All roots of p (with multiplicity). Aberth-Ehrlich simultaneous iteration,
/// falling back to companion-matrix eigenvalues when it stagnates. Exact zero
/// low-order coefficients are deflated as roots at the origin.
/// Throws ValidationError for the zero polynomial.
std::vector<cplx> roots(const ComplexPoly& p, const RootOptions& opts = {});

/// Winding number of theta -> e^{i theta} p(e^{i theta}) about the origin,
/// i.e. 1 + (number of roots of p in the open disk). Sample count is doubled
/// from `samples` until the count is stable. Throws PoleError ("boundary root")
/// when |p| is below 1e-10 * max|c| at a sample.
int winding_number(const ComplexPoly& p, std::size_t samples = 256);

// ---- Fejer-Riesz -------------------------------------------------------

struct FejerRieszResult {
  double scale = 1.0;              ///< c > 0
  ComplexPoly p;                   ///< monic, no roots in the open disk
  std::vector<cplx> roots;         ///< roots of p
  std::vector<cplx> circle_roots;  ///< the subset snapped to |z| = 1
  double sup_error = 0.0;          ///< sup_theta |c^2 |p|^2 - T| on 2048 points
};

struct FejerRieszOptions {
  double negativity_tol = 1e-9;    ///< allowed min of T on a 4096-point grid
  double circle_tol = 1e-6;        ///< | |w| - 1 | below this: snapped to the circle
  double pairing_tol = 1e-5;       ///< max angular gap between paired circle roots
};

/// T = c^2 |p(e^{i theta})|^2 with p monic of degree deg T and zero-free in D.
/// Throws ValidationError if T is negative beyond tolerance, NumericalError on
/// an unpaired (odd multiplicity) circle root.
FejerRieszResult fejer_riesz(const TrigPolyReal& T, const FejerRieszOptions& opts = {});

/// sup over `samples` equispaced angles of |c^2 |p|^2 - T|.
double fejer_riesz_error(const TrigPolyReal& T, double scale, const ComplexPoly& p,
                         std::size_t samples = 2048);

// ---- annulus -----------------------------------------------------------

struct AnnulusReport {
  double radius = 0.0;
  bool contained = false;
  std::vector<cplx> roots;  ///< roots of P
};

/// r = (1/a_0) sqrt(sum_{j<n} |a_j|^2 + a_n^2 / 4) and whether every root of P
/// lies in 1 - 1e-8 <= |z| <= r + 1e-8.
AnnulusReport annulus_radius(const AtomicConfig& cfg);

}  // namespace krzyz
