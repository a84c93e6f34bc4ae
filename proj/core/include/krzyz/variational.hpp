#pragma once

#include <cstddef>
#include <vector>

#include "krzyz/config.hpp"
#include "krzyz/poly.hpp"

namespace krzyz {

// First-order (variational) data of an extremal candidate. Everything here
// evaluates on any config; the identities and closed forms only hold at
// stationary ones with a_n real and positive.

enum class IdentityKind { base, derivative };

struct IdentityResidual {
  int r = 0;
  IdentityKind kind = IdentityKind::base;
  cplx value{0.0};  ///< LHS - RHS
};

/// base:        sum_{j=0}^n a_{n-j} b_{r+j} + sum_{j=1}^n conj(a_{n-j}) b_{r-j}
///              + conj(a_{n-r}) b_0 [0 <= r <= n]
/// derivative:  sum_{j=1}^n j a_{n-j} b_{r+j} - sum_{j=1}^n j conj(a_{n-j}) b_{r-j}
///              - r conj(a_{n-r}) b_0 [1 <= r <= n]
/// with b_{-j} = conj(b_j).
IdentityResidual residual_identity(const AtomicConfig& cfg, int r, IdentityKind kind);

/// Rational closed forms for g and z g' built from P and Q. The numerator and
/// denominator are assembled once as degree-2n polynomials.
class RationalForms {
public:
  explicit RationalForms(const AtomicConfig& cfg);

  /// (z^n Q(1/z) - z^n conj(Q(conj z))) / (z^n P(1/z) + z^n conj(P(conj z)))
  [[nodiscard]] cplx g(cplx z) const;
  /// n - (z^{n-1} P'(1/z) + z^{n+1} conj(P'(conj z))) / (same denominator)
  [[nodiscard]] cplx zg_prime(cplx z) const;
  /// Im Q(e^{-i theta}) / Re P(e^{-i theta})
  [[nodiscard]] double phi(double theta) const;
  /// n - Re(e^{-i theta} P'(e^{-i theta})) / Re P(e^{-i theta})
  [[nodiscard]] double phi_prime(double theta) const;

  [[nodiscard]] const ComplexPoly& P() const { return P_; }
  [[nodiscard]] const ComplexPoly& Q() const { return Q_; }
  [[nodiscard]] const ComplexPoly& denominator() const { return den_; }

private:
  [[nodiscard]] cplx checked_denominator(cplx z) const;
  [[nodiscard]] double checked_re_p(cplx w) const;

  int n_;
  ComplexPoly P_;
  ComplexPoly Q_;
  ComplexPoly dP_;
  ComplexPoly den_;
  ComplexPoly g_num_;
  ComplexPoly zg_num_;
};

cplx g_from_PQ(const AtomicConfig& cfg, cplx z);
cplx zgprime_from_P(const AtomicConfig& cfg, cplx z);
double phi_from_PQ(const AtomicConfig& cfg, double theta);
double phi_prime_from_P(const AtomicConfig& cfg, double theta);

struct AtomStationarity {
  double re_p = 0.0;       ///< Re P(alpha_k)
  double im_alpha_dp = 0.0;  ///< Im(alpha_k P'(alpha_k))
};

struct StationarityReport {
  std::vector<AtomStationarity> atoms;
  double max_residual = 0.0;
};

StationarityReport first_order_conditions(const AtomicConfig& cfg);

struct AtomCountBound {
  int m = 0;                      ///< 1 + #roots of P' in D = zeros of z P'(z) in D
  bool ok = false;                ///< N >= m
  bool all_critical_in_disk = false;  ///< every root of P' in D: forces N = n
  bool boundary_ambiguous = false;    ///< some root of P' within 1e-6 of the circle
  std::vector<cplx> critical_points;  ///< roots of P'
};

AtomCountBound n_lower_bound(const AtomicConfig& cfg);

}  // namespace krzyz
