#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "krzyz/config.hpp"
#include "krzyz/series.hpp"

namespace krzyz {

/// Distinct points on the unit circle, e.g. the circle zeros of Re P.
struct CircleZeroSet {
  std::vector<cplx> points;
  std::string provenance = "supplied";

  /// Throws ValidationError unless every |z| = 1 within 1e-9 and the points
  /// are pairwise distinct.
  void validate() const;
};

/// e_0..e_n of the points, from the coefficients of prod_j (x + w_j).
std::vector<cplx> elementary_symmetric(const std::vector<cplx>& points);

/// p_k = sum_j w_j^k for k = 0..max_k.
std::vector<cplx> power_sums(const std::vector<cplx>& points, std::size_t max_k);

/// a_0 prod_j (1 - z_j z)^2 mod z^{n+1}, i.e.
/// a_j = (-1)^j a_0 sum_{k=0}^j e_{j-k} e_k.
PowerSeries reconstruct_f_mod(const std::vector<cplx>& points, double a0);

/// a_0 (2 + sum_{k=1}^{n-1} |e_k|^2).
double a_n_formula(const std::vector<cplx>& points, double a0);

/// b_k = -(2/k) sum_j z_j^k for 1 <= k <= n.
cplx b_from_points(const std::vector<cplx>& points, std::size_t k);

struct RepZeroReport {
  bool applicable = false;          ///< Re P has n distinct circle zeros
  bool atoms_matched = false;       ///< every alpha_j among the circle zeros
  bool match = false;               ///< atoms matched and reconstruction agrees
  std::vector<cplx> points;         ///< circle zeros of the Fejer-Riesz factor
  double product_check = 0.0;       ///< | prod z_j - (-1)^n |
  double a_n_formula = 0.0;
  double sup_coeff_error = 0.0;     ///< max over a_0..a_n and b_1..b_n
  std::string note;
};

/// Factor Re P on the circle, compare its circle zeros with the atoms and,
/// when there are n of them, rebuild a_j and b_j from the zeros alone.
RepZeroReport rep_zero_match(const AtomicConfig& cfg);

}  // namespace krzyz
