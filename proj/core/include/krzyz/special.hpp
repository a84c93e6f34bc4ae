#pragma once

#include <vector>

#include "krzyz/series.hpp"

namespace krzyz {

/// Generalized Laguerre polynomial L_j^{(alpha)}(x) from the finite sum
/// sum_k binom(j + alpha, j - k) (-x)^k / k!.
double laguerre(int j, double alpha, double x);

/// beta_j(t) = (-1)^j e^{-t} L_j^{(-1)}(2t), the j-th Taylor coefficient of
/// exp(t (z - 1) / (z + 1)).
double beta(int j, double t);

struct BetaSup {
  int j = 0;
  double t_star = 0.0;
  double value = 0.0;  ///< |beta_j(t_star)|
};

/// sup over t in [0, 4j] of |beta_j(t)|, j >= 1.
BetaSup beta_sup(int j);

struct RooneyBound {
  double value = 0.0;
  bool below_two_over_e = false;
};

/// sqrt(2 (2j)!) / (2^j j!) evaluated in log space.
RooneyBound rooney_bound(int j);

struct MassBoundCheck {
  int k = 0;
  double sum = 0.0;    ///< sum_{j=1}^k |a_j|^2
  double bound = 0.0;
  bool ok = false;     ///< sum <= bound + 1e-10
};

/// Upper bound on sum_{j=1}^k |a_j|^2 over singular inner f, k in {2, 3, 4}.
double mass_bound(int k);

/// Throws ValidationError for k outside {2, 3, 4} or a series of order < k.
MassBoundCheck mass_bounds_check(const PowerSeries& a, int k);

enum class RestrictedFamily { two_atom, one_atom, tie };

struct FamilyOptimum {
  double t = 0.0;
  double value = 0.0;
};

struct RestrictedProblem {
  double r = 0.0;
  double t_min = 0.0;             ///< -log r
  FamilyOptimum two_atom;         ///< sup_{t >= t_min} 2t e^{-t}
  FamilyOptimum one_atom;         ///< sup_{t >= t_min} |2t(t-1) e^{-t}|
  double value = 0.0;
  RestrictedFamily argmax = RestrictedFamily::tie;
};

/// Smallest root in (0, 1) of r log r = -(2 + sqrt 5) e^{-(3 + sqrt 5)/2}.
double restricted_r0();

/// The n = 2 problem restricted to f(0) <= r, i.e. t >= -log r.
RestrictedProblem restricted_problem(double r);
/// Same, at r = restricted_r0(), where the two families tie.
RestrictedProblem restricted_problem();

}  // namespace krzyz
