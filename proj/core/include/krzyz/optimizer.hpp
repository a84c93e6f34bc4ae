#pragma once

#include <cstdint>
#include <vector>

#include "krzyz/config.hpp"
#include "krzyz/variational.hpp"

namespace krzyz {

/// Re a_n and its partial derivatives, listed in the config's atom order.
struct ObjectiveGradient {
  double value = 0.0;
  std::vector<double> d_lambda;  ///< -Re P(alpha_k)
  std::vector<double> d_theta;   ///< -lambda_k Im(alpha_k P'(alpha_k))
};

ObjectiveGradient objective_and_gradient(const AtomicConfig& cfg);

struct RotationNormalization {
  AtomicConfig config;
  double tau = 0.0;
  bool gauge_undefined = false;  ///< |a_n| <= 1e-12, config returned unchanged
};

/// Shift every angle by the smallest tau >= 0 making a_n real and positive.
RotationNormalization normalize_rotation(const AtomicConfig& cfg);

struct OptimizerOptions {
  int max_iterations = 5000;
  double grad_tol = 1e-8;
  double polish_tol = 1e-13;      ///< gradient norm the best start is refined to
  double lambda_floor = 1e-8;
  int pin_iterations = 20;        ///< iterations at the floor before an atom is dropped
  double armijo_c = 1e-4;
  double shrink = 0.5;
  double t_min = 0.0;             ///< constraint sum lambda >= t_min
  unsigned threads = 0;           ///< 0: KRZYZ_THREADS or hardware concurrency
  bool keep_history = false;
};

struct OptimizationResult {
  AtomicConfig config = reference_config(1);  ///< rotation-normalized
  double value = 0.0;
  double grad_norm = 0.0;          ///< norm of the projected gradient
  StationarityReport stationarity;
  bool converged = false;
  int starts_used = 0;
  int best_start = 0;
  int iterations = 0;              ///< of the best start
  std::uint64_t seed = 0;
  std::vector<double> history;     ///< objective per iteration of the best start
};

/// Multistart projected quasi-Newton ascent of Re a_n over N-atom configs.
OptimizationResult maximize(int n, int N, int starts, std::uint64_t seed,
                            const OptimizerOptions& options = {});

/// Single ascent run from a given config.
OptimizationResult ascend(const AtomicConfig& start, const OptimizerOptions& options = {});

/// maximize() with the extra constraint sum lambda >= t_min.
OptimizationResult constrained_maximize(int n, int N, double t_min, int starts = 32,
                                        std::uint64_t seed = 1, OptimizerOptions options = {});

struct SweepRow {
  int N = 0;
  double best_value = 0.0;
  double grad_norm = 0.0;
  int starts = 0;
  OptimizationResult result;
};

/// Best value per atom count N in [N_lo, N_hi] (a sub-range of [1, n]).
/// Each N also restarts from the previous optimum with one small extra atom.
std::vector<SweepRow> sweep_N(int n, int N_lo, int N_hi, int starts, std::uint64_t seed = 1,
                              const OptimizerOptions& options = {});

/// Parallel start cap: KRZYZ_THREADS if set and positive, else hardware concurrency.
unsigned worker_threads(unsigned requested = 0);

}  // namespace krzyz
