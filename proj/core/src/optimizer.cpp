#include "krzyz/optimizer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <random>
#include <thread>

#include "krzyz/errors.hpp"
#include "krzyz/poly.hpp"
#include "krzyz/series.hpp"

namespace krzyz {
namespace {

// Optimizer-owned atom list. Unlike AtomicConfig it keeps its own order so
// the quasi-Newton memory stays aligned with the variables across steps.
struct State {
  std::vector<double> theta;
  std::vector<double> lambda;

  [[nodiscard]] std::size_t size() const { return theta.size(); }
  [[nodiscard]] AtomicConfig config(int n) const {
    std::vector<Atom> atoms(size());
    for (std::size_t k = 0; k < size(); ++k) atoms[k] = {theta[k], lambda[k]};
    return AtomicConfig::make(std::move(atoms), n);
  }
};

struct Eval {
  double value = 0.0;
  std::vector<double> grad;  // [d_theta..., d_lambda...]
};

Eval evaluate(const State& s, int n) {
  const auto P = build_P(s.config(n));
  const auto dP = P.derivative();
  const std::size_t N = s.size();
  Eval e;
  e.value = P[0].real();
  e.grad.resize(2 * N);
  for (std::size_t k = 0; k < N; ++k) {
    const cplx al = std::polar(1.0, -s.theta[k]);
    e.grad[k] = -s.lambda[k] * (al * dP(al)).imag();
    e.grad[N + k] = -P(al).real();
  }
  return e;
}

bool merge_close(State& s) {
  bool merged = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size();) {
      if (std::abs(angle_diff(s.theta[i], s.theta[j])) <= 2.0 * kMergeThreshold) {
        s.lambda[i] += s.lambda[j];
        s.theta.erase(s.theta.begin() + static_cast<std::ptrdiff_t>(j));
        s.lambda.erase(s.lambda.begin() + static_cast<std::ptrdiff_t>(j));
        merged = true;
      } else {
        ++j;
      }
    }
  }
  return merged;
}

class Ascent {
public:
  Ascent(int n, const OptimizerOptions& o) : n_(n), o_(o) {}

  OptimizationResult run(State s) {
    OptimizationResult out;
    const double gamma0 = 0.1 / (1.0 + n_);
    project(s);
    merge_close(s);
    align_rotation(s);
    std::vector<double> H;
    bool fresh = true;
    std::vector<int> pinned(s.size(), 0);
    auto reset = [&] {
      const std::size_t m = 2 * s.size();
      H.assign(m * m, 0.0);
      for (std::size_t i = 0; i < m; ++i) H[i * m + i] = gamma0;
      fresh = true;
    };
    reset();

    Eval cur = evaluate(s, n_);
    double pg_norm = 0.0;
    int it = 0;
    for (; it < o_.max_iterations; ++it) {
      if (o_.keep_history) out.history.push_back(cur.value);
      const std::size_t N = s.size();
      const std::size_t m = 2 * N;
      auto pg = projected(s, cur.grad);
      pg_norm = norm(pg);
      if (pg_norm < o_.grad_tol) {
        out.converged = true;
        break;
      }

      std::vector<double> d(m, 0.0);
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) d[i] += H[i * m + j] * pg[j];
      }
      restrict_direction(s, d);
      if (dot(pg, d) <= 0.0) {
        reset();
        for (std::size_t i = 0; i < m; ++i) d[i] = gamma0 * pg[i];
        restrict_direction(s, d);
      }

      State next;
      Eval trial;
      bool accepted = false;
      double step = 1.0;
      for (int ls = 0; ls < 60 && !accepted; ++ls, step *= o_.shrink) {
        next = s;
        for (std::size_t k = 0; k < N; ++k) {
          next.theta[k] += step * d[k];
          next.lambda[k] += step * d[N + k];
        }
        project(next);
        double gain = 0.0;
        for (std::size_t k = 0; k < N; ++k) {
          gain += cur.grad[k] * (next.theta[k] - s.theta[k]) +
                  cur.grad[N + k] * (next.lambda[k] - s.lambda[k]);
        }
        trial = evaluate(next, n_);
        accepted = gain > 0.0 && trial.value > cur.value &&
                   trial.value >= cur.value + o_.armijo_c * gain;
        // Below the resolution of the objective, progress is judged by the gradient.
        if (!accepted && gain < 1e-12 * std::max(1.0, std::abs(cur.value)) &&
            trial.value >= cur.value - 1e-15) {
          accepted = norm(projected(next, trial.grad)) < pg_norm;
        }
      }
      if (!accepted) {
        if (fresh) break;  // even a plain gradient step fails: stalled
        reset();
        continue;
      }

      // Quasi-Newton update for the minimization of -Re a_n.
      std::vector<double> sv(m), yv(m);
      for (std::size_t k = 0; k < N; ++k) {
        sv[k] = next.theta[k] - s.theta[k];
        sv[N + k] = next.lambda[k] - s.lambda[k];
      }
      for (std::size_t i = 0; i < m; ++i) yv[i] = cur.grad[i] - trial.grad[i];
      const double sy = dot(sv, yv);
      if (sy > 1e-14 * norm(sv) * norm(yv)) {
        if (fresh) {
          const double scale = sy / dot(yv, yv);
          for (std::size_t i = 0; i < m; ++i) H[i * m + i] = scale;
          fresh = false;
        }
        bfgs_update(H, sv, yv, sy);
      }

      s = std::move(next);
      cur = std::move(trial);

      bool changed = merge_close(s);
      for (std::size_t k = 0; k < s.size() && !changed; ++k) {
        pinned[k] = s.lambda[k] <= o_.lambda_floor ? pinned[k] + 1 : 0;
        if (pinned[k] >= o_.pin_iterations && s.size() > 1) {
          s.theta.erase(s.theta.begin() + static_cast<std::ptrdiff_t>(k));
          s.lambda.erase(s.lambda.begin() + static_cast<std::ptrdiff_t>(k));
          changed = true;
        }
      }
      if (changed) {
        pinned.assign(s.size(), 0);
        project(s);
        reset();
        cur = evaluate(s, n_);
      }
    }

    const auto norm_rot = normalize_rotation(s.config(n_));
    out.config = norm_rot.config;
    out.value = m_n(out.config);
    out.grad_norm = pg_norm;
    if (it == o_.max_iterations) out.grad_norm = norm(projected(s, evaluate(s, n_).grad));
    out.converged = out.converged || out.grad_norm < o_.grad_tol;
    out.stationarity = first_order_conditions(out.config);
    out.iterations = it;
    out.starts_used = 1;
    return out;
  }

private:
  // Start in the gauge where a_n is real and positive; from Re a_n < 0 the
  // ascent would otherwise head for the trivial value 0 at large mass.
  void align_rotation(State& s) const {
    const auto rot = normalize_rotation(s.config(n_));
    for (auto& th : s.theta) th = wrap_angle(th + rot.tau);
  }

  [[nodiscard]] bool at_floor(double lambda) const {
    return lambda <= o_.lambda_floor * (1.0 + 1e-12);
  }
  [[nodiscard]] bool mass_active(const State& s) const {
    if (o_.t_min <= 0.0) return false;
    const double t = std::accumulate(s.lambda.begin(), s.lambda.end(), 0.0);
    return t <= o_.t_min * (1.0 + 1e-10);
  }

  void project(State& s) const {
    for (auto& th : s.theta) th = wrap_angle(th);
    for (auto& la : s.lambda) la = std::max(la, o_.lambda_floor);
    if (o_.t_min > 0.0) {
      const double t = std::accumulate(s.lambda.begin(), s.lambda.end(), 0.0);
      if (t < o_.t_min) {
        for (auto& la : s.lambda) la *= o_.t_min / t;
      }
    }
  }

  // Zero the components of v that would push through an active bound. With
  // the mass constraint active an inward lambda part is moved to the tangent
  // plane sum(d lambda) = 0.
  void restrict_direction(const State& s, std::vector<double>& v) const {
    const std::size_t N = s.size();
    for (std::size_t k = 0; k < N; ++k) {
      if (at_floor(s.lambda[k]) && v[N + k] < 0.0) v[N + k] = 0.0;
    }
    if (mass_active(s)) {
      double sum = 0.0;
      std::size_t free = 0;
      for (std::size_t k = 0; k < N; ++k) {
        if (!(at_floor(s.lambda[k]) && v[N + k] <= 0.0)) {
          sum += v[N + k];
          ++free;
        }
      }
      if (sum < 0.0 && free > 0) {
        for (std::size_t k = 0; k < N; ++k) {
          if (!(at_floor(s.lambda[k]) && v[N + k] <= 0.0)) v[N + k] -= sum / free;
        }
      }
    }
  }

  [[nodiscard]] std::vector<double> projected(const State& s, std::vector<double> g) const {
    restrict_direction(s, g);
    return g;
  }

  static double dot(const std::vector<double>& a, const std::vector<double>& b) {
    return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
  }
  static double norm(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

  static void bfgs_update(std::vector<double>& H, const std::vector<double>& s,
                          const std::vector<double>& y, double sy) {
    const std::size_t m = s.size();
    const double rho = 1.0 / sy;
    std::vector<double> Hy(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) Hy[i] += H[i * m + j] * y[j];
    }
    const double yHy = dot(y, Hy);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        H[i * m + j] += -rho * (Hy[i] * s[j] + s[i] * Hy[j]) +
                        (rho * rho * yHy + rho) * s[i] * s[j];
      }
    }
  }

  int n_;
  OptimizerOptions o_;
};

// Even starts draw the mass from [0.8, 1.3]; odd starts from [0.8, 1.5 n] so
// that the far humps of the few-atom landscape are also seeded.
State random_start(int n, int N, int index, double t_min, double floor, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  std::uniform_real_distribution<double> mass(0.8, index % 2 == 0 ? 1.3 : std::max(1.3, 1.5 * n));
  std::gamma_distribution<double> gamma(1.0, 1.0);
  State s;
  s.theta.resize(static_cast<std::size_t>(N));
  s.lambda.resize(static_cast<std::size_t>(N));
  for (auto& th : s.theta) th = angle(rng);
  double sum = 0.0;
  for (auto& la : s.lambda) {
    la = gamma(rng);
    sum += la;
  }
  const double t = std::max(mass(rng), t_min);
  for (auto& la : s.lambda) la = std::max(floor, la * t / sum);
  return s;
}

void check_sizes(int n, int N, int starts) {
  if (n < 1) throw ValidationError("n: must be at least 1");
  if (N < 1) throw ValidationError("N: must be at least 1");
  if (starts < 1) throw ValidationError("starts: must be at least 1");
}

}  // namespace

unsigned worker_threads(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("KRZYZ_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

ObjectiveGradient objective_and_gradient(const AtomicConfig& cfg) {
  const auto P = build_P(cfg);
  const auto dP = P.derivative();
  ObjectiveGradient out;
  out.value = P[0].real();
  for (const auto& atom : cfg.atoms()) {
    const cplx al = atom.alpha();
    out.d_lambda.push_back(-P(al).real());
    out.d_theta.push_back(-atom.lambda * (al * dP(al)).imag());
  }
  return out;
}

RotationNormalization normalize_rotation(const AtomicConfig& cfg) {
  const auto n = static_cast<std::size_t>(cfg.n());
  const cplx an = f_series(cfg, n)[n];
  if (std::abs(an) <= 1e-12) return {cfg, 0.0, true};
  double arg = std::arg(an);
  if (arg < 0.0) arg += kTwoPi;
  if (arg < 1e-15 || kTwoPi - arg < 1e-15) return {cfg, 0.0, false};
  const double tau = arg / static_cast<double>(n);
  return {cfg.rotated(tau), tau, false};
}

OptimizationResult ascend(const AtomicConfig& start, const OptimizerOptions& options) {
  State s;
  for (const auto& a : start.atoms()) {
    s.theta.push_back(a.theta);
    s.lambda.push_back(a.lambda);
  }
  return Ascent(start.n(), options).run(std::move(s));
}

OptimizationResult maximize(int n, int N, int starts, std::uint64_t seed,
                            const OptimizerOptions& options) {
  check_sizes(n, N, starts);
  std::vector<OptimizationResult> results(static_cast<std::size_t>(starts));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < starts; i = next++) {
      std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                        static_cast<std::uint32_t>(N), static_cast<std::uint32_t>(i)};
      std::mt19937_64 rng(seq);
      auto s = random_start(n, N, i, options.t_min, options.lambda_floor, rng);
      results[static_cast<std::size_t>(i)] = Ascent(n, options).run(std::move(s));
    }
  };
  const unsigned nthreads = std::min<unsigned>(worker_threads(options.threads),
                                               static_cast<unsigned>(starts));
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < nthreads; ++k) pool.emplace_back(worker);
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i < results.size(); ++i) {
    if (results[i].value > results[best].value) best = i;
  }
  auto out = std::move(results[best]);
  if (options.polish_tol < options.grad_tol && out.grad_norm > options.polish_tol) {
    OptimizerOptions fine = options;
    fine.grad_tol = options.polish_tol;
    fine.max_iterations = 500;
    auto polished = ascend(out.config, fine);
    if (polished.value >= out.value - 1e-15) {
      polished.converged = polished.converged || out.converged;
      polished.iterations += out.iterations;
      if (options.keep_history) {
        out.history.insert(out.history.end(), polished.history.begin(), polished.history.end());
        polished.history = std::move(out.history);
      }
      out = std::move(polished);
    }
  }
  out.best_start = static_cast<int>(best);
  out.starts_used = starts;
  out.seed = seed;
  return out;
}

OptimizationResult constrained_maximize(int n, int N, double t_min, int starts,
                                        std::uint64_t seed, OptimizerOptions options) {
  if (!(t_min >= 0.0)) throw ValidationError("t_min: must be non-negative");
  options.t_min = t_min;
  return maximize(n, N, starts, seed, options);
}

std::vector<SweepRow> sweep_N(int n, int N_lo, int N_hi, int starts, std::uint64_t seed,
                              const OptimizerOptions& options) {
  check_sizes(n, N_lo, starts);
  if (N_hi < N_lo || N_hi > n) throw ValidationError("N range: must satisfy 1 <= lo <= hi <= n");
  std::vector<SweepRow> rows;
  for (int N = N_lo; N <= N_hi; ++N) {
    auto res = maximize(n, N, starts, seed, options);
    int used = starts;
    if (!rows.empty()) {
      // Warm start: previous optimum plus a light atom in its widest gap.
      const auto& prev = rows.back().result.config;
      std::vector<Atom> atoms(prev.atoms().begin(), prev.atoms().end());
      double widest = -1.0;
      double mid = 0.0;
      for (std::size_t k = 0; k < atoms.size(); ++k) {
        const double a = atoms[k].theta;
        double b = atoms[(k + 1) % atoms.size()].theta;
        if (b <= a) b += kTwoPi;
        if (b - a > widest) {
          widest = b - a;
          mid = 0.5 * (a + b);
        }
      }
      atoms.push_back({mid, 1e-3});
      auto warm = ascend(AtomicConfig::make(std::move(atoms), n), options);
      ++used;
      if (warm.value > res.value) {
        warm.seed = seed;
        warm.best_start = starts;
        res = std::move(warm);
      }
    }
    res.starts_used = used;
    rows.push_back({N, res.value, res.grad_norm, used, res});
  }
  return rows;
}

}  // namespace krzyz
