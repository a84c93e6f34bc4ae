#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace krzyz::cli {

// Exit codes: 0 success, 1 failed check or non-convergence, 2 usage or input error.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;

struct Common {
  std::string config;
  std::string out;
};

int cmd_coeffs(const Common& c, int order);
int cmd_verify(const Common& c, const std::string& only, double tol);
int cmd_optimize(const Common& c, int n, int atoms, int starts, std::uint64_t seed);
int cmd_sweep(const Common& c, int n, int starts, std::uint64_t seed);
int cmd_thm1_audit(const Common& c, double k1);
int cmd_fejer(const Common& c, double tol);
int cmd_beta(const Common& c, int j, bool sup, std::optional<double> t);
int cmd_plot(const Common& c, const std::string& what, const std::string& svg);

}  // namespace krzyz::cli
