#include <CLI11.hpp>

#include <iostream>

#include "commands.hpp"
#include "krzyz/errors.hpp"

int main(int argc, char** argv) {
  using namespace krzyz::cli;
  CLI::App app{"Coefficient extremal problem for bounded analytic functions"};
  app.require_subcommand(1);

  Common common;
  auto add_common = [&](CLI::App* sub, bool config_required) {
    auto* opt = sub->add_option("--config", common.config, "Atomic config JSON");
    if (config_required) opt->required()->check(CLI::ExistingFile);
    sub->add_option("--out", common.out, "Output path (stdout when omitted)");
  };

  int order = 8;
  auto* coeffs = app.add_subcommand("coeffs", "Taylor coefficients a_j, b_j, T_j(fg) as CSV");
  add_common(coeffs, true);
  coeffs->add_option("--order", order, "Highest index")->check(CLI::NonNegativeNumber);

  std::string only;
  double tol = 1e-6;
  auto* verify = app.add_subcommand("verify", "Identity and condition battery");
  add_common(verify, true);
  verify->add_option("--only", only, "Run a single check: stationarity, identities, thmX, "
                                     "m_bound, negativity, annulus, reconstruct, invariants");
  verify->add_option("--tol", tol, "Stationarity tolerance");

  int n = 2, atoms = 0, starts = 32;
  std::uint64_t seed = 1;
  auto* optimize = app.add_subcommand("optimize", "Multistart maximization of Re a_n");
  add_common(optimize, false);
  optimize->add_option("index", n, "Coefficient index n");
  optimize->add_option("atom_count", atoms, "Number of atoms N (defaults to n)");
  optimize->add_option("--n", n, "Coefficient index n")->check(CLI::PositiveNumber);
  optimize->add_option("--atoms", atoms, "Number of atoms N")->check(CLI::PositiveNumber);
  optimize->add_option("--starts", starts, "Random starts")->check(CLI::PositiveNumber);
  optimize->add_option("--seed", seed, "Seed");

  auto* sweep = app.add_subcommand("sweep", "Best value for each atom count N = 1..n");
  add_common(sweep, false);
  sweep->add_option("index", n, "Coefficient index n");
  sweep->add_option("--n", n, "Coefficient index n")->check(CLI::PositiveNumber);
  sweep->add_option("--starts", starts, "Random starts per N")->check(CLI::PositiveNumber);
  sweep->add_option("--seed", seed, "Seed");

  double k1 = 4.0 / 3.0;
  auto* audit = app.add_subcommand("thm1-audit", "Level-set and oscillatory-integral audit");
  add_common(audit, true);
  audit->add_option("--k1", k1, "Level k1 > 1");

  double fejer_tol = 1e-7;
  auto* fejer = app.add_subcommand("fejer", "Factor Re P on the circle as c^2 |p|^2");
  add_common(fejer, true);
  fejer->add_option("--tol", fejer_tol, "Allowed sup error");

  int j = 1;
  bool sup = false;
  std::optional<double> t;
  auto* beta = app.add_subcommand("beta", "Laguerre coefficient functions beta_j");
  add_common(beta, false);
  beta->add_option("j", j, "Index j")->required()->check(CLI::NonNegativeNumber);
  beta->add_flag("--sup", sup, "Supremum over t >= 0 with the Rooney bound");
  beta->add_option("--t", t, "Evaluate beta_j at t");

  std::string what = "phi", svg;
  auto* plot = app.add_subcommand("plot", "SVG plot of phi or Re P on the circle");
  add_common(plot, true);
  plot->add_option("what", what, "phi or reP")->check(CLI::IsMember({"phi", "reP"}));
  plot->add_option("--svg", svg, "SVG output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*coeffs) return cmd_coeffs(common, order);
    if (*verify) return cmd_verify(common, only, tol);
    if (*optimize) return cmd_optimize(common, n, atoms > 0 ? atoms : n, starts, seed);
    if (*sweep) return cmd_sweep(common, n, starts, seed);
    if (*audit) return cmd_thm1_audit(common, k1);
    if (*fejer) return cmd_fejer(common, fejer_tol);
    if (*beta) return cmd_beta(common, j, sup, t);
    if (*plot) return cmd_plot(common, what, svg);
  } catch (const krzyz::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kUsage;
}
