#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "krzyz/boundary.hpp"
#include "krzyz/config.hpp"
#include "krzyz/inner.hpp"
#include "krzyz/optimizer.hpp"
#include "krzyz/poly.hpp"
#include "krzyz/reconstruct.hpp"
#include "krzyz/series.hpp"
#include "krzyz/special.hpp"
#include "krzyz/variational.hpp"

namespace krzyz::io {

using json = nlohmann::ordered_json;

// ---- configs -------------------------------------------------------------

json to_json(const AtomicConfig& cfg);
/// {"n": int, "atoms": [{"theta": x, "lambda": y}, ...]}. Throws
/// ValidationError naming the offending field, e.g. "atoms[1].lambda: expected number".
AtomicConfig config_from_json(const json& j);
/// Reads and parses a config file; parse errors carry the line and column.
AtomicConfig load_config(const std::filesystem::path& path);

// ---- tables --------------------------------------------------------------

/// Columns j, re, im.
std::string series_csv(const PowerSeries& s);
/// Columns j, a_re, a_im, b_re, b_im, fg_re, fg_im for j = 0..order.
std::string coefficients_csv(const AtomicConfig& cfg, std::size_t order);
/// Columns j, t_star, sup_value, rooney_bound.
std::string beta_table_csv(const std::vector<BetaSup>& rows);
/// Columns N, best_value, grad_norm, starts.
std::string sweep_csv(const std::vector<SweepRow>& rows);

// ---- reports -------------------------------------------------------------

json to_json(cplx z);
json to_json(const ComplexPoly& p);
ComplexPoly poly_from_json(const json& j);
json to_json(const FejerRieszResult& fr);
json to_json(const StationarityReport& s);
json to_json(const std::vector<IdentityResidual>& residuals);
json audit_json(const ErmersAudit& audit, const std::vector<VdcArc>& vdc, const LevelSetConstant& c);
json invariants_json(const std::vector<double>& rotations, int orbit_count, const GcdCertificate& gcd,
                     const std::vector<bool>& conditions);
json to_json(const RepZeroReport& rep);
json to_json(const OptimizationResult& res);

// ---- files ---------------------------------------------------------------

struct RunManifest {
  std::string command;
  std::string config_path;
  json parameters = json::object();
  std::uint64_t seed = 0;
  std::vector<std::string> outputs;
  std::string version = "0.1.0";
  std::string timestamp;  ///< filled by write_manifest when empty

  [[nodiscard]] json to_json() const;
};

/// Writes `text` to `path`, creating parent directories.
void write_text(const std::filesystem::path& path, const std::string& text);
/// Serialized with a two-space indent and a trailing newline.
std::string dump(const json& j);
/// Writes `<output>.manifest.json` beside an output file; returns its path.
std::filesystem::path write_manifest(const std::filesystem::path& output, RunManifest manifest);

}  // namespace krzyz::io
