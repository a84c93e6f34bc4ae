#include "krzyz/io.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

#include "krzyz/errors.hpp"

namespace krzyz::io {
namespace {

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double number_field(const json& obj, const char* key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw ValidationError(where + "." + key + ": missing");
  if (!it->is_number()) throw ValidationError(where + "." + key + ": expected number");
  return it->get<double>();
}

}  // namespace

json to_json(const AtomicConfig& cfg) {
  json atoms = json::array();
  for (const auto& a : cfg.atoms()) atoms.push_back({{"theta", a.theta}, {"lambda", a.lambda}});
  return {{"n", cfg.n()}, {"atoms", atoms}};
}

AtomicConfig config_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("config: expected a JSON object");
  const auto n_it = j.find("n");
  if (n_it == j.end()) throw ValidationError("n: missing");
  if (!n_it->is_number_integer()) throw ValidationError("n: expected integer");
  const auto a_it = j.find("atoms");
  if (a_it == j.end()) throw ValidationError("atoms: missing");
  if (!a_it->is_array()) throw ValidationError("atoms: expected array");
  std::vector<Atom> atoms;
  for (std::size_t i = 0; i < a_it->size(); ++i) {
    const auto& item = (*a_it)[i];
    const std::string where = "atoms[" + std::to_string(i) + "]";
    if (!item.is_object()) throw ValidationError(where + ": expected object");
    atoms.push_back({number_field(item, "theta", where), number_field(item, "lambda", where)});
  }
  return AtomicConfig::make(std::move(atoms), n_it->get<int>());
}

AtomicConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError(path.string() + ": cannot open file");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
  return config_from_json(j);
}

std::string series_csv(const PowerSeries& s) {
  std::ostringstream out;
  out << "j,re,im\n";
  for (std::size_t j = 0; j <= s.order(); ++j) {
    out << j << ',' << num(s[j].real()) << ',' << num(s[j].imag()) << '\n';
  }
  return out.str();
}

std::string coefficients_csv(const AtomicConfig& cfg, std::size_t order) {
  const auto a = f_series(cfg, order);
  const auto b = g_series(cfg, order);
  const auto fg = fg_series(cfg, order);
  std::ostringstream out;
  out << "j,a_re,a_im,b_re,b_im,fg_re,fg_im\n";
  for (std::size_t j = 0; j <= order; ++j) {
    out << j << ',' << num(a[j].real()) << ',' << num(a[j].imag()) << ',' << num(b[j].real())
        << ',' << num(b[j].imag()) << ',' << num(fg[j].real()) << ',' << num(fg[j].imag()) << '\n';
  }
  return out.str();
}

std::string beta_table_csv(const std::vector<BetaSup>& rows) {
  std::ostringstream out;
  out << "j,t_star,sup_value,rooney_bound\n";
  for (const auto& r : rows) {
    out << r.j << ',' << num(r.t_star) << ',' << num(r.value) << ','
        << num(rooney_bound(r.j).value) << '\n';
  }
  return out.str();
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "N,best_value,grad_norm,starts\n";
  for (const auto& r : rows) {
    out << r.N << ',' << num(r.best_value) << ',' << num(r.grad_norm) << ',' << r.starts << '\n';
  }
  return out.str();
}

json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

json to_json(const ComplexPoly& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_json(c));
  return {{"coeffs", coeffs}};
}

ComplexPoly poly_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array()) {
    throw ValidationError("coeffs: expected array of [re, im] pairs");
  }
  std::vector<cplx> c;
  for (std::size_t i = 0; i < j["coeffs"].size(); ++i) {
    const auto& pair = j["coeffs"][i];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      throw ValidationError("coeffs[" + std::to_string(i) + "]: expected [re, im]");
    }
    c.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  if (c.empty()) throw ValidationError("coeffs: empty");
  return ComplexPoly(std::move(c));
}

json to_json(const FejerRieszResult& fr) {
  json roots = json::array();
  for (const auto& r : fr.roots) roots.push_back(to_json(r));
  return {{"scale", fr.scale}, {"roots", roots}, {"sup_error", fr.sup_error}};
}

json to_json(const StationarityReport& s) {
  json atoms = json::array();
  for (const auto& a : s.atoms) atoms.push_back({{"re_p", a.re_p}, {"im_alpha_dp", a.im_alpha_dp}});
  return {{"atoms", atoms}, {"max_residual", s.max_residual}};
}

json to_json(const std::vector<IdentityResidual>& residuals) {
  json out = json::array();
  for (const auto& r : residuals) {
    out.push_back({{"r", r.r},
                   {"kind", r.kind == IdentityKind::base ? "base" : "derivative"},
                   {"abs", std::abs(r.value)}});
  }
  return out;
}

json audit_json(const ErmersAudit& audit, const std::vector<VdcArc>& vdc, const LevelSetConstant& c) {
  auto arcs = [](const IntervalSet& s) {
    json out = json::array();
    for (const auto& a : s.arcs) out.push_back(json::array({a.a, a.b}));
    return out;
  };
  json v = json::array();
  for (const auto& a : vdc) {
    v.push_back({{"arc", json::array({a.arc.a, a.arc.b})}, {"integral", a.integral}, {"bound", a.bound}});
  }
  return {{"K1", arcs(audit.sets.k1)}, {"K2", arcs(audit.sets.k2)}, {"ermers_slack", audit.slack},
          {"vdc", v}, {"c", c.c}};
}

json invariants_json(const std::vector<double>& rotations, int orbit_count, const GcdCertificate& gcd,
                     const std::vector<bool>& conditions) {
  json cond = json::object();
  for (std::size_t i = 0; i < conditions.size(); ++i) cond[std::to_string(i + 1)] = bool(conditions[i]);
  return {{"rotations", rotations}, {"orbit_count", orbit_count}, {"gcd", gcd.gcd},
          {"gcd_consistent", gcd.consistent}, {"conditions", cond}};
}

json to_json(const RepZeroReport& rep) {
  json pts = json::array();
  for (const auto& p : rep.points) pts.push_back(to_json(p));
  return {{"points", pts},
          {"product_check", rep.product_check},
          {"a_n_formula", rep.a_n_formula},
          {"match", rep.match},
          {"sup_coeff_error", rep.sup_coeff_error},
          {"applicable", rep.applicable},
          {"note", rep.note}};
}

json to_json(const OptimizationResult& res) {
  return {{"n", res.config.n()},
          {"value", res.value},
          {"config", to_json(res.config)},
          {"grad_norm", res.grad_norm},
          {"stationarity", to_json(res.stationarity)},
          {"starts", res.starts_used},
          {"seed", res.seed},
          {"converged", res.converged},
          {"best_start", res.best_start},
          {"iterations", res.iterations}};
}

json RunManifest::to_json() const {
  return {{"command", command}, {"config", config_path}, {"parameters", parameters},
          {"seed", seed},       {"outputs", outputs},    {"version", version},
          {"timestamp", timestamp}};
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError(path.string() + ": cannot write file");
  out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::filesystem::path write_manifest(const std::filesystem::path& output, RunManifest manifest) {
  if (manifest.timestamp.empty()) {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    manifest.timestamp = buf;
  }
  auto path = output;
  path += ".manifest.json";
  write_text(path, dump(manifest.to_json()));
  return path;
}

}  // namespace krzyz::io
