#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "commands.hpp"
#include "krzyz/io.hpp"

namespace krzyz::cli {
namespace {

constexpr int kWidth = 800;
constexpr int kHeight = 500;
constexpr int kMargin = 40;
constexpr std::size_t kSamples = 2048;
constexpr double kClip = 20.0;

struct Frame {
  double y_max;
  [[nodiscard]] double x(double theta) const { return kMargin + theta / kTwoPi * (kWidth - 2 * kMargin); }
  [[nodiscard]] double y(double v) const {
    const double c = std::clamp(v, -y_max, y_max);
    return kHeight / 2.0 - c / y_max * (kHeight / 2.0 - kMargin);
  }
};

std::string pt(double x, double y) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.2f,%.2f", x, y);
  return buf;
}

class Svg {
public:
  explicit Svg(const std::string& title) {
    out_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
         << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n"
         << "<title>" << title << "</title>\n"
         << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
         << "<line class=\"axis\" x1=\"" << kMargin << "\" y1=\"" << kHeight / 2 << "\" x2=\""
         << kWidth - kMargin << "\" y2=\"" << kHeight / 2 << "\" stroke=\"#888\"/>\n";
  }
  void polyline(const std::vector<std::string>& pts) {
    if (pts.size() < 2) return;
    out_ << "<polyline class=\"curve\" fill=\"none\" stroke=\"#1f5fa8\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) out_ << (i ? " " : "") << pts[i];
    out_ << "\"/>\n";
  }
  void asymptote(double x) {
    out_ << "<line class=\"asymptote\" x1=\"" << x << "\" y1=\"" << kMargin << "\" x2=\"" << x
         << "\" y2=\"" << kHeight - kMargin << "\" stroke=\"#c33\" stroke-dasharray=\"4 4\"/>\n";
  }
  void zero(double x, double y) {
    out_ << "<circle class=\"zero\" cx=\"" << x << "\" cy=\"" << y << "\" r=\"4\" fill=\"#2a2\"/>\n";
  }
  std::string finish() {
    out_ << "</svg>\n";
    return out_.str();
  }

private:
  std::ostringstream out_;
};

std::string plot_phi(const AtomicConfig& cfg) {
  const PhaseFunction phase(cfg);
  const Frame fr{kClip};
  Svg svg("phi");
  // One polyline per gap so the curve never jumps across a pole.
  for (std::size_t g = 0; g < phase.gap_count(); ++g) {
    const double a = phase.gap_start(g);
    const double len = phase.gap_length(g);
    std::vector<std::string> pts;
    const auto m = std::max<std::size_t>(8, static_cast<std::size_t>(kSamples * len / kTwoPi));
    double prev = -1.0;
    for (std::size_t i = 1; i < m; ++i) {
      const double th = a + len * static_cast<double>(i) / static_cast<double>(m);
      const double wrapped = wrap_angle(th);
      if (wrapped < prev) {  // the gap crosses 2pi: continue from the left edge
        svg.polyline(pts);
        pts.clear();
      }
      prev = wrapped;
      pts.push_back(pt(fr.x(wrapped), fr.y(phase.phi_raw(th))));
    }
    svg.polyline(pts);
  }
  for (const auto& atom : cfg.atoms()) svg.asymptote(fr.x(atom.theta));
  for (const double z : phi_zeros(cfg)) svg.zero(fr.x(wrap_angle(z)), fr.y(0.0));
  return svg.finish();
}

std::string plot_re_p(const AtomicConfig& cfg) {
  const auto P = build_P(cfg);
  std::vector<double> v(kSamples);
  double vmax = 0.0;
  for (std::size_t i = 0; i < kSamples; ++i) {
    v[i] = P(std::polar(1.0, kTwoPi * static_cast<double>(i) / kSamples)).real();
    vmax = std::max(vmax, std::abs(v[i]));
  }
  const Frame fr{vmax > 0.0 ? 1.1 * vmax : 1.0};
  Svg svg("reP");
  std::vector<std::string> pts;
  for (std::size_t i = 0; i < kSamples; ++i) pts.push_back(pt(fr.x(kTwoPi * i / kSamples), fr.y(v[i])));
  svg.polyline(pts);

  // Zeros: sign changes, and touching zeros where |v| has a tiny local minimum.
  const double touch = 1e-3 * vmax;
  std::vector<double> zeros;
  for (std::size_t i = 0; i < kSamples; ++i) {
    const std::size_t k = (i + 1) % kSamples;
    const std::size_t h = (i + kSamples - 1) % kSamples;
    const double th = kTwoPi * i / kSamples;
    if ((v[i] < 0.0) != (v[k] < 0.0) && v[k] != 0.0 && v[i] != 0.0) {
      zeros.push_back(th + v[i] / (v[i] - v[k]) * kTwoPi / kSamples);
    } else if (std::abs(v[i]) <= touch && std::abs(v[i]) <= std::abs(v[h]) &&
               std::abs(v[i]) <= std::abs(v[k])) {
      zeros.push_back(th);
    }
  }
  // Flat minima can flag neighbouring samples; keep one marker per cluster.
  const double min_sep = 4.0 * kTwoPi / kSamples;
  std::vector<double> kept;
  for (const double z : zeros) {
    const bool near_prev = !kept.empty() && z - kept.back() < min_sep;
    const bool near_first = !kept.empty() && kept.front() + kTwoPi - z < min_sep;
    if (!near_prev && !near_first) kept.push_back(z);
  }
  for (const double z : kept) svg.zero(fr.x(z), fr.y(0.0));
  return svg.finish();
}

}  // namespace

int cmd_plot(const Common& c, const std::string& what, const std::string& svg_path) {
  const auto cfg = normalize_rotation(io::load_config(c.config)).config;
  const std::string text = what == "phi" ? plot_phi(cfg) : plot_re_p(cfg);
  io::write_text(svg_path, text);
  io::RunManifest m;
  m.command = "plot";
  m.config_path = c.config;
  m.parameters = {{"what", what}};
  m.outputs = {svg_path};
  io::write_manifest(svg_path, m);
  return kOk;
}

}  // namespace krzyz::cli
