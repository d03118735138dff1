#include "canderson/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "canderson/errors.hpp"

namespace canderson {

namespace {

constexpr double kWidth = 680, kHeight = 480;
constexpr double kLeft = 80, kRight = 170, kTop = 40, kBottom = 60;
constexpr double kPlotW = kWidth - kLeft - kRight, kPlotH = kHeight - kTop - kBottom;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

void reject_bad(const std::vector<std::size_t>& bad, const std::string& what) {
  if (bad.empty()) return;
  std::string list;
  for (std::size_t i = 0; i < bad.size() && i < 20; ++i)
    list += (i ? ", " : "") + std::to_string(bad[i]);
  if (bad.size() > 20) list += ", ...";
  throw InvalidInput(what + " at indices [" + list + "]");
}

// Viridis-like ramp on t in [0, 1].
std::string ramp(double t) {
  static constexpr std::array<std::array<double, 3>, 5> stops{{{68, 1, 84},
                                                               {59, 82, 139},
                                                               {33, 145, 140},
                                                               {94, 201, 98},
                                                               {253, 231, 37}}};
  t = std::clamp(t, 0.0, 1.0) * (stops.size() - 1);
  const auto i = std::min<std::size_t>(static_cast<std::size_t>(t), stops.size() - 2);
  const double f = t - static_cast<double>(i);
  char buf[8];
  int rgb[3];
  for (int c = 0; c < 3; ++c)
    rgb[c] = static_cast<int>(std::lround(stops[i][c] + f * (stops[i + 1][c] - stops[i][c])));
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", rgb[0], rgb[1], rgb[2]);
  return buf;
}

struct Axis {
  double lo = 0.0;
  double hi = 1.0;
  bool log = false;

  double to_pixel_x(double u) const { return kLeft + (u - lo) / (hi - lo) * kPlotW; }
  double to_pixel_y(double v) const { return kTop + kPlotH - (v - lo) / (hi - lo) * kPlotH; }
};

Axis fit_axis(double lo, double hi, bool log) {
  if (hi - lo <= 0.0) {
    lo -= log ? 0.5 : std::max(0.5, std::abs(lo) * 0.1);
    hi += log ? 0.5 : std::max(0.5, std::abs(hi) * 0.1);
  }
  const double pad = 0.05 * (hi - lo);
  return {lo - pad, hi + pad, log};
}

std::vector<double> ticks(const Axis& a) {
  std::vector<double> out;
  if (a.log) {
    for (double k = std::ceil(a.lo); k <= a.hi; k += 1.0) out.push_back(k);
    if (out.size() >= 2) return out;
  }
  const double raw = (a.hi - a.lo) / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double m : {1.0, 2.0, 5.0, 10.0})
    if (raw <= m * mag) {
      step = m * mag;
      break;
    }
  for (double t = std::ceil(a.lo / step) * step; t <= a.hi + 1e-12 * step; t += step)
    out.push_back(std::abs(t) < 1e-12 * step ? 0.0 : t);
  return out;
}

std::string tick_label(double t, bool log) {
  if (log && std::abs(t - std::round(t)) < 1e-9) return "1e" + fmt(std::round(t));
  return fmt(std::round(t * 1e6) / 1e6);
}

class Document {
 public:
  explicit Document(const std::string& title) {
    os_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\" "
        << "font-family=\"sans-serif\" font-size=\"12\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "<text class=\"title\" x=\"" << kLeft + kPlotW / 2 << "\" y=\"24\" "
        << "text-anchor=\"middle\" font-size=\"14\">" << escape(title) << "</text>\n";
  }

  void axes(const Axis& x, const Axis& y, const std::string& x_label,
            const std::string& y_label) {
    os_ << "<rect class=\"frame\" x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << kPlotW
        << "\" height=\"" << kPlotH << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (double t : ticks(x)) {
      const double px = x.to_pixel_x(t);
      os_ << "<line x1=\"" << fmt(px) << "\" y1=\"" << kTop + kPlotH << "\" x2=\"" << fmt(px)
          << "\" y2=\"" << kTop + kPlotH + 5 << "\" stroke=\"black\"/>"
          << "<text x=\"" << fmt(px) << "\" y=\"" << kTop + kPlotH + 18
          << "\" text-anchor=\"middle\">" << tick_label(t, x.log) << "</text>\n";
    }
    for (double t : ticks(y)) {
      const double py = y.to_pixel_y(t);
      os_ << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << fmt(py) << "\" x2=\"" << kLeft
          << "\" y2=\"" << fmt(py) << "\" stroke=\"black\"/>"
          << "<text x=\"" << kLeft - 8 << "\" y=\"" << fmt(py + 4)
          << "\" text-anchor=\"end\">" << tick_label(t, y.log) << "</text>\n";
    }
    os_ << "<text class=\"x-label\" x=\"" << kLeft + kPlotW / 2 << "\" y=\"" << kHeight - 15
        << "\" text-anchor=\"middle\">" << escape(x_label) << "</text>\n"
        << "<text class=\"y-label\" x=\"20\" y=\"" << kTop + kPlotH / 2
        << "\" text-anchor=\"middle\" transform=\"rotate(-90 20 " << kTop + kPlotH / 2 << ")\">"
        << escape(y_label) << "</text>\n";
  }

  // Opens the group in which coordinates are plot coordinates.
  void begin_data(const Axis& x, const Axis& y) {
    const double a = kPlotW / (x.hi - x.lo);
    const double d = -kPlotH / (y.hi - y.lo);
    const double e = kLeft - a * x.lo;
    const double f = kTop + kPlotH - d * y.lo;
    os_ << "<g class=\"data\" transform=\"matrix(" << fmt(a) << " 0 0 " << fmt(d) << ' '
        << fmt(e) << ' ' << fmt(f) << ")\">\n";
  }
  void end_group() { os_ << "</g>\n"; }

  std::ostream& raw() { return os_; }
  std::string finish() {
    os_ << "</svg>\n";
    return os_.str();
  }

 private:
  std::ostringstream os_;
};

std::string polyline(const std::vector<double>& u, const std::vector<double>& v) {
  std::string d;
  for (std::size_t i = 0; i < u.size(); ++i)
    d += (i ? " L " : "M ") + fmt(u[i]) + ' ' + fmt(v[i]);
  return d;
}

}  // namespace

std::string render_line_plot(std::span<const PlotSeries> series, const PlotStyle& style) {
  std::vector<std::size_t> bad;
  std::size_t flat = 0;
  double xlo = INFINITY, xhi = -INFINITY, ylo = INFINITY, yhi = -INFINITY;
  std::vector<std::vector<double>> us, vs;
  for (const auto& s : series) {
    if (s.x.size() != s.y.size()) throw InvalidInput("series '" + s.label + "': x/y length mismatch");
    std::vector<double> u, v;
    for (std::size_t i = 0; i < s.x.size(); ++i, ++flat) {
      const bool ok = std::isfinite(s.x[i]) && std::isfinite(s.y[i]) &&
                      (!style.log_x || s.x[i] > 0) && (!style.log_y || s.y[i] > 0);
      if (!ok) {
        bad.push_back(flat);
        continue;
      }
      u.push_back(style.log_x ? std::log10(s.x[i]) : s.x[i]);
      v.push_back(style.log_y ? std::log10(s.y[i]) : s.y[i]);
      xlo = std::min(xlo, u.back());
      xhi = std::max(xhi, u.back());
      ylo = std::min(ylo, v.back());
      yhi = std::max(yhi, v.back());
    }
    us.push_back(std::move(u));
    vs.push_back(std::move(v));
  }
  reject_bad(bad, "non-finite or non-positive plot values");
  if (!std::isfinite(xlo)) xlo = xhi = ylo = yhi = 0.0;

  const Axis x = fit_axis(xlo, xhi, style.log_x);
  const Axis y = fit_axis(ylo, yhi, style.log_y);
  Document doc(style.title);
  doc.axes(x, y, style.x_label, style.y_label);

  doc.begin_data(x, y);
  for (std::size_t k = 0; k < series.size(); ++k) {
    if (us[k].size() < 2) continue;
    doc.raw() << "<path class=\"series\" data-label=\"" << escape(series[k].label) << "\" d=\""
              << polyline(us[k], vs[k]) << "\" fill=\"none\" stroke=\"" << series[k].color
              << "\" stroke-width=\"2\" vector-effect=\"non-scaling-stroke\""
              << (series[k].dashed ? " stroke-dasharray=\"6 4\"" : "") << "/>\n";
  }
  doc.end_group();

  for (std::size_t k = 0; k < series.size(); ++k)
    for (std::size_t i = 0; i < us[k].size(); ++i)
      doc.raw() << "<circle cx=\"" << fmt(x.to_pixel_x(us[k][i])) << "\" cy=\""
                << fmt(y.to_pixel_y(vs[k][i])) << "\" r=\"3.5\" fill=\"" << series[k].color
                << "\"/>\n";

  for (std::size_t k = 0; k < series.size(); ++k) {
    const double ly = kTop + 10 + 20.0 * static_cast<double>(k);
    const double lx = kLeft + kPlotW + 15;
    doc.raw() << "<g class=\"legend\"><line x1=\"" << lx << "\" y1=\"" << ly << "\" x2=\""
              << lx + 20 << "\" y2=\"" << ly << "\" stroke=\"" << series[k].color
              << "\" stroke-width=\"2\"" << (series[k].dashed ? " stroke-dasharray=\"6 4\"" : "")
              << "/><text x=\"" << lx + 26 << "\" y=\"" << ly + 4 << "\">"
              << escape(series[k].label) << "</text></g>\n";
  }
  return doc.finish();
}

std::string render_xi_gamma_scatter(std::span<const StateMetrics> states,
                                    const std::string& title) {
  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i < states.size(); ++i)
    if (!std::isfinite(states[i].xi) || !std::isfinite(states[i].gamma)) bad.push_back(i);
  reject_bad(bad, "non-finite xi/gamma");

  const Axis x{0.0, 1.0, false};
  const Axis y{0.0, 1.0, false};
  Document doc(title);
  doc.axes(x, y, "purity gamma", "IPR xi");

  for (const auto& s : states)
    doc.raw() << "<circle cx=\"" << fmt(x.to_pixel_x(s.gamma)) << "\" cy=\""
              << fmt(y.to_pixel_y(s.xi)) << "\" r=\"2\" fill=\"" << ramp(s.gamma)
              << "\" fill-opacity=\"0.7\"/>\n";

  doc.begin_data(x, y);
  doc.raw() << "<path class=\"guide\" d=\"M 0 0 L 1 1\" fill=\"none\" stroke=\"#d62728\" "
               "stroke-width=\"1.5\" vector-effect=\"non-scaling-stroke\"/>\n";
  doc.end_group();

  const double lx = kLeft + kPlotW + 20;
  for (int i = 0; i < 50; ++i) {
    const double t = 1.0 - i / 49.0;
    doc.raw() << "<rect class=\"colorbar\" x=\"" << lx << "\" y=\"" << fmt(kTop + i * kPlotH / 50)
              << "\" width=\"16\" height=\"" << fmt(kPlotH / 50 + 0.5) << "\" fill=\"" << ramp(t)
              << "\"/>\n";
  }
  doc.raw() << "<text x=\"" << lx + 22 << "\" y=\"" << kTop + 10 << "\">gamma = 1</text>\n"
            << "<text x=\"" << lx + 22 << "\" y=\"" << kTop + kPlotH << "\">gamma = 0</text>\n"
            << "<g class=\"legend\"><line x1=\"" << lx << "\" y1=\"" << kTop + kPlotH + 30
            << "\" x2=\"" << lx + 20 << "\" y2=\"" << kTop + kPlotH + 30
            << "\" stroke=\"#d62728\"/><text x=\"" << lx + 26 << "\" y=\""
            << kTop + kPlotH + 34 << "\">xi = gamma</text></g>\n";
  return doc.finish();
}

std::string render_heatmap(const HeatmapData& data, const PlotStyle& style) {
  const std::size_t cols = data.x_edges.size() >= 1 ? data.x_edges.size() - 1 : 0;
  const std::size_t rows = data.y_edges.size() >= 1 ? data.y_edges.size() - 1 : 0;
  if (cols == 0 || rows == 0 || data.values.size() != rows * cols ||
      (!data.present.empty() && data.present.size() != rows * cols))
    throw InvalidInput("heatmap dimensions do not match edges");
  auto present = [&](std::size_t i) { return data.present.empty() || data.present[i]; };

  std::vector<std::size_t> bad;
  double lo = INFINITY, hi = -INFINITY;
  for (std::size_t i = 0; i < data.values.size(); ++i) {
    if (!present(i)) continue;
    if (!std::isfinite(data.values[i])) {
      bad.push_back(i);
      continue;
    }
    lo = std::min(lo, data.values[i]);
    hi = std::max(hi, data.values[i]);
  }
  reject_bad(bad, "non-finite heatmap values");
  for (const auto& edges : {data.x_edges, data.y_edges})
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (!std::isfinite(edges[i]) || (i && !(edges[i] > edges[i - 1])))
        throw InvalidInput("heatmap edges must be finite and increasing");

  const Axis x{data.x_edges.front(), data.x_edges.back(), false};
  const Axis y{data.y_edges.front(), data.y_edges.back(), false};
  Document doc(style.title);

  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      const std::size_t i = r * cols + c;
      const double x0 = x.to_pixel_x(data.x_edges[c]), x1 = x.to_pixel_x(data.x_edges[c + 1]);
      const double y0 = y.to_pixel_y(data.y_edges[r + 1]), y1 = y.to_pixel_y(data.y_edges[r]);
      const std::string fill =
          !present(i) ? "#eeeeee" : ramp(hi > lo ? (data.values[i] - lo) / (hi - lo) : 0.5);
      doc.raw() << "<rect class=\"cell\" x=\"" << fmt(x0) << "\" y=\"" << fmt(y0)
                << "\" width=\"" << fmt(x1 - x0) << "\" height=\"" << fmt(y1 - y0)
                << "\" fill=\"" << fill << "\"/>\n";
    }
  doc.axes(x, y, style.x_label, style.y_label);

  const double lx = kLeft + kPlotW + 20;
  for (int i = 0; i < 50; ++i)
    doc.raw() << "<rect class=\"colorbar\" x=\"" << lx << "\" y=\"" << fmt(kTop + i * kPlotH / 50)
              << "\" width=\"16\" height=\"" << fmt(kPlotH / 50 + 0.5) << "\" fill=\""
              << ramp(1.0 - i / 49.0) << "\"/>\n";
  if (std::isfinite(lo))
    doc.raw() << "<text x=\"" << lx + 22 << "\" y=\"" << kTop + 10 << "\">" << fmt(hi)
              << "</text>\n<text x=\"" << lx + 22 << "\" y=\"" << kTop + kPlotH << "\">"
              << fmt(lo) << "</text>\n";
  return doc.finish();
}

HeatmapData phase_heatmap(const PhaseGrid& grid) {
  HeatmapData h;
  const std::size_t cols = grid.lambdas.size();
  if (cols == 0 || grid.columns.size() != cols) throw InvalidInput("empty phase grid");
  // Lambda cells are centred on the grid values.
  for (std::size_t c = 0; c < cols; ++c) {
    const double left = c == 0 ? (cols > 1 ? grid.lambdas[0] - 0.5 * (grid.lambdas[1] - grid.lambdas[0])
                                           : grid.lambdas[0] - 0.5)
                               : 0.5 * (grid.lambdas[c - 1] + grid.lambdas[c]);
    h.x_edges.push_back(left);
  }
  h.x_edges.push_back(cols > 1 ? grid.lambdas[cols - 1] + 0.5 * (grid.lambdas[cols - 1] - grid.lambdas[cols - 2])
                               : grid.lambdas[0] + 0.5);
  const auto& bins = grid.columns.front().bins;
  for (const auto& b : bins) h.y_edges.push_back(b.lo);
  h.y_edges.push_back(bins.back().hi);

  for (std::size_t r = 0; r < bins.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      const auto& b = grid.columns[c].bins[r];
      h.values.push_back(b.mean_xi);
      h.present.push_back(b.reported);
    }
  return h;
}

}  // namespace canderson
