#include "indzero/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace indzero::cli {

namespace {

struct Style {
  const char* stroke;
  const char* fill;
  const char* dash;
  const char* label;
};

Style style_for(RegionKind kind) {
  switch (kind) {
  case RegionKind::Shearer:
    return {"#000000", "none", "", "Shearer disk |lambda| = lambda*"};
  case RegionKind::Cardioid:
    return {"#1f5fbf", "none", "6 3", "cardioid U_d"};
  case RegionKind::Critical:
    return {"#d62728", "#d62728", "", "critical vicinity of -lambda*"};
  case RegionKind::Lhp:
    return {"#2ca02c", "#2ca02c", "", "left half-plane region"};
  case RegionKind::Rhp:
    return {"#ff7f0e", "#ff7f0e", "", "right half-plane region"};
  }
  return {"#000000", "none", "", ""};
}

std::string px(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char ch : s) {
    switch (ch) {
    case '&':
      out += "&amp;";
      break;
    case '<':
      out += "&lt;";
      break;
    case '>':
      out += "&gt;";
      break;
    default:
      out += ch;
    }
  }
  return out;
}

struct Bounds {
  double x0 = 0.0;
  double x1 = 0.0;
  double y0 = 0.0;
  double y1 = 0.0;

  void include(ComplexPoint z) {
    x0 = std::min(x0, z.real());
    x1 = std::max(x1, z.real());
    y0 = std::min(y0, z.imag());
    y1 = std::max(y1, z.imag());
  }

  void pad(double frac) {
    const double dx = (x1 - x0) * frac;
    const double dy = (y1 - y0) * frac;
    x0 -= dx;
    x1 += dx;
    y0 -= dy;
    y1 += dy;
  }
};

/// Rectangle on the page showing a window of the complex plane at equal scale.
struct Panel {
  double left = 0.0;
  double top = 0.0;
  double width = 0.0;
  double height = 0.0;
  Bounds world;

  double scale() const { return width / (world.x1 - world.x0); }
  double x(double re) const { return left + (re - world.x0) * scale(); }
  double y(double im) const { return top + (world.y1 - im) * scale(); }
};

Panel fit_panel(const Bounds& world, double left, double top, double width, double max_height) {
  Panel p;
  p.left = left;
  p.top = top;
  p.world = world;
  const double xr = world.x1 - world.x0;
  const double yr = world.y1 - world.y0;
  p.width = width;
  p.height = width * yr / xr;
  if (p.height > max_height) {
    p.height = max_height;
    p.width = max_height * xr / yr;
  }
  return p;
}

std::string path_data(const Panel& p, const std::vector<ComplexPoint>& pts, bool close) {
  std::string d;
  d.reserve(pts.size() * 20);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    d += i == 0 ? "M" : " L";
    d += px(p.x(pts[i].real()));
    d += ' ';
    d += px(p.y(pts[i].imag()));
  }
  if (close) {
    d += " Z";
  }
  return d;
}

void draw_region(std::ostream& os, const Panel& p, const RegionBoundary& b) {
  const Style st = style_for(b.kind);
  os << "<path data-kind=\"" << to_string(b.kind) << "\" d=\"" << path_data(p, b.outline(), true)
     << "\" stroke=\"" << st.stroke << "\" stroke-width=\"1.5\" fill=\"" << st.fill << '"';
  if (std::string(st.fill) != "none") {
    os << " fill-opacity=\"0.25\" fill-rule=\"evenodd\"";
  }
  if (*st.dash != '\0') {
    os << " stroke-dasharray=\"" << st.dash << '"';
  }
  os << "/>\n";
}

void draw_axes(std::ostream& os, const Panel& p) {
  const auto& w = p.world;
  if (w.y0 <= 0.0 && w.y1 >= 0.0) {
    os << "<line class=\"axis\" x1=\"" << px(p.x(w.x0)) << "\" y1=\"" << px(p.y(0.0)) << "\" x2=\"" << px(p.x(w.x1))
       << "\" y2=\"" << px(p.y(0.0)) << "\" stroke=\"#999999\" stroke-width=\"0.75\"/>\n";
  }
  if (w.x0 <= 0.0 && w.x1 >= 0.0) {
    os << "<line class=\"axis\" x1=\"" << px(p.x(0.0)) << "\" y1=\"" << px(p.y(w.y0)) << "\" x2=\"" << px(p.x(0.0))
       << "\" y2=\"" << px(p.y(w.y1)) << "\" stroke=\"#999999\" stroke-width=\"0.75\"/>\n";
  }
}

std::vector<SvgMarker> imaginary_markers(int d) {
  const double t = std::tan(kPi / (2.0 * d));
  return {{{0.0, t}, "i tan(pi/(2d))"}, {{0.0, -t}, "-i tan(pi/(2d))"}};
}

void draw_markers(std::ostream& os, const Panel& p, const std::vector<SvgMarker>& markers) {
  for (const auto& m : markers) {
    os << "<circle class=\"marker\" data-re=\"" << num17(m.point.real()) << "\" data-im=\"" << num17(m.point.imag())
       << "\" cx=\"" << px(p.x(m.point.real())) << "\" cy=\"" << px(p.y(m.point.imag()))
       << "\" r=\"3.5\" fill=\"#000000\"><title>" << m.label << "</title></circle>\n";
  }
}

void draw_legend(std::ostream& os, double left, double top, std::span<const RegionKind> kinds) {
  os << "<g class=\"legend\" font-family=\"sans-serif\" font-size=\"12\">\n";
  double y = top;
  for (auto kind : kinds) {
    const Style st = style_for(kind);
    os << "<line x1=\"" << px(left) << "\" y1=\"" << px(y - 4) << "\" x2=\"" << px(left + 24) << "\" y2=\""
       << px(y - 4) << "\" stroke=\"" << st.stroke << "\" stroke-width=\"2\"";
    if (*st.dash != '\0') {
      os << " stroke-dasharray=\"" << st.dash << '"';
    }
    os << "/>\n<text x=\"" << px(left + 30) << "\" y=\"" << px(y) << "\">" << xml_escape(st.label) << "</text>\n";
    y += 16;
  }
  os << "<circle cx=\"" << px(left + 12) << "\" cy=\"" << px(y - 4) << "\" r=\"3.5\" fill=\"#000000\"/>\n"
     << "<text x=\"" << px(left + 30) << "\" y=\"" << px(y) << "\">+-i tan(pi/(2d))</text>\n</g>\n";
}

std::vector<RegionBoundary> boundaries(int d, std::span<const RegionKind> kinds, int samples) {
  std::vector<RegionBoundary> out;
  for (auto kind : kinds) {
    out.push_back(boundary_polyline(d, kind, samples));
  }
  return out;
}

Bounds bounds_of(const std::vector<RegionBoundary>& curves, const std::vector<SvgMarker>& markers) {
  Bounds b;
  for (const auto& c : curves) {
    for (const auto& z : c.outline()) {
      b.include(z);
    }
  }
  for (const auto& m : markers) {
    b.include(m.point);
  }
  b.pad(0.05);
  return b;
}

void open_svg(std::ostream& os, double width, double height, const nlohmann::json& config, const std::string& title) {
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << px(width) << "\" height=\""
     << px(height) << "\" viewBox=\"0 0 " << px(width) << ' ' << px(height) << "\">\n"
     << "<metadata>" << xml_escape(config.dump()) << "</metadata>\n"
     << "<title>" << xml_escape(title) << "</title>\n"
     << "<rect x=\"0\" y=\"0\" width=\"" << px(width) << "\" height=\"" << px(height) << "\" fill=\"#ffffff\"/>\n";
}

std::vector<RegionKind> with_shearer(std::span<const RegionKind> kinds) {
  std::vector<RegionKind> out(kinds.begin(), kinds.end());
  if (std::find(out.begin(), out.end(), RegionKind::Shearer) == out.end()) {
    out.insert(out.begin(), RegionKind::Shearer);
  }
  return out;
}

} // namespace

std::string render_regions_svg(int d, std::span<const RegionKind> kinds, int samples, const nlohmann::json& config) {
  const auto drawn = with_shearer(kinds);
  const auto curves = boundaries(d, drawn, samples);
  const auto markers = imaginary_markers(d);
  const Panel panel = fit_panel(bounds_of(curves, markers), 20.0, 40.0, 760.0, 760.0);
  const double legend_top = panel.top + panel.height + 24.0;
  const double height = legend_top + 16.0 * (static_cast<double>(drawn.size()) + 1.0) + 8.0;

  std::ostringstream os;
  open_svg(os, 800.0, height, config, "zero-free regions, d = " + std::to_string(d));
  os << "<text x=\"20\" y=\"24\" font-family=\"sans-serif\" font-size=\"14\">d = " << d << "</text>\n";
  os << "<g id=\"main\">\n";
  draw_axes(os, panel);
  for (const auto& c : curves) {
    draw_region(os, panel, c);
  }
  draw_markers(os, panel, markers);
  os << "</g>\n";
  draw_legend(os, 20.0, legend_top, drawn);
  os << "</svg>\n";
  return os.str();
}

std::string render_atlas_svg(int d, int samples, const nlohmann::json& config) {
  const std::vector<RegionKind> drawn(std::begin(kAllRegionKinds), std::end(kAllRegionKinds));
  const auto curves = boundaries(d, drawn, samples);
  const auto markers = imaginary_markers(d);
  const Panel main = fit_panel(bounds_of(curves, markers), 20.0, 40.0, 560.0, 560.0);

  const double ls = shearer_radius(d);
  Bounds zoom;
  zoom.x0 = -1.8 * ls;
  zoom.x1 = -0.7 * ls;
  zoom.y0 = -0.55 * ls;
  zoom.y1 = 0.55 * ls;
  const Panel inset = fit_panel(zoom, 600.0, 40.0, 280.0, 280.0);

  const double legend_top = std::max(main.top + main.height, inset.top + inset.height) + 24.0;
  const double height = legend_top + 16.0 * (static_cast<double>(drawn.size()) + 1.0) + 8.0;

  std::ostringstream os;
  open_svg(os, 900.0, height, config, "zero-free regions atlas, d = " + std::to_string(d));
  os << "<text x=\"20\" y=\"24\" font-family=\"sans-serif\" font-size=\"14\">d = " << d
     << "</text>\n<text x=\"600\" y=\"24\" font-family=\"sans-serif\" font-size=\"12\">near -lambda* = "
     << num17(-ls) << "</text>\n";
  os << "<defs><clipPath id=\"inset-clip\"><rect x=\"" << px(inset.left) << "\" y=\"" << px(inset.top)
     << "\" width=\"" << px(inset.width) << "\" height=\"" << px(inset.height) << "\"/></clipPath></defs>\n";

  os << "<g id=\"main\">\n";
  draw_axes(os, main);
  for (const auto& c : curves) {
    draw_region(os, main, c);
  }
  draw_markers(os, main, markers);
  os << "<rect class=\"zoom-box\" x=\"" << px(main.x(zoom.x0)) << "\" y=\"" << px(main.y(zoom.y1)) << "\" width=\""
     << px((zoom.x1 - zoom.x0) * main.scale()) << "\" height=\"" << px((zoom.y1 - zoom.y0) * main.scale())
     << "\" fill=\"none\" stroke=\"#555555\" stroke-dasharray=\"2 2\"/>\n";
  os << "</g>\n";

  os << "<g id=\"inset\" clip-path=\"url(#inset-clip)\">\n";
  draw_axes(os, inset);
  for (const auto& c : curves) {
    if (c.kind == RegionKind::Shearer || c.kind == RegionKind::Cardioid || c.kind == RegionKind::Critical) {
      draw_region(os, inset, c);
    }
  }
  os << "</g>\n<rect x=\"" << px(inset.left) << "\" y=\"" << px(inset.top) << "\" width=\"" << px(inset.width)
     << "\" height=\"" << px(inset.height) << "\" fill=\"none\" stroke=\"#555555\"/>\n";
  draw_legend(os, 20.0, legend_top, drawn);
  os << "</svg>\n";
  return os.str();
}

std::string render_scan_svg(int d, int res, std::span<const ScanPixel> cells, double cell_w, double cell_h,
                            const nlohmann::json& config) {
  static constexpr const char* kPalette[] = {"#fde725", "#b5de2b", "#6ece58", "#35b779", "#1f9e89",
                                             "#26828e", "#31688e", "#3e4989", "#482878", "#440154"};
  Bounds world;
  if (!cells.empty()) {
    world.x0 = world.x1 = cells.front().re;
    world.y0 = world.y1 = cells.front().im;
  }
  for (const auto& c : cells) {
    world.include({c.re - 0.5 * cell_w, c.im - 0.5 * cell_h});
    world.include({c.re + 0.5 * cell_w, c.im + 0.5 * cell_h});
  }
  const Panel panel = fit_panel(world, 20.0, 40.0, 760.0, 760.0);
  const double height = panel.top + panel.height + 60.0;

  std::ostringstream os;
  open_svg(os, 800.0, height, config, "certification scan, d = " + std::to_string(d));
  os << "<text x=\"20\" y=\"24\" font-family=\"sans-serif\" font-size=\"14\">d = " << d << ", " << res << " x "
     << res << " cells, colour = ceil(tau*)</text>\n<g id=\"cells\" shape-rendering=\"crispEdges\">\n";
  const double w = cell_w * panel.scale();
  const double h = cell_h * panel.scale();
  for (const auto& c : cells) {
    const char* fill = "#dddddd";
    if (c.status == "Certified") {
      const auto idx = static_cast<std::size_t>(std::clamp<long long>(c.ceil_tau - 1, 0, 9));
      fill = kPalette[idx];
    } else if (c.status == "Refuted") {
      fill = "#333333";
    }
    os << "<rect class=\"cell\" x=\"" << px(panel.x(c.re - 0.5 * cell_w)) << "\" y=\"" << px(panel.y(c.im + 0.5 * cell_h))
       << "\" width=\"" << px(w) << "\" height=\"" << px(h) << "\" fill=\"" << fill << "\"/>\n";
  }
  os << "</g>\n<g clip-path=\"none\">\n";
  const auto shearer = boundary_polyline(d, RegionKind::Shearer, 256);
  draw_region(os, panel, shearer);
  os << "</g>\n<text x=\"20\" y=\"" << px(height - 20.0)
     << "\" font-family=\"sans-serif\" font-size=\"12\">grey: inconclusive, dark: refuted</text>\n</svg>\n";
  return os.str();
}

} // namespace indzero::cli
