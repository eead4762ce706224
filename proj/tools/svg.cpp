#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "cli.hpp"

namespace mukaistab::cli {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 400.0;
constexpr double kMargin = 40.0;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

struct Viewport {
  double x_min, x_max, y_max, scale;

  double px(double x) const { return kMargin + (x - x_min) * scale; }
  double py(double y) const { return kHeight - kMargin - y * scale; }
};

Viewport fit(double x_mid, double half_width, double y_max) {
  const double inner_w = kWidth - 2 * kMargin;
  const double inner_h = kHeight - 2 * kMargin;
  const double scale = std::min(inner_w / (2 * half_width), inner_h / y_max);
  const double hw = inner_w / scale / 2;
  return {x_mid - hw, x_mid + hw, inner_h / scale, scale};
}

}  // namespace

std::string render_wall_svg(const Wall& wall, const SurfaceContext& ctx) {
  const double horizon = 1.0 / std::sqrt(static_cast<double>(ctx.d()));
  double x_mid = 0.0;
  double half_width = std::max(1.0, 2.0 * horizon);
  double y_top = 2.0 * horizon;
  double radius = 0.0;

  if (wall.kind == WallKind::Circle) {
    x_mid = to_double(*wall.center_x);
    radius = std::sqrt(to_double(*wall.radius_sq));
    half_width = std::max(1.25 * radius, half_width);
    y_top = std::max(1.25 * radius, y_top);
  } else if (wall.kind == WallKind::VerticalLine) {
    x_mid = to_double(*wall.x0);
  }
  const Viewport vp = fit(x_mid, half_width, y_top);

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n"
      << "  <defs><clipPath id=\"upper\"><rect x=\"" << num(kMargin) << "\" y=\"" << num(kMargin)
      << "\" width=\"" << num(kWidth - 2 * kMargin) << "\" height=\"" << num(kHeight - 2 * kMargin)
      << "\"/></clipPath></defs>\n"
      << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Axes: the boundary y = 0 and the line x = 0 when visible.
  svg << "  <line x1=\"" << num(vp.px(vp.x_min)) << "\" y1=\"" << num(vp.py(0)) << "\" x2=\""
      << num(vp.px(vp.x_max)) << "\" y2=\"" << num(vp.py(0)) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  if (vp.x_min < 0 && vp.x_max > 0) {
    svg << "  <line x1=\"" << num(vp.px(0)) << "\" y1=\"" << num(vp.py(0)) << "\" x2=\"" << num(vp.px(0))
        << "\" y2=\"" << num(vp.py(vp.y_max)) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  }

  switch (wall.kind) {
    case WallKind::Circle: {
      // Inside the circle N has the sign of -w.
      const char* fill = wall.w > 0 ? "#f4c7c3" : "#c6dbef";
      svg << "  <circle cx=\"" << num(vp.px(x_mid)) << "\" cy=\"" << num(vp.py(0)) << "\" r=\""
          << num(radius * vp.scale) << "\" fill=\"" << fill << "\" stroke=\"#b2182b\" stroke-width=\"2\""
          << " clip-path=\"url(#upper)\"/>\n";
      svg << "  <text x=\"" << num(vp.px(x_mid)) << "\" y=\"" << num(vp.py(radius * 0.5))
          << "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">"
          << (wall.w > 0 ? "N &lt; 0" : "N &gt; 0") << "</text>\n";
      break;
    }
    case WallKind::VerticalLine:
      svg << "  <line x1=\"" << num(vp.px(x_mid)) << "\" y1=\"" << num(vp.py(0)) << "\" x2=\""
          << num(vp.px(x_mid)) << "\" y2=\"" << num(vp.py(vp.y_max))
          << "\" stroke=\"#b2182b\" stroke-width=\"2\"/>\n";
      break;
    case WallKind::Empty:
    case WallKind::Everywhere:
      svg << "  <text x=\"" << num(kWidth / 2) << "\" y=\"" << num(kMargin + 20)
          << "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">wall: "
          << to_string(wall.kind) << "</text>\n";
      break;
  }

  // omega^2 = 2 horizon.
  svg << "  <line x1=\"" << num(vp.px(vp.x_min)) << "\" y1=\"" << num(vp.py(horizon)) << "\" x2=\""
      << num(vp.px(vp.x_max)) << "\" y2=\"" << num(vp.py(horizon))
      << "\" stroke=\"#2166ac\" stroke-width=\"1.5\" stroke-dasharray=\"6,4\"/>\n"
      << "  <text x=\"" << num(vp.px(vp.x_max) - 4) << "\" y=\"" << num(vp.py(horizon) - 6)
      << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"end\">&#969;&#178; = 2</text>\n"
      << "  <text x=\"" << num(vp.px(vp.x_max) - 4) << "\" y=\"" << num(vp.py(0) + 16)
      << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"end\">x</text>\n"
      << "  <text x=\"" << num(kMargin + 4) << "\" y=\"" << num(kMargin - 8)
      << "\" font-family=\"sans-serif\" font-size=\"12\">y (d = " << ctx.d() << ")</text>\n"
      << "</svg>\n";
  return svg.str();
}

}  // namespace mukaistab::cli
