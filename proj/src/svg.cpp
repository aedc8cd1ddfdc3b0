#include "qfrenet/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace qfrenet {

namespace {

constexpr int kWidth = 720;
constexpr int kHeight = 420;
constexpr int kMargin = 50;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void include(double v) {
    if (std::isnan(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void pad() {
    if (!(lo <= hi)) { lo = 0.0; hi = 1.0; }
    if (hi - lo < 1e-12) { lo -= 0.5; hi += 0.5; }
  }
};

}  // namespace

std::string line_chart_svg(const std::string& title, const std::vector<Series>& series) {
  Range rx, ry;
  for (const Series& s : series) {
    for (double v : s.x) rx.include(v);
    for (double v : s.y) ry.include(v);
  }
  rx.pad();
  ry.pad();

  const auto px = [&](double v) {
    return kMargin + (v - rx.lo) / (rx.hi - rx.lo) * (kWidth - 2 * kMargin);
  };
  const auto py = [&](double v) {
    return kHeight - kMargin - (v - ry.lo) / (ry.hi - ry.lo) * (kHeight - 2 * kMargin);
  };

  std::string svg =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(kWidth) +
      "\" height=\"" + std::to_string(kHeight) + "\">\n"
      "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      "<text x=\"" + std::to_string(kWidth / 2) +
      "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\">" +
      escape(title) + "</text>\n"
      "<rect x=\"" + std::to_string(kMargin) + "\" y=\"" + std::to_string(kMargin) +
      "\" width=\"" + std::to_string(kWidth - 2 * kMargin) + "\" height=\"" +
      std::to_string(kHeight - 2 * kMargin) + "\" fill=\"none\" stroke=\"#888\"/>\n";

  // Axis extremes as tick labels.
  svg += "<text x=\"" + std::to_string(kMargin) + "\" y=\"" +
         std::to_string(kHeight - kMargin + 18) +
         "\" font-family=\"sans-serif\" font-size=\"11\">" + num(rx.lo) + "</text>\n";
  svg += "<text x=\"" + std::to_string(kWidth - kMargin) + "\" y=\"" +
         std::to_string(kHeight - kMargin + 18) +
         "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
         num(rx.hi) + "</text>\n";
  svg += "<text x=\"" + std::to_string(kMargin - 4) + "\" y=\"" +
         std::to_string(kHeight - kMargin) +
         "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
         num(ry.lo) + "</text>\n";
  svg += "<text x=\"" + std::to_string(kMargin - 4) + "\" y=\"" +
         std::to_string(kMargin + 4) +
         "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
         num(ry.hi) + "</text>\n";

  int legend_y = kMargin + 16;
  for (const Series& s : series) {
    std::string points;
    bool open = false;
    const std::size_t n = std::min(s.x.size(), s.y.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (std::isnan(s.x[i]) || std::isnan(s.y[i])) {
        if (open) { svg += "<polyline fill=\"none\" stroke=\"" + s.color +
                           "\" stroke-width=\"1.2\" points=\"" + points + "\"/>\n"; }
        points.clear();
        open = false;
        continue;
      }
      points += num(px(s.x[i])) + "," + num(py(s.y[i])) + " ";
      open = true;
    }
    if (open)
      svg += "<polyline fill=\"none\" stroke=\"" + s.color +
             "\" stroke-width=\"1.2\" points=\"" + points + "\"/>\n";
    svg += "<text x=\"" + std::to_string(kWidth - kMargin - 6) + "\" y=\"" +
           std::to_string(legend_y) + "\" text-anchor=\"end\" fill=\"" + s.color +
           "\" font-family=\"sans-serif\" font-size=\"12\">" + escape(s.name) +
           "</text>\n";
    legend_y += 16;
  }
  svg += "</svg>\n";
  return svg;
}

std::string bloch_orbit_svg(const std::string& title, const std::vector<Vec3>& orbit) {
  const int size = 480;
  const double c = size / 2.0;
  const double r = size / 2.0 - 30.0;
  // Orthographic view along +y: screen x = a_x, screen y = -a_z.
  const auto px = [&](const Vec3& a) { return c + r * a.x(); };
  const auto py = [&](const Vec3& a) { return c - r * a.z(); };

  std::string svg =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(size) +
      "\" height=\"" + std::to_string(size) + "\">\n"
      "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      "<text x=\"" + std::to_string(size / 2) +
      "\" y=\"20\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" +
      escape(title) + "</text>\n"
      "<circle cx=\"" + num(c) + "\" cy=\"" + num(c) + "\" r=\"" + num(r) +
      "\" fill=\"none\" stroke=\"#888\"/>\n"
      "<line x1=\"" + num(c - r) + "\" y1=\"" + num(c) + "\" x2=\"" + num(c + r) +
      "\" y2=\"" + num(c) + "\" stroke=\"#ddd\"/>\n"
      "<line x1=\"" + num(c) + "\" y1=\"" + num(c - r) + "\" x2=\"" + num(c) +
      "\" y2=\"" + num(c + r) + "\" stroke=\"#ddd\"/>\n";

  std::string points;
  for (const Vec3& a : orbit) points += num(px(a)) + "," + num(py(a)) + " ";
  svg += "<polyline fill=\"none\" stroke=\"#1660a8\" stroke-width=\"1.0\" points=\"" +
         points + "\"/>\n";
  if (!orbit.empty()) {
    svg += "<circle cx=\"" + num(px(orbit.front())) + "\" cy=\"" + num(py(orbit.front())) +
           "\" r=\"4\" fill=\"#18871b\"/>\n";
    svg += "<circle cx=\"" + num(px(orbit.back())) + "\" cy=\"" + num(py(orbit.back())) +
           "\" r=\"4\" fill=\"#c0392b\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace qfrenet
