#include "nf/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace nf {

namespace {

constexpr double kWidth = 640, kHeight = 480;
constexpr double kLeft = 70, kRight = 20, kTop = 40, kBottom = 50;

const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                         "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace

void write_loglog_svg(const std::string& path, const std::string& title,
                      const std::string& xlabel, const std::string& ylabel,
                      const std::vector<PlotSeries>& series) {
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const auto& s : series)
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (s.x[i] <= 0 || s.y[i] <= 0) continue;
      xmin = std::min(xmin, s.x[i]);
      xmax = std::max(xmax, s.x[i]);
      ymin = std::min(ymin, s.y[i]);
      ymax = std::max(ymax, s.y[i]);
    }
  if (!(xmin < xmax)) xmax = xmin * 10;
  if (!(std::isfinite(xmin) && std::isfinite(ymin)))
    throw std::runtime_error("svg plot: no positive data");
  if (!(ymin < ymax)) ymax = ymin * 10;
  double lx0 = std::log10(xmin), lx1 = std::log10(xmax);
  double ly0 = std::log10(ymin), ly1 = std::log10(ymax);
  lx0 -= 0.05 * (lx1 - lx0 + 1e-12);
  lx1 += 0.05 * (lx1 - lx0);
  ly0 -= 0.05 * (ly1 - ly0 + 1e-12);
  ly1 += 0.05 * (ly1 - ly0);

  auto px = [&](double x) {
    return kLeft + (std::log10(x) - lx0) / (lx1 - lx0) * (kWidth - kLeft - kRight);
  };
  auto py = [&](double y) {
    return kHeight - kBottom -
           (std::log10(y) - ly0) / (ly1 - ly0) * (kHeight - kTop - kBottom);
  };

  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
    << "\" height=\"" << kHeight << "\">\n";
  f << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  f << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" "
       "font-size=\"16\">" << title << "</text>\n";

  // decade ticks and gridlines
  for (int e = int(std::floor(lx0)); e <= int(std::ceil(lx1)); ++e) {
    double x = std::pow(10.0, e);
    if (std::log10(x) < lx0 || std::log10(x) > lx1) continue;
    f << "<line x1=\"" << px(x) << "\" y1=\"" << kTop << "\" x2=\"" << px(x)
      << "\" y2=\"" << kHeight - kBottom << "\" stroke=\"#dddddd\"/>\n";
    f << "<text x=\"" << px(x) << "\" y=\"" << kHeight - kBottom + 18
      << "\" text-anchor=\"middle\" font-size=\"11\">1e" << e << "</text>\n";
  }
  for (int e = int(std::floor(ly0)); e <= int(std::ceil(ly1)); ++e) {
    double y = std::pow(10.0, e);
    if (std::log10(y) < ly0 || std::log10(y) > ly1) continue;
    f << "<line x1=\"" << kLeft << "\" y1=\"" << py(y) << "\" x2=\""
      << kWidth - kRight << "\" y2=\"" << py(y) << "\" stroke=\"#dddddd\"/>\n";
    f << "<text x=\"" << kLeft - 6 << "\" y=\"" << py(y) + 4
      << "\" text-anchor=\"end\" font-size=\"11\">1e" << e << "</text>\n";
  }
  f << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\""
    << kWidth - kLeft - kRight << "\" height=\"" << kHeight - kTop - kBottom
    << "\" fill=\"none\" stroke=\"black\"/>\n";
  f << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 12
    << "\" text-anchor=\"middle\" font-size=\"13\">" << xlabel << "</text>\n";
  f << "<text x=\"16\" y=\"" << kHeight / 2
    << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 16 "
    << kHeight / 2 << ")\">" << ylabel << "</text>\n";

  for (std::size_t si = 0; si < series.size(); ++si) {
    const auto& s = series[si];
    const char* color = kColors[si % 8];
    f << "<polyline fill=\"none\" stroke=\"" << color
      << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (s.x[i] <= 0 || s.y[i] <= 0) continue;
      f << num(px(s.x[i])) << "," << num(py(s.y[i])) << " ";
    }
    f << "\"/>\n";
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (s.x[i] <= 0 || s.y[i] <= 0) continue;
      f << "<circle cx=\"" << num(px(s.x[i])) << "\" cy=\"" << num(py(s.y[i]))
        << "\" r=\"3\" fill=\"" << color << "\"/>\n";
    }
    f << "<text x=\"" << kWidth - kRight - 8 << "\" y=\""
      << kTop + 16 + 16 * double(si) << "\" text-anchor=\"end\" font-size=\"12\" fill=\""
      << color << "\">" << s.name << "</text>\n";
  }
  f << "</svg>\n";
}

}  // namespace nf
