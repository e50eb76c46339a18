#include "csitq/figures.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace csitq {

void write_ratio_csv(std::ostream& out, const RatioCurve& curve) {
  out << "p,classical,ea_rate,ratio\r\n";
  out << std::setprecision(17);
  for (const auto& s : curve.samples) {
    out << s.p << ',' << s.classical << ',' << s.ea_rate << ',' << s.ratio << "\r\n";
  }
}

namespace {

struct Series {
  const char* label;
  const char* color;
  std::vector<std::pair<double, double>> points;  // (log10 p, value)
};

std::string polyline(const Series& s, double x0, double x1, double y0, double y1,
                     double width, double height, double margin) {
  std::ostringstream os;
  os << "  <polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"";
  for (auto [x, y] : s.points) {
    double px = margin + (x - x0) / (x1 - x0) * width;
    double py = margin + height - (y - y0) / (y1 - y0) * height;
    os << std::fixed << std::setprecision(2) << px << ',' << py << ' ';
  }
  os << "\"/>\n";
  return os.str();
}

}  // namespace

std::string ratio_curve_svg(const RatioCurve& curve) {
  const double margin = 50.0, width = 560.0, height = 360.0;
  Series series[3] = {
      {"classical", "#737373", {}},
      {"assisted", "#3373bf", {}},
      {"ratio", "#d9668c", {}},
  };
  double ymax = 0.0, xmin = 0.0, xmax = -20.0;
  for (const auto& s : curve.samples) {
    double lx = std::log10(s.p);
    xmin = std::min(xmin, lx);
    xmax = std::max(xmax, lx);
    series[0].points.emplace_back(lx, s.classical);
    series[1].points.emplace_back(lx, s.ea_rate);
    series[2].points.emplace_back(lx, s.ratio);
    ymax = std::max({ymax, s.classical, s.ea_rate, s.ratio});
  }
  if (ymax <= 0.0) ymax = 1.0;
  ymax *= 1.05;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width + 2 * margin
     << "\" height=\"" << height + 2 * margin << "\" viewBox=\"0 0 " << width + 2 * margin
     << ' ' << height + 2 * margin << "\">\n";
  os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // Axes.
  os << "  <line x1=\"" << margin << "\" y1=\"" << margin + height << "\" x2=\""
     << margin + width << "\" y2=\"" << margin + height << "\" stroke=\"black\"/>\n";
  os << "  <line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin
     << "\" y2=\"" << margin + height << "\" stroke=\"black\"/>\n";
  // X ticks at integer log10.
  for (int e = static_cast<int>(std::ceil(xmin)); e <= 0; ++e) {
    double px = margin + (e - xmin) / (xmax - xmin) * width;
    os << "  <line x1=\"" << px << "\" y1=\"" << margin + height << "\" x2=\"" << px
       << "\" y2=\"" << margin + height + 5 << "\" stroke=\"black\"/>\n";
    os << "  <text x=\"" << px << "\" y=\"" << margin + height + 20
       << "\" font-size=\"12\" text-anchor=\"middle\">1e" << e << "</text>\n";
  }
  // Y ticks.
  for (int k = 0; k <= 4; ++k) {
    double value = ymax * k / 4.0;
    double py = margin + height - value / ymax * height;
    os << "  <line x1=\"" << margin - 5 << "\" y1=\"" << py << "\" x2=\"" << margin
       << "\" y2=\"" << py << "\" stroke=\"black\"/>\n";
    os << "  <text x=\"" << margin - 8 << "\" y=\"" << py + 4
       << "\" font-size=\"12\" text-anchor=\"end\">" << std::fixed << std::setprecision(2)
       << value << "</text>\n";
  }
  os << "  <text x=\"" << margin + width / 2 << "\" y=\"" << margin + height + 38
     << "\" font-size=\"13\" text-anchor=\"middle\">p</text>\n";
  for (const auto& s : series) {
    os << polyline(s, xmin, xmax, 0.0, ymax, width, height, margin);
  }
  // Legend.
  double lx = margin + 12, ly = margin + 10;
  for (const auto& s : series) {
    os << "  <line x1=\"" << lx << "\" y1=\"" << ly << "\" x2=\"" << lx + 24 << "\" y2=\"" << ly
       << "\" stroke=\"" << s.color << "\" stroke-width=\"2\"/>\n";
    os << "  <text x=\"" << lx + 30 << "\" y=\"" << ly + 4 << "\" font-size=\"12\">" << s.label
       << "</text>\n";
    ly += 18;
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace csitq
