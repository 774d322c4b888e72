#include <cstdio>
#include <ostream>
#include <string>

#include "qhmet/levelset.hpp"

namespace qhmet {
namespace {

std::string num(double v, const char* fmt = "%.17g") {
  char buf[40];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

constexpr const char* kPalette[] = {"#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e", "#e6ab02", "#a6761d"};

}  // namespace

void write_contours_csv(std::ostream& out, std::span<const Contour> contours) {
  out << "level,chain_id,vertex_id,x,y\n";
  for (const Contour& c : contours) {
    for (std::size_t k = 0; k < c.chains.size(); ++k) {
      for (std::size_t v = 0; v < c.chains[k].size(); ++v) {
        const Point& p = c.chains[k][v];
        out << num(c.level) << ',' << k << ',' << v << ',' << num(p.x()) << ',' << num(p.y()) << '\n';
      }
    }
  }
}

void write_contours_svg(std::ostream& out, std::span<const Contour> contours, const Window& w) {
  constexpr double kSize = 600.0;
  const auto sx = [&](double x) { return (x - w.xmin) / (w.xmax - w.xmin) * kSize; };
  const auto sy = [&](double y) { return (w.ymax - y) / (w.ymax - w.ymin) * kSize; };
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" viewBox=\"0 0 600 600\">\n";
  out << "<rect width=\"600\" height=\"600\" fill=\"white\"/>\n";
  for (std::size_t i = 0; i < contours.size(); ++i) {
    const Contour& c = contours[i];
    const char* color = kPalette[i % std::size(kPalette)];
    for (std::size_t k = 0; k < c.chains.size(); ++k) {
      const auto& ch = c.chains[k];
      if (ch.empty()) continue;
      out << "<path data-level=\"" << num(c.level, "%.6g") << "\" fill=\"none\" stroke=\"" << color
          << "\" stroke-width=\"1\" d=\"";
      for (std::size_t v = 0; v < ch.size(); ++v) {
        out << (v == 0 ? 'M' : 'L') << num(sx(ch[v].x()), "%.2f") << ' ' << num(sy(ch[v].y()), "%.2f");
      }
      if (c.closed[k]) out << 'Z';
      out << "\"/>\n";
    }
  }
  out << "</svg>\n";
}

}  // namespace qhmet
