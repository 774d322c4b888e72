#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "qhmet/point.hpp"

namespace qhmet {

struct Window {
  double xmin = -3.0, xmax = 3.0, ymin = -3.0, ymax = 3.0;
};

/// k(z, e1) / j(z, e1) in the plane punctured at the origin. Throws
/// DomainError at the singular points 0 and e1.
double ratio_at(const Point& z);

/// Samples of ratio_at on a resolution x resolution node grid spanning the
/// window; NaN at nodes that coincide with a singular point.
struct RatioField {
  Window window;
  int resolution = 0;
  std::vector<double> values;  // row-major, row = y index

  double dx() const { return (window.xmax - window.xmin) / (resolution - 1); }
  double dy() const { return (window.ymax - window.ymin) / (resolution - 1); }
  Point node(int i, int j) const { return Point::planar(window.xmin + i * dx(), window.ymin + j * dy()); }
  double at(int i, int j) const { return values[static_cast<std::size_t>(j) * resolution + i]; }
};

/// Rows are evaluated in parallel (QHMET_THREADS caps the worker count).
RatioField sample_ratio_field(const Window& window, int resolution);

struct Contour {
  double level = 0.0;
  std::vector<std::vector<Point>> chains;
  std::vector<bool> closed;

  std::size_t vertex_count() const;
};

/// Marching squares on the sampled field with the saddle case decided by the
/// cell-center sample; each edge crossing is polished by bracketed root
/// finding until |ratio - level| <= contour_tol. Cells within one cell of 0
/// or e1 are skipped. Levels below 1 give empty contours.
std::vector<Contour> trace_levels(std::span<const double> levels, const Window& window = {},
                                  int resolution = 800, double contour_tol = 1e-6);
std::vector<Contour> trace_levels(const RatioField& field, std::span<const double> levels,
                                  double contour_tol = 1e-6);

/// Points where the chains cross the negative real axis, as distances t > 0
/// of the crossing -t e1, sorted ascending.
std::vector<double> negative_axis_crossings(const Contour& contour);

/// Crossing-number test of p against every closed chain; true when p lies
/// inside an odd number of them.
bool encloses(const Contour& contour, const Point& p);

/// sup over alpha in (0, A] of (h_alpha(alpha) - 1) / alpha. When the
/// supremum is the limit at 0+ (value 1/2), argmax is 0.
struct SlopeResult {
  double value = 0.0;
  double argmax = 0.0;
};
SlopeResult sharp_slope(double A);

/// (h_alpha(alpha) - 1) / alpha with a series branch near 0.
double slope_quotient(double alpha);

/// CSV rows "level,chain_id,vertex_id,x,y" with a header line.
void write_contours_csv(std::ostream& out, std::span<const Contour> contours);

/// Self-contained SVG, one path per chain, window mapped to 600 x 600.
void write_contours_svg(std::ostream& out, std::span<const Contour> contours, const Window& window);

}  // namespace qhmet
