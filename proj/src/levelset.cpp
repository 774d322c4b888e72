#include "qhmet/levelset.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <unordered_map>

#include "qhmet/closed_form.hpp"
#include "qhmet/errors.hpp"
#include "qhmet/parallel.hpp"

namespace qhmet {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double ratio_or_nan(double x, double y) {
  if ((x == 0.0 && y == 0.0) || (x == 1.0 && y == 0.0)) return kNaN;
  return ratio_at(Point::planar(x, y));
}

// Crossing of one grid edge, polished so that |ratio - level| <= tol.
Point polish(const Point& a, const Point& b, double fa, double fb, double level, double tol) {
  // Illinois variant of regula falsi on f(t) = ratio(a + t (b - a)) - level.
  double t0 = 0.0, t1 = 1.0;
  double f0 = fa - level, f1 = fb - level;
  Point best = std::fabs(f0) < std::fabs(f1) ? a : b;
  double best_f = std::min(std::fabs(f0), std::fabs(f1));
  int side = 0;
  for (int it = 0; it < 200 && best_f > 0.25 * tol && t1 - t0 > 1e-17; ++it) {
    double t = (t0 * f1 - t1 * f0) / (f1 - f0);
    if (!(t > t0 && t < t1)) t = 0.5 * (t0 + t1);
    const Point p = a + t * (b - a);
    const double f = ratio_at(p) - level;
    if (std::fabs(f) < best_f) {
      best_f = std::fabs(f);
      best = p;
    }
    if ((f < 0.0) == (f0 < 0.0)) {
      t0 = t;
      f0 = f;
      if (side == -1) f1 *= 0.5;
      side = -1;
    } else {
      t1 = t;
      f1 = f;
      if (side == 1) f0 *= 0.5;
      side = 1;
    }
  }
  return best;
}

// Edge ids: 2 * (j * n + i) for the edge (i,j)-(i+1,j), +1 for (i,j)-(i,j+1).
using EdgeId = std::int64_t;

struct Tracer {
  const RatioField& f;
  double level;
  double tol;
  int n;
  std::vector<std::array<EdgeId, 2>> segments;
  std::unordered_map<EdgeId, Point> vertex;

  bool skipped(int i, int j) const {
    const double dx = f.dx(), dy = f.dy();
    const double x0 = f.window.xmin + (i - 1) * dx, x1 = f.window.xmin + (i + 2) * dx;
    const double y0 = f.window.ymin + (j - 1) * dy, y1 = f.window.ymin + (j + 2) * dy;
    const auto near = [&](double px) { return px >= x0 && px <= x1 && 0.0 >= y0 && 0.0 <= y1; };
    return near(0.0) || near(1.0);
  }

  EdgeId h_edge(int i, int j) const { return 2 * (static_cast<EdgeId>(j) * n + i); }
  EdgeId v_edge(int i, int j) const { return 2 * (static_cast<EdgeId>(j) * n + i) + 1; }

  void crossing(EdgeId id, int ia, int ja, int ib, int jb) {
    if (vertex.count(id)) return;
    vertex.emplace(id, polish(f.node(ia, ja), f.node(ib, jb), f.at(ia, ja), f.at(ib, jb), level, tol));
  }

  void cell(int i, int j) {
    const double v[4] = {f.at(i, j), f.at(i + 1, j), f.at(i + 1, j + 1), f.at(i, j + 1)};
    for (double x : v) {
      if (std::isnan(x)) return;
    }
    int mask = 0;
    for (int k = 0; k < 4; ++k) mask |= (v[k] >= level ? 1 : 0) << k;
    if (mask == 0 || mask == 15) return;
    if (skipped(i, j)) return;
    // Edges: 0 bottom, 1 right, 2 top, 3 left.
    const EdgeId e[4] = {h_edge(i, j), v_edge(i + 1, j), h_edge(i, j + 1), v_edge(i, j)};
    const auto cut = [&](int k) {
      switch (k) {
        case 0: crossing(e[0], i, j, i + 1, j); break;
        case 1: crossing(e[1], i + 1, j, i + 1, j + 1); break;
        case 2: crossing(e[2], i, j + 1, i + 1, j + 1); break;
        default: crossing(e[3], i, j, i, j + 1); break;
      }
    };
    const auto add = [&](int a, int b) {
      cut(a);
      cut(b);
      segments.push_back({e[a], e[b]});
    };
    if (mask == 5 || mask == 10) {
      const Point c = Point::planar(f.window.xmin + (i + 0.5) * f.dx(), f.window.ymin + (j + 0.5) * f.dy());
      const bool center_high = ratio_at(c) >= level;
      // Corners 0,2 high (mask 5) or 1,3 high (mask 10): isolate the corners
      // whose class differs from the center.
      const bool isolate_13 = (mask == 5) == center_high;
      if (isolate_13) {
        add(0, 1);
        add(2, 3);
      } else {
        add(3, 0);
        add(1, 2);
      }
      return;
    }
    int cuts[2], nc = 0;
    for (int k = 0; k < 4; ++k) {
      const int a = k, b = (k + 1) % 4;
      if (((mask >> a) & 1) != ((mask >> b) & 1)) cuts[nc++] = k;
    }
    add(cuts[0], cuts[1]);
  }

  Contour assemble() const {
    Contour out;
    out.level = level;
    std::unordered_map<EdgeId, std::array<int, 2>> at_edge;
    for (int s = 0; s < static_cast<int>(segments.size()); ++s) {
      for (EdgeId id : segments[s]) {
        auto [it, fresh] = at_edge.try_emplace(id, std::array<int, 2>{-1, -1});
        (it->second[0] < 0 ? it->second[0] : it->second[1]) = s;
      }
    }
    std::vector<char> used(segments.size(), 0);
    const auto other = [&](EdgeId id, int s) {
      const auto& a = at_edge.at(id);
      return a[0] == s ? a[1] : a[0];
    };
    for (int s0 = 0; s0 < static_cast<int>(segments.size()); ++s0) {
      if (used[s0]) continue;
      used[s0] = 1;
      std::vector<EdgeId> ids{segments[s0][0], segments[s0][1]};
      bool closed = false;
      // Forward from the second edge.
      for (int s = s0;;) {
        const EdgeId tail = ids.back();
        const int t = other(tail, s);
        if (t < 0) break;
        if (used[t]) {
          closed = t == s0 && tail == segments[s0][0];
          break;
        }
        used[t] = 1;
        const EdgeId next = segments[t][0] == tail ? segments[t][1] : segments[t][0];
        if (next == ids.front()) {
          closed = true;
          break;
        }
        ids.push_back(next);
        s = t;
      }
      if (!closed) {
        // Backward from the first edge.
        std::vector<EdgeId> head;
        for (int s = s0;;) {
          const EdgeId front = head.empty() ? ids.front() : head.back();
          const int t = other(front, s);
          if (t < 0 || used[t]) break;
          used[t] = 1;
          head.push_back(segments[t][0] == front ? segments[t][1] : segments[t][0]);
          s = t;
        }
        ids.insert(ids.begin(), head.rbegin(), head.rend());
      }
      std::vector<Point> chain;
      chain.reserve(ids.size());
      for (EdgeId id : ids) chain.push_back(vertex.at(id));
      out.chains.push_back(std::move(chain));
      out.closed.push_back(closed);
    }
    return out;
  }
};

}  // namespace

double ratio_at(const Point& z) {
  if (z.dim() != 2) throw PreconditionError("ratio_at takes planar points");
  const double x = z.x(), y = z.y();
  const double r = std::hypot(x, y);
  const double d = std::hypot(x - 1.0, y);
  if (r == 0.0 || d == 0.0) throw DomainError("ratio field is singular at 0 and e1");
  // Angle at the origin between z and e1; |y| makes the field exactly mirror symmetric.
  const double alpha = std::atan2(std::fabs(y), x);
  const double k = std::hypot(alpha, std::log(r));
  const double j = std::log1p(d / std::min(r, 1.0));
  return k / j;
}

RatioField sample_ratio_field(const Window& window, int resolution) {
  if (resolution < 16) throw PreconditionError("resolution must be at least 16");
  if (!(window.xmax > window.xmin && window.ymax > window.ymin)) throw PreconditionError("empty window");
  RatioField f;
  f.window = window;
  f.resolution = resolution;
  f.values.assign(static_cast<std::size_t>(resolution) * resolution, 0.0);
  parallel_for(static_cast<std::size_t>(resolution), [&](std::size_t j) {
    for (int i = 0; i < resolution; ++i) {
      const Point p = f.node(i, static_cast<int>(j));
      f.values[j * resolution + i] = ratio_or_nan(p.x(), p.y());
    }
  });
  return f;
}

std::size_t Contour::vertex_count() const {
  std::size_t n = 0;
  for (const auto& c : chains) n += c.size();
  return n;
}

std::vector<Contour> trace_levels(const RatioField& field, std::span<const double> levels, double contour_tol) {
  if (!(contour_tol > 0.0)) throw PreconditionError("contour_tol must be positive");
  std::vector<Contour> out;
  for (double c : levels) {
    if (!std::isfinite(c)) throw PreconditionError("levels must be finite");
    Tracer t{field, c, contour_tol, field.resolution, {}, {}};
    // Ratio >= 1 everywhere, so levels below 1 have no crossings.
    if (c >= 1.0) {
      for (int j = 0; j + 1 < field.resolution; ++j) {
        for (int i = 0; i + 1 < field.resolution; ++i) t.cell(i, j);
      }
    }
    out.push_back(t.assemble());
  }
  return out;
}

std::vector<Contour> trace_levels(std::span<const double> levels, const Window& window, int resolution,
                                  double contour_tol) {
  return trace_levels(sample_ratio_field(window, resolution), levels, contour_tol);
}

std::vector<double> negative_axis_crossings(const Contour& contour) {
  std::vector<double> ts;
  for (std::size_t c = 0; c < contour.chains.size(); ++c) {
    const auto& ch = contour.chains[c];
    const std::size_t n = ch.size();
    const std::size_t segs = contour.closed[c] ? n : (n == 0 ? 0 : n - 1);
    for (std::size_t k = 0; k < segs; ++k) {
      const Point& p = ch[k];
      const Point& q = ch[(k + 1) % n];
      if ((p.y() > 0.0) == (q.y() > 0.0)) continue;
      const double x = p.x() + (q.x() - p.x()) * (0.0 - p.y()) / (q.y() - p.y());
      if (x < 0.0) ts.push_back(-x);
    }
  }
  std::sort(ts.begin(), ts.end());
  return ts;
}

bool encloses(const Contour& contour, const Point& p) {
  bool inside = false;
  for (std::size_t c = 0; c < contour.chains.size(); ++c) {
    if (!contour.closed[c]) continue;
    const auto& ch = contour.chains[c];
    for (std::size_t k = 0, m = ch.size() - 1; k < ch.size(); m = k++) {
      const Point& a = ch[k];
      const Point& b = ch[m];
      if ((a.y() > p.y()) != (b.y() > p.y()) &&
          p.x() < (b.x() - a.x()) * (p.y() - a.y()) / (b.y() - a.y()) + a.x()) {
        inside = !inside;
      }
    }
  }
  return inside;
}

double slope_quotient(double alpha) {
  if (!(alpha > 0.0 && alpha <= std::numbers::pi)) throw RangeError("slope_quotient: alpha outside (0, pi]");
  if (alpha < 1e-3) {
    return 0.5 + alpha * (-1.0 / 24.0 + alpha * (1.0 / 24.0 - alpha * (25.0 / 1152.0)));
  }
  return (h_alpha(alpha) - 1.0) / alpha;
}

SlopeResult sharp_slope(double A) {
  if (!(A > 0.0 && A <= std::numbers::pi)) throw RangeError("sharp_slope: A outside (0, pi]");
  constexpr int kScan = 4096;
  int best_k = kScan;
  double best = slope_quotient(A);
  for (int k = 1; k < kScan; ++k) {
    const double v = slope_quotient(A * k / kScan);
    if (v > best) {
      best = v;
      best_k = k;
    }
  }
  SlopeResult r{best, A};
  if (best_k < kScan) {
    // Golden-section refinement of the interior maximizer.
    double lo = A * (best_k - 1) / kScan, hi = A * (best_k + 1) / kScan;
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = hi - g * (hi - lo), d = lo + g * (hi - lo);
    double fc = slope_quotient(c), fd = slope_quotient(d);
    for (int it = 0; it < 100 && hi - lo > 1e-14; ++it) {
      if (fc > fd) {
        hi = d, d = c, fd = fc, c = hi - g * (hi - lo), fc = slope_quotient(c);
      } else {
        lo = c, c = d, fc = fd, d = lo + g * (hi - lo), fd = slope_quotient(d);
      }
    }
    r = fc > fd ? SlopeResult{fc, c} : SlopeResult{fd, d};
  }
  // The quotient tends to 1/2 as alpha -> 0+; that limit is a supremum, not a maximum.
  if (0.5 > r.value) r = {0.5, 0.0};
  return r;
}

}  // namespace qhmet
