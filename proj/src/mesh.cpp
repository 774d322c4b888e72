#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <string>
#include <unordered_map>

#include "qhmet/errors.hpp"
#include "solver_detail.hpp"

namespace qhmet::detail {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::size_t kMaxNodes = 1500000;

// Connection radius in units of the local grid step.
double connection_factor(int degree) { return (degree == 8 ? std::sqrt(2.0) : std::sqrt(5.0)) * 1.01; }

// Links between grid nodes and the two query nodes, kept outside the grid
// structure so neighbor queries stay symmetric.
class QueryLinks {
 public:
  void link(std::size_t special, std::size_t node) {
    lists_[special].push_back(node);
    back_[node].push_back(special);
  }
  void append(std::size_t i, std::vector<std::size_t>& out) const {
    if (i < 2) {
      out.insert(out.end(), lists_[i].begin(), lists_[i].end());
      return;
    }
    if (const auto it = back_.find(i); it != back_.end()) out.insert(out.end(), it->second.begin(), it->second.end());
  }

 private:
  std::vector<std::size_t> lists_[2];
  std::unordered_map<std::size_t, std::vector<std::size_t>> back_;
};

class QuadtreeMesh final : public MeshGraph {
 public:
  QuadtreeMesh(const DomainSpec& domain, const Point& x, const Point& y, double upper_bound,
               const MeshParams& params)
      : conn_(connection_factor(params.neighbor_degree)) {
    const Box box = *bounding_box(domain);
    const double dx = delta_or_zero(domain, x);
    const double dy = delta_or_zero(domain, y);
    pos_ = {x, y};
    delta_ = {dx, dy};
    step_ = {params.h * dx, params.h * dy};
    delta_sup_ = detail::delta_sup(domain);

    Pruning pr{x, y, dx, dy, delta_sup_, upper_bound, params.min_clearance * std::min(dx, dy), params.h};
    const double half = 0.5 * std::max(box.xmax - box.xmin, box.ymax - box.ymin) * (1.0 + 1e-9);
    cells_.push_back({0.5 * (box.xmin + box.xmax), 0.5 * (box.ymin + box.ymax), half, -1, -1});
    depth_.push_back(0);
    build(domain, pr);

    for (std::size_t s = 0; s < 2; ++s) connect_query(s);
    // Direct edge; its weight is +infinity when the segment leaves the domain.
    links_.link(0, 1);
  }

  void neighbors(std::size_t i, std::vector<std::size_t>& out) const override {
    links_.append(i, out);
    if (i < 2) return;
    const Point& p = pos_[i];
    const double si = step_[i];
    query(p.x(), p.y(), 4.0 * conn_ * si, [&](std::size_t j) {
      if (j != i && distance(p, pos_[j]) <= conn_ * std::max(si, step_[j])) out.push_back(j);
    });
  }

 private:
  struct Cell {
    double cx, cy, half;
    int child;  // index of the first of four children, -1 if none
    int node;   // node index of a leaf, -1 if none
  };

  struct Pruning {
    const Point& x;
    const Point& y;
    double dx, dy;
    double dsup;
    double upper_bound;
    double clearance;
    double h;

    // Lower bound of k(x, z) + k(z, y) over the cell, with delta(z) <= dmax.
    // The cone bound grows with distance and shrinks with delta(z).
    double k_sum_bound(const Point& c, double radius, double dmax) const {
      const double ex = std::max(0.0, distance(x, c) - radius);
      const double ey = std::max(0.0, distance(y, c) - radius);
      return k_cone_bound(ex, dmax, dx, dsup) + k_cone_bound(ey, dmax, dy, dsup);
    }
  };

  void build(const DomainSpec& domain, const Pruning& pr) {
    std::vector<int> stack{0};
    while (!stack.empty()) {
      const int ci = stack.back();
      stack.pop_back();
      const Cell cell = cells_[ci];
      const Point c = Point::planar(cell.cx, cell.cy);
      const double radius = cell.half * std::numbers::sqrt2;
      const double dc = delta_or_zero(domain, c);
      // delta is 1-Lipschitz; outside the domain delta(z) <= |z - c|.
      const double dmax = dc + radius;
      if (dmax < pr.clearance) continue;
      if (std::isfinite(pr.upper_bound) && pr.k_sum_bound(c, radius, dmax) > pr.upper_bound) continue;
      const double side = 2.0 * cell.half;
      if (dc > 0.0 && side <= pr.h * dc) {
        if (dc < pr.clearance) continue;
        if (pos_.size() >= kMaxNodes) {
          throw ConnectivityError("mesh exceeds " + std::to_string(kMaxNodes) + " nodes; use a coarser h");
        }
        cells_[ci].node = static_cast<int>(pos_.size());
        pos_.push_back(c);
        delta_.push_back(dc);
        step_.push_back(side);
        continue;
      }
      if (side < 1e-3 * pr.h * pr.clearance || depth_[ci] >= kMaxDepth) continue;
      if (cells_.size() >= 4 * kMaxNodes) {
        throw ConnectivityError("mesh exceeds " + std::to_string(4 * kMaxNodes) + " cells; use a coarser h");
      }
      const int first = static_cast<int>(cells_.size());
      cells_[ci].child = first;
      const double q = 0.5 * cell.half;
      cells_.push_back({cell.cx - q, cell.cy - q, q, -1, -1});
      cells_.push_back({cell.cx + q, cell.cy - q, q, -1, -1});
      cells_.push_back({cell.cx - q, cell.cy + q, q, -1, -1});
      cells_.push_back({cell.cx + q, cell.cy + q, q, -1, -1});
      depth_.insert(depth_.end(), 4, depth_[ci] + 1);
      for (int k = 3; k >= 0; --k) stack.push_back(first + k);
    }
  }

  template <class F>
  void query(double px, double py, double r, F&& visit) const {
    // Depth-first stack; each level adds at most three pending siblings.
    std::array<int, 4 * kMaxDepth> stack;
    std::size_t top = 0;
    stack[top++] = 0;
    while (top > 0) {
      const Cell& cell = cells_[stack[--top]];
      const double ox = std::max(0.0, std::fabs(px - cell.cx) - cell.half);
      const double oy = std::max(0.0, std::fabs(py - cell.cy) - cell.half);
      if (ox * ox + oy * oy > r * r) continue;
      if (cell.node >= 0) visit(static_cast<std::size_t>(cell.node));
      if (cell.child >= 0) {
        for (int k = 3; k >= 0; --k) stack[top++] = cell.child + k;
      }
    }
  }

  // Links query node s to nearby leaves, widening the radius until some are found.
  void connect_query(std::size_t s) {
    const Point& p = pos_[s];
    const double si = step_[s];
    for (double grow = 1.0; grow <= 64.0; grow *= 2.0) {
      std::vector<std::size_t> found;
      query(p.x(), p.y(), 4.0 * grow * conn_ * si, [&](std::size_t j) {
        if (distance(p, pos_[j]) <= grow * conn_ * std::max(si, step_[j])) found.push_back(j);
      });
      if (!found.empty()) {
        std::sort(found.begin(), found.end());
        for (std::size_t j : found) links_.link(s, j);
        return;
      }
    }
  }

  static constexpr int kMaxDepth = 48;

  double conn_;
  std::vector<double> step_;
  std::vector<Cell> cells_;
  std::vector<int> depth_;
  QueryLinks links_;
};

// Grid uniform in (log|z - p|, arg(z - p)), where k has the flat metric.
class LogPolarMesh final : public MeshGraph {
 public:
  LogPolarMesh(const Point& puncture, const Point& x, const Point& y, const MeshParams& params)
      : p_(puncture) {
    const int m = std::max(8, static_cast<int>(std::ceil(2.0 * std::numbers::pi / params.h)));
    const double step = 2.0 * std::numbers::pi / m;
    const auto [ux, tx] = log_polar(x);
    const auto [uy, ty] = log_polar(y);
    u0_ = std::min(ux, uy) - 2.0 * step;
    const int nu = static_cast<int>(std::ceil((std::max(ux, uy) + 2.0 * step - u0_) / step)) + 1;
    nu_ = nu;
    nt_ = m;
    step_ = step;

    pos_ = {x, y};
    delta_ = {distance(x, p_), distance(y, p_)};
    delta_sup_ = kInf;
    for (int i = 0; i < nu; ++i) {
      const double r = std::exp(u0_ + i * step);
      for (int j = 0; j < m; ++j) {
        const double t = j * step;
        pos_.push_back(Point::planar(p_.x() + r * std::cos(t), p_.y() + r * std::sin(t)));
        delta_.push_back(r);
      }
    }
    if (params.neighbor_degree == 8) {
      offsets_ = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
    } else {
      offsets_ = {{1, 0},  {-1, 0}, {0, 1},  {0, -1}, {1, 1},  {1, -1}, {-1, 1}, {-1, -1},
                  {1, 2},  {2, 1},  {-1, 2}, {-2, 1}, {1, -2}, {2, -1}, {-1, -2}, {-2, -1}};
    }
    const double reach = connection_factor(params.neighbor_degree) * step;
    connect_query(0, ux, tx, reach);
    connect_query(1, uy, ty, reach);
    links_.link(0, 1);
  }

  void neighbors(std::size_t i, std::vector<std::size_t>& out) const override {
    links_.append(i, out);
    if (i < 2) return;
    const int k = static_cast<int>(i - 2);
    const int iu = k / nt_;
    const int it = k % nt_;
    for (const auto& [du, dt] : offsets_) {
      const int ju = iu + du;
      if (ju < 0 || ju >= nu_) continue;
      const int jt = ((it + dt) % nt_ + nt_) % nt_;
      out.push_back(index(ju, jt));
    }
  }

 private:
  std::pair<double, double> log_polar(const Point& z) const {
    const double t = std::atan2(z.y() - p_.y(), z.x() - p_.x());
    return {std::log(distance(z, p_)), t < 0.0 ? t + 2.0 * std::numbers::pi : t};
  }

  std::size_t index(int iu, int it) const { return 2 + static_cast<std::size_t>(iu) * nt_ + it; }

  void connect_query(std::size_t s, double u, double t, double reach) {
    const int span = static_cast<int>(std::ceil(reach / step_)) + 1;
    const int cu = static_cast<int>(std::floor((u - u0_) / step_));
    const int ct = static_cast<int>(std::floor(t / step_));
    for (int iu = cu - span; iu <= cu + span + 1; ++iu) {
      if (iu < 0 || iu >= nu_) continue;
      for (int k = ct - span; k <= ct + span + 1; ++k) {
        const int it = ((k % nt_) + nt_) % nt_;
        double dt = std::fabs(it * step_ - t);
        dt = std::min(dt, 2.0 * std::numbers::pi - dt);
        const double du = u0_ + iu * step_ - u;
        if (std::hypot(du, dt) <= reach) links_.link(s, index(iu, it));
      }
    }
  }

  Point p_;
  double u0_ = 0.0;
  double step_ = 0.0;
  int nu_ = 0;
  int nt_ = 0;
  std::vector<std::pair<int, int>> offsets_;
  QueryLinks links_;
};

// Edge weight for the search. Short edges use the exact integral for linear
// delta, len / logmean(da, db), without evaluating delta; the chosen path is
// integrated to quad_tol afterwards.
double edge_weight(const DomainSpec& domain, const MeshGraph& graph, std::size_t i, std::size_t j,
                   const MeshParams& params) {
  const Point& a = graph.position(i);
  const Point& b = graph.position(j);
  const double len = distance(a, b);
  const double da = graph.delta(i);
  const double db = graph.delta(j);
  // By the Lipschitz bound delta >= (da + db - len) / 2 > 0 along the edge.
  if (len < 0.9 * (da + db)) {
    const double r = db / da;
    const double logmean = std::fabs(r - 1.0) < 1e-6 ? 0.5 * (da + db) : (db - da) / std::log(r);
    return len / logmean;
  }
  return segment_length(domain, a, b, da, db, params.quad_tol, params.max_subdivisions);
}

}  // namespace

double delta_sup(const DomainSpec& domain) {
  if (const Ball* b = domain.get_if<Ball>()) return b->radius;
  if (domain.get_if<Diamond>() != nullptr) return 1.0 / std::numbers::sqrt2;
  // The inradius, attained at the origin: the nearest boundary points lie on the diagonals.
  if (const Superellipse* se = domain.get_if<Superellipse>()) return std::numbers::sqrt2 * std::exp2(-1.0 / se->s());
  if (const Punctured* p = domain.get_if<Punctured>()) return delta_sup(*p->base);
  return kInf;
}

double k_cone_bound(double dist, double da, double db, double dsup) {
  da = std::min(da, dsup);
  db = std::min(db, dsup);
  // The cones delta(z) + s and delta(w) + (dist - s) meet at height m.
  const double m = 0.5 * (dist + da + db);
  if (m <= dsup) return std::log(m / da) + std::log(m / db);
  return std::log(dsup / da) + std::log(dsup / db) + (dist - (2.0 * dsup - da - db)) / dsup;
}

std::unique_ptr<MeshGraph> build_quadtree_mesh(const DomainSpec& domain, const Point& x, const Point& y,
                                               double upper_bound, const MeshParams& params) {
  if (!bounding_box(domain)) throw PreconditionError("quadtree mesh needs a bounded planar domain");
  return std::make_unique<QuadtreeMesh>(domain, x, y, upper_bound, params);
}

std::unique_ptr<MeshGraph> build_log_polar_mesh(const DomainSpec& domain, const Point& x, const Point& y,
                                                const MeshParams& params) {
  const PuncturedSpace* ps = domain.get_if<PuncturedSpace>();
  if (ps == nullptr || ps->puncture.dim() != 2) throw PreconditionError("log-polar mesh needs a punctured plane");
  return std::make_unique<LogPolarMesh>(ps->puncture, x, y, params);
}

GraphPath shortest_path(const DomainSpec& domain, const MeshGraph& graph, const MeshParams& params) {
  const std::size_t n = graph.size();
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<double> g(n, kInf);
  std::vector<std::size_t> parent(n, kNone);
  std::vector<char> closed(n, 0);
  const Point& target = graph.position(1);
  const double dt = graph.delta(1);
  const double dsup = graph.delta_sup();
  const auto heuristic = [&](std::size_t i) {
    return k_cone_bound(distance(graph.position(i), target), graph.delta(i), dt, dsup);
  };

  using Entry = std::pair<double, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
  g[0] = 0.0;
  open.push({heuristic(0), 0});
  std::vector<std::size_t> nbrs;
  while (!open.empty()) {
    const std::size_t i = open.top().second;
    open.pop();
    if (closed[i]) continue;
    closed[i] = 1;
    if (i == 1) break;
    nbrs.clear();
    graph.neighbors(i, nbrs);
    for (std::size_t j : nbrs) {
      if (closed[j]) continue;
      const double w = edge_weight(domain, graph, i, j, params);
      if (!std::isfinite(w)) continue;
      const double cand = g[i] + w;
      if (cand < g[j]) {
        g[j] = cand;
        parent[j] = i;
        open.push({cand + heuristic(j), j});
      }
    }
  }
  GraphPath out;
  if (!closed[1]) return out;
  for (std::size_t v = 1; v != kNone; v = parent[v]) out.nodes.push_back(v);
  std::reverse(out.nodes.begin(), out.nodes.end());
  out.length = g[1];
  return out;
}

}  // namespace qhmet::detail
