#include "qhmet/qh_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qhmet/errors.hpp"
#include "solver_detail.hpp"

namespace qhmet {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Point domain_center(const DomainSpec& domain) {
  if (const Ball* b = domain.get_if<Ball>()) return b->center;
  if (const Punctured* p = domain.get_if<Punctured>()) return domain_center(*p->base);
  return Point::zero(2);
}

// Length of some interior path from x to y: the segment, else a two-segment
// path through the domain center or a point off the segment's midpoint.
double upper_bound(const DomainSpec& domain, const Point& x, const Point& y, double dx, double dy,
                   const MeshParams& params) {
  const auto seg = [&](const Point& a, const Point& b, double da, double db) {
    return detail::segment_length(domain, a, b, da, db, params.quad_tol, params.max_subdivisions);
  };
  double best = seg(x, y, dx, dy);
  if (std::isfinite(best)) return best;

  std::vector<Point> hubs{domain_center(domain)};
  const Point mid = 0.5 * (x + y);
  const Point d = y - x;
  const Point normal = Point::planar(-d.y(), d.x());
  for (double t : {0.05, 0.1, 0.2, 0.4}) {
    hubs.push_back(mid + t * normal);
    hubs.push_back(mid - t * normal);
  }
  for (const Point& hub : hubs) {
    const double dh = detail::delta_or_zero(domain, hub);
    if (dh <= 0.0) continue;
    best = std::min(best, seg(x, hub, dx, dh) + seg(hub, y, dh, dy));
  }
  return best;
}

}  // namespace

void validate(const MeshParams& p) {
  if (!(p.h > 0.0 && p.h < 1.0)) throw PreconditionError("MeshParams.h must lie in (0, 1)");
  if (!(p.min_clearance > 0.0 && p.min_clearance <= 1.0)) {
    throw PreconditionError("MeshParams.min_clearance must lie in (0, 1]");
  }
  if (p.neighbor_degree != 8 && p.neighbor_degree != 16) {
    throw PreconditionError("MeshParams.neighbor_degree must be 8 or 16");
  }
  if (!(p.quad_tol > 0.0) || !(p.relax_tol > 0.0)) throw PreconditionError("MeshParams tolerances must be positive");
  if (p.max_subdivisions < 4 || p.max_subdivisions > 60) {
    throw PreconditionError("MeshParams.max_subdivisions must lie in [4, 60]");
  }
}

GeodesicResult k_numeric(const DomainSpec& domain, const Point& x_in, const Point& y_in, const MeshParams& params) {
  validate(params);
  if (domain.dim() != 2 || x_in.dim() != 2 || y_in.dim() != 2) {
    throw PreconditionError("k_numeric solves planar domains only");
  }
  const double dx = detail::delta_or_zero(domain, x_in);
  const double dy = detail::delta_or_zero(domain, y_in);
  if (dx <= 0.0) throw DomainError("point " + to_string(x_in) + " is not interior to " + to_string(domain));
  if (dy <= 0.0) throw DomainError("point " + to_string(y_in) + " is not interior to " + to_string(domain));

  GeodesicResult res;
  if (x_in == y_in) {
    res.path = {x_in};
    res.level_values = {0.0};
    return res;
  }

  // Solve in a canonical order so that k(x, y) and k(y, x) agree exactly.
  const bool swapped = std::lexicographical_compare(y_in.coords().begin(), y_in.coords().end(),
                                                    x_in.coords().begin(), x_in.coords().end());
  const Point& x = swapped ? y_in : x_in;
  const Point& y = swapped ? x_in : y_in;

  std::unique_ptr<detail::MeshGraph> mesh;
  if (domain.get_if<PuncturedSpace>() != nullptr) {
    mesh = detail::build_log_polar_mesh(domain, x, y, params);
  } else {
    const double ub = upper_bound(domain, x, y, swapped ? dy : dx, swapped ? dx : dy, params);
    // Slack of one grid step in k-length keeps a band around the geodesic.
    mesh = detail::build_quadtree_mesh(domain, x, y, ub + params.h, params);
  }
  res.mesh_nodes = mesh->size();

  const detail::GraphPath gp = detail::shortest_path(domain, *mesh, params);
  if (gp.nodes.empty()) {
    throw ConnectivityError("mesh does not connect " + to_string(x_in) + " and " + to_string(y_in) +
                            "; increase resolution");
  }
  std::vector<Point> path;
  path.reserve(gp.nodes.size());
  for (std::size_t v : gp.nodes) path.push_back(mesh->position(v));

  detail::RelaxOutcome r = detail::relax_with_levels(domain, std::move(path), params);
  if (r.levels.empty()) r.levels.push_back(gp.length);
  res.level_values = std::move(r.levels);
  res.value = res.level_values.back();
  res.refinement_levels = static_cast<int>(res.level_values.size()) - 1;
  const std::size_t n = res.level_values.size();
  res.error_estimate = n >= 2 ? std::fabs(res.level_values[n - 2] - res.level_values[n - 1]) : 0.0;
  res.path = std::move(r.path);
  res.path.front() = x;
  res.path.back() = y;
  if (swapped) std::reverse(res.path.begin(), res.path.end());
  return res;
}

}  // namespace qhmet
