#pragma once

// Internal pieces of the numeric solver shared between translation units.

#include <cstddef>
#include <memory>
#include <vector>

#include "qhmet/domains.hpp"
#include "qhmet/qh_solver.hpp"

namespace qhmet::detail {

/// delta at p, or 0 when p is not interior.
double delta_or_zero(const DomainSpec& domain, const Point& p);

/// Quasihyperbolic length of [a, b] given delta at both ends; +infinity when
/// the segment is not certified interior.
double segment_length(const DomainSpec& domain, const Point& a, const Point& b, double da,
                      double db, double tol, int max_depth);

/// An upper bound of delta over the whole domain (+infinity when unbounded).
double delta_sup(const DomainSpec& domain);

/// Lower bound of k(z, w) from |z - w| = dist, delta(z) = da, delta(w) = db and
/// delta <= dsup: along any path delta is capped by both Lipschitz cones and
/// by dsup, so the path must climb out of each endpoint's boundary layer.
/// Never smaller than j(z, w).
double k_cone_bound(double dist, double da, double db, double dsup);

/// Graph over planar nodes with neighbors produced on demand. Nodes 0 and 1
/// are the query points.
class MeshGraph {
 public:
  virtual ~MeshGraph() = default;

  std::size_t size() const { return pos_.size(); }
  const Point& position(std::size_t i) const { return pos_[i]; }
  double delta(std::size_t i) const { return delta_[i]; }
  double delta_sup() const { return delta_sup_; }

  /// Appends the neighbors of node i.
  virtual void neighbors(std::size_t i, std::vector<std::size_t>& out) const = 0;

 protected:
  std::vector<Point> pos_;
  std::vector<double> delta_;
  double delta_sup_ = 0.0;
};

/// delta-adaptive quadtree nodes over the bounding box, pruned to cells that
/// can carry a path of quasihyperbolic length <= upper_bound. Throws
/// ConnectivityError when the pruned mesh exceeds its node budget.
std::unique_ptr<MeshGraph> build_quadtree_mesh(const DomainSpec& domain, const Point& x,
                                               const Point& y, double upper_bound,
                                               const MeshParams& params);

/// Log-polar grid around the puncture of R^2 minus a point.
std::unique_ptr<MeshGraph> build_log_polar_mesh(const DomainSpec& domain, const Point& x,
                                                const Point& y, const MeshParams& params);

/// A* from node 0 to node 1 with k_cone_bound as heuristic. Returns the node
/// sequence and its length, or an empty path when node 1 is unreachable.
struct GraphPath {
  std::vector<std::size_t> nodes;
  double length = 0.0;
};
GraphPath shortest_path(const DomainSpec& domain, const MeshGraph& graph, const MeshParams& params);

/// Relaxation with per-level lengths; level 0 is the input length.
struct RelaxOutcome {
  std::vector<Point> path;
  std::vector<double> levels;
};
RelaxOutcome relax_with_levels(const DomainSpec& domain, std::vector<Point> path,
                               const MeshParams& params);

}  // namespace qhmet::detail
