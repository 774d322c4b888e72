#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qhmet/domains.hpp"
#include "qhmet/point.hpp"

namespace qhmet {

/// Resolution and tolerance knobs of the numeric quasihyperbolic solver.
struct MeshParams {
  /// Target ratio of local grid step to boundary distance.
  double h = 0.15;
  /// Nodes with delta < min_clearance * min(delta(x), delta(y)) are dropped.
  double min_clearance = 0.5;
  /// 8 or 16 grid connectivity.
  int neighbor_degree = 16;
  /// Absolute adaptive-quadrature tolerance per segment.
  double quad_tol = 1e-8;
  /// Relative convergence threshold of the path relaxation.
  double relax_tol = 1e-5;
  /// Recursion depth cap of the adaptive quadrature.
  int max_subdivisions = 40;
};

/// Throws PreconditionError for out-of-range parameters.
void validate(const MeshParams& params);

struct GeodesicResult {
  double value = 0.0;
  std::vector<Point> path;
  /// |difference| of the last two refinement levels.
  double error_estimate = 0.0;
  int refinement_levels = 0;
  /// Length after each level; entry 0 is the shortest graph path.
  std::vector<double> level_values;
  std::size_t mesh_nodes = 0;
};

/// Adaptive-Simpson value of the integral of |dz|/delta(z) along [a, b].
/// Throws ContainmentError when the segment is not interior.
double qh_segment_length(const DomainSpec& domain, const Point& a, const Point& b,
                         double tol = 1e-10);

/// Sum of qh_segment_length over consecutive vertices.
double qh_path_length(const DomainSpec& domain, std::span<const Point> path, double tol = 1e-10);

/// Numeric quasihyperbolic distance and a near-geodesic polyline for planar
/// domains: delta-adaptive mesh, A* shortest path, then path relaxation.
/// Throws DomainError for non-interior points and ConnectivityError when the
/// mesh does not join x and y.
GeodesicResult k_numeric(const DomainSpec& domain, const Point& x, const Point& y,
                         const MeshParams& params = {});

/// Relaxes a polyline with fixed endpoints: midpoint subdivision plus
/// axis-wise golden-section moves of each interior vertex. The returned
/// polyline is never longer than the input.
std::vector<Point> relax_path(const DomainSpec& domain, std::vector<Point> path,
                              const MeshParams& params = {});

/// Point x on the k-circle {k(x, z) = r} of the plane punctured at the
/// domain's puncture, with |x - p| >= |z - p| and prescribed angle
/// angle(x, z, p). Chooses the upper half plane of the frame that maps p to 0
/// and z to e1. Throws RangeError when no such point exists.
Point k_circle_point(const DomainSpec& punctured_plane, const Point& z, double r, double angle);

/// Angle range realizable by k_circle_point for radius r.
struct AngleRange {
  double lo, hi;
};
AngleRange k_circle_angle_range(double r);

}  // namespace qhmet
