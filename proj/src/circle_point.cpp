#include <cmath>
#include <numbers>

#include "qhmet/errors.hpp"
#include "qhmet/qh_solver.hpp"

namespace qhmet {
namespace {

// Frame with puncture 0 and z = e1: x(s) = e^s (cos phi, sin phi), phi = sqrt(r^2 - s^2).
// For r > pi the arc starts where phi = pi.
double s_min(double r) { return r > std::numbers::pi ? std::sqrt(r * r - std::numbers::pi * std::numbers::pi) : 0.0; }

Point frame_point(double r, double s) {
  const double phi = std::sqrt(std::max(0.0, (r - s) * (r + s)));
  const double m = std::exp(s);
  return Point::planar(m * std::cos(phi), m * std::sin(phi));
}

// angle(x(s), e1, 0); increases from its value at s_min(r) to pi at s = r.
double frame_angle(double r, double s) {
  return angle_at(frame_point(r, s), Point::planar(1.0, 0.0), Point::zero(2));
}

}  // namespace

AngleRange k_circle_angle_range(double r) {
  if (!(r > 0.0) || !std::isfinite(r)) throw RangeError("k-circle radius must be positive and finite");
  return {frame_angle(r, s_min(r)), std::numbers::pi};
}

Point k_circle_point(const DomainSpec& punctured_plane, const Point& z, double r, double angle) {
  const PuncturedSpace* ps = punctured_plane.get_if<PuncturedSpace>();
  if (ps == nullptr || ps->puncture.dim() != 2 || z.dim() != 2) {
    throw PreconditionError("k_circle_point needs a punctured plane");
  }
  const AngleRange range = k_circle_angle_range(r);
  if (!(angle >= range.lo && angle <= range.hi)) {
    throw RangeError("angle " + std::to_string(angle) + " is not realizable on the k-circle of radius " +
                     std::to_string(r));
  }
  const Point w = z - ps->puncture;
  if (norm(w) == 0.0) throw DomainError("z coincides with the puncture");

  double lo = s_min(r), hi = r;
  for (int it = 0; it < 200 && hi - lo > 1e-16 * std::max(1.0, r); ++it) {
    const double mid = 0.5 * (lo + hi);
    if (frame_angle(r, mid) < angle) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const Point f = frame_point(r, 0.5 * (lo + hi));
  // Undo the similarity: multiply by w as complex numbers, then translate.
  return Point::planar(ps->puncture.x() + f.x() * w.x() - f.y() * w.y(),
                       ps->puncture.y() + f.x() * w.y() + f.y() * w.x());
}

}  // namespace qhmet
