#include "qhmet/closed_form.hpp"

#include <cmath>
#include <numbers>

#include "qhmet/errors.hpp"

namespace qhmet {
namespace {

double interior_delta(const DomainSpec& domain, const Point& p) {
  const DistanceToBoundary d = delta(domain, p);
  if (!d.interior) throw DomainError("point " + to_string(p) + " is not interior to " + to_string(domain));
  return d.value;
}

// Both vectors nonzero: angle below this counts as aligned.
constexpr double kAlignTol = 1e-10;

}  // namespace

MetricValue j_metric(const DomainSpec& domain, const Point& x, const Point& y) {
  const double dx = interior_delta(domain, x);
  const double dy = interior_delta(domain, y);
  return {std::log1p(distance(x, y) / std::min(dx, dy)), MetricKind::j};
}

MetricValue k_punctured(const Point& x, const Point& y, const Point& puncture) {
  const double rx = distance(x, puncture);
  const double ry = distance(y, puncture);
  if (rx == 0.0 || ry == 0.0) throw DomainError("point coincides with the puncture");
  if (x == y) return {0.0, MetricKind::k};
  const double alpha = angle_at(x, puncture, y);
  return {std::hypot(alpha, std::log(rx / ry)), MetricKind::k};
}

MetricValue k_ball_radial(const Ball& ball, const Point& u, const Point& v) {
  const DomainSpec domain = DomainSpec::ball(ball.center, ball.radius);
  const double du = interior_delta(domain, u);
  const double dv = interior_delta(domain, v);
  const Point a = u - ball.center;
  const Point b = v - ball.center;
  if (norm(a) > 0.0 && norm(b) > 0.0 && vector_angle(a, b) > kAlignTol) {
    throw PreconditionError("k_ball_radial: points are not on a common radius");
  }
  return {std::fabs(std::log(du / dv)), MetricKind::k};
}

MetricValue k_ball_diameter(const Ball& ball, const Point& u, const Point& v) {
  const DomainSpec domain = DomainSpec::ball(ball.center, ball.radius);
  const double du = interior_delta(domain, u);
  const double dv = interior_delta(domain, v);
  const Point a = u - ball.center;
  const Point b = v - ball.center;
  if (norm(a) > 0.0 && norm(b) > 0.0 && vector_angle(a, b) < std::numbers::pi - kAlignTol) {
    throw PreconditionError("k_ball_diameter: center is not between the points on a diameter");
  }
  return {std::log(ball.radius / du) + std::log(ball.radius / dv), MetricKind::k};
}

BallChordData ball_chord_data(const Point& x, const Point& y) {
  const double nx = norm(x);
  const double ny = norm(y);
  if (!(nx < 1.0) || !(ny < 1.0)) throw DomainError("point outside the unit ball");
  const double t = std::sqrt((1.0 - nx) * (1.0 + nx) * (1.0 - ny) * (1.0 + ny));
  return {t, distance(x, y)};
}

double asinh_accurate(double x) {
  const double a = std::fabs(x);
  double r;
  if (a < 1e-2) {
    const double a2 = a * a;
    r = a * (1.0 + a2 * (-1.0 / 6.0 + a2 * (3.0 / 40.0 + a2 * (-5.0 / 112.0))));
  } else {
    r = std::log(a + std::sqrt(a * a + 1.0));
  }
  return std::copysign(r, x);
}

MetricValue rho_ball(const Point& x, const Point& y) {
  const BallChordData c = ball_chord_data(x, y);
  return {2.0 * asinh_accurate(c.chord / c.t), MetricKind::rho};
}

double tanh2_half_rho(const Point& x, const Point& y) {
  const BallChordData c = ball_chord_data(x, y);
  const double c2 = c.chord * c.chord;
  return c2 / (c2 + c.t * c.t);
}

double chord_bound(const Point& x, const Point& y) {
  const BallChordData c = ball_chord_data(x, y);
  return 2.0 * c.chord / (std::sqrt(c.chord * c.chord + c.t * c.t) + c.t);
}

double jung_radius(double diameter, int n) {
  if (!(diameter > 0.0) || n < 1) throw PreconditionError("jung_radius needs diameter > 0, n >= 1");
  return std::sqrt(static_cast<double>(n) / (2.0 * n + 2.0)) * diameter;
}

double h_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha <= std::numbers::pi)) throw RangeError("h_alpha: alpha outside (0, pi]");
  if (alpha < 1e-6) return 1.0 + alpha * (0.5 - alpha / 24.0);
  return alpha / std::log1p(2.0 * std::sin(0.5 * alpha));
}

double k_lower_bound(double t) {
  if (!(t >= 0.0 && t < 2.0)) throw RangeError("k_lower_bound: t outside [0, 2)");
  return -2.0 * std::log1p(-0.5 * t);
}

double j_lower_bound(double t) {
  if (!(t >= 0.0 && t < 2.0)) throw RangeError("j_lower_bound: t outside [0, 2)");
  return 2.0 * std::atanh(0.5 * t);
}

double enclosing_radius(const DomainSpec& domain) {
  if (!domain.is_bounded()) throw PreconditionError("lower bound needs a bounded domain");
  if (const Ball* b = domain.get_if<Ball>()) return b->radius;
  return jung_radius(diam(domain), static_cast<int>(domain.dim()));
}

double k_lower_bound_jung(const DomainSpec& domain, const Point& x, const Point& y) {
  const double r = enclosing_radius(domain);
  interior_delta(domain, x);
  interior_delta(domain, y);
  return k_lower_bound(distance(x, y) / r);
}

double j_lower_bound_jung(const DomainSpec& domain, const Point& x, const Point& y) {
  const double r = enclosing_radius(domain);
  interior_delta(domain, x);
  interior_delta(domain, y);
  return j_lower_bound(distance(x, y) / r);
}

double modulus_k(double t, double r) {
  if (!(t >= 0.0) || !(r > 0.0)) throw PreconditionError("modulus_k needs t >= 0, r > 0");
  return -2.0 * r * std::expm1(-0.5 * t);
}

double modulus_j(double t, double r) {
  if (!(t >= 0.0) || !(r > 0.0)) throw PreconditionError("modulus_j needs t >= 0, r > 0");
  return 2.0 * r * std::tanh(0.5 * t);
}

}  // namespace qhmet
