#pragma once

#include "qhmet/domains.hpp"
#include "qhmet/point.hpp"

namespace qhmet {

enum class MetricKind { j, k, rho, bound };

struct MetricValue {
  double value = 0.0;
  MetricKind kind = MetricKind::j;
};

/// Distance ratio metric j_G(x,y) = log(1 + |x-y| / min(delta(x), delta(y))).
/// Throws DomainError when x or y is not interior.
MetricValue j_metric(const DomainSpec& domain, const Point& x, const Point& y);

/// Quasihyperbolic distance of R^n minus {puncture}: sqrt(alpha^2 + log^2(|x-p|/|y-p|))
/// with alpha the angle at the puncture (Martin-Osgood).
MetricValue k_punctured(const Point& x, const Point& y, const Point& puncture);

/// k of a ball for two points on one radius: |log(delta(u)/delta(v))|.
/// Throws PreconditionError when u, v are not on a common radius.
MetricValue k_ball_radial(const Ball& ball, const Point& u, const Point& v);

/// k of a ball for two points on a diameter with the center between them;
/// the diameter is a geodesic, so k(u,c) + k(c,v).
MetricValue k_ball_diameter(const Ball& ball, const Point& u, const Point& v);

/// t = sqrt((1-|x|^2)(1-|y|^2)) and the chord |x-y| of two points of the unit ball.
struct BallChordData {
  double t = 1.0;
  double chord = 0.0;
};
BallChordData ball_chord_data(const Point& x, const Point& y);

/// Hyperbolic metric of the unit ball, 2 arsinh(|x-y|/t).
MetricValue rho_ball(const Point& x, const Point& y);

/// tanh^2(rho/2) = |x-y|^2 / (|x-y|^2 + t^2), evaluated from the chord data.
double tanh2_half_rho(const Point& x, const Point& y);

/// 2 tanh(rho/4) = 2|x-y| / (sqrt(|x-y|^2 + t^2) + t), an upper bound for |x-y|.
double chord_bound(const Point& x, const Point& y);

/// arsinh with a series branch near zero.
double asinh_accurate(double x);

/// Jung radius sqrt(n/(2n+2)) * diameter.
double jung_radius(double diameter, int n);

/// alpha / log(1 + 2 sin(alpha/2)) on (0, pi]; a series near 0 where the
/// quotient tends to 1. Throws RangeError outside (0, pi].
double h_alpha(double alpha);

/// 2 log(2/(2-t)) for t in [0, 2): the k lower bound in units of the
/// enclosing radius.
double k_lower_bound(double t);
/// log((2+t)/(2-t)) = 2 artanh(t/2) for t in [0, 2).
double j_lower_bound(double t);

/// Radius used by the bounded-domain lower bounds: the ball's own radius for
/// a ball, the Jung radius of the diameter otherwise.
double enclosing_radius(const DomainSpec& domain);

/// k_G(x,y) >= 2 log(2/(2-t)), t = |x-y|/r with r from enclosing_radius().
double k_lower_bound_jung(const DomainSpec& domain, const Point& x, const Point& y);
/// j_G(x,y) >= log((2+t)/(2-t)).
double j_lower_bound_jung(const DomainSpec& domain, const Point& x, const Point& y);

/// Moduli of continuity, the inverses of the lower bounds:
/// 2r(1 - e^{-t/2}) and 2r tanh(t/2).
double modulus_k(double t, double r);
double modulus_j(double t, double r);

}  // namespace qhmet
