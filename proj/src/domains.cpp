#include "qhmet/domains.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "qhmet/errors.hpp"
#include "qhmet/simd/kernels.hpp"

namespace qhmet {
namespace {

constexpr double kInteriorTol = 1e-12;
constexpr std::size_t kArcSamples = 257;
constexpr std::size_t kGapSamples = 10000;

void require_planar(const Point& p) {
  if (p.dim() != 2) throw PreconditionError("planar domain queried with a non-planar point");
}

void require_dim(const Point& p, std::size_t n) {
  if (p.dim() != n) throw PreconditionError("point dimension does not match the domain");
}

// u^p for the exponents that occur in practice; integer p avoids pow().
double upow(double u, double p) {
  if (p == 0.0) return 1.0;
  if (p == 1.0) return u;
  if (p == 2.0) return u * u;
  if (p == 3.0) return u * u * u;
  if (p == 4.0) {
    const double u2 = u * u;
    return u2 * u2;
  }
  return std::pow(u, p);
}

struct ArcPoint {
  double x, y;
};

ArcPoint arc(double u, double p) { return {upow(u, p), upow(1.0 - u, p)}; }

double arc_f(double u, double p, double a, double b) {
  const ArcPoint q = arc(u, p);
  const double dx = q.x - a;
  const double dy = q.y - b;
  return dx * dx + dy * dy;
}

// First and second derivative of the squared distance along the arc.
void arc_derivs(double u, double p, double a, double b, double& f1, double& f2) {
  const double v = 1.0 - u;
  const ArcPoint q = arc(u, p);
  const double xp = p * upow(u, p - 1.0);
  const double yp = -p * upow(v, p - 1.0);
  const double xpp = p == 1.0 ? 0.0 : p * (p - 1.0) * upow(u, p - 2.0);
  const double ypp = p == 1.0 ? 0.0 : p * (p - 1.0) * upow(v, p - 2.0);
  f1 = 2.0 * ((q.x - a) * xp + (q.y - b) * yp);
  f2 = 2.0 * (xp * xp + yp * yp + (q.x - a) * xpp + (q.y - b) * ypp);
}

// Quadrant-reduced projection: a, b >= 0.
struct ArcSolution {
  double u;
  double f;
  bool converged;
};

ArcSolution dense_fallback(double p, double a, double b) {
  constexpr int kDense = 200000;
  double best_u = 0.0;
  double best_f = arc_f(0.0, p, a, b);
  for (int i = 1; i <= kDense; ++i) {
    const double u = static_cast<double>(i) / kDense;
    const double f = arc_f(u, p, a, b);
    if (f < best_f) {
      best_f = f;
      best_u = u;
    }
  }
  return {best_u, best_f, false};
}

ArcSolution solve_arc(const SuperellipseTable& t, double a, double b) {
  const double p = t.p;
  const auto hit = simd::nearest_sample(a, b, t.xs, t.ys);
  const std::size_t n = t.u.size();
  double lo = t.u[hit.index == 0 ? 0 : hit.index - 1];
  double hi = t.u[std::min(hit.index + 1, n - 1)];

  // Golden-section narrowing of the bracket around the sampled minimum.
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = arc_f(c, p, a, b);
  double fd = arc_f(d, p, a, b);
  for (int it = 0; it < 3; ++it) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = arc_f(c, p, a, b);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = arc_f(d, p, a, b);
    }
  }

  // Safeguarded Newton on f'(u) = 0 inside [lo, hi].
  double u = fc < fd ? c : d;
  bool converged = false;
  for (int it = 0; it < 60; ++it) {
    double f1 = 0.0;
    double f2 = 0.0;
    arc_derivs(u, p, a, b, f1, f2);
    if (f1 == 0.0) {
      converged = true;
      break;
    }
    if (f1 > 0.0) {
      hi = u;
    } else {
      lo = u;
    }
    const bool newton = std::isfinite(f2) && f2 > 0.0;
    double next = newton ? u - f1 / f2 : 0.5 * (lo + hi);
    // Distance error is second order in the parameter error.
    if (newton && std::fabs(next - u) <= 1e-12) {
      u = std::clamp(next, lo, hi);
      converged = true;
      break;
    }
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    u = next;
    if (hi - lo <= 1e-12) {
      converged = true;
      break;
    }
  }
  if (!converged) return dense_fallback(p, a, b);

  ArcSolution best{u, arc_f(u, p, a, b), true};
  for (double end : {0.0, 1.0}) {
    const double fe = arc_f(end, p, a, b);
    if (fe < best.f) best = {end, fe, true};
  }
  return best;
}

// |t|^s with root chains for the exponents the checks use.
double spow(double t, double s) {
  t = std::fabs(t);
  if (s == 0.5) return std::sqrt(t);
  if (s == 0.25) return std::sqrt(std::sqrt(t));
  if (s == 0.75) {
    const double r = std::sqrt(t);
    return r * std::sqrt(r);
  }
  return std::pow(t, s);
}

double superellipse_level(double s, const Point& p) { return spow(p[0], s) + spow(p[1], s); }

double diamond_delta(const Point& p) {
  return ((1.0 - std::fabs(p[0])) - std::fabs(p[1])) * simd::kInvSqrt2;
}

double ball_delta(const Ball& b, const Point& p) { return b.radius - distance(p, b.center); }

}  // namespace

Superellipse::Superellipse(double s) {
  if (!(s > 0.0 && s <= 1.0)) throw PreconditionError("superellipse exponent must lie in (0, 1]");
  auto t = std::make_shared<SuperellipseTable>();
  t->s = s;
  t->p = 1.0 / s;
  t->u.resize(kArcSamples);
  t->xs.resize(kArcSamples);
  t->ys.resize(kArcSamples);
  for (std::size_t i = 0; i < kArcSamples; ++i) {
    const double u = static_cast<double>(i) / static_cast<double>(kArcSamples - 1);
    const ArcPoint q = arc(u, t->p);
    t->u[i] = u;
    t->xs[i] = q.x;
    t->ys[i] = q.y;
  }
  table_ = std::move(t);
}

DomainSpec DomainSpec::ball(Point center, double radius) {
  if (center.dim() < 2) throw PreconditionError("ball center needs dimension >= 2");
  if (!(radius > 0.0) || !std::isfinite(radius)) throw PreconditionError("ball radius must be > 0");
  if (!center.is_finite()) throw PreconditionError("ball center must be finite");
  return DomainSpec(Ball{center, radius});
}

DomainSpec DomainSpec::unit_ball(std::size_t n) { return ball(Point::zero(n), 1.0); }

DomainSpec DomainSpec::punctured_space(Point puncture) {
  if (puncture.dim() < 2) throw PreconditionError("puncture needs dimension >= 2");
  return DomainSpec(PuncturedSpace{puncture});
}

DomainSpec DomainSpec::diamond() { return DomainSpec(Diamond{}); }

DomainSpec DomainSpec::superellipse(double s) { return DomainSpec(Superellipse(s)); }

DomainSpec DomainSpec::punctured(DomainSpec base, Point point) {
  if (!base.is_bounded()) throw PreconditionError("punctured domain needs a bounded base");
  if (!contains(base, point)) throw PreconditionError("puncture must lie inside the base domain");
  return DomainSpec(Punctured{std::make_shared<const DomainSpec>(std::move(base)), point});
}

DomainKind DomainSpec::kind() const { return static_cast<DomainKind>(v_.index()); }

std::size_t DomainSpec::dim() const {
  return std::visit(
      [](const auto& d) -> std::size_t {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Ball>) {
          return d.center.dim();
        } else if constexpr (std::is_same_v<T, PuncturedSpace>) {
          return d.puncture.dim();
        } else if constexpr (std::is_same_v<T, Punctured>) {
          return d.base->dim();
        } else {
          return 2;
        }
      },
      v_);
}

bool DomainSpec::is_bounded() const {
  if (kind() == DomainKind::punctured_space) return false;
  if (const auto* p = get_if<Punctured>()) return p->base->is_bounded();
  return true;
}

bool DomainSpec::is_convex() const {
  switch (kind()) {
    case DomainKind::ball:
    case DomainKind::diamond:
      return true;
    case DomainKind::superellipse:
      return std::get<Superellipse>(v_).s() == 1.0;
    default:
      return false;
  }
}

bool contains(const DomainSpec& domain, const Point& p) {
  return std::visit(
      [&](const auto& d) -> bool {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Ball>) {
          require_dim(p, d.center.dim());
          return ball_delta(d, p) > kInteriorTol;
        } else if constexpr (std::is_same_v<T, PuncturedSpace>) {
          require_dim(p, d.puncture.dim());
          return distance(p, d.puncture) > kInteriorTol;
        } else if constexpr (std::is_same_v<T, Diamond>) {
          require_planar(p);
          return diamond_delta(p) > kInteriorTol;
        } else if constexpr (std::is_same_v<T, Superellipse>) {
          require_planar(p);
          if (d.s() == 1.0) return diamond_delta(p) > kInteriorTol;
          return superellipse_level(d.s(), p) < 1.0 - kInteriorTol;
        } else {
          return contains(*d.base, p) && distance(p, d.point) > kInteriorTol;
        }
      },
      domain.variant());
}

DistanceToBoundary delta(const DomainSpec& domain, const Point& p) {
  if (!contains(domain, p)) return {0.0, false, Exactness::closed_form};
  return std::visit(
      [&](const auto& d) -> DistanceToBoundary {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Ball>) {
          return {ball_delta(d, p), true, Exactness::closed_form};
        } else if constexpr (std::is_same_v<T, PuncturedSpace>) {
          return {distance(p, d.puncture), true, Exactness::closed_form};
        } else if constexpr (std::is_same_v<T, Diamond>) {
          return {diamond_delta(p), true, Exactness::closed_form};
        } else if constexpr (std::is_same_v<T, Superellipse>) {
          if (d.s() == 1.0) return {diamond_delta(p), true, Exactness::closed_form};
          return {project_to_superellipse(d, p).dist, true, Exactness::projected};
        } else {
          const DistanceToBoundary base = delta(*d.base, p);
          const double to_point = distance(p, d.point);
          if (to_point < base.value) return {to_point, true, Exactness::closed_form};
          return base;
        }
      },
      domain.variant());
}

Projection project_to_superellipse(const Superellipse& curve, const Point& p) {
  require_planar(p);
  const SuperellipseTable& t = curve.table();
  const double a = std::fabs(p[0]);
  const double b = std::fabs(p[1]);
  const ArcSolution sol = solve_arc(t, a, b);
  const ArcPoint q = arc(sol.u, t.p);
  return {Point{std::copysign(q.x, p[0]), std::copysign(q.y, p[1])}, std::sqrt(sol.f),
          sol.converged};
}

Projection project_to_superellipse(double s, const Point& p) {
  return project_to_superellipse(Superellipse(s), p);
}

double diam(const DomainSpec& domain) {
  return std::visit(
      [](const auto& d) -> double {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Ball>) {
          return 2.0 * d.radius;
        } else if constexpr (std::is_same_v<T, PuncturedSpace>) {
          return std::numeric_limits<double>::infinity();
        } else if constexpr (std::is_same_v<T, Punctured>) {
          return diam(*d.base);
        } else {
          // Diamond and every superellipse: the axis vertices +-e1 realize it.
          return 2.0;
        }
      },
      domain.variant());
}

void sample_boundary(const DomainSpec& domain, std::size_t n, std::vector<double>& xs,
                     std::vector<double>& ys) {
  xs.clear();
  ys.clear();
  xs.reserve(n);
  ys.reserve(n);
  std::visit(
      [&](const auto& d) {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Ball>) {
          if (d.center.dim() != 2) throw PreconditionError("boundary sampling is planar only");
          for (std::size_t k = 0; k < n; ++k) {
            const double th = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
            xs.push_back(d.center[0] + d.radius * std::cos(th));
            ys.push_back(d.center[1] + d.radius * std::sin(th));
          }
        } else if constexpr (std::is_same_v<T, Diamond> || std::is_same_v<T, Superellipse>) {
          double p = 1.0;
          if constexpr (std::is_same_v<T, Superellipse>) p = d.table().p;
          const std::size_t per = std::max<std::size_t>(n / 4, 2);
          const double sx[4] = {1.0, -1.0, -1.0, 1.0};
          const double sy[4] = {1.0, 1.0, -1.0, -1.0};
          for (int quad = 0; quad < 4; ++quad) {
            for (std::size_t k = 0; k < per; ++k) {
              const double u = static_cast<double>(k) / static_cast<double>(per);
              const ArcPoint q = arc(quad % 2 == 0 ? u : 1.0 - u, p);
              xs.push_back(sx[quad] * q.x);
              ys.push_back(sy[quad] * q.y);
            }
          }
        } else if constexpr (std::is_same_v<T, Punctured>) {
          sample_boundary(*d.base, n, xs, ys);
        } else {
          throw PreconditionError("unbounded domain has no boundary curve to sample");
        }
      },
      domain.variant());
}

BoundaryGap dist_to_outer_boundary(const DomainSpec& inner, const DomainSpec& outer) {
  const DomainKind ki = inner.kind();
  const DomainKind ko = outer.kind();
  if (ki == DomainKind::ball && ko == DomainKind::ball) {
    const Ball& bi = *inner.get_if<Ball>();
    const Ball& bo = *outer.get_if<Ball>();
    require_dim(bi.center, bo.center.dim());
    const double gap = bo.radius - bi.radius - distance(bi.center, bo.center);
    return {std::max(gap, 0.0), Exactness::closed_form};
  }
  if (ki == DomainKind::ball && ko == DomainKind::diamond) {
    // The diamond is convex, so the gap is attained along the center's nearest-point direction.
    const Ball& bi = *inner.get_if<Ball>();
    const DistanceToBoundary dc = delta(outer, bi.center);
    const double gap = dc.interior ? dc.value - bi.radius : 0.0;
    return {std::max(gap, 0.0), Exactness::closed_form};
  }
  const bool supported = (ki == DomainKind::ball && ko == DomainKind::diamond) ||
                         (ki == DomainKind::diamond && ko == DomainKind::ball) ||
                         (ki == DomainKind::superellipse && ko == DomainKind::diamond);
  if (!supported) {
    throw UnsupportedPairError("dist_to_outer_boundary: unsupported pair " + to_string(inner) +
                               " in " + to_string(outer));
  }
  std::vector<double> ax, ay, bx, by;
  sample_boundary(inner, kGapSamples, ax, ay);
  sample_boundary(outer, kGapSamples, bx, by);
  return {simd::min_pairwise_distance(ax, ay, bx, by), Exactness::projected};
}

std::optional<Box> bounding_box(const DomainSpec& domain) {
  return std::visit(
      [](const auto& d) -> std::optional<Box> {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Ball>) {
          if (d.center.dim() != 2) return std::nullopt;
          return Box{d.center[0] - d.radius, d.center[0] + d.radius, d.center[1] - d.radius,
                     d.center[1] + d.radius};
        } else if constexpr (std::is_same_v<T, PuncturedSpace>) {
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, Punctured>) {
          return bounding_box(*d.base);
        } else {
          return Box{-1.0, 1.0, -1.0, 1.0};
        }
      },
      domain.variant());
}

}  // namespace qhmet
