#include "checks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qhmet/closed_form.hpp"
#include "qhmet/errors.hpp"
#include "qhmet/qh_solver.hpp"

namespace qhmet::detail {
namespace {

constexpr double kExactTol = 1e-12;
constexpr double kLemmaTol = 1e-9;
// Projected superellipse delta is accurate to 1e-10.
constexpr double kProjectedTol = 1e-9;
// Numeric checks reject points closer than this to the boundary.
constexpr double kMinDelta = 1e-4;
constexpr double kSqrt2 = std::numbers::sqrt2;

Part exact(std::string_view name, double margin, double tol = kExactTol) { return {name, margin, tol, false}; }

Part numeric(std::string_view name, double margin, double error_sum) {
  return {name, margin, numeric_tolerance(error_sum), true};
}

void put(std::vector<NamedValue>& w, std::string name, const Point& p) {
  w.push_back({name + "_1", p.x()});
  w.push_back({name + "_2", p.y()});
}

void put(std::vector<NamedValue>& w, std::string name, double v) { w.push_back({std::move(name), v}); }

double j_of(const DomainSpec& d, const Point& x, const Point& y) { return j_metric(d, x, y).value; }

double delta_of(const DomainSpec& d, const Point& p) { return delta(d, p).value; }

const DomainSpec& unit_disk() {
  static const DomainSpec d = DomainSpec::unit_ball(2);
  return d;
}

const DomainSpec& diamond() {
  static const DomainSpec d = DomainSpec::diamond();
  return d;
}

const DomainSpec& superellipse(double s) {
  static const DomainSpec half = DomainSpec::superellipse(0.5);
  static const DomainSpec three_quarters = DomainSpec::superellipse(0.75);
  if (s == 0.5) return half;
  if (s == 0.75) return three_quarters;
  throw PreconditionError("no cached superellipse for this exponent");
}

Point polar(double r, double phi) { return Point::planar(r * std::cos(phi), r * std::sin(phi)); }

// k <= (1+s) j on the unit disk for x, y in B(s).
Evaluation ball_upper(std::uint64_t index, Rng& rng) {
  static constexpr double kS[] = {0.25, 0.5, 0.75};
  const double s = kS[index % 3];
  const Point x = sample_in_disk(Point::zero(2), s, rng);
  const Point y = sample_in_disk(Point::zero(2), s, rng);
  const KValue k = k_solve(unit_disk(), x, y, check_mesh_params());
  const double j = j_of(unit_disk(), x, y);
  Evaluation e;
  e.parts = {numeric("upper", (1.0 + s) * j - k.value, k.error), numeric("j_le_k", k.value - j, k.error)};
  put(e.witness, "s", s);
  put(e.witness, "x", x);
  put(e.witness, "y", y);
  put(e.witness, "k", k.value);
  put(e.witness, "k_error", k.error);
  put(e.witness, "j", j);
  return e;
}

// k_G <= (1+s) j_G on [w, w0] near w, G a random ball, k exact on the radius.
Evaluation ball_radial(std::uint64_t, Rng& rng) {
  const Point c = Point::planar(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
  const double radius = rng.uniform(0.5, 2.0);
  const Ball ball{c, radius};
  const DomainSpec g = DomainSpec::ball(c, radius);
  const Point w = sample_in_disk(c, radius, rng);
  Point dir = w - c;
  if (norm(dir) == 0.0) dir = polar(1.0, rng.angle());
  const Point w0 = c + (radius / norm(dir)) * dir;
  const double s = rng.uniform(0.01, 0.99);
  // Points at fraction a of delta(w) along [w, w0] lie in B(w, s delta(w)) when a < s.
  const Point x = w + (s * rng.uniform()) * (w0 - w);
  const Point y = w + (s * rng.uniform()) * (w0 - w);
  const double k = k_ball_radial(ball, x, y).value;
  const double j = j_of(g, x, y);
  Evaluation e;
  e.parts = {exact("upper", (1.0 + s) * j - k)};
  put(e.witness, "center", c);
  put(e.witness, "radius", radius);
  put(e.witness, "s", s);
  put(e.witness, "x", x);
  put(e.witness, "y", y);
  put(e.witness, "k", k);
  put(e.witness, "j", j);
  return e;
}

// Equal-k points on a circle around z: larger angle at z gives larger |x - z|.
Evaluation circle_monotone(std::uint64_t, Rng& rng) {
  const Point p = Point::planar(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
  const DomainSpec plane = DomainSpec::punctured_space(p);
  const Point z = p + polar(rng.log_uniform(0.1, 10.0), rng.angle());
  const double r = rng.log_uniform(0.05, 6.0);
  const AngleRange range = k_circle_angle_range(r);
  double a1 = rng.uniform(range.lo, range.hi);
  double a2 = rng.uniform(range.lo, range.hi);
  // Pairs closer than 1e-3 in angle are redrawn, so margins stay resolvable.
  while (std::fabs(a1 - a2) < 1e-3 * (range.hi - range.lo)) a2 = rng.uniform(range.lo, range.hi);
  if (a1 > a2) std::swap(a1, a2);
  const Point x = k_circle_point(plane, z, r, a1);
  const Point y = k_circle_point(plane, z, r, a2);
  const double dz = distance(z, p);
  const double scale = std::max(1.0, r);
  Evaluation e;
  e.parts = {exact("farther", distance(y, z) - distance(x, z), kLemmaTol),
             exact("x_on_circle", -std::fabs(k_punctured(x, z, p).value - r), kLemmaTol * scale),
             exact("y_on_circle", -std::fabs(k_punctured(y, z, p).value - r), kLemmaTol * scale),
             exact("x_outside", distance(x, p) - dz, kExactTol * dz),
             exact("y_outside", distance(y, p) - dz, kExactTol * dz)};
  put(e.witness, "puncture", p);
  put(e.witness, "z", z);
  put(e.witness, "r", r);
  put(e.witness, "angle_x", a1);
  put(e.witness, "angle_y", a2);
  put(e.witness, "x", x);
  put(e.witness, "y", y);
  return e;
}

// k <= h(alpha) j <= (1 + alpha) j in the punctured plane when angle(x,0,y) <= alpha.
Evaluation angular(std::uint64_t index, Rng& rng) {
  double alpha = std::numbers::pi;
  Point x = Point::planar(1.0, 0.0), y = Point::planar(-1.0, 0.0);
  if (index > 0) {
    alpha = std::numbers::pi * static_cast<double>(1 + index % 64) / 64.0;
    const double rx = rng.log_uniform(std::exp(-3.0), std::exp(3.0));
    double ry = rng.log_uniform(std::exp(-3.0), std::exp(3.0));
    double theta = alpha * rng.uniform();
    // Every eighth sample sits on the extremal configuration |x| = |y|, angle = alpha.
    if (index % 8 == 0) {
      ry = rx;
      theta = alpha;
    }
    const double phi = rng.angle();
    const double sign = rng.uniform() < 0.5 ? -1.0 : 1.0;
    x = polar(rx, phi);
    y = polar(ry, phi + sign * theta);
  }
  const Point origin = Point::zero(2);
  const double k = k_punctured(x, y, origin).value;
  const double j = j_of(DomainSpec::punctured_space(origin), x, y);
  const double h = h_alpha(alpha);
  Evaluation e;
  e.parts = {exact("linear", (1.0 + alpha) * j - k), exact("sharp", h * j - k), exact("h_le_linear", (1.0 + alpha - h) * j)};
  put(e.witness, "alpha", alpha);
  put(e.witness, "x", x);
  put(e.witness, "y", y);
  put(e.witness, "k", k);
  put(e.witness, "j", j);
  put(e.witness, "h", h);
  return e;
}

// k <= (1+eps) j for y inside B(|x|/t) or outside closed B(t|x|), balls centered at 0.
Evaluation radial(std::uint64_t index, Rng& rng) {
  static constexpr double kEps[] = {0.5, 1.0, 2.0};
  const double eps = kEps[index % 3];
  const double t = std::exp((1.0 + 1.0 / eps) * std::log(3.0));
  const double rx = rng.log_uniform(std::exp(-2.0), std::exp(2.0));
  const bool inner = (index / 3) % 2 == 0;
  const double ry = inner ? rx / t * rng.uniform(1e-3, 1.0) : rx * t * std::exp(rng.uniform(1e-9, 3.0));
  const Point x = polar(rx, rng.angle());
  const Point y = polar(ry, rng.angle());
  const Point origin = Point::zero(2);
  const double k = k_punctured(x, y, origin).value;
  const double j = j_of(DomainSpec::punctured_space(origin), x, y);
  Evaluation e;
  e.parts = {exact("upper", (1.0 + eps) * j - k)};
  put(e.witness, "eps", eps);
  put(e.witness, "t", t);
  put(e.witness, "x", x);
  put(e.witness, "y", y);
  put(e.witness, "k", k);
  put(e.witness, "j", j);
  return e;
}

// Every tenth sample is antipodal, the equality case of the ball bounds.
Point partner(const DomainSpec& d, std::uint64_t index, const Point& x, Rng& rng, double min_delta) {
  return index % 10 == 0 ? -x : sample_in(d, rng, min_delta);
}

Evaluation k_lower_ball(std::uint64_t index, Rng& rng) {
  const Point x = sample_in(unit_disk(), rng, kMinDelta);
  const Point y = partner(unit_disk(), index, x, rng, kMinDelta);
  const KValue k = k_solve(unit_disk(), x, y, check_mesh_params());
  const double d = distance(x, y);
  const double lb = k_lower_bound(d);
  Evaluation e;
  e.parts = {numeric("lower", k.value - lb, k.error), exact("euclid", lb - d)};
  put(e.witness, "x", x);
  put(e.witness, "y", y);
  put(e.witness, "k", k.value);
  put(e.witness, "k_error", k.error);
  put(e.witness, "bound", lb);
  return e;
}

const DomainSpec& jung_domain(std::uint64_t index) { return index % 2 == 0 ? diamond() : superellipse(0.5); }

Evaluation k_lower_jung(std::uint64_t index, Rng& rng) {
  const DomainSpec& g = jung_domain(index);
  const Point x = sample_in(g, rng, kMinDelta);
  const Point y = sample_in(g, rng, kMinDelta);
  const KValue k = k_solve(g, x, y, check_mesh_params());
  const double lb = k_lower_bound_jung(g, x, y);
  const double t = distance(x, y) / enclosing_radius(g);
  Evaluation e;
  e.parts = {numeric("lower", k.value - lb, k.error), exact("euclid", lb - t)};
  put(e.witness, "s", index % 2 == 0 ? 1.0 : 0.5);
  put(e.witness, "x", x);
  put(e.witness, "y", y);
  put(e.witness, "k", k.value);
  put(e.witness, "k_error", k.error);
  put(e.witness, "bound", lb);
  return e;
}

Evaluation j_lower_ball(std::uint64_t index, Rng& rng) {
  const Point x = sample_in(unit_disk(), rng);
  const Point y = partner(unit_disk(), index, x, rng, 0.0);
  const double j = j_of(unit_disk(), x, y);
  const double d = distance(x, y);
  const double lb = j_lower_bound(d);
  Evaluation e;
  e.parts = {exact("lower", j - lb), exact("euclid", lb - d)};
  put(e.witness, "x", x);
  put(e.witness, "y", y);
  put(e.witness, "j", j);
  put(e.witness, "bound", lb);
  return e;
}

Evaluation j_lower_jung(std::uint64_t index, Rng& rng) {
  const DomainSpec& g = jung_domain(index);
  const Point x = sample_in(g, rng);
  const Point y = sample_in(g, rng);
  const double j = j_of(g, x, y);
  const double lb = j_lower_bound_jung(g, x, y);
  const double t = distance(x, y) / enclosing_radius(g);
  Evaluation e;
  e.parts = {exact("lower", j - lb), exact("euclid", lb - t)};
  put(e.witness, "s", index % 2 == 0 ? 1.0 : 0.5);
  put(e.witness, "x", x);
  put(e.witness, "y", y);
  put(e.witness, "j", j);
  put(e.witness, "bound", lb);
  return e;
}

// delta_disk >= sqrt2 delta_diamond; every tenth sample lies on an axis near a
// vertex, where the two sides agree.
Evaluation diamond_delta(std::uint64_t index, Rng& rng) {
  Point w;
  if (index % 10 == 0) {
    const double u = rng.log_uniform(1e-4, 0.1);
    const std::uint64_t axis = (index / 10) % 4;
    const double v = (axis < 2 ? 1.0 : -1.0) * (1.0 - u);
    w = axis % 2 == 0 ? Point::planar(v, 0.0) : Point::planar(0.0, v);
  } else {
    w = sample_in(diamond(), rng);
  }
  const double dd = delta_of(unit_disk(), w);
  const double dg = delta_of(diamond(), w);
  Evaluation e;
  e.parts = {exact("delta", dd - kSqrt2 * dg)};
  put(e.witness, "w", w);
  put(e.witness, "delta_disk", dd);
  put(e.witness, "delta_diamond", dg);
  put(e.witness, "ratio", dd / dg);
  return e;
}

Evaluation diamond_k(std::uint64_t, Rng& rng) {
  const Point x = sample_in(diamond(), rng, kMinDelta);
  const Point y = sample_in(diamond(), rng, kMinDelta);
  const KValue kd = k_solve(diamond(), x, y, check_mesh_params());
  const KValue kb = k_solve(unit_disk(), x, y, check_mesh_params());
  Evaluation e;
  e.parts = {numeric("k", kd.value - kSqrt2 * kb.value, kd.error + kSqrt2 * kb.error)};
  put(e.witness, "x", x);
  put(e.witness, "y", y);
  put(e.witness, "k_diamond", kd.value);
  put(e.witness, "k_disk", kb.value);
  put(e.witness, "k_error", kd.error + kb.error);
  return e;
}

// k_s >= 2^(1/s-1) k_diamond together with the pointwise delta comparison it rests on.
Evaluation superellipse_k(std::uint64_t index, Rng& rng) {
  const double s = index % 2 == 0 ? 0.5 : 0.75;
  const DomainSpec& g = superellipse(s);
  const double c = std::exp2(1.0 / s - 1.0);
  const Point x = sample_in(g, rng, kMinDelta);
  const Point y = sample_in(g, rng, kMinDelta);
  // The origin is the equality point of the delta comparison.
  const Point w = index % 10 == 0 ? Point::zero(2) : sample_in(g, rng);
  const KValue ks = k_solve(g, x, y, check_mesh_params());
  const KValue kd = k_solve(diamond(), x, y, check_mesh_params());
  const auto delta_part = [&](std::string_view name, const Point& p) {
    return exact(name, delta_of(diamond(), p) - c * delta_of(g, p), kProjectedTol);
  };
  Evaluation e;
  e.parts = {numeric("k", ks.value - c * kd.value, ks.error + c * kd.error), delta_part("delta_x", x),
             delta_part("delta_y", y), delta_part("delta_w", w)};
  put(e.witness, "s", s);
  put(e.witness, "x", x);
  put(e.witness, "y", y);
  put(e.witness, "k_superellipse", ks.value);
  put(e.witness, "k_diamond", kd.value);
  put(e.witness, "k_error", ks.error + kd.error);
  return e;
}

// A random ball G1 inside G2, alternating between G2 = unit disk and G2 = diamond.
struct Nested {
  DomainSpec inner;
  const DomainSpec* outer;
  double c;
  Point center;
  double radius;
};

Nested nested_pair(std::uint64_t index, Rng& rng) {
  Point center;
  double radius;
  const DomainSpec* outer;
  if (index % 2 == 0) {
    outer = &unit_disk();
    radius = rng.uniform(0.1, 0.9);
    center = sample_in_disk(Point::zero(2), 1.0 - radius, rng);
  } else {
    outer = &diamond();
    center = sample_in(diamond(), rng, 0.02);
    radius = delta_of(diamond(), center) * rng.uniform(0.2, 1.0);
  }
  DomainSpec inner = DomainSpec::ball(center, radius);
  const double gap = dist_to_outer_boundary(inner, *outer).value;
  const double c = 1.0 + 2.0 * gap / diam(inner);
  return {std::move(inner), outer, c, center, radius};
}

void put_nested(Evaluation& e, const Nested& n, std::uint64_t index) {
  put(e.witness, "outer_is_diamond", index % 2 == 0 ? 0.0 : 1.0);
  put(e.witness, "center", n.center);
  put(e.witness, "radius", n.radius);
  put(e.witness, "c", n.c);
}

Evaluation nested_j(std::uint64_t index, Rng& rng) {
  const Nested n = nested_pair(index, rng);
  const Point x = sample_in(n.inner, rng);
  const Point y = sample_in(n.inner, rng);
  const double j1 = j_of(n.inner, x, y), j2 = j_of(*n.outer, x, y);
  Evaluation e;
  e.parts = {exact("j", j1 - n.c * j2)};
  put_nested(e, n, index);
  put(e.witness, "x", x);
  put(e.witness, "y", y);
  put(e.witness, "j_inner", j1);
  put(e.witness, "j_outer", j2);
  return e;
}

Evaluation nested_k(std::uint64_t index, Rng& rng) {
  const Nested n = nested_pair(index, rng);
  const Point x = sample_in(n.inner, rng, kMinDelta);
  const Point y = sample_in(n.inner, rng, kMinDelta);
  const KValue k1 = k_solve(n.inner, x, y, check_mesh_params());
  const KValue k2 = k_solve(*n.outer, x, y, check_mesh_params());
  Evaluation e;
  e.parts = {numeric("k", k1.value - n.c * k2.value, k1.error + n.c * k2.error)};
  put_nested(e, n, index);
  put(e.witness, "x", x);
  put(e.witness, "y", y);
  put(e.witness, "k_inner", k1.value);
  put(e.witness, "k_outer", k2.value);
  put(e.witness, "k_error", k1.error + k2.error);
  return e;
}

// Concentric balls with c = R/r, plus the identity 1 + 2 gap/diam = R/r.
Evaluation concentric(std::uint64_t, Rng& rng) {
  const Point center = Point::planar(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
  const double r = rng.uniform(0.2, 1.0);
  const double big = r * rng.uniform(1.05, 4.0);
  const DomainSpec inner = DomainSpec::ball(center, r);
  const DomainSpec outer = DomainSpec::ball(center, big);
  const double c = big / r;
  const double c_general = 1.0 + 2.0 * dist_to_outer_boundary(inner, outer).value / diam(inner);
  const Point x = sample_in(inner, rng, kMinDelta);
  const Point y = sample_in(inner, rng, kMinDelta);
  const KValue k1 = k_solve(inner, x, y, check_mesh_params());
  const KValue k2 = k_solve(outer, x, y, check_mesh_params());
  const double j1 = j_of(inner, x, y), j2 = j_of(outer, x, y);
  Evaluation e;
  e.parts = {numeric("k", k1.value - c * k2.value, k1.error + c * k2.error), exact("j", j1 - c * j2),
             exact("constant_identity", -std::fabs(c_general - c))};
  put(e.witness, "center", center);
  put(e.witness, "r", r);
  put(e.witness, "R", big);
  put(e.witness, "x", x);
  put(e.witness, "y", y);
  put(e.witness, "k_inner", k1.value);
  put(e.witness, "k_outer", k2.value);
  put(e.witness, "k_error", k1.error + k2.error);
  return e;
}

// Domains for the axiom suite: disk, diamond, superellipse(1/2), plane punctured
// at 0 (points drawn from [-3,3]^2), unit disk punctured at (0.3, 0.1).
Evaluation axioms(std::uint64_t index, Rng& rng) {
  static const DomainSpec plane = DomainSpec::punctured_space(Point::zero(2));
  static const DomainSpec box_ball = DomainSpec::ball(Point::zero(2), 3.0);
  static const DomainSpec holed = DomainSpec::punctured(DomainSpec::unit_ball(2), Point::planar(0.3, 0.1));
  const int which = static_cast<int>(index % 5);
  const DomainSpec* g = nullptr;
  switch (which) {
    case 0: g = &unit_disk(); break;
    case 1: g = &diamond(); break;
    case 2: g = &superellipse(0.5); break;
    case 3: g = &plane; break;
    default: g = &holed; break;
  }
  const DomainSpec& sampler = which == 3 ? box_ball : *g;
  Point pts[3];
  for (Point& p : pts) {
    do {
      p = sample_in(sampler, rng);
    } while (!contains(*g, p));
  }
  const Point &x = pts[0], &y = pts[1], &z = pts[2];
  Evaluation e;
  const auto add = [&](std::string_view triangle, std::string_view symmetry, std::string_view identity,
                       std::string_view positive, auto metric) {
    const double xy = metric(x, y), yz = metric(y, z), xz = metric(x, z);
    e.parts.push_back(exact(triangle, xy + yz - xz));
    e.parts.push_back(exact(symmetry, -std::fabs(xy - metric(y, x))));
    e.parts.push_back(exact(identity, -std::fabs(metric(x, x))));
    // Distinct points have positive distance.
    e.parts.push_back(exact(positive, x == y ? 0.0 : (xy > 0.0 ? xy : -1.0)));
  };
  add("j.triangle", "j.symmetry", "j.identity", "j.positive",
      [&](const Point& a, const Point& b) { return j_of(*g, a, b); });
  if (which == 0) {
    add("rho.triangle", "rho.symmetry", "rho.identity", "rho.positive",
        [](const Point& a, const Point& b) { return rho_ball(a, b).value; });
  }
  if (which == 3) {
    add("k.triangle", "k.symmetry", "k.identity", "k.positive",
        [](const Point& a, const Point& b) { return k_punctured(a, b, Point::zero(2)).value; });
  }
  put(e.witness, "domain", which);
  put(e.witness, "x", x);
  put(e.witness, "y", y);
  put(e.witness, "z", z);
  return e;
}

// j_D >= j_G for D inside G.
Evaluation monotone(std::uint64_t index, Rng& rng) {
  const int which = static_cast<int>(index % 5);
  DomainSpec inner = unit_disk(), outer = unit_disk();
  switch (which) {
    case 0:
      inner = diamond();
      break;
    case 1:
      inner = superellipse(0.5);
      outer = diamond();
      break;
    case 2: {
      const double r = rng.uniform(0.05, 0.95);
      inner = DomainSpec::ball(sample_in_disk(Point::zero(2), 1.0 - r, rng), r);
      break;
    }
    case 3:
      inner = DomainSpec::punctured(unit_disk(), sample_in(unit_disk(), rng, 1e-3));
      break;
    default:
      outer = DomainSpec::punctured_space(polar(rng.uniform(1.0, 3.0), rng.angle()));
      break;
  }
  const Point x = sample_in(inner, rng);
  const Point y = sample_in(inner, rng);
  const double jd = j_of(inner, x, y), jg = j_of(outer, x, y);
  Evaluation e;
  e.parts = {exact("j", jd - jg)};
  put(e.witness, "pair", which);
  put(e.witness, "x", x);
  put(e.witness, "y", y);
  put(e.witness, "j_inner", jd);
  put(e.witness, "j_outer", jg);
  return e;
}

constexpr std::string_view kNumericNote =
    "k from the numeric solver (h = 0.3, relax_tol = 1e-4); points with delta < 1e-4 are rejected; "
    "tolerance per sample = 2 * summed error estimates + 1e-9, capped at 5e-3";

}  // namespace

double numeric_tolerance(double error_sum) { return std::min(5e-3, 2.0 * error_sum + 1e-9); }

KValue k_solve(const DomainSpec& domain, const Point& x, const Point& y, const MeshParams& params) {
  const GeodesicResult r = k_numeric(domain, x, y, params);
  return {r.value, r.error_estimate};
}

const std::vector<CheckDef>& sampled_checks() {
  static const std::vector<CheckDef> defs = {
      {"axioms", axioms, "j on disk, diamond, superellipse(0.5), punctured plane, punctured disk; rho on the disk; "
                         "k on the punctured plane"},
      {"cor4.5", concentric, kNumericNote},
      {"lem2.5", circle_monotone, "points built on k-circles of planes punctured at random points"},
      {"monotonicity", monotone, "j only"},
      {"thm2.3", ball_upper, kNumericNote},
      {"thm2.3.radial", ball_radial, "k exact along the radius"},
      {"thm2.6.angular", angular, "k by the punctured-space closed form; sample 0 is x = e1, y = -e1, alpha = pi"},
      {"thm2.6.radial", radial, "the two balls are read as centered at the origin"},
      {"thm3.3", k_lower_ball, kNumericNote},
      {"thm3.3.jung", k_lower_jung, kNumericNote},
      {"thm3.4", j_lower_ball, "every tenth sample has y = -x"},
      {"thm3.4.jung", j_lower_jung, "diamond and superellipse(0.5), radius from the Jung bound"},
      {"thm4.1.delta", diamond_delta, "every tenth sample lies on an axis within 0.1 of a vertex"},
      {"thm4.1.k", diamond_k, kNumericNote},
      {"thm4.2", superellipse_k, kNumericNote},
      {"thm4.4.j", nested_j, "balls inside the unit disk or the diamond"},
      {"thm4.4.k", nested_k, kNumericNote},
  };
  return defs;
}

}  // namespace qhmet::detail
