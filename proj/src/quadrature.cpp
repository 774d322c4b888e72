#include <cmath>
#include <limits>

#include "qhmet/errors.hpp"
#include "qhmet/qh_solver.hpp"
#include "solver_detail.hpp"

namespace qhmet {
namespace detail {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Integrand over t in [0, 1]: |b - a| / delta(a + t (b - a)).
struct Integrand {
  const DomainSpec& domain;
  const Point& a;
  Point d;
  double len;

  // Returns delta or 0 outside.
  double delta_at(double t) const { return delta_or_zero(domain, a + t * d); }
};

// Adaptive Simpson on [t0, t1] with samples f0, fm, f1 (values len/delta) and
// Simpson estimate `whole`. `certified` means the parent disk around its
// midpoint already contains [t0, t1]. Sets ok=false when containment fails.
double simpson(const Integrand& g, double t0, double t1, double f0, double fm, double f1, double whole,
               double tol, int depth, int max_depth, bool certified, bool& ok) {
  // delta(mid) > half the piece length certifies the piece.
  if (!certified && fm * (t1 - t0) < 2.0) certified = true;
  const double tm = 0.5 * (t0 + t1);
  const double dl = g.delta_at(0.5 * (t0 + tm));
  const double dr = g.delta_at(0.5 * (tm + t1));
  if (dl <= 0.0 || dr <= 0.0) {
    ok = false;
    return kInf;
  }
  const double fl = g.len / dl;
  const double fr = g.len / dr;
  const double h6 = (t1 - t0) / 12.0;
  const double left = h6 * (f0 + 4.0 * fl + fm);
  const double right = h6 * (fm + 4.0 * fr + f1);
  const double diff = left + right - whole;
  if (certified && std::fabs(diff) <= 15.0 * tol) return left + right + diff / 15.0;
  if (depth >= max_depth) {
    if (certified) return left + right + diff / 15.0;
    ok = false;
    return kInf;
  }
  const double l = simpson(g, t0, tm, f0, fl, fm, left, 0.5 * tol, depth + 1, max_depth, certified, ok);
  if (!ok) return kInf;
  const double r = simpson(g, tm, t1, fm, fr, f1, right, 0.5 * tol, depth + 1, max_depth, certified, ok);
  return ok ? l + r : kInf;
}

}  // namespace

double delta_or_zero(const DomainSpec& domain, const Point& p) {
  const DistanceToBoundary d = delta(domain, p);
  return d.interior ? d.value : 0.0;
}

double segment_length(const DomainSpec& domain, const Point& a, const Point& b, double da, double db,
                      double tol, int max_depth) {
  if (da <= 0.0 || db <= 0.0) return kInf;
  const Integrand g{domain, a, b - a, distance(a, b)};
  if (g.len == 0.0) return 0.0;
  const double dm = g.delta_at(0.5);
  if (dm <= 0.0) return kInf;
  const double f0 = g.len / da;
  const double fm = g.len / dm;
  const double f1 = g.len / db;
  bool ok = true;
  const double v = simpson(g, 0.0, 1.0, f0, fm, f1, (f0 + 4.0 * fm + f1) / 6.0, tol, 0, max_depth, false, ok);
  return ok ? v : kInf;
}

}  // namespace detail

double qh_segment_length(const DomainSpec& domain, const Point& a, const Point& b, double tol) {
  if (!(tol > 0.0)) throw PreconditionError("qh_segment_length: tol must be positive");
  const double da = detail::delta_or_zero(domain, a);
  const double db = detail::delta_or_zero(domain, b);
  if (da <= 0.0 || db <= 0.0) throw DomainError("segment endpoint is not interior to " + to_string(domain));
  if (a == b) return 0.0;
  const double v = detail::segment_length(domain, a, b, da, db, tol, 60);
  if (!std::isfinite(v)) {
    throw ContainmentError("segment " + to_string(a) + " -- " + to_string(b) + " leaves " + to_string(domain));
  }
  return v;
}

double qh_path_length(const DomainSpec& domain, std::span<const Point> path, double tol) {
  double total = 0.0;
  for (std::size_t i = 1; i < path.size(); ++i) total += qh_segment_length(domain, path[i - 1], path[i], tol);
  return total;
}

}  // namespace qhmet
