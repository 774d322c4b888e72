#include <algorithm>
#include <cmath>
#include <limits>

#include "qhmet/qh_solver.hpp"
#include "solver_detail.hpp"

namespace qhmet {
namespace detail {
namespace {

constexpr std::size_t kMaxVertices = 1025;
constexpr int kMaxRounds = 10;
constexpr int kMaxSweeps = 40;
constexpr int kGoldenIters = 8;
constexpr double kInvPhi = 0.6180339887498949;

// Polyline with cached delta per vertex and cached length per segment.
// seg_[i] is the length of [p_[i], p_[i+1]].
class Relaxer {
 public:
  Relaxer(const DomainSpec& domain, const MeshParams& params, std::vector<Point> path)
      : domain_(domain), tol_(params.quad_tol), depth_(params.max_subdivisions), p_(std::move(path)) {
    d_.reserve(p_.size());
    for (const Point& q : p_) d_.push_back(delta_or_zero(domain_, q));
    seg_.resize(p_.size() > 0 ? p_.size() - 1 : 0);
    for (std::size_t i = 0; i + 1 < p_.size(); ++i) seg_[i] = segment(i, i + 1);
    w_.assign(p_.size(), 0.0);
    for (std::size_t i = 1; i + 1 < p_.size(); ++i) w_[i] = max_bracket(i);
  }

  bool ok() const {
    for (double d : d_) {
      if (!(d > 0.0)) return false;
    }
    return std::isfinite(total());
  }

  double total() const {
    double s = 0.0;
    for (double v : seg_) s += v;
    return s;
  }

  std::size_t size() const { return p_.size(); }
  std::vector<Point> take() { return std::move(p_); }

  // Drops interior vertices whose removal does not lengthen the path.
  void simplify() {
    bool changed = true;
    while (changed && p_.size() > 2) {
      changed = false;
      for (std::size_t i = 1; i + 1 < p_.size();) {
        const double direct = segment(i - 1, i + 1);
        if (direct <= seg_[i - 1] + seg_[i]) {
          p_.erase(p_.begin() + static_cast<std::ptrdiff_t>(i));
          d_.erase(d_.begin() + static_cast<std::ptrdiff_t>(i));
          w_.erase(w_.begin() + static_cast<std::ptrdiff_t>(i));
          seg_.erase(seg_.begin() + static_cast<std::ptrdiff_t>(i));
          seg_[i - 1] = direct;
          changed = true;
        } else {
          ++i;
        }
      }
    }
    for (std::size_t i = 1; i + 1 < p_.size(); ++i) w_[i] = max_bracket(i);
  }

  // Inserts the midpoint of every segment.
  void subdivide() {
    const std::size_t n = p_.size();
    std::vector<Point> p;
    std::vector<double> d, seg, w;
    p.reserve(2 * n - 1);
    d.reserve(2 * n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const Point m = 0.5 * (p_[i] + p_[i + 1]);
      const double dm = delta_or_zero(domain_, m);
      const double s1 = segment_length(domain_, p_[i], m, d_[i], dm, tol_, depth_);
      const double s2 = segment_length(domain_, m, p_[i + 1], dm, d_[i + 1], tol_, depth_);
      const double half = 0.5 * distance(p_[i], p_[i + 1]);
      p.push_back(p_[i]);
      d.push_back(d_[i]);
      w.push_back(w_[i]);
      p.push_back(m);
      d.push_back(dm);
      w.push_back(0.5 * half);
      // A certified parent segment has certified halves, so both stay finite.
      seg.push_back(s1);
      seg.push_back(s2);
    }
    p.push_back(p_.back());
    d.push_back(d_.back());
    w.push_back(0.0);
    p_ = std::move(p);
    d_ = std::move(d);
    seg_ = std::move(seg);
    w_ = std::move(w);
  }

  // One pass of axis-wise golden-section moves over all interior vertices.
  // Returns the total length decrease.
  double sweep() {
    double gain = 0.0;
    for (std::size_t i = 1; i + 1 < p_.size(); ++i) {
      const double wmax = max_bracket(i);
      double w = std::min(w_[i], wmax);
      double moved = 0.0;
      for (std::size_t axis = 0; axis < 2; ++axis) {
        const Trial t = golden(i, direction(i, axis), w);
        const double cur = seg_[i - 1] + seg_[i];
        if (t.total < cur) {
          gain += cur - t.total;
          moved = std::max(moved, std::fabs(t.offset));
          p_[i] = t.q;
          d_[i] = t.dq;
          seg_[i - 1] = t.s1;
          seg_[i] = t.s2;
        }
      }
      // Bracket follows the step size: widen after moves, shrink after stalls.
      w = moved > 0.0 ? 4.0 * moved : 0.5 * w;
      w_[i] = std::clamp(w, 1e-9 * wmax, wmax);
    }
    return gain;
  }

 private:
  struct Trial {
    double offset = 0.0;
    double total = std::numeric_limits<double>::infinity();
    Point q;
    double dq = 0.0, s1 = 0.0, s2 = 0.0;
  };

  double segment(std::size_t i, std::size_t j) const {
    return segment_length(domain_, p_[i], p_[j], d_[i], d_[j], tol_, depth_);
  }

  double max_bracket(std::size_t i) const {
    return 0.5 * std::min(distance(p_[i - 1], p_[i]), distance(p_[i], p_[i + 1]));
  }

  // Unit normal (axis 0) or tangent (axis 1) of the chord p[i-1] -> p[i+1].
  Point direction(std::size_t i, std::size_t axis) const {
    const Point c = p_[i + 1] - p_[i - 1];
    const double n = norm(c);
    if (n == 0.0) return axis == 0 ? Point{1.0, 0.0} : Point{0.0, 1.0};
    return axis == 0 ? Point{-c.y() / n, c.x() / n} : Point{c.x() / n, c.y() / n};
  }

  Trial evaluate(std::size_t i, const Point& dir, double offset) const {
    Trial t;
    t.offset = offset;
    t.q = p_[i] + offset * dir;
    t.dq = delta_or_zero(domain_, t.q);
    if (t.dq <= 0.0) return t;
    t.s1 = segment_length(domain_, p_[i - 1], t.q, d_[i - 1], t.dq, tol_, depth_);
    if (!std::isfinite(t.s1)) return t;
    t.s2 = segment_length(domain_, t.q, p_[i + 1], t.dq, d_[i + 1], tol_, depth_);
    t.total = t.s1 + t.s2;
    return t;
  }

  Trial golden(std::size_t i, const Point& axis, double w) const {
    if (!(w > 0.0)) return {};
    double lo = -w, hi = w;
    Trial c = evaluate(i, axis, hi - kInvPhi * (hi - lo));
    Trial d = evaluate(i, axis, lo + kInvPhi * (hi - lo));
    for (int it = 0; it < kGoldenIters; ++it) {
      if (c.total <= d.total) {
        hi = d.offset;
        d = std::move(c);
        c = evaluate(i, axis, hi - kInvPhi * (hi - lo));
      } else {
        lo = c.offset;
        c = std::move(d);
        d = evaluate(i, axis, lo + kInvPhi * (hi - lo));
      }
    }
    return c.total <= d.total ? c : d;
  }

  const DomainSpec& domain_;
  double tol_;
  int depth_;
  std::vector<Point> p_;
  std::vector<double> d_;
  std::vector<double> seg_;
  std::vector<double> w_;
};

}  // namespace

RelaxOutcome relax_with_levels(const DomainSpec& domain, std::vector<Point> path, const MeshParams& params) {
  RelaxOutcome out;
  if (path.size() < 2) {
    out.levels.push_back(0.0);
    out.path = std::move(path);
    return out;
  }
  Relaxer r(domain, params, path);
  if (!r.ok()) {
    out.path = std::move(path);
    return out;
  }
  double prev = r.total();
  out.levels.push_back(prev);
  if (prev == 0.0) {
    out.path = r.take();
    return out;
  }
  // Round 0 relaxes the simplified coarse path; later rounds subdivide first,
  // so long-wavelength corrections happen while the vertex count is small.
  r.simplify();
  for (int round = 0; round < kMaxRounds; ++round) {
    const bool can_split = round > 0 && 2 * r.size() - 1 <= kMaxVertices;
    if (can_split) r.subdivide();

    for (int s = 0; s < kMaxSweeps; ++s) {
      if (r.sweep() <= 0.1 * params.relax_tol * prev) break;
    }
    const double cur = r.total();
    out.levels.push_back(cur);
    if (round >= 2 && prev - cur < params.relax_tol * cur) break;
    if (round > 0 && !can_split && prev - cur < params.relax_tol * cur) break;
    prev = cur;
  }
  out.path = r.take();
  return out;
}

}  // namespace detail

std::vector<Point> relax_path(const DomainSpec& domain, std::vector<Point> path, const MeshParams& params) {
  validate(params);
  return detail::relax_with_levels(domain, std::move(path), params).path;
}

}  // namespace qhmet
