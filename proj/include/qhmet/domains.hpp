#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qhmet/point.hpp"

namespace qhmet {

class DomainSpec;

/// Open Euclidean ball B^n(center, radius).
struct Ball {
  Point center;
  double radius = 1.0;
};

/// R^n minus a single point.
struct PuncturedSpace {
  Point puncture;
};

/// Planar diamond |x| + |y| < 1.
struct Diamond {};

/// Boundary samples of the first-quadrant arc of a superellipse, used to
/// bracket the nearest-point search. Parameterized by u in [0, 1] as
/// (u^p, (1-u)^p) with p = 1/s.
struct SuperellipseTable {
  double s = 1.0;
  double p = 1.0;
  std::vector<double> u;
  std::vector<double> xs;
  std::vector<double> ys;
};

/// Planar superellipse |x|^s + |y|^s < 1 with 0 < s <= 1.
class Superellipse {
 public:
  explicit Superellipse(double s);
  double s() const { return table_->s; }
  const SuperellipseTable& table() const { return *table_; }

 private:
  std::shared_ptr<const SuperellipseTable> table_;
};

/// A bounded base domain with one interior point removed.
struct Punctured {
  std::shared_ptr<const DomainSpec> base;
  Point point;
};

enum class DomainKind { ball, punctured_space, diamond, superellipse, punctured };

class DomainSpec {
 public:
  using Variant = std::variant<Ball, PuncturedSpace, Diamond, Superellipse, Punctured>;

  static DomainSpec ball(Point center, double radius);
  static DomainSpec unit_ball(std::size_t n = 2);
  static DomainSpec punctured_space(Point puncture);
  static DomainSpec diamond();
  static DomainSpec superellipse(double s);
  static DomainSpec punctured(DomainSpec base, Point point);

  const Variant& variant() const { return v_; }
  template <class T>
  const T* get_if() const {
    return std::get_if<T>(&v_);
  }
  DomainKind kind() const;
  std::size_t dim() const;
  bool is_bounded() const;
  bool is_convex() const;

 private:
  explicit DomainSpec(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

enum class Exactness { closed_form, projected };

/// delta_G(p), the Euclidean distance from p to the boundary.
struct DistanceToBoundary {
  double value = 0.0;
  bool interior = false;
  Exactness exactness = Exactness::closed_form;
};

/// Strict interior test with a 1e-12 margin.
bool contains(const DomainSpec& domain, const Point& p);

/// Boundary distance of an interior point; value 0 and interior=false otherwise.
DistanceToBoundary delta(const DomainSpec& domain, const Point& p);

struct Projection {
  Point q;
  double dist = 0.0;
  /// false when the bracketed Newton search did not converge and the result
  /// comes from dense boundary sampling.
  bool converged = true;
};

/// Nearest point of the curve |x|^s + |y|^s = 1 to a planar point p.
Projection project_to_superellipse(double s, const Point& p);
Projection project_to_superellipse(const Superellipse& curve, const Point& p);

/// Euclidean diameter; +infinity for unbounded domains.
double diam(const DomainSpec& domain);

struct BoundaryGap {
  double value = 0.0;
  Exactness exactness = Exactness::closed_form;
};

/// dist(inner, boundary of outer) for the supported nested pairs: ball in
/// ball, ball in diamond, diamond in ball, superellipse in diamond. Pairs
/// with a ball inside a convex outer domain are exact; the others take the
/// minimum over dense boundary samples. Throws UnsupportedPairError otherwise.
BoundaryGap dist_to_outer_boundary(const DomainSpec& inner, const DomainSpec& outer);

/// Samples of the boundary curve of a planar bounded domain (punctured
/// domains contribute the base boundary only).
void sample_boundary(const DomainSpec& domain, std::size_t n, std::vector<double>& xs,
                     std::vector<double>& ys);

struct Box {
  double xmin, xmax, ymin, ymax;
};

/// Axis-aligned bounding box of a bounded planar domain.
std::optional<Box> bounding_box(const DomainSpec& domain);

/// Compact text form used on the command line:
///   ball:cx,cy,...,r  punctured  punctured:px,py  diamond  superellipse:s
///   punctured-ball:cx,cy,r,px,py
DomainSpec parse_domain(std::string_view text);
std::string to_string(const DomainSpec& domain);

/// "x,y[,z...]"
Point parse_point(std::string_view text);

}  // namespace qhmet
