#include "qhmet/point.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qhmet/errors.hpp"

namespace qhmet {

Point::Point(std::initializer_list<double> coords)
    : Point(std::span<const double>(coords.begin(), coords.size())) {}

Point::Point(std::span<const double> coords) {
  if (coords.size() > kMaxDim) {
    throw PreconditionError("point dimension exceeds " + std::to_string(kMaxDim));
  }
  std::copy(coords.begin(), coords.end(), c_.begin());
  n_ = coords.size();
}

Point Point::zero(std::size_t n) {
  if (n > kMaxDim) throw PreconditionError("point dimension exceeds kMaxDim");
  Point p;
  p.n_ = n;
  return p;
}

Point Point::unit(std::size_t n, std::size_t axis) {
  Point p = zero(n);
  if (axis >= n) throw PreconditionError("unit vector axis out of range");
  p.c_[axis] = 1.0;
  return p;
}

bool Point::is_finite() const {
  return std::all_of(c_.begin(), c_.begin() + n_, [](double v) { return std::isfinite(v); });
}

Point& Point::operator+=(const Point& o) {
  for (std::size_t i = 0; i < n_; ++i) c_[i] += o.c_[i];
  return *this;
}

Point& Point::operator-=(const Point& o) {
  for (std::size_t i = 0; i < n_; ++i) c_[i] -= o.c_[i];
  return *this;
}

Point& Point::operator*=(double s) {
  for (std::size_t i = 0; i < n_; ++i) c_[i] *= s;
  return *this;
}

bool operator==(const Point& a, const Point& b) {
  if (a.n_ != b.n_) return false;
  for (std::size_t i = 0; i < a.n_; ++i) {
    if (a.c_[i] != b.c_[i]) return false;
  }
  return true;
}

double dot(const Point& a, const Point& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(const Point& a) { return dot(a, a); }

double norm(const Point& a) {
  if (a.dim() == 2) return std::hypot(a[0], a[1]);
  return std::sqrt(norm2(a));
}

double distance(const Point& a, const Point& b) { return norm(a - b); }

double vector_angle(const Point& u, const Point& v) {
  const double nu = norm(u);
  const double nv = norm(v);
  if (nu == 0.0 || nv == 0.0) throw PreconditionError("angle of a zero vector");
  const Point a = u * (1.0 / nu);
  const Point b = v * (1.0 / nv);
  return 2.0 * std::atan2(norm(a - b), norm(a + b));
}

double angle_at(const Point& a, const Point& vertex, const Point& b) {
  return vector_angle(a - vertex, b - vertex);
}

std::string to_string(const Point& p) {
  std::ostringstream os;
  os.precision(17);
  os << '(';
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (i) os << ", ";
    os << p[i];
  }
  os << ')';
  return os.str();
}

}  // namespace qhmet
