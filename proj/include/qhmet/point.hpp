#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>

namespace qhmet {

inline constexpr std::size_t kMaxDim = 8;

/// A point of Euclidean n-space, 2 <= n <= kMaxDim, stored inline.
class Point {
 public:
  Point() = default;
  Point(std::initializer_list<double> coords);
  explicit Point(std::span<const double> coords);

  static Point zero(std::size_t n);
  /// The standard basis vector e_{axis+1} of R^n.
  static Point unit(std::size_t n, std::size_t axis);
  static Point planar(double x, double y) { return Point{x, y}; }

  std::size_t dim() const { return n_; }
  double operator[](std::size_t i) const { return c_[i]; }
  double& operator[](std::size_t i) { return c_[i]; }
  double x() const { return c_[0]; }
  double y() const { return c_[1]; }

  std::span<const double> coords() const { return {c_.data(), n_}; }
  bool is_finite() const;

  Point& operator+=(const Point& o);
  Point& operator-=(const Point& o);
  Point& operator*=(double s);

  friend Point operator+(Point a, const Point& b) { return a += b; }
  friend Point operator-(Point a, const Point& b) { return a -= b; }
  friend Point operator*(Point a, double s) { return a *= s; }
  friend Point operator*(double s, Point a) { return a *= s; }
  friend Point operator-(Point a) { return a *= -1.0; }
  friend bool operator==(const Point& a, const Point& b);

 private:
  std::array<double, kMaxDim> c_{};
  std::size_t n_ = 0;
};

double dot(const Point& a, const Point& b);
double norm(const Point& a);
double norm2(const Point& a);
double distance(const Point& a, const Point& b);

/// Angle at `vertex` between the rays towards `a` and `b`, in [0, pi].
/// Uses the half-difference form, accurate near 0 and pi.
double angle_at(const Point& a, const Point& vertex, const Point& b);

/// Angle between two nonzero vectors, in [0, pi].
double vector_angle(const Point& u, const Point& v);

std::string to_string(const Point& p);

}  // namespace qhmet
