#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "qhmet/closed_form.hpp"
#include "qhmet/errors.hpp"

using namespace qhmet;

namespace {

Point random_in_unit_disk(std::mt19937_64& gen) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    const Point p = Point::planar(u(gen), u(gen));
    if (norm(p) < 0.999) return p;
  }
}

}  // namespace

TEST(ClosedForm, DistanceRatioMetricDefinition) {
  const auto ball = DomainSpec::unit_ball();
  const Point x{0.5, 0.0}, y{-0.2, 0.3};
  const double m = std::min(1.0 - norm(x), 1.0 - norm(y));
  EXPECT_NEAR(j_metric(ball, x, y).value, std::log(1.0 + distance(x, y) / m), 1e-15);
  EXPECT_EQ(j_metric(ball, x, x).value, 0.0);
  EXPECT_THROW(j_metric(ball, x, Point{1.0, 0.0}), DomainError);
}

TEST(ClosedForm, PuncturedPlaneMatchesComplexLogarithm) {
  // |log((x - p) / (y - p))| on the principal branch is the same distance.
  std::mt19937_64 gen(21);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  const Point p{0.4, -0.1};
  for (int i = 0; i < 500; ++i) {
    const Point x{u(gen), u(gen)}, y{u(gen), u(gen)};
    const std::complex<double> zx(x.x() - p.x(), x.y() - p.y()), zy(y.x() - p.x(), y.y() - p.y());
    EXPECT_NEAR(k_punctured(x, y, p).value, std::abs(std::log(zx / zy)), 1e-12);
  }
  EXPECT_NEAR(k_punctured(Point{1.0, 0.0}, Point{0.0, 1.0}, Point{0.0, 0.0}).value, std::numbers::pi / 2, 1e-15);
  EXPECT_NEAR(k_punctured(Point{1.0, 0.0}, Point{-1.0, 0.0}, Point{0.0, 0.0}).value, std::numbers::pi, 1e-15);
}

TEST(ClosedForm, BallRadialAndDiameterDistances) {
  const Ball b{Point{0.0, 0.0}, 1.0};
  EXPECT_NEAR(k_ball_radial(b, Point{0.0, 0.0}, Point{0.9, 0.0}).value, std::log(10.0), 1e-14);
  // The integral of 1/(1 - r) from 0.2 to 0.7 along the radius.
  EXPECT_NEAR(k_ball_radial(b, Point{0.0, 0.2}, Point{0.0, 0.7}).value, std::log(0.8 / 0.3), 1e-14);
  EXPECT_NEAR(k_ball_diameter(b, Point{0.5, 0.0}, Point{-0.75, 0.0}).value, std::log(2.0) + std::log(4.0), 1e-14);
  EXPECT_THROW(k_ball_radial(b, Point{0.5, 0.0}, Point{0.0, 0.5}), PreconditionError);
}

TEST(ClosedForm, HyperbolicMetricMatchesArcosh) {
  // cosh rho = 1 + 2 |x - y|^2 / ((1 - |x|^2)(1 - |y|^2)).
  std::mt19937_64 gen(22);
  for (int i = 0; i < 500; ++i) {
    const Point x = random_in_unit_disk(gen), y = random_in_unit_disk(gen);
    const double c = 1.0 + 2.0 * norm2(x - y) / ((1.0 - norm2(x)) * (1.0 - norm2(y)));
    const double rho = rho_ball(x, y).value;
    EXPECT_NEAR(rho, std::acosh(c), 1e-9 * std::max(1.0, rho));
    const double th = std::tanh(rho / 2.0);
    EXPECT_NEAR(tanh2_half_rho(x, y), th * th, 1e-12);
    EXPECT_NEAR(chord_bound(x, y), 2.0 * std::tanh(rho / 4.0), 1e-12);
    EXPECT_LE(distance(x, y), chord_bound(x, y) + 1e-15);
  }
  // Along a radius rho = log((1 + r)/(1 - r)).
  EXPECT_NEAR(rho_ball(Point{0.0, 0.0}, Point{0.6, 0.0}).value, std::log(1.6 / 0.4), 1e-14);
}

TEST(ClosedForm, AsinhSeriesBranchIsAccurate) {
  for (double x : {1e-12, 1e-8, 1e-5, 1e-3, 0.1, 2.0}) EXPECT_NEAR(asinh_accurate(x), std::asinh(x), 1e-16 + 1e-15 * x);
}

TEST(ClosedForm, AngularConstant) {
  EXPECT_NEAR(h_alpha(std::numbers::pi), std::numbers::pi / std::log(3.0), 1e-15);
  EXPECT_NEAR(h_alpha(1e-9), 1.0, 1e-8);
  const double a = 1.3;
  EXPECT_NEAR(h_alpha(a), a / std::log(1.0 + 2.0 * std::sin(a / 2.0)), 1e-15);
  EXPECT_THROW(h_alpha(0.0), RangeError);
  EXPECT_THROW(h_alpha(3.2), RangeError);
}

TEST(ClosedForm, JungRadius) {
  EXPECT_NEAR(jung_radius(2.0, 2), 2.0 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(jung_radius(1.0, 3), std::sqrt(3.0 / 8.0), 1e-15);
  EXPECT_NEAR(enclosing_radius(DomainSpec::ball(Point{1.0, 1.0}, 0.3)), 0.3, 1e-15);
  EXPECT_NEAR(enclosing_radius(DomainSpec::diamond()), 2.0 / std::sqrt(3.0), 1e-15);
}

TEST(ClosedForm, ModuliInvertTheLowerBounds) {
  for (double t : {0.0, 0.1, 0.9, 1.5, 1.99}) {
    EXPECT_NEAR(k_lower_bound(t), 2.0 * std::log(2.0 / (2.0 - t)), 1e-14);
    EXPECT_NEAR(j_lower_bound(t), 2.0 * std::atanh(t / 2.0), 1e-14);
    EXPECT_NEAR(modulus_k(k_lower_bound(t), 1.0), t, 1e-12);
    EXPECT_NEAR(modulus_j(j_lower_bound(t), 1.0), t, 1e-12);
    EXPECT_NEAR(modulus_k(k_lower_bound(t), 3.0), 3.0 * t, 1e-11);
  }
  // j <= k, so its lower bound is the smaller one.
  for (double t = 0.05; t < 2.0; t += 0.05) EXPECT_LE(j_lower_bound(t), k_lower_bound(t));
}

TEST(ClosedForm, JungBoundsScaleWithTheEnclosingRadius) {
  const auto ball = DomainSpec::ball(Point{0.0, 0.0}, 2.0);
  const Point x{1.0, 0.0}, y{-1.0, 0.0};
  EXPECT_NEAR(k_lower_bound_jung(ball, x, y), k_lower_bound(1.0), 1e-15);
  EXPECT_NEAR(j_lower_bound_jung(ball, x, y), j_lower_bound(1.0), 1e-15);
}
