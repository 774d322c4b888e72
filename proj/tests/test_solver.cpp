#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <numbers>
#include <random>

#include "qhmet/closed_form.hpp"
#include "qhmet/errors.hpp"
#include "qhmet/qh_solver.hpp"
#include "solver_detail.hpp"

using namespace qhmet;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

TEST(Solver, SegmentLengthAlongARadius) {
  const auto ball = DomainSpec::unit_ball();
  EXPECT_NEAR(qh_segment_length(ball, Point{0.0, 0.0}, Point{0.9, 0.0}), std::log(10.0), 1e-9);
  EXPECT_NEAR(qh_segment_length(ball, Point{0.0, -0.3}, Point{0.0, -0.99}), std::log(0.7 / 0.01), 1e-8);
  // Through the center the two radial pieces add.
  const std::vector<Point> path{Point{0.5, 0.0}, Point{0.0, 0.0}, Point{-0.5, 0.0}};
  EXPECT_NEAR(qh_path_length(ball, path), 2.0 * std::log(2.0), 1e-9);
  // The chord between two arms leaves the superellipse.
  EXPECT_THROW(qh_segment_length(DomainSpec::superellipse(0.5), Point{0.9, 0.0}, Point{0.0, 0.9}), ContainmentError);
}

TEST(Solver, CalibrationAgainstClosedForms) {
  auto t0 = std::chrono::steady_clock::now();
  const auto r1 = k_numeric(DomainSpec::unit_ball(), Point{0.0, 0.0}, Point{0.9, 0.0});
  EXPECT_LT(seconds_since(t0), 2.0);
  EXPECT_NEAR(r1.value / std::log(10.0), 1.0, 1e-3);

  t0 = std::chrono::steady_clock::now();
  const auto r2 = k_numeric(DomainSpec::punctured_space(Point{0.0, 0.0}), Point{1.0, 0.0}, Point{0.0, 1.0});
  EXPECT_LT(seconds_since(t0), 2.0);
  EXPECT_NEAR(r2.value / (std::numbers::pi / 2), 1.0, 1e-3);
}

TEST(Solver, PuncturedPlaneAgreesWithMartinOsgood) {
  std::mt19937_64 gen(31);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  const Point p{0.0, 0.0};
  const auto dom = DomainSpec::punctured_space(p);
  for (int i = 0; i < 12; ++i) {
    const Point x{u(gen), u(gen)}, y{u(gen), u(gen)};
    if (norm(x) < 0.05 || norm(y) < 0.05) continue;
    const double exact = k_punctured(x, y, p).value;
    const auto r = k_numeric(dom, x, y);
    EXPECT_NEAR(r.value, exact, 2e-3 * exact) << to_string(x) << " " << to_string(y);
    // Polylines never beat the infimum.
    EXPECT_GE(r.value, exact - 1e-9);
  }
}

TEST(Solver, NumericValueDominatesTheDistanceRatioMetric) {
  std::mt19937_64 gen(32);
  std::uniform_real_distribution<double> u(-0.7, 0.7);
  const auto dia = DomainSpec::diamond();
  for (int i = 0; i < 8; ++i) {
    const Point x{u(gen), u(gen)}, y{u(gen), u(gen)};
    if (!contains(dia, x) || !contains(dia, y)) continue;
    const auto r = k_numeric(dia, x, y);
    EXPECT_GE(r.value, j_metric(dia, x, y).value - 1e-12);
    // The path certifies its own length.
    EXPECT_NEAR(qh_path_length(dia, r.path), r.value, 1e-6 * r.value);
    EXPECT_EQ(r.path.front(), x);
    EXPECT_EQ(r.path.back(), y);
  }
}

TEST(Solver, SymmetricInItsArguments) {
  const auto dom = DomainSpec::superellipse(0.5);
  const Point x{0.1, -0.05}, y{-0.2, 0.15};
  EXPECT_EQ(k_numeric(dom, x, y).value, k_numeric(dom, y, x).value);
}

TEST(Solver, CoincidentPointsAndErrors) {
  const auto ball = DomainSpec::unit_ball();
  const auto r = k_numeric(ball, Point{0.3, 0.0}, Point{0.3, 0.0});
  EXPECT_EQ(r.value, 0.0);
  EXPECT_EQ(r.path.size(), 1u);
  EXPECT_THROW(k_numeric(ball, Point{1.2, 0.0}, Point{0.0, 0.0}), DomainError);
  MeshParams bad;
  bad.h = 1.5;
  EXPECT_THROW(k_numeric(ball, Point{0.1, 0.0}, Point{0.0, 0.0}, bad), PreconditionError);
  EXPECT_THROW(k_numeric(DomainSpec::unit_ball(3), Point{0.1, 0.0, 0.0}, Point{0.0, 0.0, 0.0}), PreconditionError);
}

TEST(Solver, RelaxationNeverLengthensThePath) {
  const auto dom = DomainSpec::punctured(DomainSpec::unit_ball(), Point{0.0, 0.0});
  const std::vector<Point> path{Point{0.5, 0.0}, Point{0.3, 0.4}, Point{-0.1, 0.5}, Point{-0.5, 0.05}};
  const double before = qh_path_length(dom, path);
  const auto relaxed = relax_path(dom, path);
  EXPECT_LE(qh_path_length(dom, relaxed), before + 1e-12);
  EXPECT_EQ(relaxed.front(), path.front());
  EXPECT_EQ(relaxed.back(), path.back());
}

TEST(Solver, ConeBoundIsALowerBound) {
  // Exact radial distances in a ball: the bound may touch but never exceed them.
  std::mt19937_64 gen(33);
  std::uniform_real_distribution<double> u(0.0, 0.999);
  const Ball b{Point{0.0, 0.0}, 1.0};
  for (int i = 0; i < 2000; ++i) {
    const double r1 = u(gen), r2 = u(gen);
    const Point x{r1, 0.0}, y{r2, 0.0};
    const double k = k_ball_radial(b, x, y).value;
    EXPECT_LE(detail::k_cone_bound(std::abs(r1 - r2), 1.0 - r1, 1.0 - r2, 1.0), k + 1e-12);
    const Point z{-r2, 0.0};
    const double kd = k_ball_diameter(b, x, z).value;
    EXPECT_LE(detail::k_cone_bound(r1 + r2, 1.0 - r1, 1.0 - r2, 1.0), kd + 1e-12);
  }
  EXPECT_NEAR(detail::k_cone_bound(0.9, 1.0, 0.1, 1.0), std::log(10.0), 1e-14);
}

TEST(Solver, ConeBoundDominatesTheDistanceRatioMetric) {
  std::mt19937_64 gen(34);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 5000; ++i) {
    const double sup = 0.1 + u(gen);
    const double da = sup * u(gen) + 1e-9, db = sup * u(gen) + 1e-9, d = 3.0 * u(gen);
    const double j = std::log1p(d / std::min(da, db));
    EXPECT_GE(detail::k_cone_bound(d, da, db, sup), j - 1e-12);
    EXPECT_GE(detail::k_cone_bound(d, da, db, INFINITY), j - 1e-12);
  }
}

TEST(Solver, CirclePointLiesOnTheCircleAtTheRequestedAngle) {
  const Point p{0.2, -0.3};
  const auto plane = DomainSpec::punctured_space(p);
  const Point z{1.0, 0.5};
  for (double r : {0.5, 1.0, 2.5, 4.0}) {
    const AngleRange ar = k_circle_angle_range(r);
    for (int i = 0; i <= 10; ++i) {
      const double a = ar.lo + (ar.hi - ar.lo) * i / 10.0;
      const Point x = k_circle_point(plane, z, r, a);
      EXPECT_NEAR(k_punctured(x, z, p).value, r, 1e-9);
      EXPECT_NEAR(angle_at(x, z, p), a, 1e-9);
      EXPECT_GE(distance(x, p), distance(z, p) - 1e-12);
    }
    EXPECT_THROW(k_circle_point(plane, z, r, ar.hi + 0.1), RangeError);
  }
}
