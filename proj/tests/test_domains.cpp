#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qhmet/domains.hpp"
#include "qhmet/errors.hpp"
#include "solver_detail.hpp"

using namespace qhmet;

namespace {

// Distance to the superellipse curve by brute force over a dense sample of
// all four quadrant arcs.
double dense_superellipse_distance(double s, const Point& p, int n = 200000) {
  const double e = 1.0 / s;
  double best = INFINITY;
  for (int i = 0; i <= n; ++i) {
    const double u = static_cast<double>(i) / n;
    const double bx = std::pow(u, e), by = std::pow(1.0 - u, e);
    for (double sx : {-1.0, 1.0}) {
      for (double sy : {-1.0, 1.0}) best = std::min(best, std::hypot(p.x() - sx * bx, p.y() - sy * by));
    }
  }
  return best;
}

}  // namespace

TEST(Domains, BallDeltaIsRadiusMinusOffset) {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const Point c{0.3, -0.2, 0.5};
  const auto ball = DomainSpec::ball(c, 1.7);
  for (int i = 0; i < 500; ++i) {
    const Point p = c + Point{u(gen), u(gen), u(gen)} * 0.9;
    const auto d = delta(ball, p);
    ASSERT_TRUE(d.interior);
    EXPECT_NEAR(d.value, 1.7 - distance(p, c), 1e-14);
    EXPECT_EQ(d.exactness, Exactness::closed_form);
  }
  EXPECT_FALSE(delta(ball, c + Point{2.0, 0.0, 0.0}).interior);
  EXPECT_FALSE(contains(ball, c + Point{1.7, 0.0, 0.0}));
}

TEST(Domains, DiamondDeltaMatchesEdgeDistance) {
  std::mt19937_64 gen(12);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const auto dia = DomainSpec::diamond();
  int checked = 0;
  while (checked < 1000) {
    const Point p = Point::planar(u(gen), u(gen));
    const double slack = 1.0 - std::abs(p.x()) - std::abs(p.y());
    if (slack <= 1e-9) {
      EXPECT_FALSE(contains(dia, p));
      continue;
    }
    // The foot of the perpendicular onto the quadrant's edge stays on the edge.
    EXPECT_NEAR(delta(dia, p).value, slack / std::numbers::sqrt2, 1e-15);
    ++checked;
  }
}

TEST(Domains, SuperellipseOfOrderOneIsTheDiamond) {
  std::mt19937_64 gen(13);
  std::uniform_real_distribution<double> u(-0.7, 0.7);
  const auto se = DomainSpec::superellipse(1.0);
  const auto dia = DomainSpec::diamond();
  for (int i = 0; i < 300; ++i) {
    const Point p = Point::planar(u(gen), u(gen));
    if (!contains(dia, p)) continue;
    EXPECT_NEAR(delta(se, p).value, delta(dia, p).value, 1e-9) << to_string(p);
  }
}

TEST(Domains, SuperellipseProjectionAgreesWithDenseSampling) {
  std::mt19937_64 gen(14);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (double s : {0.25, 0.5, 0.75}) {
    const auto dom = DomainSpec::superellipse(s);
    int checked = 0;
    while (checked < 40) {
      const Point p = Point::planar(u(gen), u(gen));
      if (!contains(dom, p)) continue;
      const double oracle = dense_superellipse_distance(s, p);
      const auto d = delta(dom, p);
      // The dense sample can only overestimate the true distance.
      EXPECT_LE(d.value, oracle + 1e-12) << "s=" << s << " p=" << to_string(p);
      EXPECT_NEAR(d.value, oracle, 1e-7) << "s=" << s << " p=" << to_string(p);
      ++checked;
    }
  }
}

TEST(Domains, ProjectionLandsOnTheCurve) {
  for (double s : {0.3, 0.5, 1.0}) {
    for (const Point& p : {Point::planar(0.1, 0.05), Point::planar(-0.4, 0.02), Point::planar(0.0, 0.0),
                           Point::planar(1.5, -2.0)}) {
      const Projection pr = project_to_superellipse(s, p);
      EXPECT_NEAR(std::pow(std::abs(pr.q.x()), s) + std::pow(std::abs(pr.q.y()), s), 1.0, 1e-9);
      EXPECT_NEAR(pr.dist, distance(p, pr.q), 1e-12);
    }
  }
}

TEST(Domains, DeltaSupBoundsTheSampledBoundaryDistance) {
  const std::vector<DomainSpec> doms{DomainSpec::ball(Point{0.2, 0.1}, 0.8), DomainSpec::diamond(),
                                     DomainSpec::superellipse(0.25), DomainSpec::superellipse(0.5),
                                     DomainSpec::superellipse(0.75),
                                     DomainSpec::punctured(DomainSpec::diamond(), Point{0.1, 0.1})};
  for (const auto& dom : doms) {
    const double sup = detail::delta_sup(dom);
    const Box box = *bounding_box(dom);
    double seen = 0.0;
    const int n = 161;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const Point p = Point::planar(box.xmin + (box.xmax - box.xmin) * i / (n - 1),
                                      box.ymin + (box.ymax - box.ymin) * j / (n - 1));
        const auto d = delta(dom, p);
        if (d.interior) seen = std::max(seen, d.value);
      }
    }
    EXPECT_LE(seen, sup + 1e-12) << to_string(dom);
    // The grid passes through the maximizer of the centered domains.
    if (dom.get_if<Punctured>() == nullptr) {
      EXPECT_NEAR(seen, sup, 1e-9) << to_string(dom);
    }
  }
  EXPECT_TRUE(std::isinf(detail::delta_sup(DomainSpec::punctured_space(Point{0.0, 0.0}))));
}

TEST(Domains, PuncturedDomainTakesTheNearerObstacle) {
  const auto dom = DomainSpec::punctured(DomainSpec::unit_ball(), Point{0.5, 0.0});
  EXPECT_NEAR(delta(dom, Point{0.4, 0.0}).value, 0.1, 1e-15);
  EXPECT_NEAR(delta(dom, Point{-0.5, 0.0}).value, 0.5, 1e-15);
  EXPECT_FALSE(contains(dom, Point{0.5, 0.0}));
  const auto ps = DomainSpec::punctured_space(Point{1.0, 1.0});
  EXPECT_NEAR(delta(ps, Point{4.0, 5.0}).value, 5.0, 1e-15);
  EXPECT_FALSE(ps.is_bounded());
  EXPECT_TRUE(std::isinf(diam(ps)));
}

TEST(Domains, Diameters) {
  EXPECT_DOUBLE_EQ(diam(DomainSpec::ball(Point{1.0, 2.0}, 0.75)), 1.5);
  EXPECT_DOUBLE_EQ(diam(DomainSpec::diamond()), 2.0);
  EXPECT_NEAR(diam(DomainSpec::superellipse(0.5)), 2.0, 1e-12);
}

TEST(Domains, OuterBoundaryGaps) {
  const auto unit = DomainSpec::unit_ball();
  const auto g1 = dist_to_outer_boundary(DomainSpec::ball(Point{0.2, 0.0}, 0.5), unit);
  EXPECT_NEAR(g1.value, 0.3, 1e-15);
  EXPECT_EQ(g1.exactness, Exactness::closed_form);
  // Ball centered at the origin inside the diamond: inradius minus radius.
  const auto g2 = dist_to_outer_boundary(DomainSpec::ball(Point{0.0, 0.0}, 0.5), DomainSpec::diamond());
  EXPECT_NEAR(g2.value, 1.0 / std::numbers::sqrt2 - 0.5, 1e-15);
  // The diamond's vertices touch the unit circle.
  EXPECT_NEAR(dist_to_outer_boundary(DomainSpec::diamond(), unit).value, 0.0, 1e-6);
  // Superellipse arms reach the diamond's vertices.
  EXPECT_NEAR(dist_to_outer_boundary(DomainSpec::superellipse(0.5), DomainSpec::diamond()).value, 0.0, 1e-6);
  EXPECT_THROW(dist_to_outer_boundary(DomainSpec::diamond(), DomainSpec::superellipse(0.5)),
               UnsupportedPairError);
}

TEST(Domains, TextFormRoundTrips) {
  for (const char* text : {"ball:0.5,-1,2", "punctured", "punctured:1,2", "diamond", "superellipse:0.5",
                           "punctured-ball:0,0,1,0.25,0"}) {
    const DomainSpec d = parse_domain(text);
    const DomainSpec again = parse_domain(to_string(d));
    EXPECT_EQ(to_string(again), to_string(d)) << text;
  }
  EXPECT_EQ(parse_domain("ball:0,0,0,2").dim(), 3u);
  EXPECT_THROW(parse_domain("cube:1"), ParseError);
  EXPECT_THROW(parse_domain("ball:0,0,-1"), ParseError);
  EXPECT_THROW(parse_domain("superellipse:1.5"), ParseError);
  EXPECT_THROW(DomainSpec::superellipse(1.5), PreconditionError);
  EXPECT_THROW(parse_point("1,x"), ParseError);
  EXPECT_EQ(parse_point("1.5,-2"), Point::planar(1.5, -2.0));
}
