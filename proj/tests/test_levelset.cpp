#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "qhmet/closed_form.hpp"
#include "qhmet/errors.hpp"
#include "qhmet/levelset.hpp"

using namespace qhmet;

TEST(LevelSet, RatioMatchesTheClosedForms) {
  const Point e1{1.0, 0.0}, o{0.0, 0.0};
  const auto plane = DomainSpec::punctured_space(o);
  for (const Point& z : {Point{-1.0, 0.0}, Point{0.3, 0.7}, Point{2.5, -1.5}, Point{-0.01, 0.02}}) {
    const double k = k_punctured(z, e1, o).value;
    const double j = j_metric(plane, z, e1).value;
    EXPECT_NEAR(ratio_at(z), k / j, 1e-13) << to_string(z);
  }
  EXPECT_NEAR(ratio_at(Point{-1.0, 0.0}), std::numbers::pi / std::log(3.0), 1e-9);
  EXPECT_THROW(ratio_at(o), DomainError);
  EXPECT_THROW(ratio_at(e1), DomainError);
}

TEST(LevelSet, VerticesSitOnTheirLevel) {
  const std::vector<double> levels{1.1, 1.5, 1.9, 2.3};
  const auto contours = trace_levels(levels, Window{}, 240, 1e-6);
  ASSERT_EQ(contours.size(), levels.size());
  for (const Contour& c : contours) {
    EXPECT_GT(c.vertex_count(), 0u) << c.level;
    EXPECT_EQ(c.chains.size(), c.closed.size());
    for (const auto& chain : c.chains) {
      for (const Point& v : chain) ASSERT_LE(std::abs(ratio_at(v) - c.level), 1e-6) << to_string(v);
    }
  }
}

TEST(LevelSet, ContoursNestAroundMinusOne) {
  const std::vector<double> levels{1.1, 1.5, 1.9, 2.3, std::numbers::pi / std::log(3.0) + 0.01};
  const auto contours = trace_levels(levels, Window{}, 240, 1e-6);
  const Point m1{-1.0, 0.0};
  EXPECT_TRUE(encloses(contours[3], m1));
  EXPECT_FALSE(encloses(contours[4], m1));
  // On the negative axis the ratio rises to its maximum at -e1, so each level
  // has at most one crossing on either side of t = 1; chains that leave the
  // window or hug the puncture have none there.
  const auto sides = [](const Contour& c) {
    double left = 0.0, right = INFINITY;
    for (double t : negative_axis_crossings(c)) {
      if (t < 1.0) left = std::max(left, t);
      else right = std::min(right, t);
    }
    return std::pair{left, right};
  };
  for (std::size_t i = 1; i < 4; ++i) {
    const auto [lo_out, hi_out] = sides(contours[i - 1]);
    const auto [lo_in, hi_in] = sides(contours[i]);
    EXPECT_GT(lo_in, 0.0) << levels[i];
    EXPECT_LT(lo_out, lo_in) << levels[i];
    EXPECT_LE(hi_in, hi_out) << levels[i];
  }
  const auto [lo, hi] = sides(contours[3]);
  EXPECT_LT(lo, 1.0);
  EXPECT_GT(hi, 1.0);
  EXPECT_TRUE(std::isfinite(hi));
}

TEST(LevelSet, LevelsBelowOneAreEmpty) {
  const std::vector<double> levels{0.5};
  const auto contours = trace_levels(levels, Window{}, 60);
  ASSERT_EQ(contours.size(), 1u);
  EXPECT_EQ(contours[0].vertex_count(), 0u);
}

TEST(LevelSet, SlopeQuotient) {
  for (double a : {1e-6, 1e-4, 5e-3, 0.5, 2.0, std::numbers::pi}) {
    EXPECT_NEAR(slope_quotient(a), (h_alpha(a) - 1.0) / a, 1e-9) << a;
  }
  EXPECT_NEAR(slope_quotient(1e-9), 0.5, 1e-6);
  EXPECT_THROW(slope_quotient(0.0), RangeError);
  EXPECT_THROW(slope_quotient(4.0), RangeError);
}

TEST(LevelSet, SharpSlopeConstant) {
  const SlopeResult r = sharp_slope(std::numbers::pi);
  EXPECT_NEAR(r.value, 1.0 / std::log(3.0) - 1.0 / std::numbers::pi, 1e-6);
  EXPECT_NEAR(r.argmax, std::numbers::pi, 1e-6);
  // The quotient starts at 1/2, dips below it and only exceeds it past
  // alpha ~ 2, so on (0, pi/2] the supremum is the limit at 0.
  EXPECT_NEAR(slope_quotient(std::numbers::pi / 2), 0.4979728847, 1e-9);
  const SlopeResult s = sharp_slope(std::numbers::pi / 2);
  EXPECT_NEAR(s.value, 0.5, 1e-9);
  EXPECT_EQ(s.argmax, 0.0);
  EXPECT_NEAR(h_alpha(std::numbers::pi / 2), 1.7822139782, 1e-9);
}

TEST(LevelSet, CsvAndSvgWriters) {
  Contour c;
  c.level = 1.5;
  c.chains = {{Point{0.0, 1.0}, Point{1.0, 1.0}, Point{1.0, 0.0}}};
  c.closed = {true};
  const std::vector<Contour> cs{c};
  std::ostringstream csv;
  write_contours_csv(csv, cs);
  std::istringstream in(csv.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "level,chain_id,vertex_id,x,y");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 3);

  std::ostringstream svg;
  write_contours_svg(svg, cs, Window{});
  const std::string s = svg.str();
  EXPECT_NE(s.find("<svg"), std::string::npos);
  EXPECT_NE(s.find("data-level"), std::string::npos);
  EXPECT_NE(s.find("Z"), std::string::npos);
}
