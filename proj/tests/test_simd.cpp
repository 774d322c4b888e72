#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <random>
#include <vector>

#include "qhmet/simd/kernels.hpp"

using namespace qhmet::simd;

namespace {

struct Arrays {
  std::vector<double> xs, ys;
};

Arrays random_arrays(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  Arrays a;
  for (std::size_t i = 0; i < n; ++i) {
    a.xs.push_back(u(gen));
    a.ys.push_back(u(gen));
  }
  return a;
}

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

}  // namespace

class SimdEquivalence : public ::testing::Test {
 protected:
  void SetUp() override {
    vec_ = avx2_kernels();
    if (vec_ == nullptr) GTEST_SKIP() << "AVX2 variant unavailable on this CPU or build";
  }
  const KernelTable& ref_ = scalar_kernels();
  const KernelTable* vec_ = nullptr;
};

TEST_F(SimdEquivalence, NearestSample) {
  // Lengths around the vector width exercise the scalar tails.
  for (std::size_t n : {1u, 3u, 4u, 5u, 17u, 1000u, 4099u}) {
    const Arrays a = random_arrays(n, n);
    for (int q = 0; q < 20; ++q) {
      const double px = 0.1 * q - 1.0, py = 0.7 - 0.05 * q;
      const NearestSample r = ref_.nearest_sample(px, py, a.xs.data(), a.ys.data(), n);
      const NearestSample v = vec_->nearest_sample(px, py, a.xs.data(), a.ys.data(), n);
      EXPECT_EQ(r.index, v.index);
      EXPECT_TRUE(same_bits(r.dist2, v.dist2));
    }
  }
}

TEST_F(SimdEquivalence, NearestSampleTiesGoToTheLowestIndex) {
  std::vector<double> xs(9, 1.0), ys(9, 0.0);
  EXPECT_EQ(vec_->nearest_sample(0.0, 0.0, xs.data(), ys.data(), xs.size()).index, 0u);
  EXPECT_EQ(ref_.nearest_sample(0.0, 0.0, xs.data(), ys.data(), xs.size()).index, 0u);
}

TEST_F(SimdEquivalence, MinPairwiseDistance) {
  for (std::size_t n : {1u, 6u, 33u, 500u}) {
    const Arrays a = random_arrays(n, 100 + n), b = random_arrays(n + 3, 200 + n);
    const double r = ref_.min_pairwise_dist2(a.xs.data(), a.ys.data(), n, b.xs.data(), b.ys.data(), n + 3);
    const double v = vec_->min_pairwise_dist2(a.xs.data(), a.ys.data(), n, b.xs.data(), b.ys.data(), n + 3);
    EXPECT_TRUE(same_bits(r, v));
  }
}

TEST_F(SimdEquivalence, BallAndDiamondDelta) {
  for (std::size_t n : {1u, 7u, 64u, 1001u}) {
    const Arrays a = random_arrays(n, 300 + n);
    std::vector<double> r(n), v(n);
    ref_.ball_delta(0.2, -0.1, 1.3, a.xs.data(), a.ys.data(), r.data(), n);
    vec_->ball_delta(0.2, -0.1, 1.3, a.xs.data(), a.ys.data(), v.data(), n);
    for (std::size_t i = 0; i < n; ++i) ASSERT_TRUE(same_bits(r[i], v[i])) << i;
    ref_.diamond_delta(a.xs.data(), a.ys.data(), r.data(), n);
    vec_->diamond_delta(a.xs.data(), a.ys.data(), v.data(), n);
    for (std::size_t i = 0; i < n; ++i) ASSERT_TRUE(same_bits(r[i], v[i])) << i;
  }
}

TEST(SimdScalar, KernelsMatchDirectFormulas) {
  const KernelTable& k = scalar_kernels();
  const Arrays a = random_arrays(50, 7);
  std::vector<double> out(50);
  k.ball_delta(0.0, 0.0, 2.0, a.xs.data(), a.ys.data(), out.data(), 50);
  for (std::size_t i = 0; i < 50; ++i) EXPECT_NEAR(out[i], 2.0 - std::hypot(a.xs[i], a.ys[i]), 1e-15);
  k.diamond_delta(a.xs.data(), a.ys.data(), out.data(), 50);
  for (std::size_t i = 0; i < 50; ++i) {
    EXPECT_NEAR(out[i], (1.0 - std::abs(a.xs[i]) - std::abs(a.ys[i])) * kInvSqrt2, 1e-15);
  }
  double best = INFINITY;
  std::size_t arg = 0;
  for (std::size_t i = 0; i < 50; ++i) {
    const double d2 = (a.xs[i] - 0.3) * (a.xs[i] - 0.3) + (a.ys[i] + 0.2) * (a.ys[i] + 0.2);
    if (d2 < best) {
      best = d2;
      arg = i;
    }
  }
  EXPECT_EQ(k.nearest_sample(0.3, -0.2, a.xs.data(), a.ys.data(), 50).index, arg);
}
