// Compiled with -mavx2 (no -mfma): products and sums round exactly as in the
// scalar reference.

#include <immintrin.h>

#include <cmath>
#include <limits>

#include "qhmet/simd/kernels.hpp"

namespace qhmet::simd {

const KernelTable& avx2_table();

namespace {

inline __m256d abs_pd(__m256d v) {
  const __m256d sign = _mm256_set1_pd(-0.0);
  return _mm256_andnot_pd(sign, v);
}

NearestSample nearest_sample_avx2(double px, double py, const double* xs, const double* ys,
                                  std::size_t n) {
  const double inf = std::numeric_limits<double>::infinity();
  const __m256d vpx = _mm256_set1_pd(px);
  const __m256d vpy = _mm256_set1_pd(py);
  __m256d best = _mm256_set1_pd(inf);
  // Lane-local index of the running minimum, kept as doubles (exact below 2^53).
  __m256d best_idx = _mm256_setzero_pd();
  __m256d idx = _mm256_setr_pd(0.0, 1.0, 2.0, 3.0);
  const __m256d step = _mm256_set1_pd(4.0);

  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(xs + i), vpx);
    const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(ys + i), vpy);
    const __m256d d2 = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
    const __m256d lt = _mm256_cmp_pd(d2, best, _CMP_LT_OQ);
    best = _mm256_blendv_pd(best, d2, lt);
    best_idx = _mm256_blendv_pd(best_idx, idx, lt);
    idx = _mm256_add_pd(idx, step);
  }

  alignas(32) double lane_best[4];
  alignas(32) double lane_idx[4];
  _mm256_store_pd(lane_best, best);
  _mm256_store_pd(lane_idx, best_idx);

  NearestSample out{0, inf};
  for (int l = 0; l < 4; ++l) {
    const auto li = static_cast<std::size_t>(lane_idx[l]);
    if (lane_best[l] < out.dist2 || (lane_best[l] == out.dist2 && li < out.index)) {
      out = {li, lane_best[l]};
    }
  }
  for (; i < n; ++i) {
    const double dx = xs[i] - px;
    const double dy = ys[i] - py;
    const double d2 = dx * dx + dy * dy;
    if (d2 < out.dist2) out = {i, d2};
  }
  return out;
}

double min_pairwise_dist2_avx2(const double* ax, const double* ay, std::size_t na,
                               const double* bx, const double* by, std::size_t nb) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < na; ++i) {
    const double d2 = nearest_sample_avx2(ax[i], ay[i], bx, by, nb).dist2;
    if (d2 < best) best = d2;
  }
  return best;
}

void ball_delta_avx2(double cx, double cy, double r, const double* xs, const double* ys,
                     double* out, std::size_t n) {
  const __m256d vcx = _mm256_set1_pd(cx);
  const __m256d vcy = _mm256_set1_pd(cy);
  const __m256d vr = _mm256_set1_pd(r);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(xs + i), vcx);
    const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(ys + i), vcy);
    const __m256d d2 = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
    _mm256_storeu_pd(out + i, _mm256_sub_pd(vr, _mm256_sqrt_pd(d2)));
  }
  for (; i < n; ++i) {
    const double dx = xs[i] - cx;
    const double dy = ys[i] - cy;
    out[i] = r - std::sqrt(dx * dx + dy * dy);
  }
}

void diamond_delta_avx2(const double* xs, const double* ys, double* out, std::size_t n) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d k = _mm256_set1_pd(kInvSqrt2);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d ax = abs_pd(_mm256_loadu_pd(xs + i));
    const __m256d ay = abs_pd(_mm256_loadu_pd(ys + i));
    _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_sub_pd(_mm256_sub_pd(one, ax), ay), k));
  }
  for (; i < n; ++i) {
    out[i] = ((1.0 - std::fabs(xs[i])) - std::fabs(ys[i])) * kInvSqrt2;
  }
}

}  // namespace

const KernelTable& avx2_table() {
  static const KernelTable table{"avx2", &nearest_sample_avx2, &min_pairwise_dist2_avx2,
                                 &ball_delta_avx2, &diamond_delta_avx2};
  return table;
}

}  // namespace qhmet::simd
