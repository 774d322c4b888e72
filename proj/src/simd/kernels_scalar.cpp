#include <cmath>
#include <limits>

#include "qhmet/simd/kernels.hpp"

namespace qhmet::simd {
namespace {

NearestSample nearest_sample_scalar(double px, double py, const double* xs, const double* ys,
                                    std::size_t n) {
  NearestSample best{0, std::numeric_limits<double>::infinity()};
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = xs[i] - px;
    const double dy = ys[i] - py;
    const double d2 = dx * dx + dy * dy;
    if (d2 < best.dist2) best = {i, d2};
  }
  return best;
}

double min_pairwise_dist2_scalar(const double* ax, const double* ay, std::size_t na,
                                 const double* bx, const double* by, std::size_t nb) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < na; ++i) {
    const double d2 = nearest_sample_scalar(ax[i], ay[i], bx, by, nb).dist2;
    if (d2 < best) best = d2;
  }
  return best;
}

void ball_delta_scalar(double cx, double cy, double r, const double* xs, const double* ys,
                       double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = xs[i] - cx;
    const double dy = ys[i] - cy;
    out[i] = r - std::sqrt(dx * dx + dy * dy);
  }
}

void diamond_delta_scalar(const double* xs, const double* ys, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = ((1.0 - std::fabs(xs[i])) - std::fabs(ys[i])) * kInvSqrt2;
  }
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{"scalar", &nearest_sample_scalar, &min_pairwise_dist2_scalar,
                                 &ball_delta_scalar, &diamond_delta_scalar};
  return table;
}

}  // namespace qhmet::simd
