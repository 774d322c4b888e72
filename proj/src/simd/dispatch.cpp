#include <cmath>
#include <cstdlib>
#include <string_view>

#include "qhmet/errors.hpp"
#include "qhmet/simd/kernels.hpp"

namespace qhmet::simd {

#if defined(QHMET_HAVE_AVX2)
const KernelTable& avx2_table();
#endif

const KernelTable* avx2_kernels() {
#if defined(QHMET_HAVE_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &avx2_table() : nullptr;
#else
  return nullptr;
#endif
}

namespace {

const KernelTable& select() {
  const char* env = std::getenv("QHMET_SIMD");
  if (env != nullptr && std::string_view(env) == "scalar") return scalar_kernels();
  if (const KernelTable* t = avx2_kernels()) return *t;
  return scalar_kernels();
}

void check_sizes(std::size_t a, std::size_t b) {
  if (a != b) throw PreconditionError("kernel input arrays differ in length");
}

}  // namespace

const KernelTable& active_kernels() {
  static const KernelTable& table = select();
  return table;
}

NearestSample nearest_sample(double px, double py, std::span<const double> xs,
                             std::span<const double> ys) {
  check_sizes(xs.size(), ys.size());
  return active_kernels().nearest_sample(px, py, xs.data(), ys.data(), xs.size());
}

double min_pairwise_distance(std::span<const double> ax, std::span<const double> ay,
                             std::span<const double> bx, std::span<const double> by) {
  check_sizes(ax.size(), ay.size());
  check_sizes(bx.size(), by.size());
  return std::sqrt(
      active_kernels().min_pairwise_dist2(ax.data(), ay.data(), ax.size(), bx.data(), by.data(),
                                          bx.size()));
}

void ball_delta(double cx, double cy, double r, std::span<const double> xs,
                std::span<const double> ys, std::span<double> out) {
  check_sizes(xs.size(), ys.size());
  check_sizes(xs.size(), out.size());
  active_kernels().ball_delta(cx, cy, r, xs.data(), ys.data(), out.data(), xs.size());
}

void diamond_delta(std::span<const double> xs, std::span<const double> ys, std::span<double> out) {
  check_sizes(xs.size(), ys.size());
  check_sizes(xs.size(), out.size());
  active_kernels().diamond_delta(xs.data(), ys.data(), out.data(), xs.size());
}

}  // namespace qhmet::simd
