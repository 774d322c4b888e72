#pragma once

#include <cstddef>
#include <span>

// Data-parallel inner loops over planar sample arrays (structure-of-arrays).
// Every kernel has a scalar reference and, on x86-64, an AVX2 variant. The
// variants are bit-identical: no FMA contraction, ties resolved to the lowest
// index. The active table is chosen once at startup from CPU features and can
// be pinned with QHMET_SIMD=scalar|avx2.

namespace qhmet::simd {

struct NearestSample {
  std::size_t index = 0;
  double dist2 = 0.0;
};

struct KernelTable {
  const char* name;
  NearestSample (*nearest_sample)(double px, double py, const double* xs, const double* ys,
                                  std::size_t n);
  double (*min_pairwise_dist2)(const double* ax, const double* ay, std::size_t na,
                               const double* bx, const double* by, std::size_t nb);
  void (*ball_delta)(double cx, double cy, double r, const double* xs, const double* ys,
                     double* out, std::size_t n);
  void (*diamond_delta)(const double* xs, const double* ys, double* out, std::size_t n);
};

const KernelTable& scalar_kernels();
/// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2.
const KernelTable* avx2_kernels();
/// The table selected for this process.
const KernelTable& active_kernels();

inline constexpr double kInvSqrt2 = 0.70710678118654752440;

// Convenience wrappers over the active table.

NearestSample nearest_sample(double px, double py, std::span<const double> xs,
                             std::span<const double> ys);
double min_pairwise_distance(std::span<const double> ax, std::span<const double> ay,
                             std::span<const double> bx, std::span<const double> by);
void ball_delta(double cx, double cy, double r, std::span<const double> xs,
                std::span<const double> ys, std::span<double> out);
void diamond_delta(std::span<const double> xs, std::span<const double> ys, std::span<double> out);

}  // namespace qhmet::simd
