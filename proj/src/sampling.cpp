#include "sampling.hpp"

#include <cmath>
#include <numbers>

#include "qhmet/errors.hpp"

namespace qhmet::detail {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t hash_id(std::string_view id) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : id) h = (h ^ c) * 0x100000001b3ULL;
  return h;
}

Rng::Rng(std::uint64_t seed, std::uint64_t salt, std::uint64_t index)
    : state_(splitmix64(splitmix64(seed ^ salt) + index)) {}

std::uint64_t Rng::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Rng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double Rng::log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }

double Rng::angle() { return uniform(-std::numbers::pi, std::numbers::pi); }

Point sample_in(const DomainSpec& domain, Rng& rng, double min_delta) {
  const std::optional<Box> box = bounding_box(domain);
  if (!box) throw PreconditionError("cannot sample uniformly from " + to_string(domain));
  for (int attempt = 0; attempt < 100000; ++attempt) {
    const Point p = Point::planar(rng.uniform(box->xmin, box->xmax), rng.uniform(box->ymin, box->ymax));
    const DistanceToBoundary d = delta(domain, p);
    if (d.interior && d.value >= min_delta) return p;
  }
  throw PreconditionError("rejection sampling found no point in " + to_string(domain));
}

Point sample_in_disk(const Point& center, double radius, Rng& rng) {
  for (;;) {
    const double u = rng.uniform(-1.0, 1.0), v = rng.uniform(-1.0, 1.0);
    if (u * u + v * v < 1.0) return Point::planar(center.x() + radius * u, center.y() + radius * v);
  }
}

}  // namespace qhmet::detail
