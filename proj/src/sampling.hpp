#pragma once

#include <cstdint>
#include <string_view>

#include "qhmet/domains.hpp"
#include "qhmet/point.hpp"

namespace qhmet::detail {

std::uint64_t splitmix64(std::uint64_t x);

/// FNV-1a; salts the stream of one check so that ids sharing a seed differ.
std::uint64_t hash_id(std::string_view id);

/// Counter-based stream: the state is a pure function of (seed, salt, index),
/// so a sample's draws do not depend on evaluation order.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t salt, std::uint64_t index);
  std::uint64_t next();
  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// exp of a uniform draw in [log lo, log hi].
  double log_uniform(double lo, double hi);
  double angle();

 private:
  std::uint64_t state_;
};

/// Uniform in area over {p in domain : delta(p) >= min_delta} by rejection
/// from the bounding box. Throws PreconditionError for unbounded domains or
/// when 100000 draws all miss.
Point sample_in(const DomainSpec& domain, Rng& rng, double min_delta = 0.0);

/// Uniform in area over the planar disk B(center, radius).
Point sample_in_disk(const Point& center, double radius, Rng& rng);

}  // namespace qhmet::detail
