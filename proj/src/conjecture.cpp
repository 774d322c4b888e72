#include <bit>
#include <cmath>
#include <limits>

#include "checks.hpp"
#include "qhmet/errors.hpp"
#include "qhmet/parallel.hpp"
#include "qhmet/verify.hpp"

namespace qhmet {
namespace {

constexpr double kMinDelta = 1e-4;

struct PairOutcome {
  bool skipped = true;
  double ratio = 0.0, error = 0.0;
  Point z1, z2;
};

DomainSpec superellipse_or_diamond(double s) { return s == 1.0 ? DomainSpec::diamond() : DomainSpec::superellipse(s); }

ConjectureCell run_cell(double s, double t, std::size_t pairs, std::uint64_t seed, const MeshParams& params) {
  ConjectureCell cell;
  cell.s = s;
  cell.t = t;
  cell.target = std::exp2(1.0 / s - 1.0 / t);
  cell.pairs = pairs;
  const DomainSpec gs = superellipse_or_diamond(s);
  const DomainSpec gt = superellipse_or_diamond(t);
  // Per-cell stream: a cell's pairs do not depend on which other cells run.
  const std::uint64_t salt = detail::hash_id("conj4.3") ^ detail::splitmix64(std::bit_cast<std::uint64_t>(s)) ^
                             detail::splitmix64(~std::bit_cast<std::uint64_t>(t));
  std::vector<PairOutcome> out(pairs);
  parallel_for(pairs, [&](std::size_t i) {
    detail::Rng rng(seed, salt, i);
    PairOutcome& o = out[i];
    o.z1 = detail::sample_in(gs, rng, kMinDelta);
    do {
      o.z2 = detail::sample_in(gs, rng, kMinDelta);
    } while (o.z2 == o.z1);
    try {
      const detail::KValue ks = detail::k_solve(gs, o.z1, o.z2, params);
      const detail::KValue kt = detail::k_solve(gt, o.z1, o.z2, params);
      o.ratio = ks.value / kt.value;
      o.error = (detail::numeric_tolerance(ks.error) + o.ratio * detail::numeric_tolerance(kt.error)) / kt.value;
      o.skipped = false;
    } catch (const ConnectivityError&) {
    } catch (const ContainmentError&) {
    }
  });
  cell.min_ratio = std::numeric_limits<double>::infinity();
  for (const PairOutcome& o : out) {
    if (o.skipped) {
      ++cell.skipped;
    } else if (o.ratio < cell.min_ratio) {
      cell.min_ratio = o.ratio;
      cell.ratio_error = o.error;
      cell.z1 = o.z1;
      cell.z2 = o.z2;
    }
  }
  if (cell.skipped == pairs) {
    cell.min_ratio = cell.margin = std::numeric_limits<double>::quiet_NaN();
    cell.status = "no-data";
    return cell;
  }
  cell.margin = cell.min_ratio - cell.target;
  // Non-falsifying by design: a deficit inside the noise band is only inconclusive.
  if (cell.margin > cell.ratio_error) {
    cell.status = "consistent";
  } else if (cell.margin >= -cell.ratio_error) {
    cell.status = "inconclusive";
  } else {
    cell.status = "below-target";
  }
  return cell;
}

}  // namespace

std::vector<ConjectureCell> explore_conjecture(std::span<const double> s_grid, std::span<const double> t_grid,
                                               std::size_t pairs_per_cell, std::uint64_t seed, bool skip_invalid,
                                               const MeshParams& params) {
  validate(params);
  if (pairs_per_cell < 1) throw PreconditionError("pairs_per_cell must be at least 1");
  std::vector<ConjectureCell> cells;
  for (double s : s_grid) {
    for (double t : t_grid) {
      const bool valid = s > 0.0 && s < t && t <= 1.0;
      if (!valid) {
        if (skip_invalid) continue;
        throw PreconditionError("conjecture cells need 0 < s < t <= 1");
      }
      cells.push_back(run_cell(s, t, pairs_per_cell, seed, params));
    }
  }
  return cells;
}

}  // namespace qhmet
