#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qhmet/point.hpp"
#include "qhmet/qh_solver.hpp"

namespace qhmet {

struct NamedValue {
  std::string name;
  double value = 0.0;
};

/// Per-(s, t) outcome of the superellipse comparison scan.
struct ConjectureCell {
  double s = 0.0, t = 0.0;
  /// 2^(1/s - 1/t).
  double target = 0.0;
  std::size_t pairs = 0, skipped = 0;
  /// Smallest k_s / k_t over the sampled pairs, with the solver error of that
  /// ratio and its endpoints.
  double min_ratio = 0.0;
  double ratio_error = 0.0;
  Point z1, z2;
  /// min_ratio - target; below -ratio_error would be a counterexample
  /// candidate, within +-ratio_error it is inconclusive.
  double margin = 0.0;
  std::string status;
};

struct CheckReport {
  std::string check_id;
  std::size_t n_samples = 0;
  std::uint64_t seed = 0;
  std::size_t violations = 0;
  /// Samples whose numeric margin lies inside the solver noise band.
  std::size_t inconclusive = 0;
  /// Samples the numeric solver could not evaluate.
  std::size_t skipped = 0;
  /// Samples on the equality case: |margin| <= 1e-9 for exact margins, within
  /// the tolerance for numeric ones.
  std::size_t equalities = 0;
  double worst_margin = 0.0;
  std::vector<NamedValue> witness;
  /// Empty for the exploratory check.
  std::optional<bool> pass;
  double elapsed = 0.0;
  std::string note;
  /// Check-specific aggregates, e.g. the counterexample ratio sequence.
  std::vector<NamedValue> summary;
  std::vector<ConjectureCell> cells;
};

/// Registered ids in report order. "conj4.3" is the exploratory scan.
const std::vector<std::string>& check_ids();

/// The ids "all" expands to: every registered check except the exploratory one.
std::vector<std::string> suite_all();

/// Solver settings used by checks that call k_numeric.
MeshParams check_mesh_params();

/// Deterministic in (check_id, n_samples, seed). Throws RegistryError for an
/// unknown id and PreconditionError for n_samples < 1.
CheckReport run_check(const std::string& check_id, std::size_t n_samples, std::uint64_t seed);

/// Reports sorted by check id. A check that throws yields a failed report
/// carrying the message in `note`; the rest of the suite still runs.
std::vector<CheckReport> run_suite(std::span<const std::string> ids, std::size_t n_samples, std::uint64_t seed);

/// k over the Superellipse(s) / Superellipse(t) pairs on pairs drawn from
/// Superellipse(s). Cells with s >= t are skipped when `skip_invalid`, and
/// otherwise throw PreconditionError.
std::vector<ConjectureCell> explore_conjecture(std::span<const double> s_grid, std::span<const double> t_grid,
                                               std::size_t pairs_per_cell, std::uint64_t seed,
                                               bool skip_invalid = true, const MeshParams& params = check_mesh_params());

/// JSON array, one object per report. `with_elapsed` = false drops the timing
/// field so that repeated runs compare byte for byte.
void write_reports_json(std::ostream& out, std::span<const CheckReport> reports, bool with_elapsed = true);

/// CSV "s,t,target,min_ratio,ratio_error,margin,pairs,skipped,status".
void write_conjecture_csv(std::ostream& out, std::span<const ConjectureCell> cells, int precision = 10);

}  // namespace qhmet
