#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "qhmet/verify.hpp"
#include "sampling.hpp"

namespace qhmet::detail {

/// One inequality of a sample: margin >= -tol means satisfied.
struct Part {
  std::string_view name;
  double margin = 0.0;
  double tol = 0.0;
  bool numeric = false;
};

/// parts[0] is the margin the report aggregates; every part can cause a
/// violation.
struct Evaluation {
  bool skipped = false;
  std::vector<Part> parts;
  std::vector<NamedValue> witness;
};

using Evaluator = Evaluation (*)(std::uint64_t index, Rng& rng);

struct CheckDef {
  std::string_view id;
  Evaluator eval;
  std::string_view note;
};

/// Every check that evaluates independent samples, in id order.
const std::vector<CheckDef>& sampled_checks();

/// 2 * (summed error estimates) + 1e-9, capped at 5e-3.
double numeric_tolerance(double error_sum);

struct KValue {
  double value = 0.0;
  double error = 0.0;
};
KValue k_solve(const DomainSpec& domain, const Point& x, const Point& y, const MeshParams& params);

}  // namespace qhmet::detail
