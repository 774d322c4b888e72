#include "qhmet/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "checks.hpp"
#include "qhmet/closed_form.hpp"
#include "qhmet/errors.hpp"
#include "qhmet/parallel.hpp"

namespace qhmet {
namespace {

constexpr std::string_view kCounterexample = "thm4.1.j.counterexample";
constexpr std::string_view kConjecture = "conj4.3";
constexpr double kEqualityExact = 1e-9;

void reduce(CheckReport& rep, const std::vector<detail::Evaluation>& evals) {
  double worst = std::numeric_limits<double>::infinity();
  std::size_t worst_index = evals.size();
  for (std::size_t i = 0; i < evals.size(); ++i) {
    const detail::Evaluation& e = evals[i];
    if (e.skipped) {
      ++rep.skipped;
      continue;
    }
    bool violated = false, noisy = false;
    for (const detail::Part& p : e.parts) {
      if (p.margin < -p.tol || std::isnan(p.margin)) {
        violated = true;
      } else if (p.numeric && std::fabs(p.margin) <= p.tol) {
        noisy = true;
      }
    }
    if (violated) {
      ++rep.violations;
    } else if (noisy) {
      ++rep.inconclusive;
    }
    const detail::Part& head = e.parts.front();
    if (std::fabs(head.margin) <= (head.numeric ? head.tol : kEqualityExact)) ++rep.equalities;
    if (head.margin < worst) {
      worst = head.margin;
      worst_index = i;
    }
  }
  if (worst_index < evals.size()) {
    const detail::Evaluation& e = evals[worst_index];
    rep.worst_margin = worst;
    rep.witness.push_back({"sample", static_cast<double>(worst_index)});
    rep.witness.insert(rep.witness.end(), e.witness.begin(), e.witness.end());
    for (const detail::Part& p : e.parts) {
      rep.witness.push_back({"margin." + std::string(p.name), p.margin});
      rep.witness.push_back({"tol." + std::string(p.name), p.tol});
    }
  } else {
    rep.worst_margin = std::numeric_limits<double>::quiet_NaN();
  }
  // A run where nothing could be evaluated proves nothing.
  rep.pass = rep.violations == 0 && rep.skipped < evals.size();
}

CheckReport run_sampled(const detail::CheckDef& def, std::size_t n, std::uint64_t seed) {
  CheckReport rep;
  rep.check_id = def.id;
  rep.n_samples = n;
  rep.seed = seed;
  rep.note = def.note;
  std::vector<detail::Evaluation> evals(n);
  const std::uint64_t salt = detail::hash_id(def.id);
  parallel_for(n, [&](std::size_t i) {
    detail::Rng rng(seed, salt, i);
    try {
      evals[i] = def.eval(i, rng);
    } catch (const ConnectivityError&) {
      evals[i].skipped = true;
    } catch (const ContainmentError&) {
      evals[i].skipped = true;
    }
  });
  reduce(rep, evals);
  return rep;
}

// j_diamond / j_disk at x = (1-eps, 0), y = (-1+eps, 0) for eps = 1e-1 .. 1e-6.
CheckReport run_counterexample(std::uint64_t seed) {
  CheckReport rep;
  rep.check_id = kCounterexample;
  rep.seed = seed;
  rep.note = "fixed sequence; the sample count does not apply";
  const DomainSpec diamond = DomainSpec::diamond();
  const DomainSpec disk = DomainSpec::unit_ball(2);
  std::vector<double> ratios;
  for (int i = 1; i <= 6; ++i) {
    const double eps = std::pow(10.0, -i);
    const Point x = Point::planar(1.0 - eps, 0.0), y = Point::planar(-1.0 + eps, 0.0);
    const double r = j_metric(diamond, x, y).value / j_metric(disk, x, y).value;
    ratios.push_back(r);
    rep.summary.push_back({"ratio_eps_1e-" + std::to_string(i), r});
  }
  rep.n_samples = ratios.size();
  std::vector<NamedValue> margins;
  for (std::size_t i = 0; i + 1 < ratios.size(); ++i) {
    margins.push_back({"decrease_" + std::to_string(i + 1), ratios[i] - ratios[i + 1]});
  }
  for (std::size_t i = 0; i < ratios.size(); ++i) margins.push_back({"above_one_" + std::to_string(i + 1), ratios[i] - 1.0});
  margins.push_back({"below_1.05_at_1e-6", 1.05 - ratios.back()});
  const auto worst = std::min_element(margins.begin(), margins.end(),
                                      [](const NamedValue& a, const NamedValue& b) { return a.value < b.value; });
  for (const NamedValue& m : margins) {
    if (!(m.value > 0.0)) ++rep.violations;
  }
  rep.worst_margin = worst->value;
  rep.witness = {*worst};
  rep.pass = rep.violations == 0;
  return rep;
}

CheckReport run_conjecture(std::size_t n, std::uint64_t seed) {
  static constexpr double kGrid[] = {0.25, 0.5, 0.75, 1.0};
  constexpr std::size_t kCells = 6;
  CheckReport rep;
  rep.check_id = kConjecture;
  rep.n_samples = n;
  rep.seed = seed;
  rep.note = "exploratory: the sample count is split over the six cells with s < t; no pass/fail";
  rep.cells = explore_conjecture(kGrid, kGrid, (n + kCells - 1) / kCells, seed);
  double worst = std::numeric_limits<double>::infinity();
  for (const ConjectureCell& c : rep.cells) {
    rep.skipped += c.skipped;
    if (c.status == "inconclusive") ++rep.inconclusive;
    if (c.pairs > c.skipped && c.margin < worst) {
      worst = c.margin;
      rep.witness = {{"s", c.s},         {"t", c.t},         {"target", c.target},
                     {"min_ratio", c.min_ratio}, {"ratio_error", c.ratio_error}};
    }
  }
  rep.worst_margin = std::isfinite(worst) ? worst : std::numeric_limits<double>::quiet_NaN();
  return rep;
}

}  // namespace

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& d : detail::sampled_checks()) v.emplace_back(d.id);
    v.emplace_back(kCounterexample);
    v.emplace_back(kConjecture);
    std::sort(v.begin(), v.end());
    return v;
  }();
  return ids;
}

std::vector<std::string> suite_all() {
  std::vector<std::string> v;
  for (const std::string& id : check_ids()) {
    if (id != kConjecture) v.push_back(id);
  }
  return v;
}

MeshParams check_mesh_params() {
  MeshParams p;
  p.h = 0.3;
  p.relax_tol = 1e-4;
  return p;
}

CheckReport run_check(const std::string& check_id, std::size_t n_samples, std::uint64_t seed) {
  if (std::find(check_ids().begin(), check_ids().end(), check_id) == check_ids().end()) {
    throw RegistryError("unknown check id '" + check_id + "'");
  }
  if (n_samples < 1) throw PreconditionError("n_samples must be at least 1");
  const auto start = std::chrono::steady_clock::now();
  CheckReport rep;
  if (check_id == kCounterexample) {
    rep = run_counterexample(seed);
  } else if (check_id == kConjecture) {
    rep = run_conjecture(n_samples, seed);
  } else {
    for (const auto& d : detail::sampled_checks()) {
      if (d.id == check_id) rep = run_sampled(d, n_samples, seed);
    }
  }
  rep.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::vector<CheckReport> run_suite(std::span<const std::string> ids, std::size_t n_samples, std::uint64_t seed) {
  std::vector<std::string> sorted(ids.begin(), ids.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<CheckReport> out;
  for (const std::string& id : sorted) {
    try {
      out.push_back(run_check(id, n_samples, seed));
    } catch (const std::exception& e) {
      CheckReport rep;
      rep.check_id = id;
      rep.n_samples = n_samples;
      rep.seed = seed;
      rep.worst_margin = std::numeric_limits<double>::quiet_NaN();
      rep.pass = false;
      rep.note = std::string("error: ") + e.what();
      out.push_back(std::move(rep));
    }
  }
  return out;
}

}  // namespace qhmet
