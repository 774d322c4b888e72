// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Criteria 5, 6 and 10 share two CLI runs of the full suite at 1000 samples.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "qhmet/levelset.hpp"
#include "qhmet/qh_solver.hpp"
#include "qhmet/verify.hpp"

using namespace qhmet;
using Json = nlohmann::ordered_json;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
  if (!ok) ++failures;
  std::printf("criterion %2d: %s  %s\n", id, ok ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

int shell(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Json read_json(const std::filesystem::path& p) {
  std::ifstream in(p);
  return Json::parse(in);
}

const Json* find_report(const Json& reports, const std::string& id) {
  for (const Json& r : reports) {
    if (r["check_id"] == id) return &r;
  }
  return nullptr;
}

void criterion_1() {
  bool ok = true;
  std::string detail;
  const auto t0 = Clock::now();
  const double a = k_numeric(DomainSpec::unit_ball(), Point{0.0, 0.0}, Point{0.9, 0.0}).value;
  const double ta = since(t0);
  const auto t1 = Clock::now();
  const double b = k_numeric(DomainSpec::punctured_space(Point{0.0, 0.0}), Point{1.0, 0.0}, Point{0.0, 1.0}).value;
  const double tb = since(t1);
  const double ra = std::abs(a / std::log(10.0) - 1.0), rb = std::abs(b / (std::numbers::pi / 2) - 1.0);
  ok = ra <= 1e-3 && rb <= 1e-3 && ta < 2.0 && tb < 2.0;
  detail = fmt("ball %.9f (rel %.2e, %.2fs)  punctured %.9f (rel %.2e, %.2fs)", a, ra, ta, b, rb, tb);
  report(1, ok, detail);
}

void criterion_2(const std::filesystem::path& dir) {
  const std::vector<double> levels{1.1, 1.5, 1.9, 2.3};
  const double top = std::numbers::pi / std::log(3.0);

  const auto t0 = Clock::now();
  const int code = shell(std::string(QHMET_CLI_PATH) + " levelset --c 1.1,1.5,1.9,2.3 --out " +
                         (dir / "levels.csv").string() + " --svg " + (dir / "levels.svg").string() + " > /dev/null");
  const double cli_time = since(t0);

  // The emitted CSV is the artifact under test: re-evaluate every vertex.
  std::ifstream in(dir / "levels.csv");
  std::string line;
  std::getline(in, line);
  std::vector<std::size_t> per_level(levels.size(), 0);
  double worst = 0.0;
  while (std::getline(in, line)) {
    double c, x, y;
    long chain, vertex;
    if (std::sscanf(line.c_str(), "%lf,%ld,%ld,%lf,%lf", &c, &chain, &vertex, &x, &y) != 5) continue;
    worst = std::max(worst, std::abs(ratio_at(Point{x, y}) - c));
    for (std::size_t i = 0; i < levels.size(); ++i) {
      if (std::abs(c - levels[i]) < 1e-12) ++per_level[i];
    }
  }
  bool nonempty = true;
  for (std::size_t n : per_level) nonempty = nonempty && n > 0;

  // Nesting: traced at the same resolution, plus a level just above the maximum ratio.
  std::vector<double> probe = levels;
  probe.push_back(top + 1e-3);
  const auto contours = trace_levels(probe);
  const Point m1{-1.0, 0.0};
  bool nested = encloses(contours[3], m1) && !encloses(contours[4], m1);
  // The ratio on the negative axis peaks at -e1: compare the innermost
  // crossing on each side of t = 1 (none beyond the window or near 0).
  const auto sides = [](const Contour& c) {
    double left = 0.0, right = INFINITY;
    for (double t : negative_axis_crossings(c)) {
      if (t < 1.0) left = std::max(left, t);
      else right = std::min(right, t);
    }
    return std::pair{left, right};
  };
  for (std::size_t i = 1; i < levels.size(); ++i) {
    const auto [lo_out, hi_out] = sides(contours[i - 1]);
    const auto [lo_in, hi_in] = sides(contours[i]);
    nested = nested && lo_in > lo_out && hi_in <= hi_out;
  }
  const double at_m1 = ratio_at(m1);
  const bool constant = std::abs(at_m1 - top) <= 1e-9;
  const bool ok = code == 0 && nonempty && worst <= 1e-6 && nested && constant && cli_time < 30.0;
  report(2, ok,
         fmt("vertices %zu/%zu/%zu/%zu, max|ratio-c| %.2e, nested %s, ratio(-e1) %.12f vs pi/log3 %.12f, %.1fs",
             per_level[0], per_level[1], per_level[2], per_level[3], worst, nested ? "yes" : "no", at_m1, top,
             cli_time));
}

void criterion_3() {
  const SlopeResult r = sharp_slope(std::numbers::pi);
  const double target = 1.0 / std::log(3.0) - 1.0 / std::numbers::pi;
  const bool ok = std::abs(r.value - target) <= 1e-6 && std::abs(r.argmax - std::numbers::pi) <= 1e-6;
  report(3, ok, fmt("sup %.9f (target %.9f), argmax %.9f", r.value, target, r.argmax));
}

void criterion_4() {
  const std::vector<std::string> ids{"thm2.6.angular", "thm2.6.radial", "thm3.4",    "thm3.4.jung",
                                     "thm4.1.delta",   "axioms",        "monotonicity"};
  bool ok = true;
  std::size_t total = 0;
  std::string bad;
  const auto t0 = Clock::now();
  for (std::uint64_t seed : {1, 2, 3}) {
    for (const auto& id : ids) {
      const CheckReport r = run_check(id, 10000, seed);
      total += r.violations;
      if (r.violations != 0 || !r.pass.value_or(false)) {
        ok = false;
        bad += " " + id + "@" + std::to_string(seed);
      }
    }
  }
  report(4, ok, fmt("7 suites x seeds {1,2,3} x 10^4 samples: %zu violations%s, %.1fs", total,
                    bad.empty() ? "" : (", failing:" + bad).c_str(), since(t0)));
}

void criterion_5(const Json& run, double wall) {
  const std::vector<std::string> ids{"thm2.3", "thm3.3", "thm3.3.jung", "thm4.1.k",
                                     "thm4.2", "thm4.4.j", "thm4.4.k",   "cor4.5"};
  bool ok = true;
  double numeric_time = 0.0;
  std::string parts;
  for (const auto& id : ids) {
    const Json* r = find_report(run, id);
    if (r == nullptr) {
      ok = false;
      parts += " " + id + "=missing";
      continue;
    }
    const std::size_t v = (*r)["violations"], skipped = (*r)["skipped"], inc = (*r)["inconclusive"];
    numeric_time += (*r)["elapsed"].get<double>();
    ok = ok && v == 0 && (*r)["pass"] == true;
    parts += fmt(" %s=%zuv/%zui/%zus", id.c_str(), v, inc, skipped);
  }
  ok = ok && numeric_time < 600.0;
  report(5, ok, fmt("violations/inconclusive/skipped:%s; numeric suites %.0fs, whole suite %.0fs", parts.c_str(),
                    numeric_time, wall));
}

void criterion_6(const Json& run) {
  std::size_t e33 = 0, e34 = 0, e41 = 0;
  if (const Json* r = find_report(run, "thm3.3")) e33 = (*r)["equalities"];
  if (const Json* r = find_report(run, "thm3.4")) e34 = (*r)["equalities"];
  if (const Json* r = find_report(run, "thm4.1.delta")) e41 = (*r)["equalities"];
  // Boundary-distance ratio disk/diamond at (1 - eps) e1 tends to sqrt 2.
  const auto disk = DomainSpec::unit_ball(), dia = DomainSpec::diamond();
  const Point near_vertex{1.0 - 1e-6, 0.0};
  const double ratio = delta(disk, near_vertex).value / delta(dia, near_vertex).value;
  const bool ok = e33 > 0 && e34 > 0 && e41 > 0 && std::abs(ratio - std::numbers::sqrt2) <= 1e-9;
  report(6, ok, fmt("equalities thm3.3 %zu, thm3.4 %zu, thm4.1.delta %zu; delta ratio near vertex %.12f", e33, e34,
                    e41, ratio));
}

void criterion_7() {
  const CheckReport r = run_check("thm4.1.j.counterexample", 1, 1);
  bool decreasing = r.summary.size() == 6;
  for (std::size_t i = 1; decreasing && i < r.summary.size(); ++i) {
    decreasing = r.summary[i].value < r.summary[i - 1].value;
  }
  const double first = r.summary.empty() ? NAN : r.summary.front().value;
  const double last = r.summary.empty() ? NAN : r.summary.back().value;
  // Reference: log(1 + 1.8/(0.1/sqrt 2)) / log(1 + 1.8/0.1) evaluated directly.
  // It rounds to 1.112428; the quoted 1.11246 differs by 3.2e-5.
  const double ref = std::log1p(1.8 / (0.1 / std::numbers::sqrt2)) / std::log1p(1.8 / 0.1);
  const bool ok = decreasing && std::abs(first - ref) <= 1e-6 && first > 1.0 && last < 1.05;
  report(7, ok, fmt("ratios %.9f (direct formula %.9f, quoted 1.11246) .. %.6f, strictly decreasing %s", first, ref,
                    last, decreasing ? "yes" : "no"));
}

void criterion_8() {
  const CheckReport r = run_check("lem2.5", 1000, 7);
  report(8, r.violations == 0 && r.pass.value_or(false),
         fmt("1000 samples: %zu violations, worst margin %.3e", r.violations, r.worst_margin));
}

void criterion_9() {
  const std::vector<double> s{0.5}, t{1.0};
  const auto cell = explore_conjecture(s, t, 200, 7);
  const bool cell_ok = cell.size() == 1 && cell[0].pairs > cell[0].skipped &&
                       cell[0].min_ratio >= 2.0 - cell[0].ratio_error;
  const std::vector<double> grid{0.25, 0.5, 0.75, 1.0};
  const auto t0 = Clock::now();
  const auto cells = explore_conjecture(grid, grid, 20, 7);
  const double secs = since(t0);
  std::ostringstream csv;
  write_conjecture_csv(csv, cells);
  std::printf("%s", csv.str().c_str());
  const bool ok = cell_ok && cells.size() == 6 && secs < 900.0;
  report(9, ok,
         fmt("(0.5,1): min ratio %.6f, error %.2e, %zu pairs (%zu skipped); grid of %zu cells in %.0fs",
             cell.empty() ? NAN : cell[0].min_ratio, cell.empty() ? NAN : cell[0].ratio_error,
             cell.empty() ? 0 : cell[0].pairs, cell.empty() ? 0 : cell[0].skipped, cells.size(), secs));
}

void criterion_10(const Json& a, const Json& b, bool ran) {
  const auto strip = [](Json j) {
    for (Json& r : j) r.erase("elapsed");
    return j.dump();
  };
  const bool same = ran && strip(a) == strip(b);
  report(10, same, fmt("two CLI runs of the full suite (1000 samples, seed 7): %s", same ? "identical" : "differ"));
}

}  // namespace

int main() {
  const std::filesystem::path dir = std::filesystem::temp_directory_path() / "qhmet-acceptance";
  std::filesystem::create_directories(dir);

  criterion_1();
  criterion_2(dir);
  criterion_3();
  criterion_4();

  const std::string verify = std::string(QHMET_CLI_PATH) + " verify --suite all --samples 1000 --seed 7 --out ";
  auto t0 = Clock::now();
  const int c1 = shell(verify + (dir / "run1.json").string());
  const double wall = since(t0);
  const int c2 = shell(verify + (dir / "run2.json").string());
  // Exit status 1 just signals a failing check; the reports are still written.
  const bool ran = (c1 == 0 || c1 == 1) && (c2 == 0 || c2 == 1);
  Json run1 = Json::array(), run2 = Json::array();
  if (ran) {
    run1 = read_json(dir / "run1.json");
    run2 = read_json(dir / "run2.json");
  }
  criterion_5(run1, wall);
  criterion_6(run1);
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10(run1, run2, ran);

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
