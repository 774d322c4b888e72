// Command-line front end: dist, geodesic, levelset, verify, conjecture.
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qhmet/closed_form.hpp"
#include "qhmet/domains.hpp"
#include "qhmet/errors.hpp"
#include "qhmet/levelset.hpp"
#include "qhmet/qh_solver.hpp"
#include "qhmet/verify.hpp"

namespace {

using namespace qhmet;

enum Exit : int { kOk = 0, kFailed = 1, kUsage = 2, kDomain = 3, kIo = 4, kUnavailable = 5 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MethodUnavailable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fixed(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, v);
  return buf;
}

std::string full(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw ParseError("not a number: '" + item + "'");
    }
    if (used != item.size() || !std::isfinite(v)) throw ParseError("not a finite number: '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw ParseError("empty list");
  return out;
}

// Opens `path` for writing, or returns stdout for "-" / empty.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_) throw IoError("cannot open '" + path + "' for writing");
    path_ = path;
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  bool is_stdout() const { return !file_; }
  void close() {
    if (!file_) return;
    file_->close();
    if (!*file_) throw IoError("write to '" + path_ + "' failed");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::string path_;
};

struct MeshFlags {
  MeshParams p;
  void add(CLI::App* cmd) {
    cmd->add_option("--mesh-h", p.h, "grid step relative to boundary distance")->capture_default_str();
    cmd->add_option("--relax-tol", p.relax_tol, "relative convergence threshold of path relaxation")
        ->capture_default_str();
    cmd->add_option("--quad-tol", p.quad_tol, "per-segment quadrature tolerance")->capture_default_str();
    cmd->add_option("--degree", p.neighbor_degree, "grid connectivity, 8 or 16")->capture_default_str();
    cmd->add_option("--min-clearance", p.min_clearance, "drop nodes closer to the boundary than this share")
        ->capture_default_str();
    cmd->add_option("--max-subdivisions", p.max_subdivisions, "quadrature recursion depth cap")
        ->capture_default_str();
  }
};

// ---- dist -------------------------------------------------------------------

struct Distance {
  double value = 0.0;
  double error = 0.0;
  std::string method;
};

std::optional<double> exact_k(const DomainSpec& d, const Point& x, const Point& y) {
  if (x == y) return 0.0;
  if (const PuncturedSpace* ps = d.get_if<PuncturedSpace>()) return k_punctured(x, y, ps->puncture).value;
  if (const Ball* b = d.get_if<Ball>()) {
    try {
      return k_ball_radial(*b, x, y).value;
    } catch (const PreconditionError&) {
    }
    try {
      return k_ball_diameter(*b, x, y).value;
    } catch (const PreconditionError&) {
    }
  }
  return std::nullopt;
}

Distance compute_distance(const DomainSpec& d, const std::string& metric, const std::string& method, const Point& x,
                          const Point& y, const MeshParams& mesh) {
  if (metric == "j") {
    if (method == "numeric") throw MethodUnavailable("j has no numeric method; it is always exact");
    return {j_metric(d, x, y).value, 0.0, "exact"};
  }
  if (metric == "rho") {
    const Ball* b = d.get_if<Ball>();
    if (b == nullptr) throw MethodUnavailable("rho is defined for balls only");
    if (method == "numeric") throw MethodUnavailable("rho has no numeric method");
    if (!contains(d, x) || !contains(d, y)) throw DomainError("points must lie inside " + to_string(d));
    // Similarity to the unit ball.
    const double s = 1.0 / b->radius;
    return {rho_ball(s * (x - b->center), s * (y - b->center)).value, 0.0, "exact"};
  }
  if (!contains(d, x)) throw DomainError("point " + to_string(x) + " is not interior to " + to_string(d));
  if (!contains(d, y)) throw DomainError("point " + to_string(y) + " is not interior to " + to_string(d));
  if (method != "numeric") {
    if (const auto v = exact_k(d, x, y)) return {*v, 0.0, "exact"};
    if (method == "exact") throw MethodUnavailable("no closed form for k on " + to_string(d) + " for these points");
  }
  if (d.dim() != 2) throw MethodUnavailable("the numeric k solver is planar only");
  const GeodesicResult r = k_numeric(d, x, y, mesh);
  return {r.value, r.error_estimate, "numeric"};
}

int cmd_dist(const std::string& domain_text, const std::string& metric, const std::string& method,
             const std::string& xs, const std::string& ys, const MeshParams& mesh, int precision,
             const std::string& json_path) {
  const DomainSpec d = parse_domain(domain_text);
  const Point x = parse_point(xs), y = parse_point(ys);
  const Distance r = compute_distance(d, metric, method, x, y, mesh);
  std::cout << fixed(r.value, precision) << " method=" << r.method << " error=" << fixed(r.error, precision) << '\n';
  if (!json_path.empty()) {
    Output out(json_path);
    nlohmann::ordered_json o{{"metric", metric},         {"domain", to_string(d)},
                             {"x", std::vector<double>(x.coords().begin(), x.coords().end())},
                             {"y", std::vector<double>(y.coords().begin(), y.coords().end())},
                             {"value", r.value},         {"method", r.method},
                             {"error_estimate", r.error}};
    out.stream() << o.dump(2) << '\n';
    out.close();
  }
  return kOk;
}

// ---- geodesic ---------------------------------------------------------------

int cmd_geodesic(const std::string& domain_text, const std::string& xs, const std::string& ys, const MeshParams& mesh,
                 int precision, const std::string& out_path) {
  const DomainSpec d = parse_domain(domain_text);
  const Point x = parse_point(xs), y = parse_point(ys);
  const GeodesicResult r = k_numeric(d, x, y, mesh);
  Output out(out_path);
  out.stream() << "vertex_id,x,y\n";
  for (std::size_t i = 0; i < r.path.size(); ++i) {
    out.stream() << i << ',' << full(r.path[i].x()) << ',' << full(r.path[i].y()) << '\n';
  }
  out.close();
  // The summary goes to stderr when the polyline occupies stdout.
  std::ostream& log = out.is_stdout() ? std::cerr : std::cout;
  log << "length=" << fixed(r.value, precision) << " error=" << fixed(r.error_estimate, precision)
      << " vertices=" << r.path.size() << " levels=" << r.refinement_levels << '\n';
  return kOk;
}

// ---- levelset ---------------------------------------------------------------

int cmd_levelset(const std::string& levels_text, const std::string& csv_path, const std::string& svg_path,
                 const std::string& window_text, int resolution, double tol) {
  const std::vector<double> levels = parse_list(levels_text);
  Window w;
  if (!window_text.empty()) {
    const std::vector<double> v = parse_list(window_text);
    if (v.size() != 4) throw ParseError("--window takes xmin,xmax,ymin,ymax");
    w = {v[0], v[1], v[2], v[3]};
  }
  for (double c : levels) {
    if (c < 1.0) std::cerr << "warning: level " << c << " is below 1, where k/j never goes; its contour is empty\n";
  }
  // Open outputs first so that an unwritable path fails before the work.
  std::optional<Output> csv, svg;
  if (!csv_path.empty()) csv.emplace(csv_path);
  if (!svg_path.empty()) svg.emplace(svg_path);
  const std::vector<Contour> contours = trace_levels(levels, w, resolution, tol);
  if (csv) {
    write_contours_csv(csv->stream(), contours);
    csv->close();
  } else if (!svg) {
    write_contours_csv(std::cout, contours);
  }
  if (svg) {
    write_contours_svg(svg->stream(), contours, w);
    svg->close();
  }
  std::ostream& log = (csv && !csv->is_stdout()) || svg ? std::cout : std::cerr;
  for (const Contour& c : contours) {
    std::size_t closed = 0;
    for (bool b : c.closed) closed += b ? 1 : 0;
    log << "level " << c.level << ": chains=" << c.chains.size() << " closed=" << closed
        << " vertices=" << c.vertex_count() << '\n';
  }
  return kOk;
}

// ---- verify -----------------------------------------------------------------

std::string registry_listing() {
  std::string s = "registered checks:";
  for (const std::string& id : check_ids()) s += " " + id;
  return s + " (or 'all')";
}

int cmd_verify(const std::string& suite, long long samples, unsigned long long seed, const std::string& out_path,
               bool no_elapsed) {
  std::vector<std::string> ids;
  std::stringstream ss(suite);
  std::string id;
  while (std::getline(ss, id, ',')) {
    if (id == "all") {
      const auto all = suite_all();
      ids.insert(ids.end(), all.begin(), all.end());
      continue;
    }
    if (std::find(check_ids().begin(), check_ids().end(), id) == check_ids().end()) {
      throw RegistryError("unknown check id '" + id + "'; " + registry_listing());
    }
    ids.push_back(id);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  if (samples < 1) throw PreconditionError("--samples must be at least 1");
  Output out(out_path);
  const std::vector<CheckReport> reports = run_suite(ids, static_cast<std::size_t>(samples), seed);
  write_reports_json(out.stream(), reports, !no_elapsed);
  out.close();
  bool ok = true;
  for (const CheckReport& r : reports) {
    if (r.pass.has_value() && !*r.pass) ok = false;
    if (!r.pass.has_value() && r.note.rfind("error:", 0) == 0) ok = false;
    if (!r.cells.empty()) {
      std::cerr << r.check_id << " margins (exploratory):\n";
      write_conjecture_csv(std::cerr, r.cells, 6);
    }
    if (r.pass.has_value()) {
      std::cerr << (*r.pass ? "PASS " : "FAIL ") << r.check_id << " violations=" << r.violations
                << " inconclusive=" << r.inconclusive << " skipped=" << r.skipped << '\n';
    }
  }
  return ok ? kOk : kFailed;
}

// ---- conjecture -------------------------------------------------------------

int cmd_conjecture(const std::string& s_text, const std::string& t_text, long long pairs, unsigned long long seed,
                   const MeshParams& mesh, int precision, const std::string& out_path) {
  const std::vector<double> s = parse_list(s_text), t = parse_list(t_text);
  if (pairs < 1) throw PreconditionError("--pairs must be at least 1");
  for (double v : s) {
    if (!(v > 0.0 && v <= 1.0)) throw PreconditionError("exponents must lie in (0, 1]");
  }
  for (double v : t) {
    if (!(v > 0.0 && v <= 1.0)) throw PreconditionError("exponents must lie in (0, 1]");
  }
  // A single explicit cell must be valid; grids skip their s >= t cells.
  const bool single = s.size() == 1 && t.size() == 1;
  Output out(out_path);
  const std::vector<ConjectureCell> cells =
      explore_conjecture(s, t, static_cast<std::size_t>(pairs), seed, !single, mesh);
  if (cells.empty()) throw PreconditionError("no cell with s < t");
  write_conjecture_csv(out.stream(), cells, std::max(precision, 10));
  out.close();
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hyperbolic-type metrics: j, k and rho distances, geodesics, k/j level sets, inequality checks"};
  app.require_subcommand(1);
  app.fallthrough();
  int precision = 6;
  app.add_option("--precision", precision, "decimal places of printed values (0-15)")
      ->check(CLI::Range(0, 15))
      ->capture_default_str();

  std::string domain, xs, ys, metric = "k", method = "auto", json_path, out_path, svg_path;
  MeshFlags mesh;

  CLI::App* dist = app.add_subcommand("dist", "distance between two points");
  dist->add_option("--domain", domain, "ball:cx,cy,r | punctured[:px,py] | diamond | superellipse:s | "
                                       "punctured-ball:cx,cy,r,px,py")
      ->required();
  dist->add_option("--metric", metric)->check(CLI::IsMember({"j", "k", "rho"}))->capture_default_str();
  dist->add_option("--method", method)->check(CLI::IsMember({"exact", "numeric", "auto"}))->capture_default_str();
  dist->add_option("--x", xs, "point x,y")->required();
  dist->add_option("--y", ys, "point x,y")->required();
  dist->add_option("--json", json_path, "also write the result as JSON");
  mesh.add(dist);

  CLI::App* geo = app.add_subcommand("geodesic", "near-geodesic polyline of the numeric k solver as CSV");
  geo->add_option("--domain", domain)->required();
  geo->add_option("--x", xs)->required();
  geo->add_option("--y", ys)->required();
  geo->add_option("--out", out_path, "CSV path (default stdout)");
  mesh.add(geo);

  std::string levels, window;
  int resolution = 800;
  double contour_tol = 1e-6;
  CLI::App* ls = app.add_subcommand("levelset", "contours of k/j in the plane punctured at 0, relative to e1");
  ls->add_option("--c", levels, "comma-separated levels")->required();
  ls->add_option("--out", out_path, "CSV path");
  ls->add_option("--svg", svg_path, "SVG path");
  ls->add_option("--window", window, "xmin,xmax,ymin,ymax (default -3,3,-3,3)");
  ls->add_option("--resolution", resolution)->capture_default_str();
  ls->add_option("--tol", contour_tol, "max |ratio - c| of emitted vertices")->capture_default_str();

  std::string suite = "all";
  long long samples = 1000;
  unsigned long long seed = 1;
  bool no_elapsed = false;
  CLI::App* ver = app.add_subcommand("verify", "run inequality checks, JSON report");
  ver->add_option("--suite", suite, "comma-separated check ids or 'all'")->capture_default_str();
  ver->add_option("--samples", samples)->capture_default_str();
  ver->add_option("--seed", seed)->capture_default_str();
  ver->add_option("--out", out_path, "JSON path (default stdout)");
  ver->add_flag("--no-elapsed", no_elapsed, "omit timings so reports compare byte for byte");

  std::string s_text = "0.25,0.5,0.75,1", t_text = "0.25,0.5,0.75,1";
  long long pairs = 20;
  CLI::App* conj = app.add_subcommand("conjecture", "k_s / k_t against 2^(1/s-1/t) on superellipses, CSV");
  conj->add_option("--s", s_text)->capture_default_str();
  conj->add_option("--t", t_text)->capture_default_str();
  conj->add_option("--pairs", pairs)->capture_default_str();
  conj->add_option("--seed", seed)->capture_default_str();
  conj->add_option("--out", out_path, "CSV path (default stdout)");
  mesh.add(conj);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*dist) return cmd_dist(domain, metric, method, xs, ys, mesh.p, precision, json_path);
    if (*geo) return cmd_geodesic(domain, xs, ys, mesh.p, precision, out_path);
    if (*ls) return cmd_levelset(levels, out_path, svg_path, window, resolution, contour_tol);
    if (*ver) return cmd_verify(suite, samples, seed, out_path, no_elapsed);
    if (*conj) return cmd_conjecture(s_text, t_text, pairs, seed, mesh.p, precision, out_path);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const MethodUnavailable& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUnavailable;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const ContainmentError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const std::invalid_argument& e) {
    // Parse, precondition, registry and unsupported-pair errors.
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}
