#include <cmath>
#include <cstdio>
#include <ostream>

#include "json.hpp"
#include "qhmet/verify.hpp"

namespace qhmet {
namespace {

using Json = nlohmann::ordered_json;

// NaN and infinities have no JSON form.
Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json named(const std::vector<NamedValue>& values) {
  Json o = Json::object();
  for (const NamedValue& v : values) o[v.name] = number(v.value);
  return o;
}

Json cell_json(const ConjectureCell& c) {
  return Json{{"s", c.s},
              {"t", c.t},
              {"target", c.target},
              {"min_ratio", number(c.min_ratio)},
              {"ratio_error", number(c.ratio_error)},
              {"margin", number(c.margin)},
              {"pairs", c.pairs},
              {"skipped", c.skipped},
              {"z1", {c.z1.dim() ? c.z1.x() : 0.0, c.z1.dim() ? c.z1.y() : 0.0}},
              {"z2", {c.z2.dim() ? c.z2.x() : 0.0, c.z2.dim() ? c.z2.y() : 0.0}},
              {"status", c.status}};
}

}  // namespace

void write_reports_json(std::ostream& out, std::span<const CheckReport> reports, bool with_elapsed) {
  Json arr = Json::array();
  for (const CheckReport& r : reports) {
    Json o{{"check_id", r.check_id},
           {"n_samples", r.n_samples},
           {"seed", r.seed},
           {"violations", r.violations},
           {"inconclusive", r.inconclusive},
           {"skipped", r.skipped},
           {"equalities", r.equalities},
           {"worst_margin", number(r.worst_margin)},
           {"witness", named(r.witness)},
           {"pass", r.pass ? Json(*r.pass) : Json(nullptr)}};
    if (!r.summary.empty()) o["summary"] = named(r.summary);
    if (!r.cells.empty()) {
      Json cells = Json::array();
      for (const ConjectureCell& c : r.cells) cells.push_back(cell_json(c));
      o["margins"] = std::move(cells);
    }
    if (!r.note.empty()) o["note"] = r.note;
    if (with_elapsed) o["elapsed"] = r.elapsed;
    arr.push_back(std::move(o));
  }
  out << arr.dump(2) << '\n';
}

void write_conjecture_csv(std::ostream& out, std::span<const ConjectureCell> cells, int precision) {
  const auto num = [precision](double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return std::string(buf);
  };
  out << "s,t,target,min_ratio,ratio_error,margin,pairs,skipped,status\n";
  for (const ConjectureCell& c : cells) {
    out << num(c.s) << ',' << num(c.t) << ',' << num(c.target) << ',' << num(c.min_ratio) << ','
        << num(c.ratio_error) << ',' << num(c.margin) << ',' << c.pairs << ',' << c.skipped << ',' << c.status
        << '\n';
  }
}

}  // namespace qhmet
