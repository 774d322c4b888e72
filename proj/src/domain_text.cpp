#include <charconv>
#include <cstdio>
#include <string>
#include <vector>

#include "qhmet/domains.hpp"
#include "qhmet/errors.hpp"

namespace qhmet {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<double> parse_numbers(std::string_view text) {
  std::vector<double> out;
  if (trim(text).empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view tok =
        trim(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    double v = 0.0;
    // from_chars rejects a leading '+'.
    const std::string_view body = (!tok.empty() && tok.front() == '+') ? tok.substr(1) : tok;
    const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
    if (body.empty() || ec != std::errc() || ptr != body.data() + body.size()) {
      throw ParseError("not a number: '" + std::string(tok) + "'");
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string join(std::span<const double> vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ',';
    s += fmt(vs[i]);
  }
  return s;
}

}  // namespace

Point parse_point(std::string_view text) {
  const auto v = parse_numbers(text);
  if (v.size() < 2 || v.size() > kMaxDim) {
    throw ParseError("point needs between 2 and " + std::to_string(kMaxDim) + " coordinates: '" +
                     std::string(text) + "'");
  }
  return Point(std::span<const double>(v));
}

DomainSpec parse_domain(std::string_view text) {
  text = trim(text);
  const std::size_t colon = text.find(':');
  const std::string_view head = text.substr(0, colon);
  const std::string_view args = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  const auto v = parse_numbers(args);

  try {
    if (head == "ball") {
      if (v.size() < 3 || v.size() > kMaxDim + 1) throw ParseError("ball:cx,cy,...,r");
      return DomainSpec::ball(Point(std::span<const double>(v.data(), v.size() - 1)), v.back());
    }
    if (head == "punctured") {
      if (v.empty()) return DomainSpec::punctured_space(Point::zero(2));
      if (v.size() < 2 || v.size() > kMaxDim) throw ParseError("punctured:px,py");
      return DomainSpec::punctured_space(Point(std::span<const double>(v)));
    }
    if (head == "diamond") {
      if (!v.empty()) throw ParseError("diamond takes no parameters");
      return DomainSpec::diamond();
    }
    if (head == "superellipse") {
      if (v.size() != 1) throw ParseError("superellipse:s");
      return DomainSpec::superellipse(v[0]);
    }
    if (head == "punctured-ball") {
      if (v.size() != 5) throw ParseError("punctured-ball:cx,cy,r,px,py");
      return DomainSpec::punctured(DomainSpec::ball(Point{v[0], v[1]}, v[2]), Point{v[3], v[4]});
    }
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("invalid domain '") + std::string(text) + "': " + e.what());
  }
  throw ParseError("unknown domain '" + std::string(text) + "'");
}

std::string to_string(const DomainSpec& domain) {
  return std::visit(
      [](const auto& d) -> std::string {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Ball>) {
          return "ball:" + join(d.center.coords()) + "," + fmt(d.radius);
        } else if constexpr (std::is_same_v<T, PuncturedSpace>) {
          bool origin = d.puncture.dim() == 2;
          for (double c : d.puncture.coords()) origin = origin && c == 0.0;
          return origin ? std::string("punctured") : "punctured:" + join(d.puncture.coords());
        } else if constexpr (std::is_same_v<T, Diamond>) {
          return "diamond";
        } else if constexpr (std::is_same_v<T, Superellipse>) {
          return "superellipse:" + fmt(d.s());
        } else {
          const Ball* b = d.base->template get_if<Ball>();
          if (b == nullptr || b->center.dim() != 2) {
            return "punctured(" + to_string(*d.base) + ";" + join(d.point.coords()) + ")";
          }
          return "punctured-ball:" + join(b->center.coords()) + "," + fmt(b->radius) + "," +
                 join(d.point.coords());
        }
      },
      domain.variant());
}

}  // namespace qhmet
