#include "dconic/io.hpp"

#include <charconv>
#include <cmath>
#include <regex>

#include "dconic/error.hpp"
#include "json.hpp"

namespace dconic {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void malformed(const std::string& what) { throw GeometryError(ErrorCode::InvalidArgument, what); }

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
}

template <typename T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    malformed(std::string("field '") + key + "' has the wrong type");
  }
}

double finite(double v, const char* key) {
  if (!std::isfinite(v)) malformed(std::string("field '") + key + "' is not finite");
  return v;
}

json polygon_json(const DiscreteConic& d) {
  json vertices = json::array();
  for (Point v : d.vertices) vertices.push_back({v.x, v.y});
  return {{"p", d.p}, {"t", d.t}, {"theta", d.theta}, {"phi", d.phi},
          {"n", d.n}, {"closed", d.closed}, {"vertices", vertices}};
}

DiscreteConic polygon_from(const json& j) {
  DiscreteConic d;
  d.p = finite(field<double>(j, "p"), "p");
  d.t = finite(field<double>(j, "t"), "t");
  d.theta = finite(field<double>(j, "theta"), "theta");
  d.phi = finite(field<double>(j, "phi"), "phi");
  d.n = field<int>(j, "n");
  d.closed = field<bool>(j, "closed");
  const auto vertices = field<std::vector<std::array<double, 2>>>(j, "vertices");
  if (d.n < 3) malformed("polygon needs n >= 3");
  if (vertices.size() != static_cast<std::size_t>(d.n)) malformed("vertex count differs from n");
  for (const auto& v : vertices) d.vertices.push_back({finite(v[0], "vertices"), finite(v[1], "vertices")});
  return d;
}

json report_json(const Report& r) {
  return {{"check", r.check_name}, {"residuals", r.residuals}, {"max_residual", r.max_residual},
          {"tolerance", r.tolerance}, {"pass", r.pass},         {"metadata", r.metadata}};
}

json conic_json(const FocalConic& c) { return {{"p", c.p()}, {"t", c.t()}}; }

FocalConic conic_from(const json& j) { return FocalConic(field<double>(j, "p"), field<double>(j, "t")); }

}  // namespace

std::string serialize(const DiscreteConic& d) { return polygon_json(d).dump(); }
std::string serialize(const Report& r) { return report_json(r).dump(); }
std::string serialize(const FocalConic& c) { return conic_json(c).dump(); }

std::string serialize(const std::vector<Report>& reports) {
  json out = json::array();
  for (const Report& r : reports) out.push_back(report_json(r));
  return out.dump();
}

std::string serialize(const std::vector<DiscreteConic>& polygons) {
  json out = json::array();
  for (const DiscreteConic& d : polygons) out.push_back(polygon_json(d));
  return out.dump();
}

std::string serialize(const Scene& s) {
  json conics = json::array(), polygons = json::array(), points = json::array(), lines = json::array();
  for (const FocalConic& c : s.conics) conics.push_back(conic_json(c));
  for (const DiscreteConic& d : s.polygons) polygons.push_back(polygon_json(d));
  for (const LabeledPoint& p : s.points) points.push_back({{"label", p.label}, {"x", p.at.x}, {"y", p.at.y}});
  for (const Line& l : s.lines) lines.push_back({{"a", l.a}, {"b", l.b}, {"c", l.c}});
  return json{{"viewbox", s.viewbox}, {"conics", conics}, {"polygons", polygons}, {"points", points}, {"lines", lines}}
      .dump();
}

DiscreteConic deserialize_polygon(std::string_view text) { return polygon_from(parse(text)); }

std::vector<DiscreteConic> deserialize_polygons(std::string_view text) {
  const json j = parse(text);
  std::vector<DiscreteConic> out;
  if (j.is_array()) {
    for (const json& item : j) out.push_back(polygon_from(item));
  } else {
    out.push_back(polygon_from(j));
  }
  return out;
}

Report deserialize_report(std::string_view text) {
  const json j = parse(text);
  Report r;
  r.check_name = field<std::string>(j, "check");
  r.residuals = field<std::vector<double>>(j, "residuals");
  r.max_residual = field<double>(j, "max_residual");
  r.tolerance = field<double>(j, "tolerance");
  r.pass = field<bool>(j, "pass");
  r.metadata = field<std::map<std::string, std::string>>(j, "metadata");
  return r;
}

FocalConic deserialize_conic(std::string_view text) { return conic_from(parse(text)); }

Scene deserialize_scene(std::string_view text) {
  const json j = parse(text);
  Scene s;
  s.viewbox = field<std::array<double, 4>>(j, "viewbox");
  auto list = [&](const char* key) { return j.contains(key) ? field<json>(j, key) : json::array(); };
  for (const json& c : list("conics")) s.conics.push_back(conic_from(c));
  for (const json& d : list("polygons")) s.polygons.push_back(polygon_from(d));
  for (const json& p : list("points")) {
    s.points.push_back({field<std::string>(p, "label"), {field<double>(p, "x"), field<double>(p, "y")}});
  }
  for (const json& l : list("lines")) {
    s.lines.push_back(Line::from_coefficients(field<double>(l, "a"), field<double>(l, "b"), field<double>(l, "c")));
  }
  return s;
}

bool looks_like_scene(std::string_view text) {
  const json j = parse(text);
  return j.is_object() && j.contains("viewbox");
}

double parse_angle(std::string_view text) {
  const std::string s(text);
  auto number = [&](const std::string& part) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size() || !std::isfinite(v)) {
      malformed("cannot parse angle '" + s + "'");
    }
    return v;
  };

  static const std::regex fraction(R"(^\s*([+-]?)\s*([0-9]*\.?[0-9]*)\s*\*?\s*pi\s*(?:/\s*([0-9]*\.?[0-9]+))?\s*$)");
  std::smatch m;
  if (std::regex_match(s, m, fraction)) {
    const double sign = m[1] == "-" ? -1.0 : 1.0;
    const double mult = m[2].length() > 0 ? number(m[2]) : 1.0;
    const double div = m[3].matched ? number(m[3]) : 1.0;
    if (div == 0.0) malformed("angle '" + s + "' divides by zero");
    return sign * mult * kPi / div;
  }
  std::string trimmed = s;
  trimmed.erase(0, trimmed.find_first_not_of(" \t"));
  trimmed.erase(trimmed.find_last_not_of(" \t") + 1);
  if (!trimmed.empty() && trimmed.front() == '+') trimmed.erase(0, 1);
  return number(trimmed);
}

}  // namespace dconic
