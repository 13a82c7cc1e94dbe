#include "inpoly/io.hpp"

#include "inpoly/error.hpp"

#include <cstdio>
#include <set>
#include <sstream>

namespace inpoly::io {
namespace {

[[noreturn]] void invalid(const std::string& msg) { throw Error(ErrorKind::InvalidSpec, msg); }

void only_keys(const json& j, std::initializer_list<const char*> allowed) {
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, _] : j.items()) {
    if (!ok.count(key)) invalid("unknown field \"" + key + "\" in curve spec");
  }
}

double number(const json& j, const char* key) {
  if (!j.contains(key)) invalid(std::string("curve spec is missing \"") + key + "\"");
  if (!j.at(key).is_number()) invalid(std::string("curve field \"") + key + "\" must be a number");
  return j.at(key).get<double>();
}

Point2 point(const json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    invalid(what + " must be a [x, y] pair");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

std::vector<double> numbers(const json& j, const char* key, bool required) {
  if (!j.contains(key)) {
    if (required) invalid(std::string("curve spec is missing \"") + key + "\"");
    return {};
  }
  const json& v = j.at(key);
  if (!v.is_array()) invalid(std::string("curve field \"") + key + "\" must be an array");
  std::vector<double> out;
  for (const auto& x : v) {
    if (!x.is_number()) invalid(std::string("curve field \"") + key + "\" must contain numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

json pt(const Point2& p) { return json::array({p.x(), p.y()}); }

json vec(const Vector& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

json points(const PointList& pts) {
  json a = json::array();
  for (const auto& p : pts) a.push_back(pt(p));
  return a;
}

}  // namespace

CurveSpec curve_spec_from_json(const json& j) {
  if (!j.is_object()) invalid("curve spec must be a JSON object");
  if (!j.contains("type") || !j.at("type").is_string()) invalid("curve spec needs a string \"type\"");
  const std::string type = j.at("type").get<std::string>();
  CurveSpec spec;
  if (j.contains("phase")) spec.phase = number(j, "phase");
  const Point2 center = j.contains("center") ? point(j.at("center"), "center") : Point2::Zero();

  if (type == "circle") {
    only_keys(j, {"type", "center", "radius", "phase"});
    spec.shape = CircleSpec{center, number(j, "radius")};
  } else if (type == "ellipse") {
    only_keys(j, {"type", "center", "a", "b", "phase"});
    spec.shape = EllipseSpec{center, number(j, "a"), number(j, "b")};
  } else if (type == "star") {
    only_keys(j, {"type", "center", "cos", "sin", "phase"});
    spec.shape = StarSpec{center, numbers(j, "cos", true), numbers(j, "sin", false)};
  } else if (type == "fourier") {
    only_keys(j, {"type", "x_cos", "x_sin", "y_cos", "y_sin", "phase"});
    spec.shape = FourierSpec{numbers(j, "x_cos", false), numbers(j, "x_sin", false), numbers(j, "y_cos", false),
                             numbers(j, "y_sin", false)};
  } else if (type == "polyline") {
    only_keys(j, {"type", "points", "phase"});
    if (!j.contains("points") || !j.at("points").is_array()) invalid("polyline needs a \"points\" array");
    PolylineSpec pl;
    for (const auto& p : j.at("points")) pl.points.push_back(point(p, "polyline point"));
    spec.shape = std::move(pl);
  } else {
    invalid("unknown curve type \"" + type + "\"");
  }
  return spec;
}

json to_json(const CurveSpec& spec) {
  json j = std::visit(
      [](const auto& s) -> json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CircleSpec>) {
          return {{"type", "circle"}, {"center", pt(s.center)}, {"radius", s.radius}};
        } else if constexpr (std::is_same_v<T, EllipseSpec>) {
          return {{"type", "ellipse"}, {"center", pt(s.center)}, {"a", s.a}, {"b", s.b}};
        } else if constexpr (std::is_same_v<T, StarSpec>) {
          return {{"type", "star"}, {"center", pt(s.center)}, {"cos", s.cos}, {"sin", s.sin}};
        } else if constexpr (std::is_same_v<T, FourierSpec>) {
          return {{"type", "fourier"}, {"x_cos", s.x_cos}, {"x_sin", s.x_sin}, {"y_cos", s.y_cos}, {"y_sin", s.y_sin}};
        } else {
          return {{"type", "polyline"}, {"points", points(s.points)}};
        }
      },
      spec.shape);
  j["phase"] = spec.phase;
  return j;
}

std::vector<double> parse_lengths(const std::string& text) {
  std::vector<double> out;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      invalid(std::string("lengths: ") + e.what());
    }
    for (const auto& x : j) {
      if (!x.is_number()) invalid("lengths array must contain numbers");
      out.push_back(x.get<double>());
    }
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" \t\r\n", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      invalid("could not parse length \"" + item + "\"");
    }
  }
  return out;
}

json solutions_json(const CurveSpec& spec, const EdgeLengths& a, const SolveResult& result) {
  json sols = json::array();
  for (const auto& s : result.solutions) {
    sols.push_back({{"theta", vec(s.x.theta)},
                    {"mu", s.x.mu},
                    {"sigma", vec(s.polygon.sigma)},
                    {"vertices", points(s.polygon.on_curve)},
                    {"residual", s.residual_norm},
                    {"convex", s.convex},
                    {"simple", s.simple},
                    {"sgn_det", s.sgn_det},
                    {"provenance", s.provenance}});
  }
  return {{"curve", to_json(spec)},
          {"lengths", vec(a.values())},
          {"solutions", std::move(sols)},
          {"stats",
           {{"starts", result.starts},
            {"failures", result.newton_failures},
            {"boundary_rejections", result.boundary_rejections}}}};
}

void validate_solutions_json(const json& doc) {
  auto need = [](const json& j, const char* key, const std::string& where) -> const json& {
    if (!j.is_object() || !j.contains(key)) invalid(where + " is missing \"" + key + "\"");
    return j.at(key);
  };
  curve_spec_from_json(need(doc, "curve", "document"));
  const json& lengths = need(doc, "lengths", "document");
  if (!lengths.is_array() || lengths.size() < 3) invalid("\"lengths\" must be an array of at least 3 numbers");
  const std::size_t n = lengths.size();
  const json& stats = need(doc, "stats", "document");
  for (const char* k : {"starts", "failures", "boundary_rejections"}) {
    if (!need(stats, k, "stats").is_number_unsigned()) invalid(std::string("stats.") + k + " must be a count");
  }
  const json& sols = need(doc, "solutions", "document");
  if (!sols.is_array()) invalid("\"solutions\" must be an array");
  for (std::size_t i = 0; i < sols.size(); ++i) {
    const json& s = sols[i];
    const std::string where = "solution " + std::to_string(i);
    for (const char* k : {"theta", "sigma", "vertices"}) {
      const json& arr = need(s, k, where);
      if (!arr.is_array() || arr.size() != n) invalid(where + ": \"" + k + "\" must have " + std::to_string(n) + " entries");
    }
    if (!need(s, "mu", where).is_number() || !(s.at("mu").get<double>() > 0.0)) invalid(where + ": mu must be positive");
    if (!need(s, "residual", where).is_number()) invalid(where + ": residual must be a number");
    for (const char* k : {"convex", "simple"}) {
      if (!need(s, k, where).is_boolean()) invalid(where + ": \"" + k + "\" must be boolean");
    }
    if (!need(s, "sgn_det", where).is_number_integer()) invalid(where + ": sgn_det must be an integer");
    if (!need(s, "provenance", where).is_string()) invalid(where + ": provenance must be a string");
    double prev = -1.0;
    for (const auto& v : s.at("sigma")) {
      if (!v.is_number() || !(v.get<double>() > prev)) invalid(where + ": sigma is not strictly increasing");
      prev = v.get<double>();
    }
    if (!(prev < kTwoPi)) invalid(where + ": sigma leaves [0, 2pi)");
    for (const auto& v : s.at("vertices")) point(v, where + " vertex");
  }
}

std::string solutions_csv(const SolveResult& result) {
  std::string out = "index,provenance,mu,residual,convex,simple,sgn_det,sigma\n";
  char buf[128];
  for (std::size_t i = 0; i < result.solutions.size(); ++i) {
    const auto& s = result.solutions[i];
    std::snprintf(buf, sizeof buf, "%zu,%s,%.17g,%.3e,%d,%d,%d,", i, s.provenance.c_str(), s.x.mu, s.residual_norm,
                  int(s.convex), int(s.simple), s.sgn_det);
    out += buf;
    for (Eigen::Index k = 0; k < s.polygon.sigma.size(); ++k) {
      std::snprintf(buf, sizeof buf, "%s%.17g", k ? " " : "", s.polygon.sigma[k]);
      out += buf;
    }
    out += '\n';
  }
  return out;
}

json penner_json(const EdgeLengths& a, const CyclicPolygon& poly) {
  return {{"lengths", vec(a.values())},
          {"R", poly.circumradius},
          {"branch", to_string(poly.branch)},
          {"central_angles", vec(poly.central_angles)},
          {"vertices", points(poly.vertices)}};
}

json degree_json(const CurveSpec& spec, const DegreeReport& report) {
  json sols = json::array();
  for (const auto& s : report.solutions) {
    sols.push_back({{"theta", vec(s.x.theta)}, {"mu", s.x.mu}, {"sgn_det", s.sgn_det}, {"det", s.det}});
  }
  return {{"curve", to_json(spec)},
          {"lengths", vec(report.target.values())},
          {"degree", report.degree},
          {"degree_doubled_starts", report.degree_doubled},
          {"stable", report.stable},
          {"regular", report.regular},
          {"min_abs_det", report.min_abs_det},
          {"starts", report.starts},
          {"solutions", std::move(sols)}};
}

json oracle_json(const CurveSpec& spec, const EdgeLengths& a, const std::vector<GridSolution>& candidates) {
  json list = json::array();
  for (const auto& g : candidates) {
    list.push_back({{"sigma_grid", vec(g.sigma_grid)},
                    {"grid_error", g.grid_error},
                    {"sigma", vec(g.sigma)},
                    {"mu", g.mu},
                    {"proportionality_error", g.proportionality_error}});
  }
  return {{"curve", to_json(spec)},
          {"lengths", vec(a.values())},
          {"grid", candidates.empty() ? 0 : candidates.front().grid_size},
          {"candidates", std::move(list)}};
}

std::vector<PointList> polygons_from_json(const json& doc) {
  validate_solutions_json(doc);
  std::vector<PointList> out;
  for (const auto& s : doc.at("solutions")) {
    PointList poly;
    for (const auto& v : s.at("vertices")) poly.push_back(point(v, "vertex"));
    out.push_back(std::move(poly));
  }
  return out;
}

}  // namespace inpoly::io
