#include "core/body_parse.hpp"

#include <cmath>

#include "core/dualities.hpp"
#include "core/errors.hpp"
#include "core/linear_map.hpp"
#include "json.hpp"

namespace polarlab {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::kParseError, "at " + path + ": " + what);
}

double require_number(const json& j, const std::string& path, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number()) parse_fail(path + "." + key, "expected a number");
  return j.at(key).get<double>();
}

std::vector<double> require_vector(const json& j, const std::string& path, int dim) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    parse_fail(path, "expected an array of " + std::to_string(dim) + " numbers");
  std::vector<double> v;
  for (const auto& x : j) {
    if (!x.is_number()) parse_fail(path, "expected a number");
    v.push_back(x.get<double>());
  }
  return v;
}

// Exact grid body of an intersection of halfplanes (n = 2): candidate
// vertices come from constraint pairs and single-constraint projections,
// recession rays from constraint rotations.
ParsedBody parse_halfspaces(const json& j, const std::string& path, const Config& cfg) {
  if (cfg.dimension != 2) parse_fail(path, "halfspaces are only supported in dimension 2");
  if (!j.contains("normals") || !j.at("normals").is_array() || j.at("normals").empty())
    parse_fail(path + ".normals", "expected a nonempty array");
  if (!j.contains("offsets") || !j.at("offsets").is_array() ||
      j.at("offsets").size() != j.at("normals").size())
    parse_fail(path + ".offsets", "expected one offset per normal");

  std::vector<Point2> normals;
  std::vector<double> offsets;
  for (std::size_t i = 0; i < j.at("normals").size(); ++i) {
    auto v = require_vector(j.at("normals")[i], path + ".normals[" + std::to_string(i) + "]", 2);
    const double len = std::hypot(v[0], v[1]);
    if (len < 1e-12) parse_fail(path + ".normals", "zero normal");
    if (!j.at("offsets")[i].is_number()) parse_fail(path + ".offsets", "expected a number");
    const double b = j.at("offsets")[i].get<double>();
    if (b < 0.0)
      throw Error(ErrorCode::kInvalidBody,
                  "at " + path + ".offsets[" + std::to_string(i) +
                      "]: negative offset puts 0 outside the halfspace");
    normals.push_back({v[0], v[1]});
    offsets.push_back(b);
  }

  const auto feasible = [&](const Point2& p) {
    for (std::size_t m = 0; m < normals.size(); ++m)
      if (normals[m][0] * p[0] + normals[m][1] * p[1] > offsets[m] + 1e-9) return false;
    return true;
  };

  std::vector<Point2> verts{{0.0, 0.0}};
  for (std::size_t m = 0; m < normals.size(); ++m) {
    const double len2 = normals[m][0] * normals[m][0] + normals[m][1] * normals[m][1];
    const Point2 proj{offsets[m] * normals[m][0] / len2, offsets[m] * normals[m][1] / len2};
    if (feasible(proj)) verts.push_back(proj);
    for (std::size_t k = m + 1; k < normals.size(); ++k) {
      const double det = normals[m][0] * normals[k][1] - normals[m][1] * normals[k][0];
      if (std::abs(det) < 1e-12) continue;
      const Point2 x{(offsets[m] * normals[k][1] - offsets[k] * normals[m][1]) / det,
                     (normals[m][0] * offsets[k] - normals[k][0] * offsets[m]) / det};
      if (feasible(x)) verts.push_back(x);
    }
  }

  std::vector<Point2> rays;
  const auto recession = [&](const Point2& d) {
    for (const auto& nrm : normals)
      if (nrm[0] * d[0] + nrm[1] * d[1] > 1e-12) return false;
    return true;
  };
  for (const auto& nrm : normals) {
    const double len = std::hypot(nrm[0], nrm[1]);
    const Point2 r1{nrm[1] / len, -nrm[0] / len};
    const Point2 r2{-nrm[1] / len, nrm[0] / len};
    const Point2 r3{-nrm[0] / len, -nrm[1] / len};
    for (const auto& r : {r1, r2, r3}) {
      if (!recession(r)) continue;
      bool dup = false;
      for (const auto& e : rays) dup = dup || (std::abs(e[0] - r[0]) + std::abs(e[1] - r[1]) < 1e-9);
      if (!dup) rays.push_back(r);
    }
  }

  Polytope2 poly(std::move(verts), std::move(rays));
  return {poly.to_grid_body(cfg.grid()), std::nullopt};
}

ParsedBody parse_node(const json& j, const std::string& path, const Config& cfg) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
    parse_fail(path, "expected an object with a \"kind\" string");
  const std::string kind = j.at("kind").get<std::string>();

  if (kind == "ball") {
    const double r = require_number(j, path, "r");
    if (r < 0.0) throw Error(ErrorCode::kInvalidBody, "at " + path + ".r: negative radius");
    return {GridBody::ball(cfg.grid(), r), std::nullopt};
  }
  if (kind == "origin") return {GridBody::origin(cfg.grid()), std::nullopt};
  if (kind == "space") return {GridBody::whole_space(cfg.grid()), std::nullopt};
  if (kind == "segment") {
    if (!j.contains("to")) parse_fail(path, "segment needs \"to\"");
    auto v = require_vector(j.at("to"), path + ".to", cfg.dimension);
    return {GridBody::segment(cfg.grid(), v), std::nullopt};
  }
  if (kind == "polytope") {
    if (cfg.dimension != 2) parse_fail(path, "polytope bodies are only supported in dimension 2");
    if (!j.contains("vertices") || !j.at("vertices").is_array() || j.at("vertices").empty())
      parse_fail(path + ".vertices", "expected a nonempty array");
    std::vector<Point2> pts;
    for (std::size_t i = 0; i < j.at("vertices").size(); ++i) {
      auto v = require_vector(j.at("vertices")[i], path + ".vertices[" + std::to_string(i) + "]", 2);
      pts.push_back({v[0], v[1]});
    }
    Polytope2 poly(std::move(pts));
    GridBody body = poly.to_grid_body(cfg.grid());
    return {std::move(body), std::move(poly)};
  }
  if (kind == "halfspaces") return parse_halfspaces(j, path, cfg);
  if (kind == "cone_j") {
    if (!j.contains("j") || !j.at("j").is_number_integer())
      parse_fail(path + ".j", "expected an integer axis index");
    return {cone_body(j.at("j").get<int>(), cfg), std::nullopt};
  }
  if (kind == "scale") {
    const double r = require_number(j, path, "r");
    if (!j.contains("of")) parse_fail(path, "scale needs \"of\"");
    ParsedBody inner = parse_node(j.at("of"), path + ".of", cfg);
    if (!(r > 0.0))
      throw Error(ErrorCode::kNonPositiveScale, "at " + path + ".r: scale must be > 0");
    ParsedBody out{scale(inner.body, r), std::nullopt};
    if (inner.exact) out.exact = inner.exact->linear_image(LinearMap::diagonal({r, r}));
    return out;
  }
  if (kind == "image") {
    if (!j.contains("matrix") || !j.at("matrix").is_array())
      parse_fail(path + ".matrix", "expected a matrix");
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < j.at("matrix").size(); ++i)
      rows.push_back(
          require_vector(j.at("matrix")[i], path + ".matrix[" + std::to_string(i) + "]", cfg.dimension));
    if (static_cast<int>(rows.size()) != cfg.dimension)
      parse_fail(path + ".matrix", "expected a square matrix of the run dimension");
    if (!j.contains("of")) parse_fail(path, "image needs \"of\"");
    const LinearMap t = LinearMap::from_rows(rows);
    ParsedBody inner = parse_node(j.at("of"), path + ".of", cfg);
    ParsedBody out{linear_image(t, inner.body), std::nullopt};
    if (inner.exact) out.exact = inner.exact->linear_image(t);
    return out;
  }
  parse_fail(path + ".kind", "unknown body kind \"" + kind + "\"");
}

}  // namespace

ParsedBody parse_body(const std::string& json_text, const Config& cfg) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParseError, std::string("invalid JSON: ") + e.what());
  }
  return parse_node(j, "$", cfg);
}

std::string body_to_json(const GridBody& a) {
  json j;
  j["dimension"] = a.grid().dimension();
  j["grid_n"] = a.grid().size();
  json support = json::array();
  json radial = json::array();
  for (int i = 0; i < a.size(); ++i) {
    support.push_back(is_inf(a.support()[i]) ? json("inf") : json(a.support()[i]));
    radial.push_back(is_inf(a.radial()[i]) ? json("inf") : json(a.radial()[i]));
  }
  j["support"] = support;
  j["radial"] = radial;
  j["nu"] = is_inf(a.nu()) ? json("inf") : json(a.nu());
  return j.dump();
}

GridBody body_from_json_samples(const std::string& json_text, const Config& cfg) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParseError, std::string("invalid JSON: ") + e.what());
  }
  if (!j.contains("support")) throw Error(ErrorCode::kParseError, "missing \"support\"");
  std::vector<double> h;
  for (const auto& x : j.at("support")) {
    if (x.is_string() && x.get<std::string>() == "inf")
      h.push_back(kInf);
    else if (x.is_number())
      h.push_back(x.get<double>());
    else
      throw Error(ErrorCode::kParseError, "support entries must be numbers or \"inf\"");
  }
  GridPtr grid = cfg.grid();
  if (static_cast<int>(h.size()) != grid->size())
    throw Error(ErrorCode::kParseError, "sample count does not match the run grid");
  return GridBody(std::move(grid), std::move(h));
}

}  // namespace polarlab
