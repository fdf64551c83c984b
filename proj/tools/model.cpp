#include "model.hpp"

#include <cmath>
#include <fstream>
#include <vector>

#include "s1yamabe/errors.hpp"
#include "s1yamabe/yamabe.hpp"

namespace s1yamabe::cli {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw Error(ErrorCode::ParseError, path + ": " + msg);
}

const Json& field(const Json& obj, const std::string& path, const std::string& key) {
  if (!obj.is_object()) fail(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) fail(path == "$" ? key : path + "." + key, "missing");
  return *it;
}

double number(const Json& obj, const std::string& path, const std::string& key) {
  const Json& v = field(obj, path, key);
  if (!v.is_number()) fail(path + "." + key, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) fail(path + "." + key, "not finite");
  return x;
}

int integer(const Json& obj, const std::string& path, const std::string& key) {
  const Json& v = field(obj, path, key);
  if (!v.is_number_integer()) fail(path + "." + key, "expected an integer");
  const long long x = v.get<long long>();
  if (x < -1000000 || x > 1000000) fail(path + "." + key, "out of range");
  return static_cast<int>(x);
}

std::string type_of(const Json& obj, const std::string& path) {
  const Json& v = field(obj, path, "type");
  if (!v.is_string()) fail(path + ".type", "expected a string");
  return v.get<std::string>();
}

std::vector<double> number_array(const Json& obj, const std::string& path, const std::string& key) {
  const Json& v = field(obj, path, key);
  if (!v.is_array()) fail(path + "." + key, "expected an array");
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string p = path + "." + key + "[" + std::to_string(i) + "]";
    if (!v[i].is_number()) fail(p, "expected a number");
    out.push_back(v[i].get<double>());
    if (!std::isfinite(out.back())) fail(p, "not finite");
  }
  return out;
}

// Runs a constructor and re-labels its InvalidArgument as a parse error at `path`.
template <class Fn>
auto guarded(const std::string& path, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotCoprime) throw;
    fail(path, e.what());
  }
}

Base parse_base(const Json& j, std::optional<std::pair<int, int>>& wps, int& wps_grid) {
  const std::string path = "base";
  const std::string type = type_of(j, path);
  if (type == "wps") {
    const int m1 = integer(j, path, "m1"), m2 = integer(j, path, "m2");
    if (m1 < 1 || m2 < 1) fail(path, "m1 and m2 must be positive");
    wps_grid = j.contains("grid") ? integer(j, path, "grid") : 256;
    require_coprime(m1, m2);
    wps = std::make_pair(m1, m2);
    return guarded(path, [&] { return Base(wps_profile(m1, m2, wps_grid)); });
  }
  if (type == "round_sphere") {
    const double r = number(j, path, "radius");
    return guarded(path, [&] { return Base(make_round_sphere(r)); });
  }
  if (type == "bump_sphere") {
    const double r = number(j, path, "radius"), a = number(j, path, "amplitude");
    return guarded(path, [&] { return Base(make_bump_sphere(r, a)); });
  }
  if (type == "flat_torus") {
    const double len = number(j, path, "length"), r = number(j, path, "radius");
    return guarded(path, [&] { return Base(FlatTorusBase(len, r)); });
  }
  if (type == "profile") {
    const Json& samples = field(j, path, "samples");
    if (!samples.is_array()) fail(path + ".samples", "expected an array of [s, phi] pairs");
    std::vector<double> s, phi;
    for (std::size_t i = 0; i < samples.size(); ++i) {
      const std::string p = path + ".samples[" + std::to_string(i) + "]";
      const Json& pair = samples[i];
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
        fail(p, "expected [s, phi]");
      s.push_back(pair[0].get<double>());
      phi.push_back(pair[1].get<double>());
    }
    const int ms = integer(j, path, "m_start"), me = integer(j, path, "m_end");
    return guarded(path, [&] { return Base(ConeSurfaceProfile::from_samples(s, phi, ms, me)); });
  }
  fail(path + ".type", "unknown base type '" + type + "'");
}

RadialFunction parse_samples(const Json& j, const std::string& path, const Base& base) {
  const std::vector<double> v = number_array(j, path, "values");
  return guarded(path + ".values", [&] {
    if (base.is_torus()) {
      if (v.size() < 4) throw Error(ErrorCode::InvalidArgument, "need at least 4 periodic samples");
      return RadialFunction::fourier(FourierSeries::interpolate(base.length(), v));
    }
    if (v.size() < 5) throw Error(ErrorCode::InvalidArgument, "need at least 5 samples including both poles");
    return RadialFunction::cosine(CosineSeries::interpolate(base.length(), v));
  });
}

RadialFunction parse_ell(const Json& j, const Base& base) {
  const std::string path = "ell";
  const std::string type = type_of(j, path);
  if (type == "constant") {
    const double v = number(j, path, "value");
    if (!(v > 0)) fail(path + ".value", "must be positive");
    return RadialFunction::constant(v);
  }
  if (type == "samples") return parse_samples(j, path, base);
  fail(path + ".type", "unknown ell type '" + type + "'");
}

RadialFunction parse_F(const Json& j, const Base& base, const std::optional<std::pair<int, int>>& wps, int grid) {
  const std::string path = "F";
  const std::string type = type_of(j, path);
  if (type == "constant") return RadialFunction::constant(number(j, path, "value"));
  if (type == "samples") return parse_samples(j, path, base);
  if (type == "wps") {
    if (!wps) fail(path + ".type", "'wps' requires base.type 'wps'");
    return wps_curvature_field(wps->first, wps->second, grid);
  }
  fail(path + ".type", "unknown F type '" + type + "'");
}

QuadratureConfig parse_quadrature(const Json& j) {
  QuadratureConfig cfg = default_base_quadrature();
  const std::string path = "quadrature";
  if (!j.is_object()) fail(path, "expected an object");
  for (const auto& [key, value] : j.items()) {
    if (key == "panels") cfg.panels = integer(j, path, key);
    else if (key == "points_per_panel") cfg.points_per_panel = integer(j, path, key);
    else if (key == "max_refinements") cfg.max_refinements = integer(j, path, key);
    else if (key == "abs_tol") cfg.abs_tol = number(j, path, key);
    else if (key == "rel_tol") cfg.rel_tol = number(j, path, key);
    else fail(path + "." + key, "unknown field");
  }
  return cfg;
}

}  // namespace

Model parse_model(const Json& doc) {
  if (!doc.is_object()) fail("$", "expected an object");
  for (const auto& [key, value] : doc.items())
    if (key != "base" && key != "ell" && key != "F" && key != "quadrature" && key != "name")
      fail(key, "unknown field");
  std::optional<std::pair<int, int>> wps;
  int grid = 256;
  Base base = parse_base(field(doc, "$", "base"), wps, grid);
  RadialFunction ell = parse_ell(field(doc, "$", "ell"), base);
  RadialFunction F = parse_F(field(doc, "$", "F"), base, wps, grid);
  const QuadratureConfig cfg =
      doc.contains("quadrature") ? parse_quadrature(doc["quadrature"]) : default_base_quadrature();
  guarded("quadrature", [&] { cfg.validate(0.0, base.length()); return 0; });
  Model m{doc, std::move(base), std::move(ell), std::move(F), cfg, wps};
  guarded("$", [&] { return m.metric(); });
  return m;
}

Model load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open model file '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
  return parse_model(doc);
}

}  // namespace s1yamabe::cli
