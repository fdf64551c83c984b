#pragma once

#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

#include "s1yamabe/bundle.hpp"

namespace s1yamabe::cli {

using Json = nlohmann::ordered_json;

/// A parsed model file. `source` is the file content as read, echoed into reports.
struct Model {
  Json source;
  Base base;
  RadialFunction ell;
  RadialFunction F;
  QuadratureConfig quadrature;
  std::optional<std::pair<int, int>> wps;  ///< (m1, m2) for weighted projective bases

  InvariantMetric metric() const { return InvariantMetric(base, ell, F, quadrature); }
};

/// Throws Error(ParseError) with a field path such as "base.m1: expected an integer".
Model parse_model(const Json& doc);
Model load_model(const std::string& path);

}  // namespace s1yamabe::cli
