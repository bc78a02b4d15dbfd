#pragma once

#include "wbinom/paths.hpp"
#include "wbinom/weight_algebra.hpp"

#include <json.hpp>
#include <stdexcept>
#include <string>

namespace wb {

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// [{"coeff": "-3", "factors": [{"s": 1, "t": 0, "exp": -1}, ...]}, ...] in term order
nlohmann::ordered_json to_json(const WeightPolynomial& p);
WeightPolynomial poly_from_json(const nlohmann::ordered_json& j);

std::string poly_json_string(const WeightPolynomial& p);
WeightPolynomial parse_poly_json(const std::string& text);

nlohmann::ordered_json to_json(const HybridPath& p);

}  // namespace wb
