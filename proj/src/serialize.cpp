#include "wbinom/serialize.hpp"

namespace wb {

using json = nlohmann::ordered_json;

json to_json(const WeightPolynomial& p) {
  json out = json::array();
  for (const auto& [m, c] : p.terms()) {
    json factors = json::array();
    for (const auto& [idx, e] : m.factors()) factors.push_back({{"s", idx.s}, {"t", idx.t}, {"exp", e}});
    out.push_back({{"coeff", c.str()}, {"factors", std::move(factors)}});
  }
  return out;
}

WeightPolynomial poly_from_json(const json& j) {
  if (!j.is_array()) throw parse_error("polynomial JSON must be an array of terms");
  WeightPolynomial p;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("coeff") || !term.contains("factors"))
      throw parse_error("term needs coeff and factors");
    const auto& c = term.at("coeff");
    bigint coeff;
    try {
      coeff = c.is_string() ? bigint(c.get<std::string>()) : bigint(c.get<long long>());
    } catch (const std::exception&) {
      throw parse_error("bad coefficient: " + c.dump());
    }
    std::vector<WeightMonomial::factor> f;
    for (const auto& x : term.at("factors")) {
      try {
        f.push_back({{x.at("s").get<int>(), x.at("t").get<int>()}, x.at("exp").get<int>()});
      } catch (const json::exception&) {
        throw parse_error("bad factor: " + x.dump());
      }
    }
    p.add_term(WeightMonomial(std::move(f)), coeff);
  }
  return p;
}

std::string poly_json_string(const WeightPolynomial& p) { return to_json(p).dump(); }

WeightPolynomial parse_poly_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error(e.what());
  }
  return poly_from_json(j);
}

json to_json(const HybridPath& p) {
  auto sw = path_weight_steps(p);
  return {{"steps", step_string(p)},
          {"start", {p.start.x, p.start.y}},
          {"end", {p.end.x, p.end.y}},
          {"weight", to_json(sw.poly())},
          {"weight_text", to_string(sw.poly())}};
}

}  // namespace wb
