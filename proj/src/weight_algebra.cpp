#include "wbinom/weight_algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace wb {

WeightMonomial big_weight(int s, int t) {
  return range_product<WeightMonomial>(1, t, [s](long j) { return w(s, static_cast<int>(j)); });
}

WeightMonomial shift(const WeightMonomial& m, int dx, int dy) {
  if (dx == 0 && dy == 0) return m;
  return m.map_keys([=](WeightIndex i) { return std::pair{WeightIndex{i.s + dx, i.t + dy}, 1}; });
}

WeightPolynomial shift(const WeightPolynomial& p, int dx, int dy) {
  if (dx == 0 && dy == 0) return p;
  return p.map_monomials([=](const WeightMonomial& m) { return shift(m, dx, dy); });
}

TransformImage transform_index(Transform t, WeightIndex i) {
  switch (t) {
    case Transform::identity: return {i, 1};
    case Transform::hat: return {{i.t, i.s}, -1};
    case Transform::tilde: return {{1 - i.s - i.t, i.t}, -1};
    case Transform::breve: return {{i.s, 1 - i.s - i.t}, -1};
  }
  throw std::logic_error("bad transform");
}

WeightMonomial apply_transform(const WeightMonomial& m, Transform t) {
  if (t == Transform::identity) return m;
  return m.map_keys([t](WeightIndex i) {
    auto img = transform_index(t, i);
    return std::pair{img.at, img.exponent};
  });
}

WeightPolynomial apply_transform(const WeightPolynomial& p, Transform t) {
  if (t == Transform::identity) return p;
  return p.map_monomials([t](const WeightMonomial& m) { return apply_transform(m, t); });
}

std::string_view transform_name(Transform t) {
  switch (t) {
    case Transform::identity: return "identity";
    case Transform::hat: return "hat";
    case Transform::tilde: return "tilde";
    case Transform::breve: return "breve";
  }
  return "?";
}

Transform parse_transform(std::string_view name) {
  for (auto t : {Transform::identity, Transform::hat, Transform::tilde, Transform::breve})
    if (transform_name(t) == name) return t;
  throw std::invalid_argument("unknown transform: " + std::string(name));
}

std::string to_string(const WeightMonomial& m) {
  if (m.is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, e] : m.factors()) {
    if (!first) os << '*';
    first = false;
    os << "w(" << i.s << ',' << i.t << ')';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

std::string to_string(const WeightPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    bigint mag = c < 0 ? bigint(-c) : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (m.is_one()) {
      os << mag;
    } else {
      if (mag != 1) os << mag << '*';
      os << to_string(m);
    }
  }
  return os.str();
}

}  // namespace wb
