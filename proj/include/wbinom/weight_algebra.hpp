#pragma once

#include "wbinom/sparse_poly.hpp"

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <string_view>

namespace wb {

struct WeightIndex {
  int s = 0;
  int t = 0;
  friend auto operator<=>(const WeightIndex&, const WeightIndex&) = default;
};

using WeightMonomial = SparseMonomial<WeightIndex>;
using WeightPolynomial = LaurentPoly<WeightMonomial>;

inline WeightMonomial w(int s, int t, int exp = 1) { return WeightMonomial::var({s, t}, exp); }

// W(s,t) = prod_{j=1}^{t} w(s,j)
WeightMonomial big_weight(int s, int t);

WeightMonomial shift(const WeightMonomial& m, int dx, int dy);
WeightPolynomial shift(const WeightPolynomial& p, int dx, int dy);

enum class Transform { identity, hat, tilde, breve };

struct TransformImage {
  WeightIndex at;
  int exponent;
};

TransformImage transform_index(Transform t, WeightIndex i);
WeightMonomial apply_transform(const WeightMonomial& m, Transform t);
WeightPolynomial apply_transform(const WeightPolynomial& p, Transform t);

std::string_view transform_name(Transform t);
Transform parse_transform(std::string_view name);

std::string to_string(const WeightMonomial& m);
std::string to_string(const WeightPolynomial& p);

// Homomorphism from the formal weights into a commutative ring R.
template <class R>
struct Specialization {
  std::string name;
  std::function<R(WeightIndex)> weight;
};

struct specialization_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class R>
R substitute(const WeightMonomial& m, const Specialization<R>& spec,
             std::map<WeightIndex, R>* cache = nullptr) {
  R acc = ring<R>::one();
  for (const auto& [idx, e] : m.factors()) {
    R img;
    if (cache) {
      auto it = cache->find(idx);
      if (it == cache->end()) it = cache->emplace(idx, spec.weight(idx)).first;
      img = it->second;
    } else {
      img = spec.weight(idx);
    }
    try {
      acc = acc * ring_pow(img, e);
    } catch (const not_invertible&) {
      throw specialization_error(spec.name + ": image of w(" + std::to_string(idx.s) + "," +
                                 std::to_string(idx.t) + ") is not invertible");
    }
  }
  return acc;
}

template <class R>
R substitute(const WeightPolynomial& p, const Specialization<R>& spec) {
  std::map<WeightIndex, R> cache;
  R acc = ring<R>::zero();
  for (const auto& [m, c] : p.terms())
    acc = acc + ring<R>::from_int(c) * substitute(m, spec, &cache);
  return acc;
}

}  // namespace wb
