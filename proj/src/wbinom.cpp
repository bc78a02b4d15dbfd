#include "wbinom/wbinom.hpp"

namespace wb {

namespace {

struct FormalBigWeight {
  WeightPolynomial operator()(int s, int t) const { return WeightPolynomial(big_weight(s, t)); }
};

PascalRecursion<WeightPolynomial, FormalBigWeight>& engine() {
  thread_local PascalRecursion<WeightPolynomial, FormalBigWeight> e{FormalBigWeight{}};
  return e;
}

WeightMonomial diagonal_product(int k) {
  return range_product<WeightMonomial>(1, k, [](long j) {
    return big_weight(static_cast<int>(j), static_cast<int>(-j));
  });
}

// prod_{j=1}^{d} W(n+1-j, j)^{-1}
WeightMonomial anti_diagonal_inverse(int n, int d) {
  return range_product<WeightMonomial>(1, d, [n](long j) {
    return big_weight(n + 1 - static_cast<int>(j), static_cast<int>(j)).inverse();
  });
}

}  // namespace

WeightPolynomial wbinom_recursive(int n, int k) { return engine()(n, k); }

WeightPolynomial wbinom_regions(int n, int k) {
  switch (region_of(n, k)) {
    case Region::forward:
      return wbinom_recursive(n, k);
    case Region::upper_negative: {
      auto dual = apply_transform(wbinom_recursive(k - n - 1, k), Transform::breve);
      return WeightPolynomial(neg_one_pow(k)) * dual * diagonal_product(k);
    }
    case Region::lower_negative: {
      auto dual = apply_transform(wbinom_recursive(-k - 1, -n - 1), Transform::tilde);
      return WeightPolynomial(neg_one_pow(n - k)) * dual * anti_diagonal_inverse(n, n - k);
    }
    default:
      return {};
  }
}

WeightPolynomial reflect_hat_rhs(int n, int k) {
  auto dual = apply_transform(wbinom_recursive(n, n - k), Transform::hat);
  auto rect = range_product<WeightMonomial>(1, k, [&](long j) {
    return big_weight(static_cast<int>(j), n - k);
  });
  return dual * rect;
}

WeightPolynomial reflect_tilde_rhs(int n, int k) {
  auto dual = apply_transform(wbinom_recursive(-k - 1, -n - 1), Transform::tilde);
  int sign = neg_one_pow(n - k) * sgn(n - k);
  return WeightPolynomial(sign) * dual * anti_diagonal_inverse(n, n - k);
}

WeightPolynomial reflect_breve_rhs(int n, int k) {
  auto dual = apply_transform(wbinom_recursive(k - n - 1, k), Transform::breve);
  int sign = neg_one_pow(k) * sgn(k);
  return WeightPolynomial(sign) * dual * diagonal_product(k);
}

WeightPolynomial weighted_integer(int n) { return wbinom_recursive(n, 1); }

std::size_t binom_cache_size() { return engine().size(); }
void clear_binom_cache() { engine().clear(); }

}  // namespace wb
