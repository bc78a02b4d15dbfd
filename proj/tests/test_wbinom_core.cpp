#include "doctest.h"

#include "wbinom/wbinom.hpp"

using namespace wb;

namespace {

WeightPolynomial P(const WeightMonomial& m) { return WeightPolynomial(m); }

// Plain binomial for 0 <= k <= n by multiplicative formula.
bigint choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  bigint r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

bigint integer_oracle(int n, int k) {
  switch (region_of(n, k)) {
    case Region::forward: return choose(n, k);
    case Region::upper_negative: return neg_one_pow(k) * choose(k - n - 1, k);
    case Region::lower_negative: return neg_one_pow(n - k) * choose(-k - 1, -n - 1);
    default: return 0;
  }
}

}  // namespace

TEST_CASE("recursion examples") {
  for (int n = -6; n <= 6; ++n) CHECK(wbinom_recursive(n, 0) == 1);
  CHECK(wbinom_recursive(2, 1) == 1 + P(w(1, 1)));
  CHECK(wbinom_recursive(-1, 2) == P(w(1, 0, -1) * w(2, 0, -1) * w(2, -1, -1)));
  CHECK(wbinom_recursive(3, 5).is_zero());
}

TEST_CASE("pascal property and zero regions on [-6,6]^2") {
  for (int n = -6; n <= 6; ++n)
    for (int k = -6; k <= 6; ++k) {
      CHECK(wbinom(n, k).is_zero() == is_zero_region(n, k));
      if (n + 1 == 0 && k == 0) continue;
      CHECK(wbinom(n + 1, k) == wbinom(n, k) + wbinom(n, k - 1) * big_weight(k, n + 1 - k));
    }
}

TEST_CASE("n = -1 closed form") {
  for (int k = -6; k <= 6; ++k) {
    auto prod = range_product<WeightMonomial>(1, k, [](long j) {
      return big_weight(static_cast<int>(j), static_cast<int>(-j));
    });
    CHECK(wbinom(-1, k) == WeightPolynomial(prod, neg_one_pow(k) * sgn(k)));
  }
}

TEST_CASE("region reductions agree with the recursion") {
  CHECK(wbinom_regions(-1, 2) == wbinom_recursive(-1, 2));
  CHECK(wbinom_regions(-3, -2).is_zero());
  // (-2,-3) lies in k <= n < 0, not in the zero strip
  CHECK(!wbinom_regions(-2, -3).is_zero());
  CHECK(wbinom_regions(-2, -3) == wbinom_recursive(-2, -3));
  CHECK(wbinom_regions(4, 2) == wbinom_recursive(4, 2));
  for (int n = -6; n <= 6; ++n)
    for (int k = -6; k <= 6; ++k) CHECK(wbinom_regions(n, k) == wbinom_recursive(n, k));
}

TEST_CASE("reflection formulas on [-5,5]^2") {
  CHECK(reflect_hat_rhs(2, 1) == 1 + P(w(1, 1)));
  CHECK(reflect_tilde_rhs(-3, -3) == 1);
  CHECK(reflect_breve_rhs(-1, 2) == wbinom(-1, 2));
  CHECK(reflect_tilde_rhs(-3, -2) == wbinom(-3, -2));
  for (int n = -5; n <= 5; ++n) {
    CHECK(reflect_hat_rhs(n, 0) == 1);
    for (int k = -5; k <= 5; ++k) {
      INFO("n=" << n << " k=" << k);
      CHECK(reflect_hat_rhs(n, k) == wbinom(n, k));
      CHECK(reflect_tilde_rhs(n, k) == wbinom(n, k));
      CHECK(reflect_breve_rhs(n, k) == wbinom(n, k));
    }
  }
}

TEST_CASE("trivial weights give signed ordinary binomials") {
  Specialization<bigint> one{"one", [](WeightIndex) { return bigint(1); }};
  for (int n = -6; n <= 6; ++n)
    for (int k = -6; k <= 6; ++k) CHECK(substitute(wbinom(n, k), one) == integer_oracle(n, k));
}

TEST_CASE("weighted integers") {
  CHECK(weighted_integer(1) == 1);
  CHECK(weighted_integer(2) == 1 + P(w(1, 1)));
  CHECK(weighted_integer(-1) == -P(w(1, 0, -1)));
  CHECK(weighted_integer(0).is_zero());
}

TEST_CASE("cache returns the same values as a fresh computation") {
  auto before = wbinom(-3, 4);
  auto hit = wbinom(-3, 4);
  clear_binom_cache();
  CHECK(binom_cache_size() == 0);
  CHECK(wbinom(-3, 4) == before);
  CHECK(hit == before);
}

TEST_CASE("no cancellation to zero outside the zero regions") {
  for (int n = -6; n <= 6; ++n)
    for (int k = -6; k <= 6; ++k)
      if (!is_zero_region(n, k)) CHECK(!wbinom(n, k).is_zero());
}
