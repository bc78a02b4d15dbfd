#include "doctest.h"

#include "wbinom/identities.hpp"
#include "wbinom/wbinom.hpp"

using namespace wb;

namespace {

WeightPolynomial P(const WeightMonomial& m) { return WeightPolynomial(m); }

}  // namespace

TEST_CASE("first convolution") {
  auto r = conv1(1, 1, 1);
  CHECK(r.pass);
  CHECK(r.rhs == P(w(1, 1)) + 1);
  CHECK(r.lhs == wbinom(2, 1));
  for (int n = -3; n <= 3; ++n)
    for (int m = -3; m <= 3; ++m) {
      auto z = conv1(n, m, 0);
      CHECK(z.lhs == 1);
      CHECK(z.rhs == 1);
    }
  CHECK(conv1(-2, 3, 2).pass);
  CHECK_THROWS_AS(conv1(1, 1, -1), std::invalid_argument);
  for (int n = -4; n <= 4; ++n)
    for (int m = -4; m <= 4; ++m)
      for (int k = 0; k <= 6; ++k) {
        INFO("n=" << n << " m=" << m << " k=" << k);
        CHECK(conv1(n, m, k).pass);
      }
}

TEST_CASE("second convolution") {
  auto r = conv2(-1, -1, -2);
  CHECK(r.pass);
  CHECK(r.lhs == 1);
  // n+m = k here, so this is not the vacuous case
  auto edge = conv2(2, -3, -1);
  CHECK(edge.pass);
  CHECK(edge.lhs == wbinom(-1, -1));
  CHECK(edge.lhs == 1);
  auto vac = conv2(2, -4, -1);
  CHECK(vac.pass);
  CHECK(vac.lhs.is_zero());
  CHECK(vac.rhs.is_zero());
  CHECK(conv2(-2, -2, -3).pass);
  CHECK_THROWS_AS(conv2(1, 1, 3), std::invalid_argument);
  for (int n = -4; n <= 4; ++n)
    for (int m = -4; m <= 4; ++m)
      for (int k = n + m - 6; k <= n + m; ++k) {
        INFO("n=" << n << " m=" << m << " k=" << k);
        CHECK(conv2(n, m, k).pass);
      }
}

TEST_CASE("vacuous range n+m < k < 0") {
  for (int n = -4; n <= 4; ++n)
    for (int m = -4; m <= 4; ++m)
      for (int k = n + m + 1; k < 0; ++k) {
        INFO("n=" << n << " m=" << m << " k=" << k);
        auto r = conv2(n, m, k);
        CHECK(r.lhs.is_zero());
        CHECK(r.pass);
      }
}

TEST_CASE("both convolutions agree where both apply") {
  for (int n = -4; n <= 4; ++n)
    for (int m = -4; m <= 4; ++m)
      for (int k = 0; k <= n + m; ++k) {
        auto a = conv1(n, m, k), b = conv2(n, m, k);
        CHECK(a.lhs == b.lhs);
        CHECK(a.rhs == b.rhs);
      }
}

TEST_CASE("matrix inversion") {
  for (int m : {-2, 0, 2}) {
    for (int n = -3; n <= 3; ++n) {
      CHECK(matrix_f(n, n, m) == 1);
      CHECK(matrix_g(n, n, m) == 1);
      CHECK(matrix_f(n, n + 1, m).is_zero());
      CHECK(matrix_g(n, n + 1, m).is_zero());
      CHECK((matrix_f(n + 1, n, m) * matrix_g(n, n, m) + matrix_f(n + 1, n + 1, m) * matrix_g(n + 1, n, m))
                .is_zero());
    }
    for (const auto& r : inversion_check(m, -3, 3)) {
      INFO("m=" << r.instance[0] << " n=" << r.instance[1] << " l=" << r.instance[2]);
      CHECK(r.pass);
    }
  }
  CHECK_THROWS_AS(inversion_check(0, 2, 1), std::invalid_argument);
}
