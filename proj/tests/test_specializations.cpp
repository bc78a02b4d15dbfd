#include "doctest.h"

#include "wbinom/qbinom.hpp"
#include "wbinom/stirling.hpp"
#include "wbinom/symmetric.hpp"
#include "wbinom/wbinom.hpp"

#include <map>

using namespace wb;

TEST_CASE("q oracle") {
  QLaurent expect = 1 + qpow(1) + qpow(2, 2) + qpow(3) + qpow(4);
  CHECK(qbinom_oracle(4, 2) == expect);
  CHECK(to_string(expect) == "1 + q + 2*q^2 + q^3 + q^4");
  for (int n = -5; n <= 5; ++n) CHECK(qbinom_oracle(n, 0) == 1);
  CHECK(qbinom_oracle(-1, 2) == qpow(-3));
  for (int n = -5; n <= 5; ++n)
    for (int k = -5; k <= 5; ++k) {
      INFO("n=" << n << " k=" << k);
      CHECK(substitute(wbinom(n, k), q_specialization()) == qbinom_oracle(n, k));
    }
}

TEST_CASE("elementary and complete symmetric functions") {
  CHECK(e_sym(3, 2) == a(1) * a(2) + a(1) * a(3) + a(2) * a(3));
  // 1/(1 + a_0 t) = a_0^{-1} t^{-1} - a_0^{-2} t^{-2} + ...
  for (int k = -6; k <= -1; ++k) CHECK(e_sym(-1, k) == ALaurent(neg_one_pow(k + 1)) * a(0, k));
  for (int n = -4; n <= 4; ++n) {
    CHECK(e_sym(n, 0) == 1);
    CHECK(h_sym(n, 0) == 1);
  }
  CHECK(h_sym(2, 2) == a(1, 2) + a(1) * a(2) + a(2, 2));
  // zero outside the admissible ranges
  CHECK(e_sym(-3, -1).is_zero());
  CHECK(h_sym(3, -1).is_zero());
  CHECK(e_sym(2, 3).is_zero());
  // recurrences from the definition
  for (int n = -4; n <= 4; ++n)
    for (int k = -6; k <= 6; ++k) {
      if (!(n + 1 == 0 && k == 0)) CHECK(e_sym(n + 1, k) == e_sym(n, k) + a(n + 1) * e_sym(n, k - 1));
      if (k != 0) CHECK(h_sym(n, k) == h_sym(n - 1, k) + a(n) * h_sym(n, k - 1));
    }
  // Loeb: all a_i = 1 gives the integer binomials
  Specialization<bigint> one{"one", [](WeightIndex) { return bigint(1); }};
  for (int n = -5; n <= 5; ++n)
    for (int k = -5; k <= 5; ++k) {
      bigint at_one = 0;
      auto e = e_sym(n, k);
      for (const auto& [m, c] : e.terms()) at_one += c;
      CHECK(at_one == substitute(wbinom(n, k), one));
    }
}

TEST_CASE("bridge examples") {
  auto lhs = substitute(wbinom(2, 1), e_weights());
  CHECK(lhs == (a(1) + a(2)) * a(1, -1));
  CHECK(lhs == e_sym(2, 1) * a(1, -1));
}

TEST_CASE("symmetric function suite") {
  auto records = sym_identity_suite(-4, 4);
  std::map<std::string, int> seen;
  for (const auto& r : records) {
    ++seen[r.name];
    std::string inst;
    for (int v : r.instance) inst += std::to_string(v) + " ";
    INFO(r.name << " " << inst << ": " << r.lhs << " vs " << r.rhs);
    CHECK(r.pass);
  }
  for (const char* name : {"sym_dual_eh", "sym_dual_e", "sym_dual_h", "bridge_e", "bridge_h", "econv1", "econv2",
                           "hconv1", "hconv2", "eh_mixed", "eh_orthogonal"})
    CHECK(seen[name] > 0);
}

TEST_CASE("classical Stirling numbers") {
  using K = StirlingKind;
  CHECK(stirling_classical({4, 2, 0, K::first}) == 11);
  CHECK(stirling_classical({4, 2, 0, K::second}) == 7);
  CHECK(stirling_classical({-2, -4, 0, K::second}) == 11);
  CHECK(stirling_classical({4, 5, 0, K::first}) == 0);
  // t(t-1)(t-2)(t-3) = t^4 - 6t^3 + 11t^2 - 6t
  CHECK(stirling_classical({4, 3, 0, K::first}) == -6);
  CHECK(stirling_classical({4, 1, 0, K::first}) == -6);
  CHECK(stirling_classical({4, 0, 0, K::first}) == 0);
  CHECK(stirling_classical({0, 0, 0, K::first}) == 1);
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= n; ++k)
      CHECK(stirling_classical({n, k, 0, K::second}) ==
            k * stirling_classical({n - 1, k, 0, K::second}) + stirling_classical({n - 1, k - 1, 0, K::second}));
}

TEST_CASE("weighted Stirling numbers") {
  using K = StirlingKind;
  CHECK(stirling_w({2, 1, 0, K::first}) == -weighted_integer(1));
  CHECK(stirling_w({2, 1, 0, K::second}) == weighted_integer(1));
  CHECK(stirling_w({3, 1, 0, K::second}) == weighted_integer(1) * weighted_integer(1));
  CHECK(stirling_w({1, 2, 0, K::first}).is_zero());
  auto records = stirling_suite(-4, 4, -2, 2, 2);
  std::map<std::string, int> seen;
  for (const auto& r : records) {
    ++seen[r.name];
    std::string inst;
    for (int v : r.instance) inst += std::to_string(v) + " ";
    INFO(r.name << " " << inst);
    CHECK(r.pass);
  }
  for (const char* name : {"stirling1_rec", "stirling2_rec", "stirling_dual", "stirling_dual_classical",
                           "stirling1_conv1", "stirling1_conv2", "stirling2_conv1", "stirling2_conv2"})
    CHECK(seen[name] > 0);
}

TEST_CASE("second Stirling convolution outside its domain") {
  using K = StirlingKind;
  // (n,m,k) = (-1,1,0): the only summand j=-1 uses S(-1,0), which is 0 for k > n,
  // while the left side S(0,0) is 1
  auto lhs = stirling_w({0, 0, 0, K::second});
  auto rhs = stirling_w({-1, 0, 0, K::second}) * stirling_w({-1, -2, 1, K::first});
  CHECK(lhs == 1);
  CHECK(rhs.is_zero());
  // the symmetric-function form of the same sum keeps the nonzero value
  CHECK(e_sym(-1, -1) == a(0, -1));
}
