#include "doctest.h"

#include "wbinom/paths.hpp"
#include "wbinom/wbinom.hpp"

#include <map>
#include <random>
#include <set>

using namespace wb;

namespace {

WeightPolynomial P(const WeightMonomial& m) { return WeightPolynomial(m); }

HybridPath east_sample() { return parse_path("E N E N E E"); }
HybridPath south_sample() { return parse_path("S ES S ES"); }
HybridPath west_sample() { return parse_path("W NW W NW"); }

// Independent count of lattice paths by the region grammar.
long long path_count(int k, int m) {
  auto choose = [](long long a, long long b) -> long long {
    if (b < 0 || b > a) return 0;
    long long r = 1;
    for (long long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
  };
  if (k >= 0 && m >= 0) return choose(k + m, k);
  if (m < 0 && k >= 0) return -m - k >= 1 ? choose(-m - 1, k) : 0;
  if (k < 0 && m >= 0) return -k - m >= 1 ? choose(-k - 1, m) : 0;
  return 0;
}

}  // namespace

TEST_CASE("enumeration") {
  auto up = enumerate_paths(0, 3);
  REQUIRE(up.size() == 1);
  CHECK(step_string(up[0]) == "N N N");
  CHECK(enumerate_paths(2, -4).size() == 3);
  CHECK(enumerate_paths(-1, -1).empty());
  CHECK(enumerate_paths(0, 0).size() == 1);
  for (int k = -6; k <= 6; ++k)
    for (int m = -6; m <= 6; ++m) {
      auto ps = enumerate_paths(k, m);
      CHECK(static_cast<long long>(ps.size()) == path_count(k, m));
      std::set<std::string> distinct;
      for (const auto& p : ps) {
        CHECK(is_valid_path(p));
        CHECK(p.end == Point{k, m});
        distinct.insert(step_string(p));
      }
      CHECK(distinct.size() == ps.size());
    }
}

TEST_CASE("path validity") {
  CHECK(is_valid_path(east_sample()));
  CHECK(is_valid_path(south_sample()));
  CHECK(is_valid_path(west_sample()));
  CHECK(!is_valid_path(parse_path("ES S")));
  CHECK(!is_valid_path(parse_path("NW W")));
  CHECK(!is_valid_path(parse_path("E S")));
  CHECK(!is_valid_path(parse_path("S W")));
  auto p = east_sample();
  p.end = {0, 0};
  CHECK(!is_valid_path(p));
  CHECK_THROWS_AS(parse_path("E X"), std::invalid_argument);
}

TEST_CASE("sample path weights") {
  auto f1 = path_weight_steps(east_sample());
  CHECK(f1.sign == 1);
  CHECK(f1.mono == w(2, 1) * w(3, 1) * w(3, 2) * w(4, 1) * w(4, 2));
  auto left = path_weight_steps(south_sample());
  CHECK(left.sign == 1);
  CHECK(left.mono == w(1, 0, -1) * w(2, 0, -1) * w(2, -1, -1) * w(2, -2, -1));
  auto right = path_weight_steps(west_sample());
  CHECK(right.sign == 1);
  CHECK(right.mono == w(-1, 1, -1) * w(-2, 1, -1) * w(-3, 1, -1) * w(-3, 2, -1));

  CHECK(path_weight_area(east_sample()) == f1);
  CHECK(path_weight_area(HybridPath{}) == SignedMonomial{});
  CHECK(path_weight_area(south_sample()) == left);
  int corners = 0;
  for (const auto& c : area_cells(south_sample()))
    if (c.negative_corner) {
      ++corners;
      bool expected = (c.s == 1 && c.t == 0) || (c.s == 2 && c.t == -2);
      CHECK(expected);
    }
  CHECK(corners == 2);
  CHECK(path_weight_area(west_sample()) == right);
}

TEST_CASE("step weights equal area weights for |n|,|k| <= 6") {
  for (int n = -6; n <= 6; ++n)
    for (int k = -6; k <= 6; ++k)
      for (const auto& p : enumerate_paths(k, n - k)) {
        INFO(step_string(p));
        CHECK(path_weight_steps(p) == path_weight_area(p));
      }
}

TEST_CASE("path sums give the binomials") {
  CHECK(path_sum(1, 1) == 1 + P(w(1, 1)));
  CHECK(path_sum(2, -4) == wbinom(-2, 2));
  CHECK(path_sum(5, 0) == 1);
  for (int n = -6; n <= 6; ++n)
    for (int k = -6; k <= 6; ++k) {
      INFO("n=" << n << " k=" << k);
      CHECK(path_sum(k, n - k) == wbinom(n, k));
    }
}

TEST_CASE("subsets and paths") {
  CHECK(subset_to_path({6, {1, 3, 5, 6}, false}) == east_sample());
  CHECK(subset_to_path({-2, {0, -1}, false}) == south_sample());
  CHECK(subset_to_path({-2, {0, 0, -1, -1}, true}) == west_sample());
  CHECK(to_string(HybridSubset{6, {1, 3, 5, 6}, false}) == "{1,3,5,6|}");
  CHECK(to_string(HybridSubset{-2, {0, 0, -1, -1}, true}) == "{|0,0,-1,-1}");
  CHECK(subsets_of(-2, 2).size() == 3);
  for (int n = -6; n <= 6; ++n)
    for (int k = -6; k <= 6; ++k) {
      INFO("n=" << n << " k=" << k);
      auto subs = subsets_of(n, k);
      auto paths = enumerate_paths(k, n - k);
      CHECK(subs.size() == paths.size());
      std::set<std::string> images;
      for (const auto& y : subs) {
        auto p = subset_to_path(y);
        CHECK(is_valid_path(p));
        CHECK(p.end == Point{k, n - k});
        CHECK(path_to_subset(p) == y);
        images.insert(step_string(p));
      }
      CHECK(images.size() == subs.size());
      for (const auto& p : paths) CHECK(subset_to_path(path_to_subset(p)) == p);
      CHECK(subset_sum(n, k) == wbinom(n, k));
    }
}

TEST_CASE("pairs") {
  auto pairs = enumerate_pairs(1, 1, 1);
  CHECK(pairs.size() == 2);
  std::set<int> joins;
  for (const auto& pp : pairs) joins.insert(pp.j);
  CHECK(joins == std::set<int>{0, 1});
  CHECK_THROWS_AS(enumerate_pairs(1, 1, -1), std::invalid_argument);
  for (const auto& pp : enumerate_pairs(3, -2, 2)) {
    CHECK(pp.p1.end == Point{pp.j, 3 - pp.j});
    CHECK(pp.p2.start == pp.p1.end);
    CHECK(pp.p2.end == Point{2, -1});
  }
}

TEST_CASE("involution on a sample pair") {
  PathPair pp{6, -4, 5, 3, parse_path("E N E E N N"), parse_path("S S S S ES ES", {3, 3})};
  REQUIRE(pp.p2.end == Point{5, -3});
  CHECK(!is_fixed_point(pp));
  auto partner = iota(pp);
  CHECK(partner.j == 2);
  CHECK(step_string(partner.p1) == "E N E N N N");
  CHECK(partner.p2.start == Point{2, 4});
  CHECK(step_string(partner.p2) == "S S S ES S ES ES");
  CHECK(pair_weight(partner).mono == pair_weight(pp).mono);
  CHECK(pair_weight(partner).sign == -pair_weight(pp).sign);
  CHECK(iota(partner) == pp);
}

TEST_CASE("involution properties for m < 0 <= n") {
  for (int n = 0; n <= 5; ++n)
    for (int m = -5; m <= -1; ++m)
      for (int k = 0; k <= 5; ++k) {
        INFO("n=" << n << " m=" << m << " k=" << k);
        WeightPolynomial all, fixed;
        for (const auto& pp : enumerate_pairs(n, m, k)) {
          auto sw = pair_weight(pp);
          all.add_term(sw.mono, sw.sign);
          auto img = iota(pp);
          CHECK(iota(img) == pp);
          if (is_fixed_point(pp)) {
            CHECK(img == pp);
            fixed.add_term(sw.mono, sw.sign);
            auto merged = merge_pair(pp);
            CHECK(is_valid_path(merged));
            CHECK(path_weight_area(merged) == sw);
          } else {
            CHECK(img != pp);
            auto iw = pair_weight(img);
            CHECK(iw.mono == sw.mono);
            CHECK(iw.sign == -sw.sign);
          }
        }
        CHECK(fixed == wbinom(n + m, k));
        CHECK(all == fixed);
      }
}

TEST_CASE("involution rejects the other sign pattern") {
  auto pairs = enumerate_pairs(-2, 3, 1);
  REQUIRE(!pairs.empty());
  CHECK_THROWS_AS(iota(pairs.front()), unsupported_case);
}
