#pragma once

#include "wbinom/weight_algebra.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wb {

// ES and NW are atomic combos (east then south, north then west).
enum class Step { N, S, E, W, ES, NW };

struct Point {
  int x = 0;
  int y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

struct HybridPath {
  std::vector<Step> steps;
  Point start;
  Point end;
  friend bool operator==(const HybridPath&, const HybridPath&) = default;
};

struct SignedMonomial {
  int sign = 1;
  WeightMonomial mono;
  friend bool operator==(const SignedMonomial&, const SignedMonomial&) = default;
  WeightPolynomial poly() const { return WeightPolynomial(mono, sign); }
};

struct unsupported_case : std::logic_error {
  using std::logic_error::logic_error;
};

std::string_view step_name(Step s);
std::string step_string(const HybridPath& p);
HybridPath parse_path(std::string_view steps, Point start = {});
bool is_valid_path(const HybridPath& p);

std::vector<HybridPath> enumerate_paths(int k, int m);

SignedMonomial path_weight_steps(const HybridPath& p);

struct AreaCell {
  int s;
  int t;
  int exponent;          // sgn(s-1) * sgn(t-1)
  bool negative_corner;  // inner corner with s <= 0 or t <= 0
};

std::vector<AreaCell> area_cells(const HybridPath& p);
SignedMonomial path_weight_area(const HybridPath& p);

WeightPolynomial path_sum(int k, int m);

// k-subsets of the hybrid new set [n]. For k >= 0 the elements are the
// positive part; for k < 0 they are the negative part {| ...}.
struct HybridSubset {
  int n = 0;
  std::vector<int> elements;
  bool negative = false;
  friend bool operator==(const HybridSubset&, const HybridSubset&) = default;
};

std::string to_string(const HybridSubset& y);
std::vector<HybridSubset> subsets_of(int n, int k);
HybridPath subset_to_path(const HybridSubset& y);
HybridSubset path_to_subset(const HybridPath& p);
WeightPolynomial subset_sum(int n, int k);

// p2 is a path in the frame whose origin is (j, n-j).
struct PathPair {
  int n = 0, m = 0, k = 0;
  int j = 0;
  HybridPath p1;
  HybridPath p2;
  friend bool operator==(const PathPair&, const PathPair&) = default;
};

std::vector<PathPair> enumerate_pairs(int n, int m, int k);
SignedMonomial pair_weight(const PathPair& pp);

// Sign-reversing involution; only defined for m < 0 <= n.
PathPair iota(const PathPair& pp);
bool is_fixed_point(const PathPair& pp);

// Joins p1 and p2 and cancels the overlapping north/south run.
HybridPath merge_pair(const PathPair& pp);

}  // namespace wb
