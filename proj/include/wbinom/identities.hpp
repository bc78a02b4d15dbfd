#pragma once

#include "wbinom/weight_algebra.hpp"

#include <string>
#include <vector>

namespace wb {

struct IdentityReport {
  std::string name;
  std::vector<int> instance;
  WeightPolynomial lhs;
  WeightPolynomial rhs;
  bool pass = false;
};

// wbinom(n,j) * (x^j y^{n-j} wbinom(m,k-j) y^{j-n} x^{-j}) * prod_{i=1}^{k-j} W(i+j, n-j)
WeightPolynomial convolution_term(int n, int m, int k, int j);

IdentityReport conv1(int n, int m, int k);
IdentityReport conv2(int n, int m, int k);

WeightPolynomial matrix_f(int n, int k, int m);
WeightPolynomial matrix_g(int k, int l, int m);
std::vector<IdentityReport> inversion_check(int m, int lo, int hi);

}  // namespace wb
