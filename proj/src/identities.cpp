#include "wbinom/identities.hpp"

#include "wbinom/wbinom.hpp"

#include <stdexcept>

namespace wb {

namespace {

IdentityReport report(std::string name, std::vector<int> instance, WeightPolynomial lhs,
                      WeightPolynomial rhs) {
  bool pass = lhs == rhs;
  return {std::move(name), std::move(instance), std::move(lhs), std::move(rhs), pass};
}

}  // namespace

WeightPolynomial convolution_term(int n, int m, int k, int j) {
  auto left = wbinom(n, j);
  if (left.is_zero()) return {};
  auto weights = range_product<WeightMonomial>(1, k - j, [=](long i) {
    return big_weight(static_cast<int>(i) + j, n - j);
  });
  return left * shift(wbinom(m, k - j), j, n - j) * WeightPolynomial(weights);
}

IdentityReport conv1(int n, int m, int k) {
  if (k < 0) throw std::invalid_argument("conv1 needs k >= 0");
  auto rhs = range_sum<WeightPolynomial>(0, k, [=](long j) {
    return convolution_term(n, m, k, static_cast<int>(j));
  });
  return report("conv1", {n, m, k}, wbinom(n + m, k), std::move(rhs));
}

IdentityReport conv2(int n, int m, int k) {
  if (k > n + m && k >= 0) throw std::invalid_argument("conv2 needs k <= n+m or k < 0");
  auto rhs = range_sum<WeightPolynomial>(k - m, n, [=](long j) {
    return convolution_term(n, m, k, static_cast<int>(j));
  });
  return report("conv2", {n, m, k}, wbinom(n + m, k), std::move(rhs));
}

WeightPolynomial matrix_f(int n, int k, int m) {
  if (k > n) return {};
  auto weights = range_product<WeightMonomial>(1, n - k, [=](long i) {
    return big_weight(static_cast<int>(i) + k, -m - k - 1);
  });
  return shift(wbinom(m + n, n - k), k, -m - k - 1) * WeightPolynomial(weights);
}

WeightPolynomial matrix_g(int k, int l, int m) {
  if (l > k) return {};
  return shift(wbinom(-m - l - 1, k - l), l, 0);
}

std::vector<IdentityReport> inversion_check(int m, int lo, int hi) {
  if (lo > hi) throw std::invalid_argument("inversion_check needs lo <= hi");
  std::vector<IdentityReport> out;
  for (int n = lo; n <= hi; ++n)
    for (int l = lo; l <= hi; ++l) {
      // empty when n < l, never reversed
      WeightPolynomial sum;
      for (int k = l; k <= n; ++k) sum = sum + matrix_f(n, k, m) * matrix_g(k, l, m);
      out.push_back(report("inversion", {m, n, l}, std::move(sum), WeightPolynomial(n == l ? 1 : 0)));
    }
  return out;
}

}  // namespace wb
