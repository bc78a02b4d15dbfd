#pragma once

#include "wbinom/weight_algebra.hpp"

#include <random>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace wb {

enum class Letter { x, x_inv, y, y_inv };

using Word = std::vector<Letter>;

// Accepts x, y, X (= x^-1), Y (= y^-1), exponents ^k and the superscript ⁻¹.
Word parse_word(std::string_view text);
std::string to_string(const Word& wd);

struct NormalForm {
  WeightPolynomial coeff;
  int xexp = 0;
  int yexp = 0;
  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

// Rightmost-first rewriting.
NormalForm normalize(const Word& wd);
// Rewrites at uniformly random reducible positions.
NormalForm normalize(const Word& wd, std::mt19937_64& rng);

// y^k x^l = commute_powers(k, l) x^l y^k
WeightMonomial commute_powers(int k, int l);

struct invalid_truncation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// sum_{k=0}^{K} coeffs[k] x^k y^{n-k}; terms of x-degree above K are unknown.
struct XSeries {
  int n = 0;
  int K = 0;
  std::vector<WeightPolynomial> coeffs;

  XSeries() = default;
  XSeries(int n, int K);

  static XSeries monomial(int xdeg, int ydeg, int K, WeightPolynomial c = WeightPolynomial(1));

  const WeightPolynomial& at(int k) const;
  XSeries truncate(int K2) const;
};

XSeries operator+(const XSeries& a, const XSeries& b);
XSeries operator*(const XSeries& a, const XSeries& b);
XSeries operator*(const WeightPolynomial& c, const XSeries& a);

XSeries expand_pow(int n, int K);

struct SecondExpansion {
  int n = 0;
  int K = 0;
  // coeffs[i] belongs to x^{n-i} y^{i}
  std::vector<WeightPolynomial> coeffs;
  const WeightPolynomial& at(int k) const;
};

SecondExpansion expand_second(int n, int K);

}  // namespace wb
