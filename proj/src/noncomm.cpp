#include "wbinom/noncomm.hpp"

#include <cctype>
#include <string>

namespace wb {

namespace {

bool is_x(Letter l) { return l == Letter::x || l == Letter::x_inv; }
int power(Letter l) { return l == Letter::x || l == Letter::y ? 1 : -1; }

Letter make(bool x, int sign) {
  if (x) return sign > 0 ? Letter::x : Letter::x_inv;
  return sign > 0 ? Letter::y : Letter::y_inv;
}

// Weight emitted by swapping a y-letter in front of an x-letter.
WeightMonomial swap_weight(Letter yl, Letter xl) {
  bool yp = yl == Letter::y, xp = xl == Letter::x;
  if (yp && xp) return w(1, 1);
  if (yp) return w(0, 1, -1);
  if (xp) return w(1, 0, -1);
  return w(0, 0);
}

enum class Redex { none, cancel, swap };

Redex redex_at(const Word& wd, std::size_t i) {
  Letter a = wd[i], b = wd[i + 1];
  if (is_x(a) == is_x(b)) return power(a) != power(b) ? Redex::cancel : Redex::none;
  return is_x(b) ? Redex::swap : Redex::none;
}

template <class Pick>
NormalForm rewrite(Word wd, Pick pick) {
  WeightMonomial coeff;
  std::vector<std::size_t> spots;
  for (;;) {
    spots.clear();
    for (std::size_t i = 0; i + 1 < wd.size(); ++i)
      if (redex_at(wd, i) != Redex::none) spots.push_back(i);
    if (spots.empty()) break;
    std::size_t i = pick(spots);
    if (redex_at(wd, i) == Redex::cancel) {
      wd.erase(wd.begin() + i, wd.begin() + i + 2);
      continue;
    }
    int dx = 0, dy = 0;
    for (std::size_t j = 0; j < i; ++j) (is_x(wd[j]) ? dx : dy) += power(wd[j]);
    coeff = coeff * shift(swap_weight(wd[i], wd[i + 1]), dx, dy);
    std::swap(wd[i], wd[i + 1]);
  }
  NormalForm nf{WeightPolynomial(coeff), 0, 0};
  for (Letter l : wd) (is_x(l) ? nf.xexp : nf.yexp) += power(l);
  return nf;
}

}  // namespace

Word parse_word(std::string_view text) {
  Word out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '*') {
      ++i;
      continue;
    }
    bool x;
    int sign = 1;
    switch (c) {
      case 'x': x = true; break;
      case 'y': x = false; break;
      case 'X': x = true, sign = -1; break;
      case 'Y': x = false, sign = -1; break;
      default: throw std::invalid_argument("bad letter in word: " + std::string(text));
    }
    ++i;
    int e = 1;
    if (text.substr(i, 5) == "⁻¹") {
      e = -1;
      i += 5;
    } else if (i < text.size() && text[i] == '^') {
      ++i;
      std::size_t used = 0;
      try {
        e = std::stoi(std::string(text.substr(i)), &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad exponent in word: " + std::string(text));
      }
      i += used;
    }
    int total = sign * e;
    for (int r = 0; r < std::abs(total); ++r) out.push_back(make(x, total));
  }
  return out;
}

std::string to_string(const Word& wd) {
  std::string s;
  for (Letter l : wd) {
    if (!s.empty()) s += ' ';
    s += is_x(l) ? 'x' : 'y';
    if (power(l) < 0) s += "^-1";
  }
  return s;
}

NormalForm normalize(const Word& wd) {
  return rewrite(wd, [](const std::vector<std::size_t>& s) { return s.back(); });
}

NormalForm normalize(const Word& wd, std::mt19937_64& rng) {
  return rewrite(wd, [&](const std::vector<std::size_t>& s) {
    return s[std::uniform_int_distribution<std::size_t>(0, s.size() - 1)(rng)];
  });
}

WeightMonomial commute_powers(int k, int l) {
  return range_product<WeightMonomial>(1, l, [k](long i) {
    return range_product<WeightMonomial>(1, k, [i](long j) {
      return w(static_cast<int>(i), static_cast<int>(j));
    });
  });
}

XSeries::XSeries(int n_, int K_) : n(n_), K(K_) {
  if (K_ < 0) throw invalid_truncation("truncation order must be >= 0");
  coeffs.resize(K_ + 1);
}

XSeries XSeries::monomial(int xdeg, int ydeg, int K, WeightPolynomial c) {
  XSeries s(xdeg + ydeg, K);
  if (xdeg < 0) throw invalid_truncation("series carry no negative powers of x");
  if (xdeg <= K) s.coeffs[xdeg] = std::move(c);
  return s;
}

const WeightPolynomial& XSeries::at(int k) const {
  if (k < 0 || k > K) throw invalid_truncation("coefficient " + std::to_string(k) + " is beyond the truncation order");
  return coeffs[k];
}

XSeries XSeries::truncate(int K2) const {
  if (K2 > K) throw invalid_truncation("cannot raise the truncation order");
  XSeries r(n, K2);
  std::copy(coeffs.begin(), coeffs.begin() + K2 + 1, r.coeffs.begin());
  return r;
}

XSeries operator+(const XSeries& a, const XSeries& b) {
  if (a.n != b.n) throw std::invalid_argument("series of different total degree");
  XSeries r(a.n, std::min(a.K, b.K));
  for (int k = 0; k <= r.K; ++k) r.coeffs[k] = a.coeffs[k] + b.coeffs[k];
  return r;
}

XSeries operator*(const WeightPolynomial& c, const XSeries& a) {
  XSeries r = a;
  for (auto& v : r.coeffs) v = c * v;
  return r;
}

XSeries operator*(const XSeries& a, const XSeries& b) {
  XSeries r(a.n + b.n, std::min(a.K, b.K));
  for (int i = 0; i <= r.K; ++i) {
    if (a.coeffs[i].is_zero()) continue;
    const int u = a.n - i;
    for (int l = 0; i + l <= r.K; ++l) {
      if (b.coeffs[l].is_zero()) continue;
      // a_i x^i y^u b_l x^l = a_i shift(shift(b_l,0,u) C(u,l), i, 0) x^{i+l} y^u
      auto moved = shift(b.coeffs[l], 0, u) * WeightPolynomial(commute_powers(u, l));
      r.coeffs[i + l] = r.coeffs[i + l] + a.coeffs[i] * shift(moved, i, 0);
    }
  }
  return r;
}

namespace {

XSeries x_plus_y(int K) { return XSeries::monomial(1, 0, K) + XSeries::monomial(0, 1, K); }

// y^{-1} sum_k (-1)^k (x y^{-1})^k
XSeries inverse_x_plus_y(int K) {
  XSeries ratio = XSeries::monomial(1, -1, K);
  XSeries term = XSeries::monomial(0, 0, K);
  XSeries geo = term;
  for (int k = 1; k <= K; ++k) {
    term = term * ratio;
    geo = geo + WeightPolynomial(neg_one_pow(k)) * term;
  }
  return XSeries::monomial(0, -1, K) * geo;
}

}  // namespace

XSeries expand_pow(int n, int K) {
  if (K < 0) throw invalid_truncation("truncation order must be >= 0");
  XSeries base = n >= 0 ? x_plus_y(K) : inverse_x_plus_y(K);
  XSeries acc = XSeries::monomial(0, 0, K);
  for (int i = 0; i < std::abs(n); ++i) acc = acc * base;
  return acc;
}

const WeightPolynomial& SecondExpansion::at(int k) const {
  int i = n - k;
  if (i < 0 || i > K) throw invalid_truncation("coefficient " + std::to_string(k) + " is outside [n-K, n]");
  return coeffs[i];
}

SecondExpansion expand_second(int n, int K) {
  // expand in the algebra with x and y exchanged, then reorder y^i x^{n-i}
  auto dual = expand_pow(n, K);
  SecondExpansion r{n, K, {}};
  for (int i = 0; i <= K; ++i)
    r.coeffs.push_back(apply_transform(dual.coeffs[i], Transform::hat) *
                       WeightPolynomial(commute_powers(i, n - i)));
  return r;
}

}  // namespace wb
