#pragma once

#include "wbinom/ring.hpp"

#include <algorithm>
#include <compare>
#include <map>
#include <utility>
#include <vector>

namespace wb {

// Product of variables v_key^exp with nonzero integer exponents, kept sorted by key.
template <class Key>
class SparseMonomial {
 public:
  using factor = std::pair<Key, int>;

  SparseMonomial() = default;

  explicit SparseMonomial(std::vector<factor> f) : f_(std::move(f)) { canonicalize(); }

  static SparseMonomial var(Key k, int e = 1) { return SparseMonomial({{k, e}}); }

  const std::vector<factor>& factors() const { return f_; }
  bool is_one() const { return f_.empty(); }

  int exponent(const Key& k) const {
    auto it = std::lower_bound(f_.begin(), f_.end(), k,
                               [](const factor& a, const Key& b) { return a.first < b; });
    return (it != f_.end() && it->first == k) ? it->second : 0;
  }

  SparseMonomial inverse() const {
    SparseMonomial r;
    r.f_ = f_;
    for (auto& [k, e] : r.f_) e = -e;
    return r;
  }

  // g(key) returns {new_key, exponent multiplier}.
  template <class G>
  SparseMonomial map_keys(G&& g) const {
    std::vector<factor> out;
    out.reserve(f_.size());
    for (const auto& [k, e] : f_) {
      auto [k2, mult] = g(k);
      out.emplace_back(k2, e * mult);
    }
    return SparseMonomial(std::move(out));
  }

  friend SparseMonomial operator*(const SparseMonomial& a, const SparseMonomial& b) {
    SparseMonomial r;
    r.f_.reserve(a.f_.size() + b.f_.size());
    auto i = a.f_.begin(), j = b.f_.begin();
    while (i != a.f_.end() || j != b.f_.end()) {
      if (j == b.f_.end() || (i != a.f_.end() && i->first < j->first)) {
        r.f_.push_back(*i++);
      } else if (i == a.f_.end() || j->first < i->first) {
        r.f_.push_back(*j++);
      } else {
        int e = i->second + j->second;
        if (e != 0) r.f_.emplace_back(i->first, e);
        ++i;
        ++j;
      }
    }
    return r;
  }

  friend bool operator==(const SparseMonomial&, const SparseMonomial&) = default;
  friend auto operator<=>(const SparseMonomial& a, const SparseMonomial& b) {
    return a.f_ <=> b.f_;
  }

 private:
  void canonicalize() {
    std::sort(f_.begin(), f_.end(),
              [](const factor& a, const factor& b) { return a.first < b.first; });
    std::vector<factor> merged;
    merged.reserve(f_.size());
    for (const auto& fe : f_) {
      if (!merged.empty() && merged.back().first == fe.first)
        merged.back().second += fe.second;
      else
        merged.push_back(fe);
    }
    std::erase_if(merged, [](const factor& x) { return x.second == 0; });
    f_ = std::move(merged);
  }

  std::vector<factor> f_;
};

// Monomials form a group; only the multiplicative part of the traits exists.
template <class Key>
struct ring<SparseMonomial<Key>> {
  static SparseMonomial<Key> one() { return {}; }
  static SparseMonomial<Key> inverse(const SparseMonomial<Key>& m) { return m.inverse(); }
};

// Finite Z-linear combination of monomials; zero coefficients are never stored.
template <class Mono>
class LaurentPoly {
 public:
  using monomial = Mono;
  using term_map = std::map<Mono, bigint>;

  LaurentPoly() = default;
  LaurentPoly(long long c) { add_term(Mono{}, c); }
  LaurentPoly(const bigint& c) { add_term(Mono{}, c); }
  explicit LaurentPoly(const Mono& m, const bigint& c = 1) { add_term(m, c); }

  const term_map& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }

  void add_term(const Mono& m, const bigint& c) {
    if (c == 0) return;
    auto [it, fresh] = t_.try_emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) t_.erase(it);
    }
  }

  bool is_unit() const {
    return t_.size() == 1 && (t_.begin()->second == 1 || t_.begin()->second == -1);
  }

  LaurentPoly unit_inverse() const {
    if (!is_unit()) throw not_invertible("polynomial is not a monomial with coefficient +-1");
    return LaurentPoly(t_.begin()->first.inverse(), t_.begin()->second);
  }

  // g(monomial) -> monomial; coefficients are carried over and merged.
  template <class G>
  LaurentPoly map_monomials(G&& g) const {
    LaurentPoly r;
    for (const auto& [m, c] : t_) r.add_term(g(m), c);
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly r;
    for (const auto& [m, c] : a.t_) r.t_.emplace(m, -c);
    return r;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ma, ca] : a.t_)
      for (const auto& [mb, cb] : b.t_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const Mono& m) {
    LaurentPoly r;
    for (const auto& [ma, ca] : a.t_) r.t_.emplace(ma * m, ca);
    return r;
  }
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  term_map t_;
};

template <class Mono>
struct ring<LaurentPoly<Mono>> {
  using P = LaurentPoly<Mono>;
  static P zero() { return P(); }
  static P one() { return P(1); }
  static P from_int(const bigint& c) { return P(c); }
  static bool is_zero(const P& x) { return x.is_zero(); }
  static P inverse(const P& x) { return x.unit_inverse(); }
};

}  // namespace wb
