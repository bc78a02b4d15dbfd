#pragma once

#include "wbinom/weight_algebra.hpp"

#include <string>
#include <vector>

namespace wb {

using AMonomial = SparseMonomial<int>;
using ALaurent = LaurentPoly<AMonomial>;

inline ALaurent a(int i, int e = 1) { return ALaurent(AMonomial::var(i, e)); }
std::string to_string(const ALaurent& p);

// One generating factor (1 + c t)^power.
template <class R>
struct SetFactor {
  R c;
  int power;
};

// The hybrid set <f(l) | f(m)>, following the signed product convention.
template <class R, class F>
std::vector<SetFactor<R>> new_set(long l, long m, F&& f) {
  auto r = product_range(l, m);
  std::vector<SetFactor<R>> out;
  for (long i = r.first; i <= r.last; ++i) out.push_back({R(f(i)), r.exponent});
  return out;
}

namespace detail {

// [t^k] prod (1 + c t)^power as a power series in t, k >= 0
template <class R>
R ascending_coeff(const std::vector<SetFactor<R>>& fs, int k) {
  std::vector<R> series(k + 1, ring<R>::zero());
  series[0] = ring<R>::one();
  for (const auto& f : fs) {
    if (f.power > 0) {
      for (int d = k; d >= 1; --d) series[d] = series[d] + f.c * series[d - 1];
    } else {
      // multiply by 1/(1 + c t): s_d -= c s_{d-1}, running upward
      for (int d = 1; d <= k; ++d) series[d] = series[d] - f.c * series[d - 1];
    }
  }
  return series[k];
}

template <class R>
int net_degree(const std::vector<SetFactor<R>>& fs) {
  int d = 0;
  for (const auto& f : fs) d += f.power;
  return d;
}

// [t^k] in the expansion in t^{-1}; k <= net degree
template <class R>
R descending_coeff(const std::vector<SetFactor<R>>& fs, int k) {
  std::vector<SetFactor<R>> inv;
  R lead = ring<R>::one();
  for (const auto& f : fs) {
    R ci = ring<R>::inverse(f.c);
    inv.push_back({ci, f.power});
    lead = lead * (f.power > 0 ? f.c : ci);
  }
  return lead * ascending_coeff(inv, net_degree(fs) - k);
}

template <class R>
R generating_coeff(const std::vector<SetFactor<R>>& fs, int k) {
  if (k >= 0) return ascending_coeff(fs, k);
  if (k <= net_degree(fs)) return descending_coeff(fs, k);
  return ring<R>::zero();
}

}  // namespace detail

template <class R>
R elementary(const std::vector<SetFactor<R>>& set, int k) {
  return detail::generating_coeff(set, k);
}

template <class R>
R complete(const std::vector<SetFactor<R>>& set, int k) {
  std::vector<SetFactor<R>> flipped;
  for (const auto& f : set) flipped.push_back({ring<R>::zero() - f.c, -f.power});
  return detail::generating_coeff(flipped, k);
}

// e_k(<a_1|a_n>) and h_k(<a_1|a_n>)
ALaurent e_sym(int n, int k);
ALaurent h_sym(int n, int k);

// w(s,t) = a_{s+t}/a_{s+t-1} and w(s,t) = a_{t+1}/a_t
const Specialization<ALaurent>& e_weights();
const Specialization<ALaurent>& h_weights();

struct CheckRecord {
  std::string name;
  std::vector<int> instance;
  std::string lhs;
  std::string rhs;
  bool pass = false;
  double residual = 0.0;  // numeric suites only
};

// Dualities, both e- and h-convolutions, the e/h orthogonality and both bridges
// for n, m in [lo, hi].
std::vector<CheckRecord> sym_identity_suite(int lo, int hi);

}  // namespace wb
