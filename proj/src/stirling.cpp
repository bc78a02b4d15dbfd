#include "wbinom/stirling.hpp"

#include "wbinom/wbinom.hpp"

#include <map>
#include <tuple>

namespace wb {

namespace {

using Key = std::tuple<int, int, int, int>;

Key key_of(const StirlingKey& s) { return {static_cast<int>(s.kind), s.alpha, s.n, s.k}; }

WeightPolynomial compute_formula(const StirlingKey& s) {
  if (s.k > s.n) return {};
  if (s.kind == StirlingKind::first) {
    auto set = new_set<WeightPolynomial>(s.alpha, s.alpha + s.n - 1,
                                         [](long i) { return -weighted_integer(static_cast<int>(i)); });
    return elementary(set, s.n - s.k);
  }
  auto set = new_set<WeightPolynomial>(s.alpha, s.alpha + s.k,
                                       [](long i) { return weighted_integer(static_cast<int>(i)); });
  return complete(set, s.n - s.k);
}

class Recurrence {
 public:
  const WeightPolynomial& get(StirlingKind kind, int alpha, int n, int k) {
    Key key{static_cast<int>(kind), alpha, n, k};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    auto v = compute(kind, alpha, n, k);
    return memo_.emplace(key, std::move(v)).first->second;
  }

 private:
  WeightPolynomial compute(StirlingKind kind, int alpha, int n, int k) {
    if (k > n) return {};
    if (k == n) return 1;
    if (k < 0 && n >= 0) return {};
    const bool first = kind == StirlingKind::first;
    if (n > 0) {
      if (first)
        return get(kind, alpha, n - 1, k - 1) - weighted_integer(alpha + n - 1) * get(kind, alpha, n - 1, k);
      return weighted_integer(alpha + k) * get(kind, alpha, n - 1, k) + get(kind, alpha, n - 1, k - 1);
    }
    // k < n < 0
    if (first)
      return get(kind, alpha, n + 1, k + 1) + weighted_integer(alpha + n) * get(kind, alpha, n, k + 1);
    return get(kind, alpha, n + 1, k + 1) - weighted_integer(alpha + k + 1) * get(kind, alpha, n, k + 1);
  }

  std::map<Key, WeightPolynomial> memo_;
};

CheckRecord record(std::string name, std::vector<int> inst, const WeightPolynomial& lhs,
                   const WeightPolynomial& rhs) {
  return {std::move(name), std::move(inst), to_string(lhs), to_string(rhs), lhs == rhs, 0.0};
}

}  // namespace

WeightPolynomial stirling_formula(const StirlingKey& key) {
  thread_local std::map<Key, WeightPolynomial> memo;
  auto k = key_of(key);
  if (auto it = memo.find(k); it != memo.end()) return it->second;
  return memo.emplace(k, compute_formula(key)).first->second;
}

WeightPolynomial stirling_recurrence(const StirlingKey& key) {
  thread_local Recurrence rec;
  return rec.get(key.kind, key.alpha, key.n, key.k);
}

bigint stirling_classical(const StirlingKey& key) {
  Specialization<bigint> one{"one", [](WeightIndex) { return bigint(1); }};
  return substitute(stirling_formula(key), one);
}

std::vector<CheckRecord> stirling_suite(int lo, int hi, int alpha_lo, int alpha_hi, int conv_span) {
  using K = StirlingKind;
  std::vector<CheckRecord> out;
  auto s = [](int n, int k, int alpha = 0) { return stirling_formula({n, k, alpha, K::first}); };
  auto S = [](int n, int k, int alpha = 0) { return stirling_formula({n, k, alpha, K::second}); };

  for (int alpha = alpha_lo; alpha <= alpha_hi; ++alpha)
    for (int n = lo; n <= hi; ++n)
      for (int k = lo; k <= n; ++k) {
        for (K kind : {K::first, K::second}) {
          StirlingKey key{n, k, alpha, kind};
          out.push_back(record(kind == K::first ? "stirling1_rec" : "stirling2_rec", {n, k, alpha},
                               stirling_formula(key), stirling_recurrence(key)));
        }
        out.push_back(record("stirling_dual", {n, k, alpha}, s(n, k, alpha), S(-k - 1, -n - 1, alpha + n)));
      }

  for (int n = lo; n <= hi; ++n)
    for (int k = lo; k <= n; ++k) {
      bigint lhs = stirling_classical({n, k, 0, K::first});
      bigint rhs = neg_one_pow(n - k) * stirling_classical({-k, -n, 0, K::second});
      out.push_back({"stirling_dual_classical", {n, k}, lhs.str(), rhs.str(), lhs == rhs, 0.0});
    }

  for (int n = -conv_span; n <= conv_span; ++n)
    for (int m = -conv_span; m <= conv_span; ++m) {
      auto second_term = [&](int k, long jl) {
        int j = static_cast<int>(jl);
        return S(n, n - j) * s(k - j - m - 1, -m - 1, n + m - k + 1);
      };
      auto first_term = [&](int k, long jl) {
        int j = static_cast<int>(jl);
        return s(n, n - j) * S(k - j - m - 1, -m - 1, n + m);
      };
      for (int k = 0; k <= 2 * conv_span; ++k) {
        out.push_back(record("stirling2_conv1", {n, m, k}, S(n + m, n + m - k),
                             range_sum<WeightPolynomial>(0, k, [&](long j) { return second_term(k, j); })));
        out.push_back(record("stirling1_conv1", {n, m, k}, s(n + m, n + m - k),
                             range_sum<WeightPolynomial>(0, k, [&](long j) { return first_term(k, j); })));
      }
      // mixed signs with k >= 0 would need s(n,k), S(n,k) for k > n, which are 0 by convention
      for (int k = n + m - 2 * conv_span; k <= n + m; ++k) {
        if (k >= 0 && (n >= 0) != (m >= 0)) continue;
        out.push_back(record("stirling2_conv2", {n, m, k}, S(n + m, n + m - k),
                             range_sum<WeightPolynomial>(k - m, n, [&](long j) { return second_term(k, j); })));
        out.push_back(record("stirling1_conv2", {n, m, k}, s(n + m, n + m - k),
                             range_sum<WeightPolynomial>(k - m, n, [&](long j) { return first_term(k, j); })));
      }
    }
  return out;
}

}  // namespace wb
