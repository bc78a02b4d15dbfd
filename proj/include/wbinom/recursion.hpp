#pragma once

#include "wbinom/ring.hpp"

#include <map>
#include <utility>

namespace wb {

// The six regions of the (n,k) plane.
enum class Region {
  forward = 1,         // 0 <= k <= n
  upper_negative = 2,  // n < 0 <= k
  lower_negative = 3,  // k <= n < 0
  zero_above = 4,      // 0 <= n < k
  zero_between = 5,    // n < k < 0
  zero_below = 6,      // k < 0 <= n
};

inline Region region_of(long n, long k) {
  if (0 <= k && k <= n) return Region::forward;
  if (n < 0 && 0 <= k) return Region::upper_negative;
  if (k <= n && n < 0) return Region::lower_negative;
  if (0 <= n && n < k) return Region::zero_above;
  if (n < k && k < 0) return Region::zero_between;
  return Region::zero_below;
}

inline bool is_zero_region(long n, long k) {
  auto r = region_of(n, k);
  return r == Region::zero_above || r == Region::zero_between || r == Region::zero_below;
}

// Weighted Pascal recursion over any ring, with W(s,t) supplied by the caller.
//   forward:        C(n,k) = C(n-1,k) + C(n-1,k-1) W(k,n-k)
//   upper_negative: C(n,k) = C(n+1,k) - C(n,k-1) W(k,n+1-k)
//   lower_negative: C(n,k) = (C(n+1,k+1) - C(n,k+1)) W(k+1,n-k)^{-1}
template <class R, class BigW>
class PascalRecursion {
 public:
  explicit PascalRecursion(BigW W) : W_(std::move(W)) {}

  const R& operator()(int n, int k) {
    auto key = std::pair{n, k};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    R v = compute(n, k);
    return memo_.emplace(key, std::move(v)).first->second;
  }

  std::size_t size() const { return memo_.size(); }
  void clear() { memo_.clear(); }

 private:
  R compute(int n, int k) {
    if (k == 0 || k == n) return ring<R>::one();
    switch (region_of(n, k)) {
      case Region::forward:
        return (*this)(n - 1, k) + (*this)(n - 1, k - 1) * W_(k, n - k);
      case Region::upper_negative:
        return (*this)(n + 1, k) - (*this)(n, k - 1) * W_(k, n + 1 - k);
      case Region::lower_negative: {
        R d = (*this)(n + 1, k + 1) - (*this)(n, k + 1);
        return d * ring<R>::inverse(W_(k + 1, n - k));
      }
      default:
        return ring<R>::zero();
    }
  }

  BigW W_;
  std::map<std::pair<int, int>, R> memo_;
};

}  // namespace wb
