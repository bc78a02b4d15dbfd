#pragma once

#include "wbinom/symmetric.hpp"
#include "wbinom/weight_algebra.hpp"

#include <vector>

namespace wb {

enum class StirlingKind { first, second };

struct StirlingKey {
  int n = 0;
  int k = 0;
  int alpha = 0;
  StirlingKind kind = StirlingKind::first;
};

// s: e_{n-k}(<-_w[alpha] | -_w[alpha+n-1]>), S: h_{n-k}(<_w[alpha] | _w[alpha+k]>); zero for k > n
WeightPolynomial stirling_formula(const StirlingKey& key);
// The alpha-shifted recurrences, run backwards for k <= n < 0.
WeightPolynomial stirling_recurrence(const StirlingKey& key);
inline WeightPolynomial stirling_w(const StirlingKey& key) { return stirling_formula(key); }

// Signed classical numbers (all weights 1).
bigint stirling_classical(const StirlingKey& key);

// Formula vs recurrence and both dualities for n, k in [lo, hi]; the four
// convolutions for n, m in [-conv_span, conv_span].
std::vector<CheckRecord> stirling_suite(int lo, int hi, int alpha_lo, int alpha_hi, int conv_span);

}  // namespace wb
