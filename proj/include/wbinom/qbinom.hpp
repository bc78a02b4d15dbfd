#pragma once

#include "wbinom/weight_algebra.hpp"

#include <string>

namespace wb {

struct QVar {
  friend auto operator<=>(const QVar&, const QVar&) = default;
};

using QMonomial = SparseMonomial<QVar>;
using QLaurent = LaurentPoly<QMonomial>;

inline QMonomial qmono(int e) { return QMonomial::var({}, e); }
inline QLaurent qpow(int e, const bigint& c = 1) { return QLaurent(qmono(e), c); }

int q_exponent(const QMonomial& m);
bigint q_coeff(const QLaurent& p, int e);
std::string to_string(const QLaurent& p);

// w(s,t) -> q
const Specialization<QLaurent>& q_specialization();

// Memoized q-Pascal recursion, written separately from the generic engine.
QLaurent qbinom_oracle(int n, int k);

}  // namespace wb
