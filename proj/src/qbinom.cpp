#include "wbinom/qbinom.hpp"

#include <map>
#include <sstream>

namespace wb {

int q_exponent(const QMonomial& m) { return m.exponent(QVar{}); }

bigint q_coeff(const QLaurent& p, int e) {
  auto it = p.terms().find(qmono(e));
  return it == p.terms().end() ? bigint(0) : it->second;
}

std::string to_string(const QLaurent& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    int e = q_exponent(m);
    bigint mag = c < 0 ? bigint(-c) : c;
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << 'q';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

const Specialization<QLaurent>& q_specialization() {
  static const Specialization<QLaurent> spec{"q", [](WeightIndex) { return qpow(1); }};
  return spec;
}

namespace {

class QOracle {
 public:
  const QLaurent& get(int n, int k) {
    auto key = std::pair{n, k};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    QLaurent v = compute(n, k);
    return memo_.emplace(key, std::move(v)).first->second;
  }

 private:
  // [n+1,k] = [n,k] + [n,k-1] q^{n+1-k}, solved for whichever term is unknown
  QLaurent compute(int n, int k) {
    if (k == 0 || k == n) return 1;
    if (n >= 0) {
      if (k < 0 || k > n) return 0;
      return get(n - 1, k) + get(n - 1, k - 1) * qmono(n - k);
    }
    if (k > 0) return get(n + 1, k) - get(n, k - 1) * qmono(n + 1 - k);
    if (k < n) return (get(n + 1, k + 1) - get(n, k + 1)) * qmono(k - n);
    return 0;
  }

  std::map<std::pair<int, int>, QLaurent> memo_;
};

}  // namespace

QLaurent qbinom_oracle(int n, int k) {
  thread_local QOracle oracle;
  return oracle.get(n, k);
}

}  // namespace wb
