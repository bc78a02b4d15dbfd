#include "wbinom/symmetric.hpp"

#include "wbinom/wbinom.hpp"

#include <sstream>

namespace wb {

std::string to_string(const ALaurent& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    bigint mag = c < 0 ? bigint(-c) : c;
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    if (m.is_one()) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    bool inner = true;
    for (const auto& [i, e] : m.factors()) {
      if (!inner) os << '*';
      inner = false;
      os << "a_" << i;
      if (e != 1) os << '^' << e;
    }
  }
  return os.str();
}

namespace {

std::vector<SetFactor<ALaurent>> a_set(long l, long m, int sign = 1, int exp = 1) {
  return new_set<ALaurent>(l, m, [=](long i) { return ALaurent(sign) * a(static_cast<int>(i), exp); });
}

ALaurent a_product(long l, long m, int exp = 1) {
  return range_product<ALaurent>(l, m, [=](long i) { return a(static_cast<int>(i), exp); });
}

CheckRecord record(std::string name, std::vector<int> inst, const ALaurent& lhs, const ALaurent& rhs) {
  return {std::move(name), std::move(inst), to_string(lhs), to_string(rhs), lhs == rhs, 0.0};
}

}  // namespace

ALaurent e_sym(int n, int k) { return elementary(a_set(1, n), k); }
ALaurent h_sym(int n, int k) { return complete(a_set(1, n), k); }

const Specialization<ALaurent>& e_weights() {
  static const Specialization<ALaurent> spec{
      "elementary", [](WeightIndex i) { return a(i.s + i.t) * a(i.s + i.t - 1, -1); }};
  return spec;
}

const Specialization<ALaurent>& h_weights() {
  static const Specialization<ALaurent> spec{
      "complete", [](WeightIndex i) { return a(i.t + 1) * a(i.t, -1); }};
  return spec;
}

std::vector<CheckRecord> sym_identity_suite(int lo, int hi) {
  std::vector<CheckRecord> out;
  const int span = std::max(std::abs(lo), std::abs(hi));
  const int kmax = 2 * span;

  for (int n = lo; n <= hi; ++n)
    for (int k = -kmax; k <= kmax; ++k) {
      out.push_back(record("sym_dual_eh", {n, k}, e_sym(n, k), complete(a_set(n + 1, 0, -1), k)));
      out.push_back(record("sym_dual_e", {n, k}, e_sym(n, k),
                           elementary(a_set(1, n, 1, -1), n - k) * a_product(1, n)));
      out.push_back(record("sym_dual_h", {n, k}, h_sym(n, k),
                           complete(a_set(1, n, 1, -1), -n - k) * ALaurent(neg_one_pow(n)) *
                               a_product(1, n, -1)));
    }

  for (int n = lo; n <= hi; ++n)
    for (int k = lo; k <= hi; ++k) {
      out.push_back(record("bridge_e", {n, k}, substitute(wbinom(n, k), e_weights()),
                           e_sym(n, k) * a_product(1, k, -1)));
      out.push_back(record("bridge_h", {n, k}, substitute(wbinom(n, k), h_weights()),
                           ALaurent(sgn(k)) * h_sym(n - k + 1, k) * a(1, -k)));
    }

  auto h_between = [](long l, long m, int k) { return complete(a_set(l, m), k); };
  for (int n = lo; n <= hi; ++n)
    for (int m = lo; m <= hi; ++m) {
      for (int k = 0; k <= span + 2; ++k) {
        auto rhs = range_sum<ALaurent>(0, k, [&](long j) {
          return e_sym(n, j) * elementary(a_set(n + 1, n + m), k - static_cast<int>(j));
        });
        out.push_back(record("econv1", {n, m, k}, e_sym(n + m, k), rhs));
        auto hr = range_sum<ALaurent>(0, k, [&](long jl) {
          int j = static_cast<int>(jl);
          return h_between(1, n - j + 1, j) * h_between(n - j + 1, n + m - k + 1, k - j);
        });
        out.push_back(record("hconv1", {n, m, k}, h_sym(n + m - k + 1, k), hr));
        auto mixed = range_sum<ALaurent>(0, k, [&](long j) {
          return e_sym(n, j) * complete(a_set(n + m + 1, n, -1), k - static_cast<int>(j));
        });
        out.push_back(record("eh_mixed", {n, m, k}, e_sym(n + m, k), mixed));
      }
      for (int k = n + m - span - 2; k <= n + m; ++k) {
        auto rhs = range_sum<ALaurent>(k - m, n, [&](long j) {
          return e_sym(n, j) * elementary(a_set(n + 1, n + m), k - static_cast<int>(j));
        });
        out.push_back(record("econv2", {n, m, k}, e_sym(n + m, k), rhs));
        auto hr = range_sum<ALaurent>(k - m, n, [&](long jl) {
          int j = static_cast<int>(jl);
          return ALaurent(sgn(j) * sgn(k - j)) * h_between(1, n - j + 1, j) *
                 h_between(n - j + 1, n + m - k + 1, k - j);
        });
        out.push_back(record("hconv2", {n, m, k}, ALaurent(sgn(k)) * h_sym(n + m - k + 1, k), hr));
      }
    }

  for (int n = lo; n <= hi; ++n)
    for (int k = 0; k <= span + 2; ++k) {
      auto sum = range_sum<ALaurent>(0, k, [&](long j) {
        return ALaurent(neg_one_pow(j)) * e_sym(n, static_cast<int>(j)) * h_sym(n, k - static_cast<int>(j));
      });
      out.push_back(record("eh_orthogonal", {n, k}, sum, ALaurent(k == 0 ? 1 : 0)));
    }
  return out;
}

}  // namespace wb
