#include "wbinom/suites.hpp"

#include "wbinom/identities.hpp"
#include "wbinom/noncomm.hpp"
#include "wbinom/paths.hpp"
#include "wbinom/qbinom.hpp"
#include "wbinom/stirling.hpp"
#include "wbinom/symmetric.hpp"
#include "wbinom/wbinom.hpp"

#include <algorithm>
#include <charconv>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

namespace wb {

IntRange parse_range(std::string_view text) {
  auto number = [&](std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
      throw std::invalid_argument("bad range '" + std::string(text) + "'");
    return v;
  };
  auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    int v = number(text);
    return {v, v};
  }
  IntRange r{number(text.substr(0, dots)), number(text.substr(dots + 2))};
  if (r.lo > r.hi) throw std::invalid_argument("empty range '" + std::string(text) + "'");
  return r;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"pascal",  "regions",   "reflections", "hlp",
                                              "binomial-theorem", "conv1", "conv2", "involution",
                                              "inversion", "qbinom", "symfun", "stirling", "elliptic"};
  return names;
}

namespace {

class Collector {
 public:
  Collector(std::string suite, std::vector<SuiteRecord>& out) : suite_(std::move(suite)), out_(out) {}

  void exact(std::string name, std::vector<int> inst, const WeightPolynomial& l, const WeightPolynomial& r) {
    bool ok = l == r;
    out_.push_back({suite_, std::move(name), std::move(inst), ok, ok ? 0.0 : 1.0,
                    ok ? "" : to_string(l), ok ? "" : to_string(r)});
  }

  void flag(std::string name, std::vector<int> inst, bool ok, std::string detail = {}) {
    out_.push_back({suite_, std::move(name), std::move(inst), ok, ok ? 0.0 : 1.0, ok ? "" : detail, ""});
  }

  void check(const CheckRecord& c, std::vector<int> prefix = {}) {
    prefix.insert(prefix.end(), c.instance.begin(), c.instance.end());
    bool keep = !c.pass || c.residual != 0.0;
    out_.push_back({suite_, c.name, std::move(prefix), c.pass, c.residual, keep ? c.lhs : "", keep ? c.rhs : ""});
  }

 private:
  std::string suite_;
  std::vector<SuiteRecord>& out_;
};

template <class F>
void grid(IntRange a, IntRange b, F f) {
  for (int i = a.lo; i <= a.hi; ++i)
    for (int j = b.lo; j <= b.hi; ++j) f(i, j);
}

void pascal(const SuiteConfig& c, Collector& out) {
  grid(c.n.value_or(IntRange{-6, 6}), c.k.value_or(IntRange{-6, 6}), [&](int n, int k) {
    out.flag("zero_pattern", {n, k}, wbinom(n, k).is_zero() == is_zero_region(n, k), to_string(wbinom(n, k)));
    if (n + 1 == 0 && k == 0) return;
    out.exact("pascal", {n, k}, wbinom(n + 1, k), wbinom(n, k) + wbinom(n, k - 1) * big_weight(k, n + 1 - k));
  });
}

void regions(const SuiteConfig& c, Collector& out) {
  grid(c.n.value_or(IntRange{-6, 6}), c.k.value_or(IntRange{-6, 6}), [&](int n, int k) {
    out.exact("region_reduction", {n, k}, wbinom_regions(n, k), wbinom(n, k));
  });
  auto kr = c.k.value_or(IntRange{-6, 6});
  for (int k = kr.lo; k <= kr.hi; ++k) {
    auto prod = range_product<WeightMonomial>(1, k, [](long j) {
      return big_weight(static_cast<int>(j), static_cast<int>(-j));
    });
    out.exact("minus_one_row", {k}, wbinom(-1, k), WeightPolynomial(prod, neg_one_pow(k) * sgn(k)));
  }
}

void reflections(const SuiteConfig& c, Collector& out) {
  grid(c.n.value_or(IntRange{-5, 5}), c.k.value_or(IntRange{-5, 5}), [&](int n, int k) {
    auto v = wbinom(n, k);
    out.exact("reflect_hat", {n, k}, v, reflect_hat_rhs(n, k));
    out.exact("reflect_tilde", {n, k}, v, reflect_tilde_rhs(n, k));
    out.exact("reflect_breve", {n, k}, v, reflect_breve_rhs(n, k));
  });
}

void hlp(const SuiteConfig& c, Collector& out) {
  grid(c.n.value_or(IntRange{-6, 6}), c.k.value_or(IntRange{-6, 6}), [&](int n, int k) {
    WeightPolynomial sum;
    bool area_ok = true;
    for (const auto& p : enumerate_paths(k, n - k)) {
      auto sw = path_weight_steps(p);
      area_ok = area_ok && sw == path_weight_area(p);
      sum.add_term(sw.mono, sw.sign);
    }
    out.flag("area_weight", {n, k}, area_ok, "step and area weights differ");
    out.exact("path_sum", {n, k}, sum, wbinom(n, k));
  });
}

void binomial_theorem(const SuiteConfig& c, Collector& out) {
  auto nr = c.n.value_or(IntRange{-4, 4});
  int K = c.span.value_or(6);
  for (int n = nr.lo; n <= nr.hi; ++n) {
    auto first = expand_pow(n, K);
    for (int k = 0; k <= K; ++k) out.exact("expand_first", {n, k}, first.at(k), wbinom(n, k));
    auto second = expand_second(n, K);
    for (int k = n - K; k <= n; ++k) out.exact("expand_second", {n, k}, second.at(k), wbinom(n, k));
  }
}

void conv(const SuiteConfig& c, Collector& out, bool second) {
  auto nr = c.n.value_or(IntRange{-4, 4}), mr = c.m.value_or(IntRange{-4, 4});
  grid(nr, mr, [&](int n, int m) {
    IntRange kr = second ? IntRange{n + m - c.span.value_or(6), n + m} : c.k.value_or(IntRange{0, 6});
    for (int k = kr.lo; k <= kr.hi; ++k) {
      if (!second && k < 0) continue;
      if (second && k > n + m && k >= 0) continue;
      auto r = second ? conv2(n, m, k) : conv1(n, m, k);
      out.exact(r.name, r.instance, r.lhs, r.rhs);
    }
  });
}

void involution(const SuiteConfig& c, Collector& out) {
  auto nr = c.n.value_or(IntRange{-4, 4}), mr = c.m.value_or(IntRange{-4, 4});
  auto kr = c.k.value_or(IntRange{0, 6});
  grid(nr, mr, [&](int n, int m) {
    if (!(m < 0 && 0 <= n)) return;
    for (int k = std::max(kr.lo, 0); k <= kr.hi; ++k) {
      WeightPolynomial all, fixed;
      bool square = true, reverse = true, merged = true;
      for (const auto& pp : enumerate_pairs(n, m, k)) {
        auto sw = pair_weight(pp);
        all.add_term(sw.mono, sw.sign);
        auto img = iota(pp);
        square = square && iota(img) == pp;
        if (is_fixed_point(pp)) {
          fixed.add_term(sw.mono, sw.sign);
          merged = merged && img == pp && path_weight_area(merge_pair(pp)) == sw;
        } else {
          auto iw = pair_weight(img);
          reverse = reverse && img != pp && iw.mono == sw.mono && iw.sign == -sw.sign;
        }
      }
      out.flag("iota_square", {n, m, k}, square);
      out.flag("iota_sign_reversing", {n, m, k}, reverse);
      out.flag("fixed_point_weight", {n, m, k}, merged);
      out.exact("fixed_point_sum", {n, m, k}, fixed, wbinom(n + m, k));
      out.exact("pair_sum", {n, m, k}, all, fixed);
    }
  });
}

void inversion(const SuiteConfig& c, Collector& out) {
  std::vector<int> ms{-2, 0, 2};
  if (c.m) {
    ms.clear();
    for (int m = c.m->lo; m <= c.m->hi; ++m) ms.push_back(m);
  }
  auto win = c.window.value_or(IntRange{-3, 3});
  for (int m : ms)
    for (const auto& r : inversion_check(m, win.lo, win.hi)) out.exact(r.name, r.instance, r.lhs, r.rhs);
}

void qbinom(const SuiteConfig& c, Collector& out) {
  grid(c.n.value_or(IntRange{-5, 5}), c.k.value_or(IntRange{-5, 5}), [&](int n, int k) {
    auto l = substitute(wbinom(n, k), q_specialization());
    auto r = qbinom_oracle(n, k);
    out.flag("q_oracle", {n, k}, l == r, to_string(l) + " vs " + to_string(r));
  });
  auto r = qbinom_oracle(-1, 2);
  out.flag("q_example", {-1, 2}, r == qpow(-3), to_string(r));
  r = qbinom_oracle(4, 2);
  out.flag("q_example", {4, 2}, r == qpow(0) + qpow(1) + qpow(2, 2) + qpow(3) + qpow(4), to_string(r));
}

void symfun(const SuiteConfig& c, Collector& out) {
  auto nr = c.n.value_or(IntRange{-4, 4});
  for (const auto& r : sym_identity_suite(nr.lo, nr.hi)) out.check(r);
}

void stirling(const SuiteConfig& c, Collector& out) {
  auto nr = c.n.value_or(IntRange{-4, 4});
  auto ar = c.alpha.value_or(IntRange{-2, 2});
  bigint s42 = stirling_classical({4, 2, 0, StirlingKind::first});
  bigint S42 = stirling_classical({4, 2, 0, StirlingKind::second});
  out.flag("stirling_example", {4, 2, 1}, s42 == 11, s42.str());
  out.flag("stirling_example", {4, 2, 2}, S42 == 7, S42.str());
  for (const auto& r : stirling_suite(nr.lo, nr.hi, ar.lo, ar.hi, c.span.value_or(2))) out.check(r);
}

void elliptic(const SuiteConfig& c, Collector& out) {
  auto nr = c.n.value_or(IntRange{-3, 4});
  std::vector<EllipticParams> params;
  if (c.params) {
    auto P = *c.params;
    P.tolerance = c.tolerance;
    P.J = theta_truncation(P.p, c.tolerance);
    params.push_back(P);
  } else {
    std::mt19937_64 rng(c.seed.value_or(1));
    for (int i = 0; i < c.samples; ++i) params.push_back(sample_params(rng, c.tolerance));
  }
  for (std::size_t i = 0; i < params.size(); ++i)
    for (const auto& r : ell_identity_suite(params[i], nr.lo, nr.hi)) out.check(r, {static_cast<int>(i)});
}

}  // namespace

std::vector<SuiteRecord> run_suite(const SuiteConfig& cfg) {
  if (!(cfg.tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
  std::vector<SuiteRecord> out;
  auto run_one = [&](const std::string& name) {
    Collector col(name, out);
    if (name == "pascal") pascal(cfg, col);
    else if (name == "regions") regions(cfg, col);
    else if (name == "reflections") reflections(cfg, col);
    else if (name == "hlp") hlp(cfg, col);
    else if (name == "binomial-theorem") binomial_theorem(cfg, col);
    else if (name == "conv1") conv(cfg, col, false);
    else if (name == "conv2") conv(cfg, col, true);
    else if (name == "involution") involution(cfg, col);
    else if (name == "inversion") inversion(cfg, col);
    else if (name == "qbinom") qbinom(cfg, col);
    else if (name == "symfun") symfun(cfg, col);
    else if (name == "stirling") stirling(cfg, col);
    else if (name == "elliptic") elliptic(cfg, col);
    else throw std::invalid_argument("unknown suite '" + name + "'");
  };
  if (cfg.suite == "all") {
    for (const auto& s : suite_names()) run_one(s);
  } else {
    run_one(cfg.suite);
  }
  std::stable_sort(out.begin(), out.end(), [](const SuiteRecord& a, const SuiteRecord& b) {
    return std::tie(a.suite, a.name, a.instance) < std::tie(b.suite, b.name, b.instance);
  });
  return out;
}

std::string instance_key(const SuiteRecord& r) {
  std::ostringstream os;
  os << r.name << "(";
  for (std::size_t i = 0; i < r.instance.size(); ++i) os << (i ? "," : "") << r.instance[i];
  os << ")";
  return os.str();
}

std::string report_json(const std::vector<SuiteRecord>& records) {
  nlohmann::json rows = nlohmann::json::array();
  std::size_t failed = 0;
  for (const auto& r : records) {
    nlohmann::json row{{"suite", r.suite}, {"check", r.name}, {"instance", r.instance},
                       {"pass", r.pass},   {"residual", r.residual}};
    if (!r.lhs.empty()) row["lhs"] = r.lhs;
    if (!r.rhs.empty()) row["rhs"] = r.rhs;
    rows.push_back(std::move(row));
    failed += !r.pass;
  }
  nlohmann::json doc{{"total", records.size()}, {"failed", failed}, {"records", std::move(rows)}};
  return doc.dump(1);
}

std::string report_csv(const std::vector<SuiteRecord>& records) {
  std::ostringstream os;
  os.precision(6);
  os << "suite,instance,pass,residual\n";
  for (const auto& r : records)
    os << r.suite << ",\"" << instance_key(r) << "\"," << (r.pass ? "true" : "false") << "," << r.residual << "\n";
  return os.str();
}

}  // namespace wb
