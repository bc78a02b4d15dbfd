// Runs the eleven acceptance criteria and prints one PASS/FAIL line each.
#include "wbinom/elliptic.hpp"
#include "wbinom/qbinom.hpp"
#include "wbinom/stirling.hpp"
#include "wbinom/suites.hpp"
#include "wbinom/wbinom.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <set>
#include <string>

using namespace wb;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;
};

// all records pass; names that must be present
Outcome all_pass(const std::vector<SuiteRecord>& recs, const std::set<std::string>& required = {}) {
  Outcome o;
  std::map<std::string, int> seen;
  std::size_t failed = 0;
  for (const auto& r : recs) {
    ++seen[r.name];
    if (!r.pass) {
      if (failed == 0) o.note = "first failure " + instance_key(r);
      ++failed;
    }
  }
  for (const auto& name : required)
    if (!seen.count(name)) {
      o.pass = false;
      o.note += " missing check " + name;
    }
  o.pass = o.pass && failed == 0 && !recs.empty();
  o.note = std::to_string(recs.size() - failed) + "/" + std::to_string(recs.size()) + " instances" +
           (o.note.empty() ? "" : "; " + o.note);
  return o;
}

SuiteConfig cfg(std::string suite) {
  SuiteConfig c;
  c.suite = std::move(suite);
  return c;
}

Outcome merge(std::initializer_list<Outcome> parts) {
  Outcome o;
  o.note.clear();
  for (const auto& p : parts) {
    o.pass = o.pass && p.pass;
    o.note += (o.note.empty() ? "" : " | ") + p.note;
  }
  return o;
}

Outcome criterion1() {
  auto c = cfg("pascal");
  c.n = c.k = IntRange{-6, 6};
  return all_pass(run_suite(c), {"pascal", "zero_pattern"});
}

Outcome criterion2() {
  auto c = cfg("hlp");
  c.n = c.k = IntRange{-6, 6};
  return all_pass(run_suite(c), {"path_sum", "area_weight"});
}

Outcome criterion3() {
  auto c = cfg("regions");
  c.n = c.k = IntRange{-6, 6};
  std::vector<SuiteRecord> rows;
  for (auto& r : run_suite(c))
    if (r.name == "minus_one_row") rows.push_back(r);
  return all_pass(rows, {"minus_one_row"});
}

Outcome criterion4() {
  auto c = cfg("reflections");
  c.n = c.k = IntRange{-5, 5};
  return all_pass(run_suite(c), {"reflect_hat", "reflect_tilde", "reflect_breve"});
}

Outcome criterion5() {
  auto c = cfg("binomial-theorem");
  c.n = IntRange{-4, 4};
  c.span = 6;
  return all_pass(run_suite(c), {"expand_first", "expand_second"});
}

Outcome criterion6() {
  auto c1 = cfg("conv1");
  c1.n = c1.m = IntRange{-4, 4};
  c1.k = IntRange{0, 6};
  auto c2 = cfg("conv2");
  c2.n = c2.m = IntRange{-4, 4};
  c2.span = 6;
  auto ci = cfg("involution");
  ci.n = ci.m = IntRange{-4, 4};
  ci.k = IntRange{0, 6};
  return merge({all_pass(run_suite(c1), {"conv1"}), all_pass(run_suite(c2), {"conv2"}),
                all_pass(run_suite(ci), {"iota_square", "iota_sign_reversing", "fixed_point_weight",
                                         "fixed_point_sum", "pair_sum"})});
}

Outcome criterion7() {
  auto c = cfg("inversion");
  c.window = IntRange{-3, 3};
  return all_pass(run_suite(c));  // default m set {-2, 0, 2}
}

Outcome criterion8() {
  auto c = cfg("qbinom");
  c.n = c.k = IntRange{-5, 5};
  return all_pass(run_suite(c), {"q_oracle", "q_example"});
}

Outcome criterion9() {
  auto c = cfg("symfun");
  c.n = IntRange{-4, 4};
  return all_pass(run_suite(c), {"sym_dual_eh", "sym_dual_e", "sym_dual_h", "bridge_e", "bridge_h", "econv1",
                                 "econv2", "hconv1", "hconv2", "eh_orthogonal"});
}

Outcome criterion10() {
  auto c = cfg("stirling");
  c.n = IntRange{-4, 4};
  c.alpha = IntRange{-2, 2};
  return all_pass(run_suite(c), {"stirling_example", "stirling_dual", "stirling_dual_classical",
                                 "stirling1_rec", "stirling2_rec"});
}

Outcome criterion11() {
  const std::map<std::string, double> thresholds{
      {"theta_inversion", 1e-10}, {"ell_recursion", 1e-9},   {"ell_refl_hat", 1e-8},
      {"ell_refl_tilde", 1e-8},   {"ell_refl_breve", 1e-8},  {"ell_conv1", 1e-8},
      {"ell_conv2", 1e-8},        {"ft_10v9", 1e-8},         {"ell_periodic_a", 1e-9},
      {"ell_periodic_b", 1e-9}};
  std::mt19937_64 rng(2025);
  std::map<std::string, double> worst;
  std::size_t checked = 0;
  bool ok = true;
  std::string note;
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi), rad(0.5, 2.0);
  for (int sample = 0; sample < 3; ++sample) {
    auto P = sample_params(rng);
    double pm = std::abs(P.p);
    if (pm < 0.05 || pm > 0.2) ok = false;
    for (const auto& r : ell_identity_suite(P, -3, 4)) {
      auto it = thresholds.find(r.name);
      if (it == thresholds.end()) continue;
      if (r.name == "ft_10v9" && (r.instance[0] < 0 || r.instance[0] > 4)) continue;
      ++checked;
      worst[r.name] = std::max(worst[r.name], r.residual);
      if (!(r.residual < it->second)) ok = false;
    }
    // absolute inversion residual on extra points with this p
    for (int i = 0; i < 100; ++i) {
      cplx x = std::polar(rad(rng), angle(rng));
      double res = std::abs(theta(x, P.p, P.J) + x * theta(1.0 / x, P.p, P.J));
      worst["theta_inversion"] = std::max(worst["theta_inversion"], res);
      ++checked;
      if (!(res < 1e-10)) ok = false;
    }
  }
  for (const auto& [name, th] : thresholds)
    if (!worst.count(name)) ok = false, note += " missing " + name;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%zu checks; worst", checked);
  note = buf + note;
  for (const auto& [name, v] : worst) {
    std::snprintf(buf, sizeof buf, " %s=%.1e", name.c_str(), v);
    note += buf;
  }
  return {ok, note};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double limit_s;  // 0: no limit
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "Pascal recursion and zero regions on [-6,6]^2", 10, criterion1},
      {2, "path sums equal coefficients, |n|,|k| <= 6", 30, criterion2},
      {3, "n = -1 row closed form, k in [-6,6]", 0, criterion3},
      {4, "reflection formulas on [-5,5]^2", 0, criterion4},
      {5, "binomial theorem coefficient extraction, n in [-4,4], K = 6", 0, criterion5},
      {6, "convolutions and the involution on n,m in [-4,4]", 0, criterion6},
      {7, "matrix inversion, m in {-2,0,2}, n,l in [-3,3]", 0, criterion7},
      {8, "q-specialization against the q-recursion on [-5,5]^2", 0, criterion8},
      {9, "symmetric function dualities, bridges, convolutions, n in [-4,4]", 0, criterion9},
      {10, "Stirling examples, dualities, formula vs recurrence", 0, criterion10},
      {11, "elliptic numeric checks at 3 generic samples", 60, criterion11},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    clear_binom_cache();
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0 && secs >= c.limit_s) {
      o.pass = false;
      o.note += "; over time limit";
    }
    failures += !o.pass;
    std::printf("%s  %2d  %s  (%.2fs)  %s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, secs, o.note.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
