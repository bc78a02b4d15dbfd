// wbinom-cli: eval, paths, check, parse
#include "wbinom.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

struct api_error : std::runtime_error {
  wb_status status;
  api_error(wb_status s, const std::string& what) : std::runtime_error(what), status(s) {}
};

void ok(wb_status s, const char* what) {
  if (s != WB_OK) throw api_error(s, std::string(what) + ": " + wb_status_name(s) + ": " + wb_last_error());
}

std::string take(char* s) {
  std::string out = s ? s : "";
  wb_string_free(s);
  return out;
}

using Poly = std::unique_ptr<wb_poly, decltype(&wb_poly_free)>;
using PathSet = std::unique_ptr<wb_path_set, decltype(&wb_path_set_free)>;
using Report = std::unique_ptr<wb_report, decltype(&wb_report_free)>;

fs::path out_dir(const std::string& given) {
  if (!given.empty()) return given;
  if (const char* env = std::getenv("WBINOM_OUT_DIR"); env && *env) return env;
  return "wbinom-out";
}

std::string format_complex(wb_complex z) {
  std::ostringstream os;
  os.precision(15);
  os << z.re << (z.im < 0 ? " - " : " + ") << std::abs(z.im) << "i";
  return os.str();
}

struct EllipticFlags {
  std::vector<double> a, b, q, p;
  std::optional<std::uint64_t> seed;
  double tol = 1e-9;

  void add(CLI::App* app) {
    app->add_option("--a", a, "elliptic a as RE IM")->expected(2);
    app->add_option("--b", b, "elliptic b as RE IM")->expected(2);
    app->add_option("--q", q, "elliptic q as RE IM")->expected(2);
    app->add_option("--p", p, "elliptic nome p as RE IM")->expected(2);
    app->add_option("--seed", seed, "seed for the generic parameter sampler");
    app->add_option("--tol", tol, "tolerance")->check(CLI::PositiveNumber);
  }

  bool explicit_params() const { return !a.empty() || !b.empty() || !q.empty() || !p.empty(); }

  void require_complete() const {
    if (explicit_params() && (a.empty() || b.empty() || q.empty() || p.empty()))
      throw CLI::ValidationError("elliptic parameters need all of --a --b --q --p");
    if (explicit_params() && seed) throw CLI::ValidationError("give either --seed or explicit parameters");
  }

  wb_elliptic resolve() const {
    require_complete();
    wb_elliptic e{};
    if (explicit_params()) {
      e = {{a[0], a[1]}, {b[0], b[1]}, {q[0], q[1]}, {p[0], p[1]}, tol};
    } else {
      ok(wb_elliptic_sample(seed.value_or(1), tol, &e), "sample");
    }
    return e;
  }
};

json complex_json(wb_complex z) { return json::array({z.re, z.im}); }

int cmd_eval(int n, int k, const std::string& spec, const std::string& format, const EllipticFlags& ef) {
  wb_poly* raw = nullptr;
  ok(wb_binom(n, k, &raw), "wbinom");
  Poly poly(raw, wb_poly_free);
  json doc{{"n", n}, {"k", k}, {"spec", spec}};
  std::string text;
  if (spec == "formal") {
    char* s = nullptr;
    ok(wb_poly_to_json(poly.get(), &s), "to_json");
    doc["value"] = json::parse(take(s));
    ok(wb_poly_to_text(poly.get(), &s), "to_text");
    text = take(s);
  } else if (spec == "elliptic") {
    auto e = ef.resolve();
    wb_complex closed{}, subst{};
    ok(wb_ell_binom(n, k, &e, &closed), "ell_binom");
    ok(wb_poly_eval_elliptic(poly.get(), &e, &subst), "substitute");
    doc["value"] = complex_json(closed);
    doc["substituted"] = complex_json(subst);
    doc["params"] = {{"a", complex_json(e.a)}, {"b", complex_json(e.b)}, {"q", complex_json(e.q)},
                     {"p", complex_json(e.p)}};
    text = format_complex(closed);
  } else {
    char* s = nullptr;
    ok(wb_poly_specialize(poly.get(), spec.c_str(), &s), "specialize");
    text = take(s);
    doc["value"] = text;
  }
  doc["text"] = text;
  if (format == "text") std::cout << text << "\n";
  else std::cout << doc.dump() << "\n";
  return 0;
}

int cmd_paths(int k, int m, const std::string& format, bool render, const std::string& dir, bool combined) {
  wb_path_set* raw = nullptr;
  ok(wb_paths(k, m, &raw), "paths");
  PathSet set(raw, wb_path_set_free);
  size_t count = wb_path_set_size(set.get());
  if (format == "json") {
    char* s = nullptr;
    ok(wb_path_set_json(set.get(), &s), "paths json");
    std::cout << json{{"k", k}, {"m", m}, {"count", count}, {"paths", json::parse(take(s))}}.dump() << "\n";
  } else {
    for (size_t i = 0; i < count; ++i) {
      char* s = nullptr;
      ok(wb_path_steps(set.get(), i, &s), "steps");
      std::string steps = take(s);
      wb_poly* w = nullptr;
      ok(wb_path_weight(set.get(), i, &w), "weight");
      Poly weight(w, wb_poly_free);
      ok(wb_poly_to_text(weight.get(), &s), "weight text");
      std::cout << (steps.empty() ? "(empty)" : steps) << "\t" << take(s) << "\n";
    }
    std::cout << count << (count == 1 ? " path" : " paths") << "\n";
  }
  if (render) {
    fs::path d = out_dir(dir);
    fs::create_directories(d);
    auto write = [](const fs::path& file, const std::string& body) {
      std::ofstream os(file);
      if (!os) throw std::runtime_error("cannot write " + file.string());
      os << body;
    };
    std::string stem = "paths_k" + std::to_string(k) + "_m" + std::to_string(m);
    if (combined) {
      char* s = nullptr;
      ok(wb_path_set_svg(set.get(), 4, &s), "svg");
      write(d / (stem + ".svg"), take(s));
    } else {
      for (size_t i = 0; i < count; ++i) {
        char* s = nullptr;
        ok(wb_path_svg(set.get(), i, &s), "svg");
        write(d / (stem + "_" + std::to_string(i) + ".svg"), take(s));
      }
    }
    std::cerr << "wrote " << (combined ? 1 : count) << " svg file(s) to " << d.string() << "\n";
  }
  return 0;
}

struct CheckFlags {
  std::string suite;
  std::string n, m, k, window, alpha;
  std::optional<int> span, samples;
  std::string format = "json";
  std::string out;
  EllipticFlags ell;
};

int cmd_check(const CheckFlags& f) {
  json cfg{{"suite", f.suite}, {"tolerance", f.ell.tol}};
  auto range = [&](const char* key, const std::string& v) {
    if (!v.empty()) cfg[key] = v;
  };
  range("n", f.n);
  range("m", f.m);
  range("k", f.k);
  range("window", f.window);
  range("alpha", f.alpha);
  if (f.span) cfg["span"] = *f.span;
  if (f.samples) cfg["samples"] = *f.samples;
  f.ell.require_complete();
  if (f.ell.seed) cfg["seed"] = *f.ell.seed;
  if (f.ell.explicit_params()) {
    auto pair = [](const std::vector<double>& v) { return json::array({v[0], v[1]}); };
    cfg["params"] = {{"a", pair(f.ell.a)}, {"b", pair(f.ell.b)}, {"q", pair(f.ell.q)}, {"p", pair(f.ell.p)}};
  }

  wb_report* raw = nullptr;
  ok(wb_check(cfg.dump().c_str(), &raw), "check");
  Report report(raw, wb_report_free);
  size_t total = wb_report_size(report.get()), failed = wb_report_failures(report.get());

  std::string body;
  if (f.format == "csv") {
    char* s = nullptr;
    ok(wb_report_to_csv(report.get(), &s), "csv");
    body = take(s);
  } else if (f.format == "json") {
    char* s = nullptr;
    ok(wb_report_to_json(report.get(), &s), "json");
    body = take(s) + "\n";
  }
  if (!f.out.empty()) {
    fs::path file = f.out;
    if (file.is_relative() && std::getenv("WBINOM_OUT_DIR")) file = out_dir("") / file;
    if (file.has_parent_path()) fs::create_directories(file.parent_path());
    std::ofstream os(file);
    if (!os) throw std::runtime_error("cannot write " + file.string());
    os << body;
  } else {
    std::cout << body;
  }
  std::cerr << f.suite << ": " << total - failed << "/" << total << " passed\n";
  return failed == 0 ? 0 : 1;
}

int cmd_parse(const std::string& file) {
  std::string text;
  if (file.empty() || file == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream is(file);
    if (!is) throw std::runtime_error("cannot read " + file);
    text.assign(std::istreambuf_iterator<char>(is), {});
  }
  wb_poly* raw = nullptr;
  ok(wb_poly_from_json(text.c_str(), &raw), "parse");
  Poly poly(raw, wb_poly_free);
  char* s = nullptr;
  ok(wb_poly_to_json(poly.get(), &s), "to_json");
  std::cout << take(s) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weight-dependent binomial coefficients"};
  app.require_subcommand(1);
  app.set_version_flag("--version", wb_version());

  int n = 0, k = 0, m = 0;
  std::string spec = "formal", format = "json";
  EllipticFlags eval_ell;
  auto* eval = app.add_subcommand("eval", "print wbinom(n,k), formally or specialized");
  eval->add_option("-n", n, "upper index")->required();
  eval->add_option("-k", k, "lower index")->required();
  eval->add_option("--spec", spec, "formal | one | q | e | h | elliptic")
      ->check(CLI::IsMember({"formal", "one", "q", "e", "h", "elliptic"}));
  eval->add_option("--format", format, "json | text")->check(CLI::IsMember({"json", "text"}));
  eval_ell.add(eval);

  std::string paths_format = "text", render_dir;
  bool combined = false;
  auto* paths = app.add_subcommand("paths", "list hybrid lattice paths from the origin to (k, m)");
  paths->add_option("-k", k, "east coordinate")->required();
  paths->add_option("-m", m, "north coordinate")->required();
  paths->add_option("--format", paths_format, "text | json")->check(CLI::IsMember({"text", "json"}));
  auto* render = paths->add_option("--render", render_dir, "write SVG files (default dir: $WBINOM_OUT_DIR)")
                     ->expected(0, 1);
  paths->add_flag("--combined", combined, "one SVG with all paths instead of one per path");

  CheckFlags cf;
  auto* check = app.add_subcommand("check", "run an identity suite; exit 1 on any failure");
  std::vector<std::string> suites{"pascal", "regions", "reflections", "hlp", "binomial-theorem", "conv1", "conv2",
                                  "involution", "inversion", "qbinom", "symfun", "stirling", "elliptic", "all"};
  check->add_option("--suite", cf.suite, "suite name")->required()->check(CLI::IsMember(suites));
  check->add_option("--n", cf.n, "range lo..hi");
  check->add_option("--m", cf.m, "range lo..hi");
  check->add_option("--k", cf.k, "range lo..hi");
  check->add_option("--window", cf.window, "inversion window lo..hi");
  check->add_option("--alpha", cf.alpha, "Stirling shift range lo..hi");
  check->add_option("--span", cf.span, "truncation / conv2 width")->check(CLI::NonNegativeNumber);
  check->add_option("--samples", cf.samples, "elliptic parameter samples")->check(CLI::PositiveNumber);
  check->add_option("--format", cf.format, "json | csv | none")->check(CLI::IsMember({"json", "csv", "none"}));
  check->add_option("--out", cf.out, "write the report to a file");
  cf.ell.add(check);

  std::string parse_file;
  auto* parse = app.add_subcommand("parse", "read polynomial JSON and print it in canonical form");
  parse->add_option("file", parse_file, "input file, '-' for stdin");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*eval) return cmd_eval(n, k, spec, format, eval_ell);
    if (*paths) return cmd_paths(k, m, paths_format, render->count() > 0, render_dir, combined);
    if (*check) return cmd_check(cf);
    if (*parse) return cmd_parse(parse_file);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const api_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.status == WB_ERR_INVALID_ARGUMENT || e.status == WB_ERR_PARSE ? 2 : 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
