#include "wbinom.h"

#include "wbinom/elliptic.hpp"
#include "wbinom/paths.hpp"
#include "wbinom/qbinom.hpp"
#include "wbinom/serialize.hpp"
#include "wbinom/suites.hpp"
#include "wbinom/svg.hpp"
#include "wbinom/symmetric.hpp"
#include "wbinom/wbinom.hpp"

#include <algorithm>
#include <cstring>
#include <string>

struct wb_poly {
  wb::WeightPolynomial value;
};

struct wb_path_set {
  std::vector<wb::HybridPath> paths;
};

struct wb_report {
  std::vector<wb::SuiteRecord> records;
};

namespace {

thread_local std::string last_error;

struct null_argument {};
struct out_of_range_index {};

template <class F>
wb_status guard(F&& f) {
  last_error.clear();
  try {
    f();
    return WB_OK;
  } catch (const null_argument&) {
    last_error = "null argument";
    return WB_ERR_NULL;
  } catch (const out_of_range_index&) {
    last_error = "index out of range";
    return WB_ERR_OUT_OF_RANGE;
  } catch (const wb::singular_parameter& e) {
    last_error = e.what();
    return WB_ERR_SINGULAR;
  } catch (const wb::unsupported_case& e) {
    last_error = e.what();
    return WB_ERR_UNSUPPORTED;
  } catch (const wb::parse_error& e) {
    last_error = e.what();
    return WB_ERR_PARSE;
  } catch (const nlohmann::json::exception& e) {
    last_error = e.what();
    return WB_ERR_PARSE;
  } catch (const std::invalid_argument& e) {
    last_error = e.what();
    return WB_ERR_INVALID_ARGUMENT;
  } catch (const std::domain_error& e) {
    last_error = e.what();
    return WB_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    last_error = e.what();
    return WB_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return WB_ERR_INTERNAL;
  }
}

template <class... T>
void need(const T*... p) {
  if (((p == nullptr) || ...)) throw null_argument{};
}

char* dup(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

wb::cplx to_cplx(wb_complex z) { return {z.re, z.im}; }
wb_complex from_cplx(wb::cplx z) { return {z.real(), z.imag()}; }

wb::EllipticParams params_of(const wb_elliptic* e) {
  double tol = e->tolerance > 0 ? e->tolerance : 1e-9;
  return wb::make_params(to_cplx(e->a), to_cplx(e->b), to_cplx(e->q), to_cplx(e->p), tol);
}

const wb::HybridPath& path_at(const wb_path_set* s, size_t i) {
  if (i >= s->paths.size()) throw out_of_range_index{};
  return s->paths[i];
}

wb::IntRange range_of(const nlohmann::json& j) {
  if (j.is_string()) return wb::parse_range(j.get<std::string>());
  if (j.is_number_integer()) {
    int v = j.get<int>();
    return {v, v};
  }
  if (j.is_array() && j.size() == 2) {
    wb::IntRange r{j[0].get<int>(), j[1].get<int>()};
    if (r.lo > r.hi) throw std::invalid_argument("empty range " + j.dump());
    return r;
  }
  throw std::invalid_argument("range must be \"lo..hi\", an integer or [lo, hi]: " + j.dump());
}

wb::cplx complex_of(const nlohmann::json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2) return {j[0].get<double>(), j[1].get<double>()};
  throw std::invalid_argument("complex value must be a number or [re, im]: " + j.dump());
}

wb::SuiteConfig config_of(const char* text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw wb::parse_error(e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  wb::SuiteConfig c;
  for (const auto& [key, v] : j.items()) {
    if (key == "suite") c.suite = v.get<std::string>();
    else if (key == "n") c.n = range_of(v);
    else if (key == "m") c.m = range_of(v);
    else if (key == "k") c.k = range_of(v);
    else if (key == "window") c.window = range_of(v);
    else if (key == "alpha") c.alpha = range_of(v);
    else if (key == "span") c.span = v.get<int>();
    else if (key == "seed") c.seed = v.get<std::uint64_t>();
    else if (key == "samples") c.samples = v.get<int>();
    else if (key == "tolerance") c.tolerance = v.get<double>();
    else if (key == "params") {
      c.params = wb::make_params(complex_of(v.at("a")), complex_of(v.at("b")), complex_of(v.at("q")),
                                 complex_of(v.at("p")));
    } else {
      throw std::invalid_argument("unknown config key '" + key + "'");
    }
  }
  if (!(c.tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
  if (c.samples < 1) throw std::invalid_argument("samples must be >= 1");
  if (c.span && *c.span < 0) throw std::invalid_argument("span must be >= 0");
  if (c.suite != "all") {
    const auto& names = wb::suite_names();
    if (std::find(names.begin(), names.end(), c.suite) == names.end())
      throw std::invalid_argument("unknown suite '" + c.suite + "'");
  }
  return c;
}

}  // namespace

extern "C" {

const char* wb_version(void) { return "0.1.0"; }

const char* wb_status_name(wb_status s) {
  switch (s) {
    case WB_OK: return "ok";
    case WB_ERR_NULL: return "null argument";
    case WB_ERR_INVALID_ARGUMENT: return "invalid argument";
    case WB_ERR_UNSUPPORTED: return "unsupported case";
    case WB_ERR_SINGULAR: return "singular parameter";
    case WB_ERR_PARSE: return "parse error";
    case WB_ERR_OUT_OF_RANGE: return "out of range";
    case WB_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* wb_last_error(void) { return last_error.c_str(); }

void wb_string_free(char* s) { delete[] s; }

wb_status wb_binom(int n, int k, wb_poly** out) {
  return guard([&] {
    need(out);
    *out = new wb_poly{wb::wbinom(n, k)};
  });
}

wb_status wb_poly_from_json(const char* json, wb_poly** out) {
  return guard([&] {
    need(json, out);
    *out = new wb_poly{wb::parse_poly_json(json)};
  });
}

void wb_poly_free(wb_poly* p) { delete p; }

wb_status wb_poly_to_json(const wb_poly* p, char** out) {
  return guard([&] {
    need(p, out);
    *out = dup(wb::poly_json_string(p->value));
  });
}

wb_status wb_poly_to_text(const wb_poly* p, char** out) {
  return guard([&] {
    need(p, out);
    *out = dup(wb::to_string(p->value));
  });
}

wb_status wb_poly_is_zero(const wb_poly* p, int* out) {
  return guard([&] {
    need(p, out);
    *out = p->value.is_zero();
  });
}

wb_status wb_poly_equal(const wb_poly* a, const wb_poly* b, int* out) {
  return guard([&] {
    need(a, b, out);
    *out = a->value == b->value;
  });
}

wb_status wb_poly_transform(const wb_poly* p, const char* name, wb_poly** out) {
  return guard([&] {
    need(p, name, out);
    *out = new wb_poly{wb::apply_transform(p->value, wb::parse_transform(name))};
  });
}

wb_status wb_poly_specialize(const wb_poly* p, const char* spec, char** out) {
  return guard([&] {
    need(p, spec, out);
    std::string s = spec;
    if (s == "one") {
      wb::Specialization<wb::bigint> one{"one", [](wb::WeightIndex) { return wb::bigint(1); }};
      *out = dup(wb::substitute(p->value, one).str());
    } else if (s == "q") {
      *out = dup(wb::to_string(wb::substitute(p->value, wb::q_specialization())));
    } else if (s == "e") {
      *out = dup(wb::to_string(wb::substitute(p->value, wb::e_weights())));
    } else if (s == "h") {
      *out = dup(wb::to_string(wb::substitute(p->value, wb::h_weights())));
    } else {
      throw std::invalid_argument("unknown specialization '" + s + "' (one, q, e, h)");
    }
  });
}

wb_status wb_poly_eval_elliptic(const wb_poly* p, const wb_elliptic* e, wb_complex* out) {
  return guard([&] {
    need(p, e, out);
    *out = from_cplx(wb::substitute(p->value, wb::elliptic_specialization(params_of(e))));
  });
}

wb_status wb_elliptic_sample(uint64_t seed, double tolerance, wb_elliptic* out) {
  return guard([&] {
    need(out);
    if (tolerance <= 0) tolerance = 1e-9;
    std::mt19937_64 rng(seed);
    auto P = wb::sample_params(rng, tolerance);
    *out = {from_cplx(P.a), from_cplx(P.b), from_cplx(P.q), from_cplx(P.p), tolerance};
  });
}

wb_status wb_ell_binom(int n, int k, const wb_elliptic* e, wb_complex* out) {
  return guard([&] {
    need(e, out);
    *out = from_cplx(wb::ell_binom(n, k, params_of(e)));
  });
}

wb_status wb_paths(int k, int m, wb_path_set** out) {
  return guard([&] {
    need(out);
    *out = new wb_path_set{wb::enumerate_paths(k, m)};
  });
}

void wb_path_set_free(wb_path_set* s) { delete s; }

size_t wb_path_set_size(const wb_path_set* s) { return s ? s->paths.size() : 0; }

wb_status wb_path_steps(const wb_path_set* s, size_t i, char** out) {
  return guard([&] {
    need(s, out);
    *out = dup(wb::step_string(path_at(s, i)));
  });
}

wb_status wb_path_weight(const wb_path_set* s, size_t i, wb_poly** out) {
  return guard([&] {
    need(s, out);
    *out = new wb_poly{wb::path_weight_steps(path_at(s, i)).poly()};
  });
}

wb_status wb_path_svg(const wb_path_set* s, size_t i, char** out) {
  return guard([&] {
    need(s, out);
    *out = dup(wb::render_svg(path_at(s, i)));
  });
}

wb_status wb_path_set_svg(const wb_path_set* s, int columns, char** out) {
  return guard([&] {
    need(s, out);
    *out = dup(wb::render_svg_grid(s->paths, columns));
  });
}

wb_status wb_path_set_json(const wb_path_set* s, char** out) {
  return guard([&] {
    need(s, out);
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& p : s->paths) arr.push_back(wb::to_json(p));
    *out = dup(arr.dump());
  });
}

wb_status wb_check(const char* config_json, wb_report** out) {
  return guard([&] {
    need(config_json, out);
    *out = new wb_report{wb::run_suite(config_of(config_json))};
  });
}

void wb_report_free(wb_report* r) { delete r; }

size_t wb_report_size(const wb_report* r) { return r ? r->records.size() : 0; }

size_t wb_report_failures(const wb_report* r) {
  if (!r) return 0;
  return static_cast<size_t>(
      std::count_if(r->records.begin(), r->records.end(), [](const wb::SuiteRecord& x) { return !x.pass; }));
}

wb_status wb_report_to_json(const wb_report* r, char** out) {
  return guard([&] {
    need(r, out);
    *out = dup(wb::report_json(r->records));
  });
}

wb_status wb_report_to_csv(const wb_report* r, char** out) {
  return guard([&] {
    need(r, out);
    *out = dup(wb::report_csv(r->records));
  });
}

}  // extern "C"
