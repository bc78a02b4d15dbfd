#ifndef WBINOM_H
#define WBINOM_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define WB_API __attribute__((visibility("default")))
#else
#define WB_API
#endif

typedef enum wb_status {
  WB_OK = 0,
  WB_ERR_NULL = 1,             /* a required pointer argument was NULL */
  WB_ERR_INVALID_ARGUMENT = 2, /* bad index, name, range or config value */
  WB_ERR_UNSUPPORTED = 3,      /* outside the implemented cases (e.g. iota for n<0<=m) */
  WB_ERR_SINGULAR = 4,         /* elliptic parameters hit a theta zero */
  WB_ERR_PARSE = 5,            /* malformed JSON or text input */
  WB_ERR_OUT_OF_RANGE = 6,     /* index past the end of a path set */
  WB_ERR_INTERNAL = 7
} wb_status;

/* Opaque handles; each has its own free function. Strings returned through
   char** are heap allocated and released with wb_string_free. */
typedef struct wb_poly wb_poly;
typedef struct wb_path_set wb_path_set;
typedef struct wb_report wb_report;

typedef struct wb_complex {
  double re;
  double im;
} wb_complex;

typedef struct wb_elliptic {
  wb_complex a, b, q, p;
  double tolerance; /* 0 means 1e-9 */
} wb_elliptic;

WB_API const char* wb_version(void);
WB_API const char* wb_status_name(wb_status s);
/* Message for the last failing call on this thread; "" if none. */
WB_API const char* wb_last_error(void);
WB_API void wb_string_free(char* s);

/* formal coefficients */
WB_API wb_status wb_binom(int n, int k, wb_poly** out);
WB_API wb_status wb_poly_from_json(const char* json, wb_poly** out);
WB_API void wb_poly_free(wb_poly* p);
WB_API wb_status wb_poly_to_json(const wb_poly* p, char** out);
WB_API wb_status wb_poly_to_text(const wb_poly* p, char** out);
WB_API wb_status wb_poly_is_zero(const wb_poly* p, int* out);
WB_API wb_status wb_poly_equal(const wb_poly* a, const wb_poly* b, int* out);
/* name: identity | hat | tilde | breve */
WB_API wb_status wb_poly_transform(const wb_poly* p, const char* name, wb_poly** out);
/* spec: one | q | e | h; writes the specialized value as text */
WB_API wb_status wb_poly_specialize(const wb_poly* p, const char* spec, char** out);
WB_API wb_status wb_poly_eval_elliptic(const wb_poly* p, const wb_elliptic* e, wb_complex* out);

/* elliptic layer */
WB_API wb_status wb_elliptic_sample(uint64_t seed, double tolerance, wb_elliptic* out);
WB_API wb_status wb_ell_binom(int n, int k, const wb_elliptic* e, wb_complex* out);

/* hybrid lattice paths from the origin to (k, m) */
WB_API wb_status wb_paths(int k, int m, wb_path_set** out);
WB_API void wb_path_set_free(wb_path_set* s);
WB_API size_t wb_path_set_size(const wb_path_set* s);
WB_API wb_status wb_path_steps(const wb_path_set* s, size_t i, char** out);
WB_API wb_status wb_path_weight(const wb_path_set* s, size_t i, wb_poly** out);
WB_API wb_status wb_path_svg(const wb_path_set* s, size_t i, char** out);
WB_API wb_status wb_path_set_svg(const wb_path_set* s, int columns, char** out);
WB_API wb_status wb_path_set_json(const wb_path_set* s, char** out);

/* Identity suites. config is a JSON object, e.g.
   {"suite": "conv1", "n": "-4..4", "m": [-4, 4], "k": "0..6", "tolerance": 1e-9}
   Keys: suite, n, m, k, window, alpha (ranges), span, seed, samples, tolerance,
   params {"a": [re, im], "b": ..., "q": ..., "p": ...}. */
WB_API wb_status wb_check(const char* config_json, wb_report** out);
WB_API void wb_report_free(wb_report* r);
WB_API size_t wb_report_size(const wb_report* r);
WB_API size_t wb_report_failures(const wb_report* r);
WB_API wb_status wb_report_to_json(const wb_report* r, char** out);
WB_API wb_status wb_report_to_csv(const wb_report* r, char** out);

#ifdef __cplusplus
}
#endif

#endif
