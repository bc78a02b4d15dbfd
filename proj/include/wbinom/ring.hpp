#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <stdexcept>

namespace wb {

using bigint = boost::multiprecision::cpp_int;
using cplx = std::complex<double>;

struct not_invertible : std::domain_error {
  using std::domain_error::domain_error;
};

// Per-type ring operations. Specialised next to each ring type.
template <class R>
struct ring;

template <>
struct ring<bigint> {
  static bigint zero() { return 0; }
  static bigint one() { return 1; }
  static bigint from_int(const bigint& c) { return c; }
  static bool is_zero(const bigint& x) { return x == 0; }
  static bigint inverse(const bigint& x) {
    if (x == 1 || x == -1) return x;
    throw not_invertible("integer is not a unit");
  }
};

template <>
struct ring<cplx> {
  static cplx zero() { return 0.0; }
  static cplx one() { return 1.0; }
  static cplx from_int(const bigint& c) { return cplx(c.convert_to<double>(), 0.0); }
  static bool is_zero(const cplx& x) { return x == 0.0; }
  static cplx inverse(const cplx& x) {
    if (x == 0.0) throw not_invertible("zero has no inverse");
    return 1.0 / x;
  }
};

inline int sgn(long n) { return n >= 0 ? 1 : -1; }

// (-1)^e for any integer e.
inline int neg_one_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

// The three-branch product over j = l..m:
//   m >= l   : A_l ... A_m
//   m == l-1 : empty
//   m <  l-1 : A_{l-1}^{-1} ... A_{m+1}^{-1}
// Every product with symbolic bounds in the library goes through here.
struct signed_range {
  long first;
  long last;
  int exponent;  // +1 or -1
  bool empty() const { return first > last; }
};

inline signed_range product_range(long l, long m) {
  if (m >= l) return {l, m, 1};
  return {m + 1, l - 1, -1};
}

template <class R, class F>
R range_product(long l, long m, F&& factor) {
  auto r = product_range(l, m);
  R acc = ring<R>::one();
  for (long j = r.first; j <= r.last; ++j) {
    if (r.exponent > 0)
      acc = acc * factor(j);
    else
      acc = acc * ring<R>::inverse(factor(j));
  }
  return acc;
}

// Matching sum convention: for m < l-1 the sum is -(A_{l-1} + ... + A_{m+1}).
template <class R, class F>
R range_sum(long l, long m, F&& term) {
  auto r = product_range(l, m);
  R acc = ring<R>::zero();
  for (long j = r.first; j <= r.last; ++j) acc = acc + term(j);
  if (r.exponent < 0) acc = ring<R>::zero() - acc;
  return acc;
}

template <class R>
R ring_pow(const R& x, long e) {
  if (e < 0) return ring_pow(ring<R>::inverse(x), -e);
  R acc = ring<R>::one();
  R base = x;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

}  // namespace wb
