#pragma once

#include "wbinom/recursion.hpp"
#include "wbinom/weight_algebra.hpp"

namespace wb {

// Generic-weight coefficient by the memoized recursion. Cache is per thread.
WeightPolynomial wbinom_recursive(int n, int k);
inline WeightPolynomial wbinom(int n, int k) { return wbinom_recursive(n, k); }

// Region reductions: regions 2 and 3 only touch region-1 values of a dual family.
WeightPolynomial wbinom_regions(int n, int k);

WeightPolynomial reflect_hat_rhs(int n, int k);
WeightPolynomial reflect_tilde_rhs(int n, int k);
WeightPolynomial reflect_breve_rhs(int n, int k);

// _w[n] = wbinom(n,1)
WeightPolynomial weighted_integer(int n);

std::size_t binom_cache_size();
void clear_binom_cache();

}  // namespace wb
