#pragma once

#include "wbinom/weight_algebra.hpp"

#include <random>

namespace gen {

using namespace wb;

inline WeightMonomial monomial(std::mt19937_64& rng, int span = 3, int max_factors = 3) {
  std::uniform_int_distribution<int> idx(-span, span), ex(-2, 2), nf(0, max_factors);
  std::vector<WeightMonomial::factor> f;
  for (int i = nf(rng); i > 0; --i) f.push_back({{idx(rng), idx(rng)}, ex(rng)});
  return WeightMonomial(std::move(f));
}

inline WeightPolynomial polynomial(std::mt19937_64& rng, int max_terms = 4) {
  std::uniform_int_distribution<int> nt(0, max_terms), cf(-5, 5);
  WeightPolynomial p;
  for (int i = nt(rng); i > 0; --i) p.add_term(monomial(rng), cf(rng));
  return p;
}

}  // namespace gen
