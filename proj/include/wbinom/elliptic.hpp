#pragma once

#include "wbinom/symmetric.hpp"
#include "wbinom/weight_algebra.hpp"

#include <random>
#include <stdexcept>
#include <vector>

namespace wb {

struct singular_parameter : std::domain_error {
  using std::domain_error::domain_error;
};

struct EllipticParams {
  cplx a{0.0, 0.0};
  cplx b{0.0, 0.0};
  cplx q{0.0, 0.0};
  cplx p{0.0, 0.0};
  int J = 1;                 // theta truncation
  double tolerance = 1e-9;
};

// Smallest J >= 1 with |p|^J < tolerance * 1e-3.
int theta_truncation(cplx p, double tolerance);
EllipticParams make_params(cplx a, cplx b, cplx q, cplx p, double tolerance = 1e-9);
EllipticParams with_ab(const EllipticParams& base, cplx a, cplx b);

cplx theta(cplx x, cplx p, int J);
// (x;q,p)_k with the signed product convention for k < 0
cplx theta_poch(cplx x, cplx q, cplx p, int k, int J);

cplx ell_weight(int s, int t, const EllipticParams& e);
cplx ell_big_weight(int s, int t, const EllipticParams& e);

// Closed form; vanishing theta(1) factors are tracked exactly and cancel in pairs.
cplx ell_binom(int n, int k, const EllipticParams& e);
cplx ell_binom_recursive(int n, int k, const EllipticParams& e);

Specialization<cplx> elliptic_specialization(const EllipticParams& e);

// Both sides of the 10V9 summation with e fixed by a^2 q^{n+1} = bcde.
struct SummationSides {
  cplx lhs;
  cplx rhs;
  double scale;  // sum of |terms|
};
SummationSides ten_v_nine(cplx a, cplx b, cplx c, cplx d, int n, cplx q, cplx p, int J);

// |l - r| / max(|l|, |r|, scale, 1e-300)
double relative_error(cplx l, cplx r, double scale = 0.0);

// Generic sample: a, b, q near the unit circle, |p| in [0.05, 0.2].
EllipticParams sample_params(std::mt19937_64& rng, double tolerance = 1e-9);

std::vector<CheckRecord> ell_identity_suite(const EllipticParams& e, int lo, int hi);

}  // namespace wb
