// Test-only oracles, deliberately independent of the library's code paths:
// a one-swap-at-a-time Weyl rewriter, a Leibniz-formula determinant, an
// intersection-dimension computation via projection ranks, and small
// deterministic random generators.
#ifndef WEYLAN_TESTS_ORACLES_HPP
#define WEYLAN_TESTS_ORACLES_HPP

#include <random>
#include <vector>

#include "weylan/poly.hpp"
#include "weylan/weyl.hpp"

namespace weylan::oracles {

using Rng = std::mt19937_64;

/// Product normal-ordered by applying d_i x_j -> x_j d_i (+ delete when
/// i = j) one adjacent swap at a time.
WeylElement naive_weyl_mul(const WeylElement& a, const WeylElement& b);

/// Determinant by the Leibniz permutation sum.
Poly leibniz_det(const PolyMatrix& m);

/// dim(span(rows) cap P_{<= s}) for s = 0..s_max, computed as
/// rank(rows) - rank(projection onto coordinates of degree > s).
std::vector<long> intersection_dims(const std::vector<Poly>& rows, long s_max);

int rand_int(Rng& rng, int lo, int hi);
Rational rand_coeff(Rng& rng, int bound); // nonzero, in [-bound, bound]
Poly rand_poly(Rng& rng, int nvars, int max_deg, int max_terms, int coeff_bound,
               bool allow_zero = true);
WeylElement rand_weyl(Rng& rng, int nvars, int max_deg, int max_terms,
                      int coeff_bound);

} // namespace weylan::oracles

#endif
