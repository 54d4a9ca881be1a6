#ifndef WEYLAN_POISSON_HPP
#define WEYLAN_POISSON_HPP

#include <vector>

#include "weylan/endo.hpp"
#include "weylan/poly.hpp"

namespace weylan {

/// Canonical Poisson structure on P_{2n}: {x_{n+i}, x_j} = delta_ij,
/// {x_i, x_j} = {x_{n+i}, x_{n+j}} = 0.
struct PoissonContext {
    int n = 0; // ambient variables = 2n

    explicit PoissonContext(int n_) : n(n_) {
        if (n <= 0) throw std::invalid_argument("PoissonContext: n must be positive");
    }
    int vars() const { return 2 * n; }

    /// Omega_ab = {x_a, x_b}: Omega_{n+i,i} = 1, Omega_{i,n+i} = -1.
    PolyMatrix omega() const;
};

Poly poisson_bracket(const PoissonContext& ctx, const Poly& f, const Poly& g);

/// Hamiltonian derivation {f, .} = sum_k (df/dx_{n+k}) d_k - (df/dx_k) d_{n+k}.
Derivation hamiltonian_derivation(const PoissonContext& ctx, const Poly& f);

struct PoissonResidual {
    int i = 0;
    int j = 0;
    Poly residual; // bracket(sigma x_i, sigma x_j) - Omega_ij
};

struct PoissonVerdict {
    bool ok = true;
    std::vector<PoissonResidual> failures;
};

/// bracket(sigma x_i, sigma x_j) = Omega_ij for all i < j.
PoissonVerdict is_poisson_endo(const PoissonContext& ctx, const PolyEndo& sigma);

/// Lift of a Poisson endomorphism to A_{2n}: x_i -> sigma(x_i),
/// d_i -> {x'_{n+i}, .} for i <= n and {-x'_{i-n}, .} for i > n.
/// Throws not_poisson_error when the precondition fails.
WeylEndo lift_to_weyl(const PoissonContext& ctx, const PolyEndo& sigma);

struct StructureIdentityReport {
    PolyMatrix bracket_matrix;      // B_ij = {sigma x_i, sigma x_j}
    Poly jacobian_determinant;
    bool chain_identity_ok = false; // B == J Omega J^T, the chain rule
    bool poisson = false;
    bool det_is_unit_pm1 = false;   // det J in {+1, -1}; only claimed when poisson
};

StructureIdentityReport structure_identity(const PoissonContext& ctx,
                                           const PolyEndo& sigma);

} // namespace weylan

#endif
