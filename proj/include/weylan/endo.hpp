#ifndef WEYLAN_ENDO_HPP
#define WEYLAN_ENDO_HPP

#include <string>
#include <vector>

#include "weylan/poly.hpp"
#include "weylan/weyl.hpp"

namespace weylan {

/// Endomorphism of P_n given by the images of x_1..x_n.
struct PolyEndo {
    int n = 0;
    std::vector<Poly> images; // images[i-1] = sigma(x_i), each in n variables

    PolyEndo() = default;
    PolyEndo(int n_, std::vector<Poly> images_);

    static PolyEndo identity(int n);

    const Poly& image(int i) const { return images[static_cast<size_t>(i - 1)]; }
    Poly operator()(const Poly& p) const { return substitute(p, images); }
};

/// Element sum c_j d_j of Der_K(P_n), kept as its coefficient vector.
struct Derivation {
    int n = 0;
    std::vector<Poly> coefficients; // coefficients[j-1] multiplies d_j

    Derivation() = default;
    Derivation(int n_, std::vector<Poly> coeffs);

    static Derivation zero(int n);
    static Derivation unit(int n, int i); // d_i

    Poly operator()(const Poly& p) const; // sum c_j * partial(p, j)
    WeylElement to_weyl() const;

    Derivation& operator+=(const Derivation& o);
    Derivation& operator-=(const Derivation& o);
    Derivation scaled_by(const Poly& f) const; // f * this
    friend bool operator==(const Derivation& a, const Derivation& b) {
        return a.n == b.n && a.coefficients == b.coefficients;
    }
};

/// Endomorphism of A_n given by images of all generators.
struct WeylEndo {
    int n = 0;
    std::vector<WeylElement> x_images; // x_images[i-1] = phi(x_i)
    std::vector<WeylElement> d_images; // d_images[i-1] = phi(d_i)

    const WeylElement& x_image(int i) const { return x_images[static_cast<size_t>(i - 1)]; }
    const WeylElement& d_image(int i) const { return d_images[static_cast<size_t>(i - 1)]; }

    /// Image of an arbitrary element: substitute generator images into the
    /// normal form, products taken in the x1..xn, d1..dn order.
    WeylElement operator()(const WeylElement& a) const;
};

PolyMatrix jacobian_matrix(const PolyEndo& sigma); // entry (i,j) = partial(x_i', j)

struct JacobianVerdict {
    bool is_jacobian = false;
    Poly determinant; // witness, whatever it is
};

JacobianVerdict is_jacobian_map(const PolyEndo& sigma);

/// The derivations d_i' of the canonical extension: coefficient matrix is
/// the transpose of J^{-1} = adj(J)/det under J_ij = partial(x_i', j).
std::vector<Derivation> extension_derivations(const PolyEndo& sigma);

/// Row-replacement form: d_i'(p) = det(J with row i replaced by grad p) / det J.
Poly row_replacement_derivative(const PolyEndo& sigma, int i, const Poly& p);

/// Canonical extension of a Jacobian map to A_n. Throws not_jacobian_error.
WeylEndo extend(const PolyEndo& sigma);

/// Extension family member: phi(d_i) = d_i' + d_i'(p).
WeylEndo extension_with_potential(const PolyEndo& sigma, const Poly& p);

struct RelationCheck {
    std::string name; // e.g. "[d1',x2']"
    WeylElement residual;
    bool ok = false;
};

struct RelationReport {
    std::vector<RelationCheck> checks;
    bool all_ok = true;
    std::vector<const RelationCheck*> failures() const;
};

/// Checks [d_i',x_j'] = delta_ij for all (i,j) and [x_i',x_j'] = 0,
/// [d_i',d_j'] = 0 for i <= j, by exact normal-form computation.
RelationReport verify_weyl_endo(const WeylEndo& phi);

Degree endo_degree(const PolyEndo& sigma);     // max over the n poly images
Degree weyl_endo_degree(const WeylEndo& phi);  // max over all 2n images

/// (sigma . tau)(x_i) = sigma(tau(x_i)).
PolyEndo compose(const PolyEndo& sigma, const PolyEndo& tau);

/// Composes sigma with the inverse of its own affine part so the result is
/// x_i + higher-degree terms. Requires an invertible affine part.
PolyEndo affine_normalize(const PolyEndo& sigma);

/// True when sigma(x_i) = x_i + (terms of degree >= 2) for every i.
bool has_identity_linear_part(const PolyEndo& sigma);

/// Degree-by-degree formal inverse, entries truncated at degree N.
/// Requires a Jacobian map with identity linear part (shape_error otherwise).
PolyEndo truncated_inverse(const PolyEndo& sigma, long N);

/// Solves partial(p, i) = d[i-1] for all i with p(0) = 0 by radial
/// integration; throws not_closed_error on the first failing pair.
Poly poincare_solve(const std::vector<Poly>& d);

} // namespace weylan

#endif
