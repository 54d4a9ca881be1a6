#include "weylan/endo.hpp"

#include <algorithm>

namespace weylan {

PolyEndo::PolyEndo(int n_, std::vector<Poly> images_) : n(n_), images(std::move(images_)) {
    if (n <= 0) throw std::invalid_argument("PolyEndo: n must be positive");
    if (static_cast<int>(images.size()) != n)
        throw dimension_error("PolyEndo: expected n images");
    for (const Poly& p : images)
        if (p.nvars() != n) throw dimension_error("PolyEndo: image nvars mismatch");
}

PolyEndo PolyEndo::identity(int n) {
    std::vector<Poly> im;
    im.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) im.push_back(Poly::variable(n, i));
    return PolyEndo(n, std::move(im));
}

Derivation::Derivation(int n_, std::vector<Poly> coeffs)
    : n(n_), coefficients(std::move(coeffs)) {
    if (static_cast<int>(coefficients.size()) != n)
        throw dimension_error("Derivation: expected n coefficients");
}

Derivation Derivation::zero(int n) {
    return Derivation(n, std::vector<Poly>(static_cast<size_t>(n), Poly::zero(n)));
}

Derivation Derivation::unit(int n, int i) {
    Derivation d = zero(n);
    d.coefficients[static_cast<size_t>(i - 1)] = Poly::constant(n, Rational(1));
    return d;
}

Poly Derivation::operator()(const Poly& p) const {
    Poly r(n);
    for (int j = 1; j <= n; ++j) {
        const Poly& c = coefficients[static_cast<size_t>(j - 1)];
        if (c.is_zero()) continue;
        r += c * partial(p, j);
    }
    return r;
}

WeylElement Derivation::to_weyl() const {
    WeylElement w(n);
    for (int j = 1; j <= n; ++j) {
        const Poly& c = coefficients[static_cast<size_t>(j - 1)];
        for (const auto& [m, coef] : c.terms())
            w.add_term(WeylKey{m, Monomial::variable(n, j)}, coef);
    }
    return w;
}

Derivation& Derivation::operator+=(const Derivation& o) {
    if (n != o.n) throw dimension_error("Derivation: nvars mismatch");
    for (size_t j = 0; j < coefficients.size(); ++j)
        coefficients[j] += o.coefficients[j];
    return *this;
}

Derivation& Derivation::operator-=(const Derivation& o) {
    if (n != o.n) throw dimension_error("Derivation: nvars mismatch");
    for (size_t j = 0; j < coefficients.size(); ++j)
        coefficients[j] -= o.coefficients[j];
    return *this;
}

Derivation Derivation::scaled_by(const Poly& f) const {
    Derivation r = *this;
    for (Poly& c : r.coefficients) c = f * c;
    return r;
}

WeylElement WeylEndo::operator()(const WeylElement& a) const {
    if (a.nvars() != n) throw dimension_error("WeylEndo: nvars mismatch");
    WeylElement out = WeylElement::zero(n);
    for (const auto& [k, c] : a.terms()) {
        WeylElement w = WeylElement::constant(n, c);
        for (int i = 1; i <= n; ++i)
            for (int e = 0; e < k.alpha.exponent(i); ++e)
                w = weyl_mul(w, x_image(i));
        for (int i = 1; i <= n; ++i)
            for (int e = 0; e < k.beta.exponent(i); ++e)
                w = weyl_mul(w, d_image(i));
        out += w;
    }
    return out;
}

PolyMatrix jacobian_matrix(const PolyEndo& sigma) {
    PolyMatrix j(sigma.n, sigma.n, sigma.n);
    for (int i = 1; i <= sigma.n; ++i)
        for (int jcol = 1; jcol <= sigma.n; ++jcol)
            j.at(i - 1, jcol - 1) = partial(sigma.image(i), jcol);
    return j;
}

JacobianVerdict is_jacobian_map(const PolyEndo& sigma) {
    Poly d = det(jacobian_matrix(sigma));
    return {d.is_constant() && !d.is_zero(), d};
}

std::vector<Derivation> extension_derivations(const PolyEndo& sigma) {
    auto verdict = is_jacobian_map(sigma);
    if (!verdict.is_jacobian)
        throw not_jacobian_error("extend: det J(sigma) = " + verdict.determinant.str() +
                                 " is not a nonzero scalar");
    Rational det_inv = verdict.determinant.constant_term().inverse();
    PolyMatrix adj = adjugate(jacobian_matrix(sigma));
    std::vector<Derivation> out;
    out.reserve(static_cast<size_t>(sigma.n));
    for (int i = 1; i <= sigma.n; ++i) {
        std::vector<Poly> coeffs;
        coeffs.reserve(static_cast<size_t>(sigma.n));
        // d_i' = sum_j (J^{-1})_{ji} d_j = (1/det) sum_j adj(J)_{ji} d_j
        for (int j = 1; j <= sigma.n; ++j)
            coeffs.push_back(adj.at(j - 1, i - 1).scaled(det_inv));
        out.emplace_back(sigma.n, std::move(coeffs));
    }
    return out;
}

Poly row_replacement_derivative(const PolyEndo& sigma, int i, const Poly& p) {
    if (i < 1 || i > sigma.n)
        throw std::out_of_range("row_replacement_derivative: index out of range");
    if (p.nvars() != sigma.n)
        throw dimension_error("row_replacement_derivative: nvars mismatch");
    auto verdict = is_jacobian_map(sigma);
    if (!verdict.is_jacobian)
        throw not_jacobian_error("row_replacement_derivative: not a Jacobian map");
    PolyMatrix m = jacobian_matrix(sigma);
    for (int j = 1; j <= sigma.n; ++j) m.at(i - 1, j - 1) = partial(p, j);
    return det(m).scaled(verdict.determinant.constant_term().inverse());
}

WeylEndo extend(const PolyEndo& sigma) {
    WeylEndo phi;
    phi.n = sigma.n;
    for (int i = 1; i <= sigma.n; ++i)
        phi.x_images.push_back(WeylElement::from_poly(sigma.image(i)));
    for (Derivation& der : extension_derivations(sigma))
        phi.d_images.push_back(der.to_weyl());
    return phi;
}

WeylEndo extension_with_potential(const PolyEndo& sigma, const Poly& p) {
    if (p.nvars() != sigma.n)
        throw dimension_error("extension_with_potential: potential nvars mismatch");
    WeylEndo phi = extend(sigma);
    std::vector<Derivation> ders = extension_derivations(sigma);
    for (int i = 1; i <= sigma.n; ++i) {
        Poly dip = ders[static_cast<size_t>(i - 1)](p);
        phi.d_images[static_cast<size_t>(i - 1)] += WeylElement::from_poly(dip);
    }
    return phi;
}

std::vector<const RelationCheck*> RelationReport::failures() const {
    std::vector<const RelationCheck*> out;
    for (const RelationCheck& c : checks)
        if (!c.ok) out.push_back(&c);
    return out;
}

RelationReport verify_weyl_endo(const WeylEndo& phi) {
    RelationReport rep;
    int n = phi.n;
    auto push = [&](std::string name, WeylElement residual) {
        bool ok = residual.is_zero();
        rep.checks.push_back({std::move(name), std::move(residual), ok});
        if (!ok) rep.all_ok = false;
    };
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            WeylElement r = commutator(phi.d_image(i), phi.x_image(j));
            if (i == j) r -= WeylElement::one(n);
            push("[d" + std::to_string(i) + "',x" + std::to_string(j) + "']" +
                     (i == j ? " - 1" : ""),
                 std::move(r));
        }
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            push("[x" + std::to_string(i) + "',x" + std::to_string(j) + "']",
                 commutator(phi.x_image(i), phi.x_image(j)));
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            push("[d" + std::to_string(i) + "',d" + std::to_string(j) + "']",
                 commutator(phi.d_image(i), phi.d_image(j)));
    return rep;
}

Degree endo_degree(const PolyEndo& sigma) {
    Degree best = Degree::neg_infinity();
    for (const Poly& p : sigma.images) {
        Degree d = p.total_degree();
        if (best < d) best = d;
    }
    return best;
}

Degree weyl_endo_degree(const WeylEndo& phi) {
    Degree best = Degree::neg_infinity();
    for (const WeylElement& w : phi.x_images) {
        Degree d = w.degree();
        if (best < d) best = d;
    }
    for (const WeylElement& w : phi.d_images) {
        Degree d = w.degree();
        if (best < d) best = d;
    }
    return best;
}

PolyEndo compose(const PolyEndo& sigma, const PolyEndo& tau) {
    if (sigma.n != tau.n) throw dimension_error("compose: n mismatch");
    std::vector<Poly> im;
    im.reserve(static_cast<size_t>(sigma.n));
    for (int i = 1; i <= sigma.n; ++i) im.push_back(substitute(tau.image(i), sigma.images));
    return PolyEndo(sigma.n, std::move(im));
}

namespace {

Poly linear_and_constant_part(const Poly& p) { return truncate(p, 1); }

} // namespace

bool has_identity_linear_part(const PolyEndo& sigma) {
    for (int i = 1; i <= sigma.n; ++i)
        if (linear_and_constant_part(sigma.image(i)) != Poly::variable(sigma.n, i))
            return false;
    return true;
}

PolyEndo affine_normalize(const PolyEndo& sigma) {
    int n = sigma.n;
    // affine part: sigma(x_i) = b_i + sum_j A_ij x_j + higher
    PolyMatrix a(n, n, n);
    std::vector<Rational> b(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) {
        b[static_cast<size_t>(i - 1)] = sigma.image(i).constant_term();
        for (int j = 1; j <= n; ++j)
            a.at(i - 1, j - 1) = Poly::constant(
                n, sigma.image(i).coefficient(Monomial::variable(n, j)));
    }
    Poly det_a = det(a);
    if (det_a.is_zero())
        throw shape_error("affine_normalize: affine part is singular");
    Rational det_inv = det_a.constant_term().inverse();
    PolyMatrix inv = adjugate(a); // entries are constants
    // lambda(x_i) = sum_j (A^{-1})_ij (x_j - b_j); result = sigma . lambda
    std::vector<Poly> lambda;
    lambda.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) {
        Poly li(n);
        for (int j = 1; j <= n; ++j) {
            Rational c = inv.at(i - 1, j - 1).constant_term() * det_inv;
            if (c.is_zero()) continue;
            li += (Poly::variable(n, j) -
                   Poly::constant(n, b[static_cast<size_t>(j - 1)]))
                      .scaled(c);
        }
        lambda.push_back(std::move(li));
    }
    return compose(sigma, PolyEndo(n, std::move(lambda)));
}

PolyEndo truncated_inverse(const PolyEndo& sigma, long N) {
    if (N < 1) throw std::invalid_argument("truncated_inverse: N must be positive");
    auto verdict = is_jacobian_map(sigma);
    if (!verdict.is_jacobian)
        throw not_jacobian_error("truncated_inverse: not a Jacobian map");
    int n = sigma.n;
    for (int i = 1; i <= n; ++i)
        if (linear_and_constant_part(sigma.image(i)) != Poly::variable(n, i))
            throw shape_error("truncated_inverse: image of x" + std::to_string(i) +
                              " does not have linear part x" + std::to_string(i));

    // h_i := sigma(x_i) - x_i has only terms of degree >= 2, so the fixed
    // point iteration tau(x_i) = x_i - h_i(tau) gains one degree per pass.
    std::vector<Poly> h;
    h.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) h.push_back(sigma.image(i) - Poly::variable(n, i));

    PolyEndo tau = PolyEndo::identity(n);
    for (long pass = 0; pass < N; ++pass) {
        std::vector<Poly> next;
        next.reserve(static_cast<size_t>(n));
        bool changed = false;
        for (int i = 1; i <= n; ++i) {
            Poly v = truncate(Poly::variable(n, i) - substitute(h[static_cast<size_t>(i - 1)], tau.images), N);
            if (v != tau.image(i)) changed = true;
            next.push_back(std::move(v));
        }
        tau.images = std::move(next);
        if (!changed) break;
    }
    return tau;
}

Poly poincare_solve(const std::vector<Poly>& d) {
    if (d.empty()) throw std::invalid_argument("poincare_solve: empty input");
    int n = static_cast<int>(d.size());
    for (const Poly& p : d)
        if (p.nvars() != n)
            throw dimension_error("poincare_solve: expected n polynomials in n variables");
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (partial(d[static_cast<size_t>(i - 1)], j) !=
                partial(d[static_cast<size_t>(j - 1)], i))
                throw not_closed_error(i, j);

    // radial integration: each term c x^g of d_i contributes
    // c x^g x_i / (|g| + 1)
    Poly p(n);
    for (int i = 1; i <= n; ++i)
        for (const auto& [m, c] : d[static_cast<size_t>(i - 1)].terms())
            p.add_term(m.with_increment(i, 1), c / Rational(m.degree() + 1));
    return p;
}

} // namespace weylan
