#include "weylan/poisson.hpp"

namespace weylan {

PolyMatrix PoissonContext::omega() const {
    int v = vars();
    PolyMatrix m(v, v, v);
    for (int i = 1; i <= n; ++i) {
        m.at(n + i - 1, i - 1) = Poly::constant(v, Rational(1));
        m.at(i - 1, n + i - 1) = Poly::constant(v, Rational(-1));
    }
    return m;
}

Poly poisson_bracket(const PoissonContext& ctx, const Poly& f, const Poly& g) {
    if (f.nvars() != ctx.vars() || g.nvars() != ctx.vars())
        throw dimension_error("poisson_bracket: operands must live in 2n variables");
    Poly r(ctx.vars());
    for (int i = 1; i <= ctx.n; ++i) {
        r += partial(f, ctx.n + i) * partial(g, i);
        r -= partial(f, i) * partial(g, ctx.n + i);
    }
    return r;
}

Derivation hamiltonian_derivation(const PoissonContext& ctx, const Poly& f) {
    if (f.nvars() != ctx.vars())
        throw dimension_error("hamiltonian_derivation: expected 2n variables");
    int v = ctx.vars();
    std::vector<Poly> coeffs(static_cast<size_t>(v), Poly::zero(v));
    for (int k = 1; k <= ctx.n; ++k) {
        coeffs[static_cast<size_t>(k - 1)] = partial(f, ctx.n + k);
        coeffs[static_cast<size_t>(ctx.n + k - 1)] = -partial(f, k);
    }
    return Derivation(v, std::move(coeffs));
}

PoissonVerdict is_poisson_endo(const PoissonContext& ctx, const PolyEndo& sigma) {
    if (sigma.n != ctx.vars())
        throw dimension_error("is_poisson_endo: endomorphism must act on 2n variables");
    PolyMatrix omega = ctx.omega();
    PoissonVerdict v;
    for (int i = 1; i <= ctx.vars(); ++i)
        for (int j = i + 1; j <= ctx.vars(); ++j) {
            Poly r = poisson_bracket(ctx, sigma.image(i), sigma.image(j)) -
                     omega.at(i - 1, j - 1);
            if (!r.is_zero()) {
                v.ok = false;
                v.failures.push_back({i, j, std::move(r)});
            }
        }
    return v;
}

WeylEndo lift_to_weyl(const PoissonContext& ctx, const PolyEndo& sigma) {
    PoissonVerdict verdict = is_poisson_endo(ctx, sigma);
    if (!verdict.ok)
        throw not_poisson_error("lift_to_weyl: bracket not preserved at (" +
                                std::to_string(verdict.failures.front().i) + "," +
                                std::to_string(verdict.failures.front().j) + ")");
    int v = ctx.vars();
    WeylEndo phi;
    phi.n = v;
    for (int i = 1; i <= v; ++i)
        phi.x_images.push_back(WeylElement::from_poly(sigma.image(i)));
    for (int i = 1; i <= v; ++i) {
        Poly hamiltonian = (i <= ctx.n) ? sigma.image(ctx.n + i) : -sigma.image(i - ctx.n);
        phi.d_images.push_back(hamiltonian_derivation(ctx, hamiltonian).to_weyl());
    }
    return phi;
}

StructureIdentityReport structure_identity(const PoissonContext& ctx,
                                           const PolyEndo& sigma) {
    if (sigma.n != ctx.vars())
        throw dimension_error("structure_identity: endomorphism must act on 2n variables");
    int v = ctx.vars();
    StructureIdentityReport rep;
    rep.bracket_matrix = PolyMatrix(v, v, v);
    for (int i = 1; i <= v; ++i)
        for (int j = 1; j <= v; ++j)
            rep.bracket_matrix.at(i - 1, j - 1) =
                poisson_bracket(ctx, sigma.image(i), sigma.image(j));

    // chain rule under J_ij = partial(x_i', j):
    //   {x_i', x_j'} = sum_{a,b} (d x_i'/d x_a) Omega_ab (d x_j'/d x_b),
    // i.e. B = J Omega J^T.
    PolyMatrix jac = jacobian_matrix(sigma);
    PolyMatrix rhs = jac * ctx.omega() * jac.transposed();
    rep.chain_identity_ok = (rep.bracket_matrix == rhs);

    rep.jacobian_determinant = det(jac);
    rep.poisson = is_poisson_endo(ctx, sigma).ok;
    if (rep.poisson) {
        Poly d = rep.jacobian_determinant;
        rep.det_is_unit_pm1 =
            d.is_constant() && (d.constant_term() == Rational(1) ||
                                d.constant_term() == Rational(-1));
    }
    return rep;
}

} // namespace weylan
