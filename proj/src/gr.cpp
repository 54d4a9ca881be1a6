#include "weylan/gr.hpp"

namespace weylan {

Degree operator_order(const WeylElement& a) { return a.order(); }

namespace {

Monomial symbol_monomial(const WeylKey& k) {
    int n = k.alpha.nvars();
    std::vector<int> e(static_cast<size_t>(2 * n), 0);
    for (int i = 0; i < n; ++i) {
        e[static_cast<size_t>(i)] = k.alpha[static_cast<size_t>(i)];
        e[static_cast<size_t>(n + i)] = k.beta[static_cast<size_t>(i)];
    }
    return Monomial(e);
}

} // namespace

Poly symbol_at_order(const WeylElement& a, long k) {
    Poly r(2 * a.nvars());
    for (const auto& [key, c] : a.terms()) {
        if (key.order() > k)
            throw error("symbol_at_order: element has order above the requested degree");
        if (key.order() == k) r.add_term(symbol_monomial(key), c);
    }
    return r;
}

Poly principal_symbol(const WeylElement& a) {
    Degree ord = a.order();
    if (!ord.finite) throw error("principal_symbol: zero operator");
    return symbol_at_order(a, ord.value);
}

SymbolBracketReport symbol_bracket_check(const WeylElement& a, const WeylElement& b) {
    if (a.is_zero() || b.is_zero())
        throw error("symbol_bracket_check: operands must be nonzero");
    long r = a.order().value + b.order().value - 1;
    WeylElement c = commutator(a, b);
    SymbolBracketReport rep;
    rep.commutator_symbol =
        (r < 0) ? Poly::zero(2 * a.nvars()) : symbol_at_order(c, r);
    PoissonContext ctx(a.nvars());
    rep.bracket_of_symbols =
        poisson_bracket(ctx, principal_symbol(a), principal_symbol(b));
    rep.match = (rep.commutator_symbol == rep.bracket_of_symbols);
    return rep;
}

PolyEndo gr_endo(const WeylEndo& phi) {
    int n = phi.n;
    std::vector<Poly> images;
    images.reserve(static_cast<size_t>(2 * n));
    for (int i = 1; i <= n; ++i) {
        const WeylElement& xi = phi.x_image(i);
        if (!(xi.order() <= 0))
            throw filtration_error("gr_endo: phi(x" + std::to_string(i) +
                                   ") has positive order");
        images.push_back(embed(xi.polynomial_part(), 2 * n));
    }
    for (int i = 1; i <= n; ++i) {
        const WeylElement& di = phi.d_image(i);
        if (!(di.order() <= 1))
            throw filtration_error("gr_endo: phi(d" + std::to_string(i) +
                                   ") has order above 1");
        // order-0 remainder (e.g. a potential) dies in gr
        Poly sym(2 * n);
        for (const auto& [key, c] : di.terms())
            if (key.order() == 1) sym.add_term(symbol_monomial(key), c);
        images.push_back(std::move(sym));
    }
    return PolyEndo(2 * n, std::move(images));
}

} // namespace weylan
