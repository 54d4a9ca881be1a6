#include "weylan/twisted.hpp"

#include <algorithm>
#include <map>

namespace weylan {

TwistedModule::TwistedModule(WeylEndo phi_) : n(phi_.n), phi(std::move(phi_)) {
    RelationReport rep = verify_weyl_endo(phi);
    if (!rep.all_ok)
        throw error("TwistedModule: phi violates " + rep.failures().front()->name);
}

Poly act(const TwistedModule& m, const WeylElement& a, const Poly& p) {
    if (a.nvars() != m.n || p.nvars() != m.n)
        throw dimension_error("act: nvars mismatch");
    Poly out(m.n);
    for (const auto& [k, c] : a.terms()) {
        // x^alpha d^beta acts through phi with the rightmost factor first
        Poly v = p;
        for (int i = m.n; i >= 1 && !v.is_zero(); --i)
            for (int e = 0; e < k.beta.exponent(i) && !v.is_zero(); ++e)
                v = apply(m.phi.d_image(i), v);
        for (int i = m.n; i >= 1 && !v.is_zero(); --i)
            for (int e = 0; e < k.alpha.exponent(i) && !v.is_zero(); ++e)
                v = apply(m.phi.x_image(i), v);
        out += v.scaled(c);
    }
    return out;
}

FiltrationReport hilbert_dims(int n, long step, long S) {
    if (n < 1 || step < 1 || S < 1)
        throw std::invalid_argument("hilbert_dims: n, step, S must be positive");
    FiltrationReport rep;
    rep.n = n;
    rep.step = step;
    for (long s = 0; s <= S; ++s) {
        Integer dim = binomial(step * s + n, n);
        // enumeration cross-check while the count stays desk-sized
        if (dim <= 4000) {
            Integer counted(
                static_cast<long>(monomials_up_to_degree(n, step * s).size()));
            if (counted != dim)
                throw error("hilbert_dims: enumeration disagrees with binomial");
        }
        rep.dims.push_back(dim);
    }
    // order-n finite differences of a degree-n polynomial sequence are the
    // constant n! * leading; fit at the two largest windows when S allows
    rep.leading_exponent = n;
    if (S >= n + 1) {
        auto nth_difference = [&](long start) {
            std::vector<Integer> w(rep.dims.begin() + start,
                                   rep.dims.begin() + start + n + 1);
            for (int level = 0; level < n; ++level)
                for (size_t t = 0; t + 1 < w.size() - static_cast<size_t>(level); ++t)
                    w[t] = w[t + 1] - w[t];
            return w[0];
        };
        Integer d1 = nth_difference(S - n - 1);
        Integer d2 = nth_difference(S - n);
        if (d1 != d2) throw error("hilbert_dims: leading term does not fit");
        rep.leading_coefficient =
            Rational(d2, factorial(static_cast<unsigned long>(n)));
    } else {
        rep.leading_coefficient =
            Rational(pow_integer(Integer(step), static_cast<unsigned long>(n)),
                     factorial(static_cast<unsigned long>(n)));
    }
    return rep;
}

GenerationReport generation_dims(const TwistedModule& m, const Poly& g, long k,
                                 long s_max) {
    if (g.is_zero()) throw std::invalid_argument("generation_dims: zero generator");
    if (g.nvars() != m.n) throw dimension_error("generation_dims: generator nvars mismatch");
    if (k < 0 || s_max < 0)
        throw std::invalid_argument("generation_dims: k and s_max must be >= 0");

    // sparse echelon rows keyed by leading monomial, coordinates ordered
    // descending graded-lex so pivots of degree <= s span the intersection
    // with P_{<= s}
    struct DescGradedLex {
        bool operator()(const Monomial& a, const Monomial& b) const {
            return Monomial::graded_lex_less(b, a);
        }
    };
    using Row = std::map<Monomial, Rational, DescGradedLex>;
    std::map<Monomial, Row, DescGradedLex> pivots;

    auto reduce_insert = [&](Row row) {
        while (!row.empty()) {
            auto lead = row.begin();
            auto hit = pivots.find(lead->first);
            if (hit == pivots.end()) {
                // normalize so the pivot coefficient is 1
                Rational inv = lead->second.inverse();
                for (auto& [mono, c] : row) c *= inv;
                Monomial lead_key = row.begin()->first;
                pivots.emplace(std::move(lead_key), std::move(row));
                return;
            }
            Rational factor = lead->second;
            for (const auto& [mono, c] : hit->second) {
                Rational delta = c * factor;
                auto [it, inserted] = row.emplace(mono, -delta);
                if (!inserted) {
                    it->second -= delta;
                    if (it->second.is_zero()) row.erase(it);
                }
            }
        }
    };

    for (const WeylKey& key : filtration_basis(m.n, k)) {
        Poly v = act(m, WeylElement::term(key.alpha, key.beta, Rational(1)), g);
        if (v.is_zero()) continue;
        Row row;
        for (const auto& [mono, c] : v.terms()) row.emplace(mono, c);
        reduce_insert(std::move(row));
    }

    GenerationReport rep;
    rep.operator_degree = k;
    rep.max_degree = s_max;
    for (long s = 0; s <= s_max; ++s) {
        long count = 0;
        for (const auto& [lead, row] : pivots)
            if (lead.degree() <= s) ++count;
        rep.dims.push_back(Integer(count));
        rep.full_dims.push_back(binomial(s + m.n, m.n));
    }
    rep.generates = (rep.dims == rep.full_dims);
    return rep;
}

long paper_filtration_step(int n, long d) {
    if (d < 1) throw std::invalid_argument("paper_filtration_step: d must be >= 1");
    Integer alt = pow_integer(Integer(d - 1), static_cast<unsigned long>(n - 1)) - 1;
    Integer m = std::max(Integer(d), alt);
    return m.get_si();
}

Integer length_bound_jacobian(int n, long d) {
    return pow_integer(Integer(paper_filtration_step(n, d)),
                       static_cast<unsigned long>(n));
}

Integer length_bound_weyl(int n, long d) {
    if (d < 1) throw std::invalid_argument("length_bound_weyl: d must be >= 1");
    return pow_integer(Integer(d), static_cast<unsigned long>(2 * n));
}

Integer length_bound_poisson(int n, long d) { return length_bound_weyl(n, d); }

long recommended_step(const WeylEndo& phi) {
    Degree d = weyl_endo_degree(phi);
    return d.finite ? std::max(d.value, 1L) : 1L;
}

DegreeGrowthReport degree_growth_check(const TwistedModule& m, long step, long S) {
    if (step < 1 || S < 1)
        throw std::invalid_argument("degree_growth_check: step and S must be positive");
    DegreeGrowthReport rep;
    rep.step = step;
    rep.S = S;
    auto check_image = [&](const WeylElement& image, const std::string& name) {
        for (long s = 0; s <= S; ++s) {
            long allowed = step * (s + 1);
            for (const Monomial& mono : monomials_up_to_degree(m.n, step * s)) {
                Poly out = apply(image, Poly::monomial(mono, Rational(1)));
                ++rep.checked;
                Degree got = out.total_degree();
                if (!(got <= allowed))
                    rep.violations.push_back({name, mono, s, got, allowed});
            }
        }
    };
    for (int i = 1; i <= m.n; ++i)
        check_image(m.phi.x_image(i), "x" + std::to_string(i) + "'");
    for (int i = 1; i <= m.n; ++i)
        check_image(m.phi.d_image(i), "d" + std::to_string(i) + "'");
    return rep;
}

} // namespace weylan
