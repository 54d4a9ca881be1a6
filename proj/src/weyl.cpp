#include "weylan/weyl.hpp"

#include <algorithm>
#include <sstream>

namespace weylan {

WeylElement WeylElement::constant(int nvars, const Rational& c) {
    WeylElement w(nvars);
    if (!c.is_zero()) w.terms_.emplace(WeylKey{Monomial(nvars), Monomial(nvars)}, c);
    return w;
}

WeylElement WeylElement::x(int nvars, int i) {
    WeylElement w(nvars);
    w.terms_.emplace(WeylKey{Monomial::variable(nvars, i), Monomial(nvars)}, Rational(1));
    return w;
}

WeylElement WeylElement::d(int nvars, int i) {
    WeylElement w(nvars);
    w.terms_.emplace(WeylKey{Monomial(nvars), Monomial::variable(nvars, i)}, Rational(1));
    return w;
}

WeylElement WeylElement::from_poly(const Poly& p) {
    WeylElement w(p.nvars());
    for (const auto& [m, c] : p.terms())
        w.terms_.emplace(WeylKey{m, Monomial(p.nvars())}, c);
    return w;
}

WeylElement WeylElement::term(const Monomial& alpha, const Monomial& beta,
                              const Rational& c) {
    if (alpha.nvars() != beta.nvars())
        throw dimension_error("WeylElement: alpha/beta nvars mismatch");
    WeylElement w(alpha.nvars());
    w.add_term(WeylKey{alpha, beta}, c);
    return w;
}

void WeylElement::add_term(const WeylKey& k, const Rational& c) {
    if (c.is_zero()) return;
    if (k.alpha.nvars() != nvars_ || k.beta.nvars() != nvars_)
        throw dimension_error("WeylElement: term nvars mismatch");
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool WeylElement::is_polynomial() const {
    for (const auto& [k, c] : terms_)
        if (k.beta.degree() != 0) return false;
    return true;
}

Poly WeylElement::polynomial_part() const {
    Poly p(nvars_);
    for (const auto& [k, c] : terms_)
        if (k.beta.degree() == 0) p.add_term(k.alpha, c);
    return p;
}

Degree WeylElement::degree() const {
    if (terms_.empty()) return Degree::neg_infinity();
    return Degree::of(terms_.rbegin()->first.degree());
}

Degree WeylElement::order() const {
    if (terms_.empty()) return Degree::neg_infinity();
    long best = 0;
    for (const auto& [k, c] : terms_)
        if (k.order() > best) best = k.order();
    return Degree::of(best);
}

WeylElement WeylElement::operator-() const {
    WeylElement r(nvars_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

WeylElement& WeylElement::operator+=(const WeylElement& o) {
    require_same(o);
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& o) {
    require_same(o);
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

WeylElement WeylElement::scaled(const Rational& c) const {
    WeylElement r(nvars_);
    if (c.is_zero()) return r;
    for (const auto& [k, coeff] : terms_) r.terms_.emplace(k, coeff * c);
    return r;
}

WeylElement WeylElement::pow(long e) const {
    if (e < 0) throw std::domain_error("WeylElement: negative exponent");
    WeylElement r = WeylElement::one(nvars_);
    WeylElement base = *this;
    for (long i = 0; i < e; ++i) r = weyl_mul(r, base);
    return r;
}

std::string WeylElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const WeylKey& k = it->first;
        const Rational& c = it->second;
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool printed = false;
        if (!mag.is_one() || (k.alpha.is_constant() && k.beta.is_constant())) {
            os << mag.str();
            printed = true;
        }
        auto emit = [&](const Monomial& m, const char* sym) {
            for (int i = 1; i <= m.nvars(); ++i) {
                int e = m.exponent(i);
                if (e == 0) continue;
                if (printed) os << "*";
                printed = true;
                os << sym << i;
                if (e > 1) os << "^" << e;
            }
        };
        emit(k.alpha, "x");
        emit(k.beta, "d");
    }
    return os.str();
}

namespace {

/// d^b x^g = sum over k <= min(b, g) of
///   prod_i [ C(b_i,k_i) * C(g_i,k_i) * k_i! ]  x^{g-k} d^{b-k}
void accumulate_term_product(WeylElement& out, const WeylKey& a, const Rational& ca,
                             const WeylKey& b, const Rational& cb) {
    int n = a.alpha.nvars();
    const Monomial& bexp = a.beta;  // d part of the left factor
    const Monomial& gexp = b.alpha; // x part of the right factor

    std::vector<int> kmax(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        kmax[static_cast<size_t>(i)] =
            std::min(bexp[static_cast<size_t>(i)], gexp[static_cast<size_t>(i)]);

    std::vector<int> k(static_cast<size_t>(n), 0);
    Rational c0 = ca * cb;
    while (true) {
        Integer coef(1);
        for (int i = 0; i < n; ++i) {
            int ki = k[static_cast<size_t>(i)];
            if (ki == 0) continue;
            coef *= binomial(bexp[static_cast<size_t>(i)], ki);
            coef *= binomial(gexp[static_cast<size_t>(i)], ki);
            coef *= factorial(static_cast<unsigned long>(ki));
        }
        std::vector<int> xa = a.alpha.exponents(), xb = gexp.exponents();
        std::vector<int> da = bexp.exponents(), db = b.beta.exponents();
        for (int i = 0; i < n; ++i) {
            size_t ii = static_cast<size_t>(i);
            xa[ii] += xb[ii] - k[ii];
            da[ii] += db[ii] - k[ii];
        }
        out.add_term(WeylKey{Monomial(xa), Monomial(da)}, c0 * Rational(coef));

        int i = n - 1;
        while (i >= 0 && k[static_cast<size_t>(i)] == kmax[static_cast<size_t>(i)]) {
            k[static_cast<size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++k[static_cast<size_t>(i)];
    }
}

} // namespace

WeylElement weyl_mul(const WeylElement& a, const WeylElement& b) {
    a.require_same(b);
    WeylElement r(a.nvars());
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms())
            accumulate_term_product(r, ka, ca, kb, cb);
    return r;
}

WeylElement commutator(const WeylElement& a, const WeylElement& b) {
    return weyl_mul(a, b) - weyl_mul(b, a);
}

Degree weyl_degree(const WeylElement& a) { return a.degree(); }

Poly apply(const WeylElement& a, const Poly& p) {
    if (a.nvars() != p.nvars())
        throw dimension_error("apply: operator/polynomial nvars mismatch");
    int n = p.nvars();
    Poly r(n);
    for (const auto& [k, c] : a.terms()) {
        for (const auto& [m, pc] : p.terms()) {
            // d^beta on x^m: falling factorials, zero if any exponent dips
            Integer fall(1);
            bool dead = false;
            std::vector<int> e = m.exponents();
            for (int i = 0; i < n && !dead; ++i) {
                size_t ii = static_cast<size_t>(i);
                int b = k.beta[ii];
                if (b == 0) continue;
                if (e[ii] < b) { dead = true; break; }
                for (int t = 0; t < b; ++t) fall *= (e[ii] - t);
                e[ii] -= b;
            }
            if (dead) continue;
            for (int i = 0; i < n; ++i)
                e[static_cast<size_t>(i)] += k.alpha[static_cast<size_t>(i)];
            r.add_term(Monomial(e), c * pc * Rational(fall));
        }
    }
    return r;
}

Integer filtration_dim(int n, long i) { return binomial(i + 2L * n, 2L * n); }

std::vector<WeylKey> filtration_basis(int n, long i) {
    std::vector<WeylKey> out;
    std::vector<Monomial> all = monomials_up_to_degree(2 * n, i);
    out.reserve(all.size());
    for (const Monomial& m : all) {
        std::vector<int> a(m.exponents().begin(), m.exponents().begin() + n);
        std::vector<int> b(m.exponents().begin() + n, m.exponents().end());
        out.push_back(WeylKey{Monomial(a), Monomial(b)});
    }
    return out;
}

} // namespace weylan
