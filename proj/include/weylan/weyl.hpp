#ifndef WEYLAN_WEYL_HPP
#define WEYLAN_WEYL_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "weylan/poly.hpp"

namespace weylan {

/// A normal-form term x^alpha d^beta of the Weyl algebra.
struct WeylKey {
    Monomial alpha; // x part
    Monomial beta;  // d part

    long degree() const { return alpha.degree() + beta.degree(); }
    long order() const { return beta.degree(); }

    friend bool operator==(const WeylKey& a, const WeylKey& b) {
        return a.alpha == b.alpha && a.beta == b.beta;
    }
};

struct WeylKeyOrder {
    bool operator()(const WeylKey& a, const WeylKey& b) const {
        long da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        if (a.alpha != b.alpha) return Monomial::graded_lex_less(a.alpha, b.alpha);
        return Monomial::graded_lex_less(a.beta, b.beta);
    }
};

/// Element of A_n in normal form: sum of lambda_{alpha beta} x^alpha d^beta
/// with every x left of every d. Construction and multiplication keep the
/// normal form eagerly; equality is structural.
class WeylElement {
public:
    using TermMap = std::map<WeylKey, Rational, WeylKeyOrder>;

    WeylElement() = default;
    explicit WeylElement(int nvars) : nvars_(nvars) {
        if (nvars <= 0) throw std::invalid_argument("WeylElement: nvars must be positive");
    }

    static WeylElement zero(int nvars) { return WeylElement(nvars); }
    static WeylElement constant(int nvars, const Rational& c);
    static WeylElement one(int nvars) { return constant(nvars, Rational(1)); }
    static WeylElement x(int nvars, int i); // multiplication by x_i
    static WeylElement d(int nvars, int i); // d/dx_i
    static WeylElement from_poly(const Poly& p);
    static WeylElement term(const Monomial& alpha, const Monomial& beta,
                            const Rational& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    void add_term(const WeylKey& k, const Rational& c);

    /// True when every term has beta = 0 (a pure multiplication operator).
    bool is_polynomial() const;
    /// The multiplication-operator part as a Poly (terms with beta = 0).
    Poly polynomial_part() const;

    Degree degree() const; // max |alpha| + |beta|
    Degree order() const;  // max |beta|

    WeylElement operator-() const;
    WeylElement& operator+=(const WeylElement& o);
    WeylElement& operator-=(const WeylElement& o);
    friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
    friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }

    WeylElement scaled(const Rational& c) const;
    WeylElement pow(long e) const;

    friend bool operator==(const WeylElement& a, const WeylElement& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const WeylElement& a, const WeylElement& b) {
        return !(a == b);
    }

    /// Deterministic text form, descending by (degree, alpha, beta),
    /// e.g. "x1*d1 + 1"; d-symbols print as d1..dN.
    std::string str() const;

    void require_same(const WeylElement& o) const {
        if (nvars_ != o.nvars_)
            throw dimension_error("WeylElement: nvars mismatch");
    }

private:
    int nvars_ = 0;
    TermMap terms_;
};

/// Normal-ordered exact product. Uses the closed-form expansion
///   d^b x^g = sum_k prod_i C(b_i,k_i) C(g_i,k_i) k_i!  x^{g-k} d^{b-k}
/// on term pairs instead of one-swap-at-a-time rewriting.
WeylElement weyl_mul(const WeylElement& a, const WeylElement& b);
WeylElement commutator(const WeylElement& a, const WeylElement& b);
Degree weyl_degree(const WeylElement& a);

/// Differential-operator action on P_n: x^alpha d^beta acts as
/// differentiate by d^beta then multiply by x^alpha.
Poly apply(const WeylElement& a, const Poly& p);

/// dim_K A_{n,i} = binom(i + 2n, 2n).
Integer filtration_dim(int n, long i);

/// The (alpha, beta) basis of A_{n,i}: all pairs with |alpha|+|beta| <= i.
std::vector<WeylKey> filtration_basis(int n, long i);

/// Degree filtration level with its explicit basis; cardinality must match
/// filtration_dim.
struct DegreeFiltrationLevel {
    int n;
    long i;
    std::vector<WeylKey> basis;

    static DegreeFiltrationLevel make(int n, long i) {
        return {n, i, filtration_basis(n, i)};
    }
};

} // namespace weylan

#endif
