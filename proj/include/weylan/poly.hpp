#ifndef WEYLAN_POLY_HPP
#define WEYLAN_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "weylan/errors.hpp"
#include "weylan/monomial.hpp"
#include "weylan/numeric.hpp"

namespace weylan {

/// Sparse exact-rational multivariate polynomial. Terms are kept in a
/// graded-lex-ordered map with no zero coefficients, so equal polynomials
/// compare equal structurally and serialization is deterministic.
class Poly {
public:
    using TermMap = std::map<Monomial, Rational, MonomialGradedLex>;

    Poly() = default;
    explicit Poly(int nvars) : nvars_(nvars) {
        if (nvars <= 0) throw std::invalid_argument("Poly: nvars must be positive");
    }

    static Poly zero(int nvars) { return Poly(nvars); }
    static Poly constant(int nvars, const Rational& c);
    static Poly variable(int nvars, int i); // x_i, 1-based
    static Poly monomial(const Monomial& m, const Rational& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Adds c * m, erasing the term if the sum cancels.
    void add_term(const Monomial& m, const Rational& c);
    Rational coefficient(const Monomial& m) const;

    Degree total_degree() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const Rational& c) const;
    Poly pow(long e) const;

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Deterministic text form, descending graded-lex, e.g. "2*x1*x2^2 - 1/3".
    std::string str() const;

private:
    void require_same(const Poly& o) const {
        if (nvars_ != o.nvars_)
            throw dimension_error("Poly: variable-count mismatch (" +
                                  std::to_string(nvars_) + " vs " +
                                  std::to_string(o.nvars_) + ")");
    }

    int nvars_ = 0;
    TermMap terms_;
};

Poly partial(const Poly& p, int i);                            // d/dx_i, 1-based
Poly substitute(const Poly& p, const std::vector<Poly>& images);
Poly truncate(const Poly& p, long max_degree);

/// Embed a polynomial in n variables into m >= n variables (same x_i).
Poly embed(const Poly& p, int new_nvars);

struct PolyMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Poly> entries; // row-major, uniform nvars

    PolyMatrix() = default;
    PolyMatrix(int rows_, int cols_, int nvars);

    static PolyMatrix identity(int n, int nvars);

    Poly& at(int r, int c) { return entries[static_cast<size_t>(r) * cols + c]; }
    const Poly& at(int r, int c) const {
        return entries[static_cast<size_t>(r) * cols + c];
    }
    int nvars() const { return entries.empty() ? 0 : entries.front().nvars(); }

    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix transposed() const;
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return a.rows == b.rows && a.cols == b.cols && a.entries == b.entries;
    }
};

/// Exact determinant: cofactor expansion below size 4, fraction-free
/// Bareiss elimination from size 4 up (polynomial entries swell otherwise).
Poly det(const PolyMatrix& m);
PolyMatrix adjugate(const PolyMatrix& m);

/// Exact quotient p / q; throws if q does not divide p.
Poly exact_divide(const Poly& p, const Poly& q);

} // namespace weylan

#endif
