#ifndef WEYLAN_MONOMIAL_HPP
#define WEYLAN_MONOMIAL_HPP

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace weylan {

/// Exponent vector of fixed length nvars, entries >= 0.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(int nvars) : e_(static_cast<size_t>(nvars), 0) {
        if (nvars <= 0) throw std::invalid_argument("Monomial: nvars must be positive");
    }
    Monomial(std::initializer_list<int> e) : e_(e) { check(); }
    explicit Monomial(std::vector<int> e) : e_(std::move(e)) { check(); }

    static Monomial variable(int nvars, int i) { // 1-based index, x_i
        Monomial m(nvars);
        m.checked_index(i);
        m.e_[static_cast<size_t>(i - 1)] = 1;
        return m;
    }

    int nvars() const { return static_cast<int>(e_.size()); }
    int exponent(int i) const { checked_index(i); return e_[static_cast<size_t>(i - 1)]; }
    int operator[](size_t idx) const { return e_[idx]; }

    long degree() const {
        long d = 0;
        for (int x : e_) d += x;
        return d;
    }

    bool is_constant() const { return degree() == 0; }

    Monomial operator*(const Monomial& o) const {
        require_same(o);
        Monomial r = *this;
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
        return r;
    }

    bool divides(const Monomial& o) const { // this | o
        require_same(o);
        for (size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    Monomial quotient(const Monomial& o) const { // this / o, requires o | this
        require_same(o);
        Monomial r = *this;
        for (size_t i = 0; i < e_.size(); ++i) {
            r.e_[i] -= o.e_[i];
            if (r.e_[i] < 0) throw std::domain_error("Monomial: non-divisible quotient");
        }
        return r;
    }

    Monomial with_increment(int i, int by) const { // bump x_i exponent
        checked_index(i);
        Monomial r = *this;
        r.e_[static_cast<size_t>(i - 1)] += by;
        if (r.e_[static_cast<size_t>(i - 1)] < 0)
            throw std::domain_error("Monomial: negative exponent");
        return r;
    }

    const std::vector<int>& exponents() const { return e_; }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }

    /// Graded-lexicographic with x1 > x2 > ...: total degree first, then the
    /// first differing exponent decides (larger exponent on the earlier
    /// variable is the larger monomial).
    static bool graded_lex_less(const Monomial& a, const Monomial& b) {
        long da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        for (size_t i = 0; i < a.e_.size(); ++i)
            if (a.e_[i] != b.e_[i]) return a.e_[i] < b.e_[i];
        return false;
    }

private:
    void check() const {
        if (e_.empty()) throw std::invalid_argument("Monomial: empty exponent vector");
        for (int x : e_)
            if (x < 0) throw std::invalid_argument("Monomial: negative exponent");
    }
    void checked_index(int i) const {
        if (i < 1 || i > nvars())
            throw std::out_of_range("Monomial: variable index out of range");
    }
    void require_same(const Monomial& o) const {
        if (e_.size() != o.e_.size())
            throw std::invalid_argument("Monomial: nvars mismatch");
    }

    std::vector<int> e_;
};

struct MonomialGradedLex {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::graded_lex_less(a, b);
    }
};

/// All monomials in n variables of total degree <= bound, graded-lex ascending.
std::vector<Monomial> monomials_up_to_degree(int nvars, long bound);

} // namespace weylan

#endif
