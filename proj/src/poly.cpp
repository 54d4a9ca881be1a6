#include "weylan/poly.hpp"

#include <algorithm>
#include <sstream>

namespace weylan {

std::vector<Monomial> monomials_up_to_degree(int nvars, long bound) {
    std::vector<Monomial> out;
    if (bound < 0) return out;
    std::vector<int> e(static_cast<size_t>(nvars), 0);
    // odometer over exponent vectors with total degree <= bound
    long total = 0;
    while (true) {
        out.emplace_back(e);
        int i = nvars - 1;
        while (i >= 0) {
            if (total < bound) {
                ++e[static_cast<size_t>(i)];
                ++total;
                break;
            }
            total -= e[static_cast<size_t>(i)];
            e[static_cast<size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
    }
    std::sort(out.begin(), out.end(), Monomial::graded_lex_less);
    return out;
}

Poly Poly::constant(int nvars, const Rational& c) {
    Poly p(nvars);
    if (!c.is_zero()) p.terms_.emplace(Monomial(nvars), c);
    return p;
}

Poly Poly::variable(int nvars, int i) {
    Poly p(nvars);
    p.terms_.emplace(Monomial::variable(nvars, i), Rational(1));
    return p;
}

Poly Poly::monomial(const Monomial& m, const Rational& c) {
    Poly p(m.nvars());
    if (!c.is_zero()) p.terms_.emplace(m, c);
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

Rational Poly::constant_term() const {
    auto it = terms_.find(Monomial(nvars_));
    return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    if (m.nvars() != nvars_) throw dimension_error("Poly: monomial nvars mismatch");
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational Poly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Degree Poly::total_degree() const {
    if (terms_.empty()) return Degree::neg_infinity();
    // graded order: the last term has maximal degree
    return Degree::of(terms_.rbegin()->first.degree());
}

Poly Poly::operator-() const {
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    require_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    require_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    a.require_same(b);
    Poly r(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Poly Poly::scaled(const Rational& c) const {
    Poly r(nvars_);
    if (c.is_zero()) return r;
    for (const auto& [m, coeff] : terms_) r.terms_.emplace(m, coeff * c);
    return r;
}

Poly Poly::pow(long e) const {
    if (e < 0) throw std::domain_error("Poly: negative exponent");
    Poly r = Poly::constant(nvars_, Rational(1));
    Poly base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        base = (e >>= 1) > 0 ? base * base : base;
    }
    return r;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // descending graded-lex
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Monomial& m = it->first;
        const Rational& c = it->second;
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool printed_coeff = false;
        if (!mag.is_one() || m.is_constant()) {
            os << mag.str();
            printed_coeff = true;
        }
        for (int i = 1; i <= m.nvars(); ++i) {
            int e = m.exponent(i);
            if (e == 0) continue;
            if (printed_coeff) os << "*";
            printed_coeff = true;
            os << "x" << i;
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

Poly partial(const Poly& p, int i) {
    if (i < 1 || i > p.nvars())
        throw std::out_of_range("partial: variable index out of range");
    Poly r(p.nvars());
    for (const auto& [m, c] : p.terms()) {
        int e = m.exponent(i);
        if (e == 0) continue;
        r.add_term(m.with_increment(i, -1), c * Rational(e));
    }
    return r;
}

Poly substitute(const Poly& p, const std::vector<Poly>& images) {
    if (static_cast<int>(images.size()) != p.nvars())
        throw dimension_error("substitute: image count must equal nvars");
    int m = images.empty() ? 0 : images.front().nvars();
    for (const auto& im : images)
        if (im.nvars() != m)
            throw dimension_error("substitute: images must share one nvars");

    // cache powers of each image up to the degree actually used
    std::vector<std::vector<Poly>> powers(images.size());
    for (size_t i = 0; i < images.size(); ++i)
        powers[i].push_back(Poly::constant(m, Rational(1)));

    Poly r(m);
    for (const auto& [mono, c] : p.terms()) {
        Poly t = Poly::constant(m, c);
        for (size_t i = 0; i < images.size(); ++i) {
            int e = mono[i];
            if (e == 0) continue;
            while (static_cast<int>(powers[i].size()) <= e)
                powers[i].push_back(powers[i].back() * images[i]);
            t *= powers[i][static_cast<size_t>(e)];
        }
        r += t;
    }
    return r;
}

Poly truncate(const Poly& p, long max_degree) {
    Poly r(p.nvars());
    for (const auto& [m, c] : p.terms())
        if (m.degree() <= max_degree) r.add_term(m, c);
    return r;
}

Poly embed(const Poly& p, int new_nvars) {
    if (new_nvars < p.nvars())
        throw dimension_error("embed: cannot shrink variable count");
    if (new_nvars == p.nvars()) return p;
    Poly r(new_nvars);
    for (const auto& [m, c] : p.terms()) {
        std::vector<int> e = m.exponents();
        e.resize(static_cast<size_t>(new_nvars), 0);
        r.add_term(Monomial(e), c);
    }
    return r;
}

PolyMatrix::PolyMatrix(int rows_, int cols_, int nvars) : rows(rows_), cols(cols_) {
    if (rows_ <= 0 || cols_ <= 0)
        throw std::invalid_argument("PolyMatrix: dimensions must be positive");
    entries.assign(static_cast<size_t>(rows_) * cols_, Poly::zero(nvars));
}

PolyMatrix PolyMatrix::identity(int n, int nvars) {
    PolyMatrix m(n, n, nvars);
    for (int i = 0; i < n; ++i) m.at(i, i) = Poly::constant(nvars, Rational(1));
    return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (cols != o.rows) throw dimension_error("PolyMatrix: shape mismatch in product");
    PolyMatrix r(rows, o.cols, nvars());
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < o.cols; ++j) {
            Poly s = Poly::zero(nvars());
            for (int k = 0; k < cols; ++k) s += at(i, k) * o.at(k, j);
            r.at(i, j) = s;
        }
    return r;
}

PolyMatrix PolyMatrix::transposed() const {
    PolyMatrix r(cols, rows, nvars());
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
    return r;
}

namespace {

Poly det_cofactor(const PolyMatrix& m) {
    int n = m.rows;
    if (n == 1) return m.at(0, 0);
    if (n == 2) return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
    Poly r = Poly::zero(m.nvars());
    // expand along the first row
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        PolyMatrix minor(n - 1, n - 1, m.nvars());
        for (int r2 = 1; r2 < n; ++r2) {
            int cc = 0;
            for (int c2 = 0; c2 < n; ++c2) {
                if (c2 == j) continue;
                minor.at(r2 - 1, cc++) = m.at(r2, c2);
            }
        }
        Poly term = m.at(0, j) * det_cofactor(minor);
        if (j % 2 == 1) term = -term;
        r += term;
    }
    return r;
}

Poly det_bareiss(PolyMatrix m) {
    int n = m.rows;
    Poly prev = Poly::constant(m.nvars(), Rational(1));
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k).is_zero()) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r)
                if (!m.at(r, k).is_zero()) { swap_row = r; break; }
            if (swap_row < 0) return Poly::zero(m.nvars());
            for (int c = 0; c < n; ++c) std::swap(m.at(k, c), m.at(swap_row, c));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Poly num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = exact_divide(num, prev);
            }
        prev = m.at(k, k);
    }
    Poly d = m.at(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

} // namespace

Poly det(const PolyMatrix& m) {
    if (m.rows != m.cols) throw dimension_error("det: matrix must be square");
    if (m.rows < 4) return det_cofactor(m);
    return det_bareiss(m);
}

PolyMatrix adjugate(const PolyMatrix& m) {
    if (m.rows != m.cols) throw dimension_error("adjugate: matrix must be square");
    int n = m.rows;
    PolyMatrix adj(n, n, m.nvars());
    if (n == 1) {
        adj.at(0, 0) = Poly::constant(m.nvars(), Rational(1));
        return adj;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            PolyMatrix minor(n - 1, n - 1, m.nvars());
            int rr = 0;
            for (int r = 0; r < n; ++r) {
                if (r == i) continue;
                int cc = 0;
                for (int c = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor.at(rr, cc++) = m.at(r, c);
                }
                ++rr;
            }
            Poly cof = det(minor);
            if ((i + j) % 2 == 1) cof = -cof;
            adj.at(j, i) = cof; // transpose of the cofactor matrix
        }
    return adj;
}

Poly exact_divide(const Poly& p, const Poly& q) {
    if (q.is_zero()) throw std::domain_error("exact_divide: division by zero");
    Poly rem = p;
    Poly quot(p.nvars());
    const Monomial& qlead = q.terms().rbegin()->first;
    const Rational& qcoef = q.terms().rbegin()->second;
    while (!rem.is_zero()) {
        const Monomial& rlead = rem.terms().rbegin()->first;
        if (!qlead.divides(rlead))
            throw std::domain_error("exact_divide: not divisible");
        Monomial qm = rlead.quotient(qlead);
        Rational qc = rem.terms().rbegin()->second / qcoef;
        quot.add_term(qm, qc);
        rem -= q * Poly::monomial(qm, qc);
    }
    return quot;
}

} // namespace weylan
