#ifndef WEYLAN_GR_HPP
#define WEYLAN_GR_HPP

#include "weylan/endo.hpp"
#include "weylan/poisson.hpp"
#include "weylan/weyl.hpp"

namespace weylan {

/// Order (d-degree) of an operator: max |beta|; -inf for zero.
Degree operator_order(const WeylElement& a);

/// Top-order part mapped into P_{2n}: x^alpha d^beta with |beta| = order(a)
/// goes to x^alpha * x_{n+1}^{beta_1} ... x_{2n}^{beta_n}. Throws on zero.
Poly principal_symbol(const WeylElement& a);

/// Image of a in gr-degree k: terms with |beta| = k, symbolized. Terms of
/// lower order vanish in the quotient; higher ones must not exist.
Poly symbol_at_order(const WeylElement& a, long k);

struct SymbolBracketReport {
    Poly commutator_symbol; // [a,b] viewed in gr-degree order(a)+order(b)-1
    Poly bracket_of_symbols;
    bool match = false;
};

/// Checks that the commutator's class in gr-degree order(a)+order(b)-1
/// equals the canonical Poisson bracket of the principal symbols.
SymbolBracketReport symbol_bracket_check(const WeylElement& a, const WeylElement& b);

/// Associated-graded endomorphism of P_{2n} of an order-filtration-preserving
/// Weyl endomorphism: x_i -> phi(x_i) (order 0), x_{n+i} -> the symbolized
/// order-1 part of phi(d_i) (any order-0 remainder vanishes in gr).
/// Throws filtration_error naming the offending generator.
PolyEndo gr_endo(const WeylEndo& phi);

} // namespace weylan

#endif
