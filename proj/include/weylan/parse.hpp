#ifndef WEYLAN_PARSE_HPP
#define WEYLAN_PARSE_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "weylan/poly.hpp"
#include "weylan/weyl.hpp"

namespace weylan {

/// Polynomial text grammar: variables x1..xN, integer and p/q rational
/// literals, operators + - * ^, parentheses. Implicit multiplication is a
/// parse error. line1 is the 1-based line number reported for errors.
Poly parse_poly(const std::string& text, int nvars, int line1 = 1);

/// Operator grammar: the polynomial grammar plus d1..dN. The expression is
/// evaluated in A_n, so products are normal-ordered (d1*x1 parses to
/// x1*d1 + 1).
WeylElement parse_weyl(const std::string& text, int nvars, int line1 = 1);

/// Parsed endomorphism file. Plain files ("n = <int>" header, then
/// "x<i> -> <poly>" lines) describe an endomorphism of P_n; Poisson files
/// ("poisson n = <int>") declare n and carry 2n image lines.
struct EndoFile {
    bool poisson = false;
    int n = 0;                // header value; ambient variables = poisson ? 2n : n
    std::vector<Poly> images; // length = ambient variables

    int ambient_vars() const { return poisson ? 2 * n : n; }
};

EndoFile parse_endo_file(std::istream& in);
EndoFile parse_endo_text(const std::string& text);
EndoFile load_endo_file(const std::string& path);

} // namespace weylan

#endif
