#ifndef WEYLAN_TWISTED_HPP
#define WEYLAN_TWISTED_HPP

#include <string>
#include <vector>

#include "weylan/endo.hpp"

namespace weylan {

/// P_n carrying the action a . m := phi(a) applied to m. The constructor
/// verifies that phi satisfies the defining relations.
struct TwistedModule {
    int n = 0;
    WeylEndo phi;

    explicit TwistedModule(WeylEndo phi_);
};

Poly act(const TwistedModule& m, const WeylElement& a, const Poly& p);

/// Dimension sequence of a filtration {P_{n, step*s}} with its fitted
/// leading term step^n/n! * s^n.
struct FiltrationReport {
    int n = 0;
    long step = 0;
    std::vector<Integer> dims; // dims[s], s = 0..S
    Rational leading_coefficient;
    long leading_exponent = 0;
};

/// dims[s] = binom(step*s + n, n), cross-checked against explicit monomial
/// enumeration where that stays small; leading data from order-n finite
/// differences at the two largest windows.
FiltrationReport hilbert_dims(int n, long step, long S);

struct GenerationReport {
    long operator_degree = 0; // the k of A_{n,k}
    long max_degree = 0;      // the largest s inspected
    std::vector<Integer> dims; // dim(span act(A_{n,k} basis, g) cap P_{<=s})
    std::vector<Integer> full_dims; // binom(s+n, n)
    bool generates = false;   // dims == full_dims throughout
};

/// Exact rational row reduction of {act(b, g) : b in the monomial basis of
/// A_{n,k}} against the graded-lex coordinate order; dims[s] counts the
/// echelon pivots of degree <= s. Throws on a zero generator.
GenerationReport generation_dims(const TwistedModule& m, const Poly& g, long k,
                                 long s_max);

Integer length_bound_jacobian(int n, long d); // m^n, m = max{d, (d-1)^(n-1) - 1}
Integer length_bound_weyl(int n, long d);     // d^(2n)
Integer length_bound_poisson(int n, long d);  // d^(2n)

/// The paper-form filtration step m = max{d, (d-1)^(n-1) - 1}.
long paper_filtration_step(int n, long d);

/// Step recomputed from the stored images (max image degree) rather than
/// trusted from the caller.
long recommended_step(const WeylEndo& phi);

struct GrowthViolation {
    std::string image; // "x1'" or "d2'"
    Monomial witness;  // basis monomial whose image overflows
    long s = 0;
    Degree got;
    long allowed = 0;
};

struct DegreeGrowthReport {
    long step = 0;
    long S = 0;
    long checked = 0;
    std::vector<GrowthViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Verifies phi(x_i) P_{n, step*s} and phi(d_i) P_{n, step*s} land inside
/// P_{n, step*(s+1)} for s <= S, witnessing any overflow. With step below
/// the recomputed module step, violations are expected report content.
DegreeGrowthReport degree_growth_check(const TwistedModule& m, long step, long S);

} // namespace weylan

#endif
