#pragma once

#include "qsheaf/cohom_table.hpp"
#include "qsheaf/types.hpp"

// Brute-force validators, independent of the closed forms they check.
namespace qsheaf::oracle {

/// Degree-t part of k[x_0..x_{n+1}]/(q) with q = x_0^2 + ..., counted as the standard
/// monomials (x_0 exponent at most 1) by enumeration.
Dim monomial_h0(int n, int t);

/// chi(P^{n+1}, O(t)) - chi(P^{n+1}, O(t-2)), with chi(P^N, O(t)) the number of degree-t
/// monomials in N+1 variables extended polynomially by product evaluation.
Dim euler_via_ambient(int n, int t);

/// h^i(F(t)) = h^{n-i}(G(-n-t)) on every cell both windows cover.
/// Throws AmbiguityError on interval cells.
bool serre_check(const CohomTable& f, const CohomTable& dual, int n);

}  // namespace qsheaf::oracle
