#pragma once
// Resultants of univariate polynomials over a Laurent coefficient ring, the
// parametric resultant R(lambda) against a linear combination of equations,
// and the projection step: defining equations of the image of a variety in
// the codimension-1 subtorus selected by a split.

#include <map>
#include <vector>

#include "goodfan/laurent.hpp"

namespace goodfan {

// Determinant of a square matrix over the Laurent ring: cofactor expansion up
// to 6x6, fraction-free elimination with exact division above that.
LaurentPolynomial poly_determinant(std::vector<std::vector<LaurentPolynomial>> m,
                                   int coeff_rank);

// Sylvester resultant with declared degrees p >= deg P, q >= deg Q: the
// (p+q) x (p+q) determinant with q rows of P's coefficients (descending, one
// shift per row) above p rows of Q's. Degenerate conventions follow from the
// matrix shape: q = 0 gives (Q's constant)^p, p = 0 gives (P's constant)^q.
// Padding both leading coefficients to zero makes the resultant vanish.
LaurentPolynomial resultant(const UnivariatePoly& P, const UnivariatePoly& Q,
                            int p, int q);

struct LambdaPoly {
    int parameters = 0;  // number of lambda variables
    // lambda exponent multi-index -> coefficient in the kernel ring; nonzero
    // coefficients only; homogeneous of total lambda-degree deg P
    std::map<IntVec, LaurentPolynomial> terms;
};

// Resultant of P against Q_lambda = lambda_1 Q_1 + ... + lambda_N Q_N,
// expanded as a polynomial in lambda. Declared degrees: deg P and the maximum
// of the Q degrees.
LambdaPoly parametric_resultant(const UnivariatePoly& P,
                                const std::vector<UnivariatePoly>& Qs);

// Drops zeros, reduces each equation to its unit normal form, deduplicates,
// and returns the survivors in canonical order.
std::vector<LaurentPolynomial> prune_equations(const std::vector<LaurentPolynomial>& eqs);

// Defining equations of the projection of {system = 0} onto the subtorus
// selected by the split: all coefficients of the parametric resultant of the
// pivot (the first equation) against the rest, pruned. The split's covector
// must be weakly generic for the pivot's Newton polytope; the projection then
// preserves dimension.
std::vector<LaurentPolynomial> projection_equations(
    const std::vector<LaurentPolynomial>& system, const TorusSplit& split);

}  // namespace goodfan
