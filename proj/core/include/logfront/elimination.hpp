#pragma once

#include <utility>
#include <vector>

#include "logfront/poly.hpp"

namespace logfront {

// p viewed as a univariate polynomial in v: index k holds the coefficient of
// v^k (a polynomial free of v). Zero polynomial yields an empty vector.
std::vector<SparsePoly> coefficients_in(const SparsePoly& p, Var v);
SparsePoly from_coefficients(const std::vector<SparsePoly>& coeffs, Var v);
SparsePoly leading_coeff_in(const SparsePoly& p, Var v);

// Pseudo-remainder: lc(B)^(deg A - deg B + 1) * A = Q*B + R with deg_v R < deg_v B.
// Precondition: deg_v A >= deg_v B >= 0, B nonzero in v-degree >= 0.
SparsePoly pseudo_remainder(const SparsePoly& A, const SparsePoly& B, Var v);

// Resultant of p and q with respect to v. Two independent fraction-free
// routes; both produce the exact resultant (sign included).
//   resultant          - pseudo-remainder recursion with exact power divisions
//   resultant_sylvester - Bareiss elimination on the Sylvester matrix
// Precondition: at least one input has positive v-degree.
SparsePoly resultant(const SparsePoly& p, const SparsePoly& q, Var v);
SparsePoly resultant_sylvester(const SparsePoly& p, const SparsePoly& q, Var v);

// Content of p with respect to v: gcd of the v-coefficients.
SparsePoly content_in(const SparsePoly& p, Var v);
SparsePoly primitive_part_in(const SparsePoly& p, Var v);

// Multivariate gcd over Q, canonical unit normalized (integer-primitive,
// positive grlex leading coefficient). gcd(0, q) = canonical q.
SparsePoly poly_gcd(const SparsePoly& p, const SparsePoly& q);

// Yun decomposition with respect to v in characteristic zero:
//   p = content * prod factors[k].first ^ factors[k].second
// with each factor square-free and primitive in v, factors pairwise coprime,
// multiplicities strictly increasing. content is free of v.
struct SquarefreeDecomposition {
    SparsePoly content;
    std::vector<std::pair<SparsePoly, int>> factors;
};
SquarefreeDecomposition squarefree_decomposition(const SparsePoly& p, Var v);

// Number of distinct real roots of a nonzero univariate polynomial,
// by Sturm's sequence over the whole real line.
int sturm_real_roots(const SparsePoly& p);

}  // namespace logfront
