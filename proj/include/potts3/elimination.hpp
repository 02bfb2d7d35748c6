#ifndef POTTS3_ELIMINATION_HPP
#define POTTS3_ELIMINATION_HPP

#include "potts3/multipoly.hpp"

#include <utility>
#include <vector>

namespace potts3 {

// Exact quotient a/b; throws std::domain_error if b does not divide a.
MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b);

// Resultant with respect to `var`, computed by a subresultant
// polynomial-remainder sequence (fraction-free, Brown's g/h bookkeeping) to
// control coefficient growth. Equals the determinant of the Sylvester matrix.
MultiPoly resultant(const MultiPoly& a, const MultiPoly& b, const std::string& var);

// Dense Sylvester-matrix determinant via fraction-free Bareiss elimination.
// Reference route for cross-checking `resultant` on small inputs.
MultiPoly sylvester_resultant(const MultiPoly& a, const MultiPoly& b, const std::string& var);

// (-1)^{n(n-1)/2} Res_var(p, dp/dvar) / lc_var(p). Requires deg_var(p) >= 2.
MultiPoly discriminant(const MultiPoly& p, const std::string& var);

// GCD of univariate polynomials over the coefficient field (monic Euclid).
std::vector<Coef> gcd_univariate(std::vector<Coef> a, std::vector<Coef> b);

// Multivariate GCD over Q by primitive PRS recursion on the variable list.
// Result is primitive with positive leading rational coefficient.
MultiPoly gcd_poly(const MultiPoly& a, const MultiPoly& b);

struct SquarefreeFactor {
    MultiPoly factor;
    uint32_t multiplicity;
};

// Yun decomposition with respect to `var`: p = unit * prod factor^multiplicity,
// factors pairwise coprime and square-free in `var`, each primitive when the
// coefficients are rational (monic leading-coefficient normalization over a
// quadratic extension).
struct SquarefreeDecomposition {
    std::vector<SquarefreeFactor> factors;
    MultiPoly unit;  // free of `var`
};
SquarefreeDecomposition squarefree_decompose(const MultiPoly& p, const std::string& var);

}  // namespace potts3

#endif
