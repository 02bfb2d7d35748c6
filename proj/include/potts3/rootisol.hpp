#ifndef POTTS3_ROOTISOL_HPP
#define POTTS3_ROOTISOL_HPP

#include "potts3/coeff.hpp"

#include <vector>

namespace potts3 {

struct RationalInterval {
    Rat low, high;
    bool is_point() const { return low == high; }
    Rat mid() const { return (low + high) / 2; }
    Rat width() const { return high - low; }
    bool contains(const Rat& x) const { return low <= x && x <= high; }
};

// Dense univariate polynomial over Q or Q(sqrt d), index = power.
using UCPoly = std::vector<Coef>;

int uc_degree(const UCPoly& p);
Coef uc_eval(const UCPoly& p, const Rat& x);
UCPoly uc_derivative(const UCPoly& p);

// Isolating intervals for all real roots of a square-free polynomial,
// by Descartes-rule bisection (Vincent–Collins–Akritas) with exact sign
// evaluation; Q(sqrt d) coefficients are handled by exact quadratic-field
// sign tests. Exact rational roots come back as point intervals. Throws on
// non-square-free input.
std::vector<RationalInterval> isolate_real_roots(const UCPoly& p);

// Shrinks an isolating interval below `width` by sign-change bisection.
RationalInterval refine_root(const UCPoly& p, RationalInterval iv, const Rat& width);

}  // namespace potts3

#endif
