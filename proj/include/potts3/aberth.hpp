#ifndef POTTS3_ABERTH_HPP
#define POTTS3_ABERTH_HPP

#include "potts3/bigfloat.hpp"
#include "potts3/rootisol.hpp"

#include <vector>

namespace potts3 {

struct NumericRoot {
    BigComplex value;
    BigFloat error_radius;  // a posteriori bound n * |p(z)/p'(z)|
};

// All complex roots of a univariate polynomial by simultaneous Aberth–Ehrlich
// iteration, seeded on a scaled circle. `digits` is the requested decimal
// accuracy; the returned radii certify |z - root| at evidence level for
// simple roots (callers square-free their input first). Throws if the
// iteration budget is exhausted before residuals reach the target.
std::vector<NumericRoot> complex_roots_numeric(const UCPoly& p, unsigned digits);

}  // namespace potts3

#endif
