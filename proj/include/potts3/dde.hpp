#ifndef POTTS3_DDE_HPP
#define POTTS3_DDE_HPP

#include "potts3/multipoly.hpp"
#include "potts3/polynu.hpp"

#include <functional>
#include <string>
#include <vector>

namespace potts3 {

// Mode of the two-catalytic series engine. Symbolic q implies symbolic nu.
struct EngineSpec {
    bool q_symbolic = false;
    bool nu_symbolic = false;
    Rat q = Rat(3);
    Coef nu = Coef(1);  // rational or quadratic-extension value
    int n_max = 4;      // exact w-coefficients of T(y) up to w^{n_max}
    int i_max = 4;      // exact y-coefficients T_0..T_{i_max}
    bool profile = false;
};

// T(y) through w^{n_max} and y^{i_max}: ti[i].coeffs[n] = [y^i w^n] T(y),
// as a MultiPoly in (q, nu) (constant when the mode is numeric).
struct EngineResult {
    EngineSpec spec;
    int t_order = 0;
    std::vector<std::string> coeff_vars;      // {"q","nu"}
    std::vector<std::vector<MultiPoly>> ti;   // [i][n]
    std::vector<size_t> per_order_nonzeros;   // profiling, indexed by t-order
    std::vector<double> per_order_seconds;
};

EngineResult compute_T(const EngineSpec& spec);

// Convenience: the w-series of T_i at numeric parameters, as Coef values.
std::vector<Coef> ti_series_coef(const EngineResult& r, int i);

// K_i(q, nu, w) = q/(nu-1)^{i+3} T_i(q, nu_*, (nu-1)^3 w / q), the Potts
// series of near-cubic maps; needs an engine run at nu_* = 1 + q/(nu-1).
struct DualSeries {
    Coef nu_star;
    std::vector<Coef> coeffs;  // [n] = [w^n] K_i
};
DualSeries dualize_series(const Rat& q, const Coef& nu, int i, int n_max);

// Annihilating polynomial of dK1/dw from an annihilating polynomial of
// dT1/dw (variables nu, w, z): substitutes nu -> 1 + q/(nu-1) (q = 3),
// z -> (nu-1) z, w -> (nu-1)^3 w / 3, clears denominators, removes content.
// With `nu_value` set, performs the substitution at that numeric value
// instead and returns a polynomial in (w, z).
MultiPoly dualize_polynomial(const MultiPoly& t1dot_annihilator);
MultiPoly dualize_polynomial_at(const MultiPoly& t1dot_annihilator, const Coef& nu_value);

}  // namespace potts3

#endif
