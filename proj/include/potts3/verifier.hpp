#ifndef POTTS3_VERIFIER_HPP
#define POTTS3_VERIFIER_HPP

#include "potts3/dde.hpp"
#include "potts3/fixtures.hpp"
#include "potts3/hensel.hpp"
#include "potts3/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace potts3 {

struct VerificationReport {
    std::string check;
    std::string params;
    int order = 0;
    bool pass = false;
    std::string witness;  // first failing coefficient when pass is false
};

// PolyNu as a series scalar (symbolic-nu pipelines are division-free).
inline bool s_is_zero(const PolyNu& x) { return x.is_zero(); }
template <>
inline PolyNu s_from_rat<PolyNu>(const Rat& r) {
    return PolyNu(r);
}
PolyNu s_div(const PolyNu& a, const PolyNu& b);
std::optional<PolyNu> s_sqrt(const PolyNu&);

// Engine output as a truncated series: S = Rat for numeric runs, PolyNu for
// symbolic-nu runs (q must already be numeric).
template <class S>
Series<S> engine_series(const EngineResult& r, int i);

// Fixture (vars subset of {nu, w, z}) as a polynomial in z with w-series
// coefficients; nu_value empty means keep nu symbolic (S = PolyNu).
template <class S>
XPoly<S> fixture_in_z(const MultiPoly& fix, const std::optional<Coef>& nu_value, int order);

// Substitutes `series` for z in the fixture and reports whether the result
// is O(w^{order+1}).
template <class S>
VerificationReport check_annihilation(const std::string& name, const MultiPoly& fix,
                                      const std::optional<Coef>& nu_value,
                                      const Series<S>& series);

// The seven coefficient series of the degree-six Chebyshev identity,
// recovered from the even y-powers of the identity multiplied by y^12 and
// certified by the vanishing of the odd-power residuals.
template <class S>
struct CBundle {
    std::vector<Series<S>> C;  // C[0..6]
    bool odd_residuals_vanish = true;
    std::string witness;
};

// ty[i] = w-series of the y^i coefficient of T(y), i = 0..12 required.
template <class S>
CBundle<S> compute_C_bundle(const std::vector<Series<S>>& ty, const S& nu);

struct Prop4Report {
    bool x7_cancels = false;
    Series<Rat> S1, P1, S3, P3;
    bool printed_match = false;  // constant..w^2 against the printed values
    bool remainders_vanish = false;
    std::string witness;
};

// Forms D C' - 3 D' C from the bundle, lifts both quadratic factors from
// their rational seeds, and verifies the remainder/divisibility identities.
Prop4Report check_prop4(const CBundle<Rat>& bundle, const Rat& nu, int order);

// Linear recovery of C0..C3 from rem(D C' - 3 D' C, (x^2-S1x+P1)(x^2-S3x+P3)) = 0
// with C4..C6 taken from their closed forms; returns the four series.
std::vector<Series<Rat>> solve_C_linear(const Series<Rat>& S1, const Series<Rat>& P1,
                                        const Series<Rat>& S3, const Series<Rat>& P3,
                                        const Rat& nu);

struct ParametrizationReport {
    bool t1dot_matches_newton = false;
    bool w_branch_recovered = false;
    bool s1_closed_form_matches = false;
    Coef delta_constant_term;
    std::string witness;
};

ParametrizationReport check_parametrization(const FixtureSet& fs, const Rat& nu,
                                            int newton_order, int s1_order,
                                            const Series<Rat>& engine_t1,
                                            const Series<Rat>& lifted_s1);

// Writes T(y) = w + T1 y + ... + T7 y^7 + y^8 S(y) into the one-catalytic
// equation and solves for T8..T_{i_hi} coefficient-by-coefficient in y; the
// linear pivot is asserted to be the constant 36 nu^15.
std::vector<Series<Rat>> extract_higher_ti(const FixtureSet& fs, const Rat& nu,
                                           const std::vector<Series<Rat>>& ti_low,
                                           int i_hi);

// Evaluates the one-catalytic equation on T(y) data through y^{y_ord} and
// returns the y-indexed residual series (all zero on pass).
std::vector<Series<Rat>> one_catalytic_residual(const FixtureSet& fs, const Rat& nu,
                                                const std::vector<Series<Rat>>& ty,
                                                int y_ord);

// The battery of special-value identities (nu = 0 closed forms, nu = 1
// cubics, nu T2 = T1, duality coefficients, oracle agreement).
std::vector<VerificationReport> check_special_values(const FixtureSet& fs);

// Coefficient bounds relating T_i to T_1 for numeric nu > 0:
// nu^{2i-2} [w^{n-i+1}] T_1 <= [w^n] T_i <= [w^n] T_1 / min(1,nu)^{i-1}.
VerificationReport check_ti_bounds(const EngineResult& run, const Rat& nu, int i_max);

}  // namespace potts3

#endif
