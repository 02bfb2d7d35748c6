#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "potts3/elimination.hpp"
#include "potts3/fixtures.hpp"

using namespace potts3;

namespace {

const FixtureSet& fixtures() {
    static FixtureSet fs;
    return fs;
}

// nu_c = 1 + 3/sqrt(47) = 1 + (3/47) sqrt(47)
Coef nu_c() { return Coef(Rat(1), Rat(3, 47), 47); }
// rho at nu_c: (1295 sqrt(47) - 7875)/109744
Coef rho_nu_c() { return Coef(Rat(-7875, 109744), Rat(1295, 109744), 47); }

}  // namespace

TEST_CASE("every fixture passes its structural checksum at load") {
    auto& fs = fixtures();
    CHECK(fs.names().size() == 27);
    auto& eq1 = fs.get("t1dot_minpoly");
    CHECK(eq1.polynomial.monomial_count() == 117);
    CHECK(eq1.polynomial.degree("z") == 11);
    CHECK(eq1.polynomial.degree("w") == 2);
    CHECK(eq1.polynomial.degree("nu") == 7);
    CHECK(fs.poly("one_catalytic").degree("Ty") == 5);
    CHECK(fs.poly("delta1").degree("rho") == 5);
    CHECK(fs.poly("delta2").degree("rho") == 9);
}

TEST_CASE("integer content is 1 except for the printed 9/2 prefactor") {
    auto& fs = fixtures();
    for (auto& name : fs.names()) {
        Rat c = fs.poly(name).rational_content();
        if (c < 0) c = -c;
        // printed prefactors kept verbatim
        if (name == "c4_closed")
            CHECK(c == Rat(9, 2));
        else if (name == "c6_closed" || name == "c5_closed")
            CHECK(c == Rat(27));
        else if (name == "s1_sqrt_coef")
            CHECK(c == Rat(3));
        else if (name == "s1_denominator")
            CHECK(c == Rat(2));
        else
            CHECK(c == Rat(1));
    }
}

TEST_CASE("annihilator is well-posed at the origin") {
    auto& p = fixtures().poly("t1dot_minpoly");
    // value at z=0, w=0 vanishes
    auto at0 = p.eval_var("z", Coef(0)).eval_var("w", Coef(0));
    CHECK(at0.is_zero());
    // d/dz at the origin equals nu(104 nu^4 + 189 nu^3 + 177 nu^2 + 67 nu + 3)
    auto dz = p.derivative("z").eval_var("z", Coef(0)).eval_var("w", Coef(0));
    const std::vector<std::string> V = p.vars();
    auto nu = MultiPoly::var(V, "nu");
    auto c = [&](long n) { return MultiPoly::constant(V, Coef(n)); };
    auto expect = nu * (nu.pow(4).scaled(Coef(104)) + nu.pow(3).scaled(Coef(189)) +
                        nu.pow(2).scaled(Coef(177)) + nu.scaled(Coef(67)) + c(3));
    CHECK(dz == expect);
    // ... and is positive for sampled nu > 0 (simple-root seed)
    for (Rat v : {Rat(1, 3), Rat(1), Rat(2), Rat(5)})
        CHECK(dz.eval_var("nu", Coef(v)).terms().front().c.sign() == 1);
}

TEST_CASE("exact radius memberships in quadratic extensions") {
    auto& fs = fixtures();
    // Delta_1(1, sqrt(3)/108) = 0 in Q(sqrt 3)
    auto d1_at1 = fs.delta_at("delta1", Coef(1));
    Coef rho1(Rat(0), Rat(1, 108), 3);
    {
        Coef acc(0);
        for (size_t i = d1_at1.size(); i-- > 0;) acc = acc * rho1 + d1_at1[i];
        CHECK(acc.is_zero());
    }
    // Delta_1(nu_c, rho_{nu_c}) = 0 and Delta_2(nu_c, rho_{nu_c}) = 0 in Q(sqrt 47)
    for (const char* name : {"delta1", "delta2"}) {
        auto d = fs.delta_at(name, nu_c());
        Coef acc(0);
        for (size_t i = d.size(); i-- > 0;) acc = acc * rho_nu_c() + d[i];
        CHECK(acc.is_zero());
    }
}

TEST_CASE("nu_d = 1 - 12/sqrt(127) is a double-root point of delta1") {
    auto& fs = fixtures();
    Coef nu_d(Rat(1), Rat(-12, 127), 127);
    // rho_{nu_d} = (5/(4*17^3)) (3*5^2*7 + 13*43*sqrt(127)/12)
    Coef rho_d(Rat(5 * 525, 19652), Rat(5 * 559, 19652 * 12), 127);
    auto d = fs.delta_at("delta1", nu_d);
    Coef acc(0);
    for (size_t i = d.size(); i-- > 0;) acc = acc * rho_d + d[i];
    CHECK(acc.is_zero());
    auto dp = uc_derivative(d);
    Coef acc2(0);
    for (size_t i = dp.size(); i-- > 0;) acc2 = acc2 * rho_d + dp[i];
    CHECK(acc2.is_zero());
}

TEST_CASE("cubic-maps radius membership at nu = 1 + sqrt(47)") {
    auto& fs = fixtures();
    // beta = nu - 1 = sqrt(47); rho = 3885/5157968 - 23625 sqrt(47)/242424496
    auto p = fs.poly("delta1_cubic");
    Coef beta(Rat(0), Rat(1), 47);
    Coef rho(Rat(3885, 5157968), Rat(-23625, 242424496), 47);
    auto uc = to_ucpoly(p.eval_var("beta", beta), "rho");
    Coef acc(0);
    for (size_t i = uc.size(); i-- > 0;) acc = acc * rho + uc[i];
    CHECK(acc.is_zero());
}

TEST_CASE("substitution identities tie the cubic-map curves to the triangulation curves") {
    auto& fs = fixtures();
    // Delta~_1(nu, rho) = (nu-1)^12/729 Delta_1((nu+2)/(nu-1), (nu-1)^3 rho/3)
    {
        auto d1 = FixtureSet::expand_beta(fs.poly("delta1"));
        auto d1t = FixtureSet::expand_beta(fs.poly("delta1_cubic"));
        const auto vars = d1.vars();  // {nu, rho}
        auto nu = MultiPoly::var(vars, "nu");
        auto one = MultiPoly::constant(vars, Coef(1));
        uint32_t dn = d1.degree("nu");
        auto step1 = d1.subst_var_rational("nu", nu + one.scaled(Coef(2)), nu - one);
        auto step2 =
            step1.subst_var_rational("rho", (nu - one).pow(3) * MultiPoly::var(vars, "rho"),
                                     one.scaled(Coef(3)));
        // step2 = 3^5 (nu-1)^dn Delta_1(...) and Delta_1(...) = 729 (nu-1)^{-12} Delta~_1
        Rat pw3 = pow_rat(Rat(3), 5);
        auto rhs = d1t.lifted(vars).scaled(Coef(pw3 * 729)) *
                   (nu - one).pow(dn - 12);
        CHECK(step2 == rhs);
    }
    // Delta~_2(nu, rho) = (nu-1)^17 Delta_2((nu+2)/(nu-1), (nu-1)^3 rho/3)
    {
        auto d2 = FixtureSet::expand_beta(fs.poly("delta2"));
        auto d2t = FixtureSet::expand_beta(fs.poly("delta2_cubic"));
        const auto vars = d2.vars();
        auto nu = MultiPoly::var(vars, "nu");
        auto one = MultiPoly::constant(vars, Coef(1));
        uint32_t dn = d2.degree("nu");
        auto step1 = d2.subst_var_rational("nu", nu + one.scaled(Coef(2)), nu - one);
        auto step2 =
            step1.subst_var_rational("rho", (nu - one).pow(3) * MultiPoly::var(vars, "rho"),
                                     one.scaled(Coef(3)));
        Rat pw3 = pow_rat(Rat(3), 9);
        auto rhs = d2t.lifted(vars).scaled(Coef(pw3)) * (nu - one).pow(dn - 17);
        CHECK(step2 == rhs);
    }
}

TEST_CASE("unknown fixture and checksum errors are loud") {
    CHECK_THROWS(fixtures().get("no_such_fixture"));
}
