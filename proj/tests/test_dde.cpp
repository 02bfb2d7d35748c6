#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "potts3/dde.hpp"

using namespace potts3;

namespace {

const std::vector<std::string> QN = {"q", "nu"};

MultiPoly Qv() { return MultiPoly::var(QN, "q"); }
MultiPoly Nv() { return MultiPoly::var(QN, "nu"); }
MultiPoly C(long n) { return MultiPoly::constant(QN, Coef(n)); }

// Binomial oracle for (1+a*w)^{expo}.
std::vector<Rat> binomial(const Rat& a, const Rat& expo, int order) {
    std::vector<Rat> r(static_cast<size_t>(order) + 1);
    Rat term(1);
    r[0] = term;
    for (int k = 1; k <= order; ++k) {
        term *= (expo - Rat(k - 1)) * a / Rat(k);
        r[static_cast<size_t>(k)] = term;
    }
    return r;
}

}  // namespace

TEST_CASE("fully symbolic low order: T(y) = w + y(q-1+nu)(nu+y)w^2") {
    EngineSpec spec;
    spec.q_symbolic = true;
    spec.nu_symbolic = true;
    spec.n_max = 2;
    spec.i_max = 3;
    auto r = compute_T(spec);
    auto q = Qv(), nu = Nv();
    CHECK(r.ti[0][1] == C(1));
    CHECK(r.ti[0][2].is_zero());
    CHECK(r.ti[1][2] == nu * (q - C(1) + nu));
    CHECK(r.ti[2][2] == q - C(1) + nu);
    CHECK(r.ti[3][2].is_zero());
    CHECK(r.ti[1][1].is_zero());
}

TEST_CASE("fully symbolic [w^3]T_1 matches the printed bracket") {
    EngineSpec spec;
    spec.q_symbolic = true;
    spec.nu_symbolic = true;
    spec.n_max = 3;
    spec.i_max = 1;
    auto r = compute_T(spec);
    auto q = Qv(), nu = Nv();
    auto A = q - C(1) + nu;
    auto B = q - C(1) + nu * nu;
    auto expect = nu * ((q - C(1)) * (q - C(2) + nu.scaled(Coef(2))) + nu * nu * B +
                        nu.scaled(Coef(2)) * A * B + nu * nu * A * A);
    CHECK(r.ti[1][3] == expect);
    CHECK(r.ti[1][2] == nu * A);
}

TEST_CASE("T_0 = w at every computed order") {
    EngineSpec spec;
    spec.nu = Coef(2);
    spec.n_max = 7;
    spec.i_max = 0;
    auto r = compute_T(spec);
    CHECK(r.ti[0][1] == C(1));
    for (int n = 2; n <= 7; ++n) CHECK(r.ti[0][static_cast<size_t>(n)].is_zero());
}

TEST_CASE("nu T_2 = T_1 symbolically at q = 3") {
    EngineSpec spec;
    spec.nu_symbolic = true;
    spec.q = Rat(3);
    spec.n_max = 5;
    spec.i_max = 2;
    auto r = compute_T(spec);
    auto nu = Nv();
    for (int n = 1; n <= 5; ++n)
        CHECK(nu * r.ti[2][static_cast<size_t>(n)] == r.ti[1][static_cast<size_t>(n)]);
}

TEST_CASE("mode consistency: symbolic specialized equals numeric") {
    EngineSpec sym;
    sym.nu_symbolic = true;
    sym.q = Rat(3);
    sym.n_max = 5;
    sym.i_max = 3;
    auto rs = compute_T(sym);
    for (Rat v : {Rat(3, 2), Rat(0), Rat(1), Rat(5)}) {
        EngineSpec num;
        num.nu = Coef(v);
        num.q = Rat(3);
        num.n_max = 5;
        num.i_max = 3;
        auto rn = compute_T(num);
        for (int i = 0; i <= 3; ++i)
            for (int n = 1; n <= 5; ++n) {
                auto spec2 = rs.ti[static_cast<size_t>(i)][static_cast<size_t>(n)].eval_var(
                    "nu", Coef(v));
                CHECK(spec2 == rn.ti[static_cast<size_t>(i)][static_cast<size_t>(n)]);
            }
    }
}

TEST_CASE("positivity at q=3, numeric nu>0, and first-coefficient floor") {
    EngineSpec spec;
    spec.nu = Coef(Rat(1, 2));
    spec.n_max = 6;
    spec.i_max = 4;
    auto r = compute_T(spec);
    for (int i = 0; i <= 4; ++i)
        for (int n = 1; n <= 6; ++n) {
            auto& p = r.ti[static_cast<size_t>(i)][static_cast<size_t>(n)];
            if (!p.is_zero()) CHECK(p.terms().front().c.sign() > 0);
        }
    for (int i = 1; i <= 4; ++i) CHECK(r.ti[static_cast<size_t>(i)][1].is_zero());
}

TEST_CASE("nu = 0: T_2 matches the proper-colouring closed form") {
    // T_2(0, w) = ((1-8w)^{3/2} - 1 + 12w + 8w^2)/16
    EngineSpec spec;
    spec.nu = Coef(0);
    spec.q = Rat(3);
    spec.n_max = 9;
    spec.i_max = 3;
    auto r = compute_T(spec);
    auto b = binomial(Rat(-8), Rat(3, 2), 9);
    for (int n = 1; n <= 9; ++n) {
        Rat expect = b[static_cast<size_t>(n)] / 16;
        if (n == 1) expect += Rat(12, 16);
        if (n == 2) expect += Rat(8, 16);
        auto& p = r.ti[2][static_cast<size_t>(n)];
        Coef got = p.is_zero() ? Coef(0) : p.terms().front().c;
        CHECK(got == Coef(expect));
    }
    for (int n = 1; n <= 9; ++n) CHECK(r.ti[1][static_cast<size_t>(n)].is_zero());
    for (int n = 1; n <= 9; ++n) {
        auto lhs = r.ti[2][static_cast<size_t>(n)];
        auto rhs = r.ti[3][static_cast<size_t>(n)];
        if (n == 2) rhs += C(2);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("duality: K_1 at q=3, nu=0 starts 4w^3 + 84w^4 + 1872w^5") {
    auto d = dualize_series(Rat(3), Coef(0), 1, 5);
    CHECK(d.nu_star == Coef(-2));
    CHECK(d.coeffs[0].is_zero());
    CHECK(d.coeffs[1].is_zero());
    CHECK(d.coeffs[2].is_zero());
    CHECK(d.coeffs[3] == Coef(4));
    CHECK(d.coeffs[4] == Coef(84));
    CHECK(d.coeffs[5] == Coef(1872));
}

TEST_CASE("duality: K_1(3,0,w) = 3 T_1(3,-2,-w/3) coefficientwise") {
    EngineSpec spec;
    spec.nu = Coef(-2);
    spec.n_max = 6;
    spec.i_max = 1;
    auto r = compute_T(spec);
    auto t1 = ti_series_coef(r, 1);
    auto d = dualize_series(Rat(3), Coef(0), 1, 6);
    Rat scale(1);
    for (int n = 0; n <= 6; ++n) {
        CHECK(d.coeffs[static_cast<size_t>(n)] == Coef(3) * Coef(scale) * t1[static_cast<size_t>(n)]);
        scale /= -3;
    }
}

TEST_CASE("duality transform inverts exactly") {
    Rat q(3);
    Coef nu(Rat(5, 2));
    Coef nu_star = Coef(1) + Coef(q) / (nu - Coef(1));
    Coef back = Coef(1) + Coef(q) / (nu_star - Coef(1));
    CHECK(back == nu);
    int i = 2, n_max = 5;
    auto K = dualize_series(q, nu, i, n_max);
    EngineSpec spec;
    spec.nu = nu_star;
    spec.n_max = n_max;
    spec.i_max = i;
    auto r = compute_T(spec);
    auto t = ti_series_coef(r, i);
    // invert: T_i(nu_*, v) = (nu-1)^{i+3}/q K_i(nu, q v / (nu-1)^3)
    Coef m = nu - Coef(1);
    Coef pref = Coef(1);
    for (int k = 0; k < i + 3; ++k) pref = pref * m;
    pref = pref / Coef(q);
    Coef m3 = m * m * m;
    Coef scale(1);
    for (int n = 0; n <= n_max; ++n) {
        CHECK(pref * scale * K.coeffs[static_cast<size_t>(n)] == t[static_cast<size_t>(n)]);
        scale = scale * Coef(q) / m3;
    }
}

TEST_CASE("engine rejects nu = 1 duality pole") {
    CHECK_THROWS(dualize_series(Rat(3), Coef(1), 1, 3));
}

TEST_CASE("quadratic-extension nu runs") {
    EngineSpec spec;
    spec.nu = Coef(Rat(1), Rat(1), 2);
    spec.n_max = 3;
    spec.i_max = 1;
    auto r = compute_T(spec);
    Coef nu = spec.nu;
    Coef expect = nu * (Coef(2) + nu);
    CHECK(r.ti[1][2] == MultiPoly::constant(QN, expect));
}
