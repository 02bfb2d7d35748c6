#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "potts3/elimination.hpp"
#include "potts3/hensel.hpp"
#include "potts3/series.hpp"

using namespace potts3;

namespace {

Series<Rat> from_longs(std::vector<long> v) {
    std::vector<Rat> c;
    for (long x : v) c.emplace_back(x);
    return Series<Rat>(std::move(c));
}

// Independent binomial-series oracle for (1+a*w)^{expo}.
Series<Rat> binomial_series(const Rat& a, const Rat& expo, int order) {
    Series<Rat> r(order);
    Rat term(1);
    r.at(0) = term;
    for (int k = 1; k <= order; ++k) {
        term *= (expo - Rat(k - 1)) * a / Rat(k);
        r.at(k) = term;
    }
    return r;
}

}  // namespace

TEST_CASE("geometric inverse") {
    auto f = from_longs({1, -1, 0, 0, 0});
    CHECK(f.inverse() == from_longs({1, 1, 1, 1, 1}));
    CHECK_THROWS(from_longs({0, 1}).inverse());
}

TEST_CASE("order bookkeeping takes the minimum") {
    auto a = from_longs({1, 2, 3});
    auto b = from_longs({1, 1, 1, 1, 1});
    CHECK((a * b).order() == 2);
    CHECK((a + b).order() == 2);
    CHECK((a / b).order() == 2);
    CHECK_THROWS(a.truncated(5));
}

TEST_CASE("sqrt of a perfect square and of a binomial") {
    auto f = from_longs({1, 2, 1, 0, 0});
    CHECK(f.sqrt() == from_longs({1, 1, 0, 0, 0}));
    int n = 12;
    Series<Rat> g(n);
    g.at(0) = Rat(1);
    g.at(1) = Rat(-4);
    auto sq = g.sqrt();
    auto oracle = binomial_series(Rat(-4), Rat(1, 2), n);
    CHECK(sq == oracle);
    CHECK(sq.coeffs()[1] == Rat(-2));
    CHECK(sq.coeffs()[2] == Rat(-2));
    CHECK(sq.coeffs()[3] == Rat(-4));
    CHECK((sq * sq - g).is_zero());
    Series<Rat> h(3);
    h.at(0) = Rat(2);
    CHECK_THROWS(h.sqrt());
}

TEST_CASE("even valuation square roots") {
    Series<Rat> g(10);
    g.at(2) = Rat(1);
    g.at(3) = Rat(-4);
    auto s = g.sqrt();
    CHECK(s.order() == 9);
    auto p = s * s;
    for (int i = 0; i <= p.order(); ++i) CHECK(p[i] == g[i]);
}

TEST_CASE("composition") {
    auto f = from_longs({1, 1, 1, 1, 1, 1});
    auto u = from_longs({0, 1, 1, 0, 0, 0});
    CHECK(f.compose(u) == from_longs({1, 1, 2, 3, 5, 8}));
}

TEST_CASE("newton algebraic series: z^2 - z + w") {
    // Oracle: matching z = w + z^2 order by order gives the recurrence
    // c_1 = 1, c_n = sum_{i+j=n, i,j>=1} c_i c_j.
    int n = 16;
    XPoly<Rat> P(3, Series<Rat>(n));
    P[0].at(1) = Rat(1);
    P[1] = Series<Rat>::constant(Rat(-1), n);
    P[2] = Series<Rat>::constant(Rat(1), n);
    auto z = newton_algebraic_series(P, Rat(0), n);
    std::vector<Rat> oracle(static_cast<size_t>(n) + 1, Rat(0));
    oracle[1] = Rat(1);
    for (int k = 2; k <= n; ++k) {
        Rat acc(0);
        for (int i = 1; i < k; ++i)
            acc += oracle[static_cast<size_t>(i)] * oracle[static_cast<size_t>(k - i)];
        oracle[static_cast<size_t>(k)] = acc;
    }
    for (int k = 0; k <= n; ++k) CHECK(z[k] == oracle[static_cast<size_t>(k)]);
    CHECK(z[4] == Rat(5));
    CHECK(xeval(P, z).is_zero());
    // derivative matches -P_w / P_z
    auto Pz = xderiv(P);
    Series<Rat> pw = Series<Rat>::constant(Rat(1), n - 1);
    auto lhs = z.derivative();
    auto rhs = -(pw / xeval(Pz, z).truncated(n - 1));
    CHECK(lhs == rhs);
    XPoly<Rat> Q(3, Series<Rat>(4));
    Q[0].at(1) = Rat(-1);
    Q[2] = Series<Rat>::constant(Rat(1), 4);
    CHECK_THROWS(newton_algebraic_series(Q, Rat(0), 4));
}

TEST_CASE("hensel lift: trivial quadratic factor") {
    int n = 8;
    XPoly<Rat> F(3, Series<Rat>(n));
    F[0].at(0) = Rat(-1);
    F[0].at(1) = Rat(-1);
    F[2] = Series<Rat>::constant(Rat(1), n);
    auto lift = hensel_quadratic_lift(F, Rat(0), Rat(-1));
    CHECK(lift.sum.is_zero());
    Series<Rat> expect(n);
    expect.at(0) = Rat(-1);
    expect.at(1) = Rat(-1);
    CHECK(lift.product == expect);
}

TEST_CASE("hensel lift: split a quartic and check the remainder property") {
    int n = 10;
    auto mk = [&](std::vector<std::vector<long>> coeffs) {
        XPoly<Rat> p;
        for (auto& cs : coeffs) {
            Series<Rat> s(n);
            for (size_t i = 0; i < cs.size(); ++i) s.at(static_cast<int>(i)) = Rat(cs[i]);
            p.push_back(s);
        }
        return p;
    };
    auto A = mk({{-1, -1}, {0}, {1}});
    auto B = mk({{2, 3, 1}, {1}, {1}});
    auto F = xmul(A, B);
    auto lift = hensel_quadratic_lift(F, Rat(0), Rat(-1));
    CHECK(lift.sum.is_zero());
    Series<Rat> expectP(n);
    expectP.at(0) = Rat(-1);
    expectP.at(1) = Rat(-1);
    CHECK(lift.product == expectP);
    XPoly<Rat> quad(3, Series<Rat>(n));
    quad[0] = lift.product;
    quad[1] = -lift.sum;
    quad[2] = Series<Rat>::constant(Rat(1), n);
    auto [q, r] = xdivmod_monic(F, quad);
    (void)q;
    for (auto& s : r) CHECK(s.is_zero());
    CHECK(xdeg(lift.cofactor) == 2);
    CHECK(lift.cofactor[0] == B[0]);
    auto F2 = xmul(mk({{-1}, {0}, {1}}), mk({{-1}, {0}, {1}}));
    CHECK_THROWS_AS(hensel_quadratic_lift(F2, Rat(0), Rat(-1)), HenselError);
    CHECK_THROWS_AS(hensel_quadratic_lift(F, Rat(0), Rat(7)), HenselError);
}

TEST_CASE("chebyshev-6 expansion in square-root-free form") {
    // T6(u) = 32u^6 - 48u^4 + 18u^2 - 1 at u = N/(2 sqrt(D)) gives
    // D^3 T6 = N^6/2 - 3 N^4 D + (9/2) N^2 D^2 - D^3.
    std::vector<std::string> V = {"N", "D", "t"};
    auto N = MultiPoly::var(V, "N"), D = MultiPoly::var(V, "D");
    auto t = MultiPoly::var(V, "t");
    // Even part: T6(u) = G(u^2) with G(t) = 32t^3 - 48t^2 + 18t - 1.
    auto G2 = t.pow(3).scaled(Coef(32)) - t.pow(2).scaled(Coef(48)) + t.scaled(Coef(18)) -
              MultiPoly::constant(V, Coef(1));
    // t := N^2/(4D), cleared by (4D)^3; then D^3 G(N^2/(4D)) = cleared / 64.
    auto cleared = G2.subst_var_rational("t", N * N, D.scaled(Coef(4)));
    auto lhs = cleared.scaled(Coef(Rat(1, 64)));
    auto rhs = N.pow(6).scaled(Coef(Rat(1, 2))) - N.pow(4) * D.scaled(Coef(3)) +
               N.pow(2) * D.pow(2).scaled(Coef(Rat(9, 2))) - D.pow(3);
    CHECK(lhs == rhs);
}
