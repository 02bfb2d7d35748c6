#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "potts3/dartmap.hpp"
#include "potts3/dde.hpp"

#include <fstream>
#include <sstream>

using namespace potts3;

namespace {

const std::vector<std::string> QN = {"q", "nu"};

MultiPoly Qv() { return MultiPoly::var(QN, "q"); }
MultiPoly Nv() { return MultiPoly::var(QN, "nu"); }
MultiPoly C(long n) { return MultiPoly::constant(QN, Coef(n)); }

std::string fixture_path(const std::string& name) {
    return std::string(POTTS3_FIXTURE_DIR) + "/" + name;
}

DartMap load_map(const std::string& name) {
    std::ifstream f(fixture_path(name));
    REQUIRE(f.good());
    std::stringstream ss;
    ss << f.rdbuf();
    return dartmap_from_json(ss.str());
}

}  // namespace

TEST_CASE("atomic map: v_max=1, i=0 gives exactly the atomic map of weight w") {
    auto maps = enumerate_near_triangulations(1, 0);
    REQUIRE(maps.size() == 1);
    CHECK(maps[0].is_atomic());
    CHECK(maps[0].vertex_count() == 1);
    auto p = potts_polynomial(maps[0], 3);
    CHECK(p.eval(Rat(7)) == Rat(3));  // P = q for the single vertex
    CHECK(enumerate_near_triangulations(2, 0).empty());
    CHECK(enumerate_near_triangulations(3, 0).empty());
}

TEST_CASE("v=2 outer degree 1: single map of weight nu(q-1+nu) w^2") {
    auto maps = enumerate_near_triangulations(2, 1);
    REQUIRE(maps.size() == 1);
    auto q = Qv(), nu = Nv();
    auto P = potts_polynomial_qnu(maps[0]);
    CHECK(P == q * nu * (q - C(1) + nu));
}

TEST_CASE("v=3 outer degree 1: four maps, printed bracket total") {
    auto maps = enumerate_near_triangulations(3, 1);
    CHECK(maps.size() == 4);  // with the single v=2 map: the five drawn maps
    auto q = Qv(), nu = Nv();
    MultiPoly total(QN);
    for (auto& m : maps) total += potts_polynomial_qnu(m);
    auto A = q - C(1) + nu;
    auto B = q - C(1) + nu * nu;
    auto expect = nu * ((q - C(1)) * (q - C(2) + nu.scaled(Coef(2))) + nu * nu * B +
                        nu.scaled(Coef(2)) * A * B + nu * nu * A * A);
    CHECK(total == q * expect);
}

TEST_CASE("euler relations hold for every enumerated map") {
    for (int v = 1; v <= 4; ++v)
        for (int i = 1; i <= 4; ++i)
            for (auto& m : enumerate_near_triangulations(v, i)) {
                CHECK(m.vertex_count() == v);
                CHECK(m.face_count() == 2 * v - i - 1);
                CHECK(m.edges() == 3 * v - i - 3);
                CHECK(m.genus2() == 0);
                CHECK(m.outer_degree() == i);
            }
}

TEST_CASE("canonicalization is idempotent and separates maps") {
    auto maps = enumerate_near_triangulations(3, 2);
    REQUIRE(maps.size() == 4);
    for (auto& m : maps) {
        auto c = m.canonical_form();
        CHECK(c.canonical_code() == m.canonical_code());
        CHECK(c.canonical_form().canonical_code() == c.canonical_code());
    }
    for (size_t a = 0; a < maps.size(); ++a)
        for (size_t b = a + 1; b < maps.size(); ++b)
            CHECK(maps[a].canonical_code() != maps[b].canonical_code());
}

TEST_CASE("colouring count: P_M(q, 1) = q^v") {
    for (int v = 2; v <= 4; ++v)
        for (auto& m : enumerate_near_triangulations(v, 2)) {
            for (long q : {2L, 3L, 4L}) {
                Rat expect(1);
                for (int k = 0; k < v; ++k) expect *= q;
                CHECK(potts_polynomial(m, q).eval(Rat(1)) == expect);
            }
        }
}

TEST_CASE("dual: involution, v/f swap, per-map duality identity") {
    const std::vector<std::string> V3 = {"q", "nu", "nus"};
    auto nu3 = MultiPoly::var(V3, "nu"), nus3 = MultiPoly::var(V3, "nus");
    auto one3 = MultiPoly::constant(V3, Coef(1));
    auto qsub = (nu3 - one3) * (nus3 - one3);
    for (int v = 2; v <= 4; ++v)
        for (int i = 1; i <= 3; ++i)
            for (auto& m : enumerate_near_triangulations(v, i)) {
                auto d = m.dual();
                CHECK(d.vertex_count() == m.face_count());
                CHECK(d.face_count() == m.vertex_count());
                auto dd = d.dual();
                CHECK(dd.canonical_code() == m.canonical_code());
                // (nus-1)^{f-1} P_M(q,nu) = (nu-1)^{f*-1} P_M*(q,nus), q=(nu-1)(nus-1)
                auto PM = potts_polynomial_qnu(m).lifted(V3).subst_var("q", qsub);
                auto PMd = potts_polynomial_qnu(d)
                               .with_vars({"q", "nus"})
                               .lifted(V3)
                               .subst_var("q", qsub);
                auto lhs = (nus3 - one3).pow(static_cast<uint32_t>(m.face_count() - 1)) * PM;
                auto rhs = (nu3 - one3).pow(static_cast<uint32_t>(d.face_count() - 1)) * PMd;
                CHECK(lhs == rhs);
            }
}

TEST_CASE("figure map fixture reproduces both printed Potts polynomials") {
    auto m = load_map("figure_map.json");
    CHECK(m.vertex_count() == 3);
    CHECK(m.face_count() == 4);
    CHECK(m.outer_degree() == 4);
    CHECK(m.edges() == 5);
    auto q = Qv(), nu = Nv();
    auto bracket = (q - C(1)) * (q - C(2)) + (q - C(1)) * nu * nu +
                   (q - C(1)) * nu.scaled(Coef(2)) + nu.pow(4);
    CHECK(potts_polynomial_qnu(m) == q * nu * bracket);
    CHECK(potts_polynomial_qnu(m.dual()) == q * (q - C(1) + nu) * bracket);
    // brute-force colouring count at q=3, nu=1 (the full 3^3 colourings)
    CHECK(potts_polynomial(m, 3).eval(Rat(1)) == Rat(27));
}

TEST_CASE("oracle equals engine for q=3 symbolic nu through w^3") {
    EngineSpec spec;
    spec.nu_symbolic = true;
    spec.q = Rat(3);
    spec.n_max = 3;
    spec.i_max = 4;
    auto r = compute_T(spec);
    for (int i = 0; i <= 4; ++i) {
        auto s = oracle_series(i, 3, 3);
        for (int n = 1; n <= 3; ++n) {
            auto engine = r.ti[static_cast<size_t>(i)][static_cast<size_t>(n)].eval_var("q", Coef(3));
            CHECK(engine == s.coeffs[static_cast<size_t>(n)].eval_var("q", Coef(3)));
        }
    }
}

TEST_CASE("oracle T_0 equals w on the overlap") {
    auto s = oracle_series(0, 4, 3);
    CHECK(s.coeffs[1] == C(1));
    for (int n = 2; n <= 4; ++n) CHECK(s.coeffs[static_cast<size_t>(n)].is_zero());
}

TEST_CASE("dangling-edge monotonicity at nu=0: T_{i+2} >= w T_i coefficientwise") {
    for (int i = 1; i <= 2; ++i) {
        auto lo = oracle_series(i, 3, 3);
        auto hi = oracle_series(i + 2, 4, 3);
        for (int n = 1; n <= 3; ++n) {
            auto a = lo.coeffs[static_cast<size_t>(n)].eval_var("q", Coef(3)).eval_var("nu", Coef(0));
            auto b = hi.coeffs[static_cast<size_t>(n + 1)].eval_var("q", Coef(3)).eval_var("nu", Coef(0));
            Rat av = a.is_zero() ? Rat(0) : a.terms().front().c.a();
            Rat bv = b.is_zero() ? Rat(0) : b.terms().front().c.a();
            CHECK(bv >= av);
        }
    }
}

TEST_CASE("map json round trip") {
    auto maps = enumerate_near_triangulations(3, 2);
    for (auto& m : maps) {
        auto m2 = dartmap_from_json(dartmap_to_json(m));
        CHECK(m2.canonical_code() == m.canonical_code());
    }
}
