#include "potts3/fixtures.hpp"

#include "potts3/polyjson.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace potts3 {

std::string FixtureSet::default_dir() {
    if (const char* env = std::getenv("POTTS3_FIXTURES")) return env;
    return POTTS3_FIXTURE_DIR;
}

FixtureSet::FixtureSet(std::string dir) : dir_(std::move(dir)) {
    std::ifstream in(dir_ + "/manifest.json");
    if (!in) throw std::runtime_error("cannot open fixture manifest in " + dir_);
    nlohmann::json j;
    in >> j;
    for (auto& e : j.at("fixtures")) {
        if (e.at("expected_stats").is_null()) continue;  // non-polynomial fixture
        AlgebraicFixture f;
        f.name = e.at("name").get<std::string>();
        f.provenance = e.at("provenance").get<std::string>();
        f.polynomial = load_poly_file(dir_ + "/" + e.at("file").get<std::string>());
        auto& stats = e.at("expected_stats");
        f.expected_monomials = stats.at("monomials").get<size_t>();
        for (auto& [k, v] : stats.at("degrees").items())
            f.expected_degrees[k] = v.get<uint32_t>();
        if (f.polynomial.monomial_count() != f.expected_monomials)
            throw std::runtime_error("fixture checksum mismatch (monomial count): " + f.name);
        for (auto& [var, deg] : f.expected_degrees)
            if (f.polynomial.degree(var) != deg)
                throw std::runtime_error("fixture checksum mismatch (degree of " + var +
                                         "): " + f.name);
        fixtures_.emplace(f.name, std::move(f));
    }
}

const AlgebraicFixture& FixtureSet::get(const std::string& name) const {
    auto it = fixtures_.find(name);
    if (it == fixtures_.end()) throw std::invalid_argument("unknown fixture: " + name);
    return it->second;
}

std::vector<std::string> FixtureSet::names() const {
    std::vector<std::string> out;
    for (auto& [k, v] : fixtures_) out.push_back(k);
    return out;
}

MultiPoly FixtureSet::expand_beta(const MultiPoly& p) {
    if (!p.has_var("beta")) return p;
    std::vector<std::string> vars = p.vars();
    if (!p.has_var("nu")) vars.insert(vars.begin(), "nu");
    MultiPoly lifted = p.lifted(vars);
    MultiPoly nu = MultiPoly::var(vars, "nu");
    MultiPoly one = MultiPoly::constant(vars, Coef(1));
    MultiPoly r = lifted.subst_var("beta", nu - one);
    std::vector<std::string> final_vars;
    for (auto& v : vars)
        if (v != "beta") final_vars.push_back(v);
    std::vector<MultiPoly::Term> ts;
    size_t bi = r.index_of("beta");
    for (auto& t : r.terms()) {
        if (t.e[bi] != 0) throw std::logic_error("beta survived expansion");
        Exps e;
        for (size_t k = 0; k < t.e.size(); ++k)
            if (k != bi) e.push_back(t.e[k]);
        ts.push_back({std::move(e), t.c});
    }
    return MultiPoly::from_terms(final_vars, std::move(ts));
}

UCPoly to_ucpoly(const MultiPoly& p, const std::string& var) {
    size_t vi = p.index_of(var);
    UCPoly out(p.degree(var) + 1, Coef(0));
    for (auto& t : p.terms()) {
        for (size_t k = 0; k < t.e.size(); ++k)
            if (k != vi && t.e[k] != 0)
                throw std::domain_error("polynomial is not univariate in " + var);
        out[t.e[vi]] = t.c;
    }
    return out;
}

MultiPoly from_ucpoly(const UCPoly& p, const std::vector<std::string>& vars,
                      const std::string& var) {
    MultiPoly probe(vars);
    size_t vi = probe.index_of(var);
    std::vector<MultiPoly::Term> ts;
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i].is_zero()) continue;
        Exps e(vars.size(), 0);
        e[vi] = static_cast<uint32_t>(i);
        ts.push_back({std::move(e), p[i]});
    }
    return MultiPoly::from_terms(vars, std::move(ts));
}

UCPoly FixtureSet::delta_at(const std::string& name, const Coef& nu_value) const {
    MultiPoly p = expand_beta(poly(name));
    p = p.eval_var("nu", nu_value);
    std::string main = p.has_var("rho") ? "rho" : "w";
    return to_ucpoly(p, main);
}

}  // namespace potts3
