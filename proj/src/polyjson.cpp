#include "potts3/polyjson.hpp"

#include <fstream>
#include <stdexcept>

namespace potts3 {

using nlohmann::json;

static json rat_pair(const Rat& r) {
    return json::array({r.get_num().get_str(), r.get_den().get_str()});
}

static Rat pair_to_rat(const json& j) {
    auto num_str = [](const json& v) -> std::string {
        if (v.is_string()) return v.get<std::string>();
        if (v.is_number_integer()) return std::to_string(v.get<long long>());
        throw std::invalid_argument("expected integer or decimal string");
    };
    Rat r(Int(num_str(j.at(0)), 10), Int(num_str(j.at(1)), 10));
    r.canonicalize();
    return r;
}

json poly_to_json(const MultiPoly& p) {
    json j;
    j["vars"] = p.vars();
    int64_t d = 0;
    for (auto& t : p.terms()) d = Coef::join_d(d, t.c.d());
    j["field"] = d == 0 ? std::string("Q") : "Q(sqrt " + std::to_string(d) + ")";
    json terms = json::array();
    for (auto& t : p.terms()) {
        json jt = json::array();
        if (d == 0) {
            jt.push_back(t.c.a().get_num().get_str());
            jt.push_back(t.c.a().get_den().get_str());
        } else {
            jt.push_back(rat_pair(t.c.a()));
            jt.push_back(rat_pair(t.c.b()));
        }
        jt.push_back(t.e);
        terms.push_back(std::move(jt));
    }
    j["terms"] = std::move(terms);
    return j;
}

MultiPoly poly_from_json(const json& j) {
    std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
    std::string field = j.at("field").get<std::string>();
    int64_t d = 0;
    if (field != "Q") {
        if (field.rfind("Q(sqrt ", 0) != 0 || field.back() != ')')
            throw std::invalid_argument("bad field: " + field);
        d = std::stoll(field.substr(7, field.size() - 8));
    }
    std::vector<MultiPoly::Term> terms;
    for (auto& jt : j.at("terms")) {
        MultiPoly::Term t;
        if (d == 0) {
            t.c = Coef(pair_to_rat(json::array({jt.at(0), jt.at(1)})));
        } else {
            t.c = Coef(pair_to_rat(jt.at(0)), pair_to_rat(jt.at(1)), d);
        }
        t.e = jt.at(2).get<Exps>();
        terms.push_back(std::move(t));
    }
    return MultiPoly::from_terms(std::move(vars), std::move(terms));
}

MultiPoly load_poly_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return poly_from_json(j);
}

void save_poly_file(const MultiPoly& p, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << poly_to_json(p).dump(1) << "\n";
}

}  // namespace potts3
