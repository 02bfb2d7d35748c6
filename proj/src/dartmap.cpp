#include "potts3/dartmap.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace potts3 {

namespace {

int count_cycles(const std::vector<int>& perm) {
    std::vector<char> seen(perm.size(), 0);
    int cycles = 0;
    for (size_t s = 0; s < perm.size(); ++s) {
        if (seen[s]) continue;
        ++cycles;
        for (int d = static_cast<int>(s); !seen[static_cast<size_t>(d)];
             d = perm[static_cast<size_t>(d)])
            seen[static_cast<size_t>(d)] = 1;
    }
    return cycles;
}

}  // namespace

void DartMap::validate() const {
    if (is_atomic()) {
        if (root != -1 || !alpha.empty()) throw std::invalid_argument("bad atomic map");
        return;
    }
    int n = darts();
    if (n % 2 != 0 || static_cast<int>(alpha.size()) != n)
        throw std::invalid_argument("dart count mismatch");
    if (root < 0 || root >= n) throw std::invalid_argument("root out of range");
    std::vector<char> hit(static_cast<size_t>(n), 0);
    for (int d = 0; d < n; ++d) {
        int s = sigma[static_cast<size_t>(d)];
        if (s < 0 || s >= n || hit[static_cast<size_t>(s)])
            throw std::invalid_argument("sigma is not a permutation");
        hit[static_cast<size_t>(s)] = 1;
    }
    for (int d = 0; d < n; ++d) {
        int a = alpha[static_cast<size_t>(d)];
        if (a < 0 || a >= n || a == d || alpha[static_cast<size_t>(a)] != d)
            throw std::invalid_argument("alpha is not a fixed-point-free involution");
    }
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int d = stack.back();
        stack.pop_back();
        for (int e : {sigma[static_cast<size_t>(d)], alpha[static_cast<size_t>(d)]}) {
            if (!seen[static_cast<size_t>(e)]) {
                seen[static_cast<size_t>(e)] = 1;
                ++reached;
                stack.push_back(e);
            }
        }
    }
    if (reached != n) throw std::invalid_argument("map is not connected");
}

int DartMap::vertex_count() const { return is_atomic() ? 1 : count_cycles(sigma); }

int DartMap::face_count() const {
    if (is_atomic()) return 1;
    std::vector<int> fp(sigma.size());
    for (size_t d = 0; d < sigma.size(); ++d) fp[d] = face_next(static_cast<int>(d));
    return count_cycles(fp);
}

int DartMap::genus2() const { return 2 - vertex_count() + edges() - face_count(); }

int DartMap::outer_degree() const {
    if (is_atomic()) return 0;
    int len = 0, d = root;
    do {
        ++len;
        d = face_next(d);
    } while (d != root);
    return len;
}

std::vector<int> DartMap::canonical_code() const {
    if (is_atomic()) return {};
    int n = darts();
    std::vector<int> label(static_cast<size_t>(n), -1), order;
    label[static_cast<size_t>(root)] = 0;
    order.push_back(root);
    for (size_t k = 0; k < order.size(); ++k) {
        int d = order[k];
        for (int e : {sigma[static_cast<size_t>(d)], alpha[static_cast<size_t>(d)]}) {
            if (label[static_cast<size_t>(e)] < 0) {
                label[static_cast<size_t>(e)] = static_cast<int>(order.size());
                order.push_back(e);
            }
        }
    }
    std::vector<int> code;
    code.reserve(2 * static_cast<size_t>(n));
    for (int d : order) {
        code.push_back(label[static_cast<size_t>(sigma[static_cast<size_t>(d)])]);
        code.push_back(label[static_cast<size_t>(alpha[static_cast<size_t>(d)])]);
    }
    return code;
}

DartMap DartMap::canonical_form() const {
    if (is_atomic()) return *this;
    int n = darts();
    std::vector<int> label(static_cast<size_t>(n), -1), order;
    label[static_cast<size_t>(root)] = 0;
    order.push_back(root);
    for (size_t k = 0; k < order.size(); ++k) {
        int d = order[k];
        for (int e : {sigma[static_cast<size_t>(d)], alpha[static_cast<size_t>(d)]}) {
            if (label[static_cast<size_t>(e)] < 0) {
                label[static_cast<size_t>(e)] = static_cast<int>(order.size());
                order.push_back(e);
            }
        }
    }
    DartMap r;
    r.sigma.resize(static_cast<size_t>(n));
    r.alpha.resize(static_cast<size_t>(n));
    r.root = 0;
    for (int d = 0; d < n; ++d) {
        r.sigma[static_cast<size_t>(label[static_cast<size_t>(d)])] =
            label[static_cast<size_t>(sigma[static_cast<size_t>(d)])];
        r.alpha[static_cast<size_t>(label[static_cast<size_t>(d)])] =
            label[static_cast<size_t>(alpha[static_cast<size_t>(d)])];
    }
    return r;
}

DartMap DartMap::dual() const {
    if (is_atomic()) return *this;
    DartMap r;
    r.sigma.resize(sigma.size());
    for (size_t d = 0; d < sigma.size(); ++d) r.sigma[d] = face_next(static_cast<int>(d));
    r.alpha = alpha;
    r.root = root;
    return r;
}

std::vector<int> DartMap::vertex_ids() const {
    std::vector<int> id(sigma.size(), -1);
    int next = 0;
    for (size_t s = 0; s < sigma.size(); ++s) {
        if (id[s] >= 0) continue;
        for (int d = static_cast<int>(s); id[static_cast<size_t>(d)] < 0;
             d = sigma[static_cast<size_t>(d)])
            id[static_cast<size_t>(d)] = next;
        ++next;
    }
    return id;
}

PolyNu potts_polynomial(const DartMap& m, long q) {
    if (q < 1) throw std::invalid_argument("brute-force mode needs a positive integer q");
    if (m.is_atomic()) return PolyNu(Rat(q));
    auto vid = m.vertex_ids();
    int v = m.vertex_count();
    int e = m.edges();
    std::vector<std::pair<int, int>> ends;
    for (int d = 0; d < m.darts(); ++d) {
        if (d < m.alpha[static_cast<size_t>(d)])
            ends.emplace_back(vid[static_cast<size_t>(d)],
                              vid[static_cast<size_t>(m.alpha[static_cast<size_t>(d)])]);
    }
    std::vector<Int> hist(static_cast<size_t>(e) + 1, Int(0));
    std::vector<int> colour(static_cast<size_t>(v), 0);
    while (true) {
        int mono = 0;
        for (auto& ed : ends)
            if (colour[static_cast<size_t>(ed.first)] == colour[static_cast<size_t>(ed.second)])
                ++mono;
        hist[static_cast<size_t>(mono)] += 1;
        int pos = 0;
        while (pos < v && ++colour[static_cast<size_t>(pos)] == q)
            colour[static_cast<size_t>(pos++)] = 0;
        if (pos == v) break;
    }
    PolyNu out;
    PolyNu nu = PolyNu::nu();
    PolyNu pw(Rat(1));
    for (size_t k = 0; k < hist.size(); ++k) {
        if (hist[k] != 0) out += pw * PolyNu(Rat(hist[k]));
        pw = pw * nu;
    }
    return out;
}

MultiPoly potts_polynomial_qnu(const DartMap& m) {
    const std::vector<std::string> QN = {"q", "nu"};
    int v = m.vertex_count();
    std::vector<Rat> nodes;
    std::vector<PolyNu> values;
    for (long qv = 1; qv <= v + 1; ++qv) {
        nodes.emplace_back(qv);
        values.push_back(potts_polynomial(m, qv));
    }
    MultiPoly out(QN);
    MultiPoly q = MultiPoly::var(QN, "q");
    for (size_t j = 0; j < nodes.size(); ++j) {
        MultiPoly ell = MultiPoly::constant(QN, Coef(1));
        Rat denom(1);
        for (size_t k = 0; k < nodes.size(); ++k) {
            if (k == j) continue;
            ell *= q - MultiPoly::constant(QN, Coef(nodes[k]));
            denom *= nodes[j] - nodes[k];
        }
        out += ell * values[j].to_multipoly(QN, "nu").scaled(Coef(Rat(1) / denom));
    }
    return out;
}

namespace {

// Near-triangulation generator: glue an outer i-gon and 2v-i-2 triangles
// along their sides. One dart per polygon side; the polygon boundaries are
// the face cycles, so sigma = face_perm o alpha on the quotient. Matchings
// are enumerated canonically (lowest unmatched side first); a fresh triangle
// enters only via the lowest untouched index at its side 0 (rotations of an
// untouched triangle are symmetric). Genus and connectivity prune; final
// deduplication is by canonical code.
struct Gluer {
    int i = 0, v_target = 0, n_sides = 0, n_tri = 0;
    std::vector<int> side_poly;
    std::vector<int> poly_start;
    std::vector<int> poly_len;
    std::vector<int> match;
    std::vector<int> corner_uf;
    std::vector<char> poly_touched;
    int classes = 0;
    int open = 0;
    std::vector<DartMap> out;
    std::map<std::vector<int>, char> seen;

    int uf_find(int x) {
        while (corner_uf[static_cast<size_t>(x)] != x) {
            corner_uf[static_cast<size_t>(x)] =
                corner_uf[static_cast<size_t>(corner_uf[static_cast<size_t>(x)])];
            x = corner_uf[static_cast<size_t>(x)];
        }
        return x;
    }
    void uf_union(int a, int b) {
        a = uf_find(a);
        b = uf_find(b);
        if (a == b) return;
        corner_uf[static_cast<size_t>(a)] = b;
        --classes;
    }

    int head(int s) const {
        int p = side_poly[static_cast<size_t>(s)];
        int b = poly_start[static_cast<size_t>(p)], l = poly_len[static_cast<size_t>(p)];
        return b + (s - b + 1) % l;
    }

    int lowest_unmatched() const {
        for (int s = 0; s < n_sides; ++s)
            if (match[static_cast<size_t>(s)] < 0) return s;
        return -1;
    }

    void rec() {
        int d = lowest_unmatched();
        if (d < 0) {
            emit();
            return;
        }
        if (!poly_touched[static_cast<size_t>(side_poly[static_cast<size_t>(d)])] &&
            side_poly[static_cast<size_t>(d)] > 0)
            return;  // root component closed off before reaching this polygon
        int remaining = (open - 2) / 2;  // gluings after this one
        if (classes - 2 * (remaining + 1) > v_target) return;

        int fresh = -1;
        for (int p = 1; p <= n_tri; ++p)
            if (!poly_touched[static_cast<size_t>(p)]) {
                fresh = p;
                break;
            }
        for (int s = d + 1; s < n_sides; ++s) {
            if (match[static_cast<size_t>(s)] >= 0) continue;
            int p = side_poly[static_cast<size_t>(s)];
            bool fresh_entry = false;
            if (p > 0 && !poly_touched[static_cast<size_t>(p)]) {
                if (p != fresh || s != poly_start[static_cast<size_t>(p)]) continue;
                fresh_entry = true;
            }
            match[static_cast<size_t>(d)] = s;
            match[static_cast<size_t>(s)] = d;
            open -= 2;
            auto uf0 = corner_uf;
            int cl0 = classes;
            if (fresh_entry) poly_touched[static_cast<size_t>(p)] = 1;
            uf_union(head(d), s);
            uf_union(d, head(s));
            rec();
            corner_uf = uf0;
            classes = cl0;
            if (fresh_entry) poly_touched[static_cast<size_t>(p)] = 0;
            open += 2;
            match[static_cast<size_t>(d)] = -1;
            match[static_cast<size_t>(s)] = -1;
        }
    }

    void emit() {
        if (classes != v_target) return;
        DartMap m;
        m.sigma.resize(static_cast<size_t>(n_sides));
        m.alpha.resize(static_cast<size_t>(n_sides));
        m.root = 0;
        for (int s = 0; s < n_sides; ++s) m.alpha[static_cast<size_t>(s)] = match[static_cast<size_t>(s)];
        // face successor of s is head-side: sigma(alpha(s)) = next(s)
        for (int s = 0; s < n_sides; ++s)
            m.sigma[static_cast<size_t>(match[static_cast<size_t>(s)])] = head(s);
        try {
            m.validate();
        } catch (const std::invalid_argument&) {
            return;
        }
        if (m.genus2() != 0) return;
        if (m.vertex_count() != v_target) return;
        if (m.outer_degree() != i) return;
        bool tri_ok = true;
        {
            std::vector<int> fp(static_cast<size_t>(n_sides));
            for (int dd = 0; dd < n_sides; ++dd) fp[static_cast<size_t>(dd)] = m.face_next(dd);
            std::vector<char> vis(static_cast<size_t>(n_sides), 0);
            for (int dd = 0; dd < n_sides && tri_ok; ++dd) {
                if (vis[static_cast<size_t>(dd)]) continue;
                int len = 0;
                bool is_outer = false;
                for (int x = dd; !vis[static_cast<size_t>(x)]; x = fp[static_cast<size_t>(x)]) {
                    vis[static_cast<size_t>(x)] = 1;
                    ++len;
                    if (x == m.root) is_outer = true;
                }
                if (!is_outer && len != 3) tri_ok = false;
            }
        }
        if (!tri_ok) return;
        auto code = m.canonical_code();
        if (seen.emplace(std::move(code), 1).second) out.push_back(m.canonical_form());
    }
};

}  // namespace

std::vector<DartMap> enumerate_near_triangulations(int v, int i) {
    if (v < 1 || i < 0) throw std::invalid_argument("bad parameters");
    if (i == 0) {
        if (v == 1) return {DartMap{}};
        return {};
    }
    if (v == 1) return {};
    int tri = 2 * v - i - 2;
    if (tri < 0) return {};
    int sides = i + 3 * tri;
    if (sides % 2 != 0) return {};
    Gluer g;
    g.i = i;
    g.v_target = v;
    g.n_tri = tri;
    g.n_sides = sides;
    g.side_poly.assign(static_cast<size_t>(sides), 0);
    g.poly_start = {0};
    g.poly_len = {i};
    for (int t = 0; t < tri; ++t) {
        g.poly_start.push_back(i + 3 * t);
        g.poly_len.push_back(3);
        for (int s = 0; s < 3; ++s) g.side_poly[static_cast<size_t>(i + 3 * t + s)] = t + 1;
    }
    g.match.assign(static_cast<size_t>(sides), -1);
    g.corner_uf.resize(static_cast<size_t>(sides));
    std::iota(g.corner_uf.begin(), g.corner_uf.end(), 0);
    g.poly_touched.assign(static_cast<size_t>(tri) + 1, 0);
    g.poly_touched[0] = 1;
    g.classes = sides;
    g.open = sides;
    g.rec();
    return g.out;
}

OracleSeries oracle_series(int i, int v_max, long q) {
    const std::vector<std::string> QN = {"q", "nu"};
    OracleSeries out;
    out.outer_degree = i;
    out.q = q;
    out.coeffs.assign(static_cast<size_t>(v_max) + 1, MultiPoly(QN));
    out.map_counts.assign(static_cast<size_t>(v_max) + 1, 0);
    for (int v = 1; v <= v_max; ++v) {
        auto maps = enumerate_near_triangulations(v, i);
        out.map_counts[static_cast<size_t>(v)] = maps.size();
        MultiPoly acc(QN);
        for (auto& m : maps) {
            if (q == 0)
                acc += potts_polynomial_qnu(m);
            else
                acc += potts_polynomial(m, q).to_multipoly(QN, "nu").scaled(Coef(Rat(1, q)));
        }
        if (q == 0 && !acc.is_zero()) acc = acc.shifted("q", -1);
        out.coeffs[static_cast<size_t>(v)] = acc;
    }
    return out;
}

std::string dartmap_to_json(const DartMap& m) {
    nlohmann::json j;
    j["darts"] = m.darts();
    std::vector<int> s1, a1;
    for (int d = 0; d < m.darts(); ++d) {
        s1.push_back(m.sigma[static_cast<size_t>(d)] + 1);
        a1.push_back(m.alpha[static_cast<size_t>(d)] + 1);
    }
    j["sigma"] = s1;
    j["alpha"] = a1;
    j["root"] = m.root + 1;
    return j.dump();
}

DartMap dartmap_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    DartMap m;
    for (int x : j.at("sigma").get<std::vector<int>>()) m.sigma.push_back(x - 1);
    for (int x : j.at("alpha").get<std::vector<int>>()) m.alpha.push_back(x - 1);
    m.root = j.at("root").get<int>() - 1;
    if (j.at("darts").get<int>() != m.darts())
        throw std::invalid_argument("dart count mismatch in map file");
    m.validate();
    return m;
}

}  // namespace potts3
