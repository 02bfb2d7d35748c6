#include "potts3/elimination.hpp"

#include <cstdint>
#include <stdexcept>

namespace potts3 {

namespace {

// Dense view in one variable: index = power, entries free of that variable
// but sharing the full variable list.
using UP = std::vector<MultiPoly>;

int updeg(const UP& p) {
    for (size_t i = p.size(); i-- > 0;)
        if (!p[i].is_zero()) return static_cast<int>(i);
    return -1;
}

void uptrim(UP& p, const std::vector<std::string>& vars) {
    p.resize(static_cast<size_t>(updeg(p) + 1), MultiPoly(vars));
}

UP up_of(const MultiPoly& p, const std::string& var) { return p.coeffs_in(var); }

MultiPoly up_back(const std::string& var, const UP& p, const std::vector<std::string>& vars) {
    if (p.empty()) return MultiPoly(vars);
    return MultiPoly::from_coeffs_in(var, p);
}

UP up_scale(const UP& p, const MultiPoly& c) {
    UP r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[i] = p[i] * c;
    return r;
}

UP up_sub(const UP& a, const UP& b, const std::vector<std::string>& vars) {
    UP r(std::max(a.size(), b.size()), MultiPoly(vars));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] = a[i];
        if (i < b.size()) r[i] = r[i] - b[i];
    }
    uptrim(r, vars);
    return r;
}

// Pseudo-remainder: lc(b)^{deg a - deg b + 1} * a = q*b + r, returns r.
UP pseudo_rem(UP a, const UP& b, const std::vector<std::string>& vars) {
    int m = updeg(a), n = updeg(b);
    if (n < 0) throw std::domain_error("pseudo-division by zero");
    const MultiPoly& d = b[static_cast<size_t>(n)];
    int e = m - n + 1;
    while (true) {
        int r = updeg(a);
        if (r < n) break;
        // a := d*a - lc(a) x^{r-n} b
        UP t(static_cast<size_t>(r + 1), MultiPoly(vars));
        const MultiPoly lca = a[static_cast<size_t>(r)];
        for (int i = 0; i <= n; ++i) t[static_cast<size_t>(i + r - n)] = lca * b[static_cast<size_t>(i)];
        a = up_sub(up_scale(a, d), t, vars);
        --e;
    }
    if (e > 0) {
        MultiPoly de = d.pow(static_cast<uint32_t>(e));
        a = up_scale(a, de);
    }
    uptrim(a, vars);
    return a;
}

UP up_divide_exact(const UP& a, const MultiPoly& c) {
    UP r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = a[i].is_zero() ? a[i] : divide_exact(a[i], c);
    return r;
}

}  // namespace

MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    MultiPoly rem = a;
    MultiPoly q(a.vars());
    const auto& bt = b.terms().front();
    while (!rem.is_zero()) {
        const auto& rt = rem.terms().front();
        Exps e(rt.e.size());
        for (size_t i = 0; i < e.size(); ++i) {
            if (rt.e[i] < bt.e[i])
                throw std::domain_error("not an exact divisor");
            e[i] = rt.e[i] - bt.e[i];
        }
        MultiPoly m = MultiPoly::from_terms(a.vars(), {{std::move(e), rt.c / bt.c}});
        q += m;
        rem -= m * b;
    }
    return q;
}

MultiPoly resultant(const MultiPoly& a, const MultiPoly& b, const std::string& var) {
    std::vector<std::string> vars = a.vars();
    if (vars != b.vars()) throw std::invalid_argument("variable-name mismatch");
    UP A = up_of(a, var), B = up_of(b, var);
    uptrim(A, vars);
    uptrim(B, vars);
    if (updeg(A) < 0 || updeg(B) < 0) return MultiPoly(vars);

    const MultiPoly one = MultiPoly::constant(vars, Coef(1));
    int sign = 1;
    // Ledger of lc-power factors: result = sign * prod base^exp (exp may be
    // negative; the division is exact at the end).
    std::vector<std::pair<MultiPoly, int64_t>> ledger;
    auto push = [&](const MultiPoly& base, int64_t e) {
        if (e == 0) return;
        for (auto& f : ledger)
            if (f.first == base) {
                f.second += e;
                return;
            }
        ledger.emplace_back(base, e);
    };

    MultiPoly g = one, h = one;
    bool first = true;
    while (true) {
        int m = updeg(A), n = updeg(B);
        if (m < n) {
            std::swap(A, B);
            std::swap(m, n);
            if ((m & 1) && (n & 1)) sign = -sign;
        }
        if (n < 0) return MultiPoly(vars);  // B vanished with deg A > 0
        if (n == 0) {
            push(B[0], m);
            break;
        }
        UP R = pseudo_rem(A, B, vars);
        int r = updeg(R);
        if (r < 0) return MultiPoly(vars);
        if ((m & 1) && (n & 1)) sign = -sign;
        // res(A,B) = (-1)^{mn} lc(B)^{m - r - n(m-n+1)} res(B,R)
        push(B[n], static_cast<int64_t>(m) - r - static_cast<int64_t>(n) * (m - n + 1));
        int delta = m - n;
        if (!first) {
            // Subresultant normalization: B_next = R / (g h^delta), and
            // res(B, R) = (g h^delta)^n res(B, B_next).
            MultiPoly divisor = g * h.pow(static_cast<uint32_t>(delta));
            R = up_divide_exact(R, divisor);
            push(divisor, n);
        }
        g = B[n];
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            h = divide_exact(g.pow(static_cast<uint32_t>(delta)),
                             h.pow(static_cast<uint32_t>(delta - 1)));
        }
        A = std::move(B);
        B = std::move(R);
        first = false;
    }

    MultiPoly num = MultiPoly::constant(vars, Coef(sign));
    MultiPoly den = one;
    for (auto& f : ledger) {
        if (f.second > 0)
            num *= f.first.pow(static_cast<uint32_t>(f.second));
        else
            den *= f.first.pow(static_cast<uint32_t>(-f.second));
    }
    return divide_exact(num, den);
}

MultiPoly sylvester_resultant(const MultiPoly& a, const MultiPoly& b, const std::string& var) {
    UP A = up_of(a, var), B = up_of(b, var);
    uptrim(A, a.vars());
    uptrim(B, a.vars());
    int m = updeg(A), n = updeg(B);
    const auto& vars = a.vars();
    if (m < 0 || n < 0) return MultiPoly(vars);
    if (m == 0 && n == 0) return MultiPoly::constant(vars, Coef(1));
    size_t N = static_cast<size_t>(m + n);
    std::vector<std::vector<MultiPoly>> M(N, std::vector<MultiPoly>(N, MultiPoly(vars)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) M[i][i + j] = A[static_cast<size_t>(m - j)];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) M[n + i][i + j] = B[static_cast<size_t>(n - j)];
    // Bareiss fraction-free elimination.
    MultiPoly prev = MultiPoly::constant(vars, Coef(1));
    int sign = 1;
    for (size_t k = 0; k + 1 < N; ++k) {
        if (M[k][k].is_zero()) {
            size_t p = k + 1;
            while (p < N && M[p][k].is_zero()) ++p;
            if (p == N) return MultiPoly(vars);
            std::swap(M[k], M[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < N; ++i) {
            for (size_t j = k + 1; j < N; ++j) {
                MultiPoly t = M[i][j] * M[k][k] - M[i][k] * M[k][j];
                M[i][j] = divide_exact(t, prev);
            }
            M[i][k] = MultiPoly(vars);
        }
        prev = M[k][k];
    }
    MultiPoly det = M[N - 1][N - 1];
    if (sign < 0) det = -det;
    return det;
}

MultiPoly discriminant(const MultiPoly& p, const std::string& var) {
    uint32_t n = p.degree(var);
    if (n < 2) throw std::domain_error("discriminant needs degree >= 2");
    MultiPoly res = resultant(p, p.derivative(var), var);
    MultiPoly lc = p.coeff_of(var, n);
    MultiPoly d = divide_exact(res, lc);
    if (((n * (n - 1)) / 2) % 2 == 1) d = -d;
    return d;
}

std::vector<Coef> gcd_univariate(std::vector<Coef> a, std::vector<Coef> b) {
    auto deg = [](const std::vector<Coef>& p) {
        for (size_t i = p.size(); i-- > 0;)
            if (!p[i].is_zero()) return static_cast<int>(i);
        return -1;
    };
    while (deg(b) >= 0) {
        int m = deg(a), n = deg(b);
        if (m < n) {
            std::swap(a, b);
            continue;
        }
        // a := a - lc(a)/lc(b) x^{m-n} b
        Coef f = a[static_cast<size_t>(m)] / b[static_cast<size_t>(n)];
        for (int i = 0; i <= n; ++i)
            a[static_cast<size_t>(i + m - n)] -= f * b[static_cast<size_t>(i)];
        a[static_cast<size_t>(m)] = Coef(0);
        if (deg(a) < deg(b)) std::swap(a, b);
    }
    int m = deg(a);
    if (m < 0) return {};
    a.resize(static_cast<size_t>(m + 1));
    Coef lc = a.back();
    for (auto& c : a) c /= lc;
    return a;
}

namespace {

MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b, size_t vi);

// Content of p in variable vars[vi] (gcd over remaining variables).
MultiPoly content_in(const MultiPoly& p, size_t vi) {
    auto cs = p.coeffs_in(p.vars()[vi]);
    MultiPoly g(p.vars());
    for (auto& c : cs) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c : gcd_rec(g, c, vi + 1);
        if (g.total_degree() == 0) break;
    }
    return g.is_zero() ? g : g.primitive_part();
}

MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b, size_t vi) {
    if (a.is_zero()) return b.is_zero() ? b : b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    const auto& vars = a.vars();
    if (vi >= vars.size()) return MultiPoly::constant(vars, Coef(1));
    const std::string& v = vars[vi];
    if (a.degree(v) == 0 && b.degree(v) == 0) return gcd_rec(a, b, vi + 1);

    MultiPoly ca = content_in(a, vi), cb = content_in(b, vi);
    UP A = up_of(divide_exact(a, ca), v), B = up_of(divide_exact(b, cb), v);
    uptrim(A, vars);
    uptrim(B, vars);
    if (updeg(A) < updeg(B)) std::swap(A, B);
    // Primitive PRS.
    while (updeg(B) > 0) {
        UP R = pseudo_rem(A, B, vars);
        uptrim(R, vars);
        A = std::move(B);
        B = std::move(R);
        if (updeg(B) >= 0) {
            MultiPoly pb = up_back(v, B, vars);
            MultiPoly cnt = content_in(pb, vi);
            B = up_of(divide_exact(pb, cnt), v);
            uptrim(B, vars);
        }
    }
    MultiPoly cg = gcd_rec(ca, cb, vi + 1);
    if (updeg(B) == 0) return cg;  // coprime primitive parts
    return (up_back(v, A, vars) * cg).primitive_part();
}

}  // namespace

MultiPoly gcd_poly(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars() != b.vars()) throw std::invalid_argument("variable-name mismatch");
    for (auto& t : a.terms())
        if (!t.c.is_rational()) throw std::domain_error("multivariate gcd needs Q coefficients");
    for (auto& t : b.terms())
        if (!t.c.is_rational()) throw std::domain_error("multivariate gcd needs Q coefficients");
    return gcd_rec(a, b, 0);
}

namespace {

bool is_univariate_in(const MultiPoly& p, const std::string& var) {
    size_t vi = p.index_of(var);
    for (auto& t : p.terms())
        for (size_t i = 0; i < t.e.size(); ++i)
            if (i != vi && t.e[i] != 0) return false;
    return true;
}

bool has_quadext(const MultiPoly& p) {
    for (auto& t : p.terms())
        if (!t.c.is_rational()) return true;
    return false;
}

// gcd dispatch used by Yun: univariate-over-Coef uses field Euclid, otherwise
// the rational primitive-PRS recursion.
MultiPoly yun_gcd(const MultiPoly& a, const MultiPoly& b, const std::string& var) {
    if ((has_quadext(a) || has_quadext(b)) &&
        (!is_univariate_in(a, var) || !is_univariate_in(b, var)))
        throw std::domain_error("square-free decomposition over Q(sqrt d) must be univariate");
    if (has_quadext(a) || has_quadext(b)) {
        auto dense = [&](const MultiPoly& p) {
            std::vector<Coef> c(p.degree(var) + 1, Coef(0));
            size_t vi = p.index_of(var);
            for (auto& t : p.terms()) c[t.e[vi]] = t.c;
            return c;
        };
        auto g = gcd_univariate(dense(a), dense(b));
        std::vector<MultiPoly::Term> ts;
        size_t vi = a.index_of(var);
        for (size_t i = 0; i < g.size(); ++i) {
            if (g[i].is_zero()) continue;
            Exps e(a.vars().size(), 0);
            e[vi] = static_cast<uint32_t>(i);
            ts.push_back({std::move(e), g[i]});
        }
        return MultiPoly::from_terms(a.vars(), std::move(ts));
    }
    return gcd_poly(a, b);
}

MultiPoly normalize_factor(const MultiPoly& f, const std::string& var, MultiPoly& unit_acc,
                           uint32_t mult) {
    MultiPoly g = f;
    if (has_quadext(g)) {
        Coef lc = g.terms().front().c;
        g = g.scaled(lc.inv());
        unit_acc = unit_acc * MultiPoly::constant(g.vars(), lc).pow(mult);
    } else {
        Rat c = g.rational_content();
        g = g.primitive_part();
        unit_acc = unit_acc * MultiPoly::constant(g.vars(), Coef(c)).pow(mult);
    }
    (void)var;
    return g;
}

}  // namespace

SquarefreeDecomposition squarefree_decompose(const MultiPoly& p, const std::string& var) {
    if (p.is_zero()) throw std::domain_error("square-free decomposition of zero");
    SquarefreeDecomposition out;
    out.unit = MultiPoly::constant(p.vars(), Coef(1));
    if (p.degree(var) == 0) {
        out.unit = p;
        return out;
    }
    MultiPoly f = p;
    MultiPoly fp = f.derivative(var);
    MultiPoly g = yun_gcd(f, fp, var);
    if (g.degree(var) == 0) {
        MultiPoly h = normalize_factor(f, var, out.unit, 1);
        out.factors.push_back({h, 1});
        return out;
    }
    MultiPoly w = divide_exact(f, g);
    MultiPoly y = divide_exact(fp, g);
    MultiPoly z = y - w.derivative(var);
    uint32_t i = 1;
    while (!z.is_zero()) {
        MultiPoly h = yun_gcd(w, z, var);
        if (h.degree(var) > 0) {
            MultiPoly hn = normalize_factor(h, var, out.unit, i);
            out.factors.push_back({hn, i});
        }
        w = divide_exact(w, h);
        y = divide_exact(z, h);
        z = y - w.derivative(var);
        ++i;
    }
    if (w.degree(var) > 0) {
        MultiPoly hn = normalize_factor(w, var, out.unit, i);
        out.factors.push_back({hn, i});
    } else {
        out.unit = out.unit * w.pow(i);
    }
    // Unit = p / prod(factor^mult); recompute exactly to absorb normalizations.
    MultiPoly prod = MultiPoly::constant(p.vars(), Coef(1));
    for (auto& f2 : out.factors) prod *= f2.factor.pow(f2.multiplicity);
    out.unit = divide_exact(p, prod);
    return out;
}

}  // namespace potts3
