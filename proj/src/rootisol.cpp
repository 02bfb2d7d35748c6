#include "potts3/rootisol.hpp"

#include "potts3/elimination.hpp"

#include <algorithm>
#include <stdexcept>

namespace potts3 {

int uc_degree(const UCPoly& p) {
    for (size_t i = p.size(); i-- > 0;)
        if (!p[i].is_zero()) return static_cast<int>(i);
    return -1;
}

Coef uc_eval(const UCPoly& p, const Rat& x) {
    Coef acc(0);
    Coef cx(x);
    for (size_t i = p.size(); i-- > 0;) acc = acc * cx + p[i];
    return acc;
}

UCPoly uc_derivative(const UCPoly& p) {
    UCPoly r;
    for (size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * Coef(Rat(static_cast<long>(i))));
    return r;
}

namespace {

int sign_at(const UCPoly& p, const Rat& x) { return uc_eval(p, x).sign(); }

int variations(const UCPoly& p) {
    int v = 0, last = 0;
    for (auto& c : p) {
        int s = c.sign();
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

// q(x) := q(x + 1), exact in-place Taylor shift.
UCPoly shift_by_one(UCPoly p) {
    int n = static_cast<int>(p.size()) - 1;
    for (int i = 0; i <= n; ++i)
        for (int j = n - 1; j >= i; --j) p[static_cast<size_t>(j)] += p[static_cast<size_t>(j + 1)];
    return p;
}

UCPoly reversed(const UCPoly& p) {
    UCPoly r(p.rbegin(), p.rend());
    return r;
}

// Descartes bound for the root count in the open interval (0, 1).
int descartes_01(const UCPoly& p) { return variations(shift_by_one(reversed(p))); }

// q(x) -> q(x/2).
UCPoly half_scale(UCPoly p) {
    Rat f(1);
    for (size_t i = 1; i < p.size(); ++i) {
        f /= 2;
        p[i] *= Coef(f);
    }
    return p;
}

// Removes the exact root c by synthetic division (remainder must vanish).
UCPoly deflate(const UCPoly& p, const Rat& c) {
    int n = static_cast<int>(p.size()) - 1;
    UCPoly g(static_cast<size_t>(n), Coef(0));
    Coef carry = p[static_cast<size_t>(n)];
    for (int k = n - 1; k >= 0; --k) {
        g[static_cast<size_t>(k)] = carry;
        carry = p[static_cast<size_t>(k)] + carry * Coef(c);
    }
    if (!carry.is_zero()) throw std::logic_error("deflation at a non-root");
    return g;
}

struct Isolator {
    // Copy of the input with every exact root discovered at a bisection point
    // divided out. Between any two of those points the sign pattern of the
    // deflated copy matches the input, and it never vanishes at interval
    // endpoints, so it is the safe polynomial for trim queries.
    UCPoly defl;
    std::vector<RationalInterval> out;

    int dsign(const Rat& x) const { return sign_at(defl, x); }

    void push(const Rat& lo, const Rat& hi) { out.push_back({lo, hi}); }

    // One root of defl lies in the open (lo, hi); shrink the flagged side(s)
    // so that no reported endpoint is a root of the original polynomial.
    void push_trimmed(Rat lo, Rat hi, bool lo_root, bool hi_root) {
        if (hi_root) {
            int s_lo = dsign(lo);
            Rat a = lo;
            while (true) {
                Rat t = (a + hi) / 2;
                int st = dsign(t);
                if (st == 0) {
                    push(t, t);
                    return;
                }
                if (st != s_lo) {
                    hi = t;
                    break;
                }
                a = t;
            }
        }
        if (lo_root) {
            int s_hi = dsign(hi);
            Rat b = hi;
            while (true) {
                Rat t = (lo + b) / 2;
                int st = dsign(t);
                if (st == 0) {
                    push(t, t);
                    return;
                }
                if (st != s_hi) {
                    lo = t;
                    break;
                }
                b = t;
            }
        }
        push(lo, hi);
    }

    // q maps (0,1) onto (lo,hi); lo_root/hi_root flag endpoints that are
    // exact roots of the input (found at earlier splits).
    void rec(const UCPoly& q, const Rat& lo, const Rat& hi, bool lo_root, bool hi_root,
             int depth) {
        if (depth > 4096) throw std::runtime_error("root isolation depth exceeded");
        int v = descartes_01(q);
        if (v == 0) return;
        if (v == 1) {
            if (lo_root || hi_root)
                push_trimmed(lo, hi, lo_root, hi_root);
            else
                push(lo, hi);
            return;
        }
        Rat mid = (lo + hi) / 2;
        UCPoly left = half_scale(q);
        bool mid_root = false;
        UCPoly right = shift_by_one(left);
        if (!right.empty() && right[0].is_zero()) {
            mid_root = true;
            push(mid, mid);
            left = deflate(left, Rat(1));
            right = deflate(right, Rat(0));
            defl = deflate(defl, mid);
        }
        rec(left, lo, mid, lo_root, mid_root, depth + 1);
        rec(right, mid, hi, mid_root, hi_root, depth + 1);
    }
};

// Rational upper bound on |c| under the real embedding.
Rat abs_upper(const Coef& c) {
    Rat a = sgn(c.a()) < 0 ? Rat(-c.a()) : c.a();
    if (c.d() == 0) return a;
    Rat b = sgn(c.b()) < 0 ? Rat(-c.b()) : c.b();
    Int s;
    mpz_sqrt(s.get_mpz_t(), Int(static_cast<long>(c.d())).get_mpz_t());
    return a + b * Rat(s + 1);
}

// Rational positive lower bound on |c| for nonzero c.
Rat abs_lower_nonzero(const Coef& c) {
    if (c.d() == 0 || sgn(c.b()) == 0) {
        return sgn(c.a()) < 0 ? Rat(-c.a()) : c.a();
    }
    Rat n = c.norm();
    if (sgn(n) == 0) throw std::domain_error("zero norm");
    if (sgn(n) < 0) n = -n;
    return n / abs_upper(c.conj());
}

Rat cauchy_bound(const UCPoly& p) {
    int n = uc_degree(p);
    Rat lead = abs_lower_nonzero(p[static_cast<size_t>(n)]);
    Rat m(0);
    for (int i = 0; i < n; ++i) m = std::max(m, abs_upper(p[static_cast<size_t>(i)]));
    return Rat(1) + m / lead;
}

void isolate_positive(const UCPoly& q, bool negated, bool zero_root,
                      std::vector<RationalInterval>& out) {
    if (uc_degree(q) < 1) return;
    Rat bound = cauchy_bound(q);
    UCPoly scaled = q;
    Rat f(1);
    for (size_t i = 1; i < scaled.size(); ++i) {
        f *= bound;
        scaled[i] *= Coef(f);
    }
    Isolator iso{q, {}};
    // When an exact root at 0 was stripped upstream, the left endpoint of the
    // first interval must be trimmed away from it.
    iso.rec(scaled, Rat(0), bound, zero_root, false, 0);
    for (auto& iv : iso.out) {
        if (negated)
            out.push_back({-iv.high, -iv.low});
        else
            out.push_back(iv);
    }
}

}  // namespace

std::vector<RationalInterval> isolate_real_roots(const UCPoly& p) {
    int n = uc_degree(p);
    if (n < 0) throw std::domain_error("zero polynomial");
    UCPoly q(p.begin(), p.begin() + n + 1);
    std::vector<RationalInterval> out;
    size_t k = 0;
    while (k < q.size() && q[k].is_zero()) ++k;
    if (k > 1) throw std::domain_error("input not square-free (multiple root at 0)");
    if (k == 1) {
        out.push_back({Rat(0), Rat(0)});
        q.erase(q.begin());
        n -= 1;
    }
    if (n >= 1) {
        auto g = gcd_univariate(q, uc_derivative(q));
        if (static_cast<int>(g.size()) - 1 > 0) throw std::domain_error("input not square-free");
        isolate_positive(q, false, k == 1, out);
        UCPoly neg = q;
        for (size_t i = 1; i < neg.size(); i += 2) neg[i] = -neg[i];
        isolate_positive(neg, true, k == 1, out);
    }
    std::sort(out.begin(), out.end(),
              [](const RationalInterval& a, const RationalInterval& b) { return a.low < b.low; });
    return out;
}

RationalInterval refine_root(const UCPoly& p, RationalInterval iv, const Rat& width) {
    if (iv.is_point()) return iv;
    int slo = sign_at(p, iv.low), shi = sign_at(p, iv.high);
    if (slo == 0 || shi == 0 || slo == shi)
        throw std::domain_error("interval does not bracket a sign change");
    while (iv.width() > width) {
        Rat m = iv.mid();
        int sm = sign_at(p, m);
        if (sm == 0) return {m, m};
        if (sm == slo)
            iv.low = m;
        else
            iv.high = m;
    }
    return iv;
}

}  // namespace potts3
