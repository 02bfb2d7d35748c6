#include "potts3/dde.hpp"

#include "potts3/elimination.hpp"

#include <chrono>
#include <stdexcept>

// Series engine for the two-catalytic equation
//
//   Q = 1 + t (Q - 1 - y Q1)/y + x t (Q - 1) + x y t Q1 Q
//       + y t (nu-1) Q (2x Q1 + Q2) + y^2 w t (q + (nu-1)/(1 - x t nu)) Q0 Q
//       + (y w t (nu-1)/(1 - x t nu)) (Q - Q0)/x,
//
// with Q0 = Q(0,y), Q1 = [y^1]Q, Q2 = (1 - 2 x t nu) Q1 / (t nu).
// Substituting Q2 collapses the fifth term to y ((nu-1)/nu) Q1 Q. Writing
// Qt1 := Q1/nu and extracting [t^k] gives a division-free recurrence:
//
//   Fhat_k = (Q_{k-1} - [k=1] - y nu Qt1_{k-1})/y + x (Q_{k-1} - [k=1])
//          + nu x y sum_{j>=1} Qt1_j Q_{k-1-j}
//          + (nu-1) y sum_{j=1}^{k-1} Qt1_j Q_{k-j}
//          + y^2 w (q U_{k-1} + (nu-1) A_k) + (nu-1) y w B_k,
//   Qt1_k = [y^1] Fhat_k,      Q_k = Fhat_k + (nu-1) y Qt1_k,
//
// where U_j = sum_{a+b=j} Q0_a Q_b, A_k = U_{k-1} + nu x A_{k-1} (A_0 = 0)
// and B_k = V_{k-1} + nu x B_{k-1} with V_j = (Q_j - Q0_j)/x. Divisibility
// by y and nu is structural (asserted), so the recurrence is valid at nu = 0.
//
// Monomial pruning, derived term by term from the equation: only the
// divided-difference term lowers the x-exponent (by one, consuming one t,
// one w and one y), and only the first term lowers the y-exponent (by one,
// consuming one t). Hence a monomial x^a y^b w^c of [t^k]Q can contribute to
// [x^0 y^{<=imax} w^{<=nmax-1}] of [t^{<=N}]Q only if
//   (i)  a + c <= nmax - 1, and
//   (ii) a + max(0, a + b - imax) <= N - k.
// Growth caps deg_x <= k and deg_y <= 2k follow by induction on the terms
// and are enforced as hard errors, not silent truncation.

namespace potts3 {

namespace {

inline bool rz(const Rat& x) { return sgn(x) == 0; }
inline bool rz(const Coef& x) { return x.is_zero(); }
inline bool rz(const PolyNu& x) { return x.is_zero(); }
inline bool rz(const PolyQNu& x) { return x.is_zero(); }

inline bool useful(int a, int b, int c, int nmax1, int imax, int budget) {
    if (a + c > nmax1) return false;
    int need = a + b - imax;
    if (need < 0) need = 0;
    return a + need <= budget;
}

template <class K>
struct Box {
    int amax = -1, bmax = -1, cmax = -1;
    std::vector<K> v;
    struct NZ {
        int a, b, c;
        size_t i;
    };
    std::vector<NZ> nz;

    void init(int am, int bm, int cm) {
        amax = am;
        bmax = bm;
        cmax = cm;
        v.assign(static_cast<size_t>(am + 1) * static_cast<size_t>(bm + 1) *
                     static_cast<size_t>(cm + 1),
                 K());
        nz.clear();
    }
    size_t idx(int a, int b, int c) const {
        return (static_cast<size_t>(a) * static_cast<size_t>(bmax + 1) + static_cast<size_t>(b)) *
                   static_cast<size_t>(cmax + 1) +
               static_cast<size_t>(c);
    }
    K& at(int a, int b, int c) { return v[idx(a, b, c)]; }
    const K& at(int a, int b, int c) const { return v[idx(a, b, c)]; }
    void finalize() {
        nz.clear();
        for (int a = 0; a <= amax; ++a)
            for (int b = 0; b <= bmax; ++b)
                for (int c = 0; c <= cmax; ++c)
                    if (!rz(v[idx(a, b, c)])) nz.push_back({a, b, c, idx(a, b, c)});
    }
};

template <class K>
struct Engine {
    K nu, beta, q, one;
    int nmax1 = 0, imax = 0, N = 0;
    int growth_k = 0;

    void acc(Box<K>& dst, const K& coef, const K& f, bool f_is_one, int a, int b, int c) {
        if (!useful(a, b, c, nmax1, imax, N - growth_k)) return;
        if (a > dst.amax || b > dst.bmax || c > dst.cmax)
            throw std::logic_error("degree-cap violation in engine recurrence");
        if (f_is_one)
            dst.at(a, b, c) += coef;
        else
            dst.at(a, b, c) += coef * f;
    }

    void acc_box(Box<K>& dst, const K& f, bool f_is_one, int dx, int dy, int dw,
                 const Box<K>& A) {
        for (auto& t : A.nz) acc(dst, A.v[t.i], f, f_is_one, t.a + dx, t.b + dy, t.c + dw);
    }

    void acc_prod(Box<K>& dst, const K& f, bool f_is_one, int dx, int dy, int dw,
                  const Box<K>& A, const Box<K>& B) {
        for (auto& ta : A.nz) {
            K fa = f_is_one ? A.v[ta.i] : A.v[ta.i] * f;
            int a0 = ta.a + dx, b0 = ta.b + dy, c0 = ta.c + dw;
            for (auto& tb : B.nz) acc(dst, B.v[tb.i], fa, false, a0 + tb.a, b0 + tb.b, c0 + tb.c);
        }
    }

    EngineResult run(const EngineSpec& spec, MultiPoly (*to_poly)(const K&)) {
        using clock = std::chrono::steady_clock;
        EngineResult out;
        out.spec = spec;
        out.coeff_vars = {"q", "nu"};
        N = spec.n_max <= 1 ? 0 : 3 * spec.n_max - 4;
        out.t_order = N;
        nmax1 = spec.n_max - 1;
        imax = spec.i_max;

        std::vector<Box<K>> Q(static_cast<size_t>(N) + 1), Qt1(static_cast<size_t>(N) + 1),
            Q0(static_cast<size_t>(N) + 1), U(static_cast<size_t>(N) + 1);
        Box<K> Aacc, Bacc;
        Aacc.init(0, 0, 0);
        Bacc.init(0, 0, 0);
        Aacc.finalize();
        Bacc.finalize();

        Q[0].init(0, 0, 0);
        Q[0].at(0, 0, 0) = one;
        Q[0].finalize();
        Qt1[0].init(0, 0, 0);
        Qt1[0].finalize();
        Q0[0] = Q[0];

        std::vector<std::vector<K>> Tacc(static_cast<size_t>(imax) + 1,
                                         std::vector<K>(static_cast<size_t>(nmax1) + 1, K()));
        Tacc[0][0] += one;

        if (N >= 1) {
            U[0].init(0, 0, 0);
            if (nmax1 >= 1 && useful(0, 2, 1, nmax1, imax, N - 1)) U[0].at(0, 0, 0) = one;
            U[0].finalize();
        }

        for (int k = 1; k <= N; ++k) {
            auto tick = clock::now();
            growth_k = k;
            int budget = N - k;
            int amax = std::min({k, nmax1, budget});
            int bmax = std::min(2 * k, imax + budget);
            int cmax = nmax1;
            Box<K> F;
            F.init(amax, bmax, cmax);

            const Box<K>& P = Q[static_cast<size_t>(k - 1)];
            // term 1
            for (auto& t : P.nz) {
                if (k == 1 && t.a == 0 && t.b == 0 && t.c == 0) continue;
                if (t.b == 0) throw std::logic_error("y-division failed: y^0 term present");
                if (t.b == 1) continue;  // cancelled exactly by y nu Qt1_{k-1}
                acc(F, P.v[t.i], one, true, t.a, t.b - 1, t.c);
            }
            // term 2
            for (auto& t : P.nz) {
                if (k == 1 && t.a == 0 && t.b == 0 && t.c == 0) continue;
                acc(F, P.v[t.i], one, true, t.a + 1, t.b, t.c);
            }
            // terms 3 and 4
            for (int j = 1; j < k; ++j) {
                acc_prod(F, nu, false, 1, 1, 0, Qt1[static_cast<size_t>(j)],
                         Q[static_cast<size_t>(k - 1 - j)]);
                acc_prod(F, beta, false, 0, 1, 0, Qt1[static_cast<size_t>(j)],
                         Q[static_cast<size_t>(k - j)]);
            }
            // term 5
            {
                Box<K> newA;
                newA.init(amax, std::max(0, bmax - 2), std::max(0, cmax - 1));
                for (auto& t : U[static_cast<size_t>(k - 1)].nz) {
                    if (t.a <= newA.amax && t.b <= newA.bmax && t.c <= newA.cmax &&
                        useful(t.a, t.b + 2, t.c + 1, nmax1, imax, budget))
                        newA.at(t.a, t.b, t.c) += U[static_cast<size_t>(k - 1)].v[t.i];
                }
                for (auto& t : Aacc.nz) {
                    int a = t.a + 1;
                    if (a <= newA.amax && t.b <= newA.bmax && t.c <= newA.cmax &&
                        useful(a, t.b + 2, t.c + 1, nmax1, imax, budget))
                        newA.at(a, t.b, t.c) += Aacc.v[t.i] * nu;
                }
                newA.finalize();
                Aacc = std::move(newA);
                acc_box(F, q, false, 0, 2, 1, U[static_cast<size_t>(k - 1)]);
                acc_box(F, beta, false, 0, 2, 1, Aacc);
            }
            // term 6
            {
                Box<K> newB;
                newB.init(amax, std::max(0, bmax - 1), std::max(0, cmax - 1));
                for (auto& t : P.nz) {
                    if (t.a == 0) continue;
                    int a = t.a - 1;
                    if (a <= newB.amax && t.b <= newB.bmax && t.c <= newB.cmax &&
                        useful(a, t.b + 1, t.c + 1, nmax1, imax, budget))
                        newB.at(a, t.b, t.c) += P.v[t.i];
                }
                for (auto& t : Bacc.nz) {
                    int a = t.a + 1;
                    if (a <= newB.amax && t.b <= newB.bmax && t.c <= newB.cmax &&
                        useful(a, t.b + 1, t.c + 1, nmax1, imax, budget))
                        newB.at(a, t.b, t.c) += Bacc.v[t.i] * nu;
                }
                newB.finalize();
                Bacc = std::move(newB);
                acc_box(F, beta, false, 0, 1, 1, Bacc);
            }

            // Close the order.
            Box<K>& T1k = Qt1[static_cast<size_t>(k)];
            T1k.init(amax, 0, cmax);
            if (bmax >= 1)
                for (int a = 0; a <= amax; ++a)
                    for (int c = 0; c <= cmax; ++c)
                        if (!rz(F.at(a, 1, c))) T1k.at(a, 0, c) = F.at(a, 1, c);
            T1k.finalize();
            if (k == 1 && !T1k.nz.empty())
                throw std::logic_error("t | Q1 violated: [t^1][y^1]Q nonzero");
            for (auto& t : T1k.nz) acc(F, T1k.v[t.i], beta, false, t.a, 1, t.c);
            F.finalize();
            for (auto& t : F.nz)
                if (t.b == 0) throw std::logic_error("[y^0] of [t^k]Q nonzero for k >= 1");
            Q[static_cast<size_t>(k)] = std::move(F);

            const Box<K>& Qk = Q[static_cast<size_t>(k)];
            Box<K>& Z = Q0[static_cast<size_t>(k)];
            Z.init(0, std::max(0, Qk.bmax), std::max(0, Qk.cmax));
            for (auto& t : Qk.nz)
                if (t.a == 0) Z.at(0, t.b, t.c) = Qk.v[t.i];
            Z.finalize();
            for (auto& t : Z.nz)
                if (t.b <= imax)
                    Tacc[static_cast<size_t>(t.b)][static_cast<size_t>(t.c)] += Z.v[t.i];

            if (k < N) {
                growth_k = k + 1;
                Box<K>& Uk = U[static_cast<size_t>(k)];
                int ubudget = N - (k + 1);
                int uam = std::min({k, nmax1, ubudget});
                int ubm = std::min(2 * k + 2, imax + ubudget);
                int ucm = std::max(0, nmax1 - 1);
                Uk.init(std::max(0, uam), std::max(0, ubm), ucm);
                for (int j = 0; j <= k; ++j) {
                    const Box<K>& X = Q0[static_cast<size_t>(j)];
                    const Box<K>& Y = Q[static_cast<size_t>(k - j)];
                    for (auto& tx : X.nz) {
                        for (auto& ty : Y.nz) {
                            int a = tx.a + ty.a, b = tx.b + ty.b, c = tx.c + ty.c;
                            if (a <= Uk.amax && b <= Uk.bmax && c <= Uk.cmax &&
                                useful(a, b + 2, c + 1, nmax1, imax, ubudget))
                                Uk.at(a, b, c) += X.v[tx.i] * Y.v[ty.i];
                        }
                    }
                }
                Uk.finalize();
            }

            if (spec.profile) {
                out.per_order_nonzeros.push_back(Qk.nz.size());
                out.per_order_seconds.push_back(
                    std::chrono::duration<double>(clock::now() - tick).count());
            }
        }

        out.ti.resize(static_cast<size_t>(imax) + 1);
        for (int i = 0; i <= imax; ++i) {
            auto& col = out.ti[static_cast<size_t>(i)];
            col.resize(static_cast<size_t>(spec.n_max) + 1, MultiPoly(out.coeff_vars));
            for (int n = 1; n <= spec.n_max; ++n)
                col[static_cast<size_t>(n)] =
                    to_poly(Tacc[static_cast<size_t>(i)][static_cast<size_t>(n - 1)]);
        }
        return out;
    }
};

const std::vector<std::string> kVars = {"q", "nu"};

MultiPoly mp_rat(const Rat& r) { return MultiPoly::constant(kVars, Coef(r)); }
MultiPoly mp_coef(const Coef& c) { return MultiPoly::constant(kVars, c); }
MultiPoly mp_polynu(const PolyNu& p) { return p.to_multipoly(kVars, "nu"); }
MultiPoly mp_polyqnu(const PolyQNu& p) { return p.to_multipoly(kVars, "q", "nu"); }

}  // namespace

EngineResult compute_T(const EngineSpec& spec) {
    if (spec.n_max < 1) throw std::invalid_argument("n_max >= 1 required");
    if (spec.i_max < 0) throw std::invalid_argument("i_max >= 0 required");
    if (spec.q_symbolic) {
        Engine<PolyQNu> e;
        e.nu = PolyQNu::nu();
        e.beta = e.nu - PolyQNu(Rat(1));
        e.q = PolyQNu::q();
        e.one = PolyQNu(Rat(1));
        return e.run(spec, mp_polyqnu);
    }
    if (spec.nu_symbolic) {
        Engine<PolyNu> e;
        e.nu = PolyNu::nu();
        e.beta = e.nu - PolyNu(Rat(1));
        e.q = PolyNu(spec.q);
        e.one = PolyNu(Rat(1));
        return e.run(spec, mp_polynu);
    }
    if (spec.nu.is_rational()) {
        Engine<Rat> e;
        e.nu = spec.nu.a();
        e.beta = e.nu - 1;
        e.q = spec.q;
        e.one = Rat(1);
        return e.run(spec, mp_rat);
    }
    Engine<Coef> e;
    e.nu = spec.nu;
    e.beta = e.nu - Coef(1);
    e.q = Coef(spec.q);
    e.one = Coef(1);
    return e.run(spec, mp_coef);
}

std::vector<Coef> ti_series_coef(const EngineResult& r, int i) {
    if (i < 0 || i >= static_cast<int>(r.ti.size())) throw std::invalid_argument("bad index i");
    std::vector<Coef> out;
    for (auto& p : r.ti[static_cast<size_t>(i)]) {
        if (p.is_zero()) {
            out.emplace_back(0);
            continue;
        }
        if (p.total_degree() != 0) throw std::domain_error("series is not numeric");
        out.push_back(p.terms().front().c);
    }
    return out;
}

DualSeries dualize_series(const Rat& q, const Coef& nu, int i, int n_max) {
    if (nu == Coef(1)) throw std::domain_error("nu = 1 pole in duality transform");
    Coef numinus1 = nu - Coef(1);
    Coef nu_star = Coef(1) + Coef(q) / numinus1;
    EngineSpec spec;
    spec.q = q;
    spec.nu = nu_star;
    spec.n_max = n_max;
    spec.i_max = i;
    auto run = compute_T(spec);
    auto t = ti_series_coef(run, i);
    DualSeries out;
    out.nu_star = nu_star;
    out.coeffs.assign(t.size(), Coef(0));
    Coef pref = Coef(q);
    Coef p3 = numinus1 * numinus1 * numinus1;
    for (int k = 0; k < i + 3; ++k) pref = pref / numinus1;
    Coef scale(1);
    for (size_t n = 0; n < t.size(); ++n) {
        out.coeffs[n] = pref * scale * t[n];
        scale = scale * p3 / Coef(q);
    }
    return out;
}

MultiPoly dualize_polynomial(const MultiPoly& p) {
    const auto& vars = p.vars();
    MultiPoly nu = MultiPoly::var(vars, "nu");
    MultiPoly one = MultiPoly::constant(vars, Coef(1));
    MultiPoly num = nu + one.scaled(Coef(2));
    MultiPoly den = nu - one;
    MultiPoly step1 = p.subst_var_rational("nu", num, den);
    MultiPoly z = MultiPoly::var(vars, "z");
    MultiPoly step2 = step1.subst_var("z", den * z);
    MultiPoly w = MultiPoly::var(vars, "w");
    MultiPoly step3 = step2.subst_var_rational("w", den.pow(3) * w, one.scaled(Coef(3)));
    MultiPoly r = step3.primitive_part();
    while (true) {
        MultiPoly quotient(vars);
        try {
            quotient = divide_exact(r, den);
        } catch (const std::domain_error&) {
            break;
        }
        r = quotient;
    }
    return r.primitive_part();
}

MultiPoly dualize_polynomial_at(const MultiPoly& p, const Coef& nu_value) {
    if (nu_value == Coef(1)) throw std::domain_error("nu = 1 pole in duality transform");
    const auto& vars = p.vars();
    Coef m = nu_value - Coef(1);
    MultiPoly z = MultiPoly::var(vars, "z");
    MultiPoly w = MultiPoly::var(vars, "w");
    Coef nu_star = Coef(1) + Coef(Rat(3)) / m;
    MultiPoly r = p.eval_var("nu", nu_star);
    r = r.subst_var("z", z.scaled(m));
    r = r.subst_var("w", w.scaled(m * m * m * Coef(Rat(1, 3))));
    bool quad = false;
    for (auto& t : r.terms())
        if (!t.c.is_rational()) quad = true;
    return quad ? r : r.primitive_part();
}

}  // namespace potts3
