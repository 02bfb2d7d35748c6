#ifndef POTTS3_HENSEL_HPP
#define POTTS3_HENSEL_HPP

#include "potts3/series.hpp"

#include <utility>
#include <vector>

namespace potts3 {

// Polynomial in an auxiliary variable with truncated-series coefficients.
template <class S>
using XPoly = std::vector<Series<S>>;

template <class S>
int xdeg(const XPoly<S>& p) {
    for (size_t i = p.size(); i-- > 0;)
        if (!p[i].is_zero()) return static_cast<int>(i);
    return -1;
}

template <class S>
XPoly<S> xmul(const XPoly<S>& a, const XPoly<S>& b) {
    if (a.empty() || b.empty()) return {};
    int n = a[0].order();
    for (auto& s : a) n = std::min(n, s.order());
    for (auto& s : b) n = std::min(n, s.order());
    XPoly<S> r(a.size() + b.size() - 1, Series<S>(n));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i].truncated(n) * b[j].truncated(n);
    return r;
}

template <class S>
XPoly<S> xadd(const XPoly<S>& a, const XPoly<S>& b) {
    int n = a.empty() ? (b.empty() ? 0 : b[0].order()) : a[0].order();
    for (auto& s : a) n = std::min(n, s.order());
    for (auto& s : b) n = std::min(n, s.order());
    XPoly<S> r(std::max(a.size(), b.size()), Series<S>(n));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i].truncated(n);
        if (i < b.size()) r[i] += b[i].truncated(n);
    }
    return r;
}

template <class S>
XPoly<S> xderiv(const XPoly<S>& p) {
    XPoly<S> r;
    for (size_t i = 1; i < p.size(); ++i) r.push_back(p[i].scaled(s_from_rat<S>(Rat(static_cast<long>(i)))));
    return r;
}

template <class S>
Series<S> xeval(const XPoly<S>& p, const Series<S>& z) {
    int n = z.order();
    Series<S> acc(n);
    for (size_t i = p.size(); i-- > 0;) acc = acc * z + p[i].truncated(n);
    return acc;
}

// Division by a MONIC divisor: p = q*d + r with deg r < deg d.
template <class S>
std::pair<XPoly<S>, XPoly<S>> xdivmod_monic(XPoly<S> p, const XPoly<S>& d) {
    int dd = static_cast<int>(d.size()) - 1;
    int n = p.empty() ? 0 : p[0].order();
    for (auto& s : p) n = std::min(s.order(), n);
    for (auto& s : d) n = std::min(s.order(), n);
    for (auto& s : p) s = s.truncated(n);
    if (static_cast<int>(p.size()) - 1 < dd) return {XPoly<S>{}, std::move(p)};
    XPoly<S> q(p.size() - static_cast<size_t>(dd), Series<S>(n));
    for (size_t k = p.size(); k-- > static_cast<size_t>(dd);) {
        Series<S> c = p[k];
        q[k - static_cast<size_t>(dd)] = c;
        for (int j = 0; j <= dd; ++j)
            p[k - static_cast<size_t>(dd - j)] -= c * d[static_cast<size_t>(j)].truncated(n);
    }
    p.resize(static_cast<size_t>(dd));
    for (auto& s : p) s = s.truncated(n);
    return {std::move(q), std::move(p)};
}

struct HenselError : std::domain_error {
    using std::domain_error::domain_error;
};

template <class S>
struct QuadraticLift {
    Series<S> sum;        // S with x^2 - S x + P dividing F
    Series<S> product;    // P
    XPoly<S> cofactor;    // F / (x^2 - S x + P)
};

// Lifts the quadratic factor x^2 - s0 x + p0 of F|_{w=0} to a factor over the
// power-series ring, by Newton iteration on the factor pair (order-doubling).
// Requires the seed to divide F at w=0 and to be coprime to its cofactor.
template <class S>
QuadraticLift<S> hensel_quadratic_lift(const XPoly<S>& F, const S& s0, const S& p0) {
    if (xdeg(F) < 2) throw HenselError("dividend degree < 2");
    int n = F[0].order();
    for (auto& s : F) n = std::min(n, s.order());

    auto quadratic = [&](const Series<S>& Sv, const Series<S>& Pv) {
        XPoly<S> A(3, Series<S>(n));
        A[0] = Pv;
        A[1] = -Sv;
        A[2] = Series<S>::constant(s_from_rat<S>(Rat(1)), n);
        return A;
    };

    Series<S> Sv = Series<S>::constant(s0, n), Pv = Series<S>::constant(p0, n);
    {
        // Seed must divide F at w = 0 and be coprime to its cofactor there.
        XPoly<S> A = quadratic(Sv, Pv);
        auto [q, r] = xdivmod_monic<S>(F, A);
        for (auto& s : r)
            if (!s_is_zero(s[0])) throw HenselError("seed is not a factor at w = 0");
        auto [q2, qr] = xdivmod_monic<S>(q, A);
        (void)q2;
        if (static_cast<int>(qr.size()) < 2) qr.resize(2, Series<S>(n));
        S det0 = qr[0][0] * qr[0][0] + s0 * qr[0][0] * qr[1][0] + p0 * qr[1][0] * qr[1][0];
        if (s_is_zero(det0))
            throw HenselError("lifting obstruction: seed not coprime to cofactor");
    }

    int iters = 1;
    while ((1 << iters) <= n + 1) ++iters;
    ++iters;
    for (int it = 0; it < iters; ++it) {
        XPoly<S> A = quadratic(Sv, Pv);
        auto [Q, R] = xdivmod_monic<S>(F, A);
        if (static_cast<int>(R.size()) < 2) R.resize(2, Series<S>(n));
        if (R[0].is_zero() && R[1].is_zero()) {
            return {Sv, Pv, std::move(Q)};
        }
        // Qbar = Q mod A, represented as q0 + q1 x.
        auto [ignore, Qr] = xdivmod_monic<S>(Q, A);
        if (static_cast<int>(Qr.size()) < 2) Qr.resize(2, Series<S>(n));
        // Invert q0 + q1 x in the rank-2 algebra S[x]/(x^2 - Sx + P):
        // (q0 + q1 x)(u0 + u1 x) = (q0 u0 - P q1 u1) + (q0 u1 + q1 u0 + S q1 u1) x.
        Series<S> det = Qr[0] * Qr[0] + Sv * Qr[0] * Qr[1] + Pv * Qr[1] * Qr[1];
        if (s_is_zero(det[0]))
            throw HenselError("lifting obstruction: seed not coprime to cofactor");
        Series<S> u0 = (Qr[0] + Sv * Qr[1]) / det;
        Series<S> u1 = -(Qr[1] / det);
        // a = R * Q^{-1} mod A.
        Series<S> a0 = R[0] * u0 - Pv * (R[1] * u1);
        Series<S> a1 = R[0] * u1 + R[1] * u0 + Sv * (R[1] * u1);
        // A <- A + a1 x + a0, i.e. S <- S - a1, P <- P + a0.
        Sv = Sv - a1;
        Pv = Pv + a0;
    }
    {
        XPoly<S> A = quadratic(Sv, Pv);
        auto [Q, R] = xdivmod_monic<S>(F, A);
        for (auto& s : R)
            if (!s.is_zero()) throw HenselError("lift failed to converge");
        return {Sv, Pv, std::move(Q)};
    }
}

// The unique series z(w) with z(0) = z0 and P(w, z(w)) = O(w^{order+1}),
// for a simple-root seed: P(0,z0) = 0, dP/dz(0,z0) != 0. P is given as a
// polynomial in z with series coefficients.
template <class S>
Series<S> newton_algebraic_series(const XPoly<S>& P, const S& z0, int order) {
    XPoly<S> Pz = xderiv(P);
    {
        Series<S> z = Series<S>::constant(z0, 0);
        XPoly<S> P0;
        for (auto& s : P) P0.push_back(s.truncated(0));
        if (!xeval(P0, z).is_zero()) throw std::domain_error("seed is not a root at w = 0");
        XPoly<S> Pz0;
        for (auto& s : Pz) Pz0.push_back(s.truncated(0));
        if (xeval(Pz0, z).is_zero()) throw std::domain_error("seed is not a simple root");
    }
    int m = 0;
    Series<S> z = Series<S>::constant(z0, 0);
    while (m < order) {
        int next = std::min(order, 2 * m + 1);
        z = z.zero_extended(next);  // correction below fixes the extended part
        XPoly<S> Pt, Pzt;
        for (auto& s : P) Pt.push_back(s.truncated(next));
        for (auto& s : Pz) Pzt.push_back(s.truncated(next));
        Series<S> num = xeval(Pt, z);
        Series<S> den = xeval(Pzt, z);
        z = z - num / den;
        m = next;
    }
    return z;
}

}  // namespace potts3

#endif
