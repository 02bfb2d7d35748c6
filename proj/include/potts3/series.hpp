#ifndef POTTS3_SERIES_HPP
#define POTTS3_SERIES_HPP

#include "potts3/multipoly.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace potts3 {

// Scalar-ring glue. Series<S> works over any S providing these.
inline bool s_is_zero(const Rat& x) { return sgn(x) == 0; }
inline bool s_is_zero(const Coef& x) { return x.is_zero(); }
template <class S>
S s_from_rat(const Rat& r) {
    return S(r);
}
inline Rat s_div(const Rat& a, const Rat& b) { return a / b; }
inline Coef s_div(const Coef& a, const Coef& b) { return a / b; }
inline std::optional<Rat> s_sqrt(const Rat& x) {
    auto r = rat_sqrt_exact(x);
    if (!r) return std::nullopt;
    return *r;
}
inline std::optional<Coef> s_sqrt(const Coef& x) { return x.sqrt_in_field(x.d()); }

// Truncated formal power series: coefficients for exponents 0..order.
// Arithmetic never claims precision beyond the minimum order of its inputs.
template <class S>
class Series {
  public:
    Series() = default;
    explicit Series(int order) : c_(static_cast<size_t>(order) + 1) {}
    Series(std::vector<S> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw std::invalid_argument("empty series");
    }
    static Series constant(const S& v, int order) {
        Series s(order);
        s.c_[0] = v;
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const S& operator[](int i) const { return c_[static_cast<size_t>(i)]; }
    S& at(int i) { return c_[static_cast<size_t>(i)]; }
    const std::vector<S>& coeffs() const { return c_; }

    bool is_zero() const {
        for (auto& x : c_)
            if (!s_is_zero(x)) return false;
        return true;
    }
    // Lowest exponent with a nonzero coefficient, or order()+1 if none.
    int valuation() const {
        for (size_t i = 0; i < c_.size(); ++i)
            if (!s_is_zero(c_[i])) return static_cast<int>(i);
        return order() + 1;
    }

    Series truncated(int new_order) const {
        if (new_order > order()) throw std::domain_error("order underflow: cannot extend");
        Series r(new_order);
        for (int i = 0; i <= new_order; ++i) r.c_[static_cast<size_t>(i)] = c_[static_cast<size_t>(i)];
        return r;
    }
    // Extends with zero coefficients; only valid when the tail is known to be
    // exact (polynomials embedded as series).
    Series zero_extended(int new_order) const {
        Series r = *this;
        r.c_.resize(static_cast<size_t>(new_order) + 1);
        return r;
    }

    friend Series operator+(const Series& a, const Series& b) {
        int n = std::min(a.order(), b.order());
        Series r(n);
        for (int i = 0; i <= n; ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend Series operator-(const Series& a, const Series& b) {
        int n = std::min(a.order(), b.order());
        Series r(n);
        for (int i = 0; i <= n; ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }
    Series operator-() const {
        Series r = *this;
        for (auto& x : r.c_) x = S() - x;
        return r;
    }
    friend Series operator*(const Series& a, const Series& b) {
        int n = std::min(a.order(), b.order());
        Series r(n);
        for (int i = 0; i <= n; ++i) {
            if (s_is_zero(a.c_[static_cast<size_t>(i)])) continue;
            for (int j = 0; i + j <= n; ++j) {
                if (s_is_zero(b.c_[static_cast<size_t>(j)])) continue;
                r.c_[static_cast<size_t>(i + j)] =
                    r.c_[static_cast<size_t>(i + j)] + a.c_[static_cast<size_t>(i)] * b.c_[static_cast<size_t>(j)];
            }
        }
        return r;
    }
    Series scaled(const S& v) const {
        Series r = *this;
        for (auto& x : r.c_) x = x * v;
        return r;
    }
    Series& operator+=(const Series& b) { return *this = *this + b; }
    Series& operator-=(const Series& b) { return *this = *this - b; }
    Series& operator*=(const Series& b) { return *this = *this * b; }

    Series inverse() const {
        if (s_is_zero(c_[0])) throw std::domain_error("non-invertible constant term");
        int n = order();
        Series r(n);
        r.c_[0] = s_div(s_from_rat<S>(Rat(1)), c_[0]);
        for (int k = 1; k <= n; ++k) {
            S acc{};
            for (int i = 1; i <= k; ++i)
                if (!s_is_zero(c_[static_cast<size_t>(i)]))
                    acc = acc + c_[static_cast<size_t>(i)] * r.c_[static_cast<size_t>(k - i)];
            r.c_[static_cast<size_t>(k)] = S() - s_div(acc, c_[0]);
        }
        return r;
    }
    friend Series operator/(const Series& a, const Series& b) {
        int n = std::min(a.order(), b.order());
        if (s_is_zero(b.c_[0])) throw std::domain_error("non-invertible constant term");
        Series r(n);
        for (int k = 0; k <= n; ++k) {
            S acc = a.c_[static_cast<size_t>(k)];
            for (int i = 1; i <= k; ++i)
                if (!s_is_zero(b.c_[static_cast<size_t>(i)]))
                    acc = acc - b.c_[static_cast<size_t>(i)] * r.c_[static_cast<size_t>(k - i)];
            r.c_[static_cast<size_t>(k)] = s_div(acc, b.c_[0]);
        }
        return r;
    }

    Series derivative() const {
        if (order() == 0) return Series(0);
        Series r(order() - 1);
        for (int i = 1; i <= order(); ++i)
            r.c_[static_cast<size_t>(i - 1)] = c_[static_cast<size_t>(i)] * s_from_rat<S>(Rat(i));
        return r;
    }
    // Antiderivative with constant term c0; order increases by one.
    Series integral(const S& c0) const {
        Series r(order() + 1);
        r.c_[0] = c0;
        for (int i = 0; i <= order(); ++i)
            r.c_[static_cast<size_t>(i + 1)] = s_div(c_[static_cast<size_t>(i)], s_from_rat<S>(Rat(i + 1)));
        return r;
    }
    // Multiplication by w^k (k >= 0 shifts up and drops the tail beyond order;
    // negative k requires the low coefficients to vanish).
    Series shifted(int k) const {
        if (k >= 0) {
            Series t(order());
            for (int i = 0; i <= order(); ++i)
                t.c_[static_cast<size_t>(i)] = i - k >= 0 ? c_[static_cast<size_t>(i - k)] : S{};
            return t;
        }
        for (int i = 0; i < -k; ++i)
            if (!s_is_zero(c_[static_cast<size_t>(i)]))
                throw std::domain_error("negative shift of series with nonzero low coefficients");
        Series t(order() + k);
        for (int i = 0; i <= t.order(); ++i) t.c_[static_cast<size_t>(i)] = c_[static_cast<size_t>(i - k)];
        return t;
    }

    // Composition a(b(w)) requires b(0) = 0.
    Series compose(const Series& inner) const {
        if (!s_is_zero(inner.c_[0])) throw std::domain_error("compose needs zero constant term");
        int n = std::min(order(), inner.order());
        Series r = constant(c_[0], n);
        Series p = constant(s_from_rat<S>(Rat(1)), n);
        for (int k = 1; k <= n; ++k) {
            p = p * inner;
            r = r + p.scaled(c_[static_cast<size_t>(k)]);
        }
        return r;
    }

    // g with g^2 = f to the stated order; the constant term must be a perfect
    // square in the coefficient field; branch fixed by the returned constant
    // term (the principal square root of c_[0]).
    Series sqrt() const {
        int v = valuation();
        if (v > order()) return *this;  // zero series
        if (v > 0) {
            if (v % 2 != 0) throw std::domain_error("odd valuation has no series square root");
            Series g = shifted(-v).sqrt();  // order() - v
            Series r(order() - v / 2);
            for (int i = 0; i <= g.order(); ++i) r.c_[static_cast<size_t>(i + v / 2)] = g.c_[static_cast<size_t>(i)];
            return r;
        }
        auto s0 = s_sqrt(c_[0]);
        if (!s0) throw std::domain_error("constant term not a perfect square");
        int n = order();
        Series r(n);
        r.c_[0] = *s0;
        S two = s_from_rat<S>(Rat(2));
        for (int k = 1; k <= n; ++k) {
            S acc = c_[static_cast<size_t>(k)];
            for (int i = 1; i < k; ++i)
                acc = acc - r.c_[static_cast<size_t>(i)] * r.c_[static_cast<size_t>(k - i)];
            r.c_[static_cast<size_t>(k)] = s_div(acc, two * r.c_[0]);
        }
        return r;
    }

    friend bool operator==(const Series& a, const Series& b) {
        if (a.order() != b.order()) return false;
        return (a - b).is_zero();
    }

  private:
    std::vector<S> c_;
};

}  // namespace potts3

#endif
