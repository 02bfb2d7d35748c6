#ifndef POTTS3_COEFF_HPP
#define POTTS3_COEFF_HPP

#include "potts3/rational.hpp"

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace potts3 {

// Element a + b*sqrt(d) of Q or of the real quadratic field Q(sqrt d).
// d = 0 encodes a plain rational (then b = 0). d > 0 must be square-free;
// the real embedding always takes the positive square root.
// Mixing two different nonzero d values is a domain error.
class Coef {
  public:
    Coef() : d_(0) {}
    Coef(long n) : a_(n), d_(0) {}
    Coef(const Rat& a) : a_(a), d_(0) {}
    Coef(Rat a, Rat b, int64_t d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
        if (d_ < 0) throw std::invalid_argument("negative radicand");
        if (d_ == 0 && sgn(b_) != 0) throw std::invalid_argument("b != 0 with d = 0");
        normalize();
    }

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }
    int64_t d() const { return d_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_rational() const { return d_ == 0; }

    static int64_t join_d(int64_t x, int64_t y) {
        if (x == 0) return y;
        if (y == 0) return x;
        if (x != y) throw std::domain_error("incompatible quadratic extensions");
        return x;
    }

    friend Coef operator+(const Coef& x, const Coef& y) {
        Coef r;
        r.a_ = x.a_ + y.a_;
        r.b_ = x.b_ + y.b_;
        r.d_ = join_d(x.d_, y.d_);
        r.normalize();
        return r;
    }
    friend Coef operator-(const Coef& x, const Coef& y) {
        Coef r;
        r.a_ = x.a_ - y.a_;
        r.b_ = x.b_ - y.b_;
        r.d_ = join_d(x.d_, y.d_);
        r.normalize();
        return r;
    }
    friend Coef operator-(const Coef& x) {
        Coef r = x;
        r.a_ = -r.a_;
        r.b_ = -r.b_;
        return r;
    }
    friend Coef operator*(const Coef& x, const Coef& y) {
        Coef r;
        int64_t d = join_d(x.d_, y.d_);
        r.a_ = x.a_ * y.a_;
        if (d != 0 && sgn(x.b_) != 0 && sgn(y.b_) != 0) r.a_ += x.b_ * y.b_ * Rat(d);
        r.b_ = x.a_ * y.b_ + x.b_ * y.a_;
        r.d_ = d;
        r.normalize();
        return r;
    }
    Coef& operator+=(const Coef& y) { return *this = *this + y; }
    Coef& operator-=(const Coef& y) { return *this = *this - y; }
    Coef& operator*=(const Coef& y) { return *this = *this * y; }

    Coef conj() const {
        Coef r = *this;
        r.b_ = -r.b_;
        return r;
    }

    // Norm a^2 - d b^2, a rational.
    Rat norm() const { return a_ * a_ - Rat(d_) * b_ * b_; }

    Coef inv() const {
        if (is_zero()) throw std::domain_error("division by zero");
        if (d_ == 0) {
            Coef r;
            r.a_ = 1 / a_;
            return r;
        }
        Rat n = norm();
        if (sgn(n) == 0) throw std::domain_error("d not square-free: zero norm");
        Coef r = conj();
        r.a_ /= n;
        r.b_ /= n;
        r.normalize();
        return r;
    }
    friend Coef operator/(const Coef& x, const Coef& y) { return x * y.inv(); }
    Coef& operator/=(const Coef& y) { return *this = *this / y; }

    friend bool operator==(const Coef& x, const Coef& y) { return (x - y).is_zero(); }
    friend bool operator!=(const Coef& x, const Coef& y) { return !(x == y); }

    // Exact sign under the real embedding (positive square root of d).
    int sign() const {
        int sa = sgn(a_), sb = sgn(b_);
        if (d_ == 0 || sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        Rat lhs = a_ * a_, rhs = Rat(d_) * b_ * b_;
        int c = cmp(lhs, rhs);
        if (c == 0) throw std::domain_error("d not square-free: a^2 = d b^2");
        return c > 0 ? sa : sb;
    }

    // Exact square root within the same field when one exists:
    // sqrt of a rational r is either rational or b*sqrt(d) with r = b^2 d.
    std::optional<Coef> sqrt_in_field(int64_t field_d) const {
        if (sign() < 0) return std::nullopt;
        if (d_ == 0) {
            if (auto s = rat_sqrt_exact(a_)) return Coef(*s);
            if (field_d > 0) {
                Rat q = a_ / Rat(field_d);
                if (auto s = rat_sqrt_exact(q)) return Coef(Rat(0), *s, field_d);
            }
            return std::nullopt;
        }
        // General a + b sqrt(d): try (x + y sqrt(d))^2 = a + b sqrt(d):
        // x^2 + d y^2 = a, 2xy = b. Then x^2 is a root of t^2 - a t + d b^2/4.
        Rat disc = a_ * a_ - Rat(d_) * b_ * b_;
        auto sd = rat_sqrt_exact(disc);
        if (!sd) return std::nullopt;
        for (int pm = 0; pm < 2; ++pm) {
            Rat x2 = (a_ + (pm ? -*sd : *sd)) / 2;
            auto x = rat_sqrt_exact(x2);
            if (!x || sgn(*x) == 0) continue;
            Rat y = b_ / (2 * *x);
            Coef cand(*x, y, d_);
            if (cand.sign() < 0) cand = -cand;
            if (cand * cand == *this) return cand;
        }
        return std::nullopt;
    }

    std::string str() const {
        if (d_ == 0 || sgn(b_) == 0) return rat_str(a_);
        std::string s = rat_str(a_) + (sgn(b_) >= 0 ? "+" : "") + rat_str(b_) + "*sqrt(" +
                        std::to_string(d_) + ")";
        return s;
    }

    double to_double() const {
        double v = a_.get_d();
        if (d_ != 0) v += b_.get_d() * std::sqrt(static_cast<double>(d_));
        return v;
    }

  private:
    void normalize() {
        if (sgn(b_) == 0) d_ = 0;
    }

    Rat a_, b_;
    int64_t d_;
};

inline Coef operator*(const Rat& x, const Coef& y) { return Coef(x) * y; }
inline Coef operator*(const Coef& x, const Rat& y) { return x * Coef(y); }

}  // namespace potts3

#endif
