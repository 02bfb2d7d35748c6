#ifndef POTTS3_BIGFLOAT_HPP
#define POTTS3_BIGFLOAT_HPP

#include "potts3/coeff.hpp"

#include <mpfr.h>

#include <string>
#include <utility>

namespace potts3 {

// Thin RAII wrapper over mpfr_t with value semantics. Precision is carried
// per value; binary operations use the max of the operand precisions.
class BigFloat {
  public:
    explicit BigFloat(mpfr_prec_t prec = 128) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    BigFloat(const BigFloat& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigFloat(BigFloat&& o) noexcept { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_swap(v_, o.v_); }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat from_rat(const Rat& r, mpfr_prec_t prec) {
        BigFloat x(prec);
        mpfr_set_q(x.v_, r.get_mpq_t(), MPFR_RNDN);
        return x;
    }
    static BigFloat from_coef(const Coef& c, mpfr_prec_t prec) {
        BigFloat x = from_rat(c.a(), prec);
        if (c.d() != 0) {
            BigFloat s(prec);
            mpfr_set_si(s.v_, static_cast<long>(c.d()), MPFR_RNDN);
            mpfr_sqrt(s.v_, s.v_, MPFR_RNDN);
            BigFloat b = from_rat(c.b(), prec);
            mpfr_fma(x.v_, b.v_, s.v_, x.v_, MPFR_RNDN);
        }
        return x;
    }
    static BigFloat from_double(double d, mpfr_prec_t prec) {
        BigFloat x(prec);
        mpfr_set_d(x.v_, d, MPFR_RNDN);
        return x;
    }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(v_); }
    int sign() const { return mpfr_sgn(v_); }
    std::string str(size_t digits = 20) const {
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*Rg", static_cast<int>(digits), v_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.prec(), b.prec()));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.prec(), b.prec()));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.prec(), b.prec()));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.prec(), b.prec()));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    BigFloat operator-() const {
        BigFloat r(prec());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigFloat& operator+=(const BigFloat& b) { mpfr_add(v_, v_, b.v_, MPFR_RNDN); return *this; }
    BigFloat& operator-=(const BigFloat& b) { mpfr_sub(v_, v_, b.v_, MPFR_RNDN); return *this; }
    BigFloat& operator*=(const BigFloat& b) { mpfr_mul(v_, v_, b.v_, MPFR_RNDN); return *this; }
    BigFloat& operator/=(const BigFloat& b) { mpfr_div(v_, v_, b.v_, MPFR_RNDN); return *this; }

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

    BigFloat abs() const {
        BigFloat r(prec());
        mpfr_abs(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigFloat sqrt() const {
        BigFloat r(prec());
        mpfr_sqrt(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigFloat log() const {
        BigFloat r(prec());
        mpfr_log(r.v_, v_, MPFR_RNDN);
        return r;
    }
    static BigFloat cos_pi_frac(long num, long den, mpfr_prec_t prec) {
        BigFloat r(prec), pi(prec);
        mpfr_const_pi(pi.v_, MPFR_RNDN);
        mpfr_mul_si(r.v_, pi.v_, num, MPFR_RNDN);
        mpfr_div_si(r.v_, r.v_, den, MPFR_RNDN);
        mpfr_cos(r.v_, r.v_, MPFR_RNDN);
        return r;
    }
    static BigFloat sin_pi_frac(long num, long den, mpfr_prec_t prec) {
        BigFloat r(prec), pi(prec);
        mpfr_const_pi(pi.v_, MPFR_RNDN);
        mpfr_mul_si(r.v_, pi.v_, num, MPFR_RNDN);
        mpfr_div_si(r.v_, r.v_, den, MPFR_RNDN);
        mpfr_sin(r.v_, r.v_, MPFR_RNDN);
        return r;
    }

  private:
    mpfr_t v_;
};

struct BigComplex {
    BigFloat re, im;

    explicit BigComplex(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
        BigFloat n = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    BigComplex operator-() const { return {-re, -im}; }
    BigFloat norm2() const { return re * re + im * im; }
    BigFloat abs() const { return norm2().sqrt(); }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

}  // namespace potts3

#endif
