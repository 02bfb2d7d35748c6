#ifndef POTTS3_POLYNU_HPP
#define POTTS3_POLYNU_HPP

#include "potts3/multipoly.hpp"
#include "potts3/rational.hpp"

#include <vector>

namespace potts3 {

// Dense univariate polynomial in nu over Q; the engine's coefficient ring in
// symbolic-nu mode.
class PolyNu {
  public:
    PolyNu() = default;
    PolyNu(const Rat& r) {
        if (sgn(r) != 0) c_.push_back(r);
    }
    static PolyNu nu() {
        PolyNu p;
        p.c_ = {Rat(0), Rat(1)};
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return c_; }

    friend PolyNu operator+(const PolyNu& a, const PolyNu& b) {
        PolyNu r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < r.c_.size(); ++i) {
            if (i < a.c_.size()) r.c_[i] += a.c_[i];
            if (i < b.c_.size()) r.c_[i] += b.c_[i];
        }
        r.trim();
        return r;
    }
    friend PolyNu operator-(const PolyNu& a, const PolyNu& b) {
        PolyNu r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < r.c_.size(); ++i) {
            if (i < a.c_.size()) r.c_[i] += a.c_[i];
            if (i < b.c_.size()) r.c_[i] -= b.c_[i];
        }
        r.trim();
        return r;
    }
    PolyNu operator-() const {
        PolyNu r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend PolyNu operator*(const PolyNu& a, const PolyNu& b) {
        PolyNu r;
        if (a.is_zero() || b.is_zero()) return r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (sgn(a.c_[i]) == 0) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) {
                if (sgn(b.c_[j]) == 0) continue;
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        r.trim();
        return r;
    }
    PolyNu& operator+=(const PolyNu& b) { return *this = *this + b; }
    PolyNu& operator-=(const PolyNu& b) { return *this = *this - b; }

    void add_mul(const PolyNu& a, const PolyNu& b) {
        if (a.is_zero() || b.is_zero()) return;
        if (c_.size() < a.c_.size() + b.c_.size() - 1) c_.resize(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (sgn(a.c_[i]) == 0) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) {
                if (sgn(b.c_[j]) == 0) continue;
                c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        trim();
    }

    Rat eval(const Rat& x) const {
        Rat acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    MultiPoly to_multipoly(const std::vector<std::string>& vars, const std::string& name) const {
        std::vector<MultiPoly::Term> ts;
        MultiPoly probe(vars);
        size_t vi = probe.index_of(name);
        for (size_t i = 0; i < c_.size(); ++i) {
            if (sgn(c_[i]) == 0) continue;
            Exps e(vars.size(), 0);
            e[vi] = static_cast<uint32_t>(i);
            ts.push_back({std::move(e), Coef(c_[i])});
        }
        return MultiPoly::from_terms(vars, std::move(ts));
    }

  private:
    void trim() {
        while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

// Dense bivariate polynomial in (q, nu): the fully symbolic engine ring.
class PolyQNu {
  public:
    PolyQNu() = default;
    PolyQNu(const Rat& r) {
        if (sgn(r) != 0) c_.push_back(PolyNu(r));
    }
    static PolyQNu nu() {
        PolyQNu p;
        p.c_ = {PolyNu::nu()};
        return p;
    }
    static PolyQNu q() {
        PolyQNu p;
        p.c_ = {PolyNu(), PolyNu(Rat(1))};
        return p;
    }

    bool is_zero() const { return c_.empty(); }

    friend PolyQNu operator+(const PolyQNu& a, const PolyQNu& b) {
        PolyQNu r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < r.c_.size(); ++i) {
            if (i < a.c_.size()) r.c_[i] += a.c_[i];
            if (i < b.c_.size()) r.c_[i] += b.c_[i];
        }
        r.trim();
        return r;
    }
    friend PolyQNu operator-(const PolyQNu& a, const PolyQNu& b) {
        PolyQNu r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < r.c_.size(); ++i) {
            if (i < a.c_.size()) r.c_[i] += a.c_[i];
            if (i < b.c_.size()) r.c_[i] -= b.c_[i];
        }
        r.trim();
        return r;
    }
    PolyQNu operator-() const {
        PolyQNu r;
        r.c_.resize(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
        return r;
    }
    friend PolyQNu operator*(const PolyQNu& a, const PolyQNu& b) {
        PolyQNu r;
        if (a.is_zero() || b.is_zero()) return r;
        r.c_.resize(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j].add_mul(a.c_[i], b.c_[j]);
        r.trim();
        return r;
    }
    PolyQNu& operator+=(const PolyQNu& b) { return *this = *this + b; }

    PolyNu eval_q(const Rat& qv) const {
        PolyNu acc;
        for (size_t i = c_.size(); i-- > 0;) {
            PolyNu t = acc;
            acc = PolyNu();
            acc.add_mul(t, PolyNu(qv));
            acc += c_[i];
        }
        return acc;
    }

    MultiPoly to_multipoly(const std::vector<std::string>& vars, const std::string& qname,
                           const std::string& nuname) const {
        MultiPoly out(vars);
        MultiPoly qv = MultiPoly::var(vars, qname);
        for (size_t i = 0; i < c_.size(); ++i)
            out += c_[i].to_multipoly(vars, nuname) * qv.pow(static_cast<uint32_t>(i));
        return out;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<PolyNu> c_;
};

}  // namespace potts3

#endif
