#ifndef POTTS3_MULTIPOLY_HPP
#define POTTS3_MULTIPOLY_HPP

#include "potts3/coeff.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace potts3 {

using Exps = std::vector<uint32_t>;

// Graded lexicographic, ties broken by the declared variable order.
// Returns <0, 0, >0 like a three-way comparison, with "greater" = later in
// grlex, so canonical storage sorts *descending* under this.
inline int grlex_cmp(const Exps& x, const Exps& y) {
    uint64_t dx = std::accumulate(x.begin(), x.end(), uint64_t{0});
    uint64_t dy = std::accumulate(y.begin(), y.end(), uint64_t{0});
    if (dx != dy) return dx < dy ? -1 : 1;
    for (size_t i = 0; i < x.size(); ++i)
        if (x[i] != y[i]) return x[i] < y[i] ? -1 : 1;
    return 0;
}

// Sparse exact multivariate polynomial over Q or Q(sqrt d).
// Invariants: no zero coefficients, no duplicate exponent vectors, terms in
// descending grlex order, every exponent vector has size vars().size().
class MultiPoly {
  public:
    struct Term {
        Exps e;
        Coef c;
    };

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MultiPoly constant(std::vector<std::string> vars, Coef c) {
        MultiPoly p(std::move(vars));
        if (!c.is_zero()) p.terms_.push_back({Exps(p.vars_.size(), 0), std::move(c)});
        return p;
    }
    static MultiPoly var(std::vector<std::string> vars, const std::string& name,
                         uint32_t power = 1) {
        MultiPoly p(std::move(vars));
        Exps e(p.vars_.size(), 0);
        e[p.index_of(name)] = power;
        p.terms_.push_back({std::move(e), Coef(1)});
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t monomial_count() const { return terms_.size(); }

    size_t index_of(const std::string& name) const {
        for (size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return i;
        throw std::invalid_argument("unknown variable: " + name);
    }
    bool has_var(const std::string& name) const {
        for (auto& v : vars_)
            if (v == name) return true;
        return false;
    }

    uint32_t degree(const std::string& name) const {
        size_t i = index_of(name);
        uint32_t d = 0;
        for (auto& t : terms_) d = std::max(d, t.e[i]);
        return d;
    }
    uint64_t total_degree() const {
        uint64_t d = 0;
        for (auto& t : terms_)
            d = std::max<uint64_t>(d, std::accumulate(t.e.begin(), t.e.end(), uint64_t{0}));
        return d;
    }

    // Builds from an unsorted/duplicated term list.
    static MultiPoly from_terms(std::vector<std::string> vars, std::vector<Term> ts) {
        MultiPoly p(std::move(vars));
        p.terms_ = std::move(ts);
        p.canonicalize();
        return p;
    }

    friend MultiPoly operator+(const MultiPoly& x, const MultiPoly& y) {
        check_vars(x, y);
        MultiPoly r(x.vars_);
        r.terms_.reserve(x.terms_.size() + y.terms_.size());
        size_t i = 0, j = 0;
        while (i < x.terms_.size() && j < y.terms_.size()) {
            int c = grlex_cmp(x.terms_[i].e, y.terms_[j].e);
            if (c > 0)
                r.terms_.push_back(x.terms_[i++]);
            else if (c < 0)
                r.terms_.push_back(y.terms_[j++]);
            else {
                Coef s = x.terms_[i].c + y.terms_[j].c;
                if (!s.is_zero()) r.terms_.push_back({x.terms_[i].e, std::move(s)});
                ++i, ++j;
            }
        }
        for (; i < x.terms_.size(); ++i) r.terms_.push_back(x.terms_[i]);
        for (; j < y.terms_.size(); ++j) r.terms_.push_back(y.terms_[j]);
        return r;
    }
    friend MultiPoly operator-(const MultiPoly& x) {
        MultiPoly r = x;
        for (auto& t : r.terms_) t.c = -t.c;
        return r;
    }
    friend MultiPoly operator-(const MultiPoly& x, const MultiPoly& y) { return x + (-y); }

    friend MultiPoly operator*(const MultiPoly& x, const MultiPoly& y) {
        check_vars(x, y);
        MultiPoly r(x.vars_);
        if (x.is_zero() || y.is_zero()) return r;
        std::map<Exps, Coef, ExpsLess> acc;
        for (auto& tx : x.terms_) {
            for (auto& ty : y.terms_) {
                Exps e = tx.e;
                for (size_t k = 0; k < e.size(); ++k) e[k] += ty.e[k];
                auto it = acc.find(e);
                if (it == acc.end())
                    acc.emplace(std::move(e), tx.c * ty.c);
                else
                    it->second += tx.c * ty.c;
            }
        }
        r.terms_.reserve(acc.size());
        for (auto it = acc.rbegin(); it != acc.rend(); ++it)
            if (!it->second.is_zero()) r.terms_.push_back({it->first, it->second});
        return r;
    }

    MultiPoly& operator+=(const MultiPoly& y) { return *this = *this + y; }
    MultiPoly& operator-=(const MultiPoly& y) { return *this = *this - y; }
    MultiPoly& operator*=(const MultiPoly& y) { return *this = *this * y; }

    MultiPoly scaled(const Coef& c) const {
        MultiPoly r(vars_);
        if (c.is_zero()) return r;
        r.terms_ = terms_;
        for (auto& t : r.terms_) t.c *= c;
        return r;
    }

    MultiPoly pow(uint32_t n) const {
        MultiPoly r = constant(vars_, Coef(1));
        MultiPoly b = *this;
        while (n) {
            if (n & 1) r *= b;
            b = (n >>= 1) ? b * b : b;
        }
        return r;
    }

    // Multiplies by var^k (k may be negative if every term allows it).
    MultiPoly shifted(const std::string& name, int64_t k) const {
        size_t i = index_of(name);
        MultiPoly r = *this;
        for (auto& t : r.terms_) {
            int64_t e = static_cast<int64_t>(t.e[i]) + k;
            if (e < 0) throw std::domain_error("negative exponent after shift");
            t.e[i] = static_cast<uint32_t>(e);
        }
        return r;
    }

    MultiPoly derivative(const std::string& name) const {
        size_t i = index_of(name);
        MultiPoly r(vars_);
        for (auto& t : terms_) {
            if (t.e[i] == 0) continue;
            Term nt = t;
            nt.c *= Coef(Rat(static_cast<long>(t.e[i])));
            --nt.e[i];
            r.terms_.push_back(std::move(nt));
        }
        r.canonicalize();
        return r;
    }

    // Coefficient of name^k, as a polynomial in the same variable list.
    MultiPoly coeff_of(const std::string& name, uint32_t k) const {
        size_t i = index_of(name);
        MultiPoly r(vars_);
        for (auto& t : terms_) {
            if (t.e[i] != k) continue;
            Term nt = t;
            nt.e[i] = 0;
            r.terms_.push_back(std::move(nt));
        }
        r.canonicalize();
        return r;
    }

    // Dense coefficient list in `name` (index = power), entries drop `name`.
    std::vector<MultiPoly> coeffs_in(const std::string& name) const {
        uint32_t d = degree(name);
        std::vector<MultiPoly> out(d + 1, MultiPoly(vars_));
        size_t i = index_of(name);
        for (auto& t : terms_) {
            Term nt = t;
            nt.e[i] = 0;
            out[t.e[i]].terms_.push_back(std::move(nt));
        }
        for (auto& p : out) p.canonicalize();
        return out;
    }

    static MultiPoly from_coeffs_in(const std::string& name, const std::vector<MultiPoly>& cs) {
        if (cs.empty()) throw std::invalid_argument("empty coefficient list");
        MultiPoly r(cs[0].vars_);
        size_t i = r.index_of(name);
        for (uint32_t k = 0; k < cs.size(); ++k) {
            check_vars(r, cs[k]);
            for (auto t : cs[k].terms_) {
                if (t.e[i] != 0) throw std::invalid_argument("coefficient contains main var");
                t.e[i] = k;
                r.terms_.push_back(std::move(t));
            }
        }
        r.canonicalize();
        return r;
    }

    // Substitutes name := value (a Coef), keeping the variable slot.
    MultiPoly eval_var(const std::string& name, const Coef& value) const {
        size_t i = index_of(name);
        uint32_t d = degree(name);
        std::vector<Coef> powers(d + 1, Coef(1));
        for (uint32_t k = 1; k <= d; ++k) powers[k] = powers[k - 1] * value;
        MultiPoly r(vars_);
        for (auto& t : terms_) {
            Term nt = t;
            nt.c *= powers[t.e[i]];
            nt.e[i] = 0;
            if (!nt.c.is_zero()) r.terms_.push_back(std::move(nt));
        }
        r.canonicalize();
        return r;
    }

    // Substitutes name := p (same variable list).
    MultiPoly subst_var(const std::string& name, const MultiPoly& p) const {
        check_vars(*this, p);
        auto cs = coeffs_in(name);
        MultiPoly r(vars_);
        // Horner from the top.
        for (size_t k = cs.size(); k-- > 0;) r = r * p + cs[k];
        return r;
    }

    // Substitutes name := num/den and clears by den^deg. Returns the cleared
    // polynomial, i.e. den^deg * subst; callers track the denominator power.
    MultiPoly subst_var_rational(const std::string& name, const MultiPoly& num,
                                 const MultiPoly& den) const {
        check_vars(*this, num);
        check_vars(*this, den);
        auto cs = coeffs_in(name);
        MultiPoly r(vars_);
        for (size_t k = cs.size(); k-- > 0;) r = r * num + cs[k] * den.pow_cache(cs.size() - 1 - k);
        return r;
    }

    Coef eval_all(const std::vector<Coef>& values) const {
        if (values.size() != vars_.size()) throw std::invalid_argument("value count mismatch");
        Coef acc(0);
        for (auto& t : terms_) {
            Coef m = t.c;
            for (size_t i = 0; i < values.size(); ++i)
                for (uint32_t k = 0; k < t.e[i]; ++k) m *= values[i];
            acc += m;
        }
        return acc;
    }

    // Integer content (gcd of numerators / lcm of denominators) of a rational
    // polynomial; sign normalized to the leading term. Throws on QuadExt.
    Rat rational_content() const {
        Int g(0), l(1);
        for (auto& t : terms_) {
            if (!t.c.is_rational()) throw std::domain_error("content of non-rational polynomial");
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.a().get_num().get_mpz_t());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.c.a().get_den().get_mpz_t());
        }
        if (g == 0) return Rat(0);
        Rat c(g, l);
        c.canonicalize();
        if (sgn(terms_.front().c.a()) < 0) c = -c;
        return c;
    }
    MultiPoly primitive_part() const {
        if (is_zero()) return *this;
        Rat c = rational_content();
        return scaled(Coef(Rat(1) / c));
    }

    // Renames variables (same arity), e.g. to store beta-form fixtures.
    MultiPoly with_vars(std::vector<std::string> names) const {
        if (names.size() != vars_.size()) throw std::invalid_argument("arity mismatch");
        MultiPoly r = *this;
        r.vars_ = std::move(names);
        return r;
    }

    // Extends the variable list (new variables appended with exponent 0),
    // then re-canonicalizes under the new order.
    MultiPoly lifted(const std::vector<std::string>& new_vars) const {
        std::vector<size_t> pos(vars_.size());
        for (size_t i = 0; i < vars_.size(); ++i) {
            bool found = false;
            for (size_t j = 0; j < new_vars.size(); ++j)
                if (new_vars[j] == vars_[i]) pos[i] = j, found = true;
            if (!found) throw std::invalid_argument("lifted: missing variable " + vars_[i]);
        }
        MultiPoly r(new_vars);
        for (auto& t : terms_) {
            Exps e(new_vars.size(), 0);
            for (size_t i = 0; i < vars_.size(); ++i) e[pos[i]] = t.e[i];
            r.terms_.push_back({std::move(e), t.c});
        }
        r.canonicalize();
        return r;
    }

    friend bool operator==(const MultiPoly& x, const MultiPoly& y) {
        return x.vars_ == y.vars_ && (x - y).is_zero();
    }

    std::string str() const;

  private:
    struct ExpsLess {
        bool operator()(const Exps& a, const Exps& b) const { return grlex_cmp(a, b) < 0; }
    };

    MultiPoly pow_cache(uint32_t n) const { return pow(n); }

    static void check_vars(const MultiPoly& x, const MultiPoly& y) {
        if (x.vars_ != y.vars_) throw std::invalid_argument("variable-name mismatch");
    }

    void canonicalize() {
        for (auto& t : terms_)
            if (t.e.size() != vars_.size()) throw std::invalid_argument("exponent arity mismatch");
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term& a, const Term& b) { return grlex_cmp(a.e, b.e) > 0; });
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!out.empty() && grlex_cmp(out.back().e, t.e) == 0)
                out.back().c += t.c;
            else
                out.push_back(std::move(t));
        }
        out.erase(std::remove_if(out.begin(), out.end(),
                                 [](const Term& t) { return t.c.is_zero(); }),
                  out.end());
        terms_ = std::move(out);
    }

    std::vector<std::string> vars_;
    std::vector<Term> terms_;
};

inline std::string MultiPoly::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (auto& t : terms_) {
        if (!s.empty()) s += " + ";
        s += "(" + t.c.str() + ")";
        for (size_t i = 0; i < vars_.size(); ++i) {
            if (t.e[i] == 0) continue;
            s += "*" + vars_[i];
            if (t.e[i] > 1) s += "^" + std::to_string(t.e[i]);
        }
    }
    return s;
}

}  // namespace potts3

#endif
