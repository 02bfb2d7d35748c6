#include "potts3/aberth.hpp"

#include <stdexcept>

namespace potts3 {

namespace {

BigComplex eval_poly(const std::vector<BigComplex>& c, const BigComplex& z) {
    mpfr_prec_t prec = z.re.prec();
    BigComplex acc(prec);
    for (size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
    return acc;
}

}  // namespace

std::vector<NumericRoot> complex_roots_numeric(const UCPoly& p, unsigned digits) {
    int n = uc_degree(p);
    if (n < 1) throw std::domain_error("need degree >= 1");
    mpfr_prec_t prec = static_cast<mpfr_prec_t>(digits * 3.33) + 96;

    std::vector<BigComplex> c, dc;
    for (int i = 0; i <= n; ++i)
        c.emplace_back(BigFloat::from_coef(p[static_cast<size_t>(i)], prec), BigFloat(prec));
    for (int i = 1; i <= n; ++i) {
        BigComplex t = c[static_cast<size_t>(i)];
        t.re *= BigFloat::from_rat(Rat(i), prec);
        t.im *= BigFloat::from_rat(Rat(i), prec);
        dc.push_back(t);
    }

    // Seed radius from the Cauchy-style bound (1 + max|a_i|/|a_n|) / 2.
    BigFloat lead = c[static_cast<size_t>(n)].abs();
    BigFloat maxc(prec);
    for (int i = 0; i < n; ++i) {
        BigFloat a = c[static_cast<size_t>(i)].abs();
        if (a > maxc) maxc = a;
    }
    BigFloat radius = (BigFloat::from_rat(Rat(1), prec) + maxc / lead) * BigFloat::from_rat(Rat(1, 2), prec);

    std::vector<BigComplex> z;
    for (int i = 0; i < n; ++i) {
        // Slightly irrational angle offset avoids symmetric stalls.
        long num = 2 * i * 7 + 3, den = 7L * n;
        z.emplace_back(radius * BigFloat::cos_pi_frac(num, den, prec),
                       radius * BigFloat::sin_pi_frac(num, den, prec));
    }

    BigFloat target(prec);
    {
        // 10^-digits relative to the seed radius.
        BigFloat ten = BigFloat::from_rat(Rat(10), prec);
        BigFloat t = BigFloat::from_rat(Rat(1), prec);
        for (unsigned i = 0; i < digits + 2; ++i) t /= ten;
        target = t * (radius + BigFloat::from_rat(Rat(1), prec));
    }

    const int max_iter = 4000;
    for (int iter = 0; iter < max_iter; ++iter) {
        bool moved = false;
        for (int i = 0; i < n; ++i) {
            BigComplex pv = eval_poly(c, z[static_cast<size_t>(i)]);
            if (pv.is_zero()) continue;
            BigComplex dv = eval_poly(dc, z[static_cast<size_t>(i)]);
            if (dv.is_zero()) {
                // Nudge off a critical point.
                z[static_cast<size_t>(i)].re += target;
                moved = true;
                continue;
            }
            BigComplex newton = pv / dv;
            BigComplex sum(prec);
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                BigComplex d = z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)];
                if (d.is_zero()) {
                    d.re += target;
                }
                sum = sum + BigComplex(BigFloat::from_rat(Rat(1), prec), BigFloat(prec)) / d;
            }
            BigComplex denom = BigComplex(BigFloat::from_rat(Rat(1), prec), BigFloat(prec)) -
                               newton * sum;
            BigComplex w = newton / denom;
            z[static_cast<size_t>(i)] = z[static_cast<size_t>(i)] - w;
            if (w.abs() > target * BigFloat::from_rat(Rat(1, 1000), prec)) moved = true;
        }
        if (!moved) break;
        if (iter == max_iter - 1)
            throw std::runtime_error("requested precision unreachable within iteration budget");
    }

    std::vector<NumericRoot> out;
    for (int i = 0; i < n; ++i) {
        BigComplex pv = eval_poly(c, z[static_cast<size_t>(i)]);
        BigComplex dv = eval_poly(dc, z[static_cast<size_t>(i)]);
        BigFloat err = dv.is_zero() ? pv.abs() : (pv / dv).abs() * BigFloat::from_rat(Rat(n), prec);
        out.push_back({z[static_cast<size_t>(i)], err});
    }
    return out;
}

}  // namespace potts3
