#pragma once

#include <string>
#include <vector>

#include "wbs/binom.hpp"
#include "wbs/errors.hpp"
#include "wbs/rational.hpp"

namespace wbs {

// Normalizing the sequence {f(m,a,r)}_r by S = sum_r f(m,a,r) yields a
// probability distribution on {0, ..., m}. Both the normalizer and the mean
// have closed forms, and every closed form here is computed alongside its
// direct-summation route with mandatory exact agreement: the closed forms
// are where transcription errors would hide.

// S(m, a) = sum_r f(m,a,r) = ((a+1)/a)((2a+1)/(a+1))^m - 1/a, computed by
// both routes; disagreement throws identity_violation.
inline Rational normalizer(long m, const Rational& a) {
    SeqSpec spec(m, a); // validates m, a
    Rational direct = 0;
    for (const Rational& v : f_sequence(spec).values) direct += v;
    Rational closed = (Rational(1) + a) / a * ((Rational(2) * a + 1) / (a + Rational(1))).pow(m) -
                      Rational(1) / a;
    if (direct != closed)
        throw identity_violation("normalizer: direct sum " + direct.to_fraction_string() +
                                 " != closed form " + closed.to_fraction_string() + " at m=" +
                                 std::to_string(m) + " a=" + a.to_fraction_string());
    return closed;
}

struct Distribution {
    SeqSpec spec;
    Rational normalizer;
    std::vector<Rational> pmf; // pmf[r] = f(m,a,r)/S, sums to exactly 1
};

inline Distribution pmf(long m, const Rational& a) {
    SeqSpec spec(m, a);
    Rational s = normalizer(m, a);
    Distribution dist{spec, s, {}};
    Rational total = 0;
    for (const Rational& v : f_sequence(spec).values) {
        dist.pmf.push_back(v / s);
        total += dist.pmf.back();
    }
    if (total != Rational(1))
        throw identity_violation("pmf: probabilities sum to " + total.to_fraction_string());
    return dist;
}

// sum_{r=i}^{m} r x^r = (i x^i - (i-1) x^(i+1) - (m+1) x^(m+1) + m x^(m+2))
//                       / (1-x)^2,  for x != 1,
// cross-checked against the direct sum.
inline Rational geometric_moment_sum(long i, long m, const Rational& x) {
    if (i < 0 || i > m) throw std::invalid_argument("geometric_moment_sum: need 0 <= i <= m");
    if (x == Rational(1))
        throw std::invalid_argument("geometric_moment_sum: x = 1 is a pole of the closed form");
    Rational xi = x.pow(i);
    Rational xm1 = x.pow(m + 1);
    Rational closed = (Rational(i) * xi - Rational(i - 1) * xi * x - Rational(m + 1) * xm1 +
                       Rational(m) * xm1 * x) /
                      ((Rational(1) - x) * (Rational(1) - x));
    Rational direct = 0;
    Rational xr = xi;
    for (long r = i; r <= m; ++r) {
        direct += Rational(r) * xr;
        xr *= x;
    }
    if (direct != closed)
        throw identity_violation("geometric_moment_sum: direct " + direct.to_fraction_string() +
                                 " != closed " + closed.to_fraction_string());
    return closed;
}

// E(X) = ([ (a+1)/(2a+1) m + (a+1)/a^2 ] ((2a+1)/(a+1))^m - ( m/a + (a+1)/a^2 ))
//        / ( (a+1)/a ((2a+1)/(a+1))^m - 1/a ).
inline Rational mean_closed_form(long m, const Rational& a) {
    SeqSpec spec(m, a);
    Rational ap1 = a + Rational(1);
    Rational tap1 = Rational(2) * a + Rational(1);
    Rational growth = (tap1 / ap1).pow(m);
    Rational num = (ap1 / tap1 * Rational(m) + ap1 / (a * a)) * growth -
                   (Rational(m) / a + ap1 / (a * a));
    Rational den = ap1 / a * growth - Rational(1) / a;
    return num / den;
}

// sum_r r * pmf[r], exact; must agree with the closed form.
inline Rational mean_direct(long m, const Rational& a) {
    Distribution dist = pmf(m, a);
    Rational mean = 0;
    for (long r = 0; r <= m; ++r) mean += Rational(r) * dist.pmf[r];
    Rational closed = mean_closed_form(m, a);
    if (mean != closed)
        throw identity_violation("mean: direct " + mean.to_fraction_string() + " != closed " +
                                 closed.to_fraction_string() + " at m=" + std::to_string(m) +
                                 " a=" + a.to_fraction_string());
    return mean;
}

// The large-m mean: am/(2a+1) + 1/a.
inline Rational asymptotic_mean(long m, const Rational& a) {
    if (a.sign() <= 0) throw std::invalid_argument("asymptotic_mean: a must be > 0");
    return a * Rational(m) / (Rational(2) * a + 1) + Rational(1) / a;
}

// Signed distance between the mean and the predicted mode (integer a only,
// since the mode formula needs it).
inline Rational mode_vs_mean_gap(long m, long a) {
    long mode = predicted_peak(m, a);
    return mean_closed_form(m, Rational(a)) - Rational(mode);
}

} // namespace wbs
