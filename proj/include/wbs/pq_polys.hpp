#pragma once

#include <string>
#include <vector>

#include "wbs/binom.hpp"
#include "wbs/errors.hpp"
#include "wbs/rational.hpp"
#include "wbs/report.hpp"

namespace wbs {

// The polynomial pair P_n, Q_n in Z[a][l] defined by
//
//   P_0 = Q_0 = 1,
//   Q_{n+1} = (al + 3 - n) Q_n              ( = prod_{i=0}^{n} (al + 3 - i) ),
//   P_{n+1} = a((a+1)l + 3 + n) P_n - a Q_{n+1}.
//
// P_n/Q_n is the exact remainder factor left after stripping the top n terms
// of the fall inequality on the m = (2a+1)l+5 family (see
// verify_remainder_identity below). Written in l with coefficients in Z[a]:
//
//   P_n = a^n l^n - sum_{i<n} p_{n,i}(a) l^i      (p_{n,i} is the NEGATED
//   Q_n = a^n l^n + sum_{i<n} q_{n,i}(a) l^i       coefficient, by convention)

// Integer-coefficient polynomial in a; coefficient index = power of a.
// Trailing zeros are trimmed and the zero polynomial is the empty vector.
class APoly {
public:
    APoly() = default;
    APoly(std::initializer_list<long> cs) {
        for (long c : cs) coeffs_.emplace_back(c);
        trim();
    }
    explicit APoly(std::vector<Integer> cs) : coeffs_(std::move(cs)) { trim(); }
    static APoly constant(Integer c) {
        APoly p;
        p.coeffs_.push_back(std::move(c));
        p.trim();
        return p;
    }
    // c * a^e
    static APoly monomial(Integer c, long e) {
        APoly p;
        if (c != 0) {
            p.coeffs_.assign(e, Integer(0));
            p.coeffs_.push_back(std::move(c));
        }
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; } // -1 for zero
    const std::vector<Integer>& coefficients() const { return coeffs_; }
    Integer coefficient(long e) const {
        return (e >= 0 && e < static_cast<long>(coeffs_.size())) ? coeffs_[e] : Integer(0);
    }

    friend bool operator==(const APoly& x, const APoly& y) { return x.coeffs_ == y.coeffs_; }

    friend APoly operator+(const APoly& x, const APoly& y) {
        APoly r;
        r.coeffs_.resize(std::max(x.coeffs_.size(), y.coeffs_.size()), Integer(0));
        for (size_t i = 0; i < r.coeffs_.size(); ++i)
            r.coeffs_[i] = x.coefficient(i) + y.coefficient(i);
        r.trim();
        return r;
    }
    friend APoly operator-(const APoly& x, const APoly& y) { return x + (-y); }
    APoly operator-() const {
        APoly r = *this;
        for (Integer& c : r.coeffs_) c = -c;
        return r;
    }
    friend APoly operator*(const APoly& x, const APoly& y) {
        if (x.is_zero() || y.is_zero()) return {};
        APoly r;
        r.coeffs_.assign(x.coeffs_.size() + y.coeffs_.size() - 1, Integer(0));
        for (size_t i = 0; i < x.coeffs_.size(); ++i)
            for (size_t j = 0; j < y.coeffs_.size(); ++j)
                r.coeffs_[i + j] += x.coeffs_[i] * y.coeffs_[j];
        r.trim();
        return r;
    }
    friend APoly operator*(const Integer& c, const APoly& x) {
        return APoly::constant(c) * x;
    }

    Rational evaluate(const Rational& a) const {
        Rational acc = 0; // Horner
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * a + Rational(*it);
        return acc;
    }

    std::string to_string(const std::string& var = "a") const {
        if (is_zero()) return "0";
        std::string out;
        for (long e = degree(); e >= 0; --e) {
            const Integer& c = coeffs_[e];
            if (c == 0) continue;
            if (!out.empty()) out += (c > 0) ? " + " : " - ";
            else if (c < 0) out += "-";
            Integer mag = ::abs(c);
            bool unit = (mag == 1 && e > 0);
            if (!unit) out += mag.get_str();
            if (e > 0) out += var + (e > 1 ? "^" + std::to_string(e) : "");
        }
        return out;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Integer> coeffs_;
};

// Polynomial in l with APoly coefficients; coefficient index = power of l.
class LPoly {
public:
    LPoly() = default;
    LPoly(std::initializer_list<APoly> cs) : coeffs_(cs) { trim(); }
    static LPoly constant(APoly c) {
        LPoly p;
        p.coeffs_.push_back(std::move(c));
        p.trim();
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    // Coefficient of l^j; out-of-range j gives the zero polynomial, so
    // recurrence cross-checks need no boundary cases.
    APoly coeff(long j) const {
        return (j >= 0 && j < static_cast<long>(coeffs_.size())) ? coeffs_[j] : APoly{};
    }

    friend bool operator==(const LPoly& x, const LPoly& y) { return x.coeffs_ == y.coeffs_; }

    friend LPoly operator+(const LPoly& x, const LPoly& y) {
        LPoly r;
        r.coeffs_.resize(std::max(x.coeffs_.size(), y.coeffs_.size()));
        for (size_t j = 0; j < r.coeffs_.size(); ++j)
            r.coeffs_[j] = x.coeff(j) + y.coeff(j);
        r.trim();
        return r;
    }
    friend LPoly operator-(const LPoly& x, const LPoly& y) {
        LPoly r;
        r.coeffs_.resize(std::max(x.coeffs_.size(), y.coeffs_.size()));
        for (size_t j = 0; j < r.coeffs_.size(); ++j)
            r.coeffs_[j] = x.coeff(j) - y.coeff(j);
        r.trim();
        return r;
    }
    friend LPoly operator*(const LPoly& x, const LPoly& y) {
        if (x.is_zero() || y.is_zero()) return {};
        LPoly r;
        r.coeffs_.assign(x.coeffs_.size() + y.coeffs_.size() - 1, APoly{});
        for (size_t i = 0; i < x.coeffs_.size(); ++i)
            for (size_t j = 0; j < y.coeffs_.size(); ++j)
                r.coeffs_[i + j] = r.coeffs_[i + j] + x.coeffs_[i] * y.coeffs_[j];
        r.trim();
        return r;
    }
    friend LPoly operator*(const APoly& c, const LPoly& x) {
        return LPoly::constant(c) * x;
    }

    Rational evaluate(const Rational& a, const Rational& l) const {
        Rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * l + it->evaluate(a);
        return acc;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (long j = degree(); j >= 0; --j) {
            if (coeffs_[j].is_zero()) continue;
            if (!out.empty()) out += " + ";
            out += "(" + coeffs_[j].to_string() + ")";
            if (j > 0) out += "l" + (j > 1 ? "^" + std::to_string(j) : "");
        }
        return out;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
    std::vector<APoly> coeffs_;
};

struct PQPair {
    long n = 0;
    LPoly P;
    LPoly Q;
};

// Builds P_0..P_n_max, Q_0..Q_n_max by the defining recurrences in exact
// integer-polynomial arithmetic.
inline std::vector<PQPair> build_pq(long n_max) {
    if (n_max < 0) throw std::invalid_argument("build_pq: n_max must be >= 0");
    std::vector<PQPair> pairs;
    pairs.reserve(n_max + 1);
    LPoly one = LPoly::constant(APoly{1});
    pairs.push_back({0, one, one});
    const APoly a_mono = APoly{0, 1};
    for (long n = 0; n < n_max; ++n) {
        const PQPair& prev = pairs.back();
        // al + (3 - n)
        LPoly q_step{APoly::constant(Integer(3 - n)), a_mono};
        LPoly Q = q_step * prev.Q;
        // a(a+1) l + a(3+n)
        LPoly p_step{APoly::monomial(Integer(3 + n), 1), APoly{0, 1, 1}};
        LPoly P = p_step * prev.P - LPoly::constant(a_mono) * Q;
        pairs.push_back({n + 1, std::move(P), std::move(Q)});
    }
    return pairs;
}

// Paper-convention coefficient extraction: P_n = a^n l^n - sum p_{n,i} l^i,
// so p_{n,i} is the negated raw coefficient; q_{n,i} is the raw one.
inline APoly p_coefficient(const PQPair& pair, long i) {
    if (i < 0 || i >= pair.n)
        throw std::invalid_argument("p_coefficient: index must be in [0, n)");
    return -pair.P.coeff(i);
}
inline APoly q_coefficient(const PQPair& pair, long i) {
    if (i < 0 || i >= pair.n)
        throw std::invalid_argument("q_coefficient: index must be in [0, n)");
    return pair.Q.coeff(i);
}

namespace detail {

inline Integer factorial(long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline void expect_poly_equal(VerificationReport& report, const std::string& what, long n,
                              long j, const APoly& got, const APoly& want) {
    if (got == want) {
        report.record_pass();
    } else {
        report.record_fail(Counterexample{{{"identity", what},
                                           {"n", std::to_string(n)},
                                           {"j", std::to_string(j)}},
                                          got.to_string(),
                                          "==",
                                          want.to_string()});
    }
}

} // namespace detail

// Verifies every closed form and coefficient recurrence of the p/q families
// as exact polynomial identities in a, for all indices up to n_max:
//
//   q_{n+1,0} = prod_{i=0}^{n} (3-i)
//   q_{n+1,n} = ((6-n)(n+1)/2) a^n
//   q_{n+1,1} = 6 (-1)^(n-3) (n-3)! a                      (n >= 3)
//   q_{n+1,j} = a q_{n,j-1} + (3-n) q_{n,j}                (1 <= j <= n-1)
//   p_{0,0}=1, p_{1,0}=0, p_{2,0}=6a, p_{3,0}=30a^2+6a
//   p_{n+1,0} = a(n+3) p_{n,0}                             (n >= 3)
//   p_{n+1,0} = a^(n-2) ((n+3)!/5!) (30a^2+6a)             (n >= 2)
//   p_{n+1,n} = a(a+1) p_{n,n-1} - (n(n-3)/2) a^(n+1)      (n >= 1)
//   p_{n+1,j} = a(a+1) p_{n,j-1} + a(3+n) p_{n,j} + a q_{n+1,j}
//             = a(a+1) p_{n,j-1} + a(3+n) p_{n,j} + a^2 q_{n,j-1}
//               + a(3-n) q_{n,j}                           (1 <= j <= n-1)
//
// Any mismatch falsifies the transcription of the families, so the report is
// expected to pass; callers treat failure as fatal.
inline VerificationReport closed_form_checks(long n_max) {
    if (n_max < 3) throw std::invalid_argument("closed_form_checks: n_max must be >= 3");
    auto pairs = build_pq(n_max);
    VerificationReport report{"closed-forms", "n <= " + std::to_string(n_max)};
    const APoly a_mono = APoly{0, 1};
    const APoly a2_plus_a = APoly{0, 1, 1};

    detail::expect_poly_equal(report, "P_0 = 1", 0, 0, pairs[0].P.coeff(0), APoly{1});
    detail::expect_poly_equal(report, "p_{1,0} = 0", 1, 0, p_coefficient(pairs[1], 0), APoly{});
    detail::expect_poly_equal(report, "p_{2,0} = 6a", 2, 0, p_coefficient(pairs[2], 0),
                              APoly{0, 6});
    detail::expect_poly_equal(report, "p_{3,0} = 30a^2+6a", 3, 0, p_coefficient(pairs[3], 0),
                              APoly{0, 6, 30});

    for (long n = 0; n + 1 <= n_max; ++n) {
        const PQPair& cur = pairs[n];
        const PQPair& next = pairs[n + 1];

        Integer prod = 1;
        for (long i = 0; i <= n; ++i) prod *= (3 - i);
        detail::expect_poly_equal(report, "q_{n+1,0} = prod(3-i)", n + 1, 0,
                                  q_coefficient(next, 0), APoly::constant(prod));

        detail::expect_poly_equal(report, "q_{n+1,n} = (6-n)(n+1)/2 a^n", n + 1, n,
                                  q_coefficient(next, n),
                                  APoly::monomial(Integer(6 - n) * (n + 1) / 2, n));

        if (n >= 3) {
            Integer c = 6 * detail::factorial(n - 3);
            if ((n - 3) % 2 == 1) c = -c;
            detail::expect_poly_equal(report, "q_{n+1,1} = 6(-1)^(n-3)(n-3)! a", n + 1, 1,
                                      q_coefficient(next, 1), APoly::monomial(c, 1));
        }

        for (long j = 1; j <= n - 1; ++j)
            detail::expect_poly_equal(report, "q_{n+1,j} recurrence", n + 1, j,
                                      q_coefficient(next, j),
                                      a_mono * q_coefficient(cur, j - 1) +
                                          Integer(3 - n) * q_coefficient(cur, j));

        if (n >= 3)
            detail::expect_poly_equal(report, "p_{n+1,0} = a(n+3) p_{n,0}", n + 1, 0,
                                      p_coefficient(next, 0),
                                      Integer(n + 3) * (a_mono * p_coefficient(cur, 0)));

        if (n >= 2) {
            Integer c = detail::factorial(n + 3) / detail::factorial(5);
            APoly want = APoly::monomial(c, n - 2) * APoly{0, 6, 30};
            detail::expect_poly_equal(report, "p_{n+1,0} closed form", n + 1, 0,
                                      p_coefficient(next, 0), want);
        }

        if (n >= 1) {
            APoly want = a2_plus_a * p_coefficient(cur, n - 1) -
                         APoly::monomial(Integer(n) * (n - 3) / 2, n + 1);
            detail::expect_poly_equal(report, "p_{n+1,n} recurrence", n + 1, n,
                                      p_coefficient(next, n), want);
        }

        for (long j = 1; j <= n - 1; ++j) {
            APoly lead = a2_plus_a * p_coefficient(cur, j - 1) +
                         Integer(3 + n) * (a_mono * p_coefficient(cur, j));
            APoly via_next_q = lead + a_mono * q_coefficient(next, j);
            APoly via_cur_q = lead + APoly::monomial(1, 2) * q_coefficient(cur, j - 1) +
                              Integer(3 - n) * (a_mono * q_coefficient(cur, j));
            detail::expect_poly_equal(report, "p_{n+1,j} recurrence (via q_{n+1})", n + 1, j,
                                      p_coefficient(next, j), via_next_q);
            detail::expect_poly_equal(report, "p_{n+1,j} recurrence (via q_n)", n + 1, j,
                                      p_coefficient(next, j), via_cur_q);
        }
    }
    return report;
}

// The exact remainder identity: for 0 <= n <= al+2, with M = (2a+1)l+5,
//
//   C(M, al+3) a^(al+2) - sum_{i=al+3-n}^{al+2} C(M, i) a^i
//       = (P_n(a,l)/Q_n(a,l)) C(M, al+3-n) a^(al+2-n).
//
// Evaluated fully in exact rational arithmetic. Q_n cannot vanish inside the
// precondition window (every factor al+3-i has i < n <= al+2), but the guard
// is kept ahead of the division.
inline VerificationReport verify_remainder_identity(long a, long l, long n,
                                                    const std::vector<PQPair>& pairs) {
    if (a < 1 || l < 0) throw std::invalid_argument("remainder identity: need a >= 1, l >= 0");
    if (n < 0 || n > a * l + 2)
        throw scope_error("remainder identity: n must be in [0, al+2]");
    if (n >= static_cast<long>(pairs.size()))
        throw std::invalid_argument("remainder identity: pairs do not reach n");
    const long M = (2 * a + 1) * l + 5;
    const long pivot = a * l + 3;
    const Rational ra(a);

    Rational lhs = Rational(binomial(M, pivot)) * ra.pow(pivot - 1);
    for (long i = pivot - n; i <= pivot - 1; ++i)
        lhs -= Rational(binomial(M, i)) * ra.pow(i);

    Rational q_val = pairs[n].Q.evaluate(ra, Rational(l));
    if (q_val == Rational(0))
        throw std::domain_error("remainder identity: Q_n vanishes at the evaluation point");
    Rational p_val = pairs[n].P.evaluate(ra, Rational(l));
    Rational rhs = p_val / q_val * Rational(binomial(M, pivot - n)) * ra.pow(pivot - 1 - n);

    VerificationReport report{"prop41", "a=" + std::to_string(a) + " l=" + std::to_string(l) +
                                            " n=" + std::to_string(n)};
    if (lhs == rhs)
        report.record_pass();
    else
        report.record_fail(make_counterexample({{"a", std::to_string(a)},
                                                {"l", std::to_string(l)},
                                                {"n", std::to_string(n)}},
                                               lhs, "==", rhs));
    return report;
}

inline VerificationReport verify_remainder_identity(long a, long l, long n) {
    return verify_remainder_identity(a, l, n, build_pq(n));
}

// Subleading-coefficient lower bound, for real a >= 1 sampled at rationals:
//
//   p_{n,n-1}(a) >= a^(2n-2) + (n-1) a^(2n-3) + (n(n-3)/2) a^(2n-4),  n >= 3.
inline VerificationReport verify_subleading_bound(long n, const std::vector<Rational>& a_samples,
                                                  const std::vector<PQPair>& pairs) {
    if (n < 3) throw std::invalid_argument("subleading bound: requires n >= 3");
    if (n >= static_cast<long>(pairs.size()))
        throw std::invalid_argument("subleading bound: pairs do not reach n");
    VerificationReport report{"prop42", "n=" + std::to_string(n)};
    APoly p = p_coefficient(pairs[n], n - 1);
    for (const Rational& a : a_samples) {
        if (a < Rational(1)) throw std::invalid_argument("subleading bound: samples must be >= 1");
        Rational lhs = p.evaluate(a);
        Rational rhs = a.pow(2 * n - 2) + Rational(n - 1) * a.pow(2 * n - 3) +
                       Rational(static_cast<long>(n) * (n - 3), 2) * a.pow(2 * n - 4);
        if (lhs >= rhs)
            report.record_pass();
        else
            report.record_fail(make_counterexample(
                {{"n", std::to_string(n)}, {"a", a.to_fraction_string()}}, lhs, ">=", rhs));
    }
    return report;
}

// Coefficient dominance, for real a >= 1 sampled at rationals: for n >= 3 and
// 1 <= i <= n-1,
//
//   p_{n,i-1}(a) > |q_{n,i-1}(a)| + (n-3) |q_{n,i}(a)|,
//
// and in particular p_{n,i-1}(a) > 0.
inline VerificationReport verify_coefficient_dominance(long n,
                                                       const std::vector<Rational>& a_samples,
                                                       const std::vector<PQPair>& pairs) {
    if (n < 3) throw std::invalid_argument("coefficient dominance: requires n >= 3");
    if (n >= static_cast<long>(pairs.size()))
        throw std::invalid_argument("coefficient dominance: pairs do not reach n");
    VerificationReport report{"prop43", "n=" + std::to_string(n)};
    for (long i = 1; i <= n - 1; ++i) {
        APoly p = p_coefficient(pairs[n], i - 1);
        APoly q_lo = q_coefficient(pairs[n], i - 1);
        APoly q_hi = q_coefficient(pairs[n], i);
        for (const Rational& a : a_samples) {
            if (a < Rational(1))
                throw std::invalid_argument("coefficient dominance: samples must be >= 1");
            Rational lhs = p.evaluate(a);
            Rational rhs =
                q_lo.evaluate(a).abs() + Rational(n - 3) * q_hi.evaluate(a).abs();
            bool ok = lhs > rhs && lhs > Rational(0);
            if (ok)
                report.record_pass();
            else
                report.record_fail(make_counterexample({{"n", std::to_string(n)},
                                                        {"i", std::to_string(i)},
                                                        {"a", a.to_fraction_string()}},
                                                       lhs, ">", rhs));
        }
    }
    return report;
}

// The threshold T(n, a) = a^(n-2) + (n-1) a^(n-3) + (n(n-3)/2) a^(n-4) below
// which P_n(a, l) is guaranteed negative (for a >= 1, given positive Q
// context). In particular P_{l+1}(a, l) < 0 for l >= 2, which is what drives
// the fall-base inequality through the remainder identity.
inline Rational sign_threshold(long n, const Rational& a) {
    if (n < 3) throw std::invalid_argument("sign_threshold: requires n >= 3");
    if (a < Rational(1)) throw std::invalid_argument("sign_threshold: requires a >= 1");
    return a.pow(n - 2) + Rational(n - 1) * a.pow(n - 3) +
           Rational(static_cast<long>(n) * (n - 3), 2) * a.pow(n - 4);
}

// Sign check on the diagonal: P_{l+1}(a,l) < 0 and Q_{l+1}(a,l) > 0 for l >= 2.
inline VerificationReport check_diagonal_signs(long a, long l,
                                               const std::vector<PQPair>& pairs) {
    if (a < 1) throw std::invalid_argument("diagonal signs: a must be >= 1");
    if (l < 2) throw scope_error("diagonal signs: negativity is only claimed for l >= 2");
    if (l + 1 >= static_cast<long>(pairs.size()))
        throw std::invalid_argument("diagonal signs: pairs do not reach l+1");
    const Rational ra(a), rl(l);
    Rational p_val = pairs[l + 1].P.evaluate(ra, rl);
    Rational q_val = pairs[l + 1].Q.evaluate(ra, rl);
    VerificationReport report{"pq-signs", "a=" + std::to_string(a) + " l=" + std::to_string(l)};
    if (p_val < Rational(0))
        report.record_pass();
    else
        report.record_fail(make_counterexample(
            {{"a", std::to_string(a)}, {"l", std::to_string(l)}, {"poly", "P_{l+1}"}}, p_val,
            "<", Rational(0)));
    if (q_val > Rational(0))
        report.record_pass();
    else
        report.record_fail(make_counterexample(
            {{"a", std::to_string(a)}, {"l", std::to_string(l)}, {"poly", "Q_{l+1}"}}, q_val,
            ">", Rational(0)));
    return report;
}

} // namespace wbs
