#ifndef SUPERDENOM_JACOBI_HPP
#define SUPERDENOM_JACOBI_HPP

// Single-variable specializations: theta series, Gauss' identity, the
// evaluated intermediate identity, and Jacobi's eight-squares formula with
// two independent counting oracles.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "report.hpp"
#include "series.hpp"

namespace superdenom {

/// A series in q alone (rank-1 lattice, deg q = 1).
using QSeries = GradedSeries;

inline QSeries qseries_from_coeffs(const std::vector<Integer>& c, int cutoff)
{
    std::vector<std::pair<ExpVec, Integer>> pairs;
    for (std::size_t n = 0; n < c.size() && static_cast<int>(n) <= cutoff; ++n) {
        if (c[n] != 0) {
            pairs.push_back({{static_cast<std::int64_t>(n)}, c[n]});
        }
    }
    return GradedSeries::from_terms(LatticeSpec::q_line(), cutoff, pairs);
}

/// Coefficients 0..cutoff of a q-series as a dense vector.
inline std::vector<Integer> coefficients(const QSeries& s)
{
    std::vector<Integer> c(static_cast<std::size_t>(s.cutoff() + 1), 0);
    for (const auto& t : s.terms()) {
        c[static_cast<std::size_t>(detail::key_degree(t.key))] = t.coeff;
    }
    return c;
}

/// sum_{j in Z} (sign q)^{j^2}.
inline QSeries theta(int cutoff, int sign = 1)
{
    std::vector<Integer> c(static_cast<std::size_t>(cutoff + 1), 0);
    c[0] = 1;
    for (std::int64_t j = 1; j * j <= cutoff; ++j) {
        const bool odd = (j * j) % 2 != 0;
        c[static_cast<std::size_t>(j * j)] = (sign < 0 && odd) ? -2 : 2;
    }
    return qseries_from_coeffs(c, cutoff);
}

inline QSeries power(const QSeries& s, int k)
{
    QSeries out = GradedSeries::one(s.lattice(), s.cutoff());
    for (int i = 0; i < k; ++i) {
        out = mul(out, s);
    }
    return out;
}

enum class R8Method { convolution, enumeration };

inline constexpr int kMaxEnumerationN = 64;

namespace detail {

inline void count_squares(int dims_left, std::int64_t partial, std::int64_t limit, std::vector<std::int64_t>& counts)
{
    if (dims_left == 0) {
        ++counts[static_cast<std::size_t>(partial)];
        return;
    }
    for (std::int64_t v = 0; partial + v * v <= limit; ++v) {
        // +v and -v give the same norm
        const int mult = v == 0 ? 1 : 2;
        for (int m = 0; m < mult; ++m) {
            count_squares(dims_left - 1, partial + v * v, limit, counts);
        }
    }
}

} // namespace detail

/// r_8(0..n): number of v in Z^8 with |v|^2 = n.
inline std::vector<Integer> r8_oracle(int n, R8Method method)
{
    if (n < 0) {
        throw std::invalid_argument("r8_oracle needs n >= 0");
    }
    if (method == R8Method::enumeration) {
        if (n > kMaxEnumerationN) {
            throw std::invalid_argument("enumeration oracle is limited to n <= 64");
        }
        std::vector<std::int64_t> counts(static_cast<std::size_t>(n + 1), 0);
        detail::count_squares(8, 0, n, counts);
        return {counts.begin(), counts.end()};
    }
    // r_1 convolved with itself eight times
    const auto len = static_cast<std::size_t>(n + 1);
    std::vector<Integer> r1(len, 0);
    for (std::int64_t v = -n; v <= n; ++v) {
        if (v * v <= n) {
            r1[static_cast<std::size_t>(v * v)] += 1;
        }
    }
    std::vector<Integer> acc(len, 0);
    acc[0] = 1;
    for (int d = 0; d < 8; ++d) {
        std::vector<Integer> next(len, 0);
        for (std::size_t i = 0; i < len; ++i) {
            if (acc[i] == 0) {
                continue;
            }
            for (std::size_t j = 0; i + j < len; ++j) {
                if (r1[j] != 0) {
                    next[i + j] += acc[i] * r1[j];
                }
            }
        }
        acc = std::move(next);
    }
    return acc;
}

/// 1 + 16 sum_{j,k>=1} (-1)^{(j+1)k} k^3 q^{jk}.
inline QSeries jacobi_formula(int cutoff)
{
    std::vector<Integer> c(static_cast<std::size_t>(cutoff + 1), 0);
    c[0] = 1;
    for (std::int64_t j = 1; j <= cutoff; ++j) {
        for (std::int64_t k = 1; j * k <= cutoff; ++k) {
            const Integer cube = Integer(k) * k * k;
            const bool neg = ((j + 1) * k) % 2 != 0;
            c[static_cast<std::size_t>(j * k)] += neg ? Integer(-16 * cube) : Integer(16 * cube);
        }
    }
    return qseries_from_coeffs(c, cutoff);
}

/// 1 + 16 sum_{n,j>=1} (-1)^j j^3 q^{nj}, the sign-twisted form equal to theta(-q)^8.
inline QSeries twisted_jacobi_formula(int cutoff)
{
    std::vector<Integer> c(static_cast<std::size_t>(cutoff + 1), 0);
    c[0] = 1;
    for (std::int64_t n = 1; n <= cutoff; ++n) {
        for (std::int64_t j = 1; n * j <= cutoff; ++j) {
            const Integer cube = Integer(j) * j * j;
            c[static_cast<std::size_t>(n * j)] += (j % 2 != 0) ? Integer(-16 * cube) : Integer(16 * cube);
        }
    }
    return qseries_from_coeffs(c, cutoff);
}

/// (1-q)_q / (1+q)_q with (1 +- q)_q = prod_{n>=1} (1 +- q^n).
inline QSeries gauss_product(int cutoff)
{
    const LatticeSpec lat = LatticeSpec::q_line();
    const QSeries num = pochhammer(lat, {1}, {1}, -1, cutoff);
    const QSeries den = pochhammer(lat, {1}, {1}, 1, cutoff);
    return mul(num, invert(den));
}

inline QReport gauss_check(int cutoff)
{
    Stopwatch sw;
    QReport r = compare_series("gauss", gauss_product(cutoff), theta(cutoff, -1));
    r.millis = sw.millis();
    return r;
}

/// (a+1)^{-4} = sum_j (-1)^j (j+1)(j+2)(j+3)/6 a^j.
inline Integer inverse_fourth_power_coeff(std::int64_t j)
{
    const Integer c = Integer(j + 1) * (j + 2) * (j + 3) / 6;
    return j % 2 == 0 ? c : Integer(-c);
}

/// 1 - 16 sum_{n>=1} q^n (q^{2n} - 4q^n + 1) / (1+q^n)^4, with (1+q^n)^-4 expanded binomially.
inline QSeries intermediate_rhs(int cutoff)
{
    std::vector<Integer> c(static_cast<std::size_t>(cutoff + 1), 0);
    c[0] = 1;
    for (std::int64_t n = 1; n <= cutoff; ++n) {
        // q^n (1 - 4q^n + q^{2n}) * sum_j b_j q^{nj}
        const std::pair<std::int64_t, int> numer[] = {{n, 1}, {2 * n, -4}, {3 * n, 1}};
        for (const auto& [shift, a] : numer) {
            for (std::int64_t j = 0; shift + n * j <= cutoff; ++j) {
                c[static_cast<std::size_t>(shift + n * j)] -= 16 * a * inverse_fourth_power_coeff(j);
            }
        }
    }
    return qseries_from_coeffs(c, cutoff);
}

inline QReport intermediate_identity_check(int cutoff)
{
    Stopwatch sw;
    QReport r = compare_series("intermediate-eight-squares", power(gauss_product(cutoff), 8),
                               intermediate_rhs(cutoff));
    r.millis = sw.millis();
    return r;
}

struct JacobiRow {
    int n = 0;
    Integer r8_enum;
    Integer r8_conv;
    Integer r8_theta;
    Integer r8_formula;
    bool match = false;
};

/// Row n: enumeration (n <= 64; otherwise reported as -1), convolution,
/// theta^8 coefficient and the divisor formula.
inline std::vector<JacobiRow> jacobi_table(int max_n)
{
    const auto conv = r8_oracle(max_n, R8Method::convolution);
    const bool enumerable = max_n <= kMaxEnumerationN;
    const auto en = enumerable ? r8_oracle(max_n, R8Method::enumeration) : std::vector<Integer>{};
    const auto th = coefficients(power(theta(max_n, 1), 8));
    const auto fo = coefficients(jacobi_formula(max_n));
    std::vector<JacobiRow> rows;
    for (int n = 0; n <= max_n; ++n) {
        const auto i = static_cast<std::size_t>(n);
        JacobiRow row{n, enumerable ? en[i] : Integer(-1), conv[i], th[i], fo[i], false};
        row.match = (!enumerable || row.r8_enum == row.r8_conv) && row.r8_conv == row.r8_theta &&
                    row.r8_theta == row.r8_formula;
        rows.push_back(std::move(row));
    }
    return rows;
}

inline QReport verify_jacobi(int cutoff)
{
    Stopwatch sw;
    const QSeries theta8 = power(theta(cutoff, 1), 8);
    QReport r = compare_series("jacobi-eight-squares", theta8, jacobi_formula(cutoff));
    const auto th = coefficients(theta8);
    const auto conv = r8_oracle(cutoff, R8Method::convolution);
    r.add_check("theta^8 == r8 by convolution", th == conv);
    if (cutoff <= kMaxEnumerationN) {
        r.add_check("r8 enumeration == convolution", r8_oracle(cutoff, R8Method::enumeration) == conv);
    }
    const QSeries twisted = power(theta(cutoff, -1), 8);
    const auto tw = diff_series(twisted, twisted_jacobi_formula(cutoff));
    r.add_check("theta(-q)^8 == 1 + 16 sum (-1)^j j^3 q^{nj}", tw.empty());
    const auto twc = coefficients(twisted);
    bool sign_twist = true;
    for (std::size_t n = 0; n < twc.size(); ++n) {
        if (twc[n] != ((n % 2 == 0) ? th[n] : Integer(-th[n]))) {
            sign_twist = false;
        }
    }
    r.add_check("theta(-q)^8 coefficient n == (-1)^n theta(q)^8 coefficient n", sign_twist);
    r.millis = sw.millis();
    return r;
}

} // namespace superdenom

#endif // SUPERDENOM_JACOBI_HPP
