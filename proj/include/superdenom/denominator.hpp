#ifndef SUPERDENOM_DENOMINATOR_HPP
#define SUPERDENOM_DENOMINATOR_HPP

// Builders and verifiers for the affine gl(2|2) denominator identity and its
// companions: the prefactor expansion, the finite gl(2|2) identity, the
// T_alpha / T_gamma orbit-sum equality, the affine sl(2|1) identity and the
// support shape of RHS/LHS.
//
// All gl(2|2)^ series use LatticeSpec::affine_gl22() with raw exponents
// (n, a, b1, b2) of q^n x^a y1^b1 y2^b2, rho-normalized (e^rho cancelled).

#include <cstdint>
#include <string>
#include <vector>

#include "report.hpp"
#include "series.hpp"
#include "weyl.hpp"

namespace superdenom {

/// (1 + sign*head)_step^inf raised to `power`, i.e. prod_{n>=0} (1 + sign step^n head)^power.
struct PochhammerFactor {
    ExpVec head;
    int sign = 1;
    int power = 1;
};

namespace gl22 {

inline const ExpVec kQ{1, 0, 0, 0};

/// The product side of the affine identity as infinite-product factors in q.
inline std::vector<PochhammerFactor> denominator_factors()
{
    std::vector<PochhammerFactor> f = {
        {{0, 1, 0, 0}, -1, 1},    // (1 - x)
        {{1, -1, 0, 0}, -1, 1},   // (1 - q x^-1)
        {{0, 1, 1, 1}, -1, 1},    // (1 - x y1 y2)
        {{1, -1, -1, -1}, -1, 1}, // (1 - q (x y1 y2)^-1)
        {{1, 0, 0, 0}, -1, 4},    // (1 - q)^4
    };
    for (int i = 0; i < 2; ++i) {
        const std::int64_t b1 = i == 0 ? 1 : 0;
        const std::int64_t b2 = i == 0 ? 0 : 1;
        f.push_back({{0, 0, b1, b2}, 1, -1});    // (1 + y_i)
        f.push_back({{1, 0, -b1, -b2}, 1, -1});  // (1 + q y_i^-1)
        f.push_back({{0, 1, b1, b2}, 1, -1});    // (1 + x y_i)
        f.push_back({{1, -1, -b1, -b2}, 1, -1}); // (1 + q x^-1 y_i^-1)
    }
    return f;
}

/// ((1-q)_q)^2 / ((1 - q y1^-1 y2)_q (1 - q y1 y2^-1)_q).
inline std::vector<PochhammerFactor> prefactor_factors()
{
    return {{{1, 0, 0, 0}, -1, 2}, {{1, 0, -1, 1}, -1, -1}, {{1, 0, 1, -1}, -1, -1}};
}

} // namespace gl22

/// Applies the factors one binomial at a time to a dense workspace.
inline GradedSeries expand_pochhammer_product(const LatticeSpec& lattice, const ExpVec& step,
                                              const std::vector<PochhammerFactor>& factors, int cutoff)
{
    DenseSeries acc(lattice, cutoff);
    acc.add_at(0, 1);
    const auto st = cone_coords(lattice, step);
    for (const auto& f : factors) {
        auto c = cone_coords(lattice, f.head);
        if (!c.in_cone || c.degree < 1 || !st.in_cone || st.degree < 1) {
            throw support_error("pochhammer factor outside the cone");
        }
        for (std::int64_t deg = c.degree; deg <= cutoff; deg += st.degree) {
            acc.mul_binomial(detail::pack_coords(c.coords), f.sign, f.power);
            for (std::size_t i = 0; i < c.coords.size(); ++i) {
                c.coords[i] += st.coords[i];
            }
        }
    }
    return acc.to_series();
}

/// Same product through the generic ring: pochhammer(), mul() and invert().
inline GradedSeries expand_pochhammer_product_generic(const LatticeSpec& lattice, const ExpVec& step,
                                                      const std::vector<PochhammerFactor>& factors, int cutoff)
{
    GradedSeries num = GradedSeries::one(lattice, cutoff);
    GradedSeries den = GradedSeries::one(lattice, cutoff);
    for (const auto& f : factors) {
        const GradedSeries p = pochhammer(lattice, f.head, step, f.sign, cutoff);
        for (int k = 0; k < std::abs(f.power); ++k) {
            if (f.power > 0) {
                num = mul(num, p);
            } else {
                den = mul(den, p);
            }
        }
    }
    return mul(num, invert(den));
}

/// The product side R^ of the affine identity.
inline GradedSeries build_lhs(int cutoff)
{
    return expand_pochhammer_product(LatticeSpec::affine_gl22(), gl22::kQ, gl22::denominator_factors(), cutoff);
}

inline GradedSeries build_lhs_generic(int cutoff)
{
    return expand_pochhammer_product_generic(LatticeSpec::affine_gl22(), gl22::kQ, gl22::denominator_factors(),
                                             cutoff);
}

/// Positive affine roots of gl(2|2)^ whose monomial e^{-nu} has degree <= cutoff,
/// with parity (true = even) and multiplicity.
struct AffineRoot {
    Weight root;
    bool even = true;
    int multiplicity = 1;
};

inline std::vector<AffineRoot> positive_affine_roots(int cutoff)
{
    const Weight a = Weight::alpha();
    const Weight g = Weight::gamma();
    const Weight b1 = Weight::beta1();
    const Weight b2 = Weight::beta2();
    const Weight d = Weight::delta();
    struct Finite {
        Weight w;
        bool even;
        bool positive;
    };
    const std::vector<Finite> finite = {
        {a, true, true},        {-a, true, false},       {g, true, true},         {-g, true, false},
        {b1, false, true},      {-b1, false, false},     {b2, false, true},       {-b2, false, false},
        {a + b1, false, true},  {-(a + b1), false, false}, {a + b2, false, true}, {-(a + b2), false, false},
    };
    const LatticeSpec lat = LatticeSpec::affine_gl22();
    std::vector<AffineRoot> out;
    for (std::int64_t s = 0; 4 * s - 3 <= cutoff; ++s) {
        for (const auto& f : finite) {
            if (s == 0 && !f.positive) {
                continue;
            }
            const Weight nu = f.w + Rational(s) * d;
            if (cone_coords(lat, weight_to_exp(nu)).degree <= cutoff) {
                out.push_back({nu, f.even, 1});
            }
        }
        // imaginary roots s*delta, multiplicity = dim of the Cartan subalgebra
        if (s >= 1 && 4 * s <= cutoff) {
            out.push_back({Rational(s) * d, true, 4});
        }
    }
    return out;
}

/// R^ = prod_even (1 - e^{-nu}) / prod_odd (1 + e^{-nu}), built from the root list.
inline GradedSeries build_rhat_from_roots(int cutoff)
{
    const LatticeSpec lat = LatticeSpec::affine_gl22();
    DenseSeries acc(lat, cutoff);
    acc.add_at(0, 1);
    for (const auto& r : positive_affine_roots(cutoff)) {
        const auto c = cone_coords(lat, weight_to_exp(r.root));
        if (!c.in_cone) {
            throw support_error("positive root outside the cone: " + r.root.str());
        }
        if (r.even) {
            acc.mul_binomial(detail::pack_coords(c.coords), -1, r.multiplicity);
        } else {
            acc.mul_binomial(detail::pack_coords(c.coords), 1, -r.multiplicity);
        }
    }
    return acc.to_series();
}

// ---------------------------------------------------------------------------
// Prefactor
// ---------------------------------------------------------------------------

enum class PrefactorMethod { product, fn_series };

/// 1 + sum_{n>=1} f_n(y1/y2),
/// f_n(y) = (y^n + y^-n - y^(n-1) - y^(1-n)) * sum_j (-1)^j q^((j+1)(j+2n)/2).
inline GradedSeries build_prefactor_fn_series(int cutoff)
{
    const LatticeSpec lat = LatticeSpec::affine_gl22();
    // q^m (y1/y2)^k has degree 4m, independent of k.
    const std::int64_t max_q = cutoff / 4;
    std::vector<std::pair<ExpVec, Integer>> pairs;
    pairs.push_back({{0, 0, 0, 0}, 1});
    for (std::int64_t n = 1; n <= max_q; ++n) {
        for (std::int64_t j = 0;; ++j) {
            const std::int64_t qpow = (j + 1) * (j + 2 * n) / 2;
            if (qpow > max_q) {
                break;
            }
            const Integer sgn = (j % 2 == 0) ? 1 : -1;
            for (std::int64_t k : {n, -n}) {
                pairs.push_back({{qpow, 0, k, -k}, sgn});
            }
            for (std::int64_t k : {n - 1, 1 - n}) {
                pairs.push_back({{qpow, 0, k, -k}, -sgn});
            }
        }
    }
    return GradedSeries::from_terms(lat, cutoff, pairs);
}

inline GradedSeries build_prefactor(int cutoff, PrefactorMethod method = PrefactorMethod::fn_series)
{
    if (method == PrefactorMethod::product) {
        return expand_pochhammer_product(LatticeSpec::affine_gl22(), gl22::kQ, gl22::prefactor_factors(), cutoff);
    }
    return build_prefactor_fn_series(cutoff);
}

// ---------------------------------------------------------------------------
// Orbit sum
// ---------------------------------------------------------------------------

enum class OrbitMethod { closed, weyl };

/// Largest |n| whose closed-form terms can reach degree <= cutoff. The n-th terms
/// have minimal degrees 4n, 4n+1 (n >= 0) and 4|n|-2, 4|n|-3 (n < 0).
inline std::int64_t closed_form_range(int cutoff) { return (static_cast<std::int64_t>(cutoff) + 3 + 3) / 4; }

/// The two terms of the closed-form sum at index n:
/// q^n / ((1+q^n y1)(1+q^n y2)) and -q^n x / ((1+q^n x y1)(1+q^n x y2)).
inline std::vector<FactoredTerm> closed_form_terms(std::int64_t n)
{
    const LatticeSpec lat = LatticeSpec::affine_gl22();
    return {
        FactoredTerm(lat, 1, {n, 0, 0, 0}, {{{n, 0, 1, 0}, 1, -1}, {{n, 0, 0, 1}, 1, -1}}),
        FactoredTerm(lat, -1, {n, 1, 0, 0}, {{{n, 1, 1, 0}, 1, -1}, {{n, 1, 0, 1}, 1, -1}}),
    };
}

inline GradedSeries build_orbit_sum_closed(int cutoff)
{
    const LatticeSpec lat = LatticeSpec::affine_gl22();
    DenseSeries acc(lat, cutoff);
    const std::int64_t bound = closed_form_range(cutoff);
    for (std::int64_t n = -bound; n <= bound; ++n) {
        for (const auto& t : closed_form_terms(n)) {
            t.expand_into(acc);
        }
    }
    // the next ring out must contribute nothing
    for (std::int64_t n : {bound + 1, -bound - 1}) {
        for (const auto& t : closed_form_terms(n)) {
            if (t.min_degree() <= cutoff) {
                throw nontermination_error("closed-form range bound too small at n = " + std::to_string(n));
            }
        }
    }
    return acc.to_series();
}

inline GradedSeries build_orbit_sum(int cutoff, OrbitMethod method = OrbitMethod::closed)
{
    if (method == OrbitMethod::weyl) {
        return orbit_sum(WeylGroup::What_alpha, OrbitTerm::standard_seed(), cutoff);
    }
    return build_orbit_sum_closed(cutoff);
}

/// Prefactor times orbit sum.
inline GradedSeries build_rhs(int cutoff)
{
    auto [pre, orb] = build_both([cutoff] { return build_prefactor(cutoff, PrefactorMethod::fn_series); },
                                 [cutoff] { return build_orbit_sum(cutoff, OrbitMethod::closed); });
    return mul(pre, orb);
}

// ---------------------------------------------------------------------------
// Verifiers
// ---------------------------------------------------------------------------

inline QReport verify_denominator(int cutoff)
{
    Stopwatch sw;
    auto [lhs, rhs] = build_both([cutoff] { return build_lhs(cutoff); }, [cutoff] { return build_rhs(cutoff); });
    QReport r = compare_series("gl22-affine-denominator", lhs, rhs);
    r.millis = sw.millis();
    return r;
}

inline QReport verify_prefactor(int cutoff)
{
    Stopwatch sw;
    const GradedSeries prod = build_prefactor(cutoff, PrefactorMethod::product);
    const GradedSeries fn = build_prefactor(cutoff, PrefactorMethod::fn_series);
    QReport r = compare_series("prefactor-fn-expansion", prod, fn);
    bool shape = true;
    for (const auto& e : prod.support()) {
        // q^m (y1/y2)^k with |k| <= m
        if (e[1] != 0 || e[2] != -e[3] || std::abs(e[2]) > e[0]) {
            shape = false;
        }
    }
    r.add_check("support-in-q^m(y1/y2)^k,|k|<=m", shape);
    r.millis = sw.millis();
    return r;
}

inline QReport verify_orbit_methods(int cutoff)
{
    Stopwatch sw;
    QReport r = compare_series("orbit-sum-closed-vs-weyl", build_orbit_sum(cutoff, OrbitMethod::closed),
                               build_orbit_sum(cutoff, OrbitMethod::weyl));
    r.millis = sw.millis();
    return r;
}

inline QReport verify_rhat_roots(int cutoff)
{
    Stopwatch sw;
    QReport r = compare_series("rhat-product-vs-root-list", build_lhs(cutoff), build_rhat_from_roots(cutoff));
    r.millis = sw.millis();
    return r;
}

/// R (product), F_{W_alpha}(seed) and F_{W_gamma}(seed) on the finite lattice.
inline QReport verify_finite_identity(int cutoff)
{
    Stopwatch sw;
    const WeightLattice wl = WeightLattice::finite;
    const GradedSeries r_prod = expand_orbit_term(OrbitTerm::finite_denominator(), cutoff, wl);
    const GradedSeries f_alpha = orbit_sum(WeylGroup::W_alpha, OrbitTerm::standard_seed(), cutoff, wl);
    const GradedSeries f_gamma = orbit_sum(WeylGroup::W_gamma, OrbitTerm::standard_seed(), cutoff, wl);
    QReport r = compare_series("gl22-finite-denominator", r_prod, f_alpha);
    const auto dg = diff_series(r_prod, f_gamma);
    r.add_check("R == F_W_gamma(seed)", dg.empty(), std::to_string(dg.size()) + " differing monomials");
    for (const auto& d : dg) {
        if (r.first_diffs.size() < kMaxReportedDiffs) {
            r.first_diffs.push_back(d);
        }
    }
    r.millis = sw.millis();
    return r;
}

/// F_{T_alpha}(R e^rho) == F_{T_gamma}(R e^rho), plus t_{gamma-alpha}-invariance of the seed data.
inline QReport verify_talpha_tgamma(int cutoff)
{
    Stopwatch sw;
    const OrbitTerm seed = OrbitTerm::finite_denominator();
    auto [ta, tg] = build_both([&] { return orbit_sum(WeylGroup::T_alpha, seed, cutoff); },
                               [&] { return orbit_sum(WeylGroup::T_gamma, seed, cutoff); });
    QReport r = compare_series("talpha-tgamma", ta, tg);
    const Weight shift = Weight::gamma() - Weight::alpha();
    for (const auto& [name, w] : {std::pair{"rho", Weight::rho()}, std::pair{"beta1", Weight::beta1()},
                                  std::pair{"beta2", Weight::beta2()}}) {
        r.add_check(std::string("t_(gamma-alpha) fixes ") + name, translate(shift, w) == w);
    }
    r.millis = sw.millis();
    return r;
}

// ---------------------------------------------------------------------------
// Affine sl(2|1)
// ---------------------------------------------------------------------------

namespace sl21 {

inline const ExpVec kZ{1, 0, 0};

/// Product side: (1 - u1u2)_z (1 - z (u1u2)^-1)_z ((1-z)_z)^2 / prod_i (1+u_i)_z (1+z u_i^-1)_z,
/// with u_i = e^{-beta_i'} and e^{-alpha'} = u1 u2.
inline std::vector<PochhammerFactor> product_factors()
{
    return {
        {{0, 1, 1}, -1, 1},  {{1, -1, -1}, -1, 1}, {{1, 0, 0}, -1, 2},
        {{0, 1, 0}, 1, -1},  {{0, 0, 1}, 1, -1},   {{1, -1, 0}, 1, -1}, {{1, 0, -1}, 1, -1},
    };
}

/// Index-n terms of sum_n z^{n^2} (e^{n alpha'}/(1 + z^n e^{-beta1'}) - e^{-n alpha'}/(1 + z^n e^{beta2'})).
inline std::vector<FactoredTerm> sum_terms(std::int64_t n)
{
    const LatticeSpec lat = LatticeSpec::affine_sl21();
    return {
        FactoredTerm(lat, 1, {n * n, n, n}, {{{n, 1, 0}, 1, -1}}),
        FactoredTerm(lat, -1, {n * n, -n, -n}, {{{n, 0, -1}, 1, -1}}),
    };
}

} // namespace sl21

inline GradedSeries build_sl21_product(int cutoff)
{
    return expand_pochhammer_product(LatticeSpec::affine_sl21(), sl21::kZ, sl21::product_factors(), cutoff);
}

inline GradedSeries build_sl21_sum(int cutoff)
{
    const LatticeSpec lat = LatticeSpec::affine_sl21();
    DenseSeries acc(lat, cutoff);
    int quiet = 0;
    for (std::int64_t m = 0; quiet < 2; ++m) {
        bool contributed = false;
        for (std::int64_t n : m == 0 ? std::vector<std::int64_t>{0} : std::vector<std::int64_t>{m, -m}) {
            for (const auto& t : sl21::sum_terms(n)) {
                if (t.min_degree() <= cutoff) {
                    t.expand_into(acc);
                    contributed = true;
                }
            }
        }
        quiet = contributed ? 0 : quiet + 1;
    }
    return acc.to_series();
}

inline QReport verify_sl21(int cutoff)
{
    Stopwatch sw;
    QReport r = compare_series("sl21-affine-denominator", build_sl21_product(cutoff), build_sl21_sum(cutoff));
    r.millis = sw.millis();
    return r;
}

// ---------------------------------------------------------------------------
// Ratio support
// ---------------------------------------------------------------------------

/// True iff e is q^n (y1/y2)^j with |j| <= n.
inline bool in_ratio_shape(const ExpVec& e)
{
    return e[1] == 0 && e[2] == -e[3] && std::abs(e[2]) <= e[0];
}

/// Y = RHS * LHS^-1: support contained in {q^n (y1/y2)^j : |j| <= n}, and Y = 1.
inline QReport ratio_support_check(int cutoff)
{
    Stopwatch sw;
    auto [lhs, rhs] = build_both([cutoff] { return build_lhs(cutoff); }, [cutoff] { return build_rhs(cutoff); });
    const GradedSeries y = mul(rhs, invert(lhs));
    const GradedSeries one = GradedSeries::one(y.lattice(), cutoff);
    QReport r = compare_series("ratio-support", y, one);
    std::size_t outside = 0;
    for (const auto& e : y.support()) {
        if (!in_ratio_shape(e)) {
            ++outside;
        }
    }
    r.add_check("supp(Y) in {q^n (y1/y2)^j : |j| <= n}", outside == 0,
                std::to_string(outside) + " monomials outside");
    r.add_check("coefficient of 1 in Y is 1", y.coeff(ExpVec{0, 0, 0, 0}) == 1);
    r.millis = sw.millis();
    return r;
}

} // namespace superdenom

#endif // SUPERDENOM_DENOMINATOR_HPP
