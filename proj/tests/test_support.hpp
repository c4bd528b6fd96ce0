#ifndef SUPERDENOM_TEST_SUPPORT_HPP
#define SUPERDENOM_TEST_SUPPORT_HPP

#include <array>
#include <map>
#include <random>
#include <vector>

#include "superdenom/denominator.hpp"
#include "superdenom/series.hpp"
#include "superdenom/weyl.hpp"

namespace superdenom::testing {

/// Uniform random cone coordinates with total degree <= max_degree.
inline std::vector<std::int64_t> random_cone_point(std::mt19937_64& rng, int rank, int max_degree)
{
    std::uniform_int_distribution<int> deg(0, max_degree);
    int budget = deg(rng);
    std::vector<std::int64_t> c(static_cast<std::size_t>(rank), 0);
    std::uniform_int_distribution<int> pick(0, rank - 1);
    while (budget-- > 0) {
        ++c[static_cast<std::size_t>(pick(rng))];
    }
    return c;
}

inline ExpVec random_monomial(std::mt19937_64& rng, const LatticeSpec& lat, int max_degree)
{
    return lat.to_raw(random_cone_point(rng, lat.rank(), max_degree));
}

/// Random series with `terms` monomials of degree <= cutoff and coefficients in [-3, 3].
/// With `unit_constant` the constant term is forced to +-1.
inline GradedSeries random_series(std::mt19937_64& rng, const LatticeSpec& lat, int cutoff, int terms,
                                  bool unit_constant = false)
{
    std::uniform_int_distribution<int> coef(-3, 3);
    std::vector<std::pair<ExpVec, Integer>> pairs;
    for (int i = 0; i < terms; ++i) {
        auto e = random_monomial(rng, lat, cutoff);
        bool constant = true;
        for (auto v : e) {
            constant = constant && v == 0;
        }
        if (!constant) {
            pairs.push_back({e, coef(rng)});
        }
    }
    if (unit_constant) {
        pairs.push_back({ExpVec(static_cast<std::size_t>(lat.rank()), 0), (rng() & 1) ? 1 : -1});
    }
    return GradedSeries::from_terms(lat, cutoff, pairs);
}

/// Reference product on exponent maps: every pair of terms, kept if the
/// product has degree <= cutoff. Shares nothing with the packed-key path.
inline std::map<ExpVec, Integer> naive_product(const GradedSeries& a, const GradedSeries& b, int cutoff)
{
    std::map<ExpVec, Integer> out;
    for (const auto& x : a.terms()) {
        const ExpVec ex = a.exponents(x.key);
        for (const auto& y : b.terms()) {
            ExpVec e = b.exponents(y.key);
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] += ex[i];
            }
            if (cone_coords(a.lattice(), e).degree <= cutoff) {
                out[e] += x.coeff * y.coeff;
            }
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

inline std::map<ExpVec, Integer> as_map(const GradedSeries& s)
{
    std::map<ExpVec, Integer> out;
    for (const auto& t : s.terms()) {
        out[s.exponents(t.key)] = t.coeff;
    }
    return out;
}

/// Weight with half-integral coordinates in [-3, 3].
inline Weight random_weight(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> v(-6, 6);
    std::array<Rational, Weight::kDim> c;
    for (auto& x : c) {
        x = Rational(v(rng), 2);
    }
    return Weight(c);
}

inline WeylElement random_element(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> t(-4, 4);
    std::uniform_int_distribution<int> bit(0, 1);
    return {t(rng), bit(rng) == 1, t(rng), bit(rng) == 1};
}

/// Expansion of sgn(w) w(seed) for w = t_{n alpha} (refl = false) or
/// t_{n alpha} s_alpha (refl = true), written down family by family as
/// weights lambda and mapped to exponents of e^{lambda - rho}.
inline std::map<ExpVec, Integer> support_oracle(std::int64_t n, bool refl, int cutoff)
{
    const LatticeSpec lat = LatticeSpec::affine_gl22();
    const Weight rho = Weight::rho();
    const Weight dl = Weight::delta();
    const Weight a = Weight::alpha();
    const Weight b1 = Weight::beta1();
    const Weight b2 = Weight::beta2();
    auto R = [](std::int64_t k, const Weight& w) { return Rational(k) * w; };
    std::map<ExpVec, Integer> out;
    for (std::int64_t k1 = 0; k1 <= 4 * cutoff; ++k1) {
        for (std::int64_t k2 = 0; k2 <= 4 * cutoff; ++k2) {
            const std::int64_t s = 1 + k1 + k2;
            Weight lam = rho;
            if (!refl && n >= 0) {
                lam = rho - R(n * s, dl) - R(k1, b1) - R(k2, b2);
            } else if (!refl) {
                lam = rho - R(-n * s, dl) + R(k1 + 1, b1) + R(k2 + 1, b2);
            } else if (n <= 0) {
                lam = rho - R(-n * s, dl) - R(s, a) - R(k1, b1) - R(k2, b2);
            } else {
                lam = rho - R(n * s, dl) + R(s, a) + R(k1 + 1, b1) + R(k2 + 1, b2);
            }
            const ExpVec e = weight_to_exp(rho - lam);
            const auto cc = cone_coords(lat, e);
            if (cc.in_cone && cc.degree <= cutoff) {
                const int sign = ((k1 + k2) % 2 == 0 ? 1 : -1) * (refl ? -1 : 1);
                out[e] += sign;
            }
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

struct SymmetryScan {
    std::size_t reflected = 0;
    std::size_t translated = 0;
    std::size_t failures = 0;
};

/// F = sum_w sgn(w) w(seed) over the full affine W_alpha should satisfy
/// c(s_alpha lambda) = -c(lambda) and c(t_{+-alpha} lambda) = c(lambda)
/// wherever the image stays inside the truncated cone.
inline SymmetryScan anti_invariance_scan(int cutoff)
{
    const auto lat = LatticeSpec::affine_gl22();
    const Weight rho = Weight::rho();
    const auto f = orbit_sum(WeylGroup::What_alpha, OrbitTerm::standard_seed(), cutoff);
    SymmetryScan out;
    const std::pair<WeylElement, int> maps[] = {
        {WeylElement::s_alpha(), -1}, {WeylElement::t_alpha(1), 1}, {WeylElement::t_alpha(-1), 1}};
    for (const auto& t : f.terms()) {
        const Weight lam = rho - exp_to_weight(f.exponents(t.key));
        for (const auto& [w, sign] : maps) {
            const ExpVec e = weight_to_exp(rho - weyl_apply(w, lam));
            const auto cc = cone_coords(lat, e);
            if (!cc.in_cone || cc.degree > cutoff) {
                continue;
            }
            if (f.coeff(e) != sign * t.coeff) {
                ++out.failures;
            }
            (w.eps ? out.reflected : out.translated)++;
        }
    }
    return out;
}

} // namespace superdenom::testing

#endif
