#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "superdenom/denominator.hpp"
#include "superdenom/weyl.hpp"
#include "test_support.hpp"

using namespace superdenom;
using superdenom::testing::as_map;
using superdenom::testing::random_element;
using superdenom::testing::random_weight;
using superdenom::testing::support_oracle;

namespace {

const Weight e1 = Weight::eps1();
const Weight d1 = Weight::delta1();
const Weight a = Weight::alpha();
const Weight g = Weight::gamma();
const Weight b1 = Weight::beta1();
const Weight b2 = Weight::beta2();
const Weight dl = Weight::delta();
const Weight L0 = Weight::lambda0();
const Weight rho = Weight::rho();

Weight R(std::int64_t n, const Weight& w) { return Rational(n) * w; }

} // namespace

TEST(Form, BasisValues)
{
    EXPECT_EQ(inner(e1, e1), Rational(1));
    EXPECT_EQ(inner(d1, d1), Rational(-1));
    EXPECT_EQ(inner(dl, L0), Rational(1));
    EXPECT_EQ(inner(dl, dl), Rational(0));
    EXPECT_EQ(inner(L0, L0), Rational(0));
    EXPECT_EQ(inner(b1, a), Rational(-1));
    EXPECT_EQ(inner(rho, a), Rational(1));
    EXPECT_EQ(inner(g, g), Rational(-2));
    EXPECT_EQ(g, Weight::delta1() - Weight::delta2());
}

TEST(Reflect, Examples)
{
    EXPECT_EQ(reflect(a, a), -a);
    EXPECT_EQ(reflect(a, rho), rho - a);
    EXPECT_EQ(reflect(g, b1), -(a + b2));
    EXPECT_THROW(reflect(b1, rho), std::invalid_argument); // isotropic
}

TEST(Translate, Examples)
{
    EXPECT_EQ(translate(a, rho), rho - dl);
    EXPECT_EQ(translate(a, b1), b1 + dl);
    EXPECT_EQ(translate(a, L0), L0 + a - dl);
}

TEST(WeylElement, Examples)
{
    std::mt19937_64 rng(41);
    const WeylElement ss = compose(WeylElement::s_alpha(), WeylElement::s_alpha());
    for (int i = 0; i < 20; ++i) {
        const Weight lam = random_weight(rng);
        EXPECT_EQ(weyl_apply(ss, lam), lam);
        EXPECT_EQ(weyl_apply(random_element(rng), dl), dl);
    }
    EXPECT_EQ(weyl_sgn(WeylElement::t_alpha(1)), 1);
    EXPECT_EQ(weyl_sgn(compose(WeylElement::s_alpha(), WeylElement::s_gamma())), 1);
    EXPECT_EQ(weyl_sgn(WeylElement::s_alpha()), -1);
    EXPECT_EQ(weyl_apply(WeylElement::t_alpha(1), rho), translate(a, rho));
    EXPECT_EQ(weyl_apply(WeylElement::s_gamma(), b1), reflect(g, b1));
}

TEST(WeylProperty, FormInvarianceOnRandomTriples)
{
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        const WeylElement w = random_element(rng);
        const Weight x = random_weight(rng);
        const Weight y = random_weight(rng);
        EXPECT_EQ(inner(weyl_apply(w, x), weyl_apply(w, y)), inner(x, y)) << w;
    }
}

TEST(WeylProperty, GroupLawOnRandomTriples)
{
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 200; ++trial) {
        const WeylElement u = random_element(rng);
        const WeylElement v = random_element(rng);
        const Weight lam = random_weight(rng);
        EXPECT_EQ(weyl_apply(compose(u, v), lam), weyl_apply(u, weyl_apply(v, lam))) << u << " " << v;
        EXPECT_EQ(weyl_sgn(compose(u, v)), weyl_sgn(u) * weyl_sgn(v));
    }
}

TEST(WeylProperty, TranslationsAdd)
{
    std::mt19937_64 rng(44);
    for (int trial = 0; trial < 100; ++trial) {
        std::uniform_int_distribution<int> t(-5, 5);
        const Weight mu = R(t(rng), a) + R(t(rng), g);
        const Weight nu = R(t(rng), a) + R(t(rng), g);
        const Weight lam = random_weight(rng);
        EXPECT_EQ(translate(mu, translate(nu, lam)), translate(mu + nu, lam));
    }
}

TEST(WeightExp, Examples)
{
    EXPECT_EQ(weight_to_exp(dl - g), (ExpVec{1, -1, -1, -1}));
    EXPECT_EQ(weight_to_exp(b1 + b2), (ExpVec{0, 0, 1, 1})); // e^{-b1-b2} = y1 y2
    EXPECT_EQ(weight_to_exp(a), (ExpVec{0, 1, 0, 0}));
    EXPECT_EQ(weight_to_exp(dl), (ExpVec{1, 0, 0, 0}));
    EXPECT_THROW(weight_to_exp(rho), std::invalid_argument);
    EXPECT_THROW(weight_to_exp(L0), std::invalid_argument);
    EXPECT_EQ(weight_to_exp(b1 + a, WeightLattice::finite), (ExpVec{1, 1, 0}));
    EXPECT_THROW(weight_to_exp(dl, WeightLattice::finite), std::invalid_argument);
    std::mt19937_64 rng(45);
    std::uniform_int_distribution<int> v(-9, 9);
    for (int i = 0; i < 100; ++i) {
        const ExpVec e{v(rng), v(rng), v(rng), v(rng)};
        EXPECT_EQ(weight_to_exp(exp_to_weight(e)), e);
    }
}

// ---------------------------------------------------------------------------
// Orbit terms
// ---------------------------------------------------------------------------

TEST(OrbitTerm, SeedExpandsToAlternatingGeometricSeries)
{
    const int n = 6;
    const auto s = expand_orbit_term(OrbitTerm::standard_seed(), n);
    std::vector<std::pair<ExpVec, Integer>> expect;
    for (int k1 = 0; k1 <= n; ++k1) {
        for (int k2 = 0; k1 + k2 <= n; ++k2) {
            expect.push_back({{0, 0, k1, k2}, (k1 + k2) % 2 == 0 ? 1 : -1});
        }
    }
    EXPECT_EQ(s, GradedSeries::from_terms(LatticeSpec::affine_gl22(), n, expect));
}

TEST(OrbitTerm, TMinusAlphaLeadingMonomial)
{
    // t_{-alpha} seed = q^-1 / ((1 + q^-1 y1)(1 + q^-1 y2)) = q (y1 y2)^-1 / ((1 + q y1^-1)(1 + q y2^-1))
    const auto ft = factored(weyl_apply(WeylElement::t_alpha(-1), OrbitTerm::standard_seed()), WeightLattice::affine);
    EXPECT_EQ(ft.lead(), (ExpVec{1, 0, -1, -1}));
    EXPECT_EQ(ft.coeff(), 1);
    EXPECT_EQ(ft.min_degree(), 2);
}

TEST(OrbitTerm, SupportSetsForSmallTranslations)
{
    const int cutoff = 14;
    std::map<ExpVec, int> owner;
    int family = 0;
    for (std::int64_t n = -3; n <= 3; ++n) {
        for (bool refl : {false, true}) {
            const WeylElement w{n, refl, 0, false};
            const auto s = expand_orbit_term(weyl_apply(w, OrbitTerm::standard_seed()), cutoff);
            const auto oracle = support_oracle(n, refl, cutoff);
            EXPECT_EQ(as_map(s), oracle) << w;
            for (const auto& [e, c] : oracle) {
                EXPECT_TRUE(owner.emplace(e, family).second) << "support overlap at " << w;
            }
            ++family;
        }
    }
}

TEST(OrbitTerm, SupportViolationIsReported)
{
    // e^{-mu} = x^2 y1^-1 has positive degree but is not a cone monomial
    OrbitTerm t{1, rho, {{a + a - b1, 1, -1}}};
    EXPECT_THROW(expand_orbit_term(t, 6), support_error);
}

TEST(OrbitSum, WAlphaGivesFiniteDenominator)
{
    const int n = 10;
    const auto wl = WeightLattice::finite;
    const auto lat = LatticeSpec::finite_gl22();
    // (1 - x)(1 - x y1 y2) / prod_i (1 + y_i)(1 + x y_i), multiplied out directly
    auto r = GradedSeries::from_terms(lat, n, {{{0, 0, 0}, 1}, {{1, 0, 0}, -1}});
    r = mul(r, GradedSeries::from_terms(lat, n, {{{0, 0, 0}, 1}, {{1, 1, 1}, -1}}));
    for (const ExpVec& m : {ExpVec{0, 1, 0}, ExpVec{0, 0, 1}, ExpVec{1, 1, 0}, ExpVec{1, 0, 1}}) {
        r = mul(r, invert(GradedSeries::from_terms(lat, n, {{{0, 0, 0}, 1}, {m, 1}})));
    }
    EXPECT_EQ(orbit_sum(WeylGroup::W_alpha, OrbitTerm::standard_seed(), n, wl), r);
}

TEST(OrbitSum, WhatAlphaMatchesClosedFormForSmallOrders)
{
    for (int n = 0; n <= 24; n += 3) {
        EXPECT_EQ(orbit_sum(WeylGroup::What_alpha, OrbitTerm::standard_seed(), n), build_orbit_sum_closed(n))
            << "N=" << n;
    }
}

TEST(OrbitSum, NonSummableSeedIsReported)
{
    // top = rho - alpha - beta1 has (top, alpha) = 0, so every T_alpha translate is the same x y1 term
    const OrbitTerm t{1, rho - a - b1, {}};
    EXPECT_EQ(inner(rho - a - b1, a), Rational(0));
    EXPECT_THROW(orbit_sum(WeylGroup::T_alpha, t, 6, WeightLattice::affine, 40), nontermination_error);
}

TEST(OrbitSum, GroupRings)
{
    EXPECT_EQ(group_ring(WeylGroup::W_alpha, 0).size(), 2u);
    EXPECT_TRUE(group_ring(WeylGroup::W_alpha, 1).empty());
    EXPECT_EQ(group_ring(WeylGroup::T_gamma, 0).size(), 1u);
    EXPECT_EQ(group_ring(WeylGroup::T_gamma, 2).size(), 2u);
    EXPECT_EQ(group_ring(WeylGroup::What_gamma, 3).size(), 4u);
}

TEST(OrbitSumProperty, AntiInvarianceCoefficientSymmetry)
{
    const auto scan = superdenom::testing::anti_invariance_scan(16);
    EXPECT_EQ(scan.failures, 0u);
    EXPECT_GT(scan.reflected, 100u);
    EXPECT_GT(scan.translated, 10u);
}
