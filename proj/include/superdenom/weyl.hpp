#ifndef SUPERDENOM_WEYL_HPP
#define SUPERDENOM_WEYL_HPP

// Weight space of the affine gl(2|2) root system, its invariant form, the
// affine Weyl group W^ = W^_alpha x W^_gamma, and signed orbit sums expanded
// into cone-supported series.

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "series.hpp"

namespace superdenom {

using Rational = boost::rational<std::int64_t>;

/// Rational vector over the ordered basis (eps1, eps2, delta1, delta2, delta, Lambda0).
class Weight {
public:
    static constexpr int kDim = 6;

    constexpr Weight() = default;

    explicit Weight(std::array<Rational, kDim> c) : c_(c) {}

    static Weight basis(int i)
    {
        Weight w;
        w.c_[static_cast<std::size_t>(i)] = 1;
        return w;
    }

    static Weight eps1() { return basis(0); }
    static Weight eps2() { return basis(1); }
    static Weight delta1() { return basis(2); }
    static Weight delta2() { return basis(3); }
    /// The null root.
    static Weight delta() { return basis(4); }
    static Weight lambda0() { return basis(5); }

    static Weight beta1() { return delta1() - eps1(); }
    static Weight alpha() { return eps1() - eps2(); }
    static Weight beta2() { return eps2() - delta2(); }
    static Weight gamma() { return beta1() + alpha() + beta2(); }
    static Weight rho() { return Rational(-1, 2) * (beta1() + beta2()); }

    const Rational& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    const std::array<Rational, kDim>& coords() const noexcept { return c_; }

    friend Weight operator+(Weight a, const Weight& b)
    {
        for (int i = 0; i < kDim; ++i) {
            a.c_[static_cast<std::size_t>(i)] += b[i];
        }
        return a;
    }

    friend Weight operator-(Weight a, const Weight& b)
    {
        for (int i = 0; i < kDim; ++i) {
            a.c_[static_cast<std::size_t>(i)] -= b[i];
        }
        return a;
    }

    friend Weight operator-(Weight a)
    {
        for (auto& x : a.c_) {
            x = -x;
        }
        return a;
    }

    friend Weight operator*(const Rational& s, Weight a)
    {
        for (auto& x : a.c_) {
            x *= s;
        }
        return a;
    }

    friend bool operator==(const Weight& a, const Weight& b) { return a.c_ == b.c_; }

    /// Six exact rationals "p/q" (or "p" when integral), comma separated.
    std::string str() const
    {
        std::ostringstream os;
        for (int i = 0; i < kDim; ++i) {
            if (i) {
                os << ",";
            }
            os << rational_str(c_[static_cast<std::size_t>(i)]);
        }
        return os.str();
    }

    static std::string rational_str(const Rational& r)
    {
        if (r.denominator() == 1) {
            return std::to_string(r.numerator());
        }
        return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
    }

private:
    std::array<Rational, kDim> c_{};
};

inline std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << "(" << w.str() << ")"; }

/// (eps_i,eps_i) = 1, (delta_i,delta_i) = -1, (Lambda0,delta) = 1, all other
/// basis pairings zero.
inline Rational inner(const Weight& a, const Weight& b)
{
    return a[0] * b[0] + a[1] * b[1] - a[2] * b[2] - a[3] * b[3] + a[4] * b[5] + a[5] * b[4];
}

inline Weight reflect(const Weight& nu, const Weight& lambda)
{
    const Rational nn = inner(nu, nu);
    if (nn == Rational(0)) {
        throw std::invalid_argument("reflection in an isotropic vector");
    }
    return lambda - (Rational(2) * inner(lambda, nu) / nn) * nu;
}

/// t_mu(lambda) = lambda + (lambda,delta) mu - ((lambda,mu) + (mu,mu)/2 (lambda,delta)) delta.
inline Weight translate(const Weight& mu, const Weight& lambda)
{
    const Rational ld = inner(lambda, Weight::delta());
    const Rational coeff = inner(lambda, mu) + inner(mu, mu) / Rational(2) * ld;
    return lambda + ld * mu - coeff * Weight::delta();
}

// ---------------------------------------------------------------------------
// Weyl group
// ---------------------------------------------------------------------------

/// t_{p alpha} s_alpha^eps * t_{pp gamma} s_gamma^epsp; acts right to left.
struct WeylElement {
    std::int64_t p = 0;
    bool eps = false;
    std::int64_t pp = 0;
    bool epsp = false;

    static WeylElement identity() { return {}; }
    static WeylElement s_alpha() { return {0, true, 0, false}; }
    static WeylElement s_gamma() { return {0, false, 0, true}; }
    static WeylElement t_alpha(std::int64_t n) { return {n, false, 0, false}; }
    static WeylElement t_gamma(std::int64_t n) { return {0, false, n, false}; }

    friend bool operator==(const WeylElement&, const WeylElement&) = default;
};

inline int weyl_sgn(const WeylElement& w) { return (w.eps != w.epsp) ? -1 : 1; }

/// w1 w2. Within each dihedral factor s t_{r} s = t_{-r}.
inline WeylElement compose(const WeylElement& a, const WeylElement& b)
{
    WeylElement c;
    c.p = a.p + (a.eps ? -b.p : b.p);
    c.eps = a.eps != b.eps;
    c.pp = a.pp + (a.epsp ? -b.pp : b.pp);
    c.epsp = a.epsp != b.epsp;
    return c;
}

inline Weight weyl_apply(const WeylElement& w, Weight lambda)
{
    if (w.epsp) {
        lambda = reflect(Weight::gamma(), lambda);
    }
    if (w.pp != 0) {
        lambda = translate(Rational(w.pp) * Weight::gamma(), lambda);
    }
    if (w.eps) {
        lambda = reflect(Weight::alpha(), lambda);
    }
    if (w.p != 0) {
        lambda = translate(Rational(w.p) * Weight::alpha(), lambda);
    }
    return lambda;
}

inline std::ostream& operator<<(std::ostream& os, const WeylElement& w)
{
    return os << "{p:" << w.p << ",eps:" << w.eps << ",pp:" << w.pp << ",epsp:" << w.epsp << "}";
}

// ---------------------------------------------------------------------------
// Weights <-> monomials
// ---------------------------------------------------------------------------

/// Which exponent coordinates a weight is mapped to.
enum class WeightLattice {
    affine, ///< (n, a, b1, b2) of q^n x^a y1^b1 y2^b2
    finite  ///< (a, b1, b2) of x^a y1^b1 y2^b2; requires no delta component
};

inline LatticeSpec lattice_for(WeightLattice wl)
{
    return wl == WeightLattice::affine ? LatticeSpec::affine_gl22() : LatticeSpec::finite_gl22();
}

/// Exponent vector of the monomial e^{-lambda}, with q = e^{-delta},
/// x = e^{-alpha}, y_i = e^{-beta_i}. Positive roots map to in-cone monomials.
inline ExpVec weight_to_exp(const Weight& lambda, WeightLattice wl = WeightLattice::affine)
{
    // lambda = n delta + a alpha + b1 beta1 + b2 beta2 has coordinates
    // (a - b1, b2 - a, b1, -b2, n, 0).
    for (const auto& c : lambda.coords()) {
        if (c.denominator() != 1) {
            throw std::invalid_argument("weight " + lambda.str() + " is not in the root lattice (requires rho-normalization)");
        }
    }
    const auto e1 = lambda[0].numerator();
    const auto e2 = lambda[1].numerator();
    const auto d1 = lambda[2].numerator();
    const auto d2 = lambda[3].numerator();
    const auto dl = lambda[4].numerator();
    const auto l0 = lambda[5].numerator();
    if (l0 != 0 || e1 + e2 + d1 + d2 != 0) {
        throw std::invalid_argument("weight " + lambda.str() + " is not in the span of delta, alpha, beta1, beta2");
    }
    const std::int64_t b1 = d1;
    const std::int64_t b2 = -d2;
    const std::int64_t a = e1 + b1;
    const std::int64_t n = dl;
    if (wl == WeightLattice::finite) {
        if (n != 0) {
            throw std::invalid_argument("finite lattice cannot hold a delta component");
        }
        return {a, b1, b2};
    }
    return {n, a, b1, b2};
}

inline Weight exp_to_weight(const ExpVec& e, WeightLattice wl = WeightLattice::affine)
{
    const bool aff = wl == WeightLattice::affine;
    if (e.size() != (aff ? 4u : 3u)) {
        throw dimension_error("exponent vector length does not match the weight lattice");
    }
    const std::int64_t n = aff ? e[0] : 0;
    const std::size_t o = aff ? 1 : 0;
    return Rational(n) * Weight::delta() + Rational(e[o]) * Weight::alpha() + Rational(e[o + 1]) * Weight::beta1() +
           Rational(e[o + 2]) * Weight::beta2();
}

// ---------------------------------------------------------------------------
// Orbit terms
// ---------------------------------------------------------------------------

/// One factor (1 + sign e^{-mu})^power.
struct WeightFactor {
    Weight mu;
    int sign = 1;
    int power = -1;
};

/// sign * e^{top} * prod_j (1 + sign_j e^{-mu_j})^{power_j}.
struct OrbitTerm {
    int sign = 1;
    Weight top;
    std::vector<WeightFactor> factors;

    /// e^rho / ((1 + e^{-beta1})(1 + e^{-beta2})).
    static OrbitTerm standard_seed()
    {
        return {1, Weight::rho(), {{Weight::beta1(), 1, -1}, {Weight::beta2(), 1, -1}}};
    }

    /// R e^rho for finite gl(2|2): e^rho (1-e^{-alpha})(1-e^{-gamma}) / prod_i (1+e^{-beta_i})(1+e^{-alpha-beta_i}).
    static OrbitTerm finite_denominator()
    {
        const Weight a = Weight::alpha();
        const Weight b1 = Weight::beta1();
        const Weight b2 = Weight::beta2();
        return {1,
                Weight::rho(),
                {{a, -1, 1}, {Weight::gamma(), -1, 1}, {b1, 1, -1}, {b2, 1, -1}, {a + b1, 1, -1}, {a + b2, 1, -1}}};
    }
};

/// sgn(w) * w(term).
inline OrbitTerm weyl_apply(const WeylElement& w, const OrbitTerm& t)
{
    OrbitTerm out;
    out.sign = t.sign * weyl_sgn(w);
    out.top = weyl_apply(w, t.top);
    out.factors.reserve(t.factors.size());
    for (const auto& f : t.factors) {
        out.factors.push_back({weyl_apply(w, f.mu), f.sign, f.power});
    }
    return out;
}

/// e^{-rho} * term as a factored monomial expression on the lattice.
inline FactoredTerm factored(const OrbitTerm& t, WeightLattice wl)
{
    std::vector<BinomialFactor> fs;
    fs.reserve(t.factors.size());
    for (const auto& f : t.factors) {
        fs.push_back({weight_to_exp(f.mu, wl), f.sign, f.power});
    }
    // e^{top - rho} = e^{-(rho - top)}
    return FactoredTerm(lattice_for(wl), t.sign, weight_to_exp(Weight::rho() - t.top, wl), std::move(fs));
}

/// Expansion of e^{-rho} * t truncated at degree `cutoff`.
inline GradedSeries expand_orbit_term(const OrbitTerm& t, int cutoff, WeightLattice wl = WeightLattice::affine)
{
    return factored(t, wl).expand(cutoff);
}

enum class WeylGroup { W_alpha, W_gamma, T_alpha, T_gamma, What_alpha, What_gamma };

inline const char* to_string(WeylGroup g)
{
    switch (g) {
    case WeylGroup::W_alpha: return "W_alpha";
    case WeylGroup::W_gamma: return "W_gamma";
    case WeylGroup::T_alpha: return "T_alpha";
    case WeylGroup::T_gamma: return "T_gamma";
    case WeylGroup::What_alpha: return "What_alpha";
    case WeylGroup::What_gamma: return "What_gamma";
    }
    return "?";
}

/// Elements of G at translation distance exactly r (r = 0 includes the finite part).
inline std::vector<WeylElement> group_ring(WeylGroup g, std::int64_t r)
{
    const bool on_alpha = g == WeylGroup::W_alpha || g == WeylGroup::T_alpha || g == WeylGroup::What_alpha;
    const bool has_reflection = g == WeylGroup::W_alpha || g == WeylGroup::W_gamma || g == WeylGroup::What_alpha ||
                                g == WeylGroup::What_gamma;
    const bool has_translation = !(g == WeylGroup::W_alpha || g == WeylGroup::W_gamma);
    std::vector<WeylElement> out;
    if (r > 0 && !has_translation) {
        return out;
    }
    auto make = [&](std::int64_t n, bool refl) {
        return on_alpha ? WeylElement{n, refl, 0, false} : WeylElement{0, false, n, refl};
    };
    const std::vector<std::int64_t> shifts = r == 0 ? std::vector<std::int64_t>{0} : std::vector<std::int64_t>{r, -r};
    for (auto n : shifts) {
        out.push_back(make(n, false));
        if (has_reflection) {
            out.push_back(make(n, true));
        }
    }
    return out;
}

class nontermination_error : public error {
public:
    using error::error;
};

/// F_G(seed) = sum_{w in G} sgn(w) w(seed), rho-normalized and truncated.
///
/// The sum over an infinite G is walked ring by ring in translation distance.
/// It stops once a full ring and the ring after it have every term's minimal
/// degree above the cutoff; failing that within `max_rings`, the orbit sum is
/// not a cone series and nontermination_error is thrown.
inline GradedSeries orbit_sum(WeylGroup g, const OrbitTerm& seed, int cutoff,
                              WeightLattice wl = WeightLattice::affine, std::int64_t max_rings = -1)
{
    const LatticeSpec lattice = lattice_for(wl);
    DenseSeries acc(lattice, cutoff);
    if (max_rings < 0) {
        max_rings = 4 * static_cast<std::int64_t>(cutoff) + 64;
    }
    int quiet_rings = 0;
    for (std::int64_t r = 0;; ++r) {
        if (r > max_rings) {
            throw nontermination_error(std::string("orbit sum over ") + to_string(g) +
                                       " still contributes below the cutoff after " + std::to_string(max_rings) +
                                       " rings");
        }
        const auto ring = group_ring(g, r);
        if (ring.empty()) {
            break;
        }
        bool contributed = false;
        for (const auto& w : ring) {
            const FactoredTerm ft = factored(weyl_apply(w, seed), wl);
            if (ft.min_degree() <= cutoff) {
                ft.expand_into(acc);
                contributed = true;
            } else if (!ft.in_cone()) {
                throw support_error("support violation in orbit term");
            }
        }
        quiet_rings = contributed ? 0 : quiet_rings + 1;
        if (r > 0 && quiet_rings >= 2) {
            break;
        }
    }
    return acc.to_series();
}

} // namespace superdenom

#endif // SUPERDENOM_WEYL_HPP
