#ifndef SUPERDENOM_ANALYTIC_HPP
#define SUPERDENOM_ANALYTIC_HPP

// Floating-point reproduction of the evaluation argument at x = -1,
// y1 = y^2, y2 = y. Everything here is complex double with explicit tail
// truncation; the exact verification lives in denominator.hpp.
//
// Notation: (1 + a)_q = prod_{n>=0} (1 + a q^n).

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <future>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "denominator.hpp"
#include "report.hpp"
#include "series.hpp"

namespace superdenom {

using cplx = std::complex<double>;

class pole_proximity_error : public error {
public:
    using error::error;
};

class convergence_error : public error {
public:
    using error::error;
};

struct EvalConfig {
    double q = 0.1;
    double tol = 1e-8;
    double tail_eps = 1e-16;
    std::vector<cplx> samples;

    /// q = 0.1, tol = 1e-8, tail_eps = 1e-16; 16 samples, eight on each of the
    /// circles |y| = 0.7 and |y| = 1.2 at angles (2k+1) pi / 8.
    static EvalConfig defaults()
    {
        EvalConfig cfg;
        for (double r : {0.7, 1.2}) {
            for (int k = 0; k < 8; ++k) {
                cfg.samples.push_back(std::polar(r, (2 * k + 1) * std::numbers::pi / 8));
            }
        }
        return cfg;
    }

    void validate() const;
};

// ---------------------------------------------------------------------------
// Pole and zero sets
// ---------------------------------------------------------------------------

/// Distance from y to Z = {y : y^2 = +-q^m}.
inline double distance_to_Z(double q, cplx y)
{
    const double m0 = std::round(2 * std::log(std::abs(y)) / std::log(q));
    double best = INFINITY;
    for (double m = m0 - 2; m <= m0 + 2; m += 1) {
        const double r = std::pow(q, m / 2);
        for (cplx unit : {cplx(1, 0), cplx(-1, 0), cplx(0, 1), cplx(0, -1)}) {
            best = std::min(best, std::abs(y - r * unit));
        }
    }
    return best;
}

/// Distance from y to P = {y : y^3 = -q^m, y != -q^k}.
inline double distance_to_P(double q, cplx y)
{
    const double m0 = std::round(3 * std::log(std::abs(y)) / std::log(q));
    double best = INFINITY;
    for (double m = m0 - 3; m <= m0 + 3; m += 1) {
        const double r = std::pow(q, m / 3);
        for (double phase : {std::numbers::pi / 3, -std::numbers::pi / 3}) {
            best = std::min(best, std::abs(y - std::polar(r, phase)));
        }
        // the real cube root -q^{m/3} is excluded unless m/3 is not an integer
        if (static_cast<std::int64_t>(m) % 3 != 0) {
            best = std::min(best, std::abs(y + r));
        }
    }
    return best;
}

/// Distance from y to the poles {q^n : n != 0} of A.
inline double distance_to_A_poles(double q, cplx y)
{
    const double n0 = std::round(std::log(std::abs(y)) / std::log(q));
    double best = INFINITY;
    for (double n = n0 - 1; n <= n0 + 1; n += 1) {
        if (n != 0) {
            best = std::min(best, std::abs(y - std::pow(q, n)));
        }
    }
    return best;
}

inline void EvalConfig::validate() const
{
    if (!(q > 0 && q < 1)) {
        throw convergence_error("q must lie in (0, 1)");
    }
    if (!(tol > 0) || !(tail_eps > 0)) {
        throw convergence_error("tol and tail_eps must be positive");
    }
    const double guard = std::sqrt(tol);
    for (const cplx& y : samples) {
        if (!(std::abs(y) > 0)) {
            throw pole_proximity_error("sample at y = 0");
        }
        if (distance_to_Z(q, y) < guard) {
            std::ostringstream os;
            os << "sample " << y << " lies within " << guard << " of the pole set Z";
            throw pole_proximity_error(os.str());
        }
    }
}

namespace detail {

inline constexpr int kMaxIterations = 200000;

/// Evaluation points closer than this to a pole are rejected outright.
inline double pole_guard(const EvalConfig& cfg) { return std::sqrt(cfg.tail_eps); }

inline void guard(double distance, const EvalConfig& cfg, const char* what, cplx y)
{
    if (distance < pole_guard(cfg)) {
        std::ostringstream os;
        os << what << " has a pole near y = " << y;
        throw pole_proximity_error(os.str());
    }
}

/// (1 + a)_q = prod_{n>=0} (1 + a q^n), stopping once |a q^n| < tail_eps.
inline cplx qpoch(const EvalConfig& cfg, cplx a)
{
    cplx p = 1;
    cplx t = a;
    for (int n = 0; n < kMaxIterations; ++n) {
        if (std::abs(t) < cfg.tail_eps) {
            return p;
        }
        p *= 1.0 + t;
        t *= cfg.q;
    }
    throw convergence_error("q-Pochhammer product did not converge");
}

/// sum_{n in Z} f(n). Each direction runs until it is past `settle` and the
/// term is below tail_eps relative to the running sum.
inline cplx bilateral_sum(const EvalConfig& cfg, const std::function<cplx(std::int64_t)>& f, std::int64_t settle)
{
    cplx s = f(0);
    for (int dir : {1, -1}) {
        for (std::int64_t k = 1;; ++k) {
            if (k > kMaxIterations) {
                throw convergence_error("bilateral sum did not converge");
            }
            const cplx t = f(dir * k);
            s += t;
            if (k >= settle && std::abs(t) <= cfg.tail_eps * std::max(1.0, std::abs(s))) {
                break;
            }
        }
    }
    return s;
}

/// Index beyond which q^{|n|} |y|^{+-2} is far from 1.
inline std::int64_t settle_index(const EvalConfig& cfg, cplx y)
{
    const double spread = 2 * std::abs(std::log(std::abs(y))) / -std::log(cfg.q);
    return static_cast<std::int64_t>(std::ceil(spread)) + 2;
}

} // namespace detail

// ---------------------------------------------------------------------------
// A, B, R^ and A/R^
// ---------------------------------------------------------------------------

/// A(y) = ((1-q)_q)^2 / ((1-qy)_q (1-qy^-1)_q).
inline cplx eval_A(const EvalConfig& cfg, cplx y)
{
    detail::guard(distance_to_A_poles(cfg.q, y), cfg, "A", y);
    const double q = cfg.q;
    const cplx num = detail::qpoch(cfg, -q);
    return num * num / (detail::qpoch(cfg, -q * y) * detail::qpoch(cfg, -q / y));
}

/// R^(y) = 2 prod_{n>=1} (1-q^n)^4 (1+q^n)^2 (1+q^{n-1}y^3)(1+q^n y^-3)
///         / prod_{n>=0} prod_{s=1,2} (1+q^n y^s)(1+q^{n+1}y^-s)(1-q^n y^s)(1-q^{n+1}y^-s).
inline cplx eval_Rhat(const EvalConfig& cfg, cplx y)
{
    detail::guard(distance_to_Z(cfg.q, y), cfg, "R^", y);
    using detail::qpoch;
    const double q = cfg.q;
    const cplx y3 = y * y * y;
    const cplx a = qpoch(cfg, -q);
    const cplx b = qpoch(cfg, q);
    cplx num = 2.0 * a * a * a * a * b * b * qpoch(cfg, y3) * qpoch(cfg, q / y3);
    cplx den = 1;
    for (const cplx ys : {y, y * y}) {
        den *= qpoch(cfg, ys) * qpoch(cfg, q / ys) * qpoch(cfg, -ys) * qpoch(cfg, -q / ys);
    }
    return num / den;
}

/// A/R^ in the closed form
/// (1-y) prod_{n>=0} (1-q^n y^2)(1-q^{n+1}y^-2) prod_s (1+q^n y^s)(1+q^{n+1}y^-s)
///   / (2 prod_{n>=1} (1-q^{2n})^2 prod_{n>=0} (1+q^n y^3)(1+q^{n+1}y^-3)).
inline cplx eval_A_over_Rhat(const EvalConfig& cfg, cplx y)
{
    detail::guard(distance_to_P(cfg.q, y), cfg, "A/R^", y);
    using detail::qpoch;
    const double q = cfg.q;
    const cplx y2 = y * y;
    const cplx y3 = y2 * y;
    cplx num = (1.0 - y) * qpoch(cfg, -y2) * qpoch(cfg, -q / y2);
    for (const cplx ys : {y, y2}) {
        num *= qpoch(cfg, ys) * qpoch(cfg, q / ys);
    }
    EvalConfig q2 = cfg;
    q2.q = q * q;
    const cplx e = qpoch(q2, -q * q);
    return num / (2.0 * e * e * qpoch(cfg, y3) * qpoch(cfg, q / y3));
}

/// B(y) = sum_n q^n / ((1+q^n y)(1+q^n y^2)) + q^n / ((1-q^n y)(1-q^n y^2)).
inline cplx eval_B(const EvalConfig& cfg, cplx y)
{
    detail::guard(distance_to_Z(cfg.q, y), cfg, "B", y);
    const double q = cfg.q;
    const cplx y2 = y * y;
    auto term = [&](std::int64_t n) {
        const double qn = std::pow(q, static_cast<double>(n));
        return qn / ((1.0 + qn * y) * (1.0 + qn * y2)) + qn / ((1.0 - qn * y) * (1.0 - qn * y2));
    };
    return detail::bilateral_sum(cfg, term, detail::settle_index(cfg, y));
}

/// B(y) through the partial-fraction form
/// (1-y)^-1 sum_n (q^n/(1+q^n y) - q^n y/(1+q^n y^2) + q^n/(1-q^n y) - q^n y/(1-q^n y^2)).
inline cplx eval_B_split(const EvalConfig& cfg, cplx y)
{
    detail::guard(distance_to_Z(cfg.q, y), cfg, "B", y);
    const double q = cfg.q;
    const cplx y2 = y * y;
    auto term = [&](std::int64_t n) {
        const double qn = std::pow(q, static_cast<double>(n));
        return qn / (1.0 + qn * y) - qn * y / (1.0 + qn * y2) + qn / (1.0 - qn * y) - qn * y / (1.0 - qn * y2);
    };
    return detail::bilateral_sum(cfg, term, detail::settle_index(cfg, y)) / (1.0 - y);
}

/// (A B / R^)(y), expected to be identically 1.
inline cplx eval_ratio(const EvalConfig& cfg, cplx y) { return eval_A_over_Rhat(cfg, y) * eval_B(cfg, y); }

// ---------------------------------------------------------------------------
// Generic-point evaluation of the two sides and of exact series
// ---------------------------------------------------------------------------

struct Point4 {
    cplx q;
    cplx x;
    cplx y1;
    cplx y2;
};

/// sum c * q^n x^a y1^b1 y2^b2 over the stored terms of a gl(2|2)^ series.
inline cplx evaluate_series(const GradedSeries& s, const std::vector<cplx>& vars)
{
    if (vars.size() != static_cast<std::size_t>(s.lattice().rank())) {
        throw dimension_error("evaluate_series: wrong number of variables");
    }
    cplx total = 0;
    for (const auto& t : s.terms()) {
        const ExpVec e = s.exponents(t.key);
        cplx m = t.coeff.convert_to<double>();
        for (std::size_t i = 0; i < e.size(); ++i) {
            m *= std::pow(vars[i], static_cast<int>(e[i]));
        }
        total += m;
    }
    return total;
}

inline std::vector<cplx> as_vars(const Point4& p) { return {p.q, p.x, p.y1, p.y2}; }

/// Product side at a generic point (|q| < 1), straight from the factor list.
inline cplx eval_lhs_product(const EvalConfig& cfg, const Point4& p)
{
    if (!(std::abs(p.q) < 1)) {
        throw convergence_error("|q| must be < 1");
    }
    cplx out = 1;
    for (const auto& f : gl22::denominator_factors()) {
        cplx head = std::pow(p.q, static_cast<int>(f.head[0])) * std::pow(p.x, static_cast<int>(f.head[1])) *
                    std::pow(p.y1, static_cast<int>(f.head[2])) * std::pow(p.y2, static_cast<int>(f.head[3]));
        cplx prod = 1;
        cplx t = static_cast<double>(f.sign) * head;
        for (int n = 0; std::abs(t) >= cfg.tail_eps; ++n) {
            if (n >= detail::kMaxIterations) {
                throw convergence_error("product did not converge");
            }
            prod *= 1.0 + t;
            t *= p.q;
        }
        out *= f.power > 0 ? std::pow(prod, f.power) : 1.0 / std::pow(prod, -f.power);
    }
    return out;
}

/// Sum side at a generic point: A(y1/y2) times
/// sum_n q^n/((1+q^n y1)(1+q^n y2)) - q^n x/((1+q^n x y1)(1+q^n x y2)).
inline cplx eval_rhs_sum(const EvalConfig& cfg, const Point4& p)
{
    const cplx y = p.y1 / p.y2;
    EvalConfig c = cfg;
    if (p.q.imag() != 0 || !(p.q.real() > 0 && p.q.real() < 1)) {
        throw convergence_error("eval_rhs_sum needs real q in (0, 1)");
    }
    c.q = p.q.real();
    auto term = [&](std::int64_t n) {
        const cplx qn = std::pow(p.q, static_cast<double>(n));
        return qn / ((1.0 + qn * p.y1) * (1.0 + qn * p.y2)) - qn * p.x / ((1.0 + qn * p.x * p.y1) * (1.0 + qn * p.x * p.y2));
    };
    const double spread = std::max({std::abs(std::log(std::abs(p.y1))), std::abs(std::log(std::abs(p.y2))),
                                    std::abs(std::log(std::abs(p.x * p.y1))), std::abs(std::log(std::abs(p.x * p.y2)))});
    const auto settle = static_cast<std::int64_t>(std::ceil(spread / -std::log(c.q))) + 2;
    return eval_A(c, y) * detail::bilateral_sum(c, term, settle);
}

// ---------------------------------------------------------------------------
// Checks
// ---------------------------------------------------------------------------

/// One numeric check: the largest deviation seen against its tolerance.
struct NumericCheck {
    std::string name;
    bool passed = false;
    double max_deviation = 0;
    double tol = 0;
    std::vector<std::string> notes;
};

namespace detail {

/// Applies f to each y, in parallel when more than one worker is allowed.
template <typename F>
std::vector<double> map_samples(const std::vector<cplx>& ys, F f)
{
    std::vector<double> out(ys.size());
    const unsigned workers = worker_limit();
    if (workers <= 1 || ys.size() < 2) {
        for (std::size_t i = 0; i < ys.size(); ++i) {
            out[i] = f(ys[i]);
        }
        return out;
    }
    std::vector<std::future<void>> jobs;
    for (unsigned w = 0; w < workers; ++w) {
        jobs.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < ys.size(); i += workers) {
                out[i] = f(ys[i]);
            }
        }));
    }
    for (auto& j : jobs) {
        j.get();
    }
    return out;
}

inline NumericCheck finish(std::string name, const std::vector<double>& devs, double tol)
{
    NumericCheck c{std::move(name), true, 0, tol, {}};
    for (double d : devs) {
        c.max_deviation = std::max(c.max_deviation, d);
        if (!(d < tol)) {
            c.passed = false;
        }
    }
    return c;
}

inline std::string fmt(cplx z)
{
    std::ostringstream os;
    os.precision(12);
    os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    return os.str();
}

inline std::string fmt(double v)
{
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

} // namespace detail

/// (A/R^)(qy) = (A/R^)(y) q(1-qy)/(1-y), B(qy)/B(y) = q^-1 (1-y)/(1-qy), and
/// their product (AB/R^)(qy) = (AB/R^)(y). Deviations are relative.
inline std::vector<NumericCheck> check_functional(const EvalConfig& cfg, cplx y)
{
    const double q = cfg.q;
    const cplx qy = q * y;
    const cplx lr_y = eval_A_over_Rhat(cfg, y);
    const cplx lr_qy = eval_A_over_Rhat(cfg, qy);
    const cplx lr_expect = lr_y * q * (1.0 - qy) / (1.0 - y);
    const cplx b_ratio = eval_B(cfg, qy) / eval_B(cfg, y);
    const cplx b_expect = (1.0 - y) / (q * (1.0 - qy));
    const cplx f_y = lr_y * eval_B(cfg, y);
    const cplx f_qy = lr_qy * eval_B(cfg, qy);

    auto rel = [](cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); };
    std::vector<NumericCheck> out;
    out.push_back(detail::finish("A/R^ quasi-periodicity at y=" + detail::fmt(y), {rel(lr_qy, lr_expect)}, cfg.tol));
    auto b = detail::finish("B(qy)/B(y) at y=" + detail::fmt(y), {rel(b_ratio, b_expect)}, cfg.tol);
    b.notes.push_back("measured B(qy)/B(y) = " + detail::fmt(b_ratio));
    b.notes.push_back("q^-1 (1-y)/(1-qy) = " + detail::fmt(b_expect));
    out.push_back(std::move(b));
    out.push_back(detail::finish("AB/R^ q-invariance at y=" + detail::fmt(y), {rel(f_qy, f_y)}, cfg.tol));
    return out;
}

/// |(AB/R^)(y) - 1| over every sample.
inline NumericCheck check_ratio_one(const EvalConfig& cfg)
{
    cfg.validate();
    const auto devs = detail::map_samples(cfg.samples, [&](cplx y) { return std::abs(eval_ratio(cfg, y) - 1.0); });
    return detail::finish("AB/R^ == 1 on samples", devs, cfg.tol);
}

/// Both forms of B agree on the samples.
inline NumericCheck check_b_forms(const EvalConfig& cfg)
{
    cfg.validate();
    const auto devs = detail::map_samples(cfg.samples, [&](cplx y) {
        const cplx a = eval_B(cfg, y);
        return std::abs(a - eval_B_split(cfg, y)) / std::max(1.0, std::abs(a));
    });
    return detail::finish("B direct == B partial fractions", devs, cfg.tol);
}

/// A/R^ in closed form against A / R^ from the separate products.
inline NumericCheck check_lr_form(const EvalConfig& cfg)
{
    cfg.validate();
    const auto devs = detail::map_samples(cfg.samples, [&](cplx y) {
        const cplx lr = eval_A_over_Rhat(cfg, y);
        return std::abs(lr - eval_A(cfg, y) / eval_Rhat(cfg, y)) / std::max(1.0, std::abs(lr));
    });
    return detail::finish("A/R^ closed form == A / R^", devs, cfg.tol);
}

/// |B| at y = q^{k/3} e^{+-i pi/3} for k = 1, 2.
inline NumericCheck check_zero_set(const EvalConfig& cfg)
{
    std::vector<cplx> pts;
    for (int k : {1, 2}) {
        for (double phase : {std::numbers::pi / 3, -std::numbers::pi / 3}) {
            pts.push_back(std::polar(std::pow(cfg.q, k / 3.0), phase));
        }
    }
    std::vector<double> devs;
    for (const cplx& y : pts) {
        devs.push_back(std::abs(eval_B(cfg, y)));
    }
    return detail::finish("B vanishes on P", devs, cfg.tol);
}

inline constexpr double kLimitTol = 1e-3;
inline constexpr double kLimitStep = 1e-4;

/// (y-1)^-2 (A/R^)(y) -> 2 and (1-y)^2 B(y) -> 1/2 at y = 1 + 1e-4.
inline std::vector<NumericCheck> check_limits(const EvalConfig& cfg)
{
    const cplx y = 1.0 + kLimitStep;
    const cplx lr = eval_A_over_Rhat(cfg, y) / ((y - 1.0) * (y - 1.0));
    const cplx bl = (1.0 - y) * (1.0 - y) * eval_B(cfg, y);
    auto a = detail::finish("(y-1)^-2 A/R^ -> 2", {std::abs(lr - 2.0)}, kLimitTol);
    a.notes.push_back("value " + detail::fmt(lr));
    auto b = detail::finish("(1-y)^2 B -> 1/2", {std::abs(bl - 0.5)}, kLimitTol);
    b.notes.push_back("value " + detail::fmt(bl));
    return {a, b};
}

/// Vanishing order of A/R^ at y0: f(y0+e)/e^k must settle to a nonzero constant.
inline NumericCheck check_zero_order(const EvalConfig& cfg, cplx y0, int order)
{
    const cplx dir = std::polar(1.0, 0.3);
    auto scaled = [&](double eps) {
        const cplx e = eps * dir;
        return eval_A_over_Rhat(cfg, y0 + e) / std::pow(e, order);
    };
    const cplx c1 = scaled(1e-4);
    const cplx c2 = scaled(5e-5);
    const double dev = std::abs(c1 - c2) / std::max(std::abs(c2), 1e-300);
    auto c = detail::finish("A/R^ vanishes to order " + std::to_string(order) + " at y=" + detail::fmt(y0), {dev},
                            kLimitTol);
    if (!(std::abs(c2) > 1e-8)) {
        c.passed = false;
        c.notes.push_back("leading coefficient vanishes");
    }
    c.notes.push_back("leading coefficient " + detail::fmt(c2));
    return c;
}

inline constexpr double kAnLimitTol = 1e-6;

/// a_n(x) = q^n/(1+q^n)^2 - q^n x/(1+q^n x)^2.
inline double a_n(double q, std::int64_t n, double x)
{
    const double qn = std::pow(q, static_cast<double>(n));
    return qn / ((1 + qn) * (1 + qn)) - qn * x / ((1 + qn * x) * (1 + qn * x));
}

/// lim_{x->1} g(x)/(x-1)^2 for g(1) = g'(1) = 0, i.e. g''(1)/2, from central
/// second differences with one Richardson step. The step is halved until two
/// successive extrapolations agree within tol/10.
inline double second_order_limit(const std::function<double(double)>& g, double tol)
{
    auto d2 = [&](double h) { return (g(1 + h) - 2 * g(1) + g(1 - h)) / (h * h); };
    auto richardson = [&](double h) { return (4 * d2(h / 2) - d2(h)) / 3; };
    double h = 0.1;
    double prev = richardson(h);
    while (h > 1e-4) {
        h /= 2;
        const double cur = richardson(h);
        if (std::abs(cur - prev) < tol / 10) {
            return cur / 2;
        }
        prev = cur;
    }
    throw convergence_error("finite-difference step too large for tolerance");
}

/// lim a_0/(x-1)^2 = 1/16 and lim (a_n + a_-n)/(x-1)^2 = -q^n(q^{2n}-4q^n+1)/(1+q^n)^4.
inline NumericCheck check_an_limits(const EvalConfig& cfg, int n_max, double tol = kAnLimitTol)
{
    const double q = cfg.q;
    std::vector<double> devs;
    NumericCheck out;
    for (std::int64_t n = 0; n <= n_max; ++n) {
        std::function<double(double)> g;
        double expect = 0;
        if (n == 0) {
            g = [q](double x) { return a_n(q, 0, x); };
            expect = 1.0 / 16;
        } else {
            g = [q, n](double x) { return a_n(q, n, x) + a_n(q, -n, x); };
            const double qn = std::pow(q, static_cast<double>(n));
            expect = -qn * (qn * qn - 4 * qn + 1) / std::pow(1 + qn, 4);
        }
        const double got = second_order_limit(g, tol);
        devs.push_back(std::abs(got - expect));
        out.notes.push_back("n=" + std::to_string(n) + " limit " + detail::fmt(got) + " expected " + detail::fmt(expect));
    }
    auto c = detail::finish("a_n limits at x=1, n<=" + std::to_string(n_max), devs, tol);
    c.notes = std::move(out.notes);
    return c;
}

inline constexpr int kPrefactorSeriesCutoff = 200;

/// Exact prefactor series at (q, y1 = y, y2 = 1) against A(y) on the samples.
inline NumericCheck check_prefactor_series(const EvalConfig& cfg, int cutoff = kPrefactorSeriesCutoff)
{
    cfg.validate();
    const GradedSeries pre = build_prefactor(cutoff, PrefactorMethod::fn_series);
    const auto devs = detail::map_samples(cfg.samples, [&](cplx y) {
        const cplx a = eval_A(cfg, y);
        return std::abs(evaluate_series(pre, {cfg.q, 1.0, y, 1.0}) - a) / std::max(1.0, std::abs(a));
    });
    return detail::finish("prefactor series == A(y) on samples", devs, cfg.tol);
}

/// Where the truncated cone series converge fast enough to compare at tol:
/// x = -1, y1 = y^2, y2 = y with small |y| and q.
struct SpecializationPoint {
    double q = 0.01;
    cplx y = std::polar(0.3, 0.4);
    int cutoff = 40;
};

/// The exact LHS and RHS series at (q, -1, y^2, y) against R^(y) and A(y)B(y),
/// and both sides at a generic point against the product and sum closed forms.
inline std::vector<NumericCheck> check_series_specialization(const EvalConfig& cfg, SpecializationPoint pt = {})
{
    EvalConfig c = cfg;
    c.q = pt.q;
    auto [lhs, rhs] = build_both([&] { return build_lhs(pt.cutoff); }, [&] { return build_rhs(pt.cutoff); });
    const std::vector<cplx> v{pt.q, -1.0, pt.y * pt.y, pt.y};
    const cplx rhat = eval_Rhat(c, pt.y);
    const cplx ab = eval_A(c, pt.y) * eval_B(c, pt.y);
    auto rel = [](cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); };
    std::vector<NumericCheck> out;
    out.push_back(detail::finish("LHS series at x=-1 == R^(y)", {rel(evaluate_series(lhs, v), rhat)}, cfg.tol));
    out.push_back(detail::finish("RHS series at x=-1 == A(y)B(y)", {rel(evaluate_series(rhs, v), ab)}, cfg.tol));

    const Point4 p{1e-5, 0.05, 0.06, 0.08};
    out.push_back(detail::finish("LHS series == product at a generic point",
                                 {rel(evaluate_series(lhs, as_vars(p)), eval_lhs_product(c, p))}, cfg.tol));
    out.push_back(detail::finish("RHS series == sum at a generic point",
                                 {rel(evaluate_series(rhs, as_vars(p)), eval_rhs_sum(c, p))}, cfg.tol));
    return out;
}

inline std::vector<NumericCheck> run_analytic_suite(const EvalConfig& cfg, int n_max = 4)
{
    cfg.validate();
    std::vector<NumericCheck> out;
    out.push_back(check_ratio_one(cfg));
    out.push_back(check_lr_form(cfg));
    out.push_back(check_b_forms(cfg));
    out.push_back(check_zero_set(cfg));
    for (cplx y : {cplx(0.7, 0), cplx(0.5, 0.4)}) {
        for (auto& c : check_functional(cfg, y)) {
            out.push_back(std::move(c));
        }
    }
    for (auto& c : check_limits(cfg)) {
        out.push_back(std::move(c));
    }
    out.push_back(check_zero_order(cfg, 1.0, 2));
    out.push_back(check_zero_order(cfg, -1.0, 1));
    out.push_back(check_zero_order(cfg, cplx(0, std::sqrt(cfg.q)), 1));
    out.push_back(check_an_limits(cfg, n_max));
    out.push_back(check_prefactor_series(cfg));
    for (auto& c : check_series_specialization(cfg)) {
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace superdenom

#endif // SUPERDENOM_ANALYTIC_HPP
