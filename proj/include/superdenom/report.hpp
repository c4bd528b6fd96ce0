#ifndef SUPERDENOM_REPORT_HPP
#define SUPERDENOM_REPORT_HPP

#include <chrono>
#include <cstdlib>
#include <future>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "series.hpp"

namespace superdenom {

struct CoefficientDiff {
    ExpVec monomial;
    Integer lhs;
    Integer rhs;
};

/// A named auxiliary check carried alongside the main comparison.
struct SubCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Outcome of one exact identity check. matched <=> first_diffs empty and all
/// sub-checks passed.
struct QReport {
    std::string identity;
    int cutoff = 0;
    bool matched = false;
    std::vector<CoefficientDiff> first_diffs;
    std::size_t lhs_terms = 0;
    std::size_t rhs_terms = 0;
    double millis = 0.0;
    std::vector<SubCheck> checks;

    void add_check(std::string name, bool passed, std::string detail = {})
    {
        checks.push_back({std::move(name), passed, std::move(detail)});
        if (!passed) {
            matched = false;
        }
    }
};

inline constexpr std::size_t kMaxReportedDiffs = 20;

/// Every monomial of degree <= min cutoff where a and b disagree, canonical order.
inline std::vector<CoefficientDiff> diff_series(const GradedSeries& a, const GradedSeries& b,
                                                std::size_t limit = kMaxReportedDiffs)
{
    require_same_lattice(a, b);
    const int n = std::min(a.cutoff(), b.cutoff());
    std::vector<CoefficientDiff> out;
    auto ta = a.terms();
    auto tb = b.terms();
    std::size_t i = 0;
    std::size_t j = 0;
    auto deg_ok = [n](const Term& t) { return detail::key_degree(t.key) <= n; };
    while (out.size() < limit) {
        const bool ha = i < ta.size() && deg_ok(ta[i]);
        const bool hb = j < tb.size() && deg_ok(tb[j]);
        if (!ha && !hb) {
            break;
        }
        if (ha && (!hb || ta[i].key < tb[j].key)) {
            out.push_back({a.exponents(ta[i].key), ta[i].coeff, 0});
            ++i;
        } else if (hb && (!ha || tb[j].key < ta[i].key)) {
            out.push_back({b.exponents(tb[j].key), 0, tb[j].coeff});
            ++j;
        } else {
            if (ta[i].coeff != tb[j].coeff) {
                out.push_back({a.exponents(ta[i].key), ta[i].coeff, tb[j].coeff});
            }
            ++i;
            ++j;
        }
    }
    return out;
}

inline QReport compare_series(std::string identity, const GradedSeries& lhs, const GradedSeries& rhs)
{
    QReport r;
    r.identity = std::move(identity);
    r.cutoff = std::min(lhs.cutoff(), rhs.cutoff());
    r.first_diffs = diff_series(lhs, rhs);
    r.matched = r.first_diffs.empty();
    r.lhs_terms = lhs.size();
    r.rhs_terms = rhs.size();
    return r;
}

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double millis() const
    {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

/// Worker cap from SUPERDENOM_THREADS (default: hardware concurrency).
inline unsigned worker_limit()
{
    if (const char* env = std::getenv("SUPERDENOM_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) {
            return static_cast<unsigned>(v);
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Runs two independent builders, concurrently when more than one worker is allowed.
template <typename F, typename G>
auto build_both(F&& f, G&& g)
{
    if (worker_limit() > 1) {
        auto fut = std::async(std::launch::async, std::forward<F>(f));
        auto second = g();
        return std::make_pair(fut.get(), std::move(second));
    }
    auto first = f();
    auto second = g();
    return std::make_pair(std::move(first), std::move(second));
}

} // namespace superdenom

#endif // SUPERDENOM_REPORT_HPP
