#ifndef SUPERDENOM_IO_HPP
#define SUPERDENOM_IO_HPP

// JSON interchange for series, weights, Weyl elements and reports.
//
// Series:  {"rank": r, "K": [[...]], "cutoff": N,
//           "terms": [{"k": [cone coords], "e": [raw exponents], "c": "<decimal>"}, ...]}
// Terms are written in canonical order (degree, then lexicographic in cone
// coordinates). Coefficients are decimal strings so no precision is lost.

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "json.hpp"

#include "report.hpp"
#include "series.hpp"
#include "weyl.hpp"

namespace superdenom {

using ojson = nlohmann::ordered_json;

class format_error : public error {
public:
    using error::error;
};

inline ojson to_json(const LatticeSpec& lattice)
{
    ojson k = ojson::array();
    for (int i = 0; i < lattice.rank(); ++i) {
        ojson row = ojson::array();
        for (int j = 0; j < lattice.rank(); ++j) {
            row.push_back(lattice.k(i, j));
        }
        k.push_back(std::move(row));
    }
    return k;
}

inline ojson to_json(const GradedSeries& s)
{
    ojson j;
    j["rank"] = s.lattice().rank();
    j["K"] = to_json(s.lattice());
    j["cutoff"] = s.cutoff();
    ojson terms = ojson::array();
    for (const auto& t : s.terms()) {
        ojson rec;
        rec["k"] = s.cone_of(t.key);
        rec["e"] = s.exponents(t.key);
        rec["c"] = t.coeff.str();
        terms.push_back(std::move(rec));
    }
    j["terms"] = std::move(terms);
    return j;
}

inline std::string serialize(const GradedSeries& s) { return to_json(s).dump(); }

namespace detail {

inline Integer parse_integer(const std::string& text)
{
    if (text.empty()) {
        throw format_error("empty coefficient");
    }
    std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (i == text.size()) {
        throw format_error("malformed coefficient '" + text + "'");
    }
    for (std::size_t k = i; k < text.size(); ++k) {
        if (text[k] < '0' || text[k] > '9') {
            throw format_error("malformed coefficient '" + text + "'");
        }
    }
    Integer v(text.substr(i));
    return text[0] == '-' ? Integer(-v) : v;
}

} // namespace detail

inline GradedSeries series_from_json(const ojson& j)
{
    try {
        const int rank = j.at("rank").get<int>();
        std::vector<std::int64_t> k;
        const auto& kj = j.at("K");
        if (!kj.is_array() || kj.size() != static_cast<std::size_t>(rank)) {
            throw format_error("K must be a rank x rank array");
        }
        for (const auto& row : kj) {
            if (!row.is_array() || row.size() != static_cast<std::size_t>(rank)) {
                throw format_error("K must be a rank x rank array");
            }
            for (const auto& v : row) {
                k.push_back(v.get<std::int64_t>());
            }
        }
        const LatticeSpec lattice(rank, k);
        const int cutoff = j.at("cutoff").get<int>();
        detail::check_cutoff(cutoff);
        std::vector<Term> terms;
        for (const auto& rec : j.at("terms")) {
            const auto e = rec.at("e").get<ExpVec>();
            lattice.check_dim(e.size());
            const auto cc = cone_coords(lattice, e);
            if (!cc.in_cone) {
                throw format_error("record with out-of-cone exponent");
            }
            if (cc.degree > cutoff) {
                throw format_error("record above the cutoff");
            }
            if (rec.contains("k") && rec.at("k").get<std::vector<std::int64_t>>() != cc.coords) {
                throw format_error("cone coordinates disagree with K * exponents");
            }
            Integer c = detail::parse_integer(rec.at("c").get<std::string>());
            if (c == 0) {
                throw format_error("zero coefficient stored");
            }
            terms.push_back({detail::pack_coords(cc.coords), std::move(c)});
        }
        std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.key < b.key; });
        for (std::size_t i = 1; i < terms.size(); ++i) {
            if (terms[i].key == terms[i - 1].key) {
                throw format_error("duplicate monomial");
            }
        }
        return GradedSeries::from_sorted(lattice, cutoff, std::move(terms));
    } catch (const nlohmann::json::exception& e) {
        throw format_error(std::string("malformed series record: ") + e.what());
    } catch (const dimension_error& e) {
        throw format_error(std::string("malformed series lattice: ") + e.what());
    } catch (const truncation_error& e) {
        throw format_error(std::string("malformed series cutoff: ") + e.what());
    }
}

inline GradedSeries deserialize(const std::string& text)
{
    ojson j;
    try {
        j = ojson::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw format_error(std::string("not JSON: ") + e.what());
    }
    return series_from_json(j);
}

inline ojson to_json(const Weight& w)
{
    ojson a = ojson::array();
    for (const auto& c : w.coords()) {
        a.push_back(Weight::rational_str(c));
    }
    return a;
}

inline Weight weight_from_json(const ojson& j)
{
    if (!j.is_array() || j.size() != Weight::kDim) {
        throw format_error("weight must be an array of six rationals");
    }
    std::array<Rational, Weight::kDim> c;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const auto s = j[i].get<std::string>();
        const auto slash = s.find('/');
        try {
            if (slash == std::string::npos) {
                c[i] = Rational(std::stoll(s));
            } else {
                c[i] = Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
            }
        } catch (const std::exception&) {
            throw format_error("malformed rational '" + s + "'");
        }
    }
    return Weight(c);
}

inline ojson to_json(const WeylElement& w)
{
    ojson j;
    j["p"] = w.p;
    j["eps"] = w.eps ? 1 : 0;
    j["pp"] = w.pp;
    j["epsp"] = w.epsp ? 1 : 0;
    return j;
}

inline WeylElement weyl_from_json(const ojson& j)
{
    return {j.at("p").get<std::int64_t>(), j.at("eps").get<int>() != 0, j.at("pp").get<std::int64_t>(),
            j.at("epsp").get<int>() != 0};
}

/// Machine-readable report. `millis` is only written when `with_timing` is set,
/// keeping default output byte-identical across runs.
inline ojson to_json(const QReport& r, bool with_timing = false)
{
    ojson j;
    j["identity"] = r.identity;
    j["cutoff"] = r.cutoff;
    j["matched"] = r.matched;
    ojson diffs = ojson::array();
    for (const auto& d : r.first_diffs) {
        ojson rec;
        rec["e"] = d.monomial;
        rec["lhs"] = d.lhs.str();
        rec["rhs"] = d.rhs.str();
        diffs.push_back(std::move(rec));
    }
    j["first_diffs"] = std::move(diffs);
    j["lhs_terms"] = r.lhs_terms;
    j["rhs_terms"] = r.rhs_terms;
    if (with_timing) {
        j["millis"] = r.millis;
    }
    if (!r.checks.empty()) {
        ojson checks = ojson::array();
        for (const auto& c : r.checks) {
            ojson rec;
            rec["name"] = c.name;
            rec["passed"] = c.passed;
            if (!c.detail.empty()) {
                rec["detail"] = c.detail;
            }
            checks.push_back(std::move(rec));
        }
        j["checks"] = std::move(checks);
    }
    return j;
}

} // namespace superdenom

#endif // SUPERDENOM_IO_HPP
