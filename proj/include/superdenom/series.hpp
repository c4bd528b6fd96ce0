#ifndef SUPERDENOM_SERIES_HPP
#define SUPERDENOM_SERIES_HPP

// Exact Laurent series supported in a single simplicial cone.
//
// A series lives on a LatticeSpec: raw exponent vectors e (exponents of the
// generating variables) are mapped to cone coordinates K*e by a unimodular
// integer matrix K. A monomial is in the cone iff all cone coordinates are
// nonnegative, and its degree is the sum of the cone coordinates. Every degree
// slice of the cone is finite, so a series truncated at degree N is a finite
// object holding all coefficients of degree <= N exactly.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace superdenom {

using Integer = boost::multiprecision::cpp_int;

/// Raw exponent vector of a Laurent monomial.
using ExpVec = std::vector<std::int64_t>;

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class dimension_error : public error {
public:
    using error::error;
};

/// Query or operation reaching past the truncation degree.
class truncation_error : public error {
public:
    using error::error;
};

class not_invertible_error : public error {
public:
    using error::error;
};

/// A monomial (or a whole expansion) that would leave the standard cone.
class support_error : public error {
public:
    using error::error;
};

inline constexpr int kMaxRank = 7;
inline constexpr int kMaxCutoff = 255;

// ---------------------------------------------------------------------------
// LatticeSpec
// ---------------------------------------------------------------------------

class LatticeSpec {
public:
    LatticeSpec(int rank, std::vector<std::int64_t> k_rowmajor, std::string name = "custom")
        : rank_(rank), k_(std::move(k_rowmajor)), name_(std::move(name))
    {
        if (rank_ < 1 || rank_ > kMaxRank) {
            throw dimension_error("lattice rank must be in [1, " + std::to_string(kMaxRank) + "]");
        }
        if (k_.size() != static_cast<std::size_t>(rank_ * rank_)) {
            throw dimension_error("lattice matrix must have rank*rank entries");
        }
        kinv_ = integer_inverse(rank_, k_);
    }

    /// q^n x^a y1^b1 y2^b2 with K(n,a,b1,b2) = (b1+n, a+n, b2+n, n).
    /// The unit cone directions are y1, x, y2 and q(x y1 y2)^-1.
    static LatticeSpec affine_gl22()
    {
        return LatticeSpec(4,
                           {1, 0, 1, 0,
                            1, 1, 0, 0,
                            1, 0, 0, 1,
                            1, 0, 0, 0},
                           "gl22-affine");
    }

    /// x^a y1^b1 y2^b2, identity grading.
    static LatticeSpec finite_gl22()
    {
        return LatticeSpec(3, {1, 0, 0, 0, 1, 0, 0, 0, 1}, "gl22-finite");
    }

    /// z^n u1^b1 u2^b2 with K(n,b1,b2) = (b1+n, b2+n, n); deg z = 3.
    static LatticeSpec affine_sl21()
    {
        return LatticeSpec(3, {1, 1, 0, 1, 0, 1, 1, 0, 0}, "sl21-affine");
    }

    /// Plain power series in q.
    static LatticeSpec q_line() { return LatticeSpec(1, {1}, "q"); }

    int rank() const noexcept { return rank_; }
    const std::string& name() const noexcept { return name_; }
    std::int64_t k(int row, int col) const { return k_[static_cast<std::size_t>(row * rank_ + col)]; }
    std::int64_t kinv(int row, int col) const { return kinv_[static_cast<std::size_t>(row * rank_ + col)]; }
    const std::vector<std::int64_t>& matrix() const noexcept { return k_; }

    std::vector<std::int64_t> to_cone(std::span<const std::int64_t> raw) const
    {
        check_dim(raw.size());
        std::vector<std::int64_t> c(static_cast<std::size_t>(rank_), 0);
        for (int i = 0; i < rank_; ++i) {
            for (int j = 0; j < rank_; ++j) {
                c[static_cast<std::size_t>(i)] += k(i, j) * raw[static_cast<std::size_t>(j)];
            }
        }
        return c;
    }

    ExpVec to_raw(std::span<const std::int64_t> cone) const
    {
        check_dim(cone.size());
        ExpVec e(static_cast<std::size_t>(rank_), 0);
        for (int i = 0; i < rank_; ++i) {
            for (int j = 0; j < rank_; ++j) {
                e[static_cast<std::size_t>(i)] += kinv(i, j) * cone[static_cast<std::size_t>(j)];
            }
        }
        return e;
    }

    void check_dim(std::size_t n) const
    {
        if (n != static_cast<std::size_t>(rank_)) {
            throw dimension_error("exponent vector of length " + std::to_string(n) + " on a rank-" +
                                  std::to_string(rank_) + " lattice");
        }
    }

    friend bool operator==(const LatticeSpec& a, const LatticeSpec& b)
    {
        return a.rank_ == b.rank_ && a.k_ == b.k_;
    }

private:
    static std::vector<std::int64_t> integer_inverse(int r, const std::vector<std::int64_t>& m)
    {
        using Q = boost::rational<std::int64_t>;
        const auto n = static_cast<std::size_t>(r);
        std::vector<Q> a(n * 2 * n, Q(0));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                a[i * 2 * n + j] = Q(m[i * n + j]);
            }
            a[i * 2 * n + n + i] = Q(1);
        }
        Q det(1);
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t piv = col;
            while (piv < n && a[piv * 2 * n + col] == Q(0)) {
                ++piv;
            }
            if (piv == n) {
                throw dimension_error("lattice matrix is singular");
            }
            if (piv != col) {
                for (std::size_t j = 0; j < 2 * n; ++j) {
                    std::swap(a[piv * 2 * n + j], a[col * 2 * n + j]);
                }
                det = -det;
            }
            const Q p = a[col * 2 * n + col];
            det *= p;
            for (std::size_t j = 0; j < 2 * n; ++j) {
                a[col * 2 * n + j] /= p;
            }
            for (std::size_t i = 0; i < n; ++i) {
                if (i == col || a[i * 2 * n + col] == Q(0)) {
                    continue;
                }
                const Q f = a[i * 2 * n + col];
                for (std::size_t j = 0; j < 2 * n; ++j) {
                    a[i * 2 * n + j] -= f * a[col * 2 * n + j];
                }
            }
        }
        if (det != Q(1) && det != Q(-1)) {
            throw dimension_error("lattice matrix is not unimodular");
        }
        std::vector<std::int64_t> inv(n * n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                inv[i * n + j] = boost::rational_cast<std::int64_t>(a[i * 2 * n + n + j]);
            }
        }
        return inv;
    }

    int rank_;
    std::vector<std::int64_t> k_;
    std::vector<std::int64_t> kinv_;
    std::string name_;
};

struct ConeCoords {
    std::vector<std::int64_t> coords;
    bool in_cone = false;
    std::int64_t degree = 0;
};

inline ConeCoords cone_coords(const LatticeSpec& lattice, std::span<const std::int64_t> e)
{
    ConeCoords out;
    out.coords = lattice.to_cone(e);
    out.in_cone = std::all_of(out.coords.begin(), out.coords.end(), [](std::int64_t c) { return c >= 0; });
    for (auto c : out.coords) {
        out.degree += c;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Packed monomial keys
// ---------------------------------------------------------------------------

// Byte 7 holds the degree, bytes 6, 5, ... the cone coordinates in order. The
// numeric order of keys is therefore the canonical term order (degree first,
// then lexicographic in cone coordinates), and for in-cone monomials of total
// degree <= 255 key addition is monomial multiplication.
using Key = std::uint64_t;

namespace detail {

inline Key pack_coords(std::span<const std::int64_t> coords)
{
    std::int64_t deg = 0;
    Key k = 0;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        deg += coords[i];
        k |= static_cast<Key>(coords[i]) << (48 - 8 * i);
    }
    return k | (static_cast<Key>(deg) << 56);
}

inline int key_degree(Key k) noexcept { return static_cast<int>(k >> 56); }

inline int key_coord(Key k, int i) noexcept { return static_cast<int>((k >> (48 - 8 * i)) & 0xffu); }

inline std::vector<std::int64_t> unpack_coords(Key k, int rank)
{
    std::vector<std::int64_t> c(static_cast<std::size_t>(rank));
    for (int i = 0; i < rank; ++i) {
        c[static_cast<std::size_t>(i)] = key_coord(k, i);
    }
    return c;
}

/// k - m as a key, or false if some coordinate would go negative.
inline bool key_sub(Key k, Key m, int rank, Key& out) noexcept
{
    for (int i = 0; i < rank; ++i) {
        if (key_coord(k, i) < key_coord(m, i)) {
            return false;
        }
    }
    out = k - m;
    return true;
}

/// Dense ranking of all monomials of degree <= N in `rank` cone coordinates,
/// in canonical order.
class MonomialIndex {
public:
    MonomialIndex(int rank, int cutoff) : rank_(rank), cutoff_(cutoff)
    {
        const auto nr = static_cast<std::size_t>(rank);
        const auto nd = static_cast<std::size_t>(cutoff + 1);
        // comp_[s][r] = number of compositions of s into r nonnegative parts.
        comp_.assign(nd * (nr + 1), 0);
        for (std::size_t s = 0; s < nd; ++s) {
            comp_[s * (nr + 1)] = (s == 0) ? 1 : 0;
            for (std::size_t r = 1; r <= nr; ++r) {
                std::size_t total = 0;
                for (std::size_t v = 0; v <= s; ++v) {
                    total += comp_[(s - v) * (nr + 1) + (r - 1)];
                }
                comp_[s * (nr + 1) + r] = total;
            }
        }
        // less_[(i*nd + rem)*nd + c] = # compositions whose i-th part is < c,
        // given `rem` left for parts i..rank-1.
        less_.assign(nr * nd * nd, 0);
        for (std::size_t i = 0; i < nr; ++i) {
            for (std::size_t rem = 0; rem < nd; ++rem) {
                std::size_t acc = 0;
                for (std::size_t c = 0; c <= rem; ++c) {
                    less_[(i * nd + rem) * nd + c] = acc;
                    acc += comp_[(rem - c) * (nr + 1) + (nr - i - 1)];
                }
            }
        }
        below_.assign(nd + 1, 0);
        for (std::size_t d = 0; d < nd; ++d) {
            below_[d + 1] = below_[d] + comp_[d * (nr + 1) + nr];
        }
        keys_.reserve(below_[nd]);
        std::vector<std::int64_t> c(nr, 0);
        for (int d = 0; d <= cutoff; ++d) {
            enumerate(0, d, c);
        }
    }

    int rank() const noexcept { return rank_; }
    int cutoff() const noexcept { return cutoff_; }
    std::size_t size() const noexcept { return keys_.size(); }
    Key key(std::size_t idx) const noexcept { return keys_[idx]; }
    std::size_t degree_begin(int d) const noexcept { return below_[static_cast<std::size_t>(d)]; }

    std::size_t index(Key k) const noexcept
    {
        const auto nd = static_cast<std::size_t>(cutoff_ + 1);
        const auto d = static_cast<std::size_t>(key_degree(k));
        std::size_t idx = below_[d];
        std::size_t rem = d;
        for (int i = 0; i < rank_; ++i) {
            const auto c = static_cast<std::size_t>(key_coord(k, i));
            idx += less_[(static_cast<std::size_t>(i) * nd + rem) * nd + c];
            rem -= c;
        }
        return idx;
    }

private:
    void enumerate(int pos, std::int64_t rem, std::vector<std::int64_t>& c)
    {
        if (pos == rank_ - 1) {
            c[static_cast<std::size_t>(pos)] = rem;
            keys_.push_back(pack_coords(c));
            return;
        }
        for (std::int64_t v = 0; v <= rem; ++v) {
            c[static_cast<std::size_t>(pos)] = v;
            enumerate(pos + 1, rem - v, c);
        }
    }

    int rank_;
    int cutoff_;
    std::vector<std::size_t> comp_;
    std::vector<std::size_t> less_;
    std::vector<std::size_t> below_;
    std::vector<Key> keys_;
};

inline void check_cutoff(int n)
{
    if (n < 0 || n > kMaxCutoff) {
        throw truncation_error("cutoff must be in [0, " + std::to_string(kMaxCutoff) + "], got " +
                               std::to_string(n));
    }
}

} // namespace detail

// ---------------------------------------------------------------------------
// GradedSeries
// ---------------------------------------------------------------------------

struct Term {
    Key key;
    Integer coeff;
};

class GradedSeries {
public:
    GradedSeries(LatticeSpec lattice, int cutoff) : lattice_(std::move(lattice)), cutoff_(cutoff)
    {
        detail::check_cutoff(cutoff);
    }

    static GradedSeries one(const LatticeSpec& lattice, int cutoff)
    {
        return monomial(lattice, cutoff, ExpVec(static_cast<std::size_t>(lattice.rank()), 0), 1);
    }

    /// c * m; empty if deg m > cutoff. Throws support_error if m is outside the cone.
    static GradedSeries monomial(const LatticeSpec& lattice, int cutoff, const ExpVec& e, Integer c)
    {
        GradedSeries s(lattice, cutoff);
        if (s.within_cutoff(e) && c != 0) {
            s.terms_.push_back({s.key_of(e), std::move(c)});
        }
        return s;
    }

    /// Builds from (exponent, coefficient) pairs; duplicates are summed, zeros and
    /// monomials above the cutoff are dropped, out-of-cone monomials rejected.
    static GradedSeries from_terms(const LatticeSpec& lattice, int cutoff,
                                   const std::vector<std::pair<ExpVec, Integer>>& pairs)
    {
        GradedSeries s(lattice, cutoff);
        std::vector<Term> raw;
        raw.reserve(pairs.size());
        for (const auto& [e, c] : pairs) {
            if (s.within_cutoff(e)) {
                raw.push_back({s.key_of(e), c});
            }
        }
        s.assign_unsorted(std::move(raw));
        return s;
    }

    const LatticeSpec& lattice() const noexcept { return lattice_; }
    int cutoff() const noexcept { return cutoff_; }
    std::span<const Term> terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    ExpVec exponents(Key k) const { return lattice_.to_raw(detail::unpack_coords(k, lattice_.rank())); }
    std::vector<std::int64_t> cone_of(Key k) const { return detail::unpack_coords(k, lattice_.rank()); }

    /// Packed key of an in-cone monomial of degree <= cutoff.
    Key key_of(std::span<const std::int64_t> e) const
    {
        const auto cc = cone_coords(lattice_, e);
        if (!cc.in_cone) {
            throw support_error("monomial outside the standard cone");
        }
        if (cc.degree > cutoff_) {
            throw truncation_error("monomial of degree " + std::to_string(cc.degree) + " beyond truncation " +
                                   std::to_string(cutoff_));
        }
        return detail::pack_coords(cc.coords);
    }

    /// True for in-cone monomials of degree <= cutoff; throws support_error for
    /// out-of-cone ones.
    bool within_cutoff(std::span<const std::int64_t> e) const
    {
        const auto cc = cone_coords(lattice_, e);
        if (!cc.in_cone) {
            throw support_error("monomial outside the standard cone");
        }
        return cc.degree <= cutoff_;
    }

    /// Exact coefficient; out-of-cone monomials have coefficient 0.
    Integer coeff(std::span<const std::int64_t> e) const
    {
        const auto cc = cone_coords(lattice_, e);
        if (!cc.in_cone) {
            return 0;
        }
        if (cc.degree > cutoff_) {
            throw truncation_error("coefficient of degree " + std::to_string(cc.degree) +
                                   " requested beyond truncation " + std::to_string(cutoff_));
        }
        return coeff_at(detail::pack_coords(cc.coords));
    }

    Integer coeff_at(Key k) const
    {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                                   [](const Term& t, Key key) { return t.key < key; });
        if (it != terms_.end() && it->key == k) {
            return it->coeff;
        }
        return 0;
    }

    /// Terms of degree exactly d, canonical order.
    std::vector<std::pair<ExpVec, Integer>> slice(int d) const
    {
        check_within(d);
        std::vector<std::pair<ExpVec, Integer>> out;
        for (const auto& t : terms_) {
            if (detail::key_degree(t.key) == d) {
                out.emplace_back(exponents(t.key), t.coeff);
            }
        }
        return out;
    }

    std::vector<ExpVec> support() const
    {
        std::vector<ExpVec> out;
        out.reserve(terms_.size());
        for (const auto& t : terms_) {
            out.push_back(exponents(t.key));
        }
        return out;
    }

    /// Restriction to degree <= m (m <= cutoff).
    GradedSeries truncated(int m) const
    {
        check_within(m);
        GradedSeries s(lattice_, m);
        for (const auto& t : terms_) {
            if (detail::key_degree(t.key) <= m) {
                s.terms_.push_back(t);
            }
        }
        return s;
    }

    /// Lowest degree carrying a nonzero coefficient, or -1 for the zero series.
    int min_degree() const noexcept { return terms_.empty() ? -1 : detail::key_degree(terms_.front().key); }

    void check_within(int d) const
    {
        if (d < 0 || d > cutoff_) {
            throw truncation_error("degree " + std::to_string(d) + " beyond truncation " +
                                   std::to_string(cutoff_));
        }
    }

    friend bool operator==(const GradedSeries& a, const GradedSeries& b)
    {
        if (!(a.lattice_ == b.lattice_) || a.cutoff_ != b.cutoff_ || a.terms_.size() != b.terms_.size()) {
            return false;
        }
        for (std::size_t i = 0; i < a.terms_.size(); ++i) {
            if (a.terms_[i].key != b.terms_[i].key || a.terms_[i].coeff != b.terms_[i].coeff) {
                return false;
            }
        }
        return true;
    }

    /// Internal constructor path: takes terms already sorted, unique and nonzero.
    static GradedSeries from_sorted(LatticeSpec lattice, int cutoff, std::vector<Term> terms)
    {
        GradedSeries s(std::move(lattice), cutoff);
        s.terms_ = std::move(terms);
        return s;
    }

private:
    void assign_unsorted(std::vector<Term> raw)
    {
        std::sort(raw.begin(), raw.end(), [](const Term& a, const Term& b) { return a.key < b.key; });
        terms_.clear();
        for (auto& t : raw) {
            if (!terms_.empty() && terms_.back().key == t.key) {
                terms_.back().coeff += t.coeff;
            } else {
                terms_.push_back(std::move(t));
            }
        }
        std::erase_if(terms_, [](const Term& t) { return t.coeff == 0; });
    }

    LatticeSpec lattice_;
    int cutoff_;
    std::vector<Term> terms_;
};

inline void require_same_lattice(const GradedSeries& a, const GradedSeries& b)
{
    if (!(a.lattice() == b.lattice())) {
        throw dimension_error("series live on different lattices (" + a.lattice().name() + " vs " +
                              b.lattice().name() + ")");
    }
}

// ---------------------------------------------------------------------------
// Dense workspace
// ---------------------------------------------------------------------------

/// Dense coefficient array over every monomial of degree <= N. Used as the
/// accumulator for sums, products and in-place binomial factor updates.
class DenseSeries {
public:
    DenseSeries(const LatticeSpec& lattice, int cutoff)
        : lattice_(lattice), index_(lattice.rank(), cutoff), coeff_(index_.size())
    {
        detail::check_cutoff(cutoff);
    }

    explicit DenseSeries(const GradedSeries& s) : DenseSeries(s.lattice(), s.cutoff()) { add(s, 1); }

    int cutoff() const noexcept { return index_.cutoff(); }
    const LatticeSpec& lattice() const noexcept { return lattice_; }

    void add(const GradedSeries& s, const Integer& scale)
    {
        if (!(s.lattice() == lattice_)) {
            throw dimension_error("lattice mismatch in accumulation");
        }
        for (const auto& t : s.terms()) {
            if (detail::key_degree(t.key) <= cutoff()) {
                coeff_[index_.index(t.key)] += scale * t.coeff;
            }
        }
    }

    void add_at(Key k, const Integer& c) { coeff_[index_.index(k)] += c; }

    /// this *= (1 + sign*m)^power, m an in-cone monomial of positive degree.
    void mul_binomial(Key m, int sign, int power)
    {
        const int dm = detail::key_degree(m);
        if (dm < 1) {
            throw support_error("binomial factor needs a monomial of positive degree");
        }
        if (dm > cutoff()) {
            return;
        }
        const int r = lattice_.rank();
        for (int rep = 0; rep < std::abs(power); ++rep) {
            if (power > 0) {
                // descending: source k-m is still unmodified
                for (std::size_t i = index_.size(); i-- > index_.degree_begin(dm);) {
                    Key src;
                    if (detail::key_sub(index_.key(i), m, r, src)) {
                        const auto& c = coeff_[index_.index(src)];
                        if (c != 0) {
                            if (sign > 0) {
                                coeff_[i] += c;
                            } else {
                                coeff_[i] -= c;
                            }
                        }
                    }
                }
            } else {
                // ascending: g[k] = f[k] - sign*g[k-m]
                for (std::size_t i = index_.degree_begin(dm); i < index_.size(); ++i) {
                    Key src;
                    if (detail::key_sub(index_.key(i), m, r, src)) {
                        const auto& c = coeff_[index_.index(src)];
                        if (c != 0) {
                            if (sign > 0) {
                                coeff_[i] -= c;
                            } else {
                                coeff_[i] += c;
                            }
                        }
                    }
                }
            }
        }
    }

    GradedSeries to_series() const
    {
        std::vector<Term> terms;
        for (std::size_t i = 0; i < coeff_.size(); ++i) {
            if (coeff_[i] != 0) {
                terms.push_back({index_.key(i), coeff_[i]});
            }
        }
        return GradedSeries::from_sorted(lattice_, cutoff(), std::move(terms));
    }

    const detail::MonomialIndex& index() const noexcept { return index_; }
    std::vector<Integer>& raw() noexcept { return coeff_; }

private:
    LatticeSpec lattice_;
    detail::MonomialIndex index_;
    std::vector<Integer> coeff_;
};

// ---------------------------------------------------------------------------
// Ring operations
// ---------------------------------------------------------------------------

inline GradedSeries linear_combine(const std::vector<std::pair<Integer, const GradedSeries*>>& pairs)
{
    if (pairs.empty()) {
        throw dimension_error("linear_combine needs at least one series");
    }
    const GradedSeries& first = *pairs.front().second;
    int cutoff = first.cutoff();
    for (const auto& [c, s] : pairs) {
        require_same_lattice(first, *s);
        cutoff = std::min(cutoff, s->cutoff());
    }
    DenseSeries acc(first.lattice(), cutoff);
    for (const auto& [c, s] : pairs) {
        acc.add(*s, c);
    }
    return acc.to_series();
}

inline GradedSeries linear_combine(std::initializer_list<std::pair<Integer, std::reference_wrapper<const GradedSeries>>> pairs)
{
    std::vector<std::pair<Integer, const GradedSeries*>> v;
    for (const auto& [c, s] : pairs) {
        v.emplace_back(c, &s.get());
    }
    return linear_combine(v);
}

inline GradedSeries operator+(const GradedSeries& a, const GradedSeries& b)
{
    return linear_combine({{1, std::cref(a)}, {1, std::cref(b)}});
}

inline GradedSeries operator-(const GradedSeries& a, const GradedSeries& b)
{
    return linear_combine({{1, std::cref(a)}, {-1, std::cref(b)}});
}

inline GradedSeries mul(const GradedSeries& a, const GradedSeries& b)
{
    require_same_lattice(a, b);
    const int n = std::min(a.cutoff(), b.cutoff());
    DenseSeries acc(a.lattice(), n);
    auto ta = a.terms();
    auto tb = b.terms();
    // Terms are degree-sorted; stop each inner scan once the degree budget is spent.
    for (const auto& x : ta) {
        const int dx = detail::key_degree(x.key);
        if (dx > n) {
            break;
        }
        const int budget = n - dx;
        for (const auto& y : tb) {
            if (detail::key_degree(y.key) > budget) {
                break;
            }
            acc.raw()[acc.index().index(x.key + y.key)] += x.coeff * y.coeff;
        }
    }
    return acc.to_series();
}

inline GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) { return mul(a, b); }

/// Inverse of a series whose constant term is +1 or -1, solved degree slice by
/// degree slice.
inline GradedSeries invert(const GradedSeries& s)
{
    const int n = s.cutoff();
    const Integer c0 = s.is_zero() || s.min_degree() > 0 ? Integer(0) : s.terms().front().coeff;
    if (c0 != 1 && c0 != -1) {
        throw not_invertible_error("not invertible in cone-supported ring: constant term is " + c0.str());
    }
    DenseSeries g(s.lattice(), n);
    const auto& idx = g.index();
    auto& coeff = g.raw();
    coeff[0] = c0;
    auto st = s.terms();
    for (int d = 1; d <= n; ++d) {
        // contributions s_k * g_{d-k} for k >= 1 land in slice d
        for (const auto& t : st.subspan(1)) {
            const int k = detail::key_degree(t.key);
            if (k > d) {
                break;
            }
            const std::size_t lo = idx.degree_begin(d - k);
            const std::size_t hi = idx.degree_begin(d - k + 1);
            for (std::size_t j = lo; j < hi; ++j) {
                if (coeff[j] != 0) {
                    coeff[idx.index(t.key + idx.key(j))] += t.coeff * coeff[j];
                }
            }
        }
        // g_d = -c0 * (accumulated)
        const std::size_t lo = idx.degree_begin(d);
        const std::size_t hi = idx.degree_begin(d + 1);
        for (std::size_t j = lo; j < hi; ++j) {
            if (coeff[j] != 0) {
                coeff[j] = c0 == 1 ? Integer(-coeff[j]) : coeff[j];
            }
        }
    }
    return g.to_series();
}

/// Truncation of prod_{n>=0} (1 + sign * step^n * head).
inline GradedSeries pochhammer(const LatticeSpec& lattice, const ExpVec& head, const ExpVec& step, int sign,
                               int cutoff)
{
    detail::check_cutoff(cutoff);
    const auto h = cone_coords(lattice, head);
    const auto st = cone_coords(lattice, step);
    if (!h.in_cone || h.degree < 1 || !st.in_cone || st.degree < 1) {
        throw support_error("pochhammer head and step must be in-cone monomials of degree >= 1");
    }
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("pochhammer sign must be +1 or -1");
    }
    DenseSeries acc(lattice, cutoff);
    acc.add_at(0, 1);
    std::vector<std::int64_t> c = h.coords;
    for (std::int64_t deg = h.degree; deg <= cutoff; deg += st.degree) {
        acc.mul_binomial(detail::pack_coords(c), sign, 1);
        for (std::size_t i = 0; i < c.size(); ++i) {
            c[i] += st.coords[i];
        }
    }
    return acc.to_series();
}

/// s * (1 + sign*m)^power, with m an in-cone monomial of positive degree.
inline GradedSeries mul_binomial(const GradedSeries& s, const ExpVec& m, int sign, int power)
{
    DenseSeries acc(s);
    acc.mul_binomial(s.key_of(m), sign, power);
    return acc.to_series();
}

inline bool equal_up_to(const GradedSeries& a, const GradedSeries& b, int d)
{
    require_same_lattice(a, b);
    a.check_within(d);
    b.check_within(d);
    auto ta = a.terms();
    auto tb = b.terms();
    std::size_t i = 0;
    std::size_t j = 0;
    while (true) {
        const bool ea = i == ta.size() || detail::key_degree(ta[i].key) > d;
        const bool eb = j == tb.size() || detail::key_degree(tb[j].key) > d;
        if (ea || eb) {
            return ea && eb;
        }
        if (ta[i].key != tb[j].key || ta[i].coeff != tb[j].coeff) {
            return false;
        }
        ++i;
        ++j;
    }
}

// ---------------------------------------------------------------------------
// Factored expansions
// ---------------------------------------------------------------------------

/// One factor (1 + sign*m)^power of a factored expression.
struct BinomialFactor {
    ExpVec monomial;
    int sign = 1;
    int power = -1;
};

/// coeff * lead * prod_j (1 + sign_j m_j)^power_j, expanded into the cone.
///
/// Factors whose monomial has negative degree are rewritten as
/// (1 + s m)^p = s^p m^p (1 + s m^-1)^p before expansion. A factor of degree 0,
/// or a rewritten expression that leaves the cone, is a support_error.
class FactoredTerm {
public:
    FactoredTerm(const LatticeSpec& lattice, Integer coeff, ExpVec lead, std::vector<BinomialFactor> factors)
        : lattice_(lattice), coeff_(std::move(coeff)), lead_(std::move(lead)), factors_(std::move(factors))
    {
        lattice_.check_dim(lead_.size());
        for (auto& f : factors_) {
            lattice_.check_dim(f.monomial.size());
            if (f.sign != 1 && f.sign != -1) {
                throw std::invalid_argument("binomial sign must be +1 or -1");
            }
            const auto cc = cone_coords(lattice_, f.monomial);
            if (cc.degree == 0) {
                throw support_error("binomial factor with a degree-0 monomial has no cone expansion");
            }
            if (cc.degree < 0) {
                if (f.sign < 0 && (f.power % 2 != 0)) {
                    coeff_ = -coeff_;
                }
                for (std::size_t i = 0; i < lead_.size(); ++i) {
                    lead_[i] += f.power * f.monomial[i];
                    f.monomial[i] = -f.monomial[i];
                }
            }
        }
        const auto lc = cone_coords(lattice_, lead_);
        lead_degree_ = lc.degree;
        lead_in_cone_ = lc.in_cone;
        for (const auto& f : factors_) {
            if (!cone_coords(lattice_, f.monomial).in_cone) {
                factors_in_cone_ = false;
            }
        }
    }

    /// Degree of the leading monomial after rewriting: the lowest degree the
    /// expansion can reach.
    std::int64_t min_degree() const noexcept { return lead_degree_; }
    bool in_cone() const noexcept { return lead_in_cone_ && factors_in_cone_; }
    const ExpVec& lead() const noexcept { return lead_; }
    const Integer& coeff() const noexcept { return coeff_; }
    const std::vector<BinomialFactor>& factors() const noexcept { return factors_; }

    /// Adds the expansion into `acc`.
    void expand_into(DenseSeries& acc) const
    {
        check_support();
        if (lead_degree_ > acc.cutoff()) {
            return;
        }
        DenseSeries local(lattice_, acc.cutoff());
        local.add_at(detail::pack_coords(cone_coords(lattice_, lead_).coords), coeff_);
        for (const auto& f : factors_) {
            local.mul_binomial(detail::pack_coords(cone_coords(lattice_, f.monomial).coords), f.sign, f.power);
        }
        auto& dst = acc.raw();
        const auto& src = local.raw();
        for (std::size_t i = 0; i < src.size(); ++i) {
            if (src[i] != 0) {
                dst[i] += src[i];
            }
        }
    }

    GradedSeries expand(int cutoff) const
    {
        DenseSeries acc(lattice_, cutoff);
        expand_into(acc);
        return acc.to_series();
    }

private:
    void check_support() const
    {
        if (!in_cone()) {
            throw support_error("support violation: expansion leaves the standard cone");
        }
    }

    LatticeSpec lattice_;
    Integer coeff_;
    ExpVec lead_;
    std::vector<BinomialFactor> factors_;
    std::int64_t lead_degree_ = 0;
    bool lead_in_cone_ = false;
    bool factors_in_cone_ = true;
};

} // namespace superdenom

#endif // SUPERDENOM_SERIES_HPP
