#pragma once

// Fractal strings: length data, geometric realizations, and the real
// dimension quantities computed from them.

#include "fzeta/core.hpp"
#include "fzeta/defaults.hpp"
#include "fzeta/interval.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace fzeta {

/// One-gap lattice family: l_n = (1 - m r) r^(n-1) with multiplicity m^(n-1).
/// The Cantor string is r = 1/3, m = 2.
class LatticeStringSpec {
public:
    LatticeStringSpec(Rational ratio, unsigned multiplier)
        : ratio_(std::move(ratio)), multiplier_(multiplier)
    {
        if (ratio_ <= 0 || ratio_ >= 1) throw InvalidArgument("lattice ratio must lie in (0,1)");
        if (multiplier_ < 1) throw InvalidArgument("lattice multiplier must be >= 1");
        if (ratio_ * multiplier_ >= 1) throw InvalidArgument("m·r ≥ 1: no gap, not a fractal string of total length 1");
    }

    static LatticeStringSpec cantor() { return {Rational(1, 3), 2}; }

    const Rational& ratio() const noexcept { return ratio_; }
    unsigned multiplier() const noexcept { return multiplier_; }

    Rational first_length() const { return 1 - ratio_ * multiplier_; }
    Rational length(unsigned n) const { return first_length() * pow(ratio_, n - 1); }
    BigInt multiplicity(unsigned n) const { return pow(BigInt(multiplier_), n - 1); }

    /// log(1/r)
    double log_inverse_ratio() const { return -log_of(ratio_); }
    /// log m / log(1/r); zero when m = 1.
    double dimension() const { return std::log(double(multiplier_)) / log_inverse_ratio(); }
    /// Oscillatory period 2π / log(1/r).
    double period() const { return 2 * std::numbers::pi / log_inverse_ratio(); }

    bool is_cantor() const { return ratio_ == Rational(1, 3) && multiplier_ == 2; }

    friend bool operator==(const LatticeStringSpec&, const LatticeStringSpec&) = default;

private:
    Rational ratio_;
    unsigned multiplier_;
};

struct LengthEntry {
    Rational length;
    BigInt multiplicity;

    friend bool operator==(const LengthEntry&, const LengthEntry&) = default;
};

/// Distinct lengths l_1 > l_2 > ... with multiplicities. A sequence built from
/// a lattice rule is lazily extensible: entry(n) is defined for every n >= 1
/// even past the materialized prefix, and the total length is the full sum 1.
class LengthSequence {
public:
    /// Finite raw data; total length is the exact sum.
    explicit LengthSequence(std::vector<LengthEntry> entries)
        : entries_(std::move(entries))
    {
        validate_entries();
        for (const auto& e : entries_) total_ += e.length * e.multiplicity;
        if (total_ <= 0) throw InvalidArgument("length sequence must have positive total length");
    }

    LengthSequence(const LatticeStringSpec& rule, unsigned materialized)
        : rule_(rule), total_(1)
    {
        entries_.reserve(materialized);
        for (unsigned n = 1; n <= materialized; ++n)
            entries_.push_back({rule.length(n), rule.multiplicity(n)});
        validate_entries();
    }

    const std::vector<LengthEntry>& entries() const noexcept { return entries_; }
    std::size_t materialized() const noexcept { return entries_.size(); }
    const Rational& total_length() const noexcept { return total_; }
    const std::optional<LatticeStringSpec>& rule() const noexcept { return rule_; }

    /// Whether entry(n) is available (always, for rule-backed sequences).
    bool has_entry(std::size_t n) const { return n >= 1 && (rule_ || n <= entries_.size()); }

    /// 1-based entry.
    LengthEntry entry(std::size_t n) const
    {
        if (n >= 1 && n <= entries_.size()) return entries_[n - 1];
        if (rule_ && n >= 1)
            return {rule_->length(static_cast<unsigned>(n)), rule_->multiplicity(static_cast<unsigned>(n))};
        throw InvalidArgument("length index " + std::to_string(n) + " beyond the available entries");
    }

    /// Exact sum of m_n l_n over n <= count.
    Rational partial_sum(std::size_t count) const
    {
        Rational sum = 0;
        for (std::size_t n = 1; n <= count; ++n) {
            const auto e = entry(n);
            sum += e.length * e.multiplicity;
        }
        return sum;
    }

    friend bool operator==(const LengthSequence& a, const LengthSequence& b)
    {
        return a.entries_ == b.entries_ && a.total_ == b.total_ && a.rule_ == b.rule_;
    }

private:
    void validate_entries() const
    {
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            const auto& e = entries_[i];
            if (e.length <= 0 || e.length > 1) throw InvalidArgument("lengths must lie in (0,1]");
            if (e.multiplicity < 1) throw InvalidArgument("multiplicities must be positive");
            if (i > 0 && !(entries_[i - 1].length > e.length))
                throw InvalidArgument("lengths must be strictly decreasing");
        }
    }

    std::vector<LengthEntry> entries_;
    std::optional<LatticeStringSpec> rule_;
    Rational total_ = 0;
};

inline LengthSequence build_lattice_string(const LatticeStringSpec& spec,
                                           unsigned materialized = defaults::truncation_depth)
{
    return LengthSequence(spec, materialized);
}

inline LengthSequence build_lattice_string(const Rational& r, unsigned m,
                                           unsigned materialized = defaults::truncation_depth)
{
    return LengthSequence(LatticeStringSpec(r, m), materialized);
}

// ---------------------------------------------------------------------------
// Geometric strings

/// Recursive rule that generated a truncated string: the three arrangements of
/// the Cantor-string lengths, or none for literal finite data.
enum class CantorLayout { none, omega1, omega2, omega3 };

inline const char* layout_name(CantorLayout v)
{
    switch (v) {
    case CantorLayout::omega1: return "omega1";
    case CantorLayout::omega2: return "omega2";
    case CantorLayout::omega3: return "omega3";
    case CantorLayout::none: break;
    }
    return "none";
}

struct OpenInterval {
    Rational a;
    Rational b;

    Rational length() const { return b - a; }
    friend bool operator==(const OpenInterval&, const OpenInterval&) = default;
};

/// Disjoint open subintervals of [0,1], sorted left to right.
class GeometricString {
public:
    explicit GeometricString(std::vector<OpenInterval> intervals, unsigned depth = 0,
                             CantorLayout layout = CantorLayout::none)
        : intervals_(std::move(intervals)), depth_(depth), layout_(layout)
    {
        std::sort(intervals_.begin(), intervals_.end(),
                  [](const OpenInterval& x, const OpenInterval& y) { return x.a < y.a; });
        for (std::size_t i = 0; i < intervals_.size(); ++i) {
            const auto& iv = intervals_[i];
            if (!(iv.a >= 0 && iv.a < iv.b && iv.b <= 1))
                throw InvalidArgument("string intervals must satisfy 0 <= a < b <= 1");
            if (i > 0 && intervals_[i - 1].b > iv.a)
                throw InvalidArgument("string intervals must be pairwise disjoint");
        }
    }

    const std::vector<OpenInterval>& intervals() const noexcept { return intervals_; }
    unsigned depth() const noexcept { return depth_; }
    CantorLayout layout() const noexcept { return layout_; }

    Rational smallest_length() const
    {
        if (intervals_.empty()) return 1;
        Rational best = intervals_.front().length();
        for (const auto& iv : intervals_) best = std::min(best, iv.length());
        return best;
    }

    /// Multiset of interval lengths as a finite length sequence.
    LengthSequence length_sequence() const
    {
        std::map<Rational, BigInt, std::greater<>> grouped;
        for (const auto& iv : intervals_) grouped[iv.length()] += 1;
        std::vector<LengthEntry> entries;
        for (auto& [l, m] : grouped) entries.push_back({l, m});
        return LengthSequence(std::move(entries));
    }

    /// Complement of the string in [0,1]: closed pieces, possibly single points.
    std::vector<Interval> boundary_pieces() const
    {
        std::vector<Interval> open;
        open.reserve(intervals_.size());
        for (const auto& iv : intervals_) open.push_back(Interval::open(iv.a, iv.b));
        return complement_in(open, 0, 1);
    }

private:
    std::vector<OpenInterval> intervals_;
    unsigned depth_;
    CantorLayout layout_;
};

namespace detail {

/// Closed cells left after `generation` middle-third removals.
inline std::vector<Interval> cantor_cells(unsigned generation, const Rational& lo, const Rational& hi)
{
    std::vector<Interval> cells{Interval::closed(lo, hi)};
    for (unsigned g = 0; g < generation; ++g) {
        std::vector<Interval> next;
        next.reserve(cells.size() * 2);
        for (const auto& c : cells) {
            const Rational third = c.length() / 3;
            next.push_back(Interval::closed(c.lo, c.lo + third));
            next.push_back(Interval::closed(c.hi - third, c.hi));
        }
        cells = std::move(next);
    }
    return cells;
}

inline Rational cantor_length(unsigned n) { return pow(Rational(1, 3), n); }

/// Left end of the Cantor-like piece of the third layout; the packed block of
/// leftover lengths fills [0, omega3_split).
inline Rational omega3_split() { return Rational(3, 7); }

/// Number of length-3^-k intervals in the packed block of the third layout:
/// all 2^(k-1) Cantor intervals minus the 2^(ceil(k/2)-1) used in pairs.
inline BigInt omega3_block_count(unsigned k)
{
    return pow(BigInt(2), k - 1) - pow(BigInt(2), (k + 1) / 2 - 1);
}

/// Closed cells of the ratio-1/9 two-piece set on [3/7, 1] after `level` steps.
inline std::vector<Interval> omega3_cells(unsigned level)
{
    std::vector<Interval> cells{Interval::closed(omega3_split(), 1)};
    for (unsigned g = 0; g < level; ++g) {
        std::vector<Interval> next;
        next.reserve(cells.size() * 2);
        for (const auto& c : cells) {
            const Rational ninth = c.length() / 9;
            next.push_back(Interval::closed(c.lo, c.lo + ninth));
            next.push_back(Interval::closed(c.hi - ninth, c.hi));
        }
        cells = std::move(next);
    }
    return cells;
}

/// Packs lengths 3^-1 .. 3^-depth (count(k) copies each) from `start` in
/// decreasing order. Returns the intervals and the right end of the packing.
template <class CountFn>
std::pair<std::vector<OpenInterval>, Rational> packed_block(unsigned depth, const Rational& start, CountFn count)
{
    std::vector<OpenInterval> out;
    Rational cursor = start;
    for (unsigned k = 1; k <= depth; ++k) {
        const Rational l = cantor_length(k);
        for (BigInt c = count(k); c > 0; --c) {
            out.push_back({cursor, cursor + l});
            cursor += l;
        }
    }
    return {std::move(out), cursor};
}

} // namespace detail

/// Truncation at `depth` generations of one of three strings sharing the
/// Cantor-string lengths:
///   omega1: the standard middle-thirds Cantor string;
///   omega2: lengths packed end to end in decreasing order from 0, so the
///           endpoints accumulate only at 1;
///   omega3: a packed block of leftover lengths on [0, 3/7) followed by the
///           two-piece ratio-1/9 Cantor-like set on [3/7, 1], each of whose
///           level-j gaps (length 4·9^-j) holds an adjacent pair of intervals
///           of lengths 3^-(2j-1) and 3^-2j.
inline GeometricString realize_cantor_configuration(CantorLayout variant, unsigned depth)
{
    if (depth < 1) throw InvalidArgument("depth must be >= 1");
    std::vector<OpenInterval> out;
    switch (variant) {
    case CantorLayout::omega1: {
        std::vector<Interval> cells{Interval::closed(0, 1)};
        for (unsigned g = 0; g < depth; ++g) {
            std::vector<Interval> next;
            for (const auto& c : cells) {
                const Rational third = c.length() / 3;
                out.push_back({c.lo + third, c.hi - third});
                next.push_back(Interval::closed(c.lo, c.lo + third));
                next.push_back(Interval::closed(c.hi - third, c.hi));
            }
            cells = std::move(next);
        }
        break;
    }
    case CantorLayout::omega2: {
        out = detail::packed_block(depth, 0, [](unsigned k) { return pow(BigInt(2), k - 1); }).first;
        break;
    }
    case CantorLayout::omega3: {
        out = detail::packed_block(depth, 0, detail::omega3_block_count).first;
        std::vector<Interval> cells{Interval::closed(detail::omega3_split(), 1)};
        for (unsigned j = 1; 2 * j - 1 <= depth; ++j) {
            std::vector<Interval> next;
            for (const auto& c : cells) {
                const Rational ninth = c.length() / 9;
                const Rational gap_lo = c.lo + ninth;
                const Rational split = gap_lo + detail::cantor_length(2 * j - 1);
                out.push_back({gap_lo, split});
                if (2 * j <= depth) out.push_back({split, c.hi - ninth});
                next.push_back(Interval::closed(c.lo, gap_lo));
                next.push_back(Interval::closed(c.hi - ninth, c.hi));
            }
            cells = std::move(next);
        }
        break;
    }
    case CantorLayout::none:
        throw InvalidArgument("a layout variant is required");
    }
    return GeometricString(std::move(out), depth, variant);
}

// ---------------------------------------------------------------------------
// Dimensions

struct DimensionEstimate {
    double value = 0;
    bool approximate = false; ///< true for raw data: an estimate, never exact
    double tolerance = 0;
};

/// Abscissa of convergence of Σ m_n l_n^σ by bisection on [0,1].
///
/// With a lattice rule attached the convergence test is the exact ratio test
/// m r^σ < 1 on the closed-form tail. Raw finite data always converges, so the
/// test instead compares the contributions of the two halves of the data: the
/// partial sums stop growing once the later half weighs less than the earlier.
inline DimensionEstimate minkowski_dimension_from_lengths(const LengthSequence& ls)
{
    auto bisect = [](auto converges, double tol) {
        double lo = 0, hi = 1;
        if (converges(lo)) return 0.0;
        while (hi - lo > tol) {
            const double mid = 0.5 * (lo + hi);
            (converges(mid) ? hi : lo) = mid;
        }
        return 0.5 * (lo + hi);
    };

    if (const auto& rule = ls.rule()) {
        const double log_m = std::log(double(rule->multiplier()));
        const double log_r = log_of(rule->ratio());
        const double tol = defaults::lattice_abscissa_tolerance;
        return {bisect([&](double s) { return log_m + s * log_r < 0; }, tol), false, tol};
    }

    const auto& entries = ls.entries();
    const double tol = defaults::raw_abscissa_tolerance;
    if (entries.size() < 2) return {0.0, true, tol};

    std::vector<double> log_m, log_l;
    for (const auto& e : entries) {
        log_m.push_back(log_of(e.multiplicity));
        log_l.push_back(log_of(e.length));
    }
    const std::size_t half = entries.size() / 2;
    auto converges = [&](double s) {
        double early = 0, late = 0;
        for (std::size_t i = 0; i < half; ++i) early += std::exp(log_m[i] + s * log_l[i]);
        for (std::size_t i = entries.size() - half; i < entries.size(); ++i)
            late += std::exp(log_m[i] + s * log_l[i]);
        return late < early;
    };
    return {bisect(converges, tol), true, tol};
}

struct BoxCountEstimate {
    std::vector<std::pair<Rational, BigInt>> counts; ///< (ε, N_ε), ε decreasing
    double slope_estimate = 0;
};

/// Smallest number of closed intervals of length ε covering the pieces
/// (sorted, disjoint, closed). Greedy left-to-right covering is optimal on the line.
inline BigInt minimal_cover_count(const std::vector<Interval>& pieces, const Rational& eps)
{
    BigInt count = 0;
    std::optional<Rational> covered_to;
    for (const auto& p : pieces) {
        if (!covered_to || p.lo > *covered_to) {
            covered_to = p.lo + eps;
            ++count;
        }
        if (p.hi > *covered_to) {
            const Rational need = (p.hi - *covered_to) / eps;
            BigInt k = numerator(need) / denominator(need);
            if (Rational(k) < need) ++k;
            count += k;
            *covered_to += eps * Rational(k);
        }
    }
    return count;
}

/// Box-counting estimate of the boundary (complement of the string in [0,1]).
/// For strings truncated from a recursive rule, scales finer than the smallest
/// kept interval are rejected: they would measure the truncation.
inline BoxCountEstimate box_counting_dimension(const GeometricString& gs, const std::vector<Rational>& eps_grid)
{
    if (eps_grid.empty()) throw InvalidArgument("empty scale grid");
    for (std::size_t i = 0; i < eps_grid.size(); ++i) {
        if (eps_grid[i] <= 0) throw InvalidArgument("scales must be positive");
        if (i > 0 && !(eps_grid[i] < eps_grid[i - 1])) throw InvalidArgument("scale grid must be strictly decreasing");
    }
    if (gs.layout() != CantorLayout::none && eps_grid.back() < gs.smallest_length())
        throw InvalidArgument("scale below the truncation resolution of the string");

    const auto pieces = gs.boundary_pieces();
    BoxCountEstimate out;
    std::vector<double> xs, ys;
    for (const auto& eps : eps_grid) {
        auto n = minimal_cover_count(pieces, eps);
        xs.push_back(-log_of(eps));
        ys.push_back(log_of(n));
        out.counts.emplace_back(eps, std::move(n));
    }
    if (xs.size() >= 2) {
        const double n = double(xs.size());
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            sx += xs[i];
            sy += ys[i];
            sxx += xs[i] * xs[i];
            sxy += xs[i] * ys[i];
        }
        const double denom = n * sxx - sx * sx;
        out.slope_estimate = denom == 0 ? 0 : (n * sxy - sx * sy) / denom;
    }
    return out;
}

} // namespace fzeta
