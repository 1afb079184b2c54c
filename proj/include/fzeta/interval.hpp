#pragma once

#include "fzeta/core.hpp"

#include <algorithm>
#include <vector>

namespace fzeta {

enum class IntervalKind { closed, open, half_open };

/// Interval of the real line with exact rational endpoints. Each end is
/// independently open or closed; a degenerate closed interval is a point.
struct Interval {
    Rational lo;
    Rational hi;
    bool lo_closed = true;
    bool hi_closed = true;

    static Interval closed(Rational a, Rational b) { return {std::move(a), std::move(b), true, true}; }
    static Interval open(Rational a, Rational b) { return {std::move(a), std::move(b), false, false}; }

    Rational length() const { return hi - lo; }

    bool empty() const
    {
        return hi < lo || (hi == lo && !(lo_closed && hi_closed));
    }

    IntervalKind kind() const
    {
        if (lo_closed && hi_closed) return IntervalKind::closed;
        if (!lo_closed && !hi_closed) return IntervalKind::open;
        return IntervalKind::half_open;
    }

    bool contains(const Rational& x) const
    {
        const bool above = lo_closed ? x >= lo : x > lo;
        const bool below = hi_closed ? x <= hi : x < hi;
        return above && below;
    }

    /// True when the two intervals share a subinterval of positive length.
    bool overlaps(const Interval& other) const
    {
        return std::max(lo, other.lo) < std::min(hi, other.hi);
    }

    Interval translated(const Rational& offset) const
    {
        return {lo + offset, hi + offset, lo_closed, hi_closed};
    }

    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Merges a family of intervals into maximal connected components, sorted by
/// left endpoint. Two pieces touching at a point join only if that point
/// belongs to one of them.
inline std::vector<Interval> merge_intervals(std::vector<Interval> pieces)
{
    std::erase_if(pieces, [](const Interval& i) { return i.empty(); });
    std::sort(pieces.begin(), pieces.end(), [](const Interval& a, const Interval& b) {
        if (a.lo != b.lo) return a.lo < b.lo;
        return a.lo_closed && !b.lo_closed;
    });

    std::vector<Interval> merged;
    for (auto& piece : pieces) {
        if (!merged.empty()) {
            Interval& cur = merged.back();
            const bool joins = piece.lo < cur.hi || (piece.lo == cur.hi && (cur.hi_closed || piece.lo_closed));
            if (joins) {
                if (piece.lo == cur.lo) cur.lo_closed = cur.lo_closed || piece.lo_closed;
                if (piece.hi > cur.hi) {
                    cur.hi = piece.hi;
                    cur.hi_closed = piece.hi_closed;
                } else if (piece.hi == cur.hi) {
                    cur.hi_closed = cur.hi_closed || piece.hi_closed;
                }
                continue;
            }
        }
        merged.push_back(std::move(piece));
    }
    return merged;
}

/// Complement of merged, sorted components inside the closed interval
/// [hull_lo, hull_hi]. Single-point gaps are kept.
inline std::vector<Interval> complement_in(const std::vector<Interval>& components,
                                           const Rational& hull_lo, const Rational& hull_hi)
{
    std::vector<Interval> gaps;
    Rational cursor = hull_lo;
    bool cursor_closed = true; // whether `cursor` itself is still uncovered
    for (const auto& c : components) {
        if (c.hi < hull_lo || c.lo > hull_hi) continue;
        Interval gap{cursor, c.lo, cursor_closed, !c.lo_closed};
        if (!gap.empty()) gaps.push_back(gap);
        cursor = c.hi;
        cursor_closed = !c.hi_closed;
    }
    Interval tail{cursor, hull_hi, cursor_closed, true};
    if (!tail.empty()) gaps.push_back(tail);
    return gaps;
}

} // namespace fzeta
