#pragma once

// Self-similar binomial measures μ(h, w) on [0,1]: cumulative mass,
// coarse regularity of intervals, and the census of the natural partitions.

#include "fzeta/core.hpp"
#include "fzeta/defaults.hpp"
#include "fzeta/interval.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

namespace fzeta {

/// Each cell splits into a left and a right child of relative length 1/h,
/// carrying relative masses 1/w and (w-1)/w. For h > 2 a central gap of
/// relative length 1 - 2/h carries no mass.
class BinomialMeasureSpec {
public:
    BinomialMeasureSpec(unsigned h, Rational w) : h_(h), w_(std::move(w))
    {
        if (h_ < 2) throw InvalidArgument("h must be >= 2");
        if (w_ <= 1) throw InvalidArgument("w must be > 1");
    }

    unsigned h() const noexcept { return h_; }
    const Rational& w() const noexcept { return w_; }

    Rational left_weight() const { return 1 / w_; }
    Rational right_weight() const { return (w_ - 1) / w_; }

    /// Equal weights: every regularity collapses to one value.
    bool degenerate() const { return w_ == 2; }
    /// The spectrum theorem assumes h >= 2 and w > 2.
    bool within_spectrum_hypotheses() const { return w_ > 2; }

    double log_h() const { return std::log(double(h_)); }
    double log_w() const { return log_of(w_); }
    double log_w_minus_1() const { return log_of(w_ - 1); }

    /// Regularity range [log_h w - log_h(w-1), log_h w] (ordered).
    double alpha_min() const { return std::min(log_w(), log_w() - log_w_minus_1()) / log_h(); }
    double alpha_max() const { return std::max(log_w(), log_w() - log_w_minus_1()) / log_h(); }

    friend bool operator==(const BinomialMeasureSpec&, const BinomialMeasureSpec&) = default;

private:
    unsigned h_;
    Rational w_;
};

/// Reduced pair (k1, k2) naming the regularity attained by intervals with
/// k1 right turns out of k2 (and by their multiples n·k1 out of n·k2).
struct RegularityIndex {
    unsigned k1;
    unsigned k2;

    RegularityIndex(unsigned a, unsigned b) : k1(a), k2(b)
    {
        if (k2 < 1 || k1 > k2) throw InvalidArgument("regularity index needs 0 <= k1 <= k2, k2 >= 1");
        if (std::gcd(k1, k2) != 1) throw InvalidArgument("regularity index must be reduced (gcd(k1,k2) = 1)");
    }

    /// Reduces j right turns out of n levels.
    static RegularityIndex reduced(unsigned j, unsigned n)
    {
        if (n < 1 || j > n) throw InvalidArgument("need 0 <= j <= n, n >= 1");
        if (j == 0) return {0, 1};
        const unsigned g = std::gcd(j, n);
        return {j / g, n / g};
    }

    friend bool operator==(const RegularityIndex&, const RegularityIndex&) = default;
};

/// log_h w - (k1/k2) log_h(w-1).
inline double regularity_value(const BinomialMeasureSpec& spec, const RegularityIndex& idx)
{
    return (spec.log_w() - double(idx.k1) / double(idx.k2) * spec.log_w_minus_1()) / spec.log_h();
}

// ---------------------------------------------------------------------------
// Cumulative mass

/// μ([0, x]) or a bracket around it.
struct CdfValue {
    Rational lower;
    Rational upper;
    bool exact() const { return lower == upper; }
};

/// Descends the construction tree at most `precision_depth` levels. Exact when
/// x is a construction endpoint or falls in a gap (μ has no atoms); otherwise
/// the bracket has width at most (max weight)^depth.
inline CdfValue measure_cdf(const BinomialMeasureSpec& spec, const Rational& x, unsigned precision_depth)
{
    if (precision_depth < 1) throw InvalidArgument("precision_depth must be >= 1");
    if (x < 0 || x > 1) throw InvalidArgument("x must lie in [0,1]");
    Rational lo = 0, hi = 1, below = 0, mass = 1;
    const Rational h(spec.h());
    const Rational wl = spec.left_weight(), wr = spec.right_weight();
    for (unsigned level = 0; level < precision_depth; ++level) {
        if (x <= lo) return {below, below};
        if (x >= hi) return {below + mass, below + mass};
        const Rational child = (hi - lo) / h;
        if (x <= lo + child) {
            hi = lo + child;
            mass *= wl;
        } else if (x < hi - child) {
            const Rational v = below + mass * wl;
            return {v, v};
        } else {
            below += mass * wl;
            lo = hi - child;
            mass *= wr;
        }
    }
    if (x <= lo) return {below, below};
    if (x >= hi) return {below + mass, below + mass};
    return {below, below + mass};
}

/// μ(U) from CDF differences; the interval kind is irrelevant since μ has no atoms.
inline CdfValue measure_of(const BinomialMeasureSpec& spec, const Interval& u, unsigned precision_depth)
{
    const auto a = measure_cdf(spec, u.lo, precision_depth);
    const auto b = measure_cdf(spec, u.hi, precision_depth);
    Rational lower = b.lower - a.upper;
    if (lower < 0) lower = 0;
    return {lower, b.upper - a.lower};
}

/// Extended-real regularity log μ(U) / log |U|.
struct Regularity {
    double value = 0;   ///< ±inf allowed
    bool exact = true;  ///< false when μ(U) was only bracketed
    double lower = 0;   ///< bracket on value (equal to value when exact)
    double upper = 0;

    bool is_pos_inf() const { return value == std::numeric_limits<double>::infinity(); }
    bool is_neg_inf() const { return value == -std::numeric_limits<double>::infinity(); }
};

inline Regularity regularity(const BinomialMeasureSpec& spec, const Interval& u, unsigned precision_depth)
{
    if (u.lo < 0 || u.hi > 1 || !(u.lo < u.hi)) throw InvalidArgument("interval must satisfy 0 <= lo < hi <= 1");
    const Rational len = u.length();
    if (len == 1) throw DomainError("regularity undefined for |U| = 1 (log |U| = 0)");
    const double log_len = log_of(len);
    const auto m = measure_of(spec, u, precision_depth);
    constexpr double inf = std::numeric_limits<double>::infinity();
    auto ratio = [&](const Rational& mass) { return mass == 0 ? inf : log_of(mass) / log_len; };
    Regularity out;
    out.exact = m.exact();
    // log|U| < 0, so larger mass means smaller regularity.
    out.lower = ratio(m.upper);
    out.upper = ratio(m.lower);
    if (out.exact) out.value = out.lower;
    else if (m.lower == 0) out.value = out.upper; // cannot exclude zero mass
    else out.value = 0.5 * (out.lower + out.upper);
    return out;
}

// ---------------------------------------------------------------------------
// Natural partitions

struct PartitionCell {
    Interval interval;
    Rational mass;
    unsigned right_turns;
};

/// The 2^n kept cells of level n in left-to-right order.
inline std::vector<PartitionCell> partition_level(const BinomialMeasureSpec& spec, unsigned n)
{
    if (n > 20) throw InvalidArgument("partition_level: depth too large to materialize");
    std::vector<PartitionCell> cells{{Interval::closed(0, 1), Rational(1), 0}};
    const Rational h(spec.h());
    for (unsigned level = 0; level < n; ++level) {
        std::vector<PartitionCell> next;
        next.reserve(cells.size() * 2);
        for (const auto& c : cells) {
            const Rational child = c.interval.length() / h;
            next.push_back({Interval::closed(c.interval.lo, c.interval.lo + child), c.mass * spec.left_weight(), c.right_turns});
            next.push_back({Interval::closed(c.interval.hi - child, c.interval.hi), c.mass * spec.right_weight(), c.right_turns + 1});
        }
        cells = std::move(next);
    }
    return cells;
}

struct CensusRow {
    unsigned n;
    unsigned j;            ///< right turns
    RegularityIndex idx;   ///< reduced j/n
    double alpha;
    Rational length;       ///< h^-n
    Rational mass;         ///< mass of each such interval
    BigInt count;
};

namespace detail {

struct CensusWalker {
    unsigned depth;
    std::uint64_t h;
    std::vector<std::uint64_t> counts;
    std::uint64_t last_position = 0;
    bool first = true;

    // Positions are left endpoints in units of h^-depth; leaves must come out
    // strictly increasing, which checks the tree geometry as a side effect.
    void walk(unsigned level, unsigned right, std::uint64_t position, std::uint64_t cell)
    {
        if (level == depth) {
            if (!first && position <= last_position) throw Error("census: partition cells out of order");
            first = false;
            last_position = position;
            ++counts[right];
            return;
        }
        const std::uint64_t child = cell / h;
        walk(level + 1, right, position, child);
        walk(level + 1, right + 1, position + cell - child, child);
    }
};

} // namespace detail

/// Enumerates the 2^n cells of level n one by one and tallies them by the
/// number of right turns. Serves as a brute-force oracle for binomial counts.
inline std::vector<CensusRow> census(const BinomialMeasureSpec& spec, unsigned n,
                                     unsigned max_depth = defaults::census_max_depth)
{
    if (n < 1) throw InvalidArgument("census depth must be >= 1");
    if (n > max_depth) throw InvalidArgument("census depth exceeds the configured maximum");
    const long double span = std::pow(static_cast<long double>(spec.h()), static_cast<long double>(n));
    if (span >= static_cast<long double>(std::numeric_limits<std::uint64_t>::max()))
        throw InvalidArgument("census depth overflows 64-bit cell positions");
    std::uint64_t cell = 1;
    for (unsigned i = 0; i < n; ++i) cell *= spec.h();

    detail::CensusWalker walker{n, spec.h(), std::vector<std::uint64_t>(n + 1, 0)};
    walker.walk(0, 0, 0, cell);

    std::vector<CensusRow> rows;
    const Rational length = pow(Rational(1, spec.h()), n);
    for (unsigned j = 0; j <= n; ++j) {
        const auto idx = RegularityIndex::reduced(j, n);
        const Rational mass = pow(spec.left_weight(), n - j) * pow(spec.right_weight(), j);
        rows.push_back({n, j, idx, regularity_value(spec, idx), length, mass, BigInt(walker.counts[j])});
    }
    return rows;
}

} // namespace fzeta
