#pragma once

// Multifractal zeta functions of the point-mass measure carried by the
// endpoints of a fractal string, at the extreme regularities ±∞.
//
// Regularity +∞ at scale η: closed η-intervals with no endpoint (μ(U) = 0).
// Regularity -∞ at scale η: closed η-intervals holding infinitely many
// endpoints (μ(U) = ∞), i.e. meeting an accumulation point from a side where
// endpoints accumulate.

#include "fzeta/core.hpp"
#include "fzeta/defaults.hpp"
#include "fzeta/interval.hpp"
#include "fzeta/strings.hpp"
#include "fzeta/zeta.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace fzeta {

enum class ExtremeRegularity { pos_inf, neg_inf };

inline const char* to_string(ExtremeRegularity a) { return a == ExtremeRegularity::pos_inf ? "+inf" : "-inf"; }

/// Accepts "+inf", "inf", "-inf". Finite regularities are refused: nothing
/// is known about them for point-mass measures.
inline ExtremeRegularity parse_extreme_regularity(std::string_view text)
{
    if (text == "+inf" || text == "inf" || text == "+infinity" || text == "infinity") return ExtremeRegularity::pos_inf;
    if (text == "-inf" || text == "-infinity") return ExtremeRegularity::neg_inf;
    throw InvalidArgument("only the regularities +inf and -inf are supported for point-mass measures (got \"" +
                          std::string(text) + "\")");
}

/// Unit mass at every endpoint of the string, optionally translated by `offset`
/// (the support need not lie in [0,1]).
class PointMassMeasure {
public:
    explicit PointMassMeasure(GeometricString string, Rational offset = 0)
        : string_(std::move(string)), offset_(std::move(offset))
    {
        if (string_.intervals().empty()) throw InvalidArgument("point-mass measure needs at least one interval");
    }

    const GeometricString& string() const noexcept { return string_; }
    const Rational& offset() const noexcept { return offset_; }
    CantorLayout layout() const noexcept { return string_.layout(); }
    bool has_rule() const noexcept { return layout() != CantorLayout::none; }

    /// Smallest closed interval containing the support (closure of the endpoints),
    /// in string coordinates.
    std::pair<Rational, Rational> hull() const
    {
        if (has_rule()) return {Rational(0), Rational(1)};
        return {string_.intervals().front().a, string_.intervals().back().b};
    }

    PointMassMeasure translated(const Rational& by) const { return PointMassMeasure(string_, offset_ + by); }

private:
    GeometricString string_;
    Rational offset_;
};

/// η_n = c ρ^n, or an explicit finite strictly decreasing list.
class ScaleSequence {
public:
    static ScaleSequence geometric(Rational c, Rational rho)
    {
        if (c <= 0) throw InvalidArgument("scale constant must be positive");
        if (rho <= 0 || rho >= 1) throw InvalidArgument("scale ratio must lie in (0,1)");
        ScaleSequence s;
        s.c_ = std::move(c);
        s.rho_ = std::move(rho);
        return s;
    }

    static ScaleSequence explicit_list(std::vector<Rational> etas)
    {
        if (etas.empty()) throw InvalidArgument("empty scale sequence");
        for (std::size_t i = 0; i < etas.size(); ++i) {
            if (etas[i] <= 0) throw InvalidArgument("scales must be positive");
            if (i > 0 && !(etas[i] < etas[i - 1])) throw InvalidArgument("scales must be strictly decreasing");
        }
        ScaleSequence s;
        s.list_ = std::move(etas);
        return s;
    }

    /// η_n = l_(n+1) = 3^-(n+1) for the Cantor lengths.
    static ScaleSequence cantor_default() { return geometric(Rational(1, 3), Rational(1, 3)); }

    bool is_geometric() const noexcept { return list_.empty(); }
    const Rational& c() const { return c_; }
    const Rational& rho() const { return rho_; }
    std::optional<std::size_t> size() const
    {
        if (is_geometric()) return std::nullopt;
        return list_.size();
    }

    Rational eta(unsigned n) const
    {
        if (n < 1) throw InvalidArgument("stages are numbered from 1");
        if (is_geometric()) return c_ * pow(rho_, n);
        if (n > list_.size()) throw InvalidArgument("stage beyond the explicit scale list");
        return list_[n - 1];
    }

private:
    ScaleSequence() = default;
    Rational c_ = 0;
    Rational rho_ = 0;
    std::vector<Rational> list_;
};

/// Throws HypothesisError naming the first n where l_n > η_n >= l_(n+1) or
/// l_n > 2 η_n fails. With ρ = r the ratios η_n / l_n are constant, so n = 1
/// decides; otherwise they drift and a failure is found at finite n.
inline void check_scale_hypotheses(const LatticeStringSpec& spec, const ScaleSequence& ns)
{
    auto check = [&](unsigned n) {
        const Rational l = spec.length(n), l_next = spec.length(n + 1), eta = ns.eta(n);
        auto fail = [&](const std::string& what) {
            throw HypothesisError("scale hypothesis " + what + " fails at n = " + std::to_string(n) +
                                  " (eta_n = " + to_string(eta) + ")");
        };
        if (!(l > eta)) fail("l_n > eta_n");
        if (!(eta >= l_next)) fail("eta_n >= l_(n+1)");
        if (!(l > 2 * eta)) fail("l_n > 2 eta_n");
    };
    if (!ns.is_geometric()) {
        for (unsigned n = 1; n <= *ns.size(); ++n) check(n);
        return;
    }
    check(1);
    if (ns.rho() == spec.ratio()) return;
    // log(η_n / l_n) moves linearly in n; walk until the drift breaks a bound.
    for (unsigned n = 2; n < 100000; ++n) check(n);
}

// ---------------------------------------------------------------------------
// Resolved geometric model

/// Closed cell containing accumulation points of endpoints. Nondegenerate
/// cells have every open subinterval longer than the model resolution
/// meeting the accumulation set; both ends accumulate from inside. A
/// degenerate cell {a} records the side endpoints accumulate from.
struct AccumulationCell {
    enum class Side { both, from_left, from_right };
    Rational lo;
    Rational hi;
    Side side = Side::both;
};

/// The endpoint set resolved to depth k: placed endpoints, closed zones in
/// which unplaced structure is finer than `resolution`, and accumulation cells.
struct ResolvedModel {
    unsigned depth = 0;
    Rational resolution = 0;
    std::vector<Rational> endpoints;
    std::vector<Interval> zones;
    std::vector<AccumulationCell> cells;
    Rational hull_lo = 0;
    Rational hull_hi = 1;
    bool exact_neg_inf = true; ///< false for rule-less strings (finite data cannot show accumulation)
};

namespace detail {

inline Rational omega3_resolution(unsigned k)
{
    const unsigned J = k / 2;
    return std::max(cantor_length(k + 1), 4 * pow(Rational(1, 9), J + 1));
}

inline Rational layout_resolution(CantorLayout layout, unsigned k)
{
    if (layout == CantorLayout::omega3) return omega3_resolution(k);
    return cantor_length(k + 1);
}

inline std::vector<Rational> endpoints_of(const GeometricString& gs)
{
    std::vector<Rational> out;
    out.reserve(gs.intervals().size() * 2);
    for (const auto& iv : gs.intervals()) {
        if (out.empty() || out.back() != iv.a) out.push_back(iv.a);
        out.push_back(iv.b);
    }
    return out;
}

inline ResolvedModel layout_model(CantorLayout layout, unsigned k)
{
    ResolvedModel m;
    m.depth = k;
    m.resolution = layout_resolution(layout, k);
    m.endpoints = endpoints_of(realize_cantor_configuration(layout, k));
    switch (layout) {
    case CantorLayout::omega1:
        for (auto& c : cantor_cells(k, 0, 1)) {
            m.cells.push_back({c.lo, c.hi, AccumulationCell::Side::both});
            m.zones.push_back(std::move(c));
        }
        break;
    case CantorLayout::omega2: {
        const Rational packed_end = 1 - pow(Rational(2, 3), k);
        m.zones.push_back(Interval::closed(packed_end, 1));
        m.cells.push_back({1, 1, AccumulationCell::Side::from_left});
        break;
    }
    case CantorLayout::omega3: {
        const Rational block_end = packed_block(k, 0, omega3_block_count).second;
        m.zones.push_back(Interval::closed(block_end, omega3_split()));
        m.cells.push_back({omega3_split(), omega3_split(), AccumulationCell::Side::from_left});
        for (auto& c : omega3_cells(k / 2)) {
            m.cells.push_back({c.lo, c.hi, AccumulationCell::Side::both});
            m.zones.push_back(std::move(c));
        }
        break;
    }
    case CantorLayout::none: throw InvalidArgument("layout required");
    }
    return m;
}

} // namespace detail

/// Smallest model depth (not beyond the string's depth) whose resolution is
/// finer than η. Rule-less strings are their own exact model.
inline ResolvedModel resolved_model(const PointMassMeasure& m, const Rational& eta)
{
    if (eta <= 0) throw InvalidArgument("eta must be positive");
    if (!m.has_rule()) {
        ResolvedModel out;
        out.depth = m.string().depth();
        out.endpoints = detail::endpoints_of(m.string());
        std::tie(out.hull_lo, out.hull_hi) = m.hull();
        out.exact_neg_inf = false;
        return out;
    }
    for (unsigned k = 1; k <= m.string().depth(); ++k)
        if (detail::layout_resolution(m.layout(), k) < eta) return detail::layout_model(m.layout(), k);
    throw DomainError("scale " + to_string(eta) + " is below the resolution of the depth-" +
                      std::to_string(m.string().depth()) + " truncation; increase the depth");
}

/// Perfect boundary check at finite depth: every placed endpoint lies in an
/// accumulation cell (no isolated boundary points up to the model resolution).
inline bool has_perfect_boundary(const PointMassMeasure& m, unsigned depth)
{
    if (!m.has_rule()) return false;
    const auto model = detail::layout_model(m.layout(), std::min(depth, m.string().depth()));
    std::vector<Interval> cells;
    for (const auto& c : model.cells)
        if (c.lo < c.hi) cells.push_back(Interval::closed(c.lo, c.hi));
    cells = merge_intervals(std::move(cells));
    for (const auto& e : model.endpoints) {
        auto it = std::partition_point(cells.begin(), cells.end(), [&](const Interval& c) { return c.hi < e; });
        if (it == cells.end() || !it->contains(e)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Regularity regions

struct RegionComponents {
    std::vector<Interval> components; ///< maximal, disjoint, sorted; measure coordinates
    bool approximate = false;
    unsigned model_depth = 0;
};

namespace detail {

inline std::optional<Interval> intersect(const Interval& a, const Interval& b)
{
    Interval out;
    if (a.lo > b.lo) { out.lo = a.lo; out.lo_closed = a.lo_closed; }
    else if (b.lo > a.lo) { out.lo = b.lo; out.lo_closed = b.lo_closed; }
    else { out.lo = a.lo; out.lo_closed = a.lo_closed && b.lo_closed; }
    if (a.hi < b.hi) { out.hi = a.hi; out.hi_closed = a.hi_closed; }
    else if (b.hi < a.hi) { out.hi = b.hi; out.hi_closed = b.hi_closed; }
    else { out.hi = a.hi; out.hi_closed = a.hi_closed && b.hi_closed; }
    if (out.empty()) return std::nullopt;
    return out;
}

inline std::vector<Interval> region_pos_inf(const ResolvedModel& model, const Rational& eta)
{
    std::vector<Interval> forbidden = model.zones;
    for (const auto& e : model.endpoints) forbidden.push_back(Interval::closed(e, e));
    const auto free = complement_in(merge_intervals(std::move(forbidden)), model.hull_lo, model.hull_hi);
    std::vector<Interval> out;
    for (const auto& piece : free) {
        const Rational len = piece.length();
        if (len > eta || (len == eta && piece.kind() == IntervalKind::closed)) out.push_back(piece);
    }
    return out;
}

inline std::vector<Interval> region_neg_inf(const ResolvedModel& model, const Rational& eta)
{
    // Admissible left ends x of U = [x, x + η], then U swept over them.
    if (model.hull_hi - model.hull_lo < eta) return {};
    const Interval admissible = Interval::closed(model.hull_lo, model.hull_hi - eta);
    std::vector<Interval> pieces;
    pieces.reserve(model.cells.size());
    for (const auto& c : model.cells) {
        Interval xs;
        if (c.lo < c.hi) {
            xs = Interval::open(c.lo - eta, c.hi);
        } else {
            const bool left = c.side != AccumulationCell::Side::from_right;
            const bool right = c.side != AccumulationCell::Side::from_left;
            xs = {c.lo - eta, c.lo, left, right};
        }
        if (auto x = intersect(xs, admissible))
            pieces.push_back({x->lo, x->hi + eta, x->lo_closed, x->hi_closed});
    }
    return merge_intervals(std::move(pieces));
}

inline std::vector<Interval> translate_all(std::vector<Interval> v, const Rational& offset)
{
    if (offset != 0)
        for (auto& iv : v) iv = iv.translated(offset);
    return v;
}

} // namespace detail

/// Union of all closed η-intervals of regularity α, as maximal components.
inline RegionComponents regularity_region(const PointMassMeasure& m, const Rational& eta, ExtremeRegularity alpha)
{
    const auto model = resolved_model(m, eta);
    RegionComponents out;
    out.model_depth = model.depth;
    if (alpha == ExtremeRegularity::pos_inf) {
        out.components = detail::region_pos_inf(model, eta);
    } else {
        out.components = detail::region_neg_inf(model, eta);
        out.approximate = !model.exact_neg_inf;
    }
    out.components = detail::translate_all(std::move(out.components), m.offset());
    return out;
}

/// Stage n of the Def-5.1 construction. `counted` holds the new intervals
/// K^n_p whose lengths enter the zeta sum.
///
/// Stage 1 counts every component. Later stages count intervals sharing no
/// positive-length piece with the previous stage: for +∞ (regions grow as η
/// shrinks) the new region components; for -∞ (regions shrink) the new holes
/// opened inside the hull.
struct RegularityRegion {
    unsigned stage = 0;
    ExtremeRegularity alpha = ExtremeRegularity::pos_inf;
    Rational eta;
    std::vector<Interval> components;
    std::vector<bool> new_flags; ///< per component
    std::vector<Interval> holes; ///< -∞ only
    std::vector<Interval> counted;
    bool approximate = false;
    unsigned model_depth = 0;
};

namespace detail {

/// Whether iv shares positive length with any interval of a sorted disjoint list.
inline bool overlaps_any(const std::vector<Interval>& sorted, const Interval& iv)
{
    auto it = std::partition_point(sorted.begin(), sorted.end(), [&](const Interval& x) { return x.hi <= iv.lo; });
    for (; it != sorted.end() && it->lo < iv.hi; ++it)
        if (it->overlaps(iv)) return true;
    return false;
}

inline std::vector<Interval> positive_holes(const std::vector<Interval>& components, const Rational& lo, const Rational& hi)
{
    auto gaps = complement_in(components, lo, hi);
    std::erase_if(gaps, [](const Interval& g) { return !(g.length() > 0); });
    return gaps;
}

} // namespace detail

inline std::vector<RegularityRegion> regularity_stages(const PointMassMeasure& m, const ScaleSequence& ns,
                                                       ExtremeRegularity alpha, unsigned max_stage)
{
    if (max_stage < 1) throw InvalidArgument("max_stage must be >= 1");
    auto [hull_lo, hull_hi] = m.hull();
    hull_lo += m.offset();
    hull_hi += m.offset();

    std::vector<RegularityRegion> stages;
    std::vector<Interval> previous;
    for (unsigned n = 1; n <= max_stage; ++n) {
        RegularityRegion st;
        st.stage = n;
        st.alpha = alpha;
        st.eta = ns.eta(n);
        auto rc = regularity_region(m, st.eta, alpha);
        st.components = std::move(rc.components);
        st.approximate = rc.approximate;
        st.model_depth = rc.model_depth;
        st.new_flags.assign(st.components.size(), n == 1);

        if (alpha == ExtremeRegularity::pos_inf) {
            for (std::size_t i = 0; i < st.components.size(); ++i)
                if (n > 1 && !detail::overlaps_any(previous, st.components[i])) st.new_flags[i] = true;
            for (std::size_t i = 0; i < st.components.size(); ++i)
                if (st.new_flags[i]) st.counted.push_back(st.components[i]);
            previous = st.components;
        } else {
            st.holes = detail::positive_holes(st.components, hull_lo, hull_hi);
            if (n == 1) st.counted = st.components;
            else
                for (const auto& h : st.holes)
                    if (!detail::overlaps_any(previous, h)) st.counted.push_back(h);
            previous = st.holes;
        }
        stages.push_back(std::move(st));
    }
    return stages;
}

namespace detail {

template <class C>
C power_of(const Rational& base, const C& s)
{
    using std::exp;
    return exp(s * C(ComplexTraits<C>::log_rational(base)));
}

} // namespace detail

/// Σ_{n <= max_stage} Σ_p |K^n_p(α)|^s.
inline Complex mzeta_bruteforce(const PointMassMeasure& m, const ScaleSequence& ns, ExtremeRegularity alpha,
                                const Complex& s, unsigned max_stage)
{
    Complex sum = 0;
    for (const auto& st : regularity_stages(m, ns, alpha, max_stage))
        for (const auto& k : st.counted) sum += detail::power_of(k.length(), s);
    return sum;
}

// ---------------------------------------------------------------------------
// Closed forms

struct PowerTerm {
    Rational coeff;
    Rational base;
    friend bool operator==(const PowerTerm&, const PowerTerm&) = default;
};

/// coeff · base^s / (1 - a q^s)
struct LatticeSeries {
    Rational coeff;
    Rational base;
    BigInt a;
    Rational q;
    friend bool operator==(const LatticeSeries&, const LatticeSeries&) = default;
};

struct MzetaClosedForm {
    std::vector<PowerTerm> entire_part;        ///< h(s): no poles
    std::optional<LatticeSeries> series_part;  ///< source of every pole
    bool approximate = false;
    bool theorem_applies = false;              ///< perfect boundary: the general -∞ formula holds
    std::string note;

    Complex entire(const Complex& s) const
    {
        Complex sum = 0;
        for (const auto& t : entire_part) sum += to_double(t.coeff) * detail::power_of(t.base, s);
        return sum;
    }

    Complex eval(const Complex& s) const
    {
        Complex v = entire(s);
        if (series_part) {
            const auto& sp = *series_part;
            const Complex denom = 1.0 - to_double(sp.a) * detail::power_of(sp.q, s);
            if (std::abs(denom) <= defaults::pole_exclusion_radius) throw DomainError("closed form evaluated at a pole");
            v += to_double(sp.coeff) * detail::power_of(sp.base, s) / denom;
        }
        return v;
    }

    friend bool operator==(const MzetaClosedForm& x, const MzetaClosedForm& y)
    {
        return x.entire_part == y.entire_part && x.series_part == y.series_part;
    }
};

namespace detail {

/// Groups lengths into c · b^s terms, largest base first.
inline std::vector<PowerTerm> group_lengths(const std::vector<Interval>& ivs)
{
    std::map<Rational, Rational, std::greater<>> grouped;
    for (const auto& iv : ivs) grouped[iv.length()] += 1;
    std::vector<PowerTerm> out;
    for (auto& [b, c] : grouped) out.push_back({c, b});
    return out;
}

inline const LatticeStringSpec& cantor_spec()
{
    static const LatticeStringSpec spec = LatticeStringSpec::cantor();
    return spec;
}

} // namespace detail

/// Geometric zeta function of the complement of the support within its hull.
/// Independent of the scale sequence.
inline MzetaClosedForm mzeta_infinity(const PointMassMeasure& m, const ScaleSequence& /*ns*/)
{
    MzetaClosedForm out;
    out.theorem_applies = true;
    if (m.has_rule()) {
        // The string is dense in its hull with total length 1, so the complement
        // of the support is the string itself.
        const auto& spec = detail::cantor_spec();
        out.series_part = LatticeSeries{1, spec.first_length(), spec.multiplier(), spec.ratio()};
        return out;
    }
    const auto ends = detail::endpoints_of(m.string());
    std::vector<Interval> gaps;
    for (std::size_t i = 1; i < ends.size(); ++i)
        if (ends[i] > ends[i - 1]) gaps.push_back(Interval::open(ends[i - 1], ends[i]));
    out.entire_part = detail::group_lengths(gaps);
    return out;
}

/// h(s) from the stage-1 region plus the lattice series of later new holes.
/// Ω1 has perfect boundary and the series is Σ_{n>=2} m_n (l_n - 2η_n)^s.
/// Ω2 opens no new holes after stage 1. In Ω3 each level-j gap of the ratio-1/9
/// set opens a hole of length 4·9^-j - 2η_(2j-1) at stage 2j-1.
inline MzetaClosedForm mzeta_neg_infinity(const PointMassMeasure& m, const ScaleSequence& ns)
{
    MzetaClosedForm out;
    if (!m.has_rule()) {
        out.approximate = true;
        out.note = "finitely many endpoints: no accumulation, empty region";
        return out;
    }
    const auto& spec = detail::cantor_spec();
    check_scale_hypotheses(spec, ns);
    if (!ns.is_geometric() || ns.rho() != spec.ratio())
        throw HypothesisError("closed form needs eta_n = c * (1/3)^n");
    const Rational& c = ns.c();

    const auto stage1 = regularity_region(m, ns.eta(1), ExtremeRegularity::neg_inf);
    out.entire_part = detail::group_lengths(stage1.components);
    out.theorem_applies = has_perfect_boundary(m, std::min(m.string().depth(), 10u));

    switch (m.layout()) {
    case CantorLayout::omega1: {
        // l_n - 2η_n = γ r^n with γ = (1 - m r)/r - 2c
        const Rational r = spec.ratio();
        const Rational gamma = spec.first_length() / r - 2 * c;
        out.series_part = LatticeSeries{spec.multiplier(), gamma * r * r, spec.multiplier(), r};
        break;
    }
    case CantorLayout::omega2:
        out.note = "reconstructed layout; boundary not perfect";
        break;
    case CantorLayout::omega3:
        out.series_part = LatticeSeries{2, (4 - 6 * c) / 81, 2, Rational(1, 9)};
        out.note = "reconstructed layout; boundary not perfect";
        break;
    case CantorLayout::none: break;
    }
    return out;
}

/// Poles of the series part: log a / log(1/q) + 2πik / log(1/q), residue
/// coeff · base^ω / log(1/q). Sorted by Im then Re.
inline std::vector<ComplexDimension> pole_set(const MzetaClosedForm& cf, const Window& w)
{
    std::vector<ComplexDimension> out;
    if (!cf.series_part) return out;
    const auto& sp = *cf.series_part;
    const double L = -log_of(sp.q);
    const double re = log_of(sp.a) / L;
    if (re < w.re_min || re > w.re_max) return out;
    const double p = 2 * std::numbers::pi / L;
    const auto k_lo = static_cast<long long>(std::ceil(w.im_min / p));
    const auto k_hi = static_cast<long long>(std::floor(w.im_max / p));
    for (long long k = k_lo; k <= k_hi; ++k) {
        const Complex omega(re, double(k) * p);
        out.push_back({omega, to_double(sp.coeff) * detail::power_of(sp.base, omega) / L, true});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Canonical rendering: terms "c*(p/q)^s" joined by " + ", the series as
// "c*(p/q)^s/(1 - a*(p/q)^s)"; a coefficient of 1 is omitted; "0" if empty.

namespace detail {

inline std::string render_fraction(const Rational& r)
{
    return "(" + numerator(r).str() + "/" + denominator(r).str() + ")";
}

inline std::string render_coeff(const Rational& c)
{
    if (c == 1) return "";
    if (denominator(c) == 1) return numerator(c).str() + "*";
    return render_fraction(c) + "*";
}

} // namespace detail

inline std::string render(const MzetaClosedForm& cf)
{
    std::vector<std::string> parts;
    for (const auto& t : cf.entire_part)
        parts.push_back(detail::render_coeff(t.coeff) + detail::render_fraction(t.base) + "^s");
    if (cf.series_part) {
        const auto& sp = *cf.series_part;
        parts.push_back(detail::render_coeff(sp.coeff) + detail::render_fraction(sp.base) + "^s/(1 - " +
                        detail::render_coeff(Rational(sp.a)) + detail::render_fraction(sp.q) + "^s)");
    }
    if (parts.empty()) return "0";
    std::string out = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
    return out;
}

// ---------------------------------------------------------------------------
// Oracle comparison

struct MzetaOracleRow {
    ExtremeRegularity alpha;
    double s;
    Complex brute;
    Complex closed;
    double relative_error;
};

struct MzetaOracleReport {
    unsigned max_stage = 0;
    std::vector<MzetaOracleRow> rows;
    double max_relative_error = 0;
};

/// Brute-force partial sums at `max_stage` against both closed forms at real probes.
inline MzetaOracleReport mzeta_oracle(const PointMassMeasure& m, const ScaleSequence& ns, unsigned max_stage,
                                      const std::vector<double>& probes)
{
    MzetaOracleReport rep;
    rep.max_stage = max_stage;
    const auto forms = std::array{std::pair{ExtremeRegularity::pos_inf, mzeta_infinity(m, ns)},
                                  std::pair{ExtremeRegularity::neg_inf, mzeta_neg_infinity(m, ns)}};
    for (const auto& [alpha, cf] : forms) {
        const auto stages = regularity_stages(m, ns, alpha, max_stage);
        for (double s : probes) {
            Complex brute = 0;
            for (const auto& st : stages)
                for (const auto& k : st.counted) brute += detail::power_of(k.length(), Complex(s));
            const Complex closed = cf.eval(Complex(s));
            const double rel = std::abs(brute - closed) / std::abs(closed);
            rep.rows.push_back({alpha, s, brute, closed, rel});
            rep.max_relative_error = std::max(rep.max_relative_error, rel);
        }
    }
    return rep;
}

} // namespace fzeta
