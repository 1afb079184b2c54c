#pragma once

// Minkowski content bounds and the lattice measurability verdict.

#include "fzeta/core.hpp"
#include "fzeta/strings.hpp"
#include "fzeta/tube.hpp"
#include "fzeta/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

namespace fzeta {

/// `points` log-spaced scales from hi down to lo (strictly decreasing).
inline std::vector<double> log_grid(double lo, double hi, int points)
{
    if (!(lo > 0) || !(hi > lo) || points < 2) throw InvalidArgument("log grid needs 0 < lo < hi and >= 2 points");
    std::vector<double> out;
    out.reserve(points);
    const double a = std::log(hi), b = std::log(lo);
    for (int i = 0; i < points; ++i) out.push_back(std::exp(a + (b - a) * i / (points - 1)));
    out.front() = hi;
    out.back() = lo;
    return out;
}

struct ContentBounds {
    double lower = 0;
    double upper = 0;
    std::vector<double> epsilon_grid; ///< scales actually used (the final period)
};

/// min / max of V(ε) ε^(D-1) over the finest multiplicative period of the
/// grid: a factor 1/r for lattice strings, a decade otherwise.
inline ContentBounds minkowski_content_bounds(const LengthSequence& ls, double D, const std::vector<double>& eps_grid)
{
    if (!(D >= 0 && D <= 1)) throw InvalidArgument("dimension must lie in [0,1]");
    if (eps_grid.empty()) throw InvalidArgument("empty scale grid");
    const double finest = *std::min_element(eps_grid.begin(), eps_grid.end());
    const double span = ls.rule() ? 1 / to_double(ls.rule()->ratio()) : 10.0;

    ContentBounds out;
    out.lower = std::numeric_limits<double>::infinity();
    out.upper = 0;
    for (double eps : eps_grid) {
        if (!(eps > 0)) throw InvalidArgument("scales must be positive");
        if (eps > finest * span) continue;
        const double v = tube_volume_direct(ls, eps).volume * std::pow(eps, D - 1);
        out.lower = std::min(out.lower, v);
        out.upper = std::max(out.upper, v);
        out.epsilon_grid.push_back(eps);
    }
    return out;
}

struct MeasurabilityVerdict {
    bool measurable = false;
    std::string explanation;
    ComplexDimension witness; ///< first pole off the real axis on Re s = D
};

/// Lattice strings are never Minkowski measurable: the poles on Re s = D form
/// the full progression D + i k p, so D is not the only one.
inline MeasurabilityVerdict is_minkowski_measurable_lattice(const LatticeStringSpec& spec)
{
    const double D = spec.dimension();
    const double p = spec.period();
    const Complex w(D, p);
    MeasurabilityVerdict out;
    out.measurable = false;
    out.witness = {w, lattice_residue(spec, w), true};
    std::ostringstream msg;
    msg.precision(17);
    msg << "not Minkowski measurable: complex dimension " << D << " + " << p
        << "i lies on the line Re s = D besides D itself";
    out.explanation = msg.str();
    return out;
}

} // namespace fzeta
