#pragma once

// Inner tube volume V(ε) of a fractal string: exactly from the lengths, and
// from the residue expansion over complex dimensions for lattice strings.

#include "fzeta/core.hpp"
#include "fzeta/defaults.hpp"
#include "fzeta/strings.hpp"
#include "fzeta/zeta.hpp"

#include <cmath>
#include <optional>
#include <vector>

namespace fzeta {

enum class TubeMethod { direct, explicit_formula };

struct TubeResult {
    double epsilon = 0;
    double volume = 0;
    TubeMethod method = TubeMethod::direct;
    int n_terms = 0;                    ///< explicit only
    std::optional<double> error_bound;  ///< explicit: magnitude of the first omitted conjugate pair
    std::optional<Rational> exact;      ///< direct on exact input
    double max_imag_drift = 0;          ///< explicit: largest |Im| over the partial sums
};

/// Exact Σ m_n min(l_n, 2ε). For rule-backed sequences the terms with
/// l_n <= 2ε are summed in closed form: Σ_{n>=K} m_n l_n = (m r)^(K-1).
inline Rational tube_volume_exact(const LengthSequence& ls, const Rational& epsilon)
{
    if (epsilon <= 0) throw InvalidArgument("epsilon must be positive");
    const Rational two_eps = 2 * epsilon;
    Rational volume = 0;
    std::size_t n = 1;
    if (const auto& rule = ls.rule()) {
        Rational covered = 0; // Σ_{k<n} m_k l_k
        for (;; ++n) {
            const auto e = rule->length(static_cast<unsigned>(n));
            if (e <= two_eps) break;
            const auto m = rule->multiplicity(static_cast<unsigned>(n));
            volume += two_eps * m;
            covered += e * m;
        }
        return volume + (ls.total_length() - covered);
    }
    for (const auto& e : ls.entries()) volume += std::min(e.length, two_eps) * e.multiplicity;
    return volume;
}

inline TubeResult tube_volume_direct(const LengthSequence& ls, const Rational& epsilon)
{
    TubeResult out;
    out.exact = tube_volume_exact(ls, epsilon);
    out.epsilon = to_double(epsilon);
    out.volume = to_double(*out.exact);
    out.method = TubeMethod::direct;
    return out;
}

/// Double input is converted exactly (every double is a dyadic rational).
inline TubeResult tube_volume_direct(const LengthSequence& ls, double epsilon)
{
    if (!(epsilon > 0) || !std::isfinite(epsilon)) throw InvalidArgument("epsilon must be positive and finite");
    return tube_volume_direct(ls, Rational(epsilon));
}

/// Largest ε for which the residue expansion of a lattice string is valid:
/// l_1 / (2r), i.e. 1/2 for the Cantor string.
inline Rational explicit_validity_limit(const LatticeStringSpec& spec)
{
    return spec.first_length() / (2 * spec.ratio());
}

namespace detail {

/// Residue of ζ(s)(2ε)^(1-s)/(s(1-s)) at s = 0.
inline double tube_residue_at_zero(const LatticeStringSpec& spec, double epsilon)
{
    const double two_eps = 2 * epsilon;
    if (spec.multiplier() >= 2) return two_eps / (1.0 - double(spec.multiplier())); // ζ(0)·2ε
    // m = 1: ζ has a simple pole at 0, the integrand a double pole.
    const double L = spec.log_inverse_ratio();
    return two_eps * ((1 - std::log(two_eps) + log_of(spec.first_length())) / L + 0.5);
}

inline Complex tube_term(const ComplexDimension& d, double epsilon)
{
    const Complex& w = d.omega;
    return d.residue * std::exp((1.0 - w) * std::log(2 * epsilon)) / (w * (1.0 - w));
}

} // namespace detail

/// Residue expansion from a list of lattice poles. The poles are summed in
/// conjugate pairs by increasing |Im ω|; the s = 0 contribution is added
/// separately (and ω = 0 in `dims` is absorbed there when m = 1).
inline TubeResult tube_volume_explicit(const std::vector<ComplexDimension>& dims, const LatticeStringSpec& spec,
                                       double epsilon, int n_terms)
{
    if (!(epsilon > 0)) throw InvalidArgument("epsilon must be positive");
    if (Rational(epsilon) > explicit_validity_limit(spec))
        throw DomainError("epsilon outside the validity range (0, " + to_string(explicit_validity_limit(spec)) + "] of the explicit formula");
    for (const auto& d : dims)
        if (!d.simple) throw Error("explicit tube formula requires simple poles");

    std::vector<ComplexDimension> sorted = dims;
    std::erase_if(sorted, [](const ComplexDimension& d) { return std::abs(d.omega) == 0; });
    std::stable_sort(sorted.begin(), sorted.end(), [](const ComplexDimension& a, const ComplexDimension& b) {
        const double ia = std::abs(a.omega.imag()), ib = std::abs(b.omega.imag());
        if (ia != ib) return ia < ib;
        return a.omega.imag() > b.omega.imag();
    });

    TubeResult out;
    out.epsilon = epsilon;
    out.method = TubeMethod::explicit_formula;
    out.n_terms = n_terms;

    Complex sum = detail::tube_residue_at_zero(spec, epsilon);
    std::size_t i = 0;
    while (i < sorted.size()) {
        Complex group = detail::tube_term(sorted[i], epsilon);
        const double level = std::abs(sorted[i].omega.imag());
        std::size_t j = i + 1;
        while (j < sorted.size() && std::abs(sorted[j].omega.imag()) == level) {
            group += detail::tube_term(sorted[j], epsilon);
            ++j;
        }
        sum += group;
        out.max_imag_drift = std::max(out.max_imag_drift, std::abs(sum.imag()));
        i = j;
    }
    out.volume = sum.real();

    // first omitted pair: |k| = n_terms + 1
    const double p = spec.period();
    const Complex next(spec.dimension(), p * (n_terms + 1));
    out.error_bound = 2 * std::abs(detail::tube_term({next, lattice_residue(spec, next), true}, epsilon));
    return out;
}

/// Residue expansion with the symmetric truncation |k| <= n_terms.
inline TubeResult tube_volume_explicit(const LatticeStringSpec& spec, double epsilon,
                                       int n_terms = defaults::explicit_terms)
{
    if (n_terms < 0) throw InvalidArgument("n_terms must be nonnegative");
    const double p = spec.period();
    const double h = (n_terms + 0.5) * p;
    auto dims = complex_dimensions_lattice(spec, Window(spec.dimension(), spec.dimension(), -h, h));
    return tube_volume_explicit(dims, spec, epsilon, n_terms);
}

/// The Cantor-string series with coefficient 1/(2 log 3) per pole and the
/// -2ε term, summed as n = 0, then ±1, ±2, ... up to |n| = n_terms.
inline TubeResult tube_volume_explicit_cantor(double epsilon, int n_terms = defaults::explicit_terms)
{
    if (!(epsilon > 0) || epsilon > 0.5) throw DomainError("epsilon must lie in (0, 1/2] for the Cantor series");
    if (n_terms < 0) throw InvalidArgument("n_terms must be nonnegative");
    const double log3 = std::log(3.0);
    const double D = std::log(2.0) / log3;
    const double p = 2 * std::numbers::pi / log3;
    const double coeff = 1 / (2 * log3);
    const double log_2eps = std::log(2 * epsilon);
    auto term = [&](int n) {
        const Complex w(D, n * p);
        return coeff * std::exp((1.0 - w) * log_2eps) / (w * (1.0 - w));
    };

    TubeResult out;
    out.epsilon = epsilon;
    out.method = TubeMethod::explicit_formula;
    out.n_terms = n_terms;
    Complex sum = term(0);
    for (int n = 1; n <= n_terms; ++n) {
        sum += term(n) + term(-n);
        out.max_imag_drift = std::max(out.max_imag_drift, std::abs(sum.imag()));
    }
    out.volume = sum.real() - 2 * epsilon;
    out.error_bound = 2 * std::abs(term(n_terms + 1));
    return out;
}

} // namespace fzeta
