#pragma once

// Geometric zeta functions: truncated Dirichlet series, the closed-form
// continuation of lattice strings, and their poles with residues.

#include "fzeta/core.hpp"
#include "fzeta/defaults.hpp"
#include "fzeta/strings.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace fzeta {

struct Window {
    double re_min;
    double re_max;
    double im_min;
    double im_max;

    Window(double re_lo, double re_hi, double im_lo, double im_hi)
        : re_min(re_lo), re_max(re_hi), im_min(im_lo), im_max(im_hi)
    {
        if (!(re_min <= re_max) || !(im_min <= im_max)) throw InvalidArgument("window bounds must be ordered");
    }

    bool contains(const Complex& z) const
    {
        return z.real() >= re_min && z.real() <= re_max && z.imag() >= im_min && z.imag() <= im_max;
    }
};

enum class ZetaMode { truncated, closed_form };

template <class C = Complex>
struct ZetaValueT {
    C s;
    C value;
    ZetaMode mode = ZetaMode::truncated;
    std::size_t terms = 0;      ///< N for truncated mode
    double tail_bound = 0;      ///< bound on |ζ(s) - value|; +inf when unknown
    double rounding_bound = 0;  ///< accumulated floating-point error bound of the summation
    bool convergent = true;     ///< false when Re(s) <= D: partial sums do not approach ζ(s)
};

using ZetaValue = ZetaValueT<Complex>;

struct ComplexDimension {
    Complex omega;
    Complex residue;
    bool simple = true;
};

namespace detail {

template <class C>
RealOf<C> machine_epsilon()
{
    return std::numeric_limits<RealOf<C>>::epsilon();
}

template <class C>
double real_part(const C& z)
{
    if constexpr (std::is_same_v<C, Complex>) return z.real();
    else return static_cast<double>(real(z));
}

} // namespace detail

/// Σ_{n<=N} m_n l_n^s. The tail bound is exact-analytic for rule-backed
/// sequences (a geometric majorant) and exact for finite data.
template <class C = Complex>
ZetaValueT<C> zeta_truncated(const LengthSequence& ls, const C& s, std::size_t N)
{
    using T = ComplexTraits<C>;
    using R = RealOf<C>;
    using std::abs;
    using std::exp;
    if (N < 1 || !ls.has_entry(N)) throw InvalidArgument("truncation N beyond the available entries");

    ZetaValueT<C> out;
    out.s = s;
    out.mode = ZetaMode::truncated;
    out.terms = N;

    const double sigma = detail::real_part(s);
    C sum(0);
    if (const auto& rule = ls.rule()) {
        // term_n = l_1^s (m r^s)^(n-1): two exponentials, then N multiplications.
        const C ratio = C(T::from_rational(Rational(rule->multiplier()))) * exp(s * C(T::log_rational(rule->ratio())));
        C term = exp(s * C(T::log_rational(rule->first_length())));
        for (std::size_t n = 1; n <= N; ++n) {
            sum += term;
            term *= ratio;
        }
        // Σ|term| in closed form; term n inherits (n-1) rounding steps of the
        // product chain plus the error of the two exponentials, amplified by n.
        const double q = std::exp(std::log(double(rule->multiplier())) + sigma * log_of(rule->ratio()));
        const double first = std::exp(sigma * log_of(rule->first_length()));
        const double abs_sum = first * (q == 1 ? double(N) : (1 - std::pow(q, double(N))) / (1 - q));
        const double scale = (static_cast<double>(abs(s)) + 1) *
                             (std::abs(log_of(rule->ratio())) + std::abs(log_of(rule->first_length())) + 1);
        out.rounding_bound = abs_sum * static_cast<double>(detail::machine_epsilon<C>()) * (double(N) + 1) * (4 * scale + 8);
    } else {
        R abs_sum(0);
        for (std::size_t n = 1; n <= N; ++n) {
            const auto e = ls.entry(n);
            const C term = exp(s * C(T::log_rational(e.length)) + C(T::log_integer(e.multiplicity)));
            sum += term;
            abs_sum += abs(term);
        }
        // Each exp/log carries a few ulps relative to |s log l|, and summation adds N more.
        const double scale = std::abs(sigma) + static_cast<double>(abs(s)) + 1;
        out.rounding_bound = static_cast<double>(abs_sum * detail::machine_epsilon<C>()) * (4 * scale * std::log(double(N) + 2) + double(N));
    }
    out.value = sum;

    if (const auto& rule = ls.rule()) {
        const double D = rule->dimension();
        out.convergent = sigma > D;
        if (out.convergent) {
            // tail Σ_{n>N} m^(n-1) ((1-mr) r^(n-1))^σ = (1-mr)^σ q^N / (1-q), q = m r^σ
            const double log_q = std::log(double(rule->multiplier())) + sigma * log_of(rule->ratio());
            const double log_tail = sigma * log_of(rule->first_length()) + double(N) * log_q - std::log1p(-std::exp(log_q));
            out.tail_bound = std::exp(log_tail);
        } else {
            out.tail_bound = std::numeric_limits<double>::infinity();
        }
    } else {
        double tail = 0;
        for (std::size_t n = N + 1; n <= ls.materialized(); ++n) {
            const auto e = ls.entry(n);
            tail += std::exp(log_of(e.multiplicity) + sigma * log_of(e.length));
        }
        out.tail_bound = tail;
    }
    return out;
}

/// Nearest lattice pole D + i k p to s.
inline Complex nearest_lattice_pole(const LatticeStringSpec& spec, const Complex& s)
{
    const double p = spec.period();
    return {spec.dimension(), std::round(s.imag() / p) * p};
}

/// (1 - m r)^s / (1 - m r^s), the meromorphic continuation to all of ℂ.
template <class C = Complex>
ZetaValueT<C> zeta_closed_form_lattice(const LatticeStringSpec& spec, const C& s)
{
    using T = ComplexTraits<C>;
    using std::abs;
    using std::exp;
    const C numerator_ = exp(s * C(T::log_rational(spec.first_length())));
    const C denominator_ = C(1) - C(T::from_rational(Rational(spec.multiplier()))) * exp(s * C(T::log_rational(spec.ratio())));
    if (static_cast<double>(abs(denominator_)) <= defaults::pole_exclusion_radius) {
        Complex s_d;
        if constexpr (std::is_same_v<C, Complex>) s_d = s;
        else s_d = to_complex(s);
        throw PoleProximityError("zeta evaluated within the pole-exclusion radius of a pole", nearest_lattice_pole(spec, s_d));
    }
    ZetaValueT<C> out;
    out.s = s;
    out.value = numerator_ / denominator_;
    out.mode = ZetaMode::closed_form;
    out.tail_bound = 0;
    out.convergent = true;
    return out;
}

/// Analytic residue at a zero ω of 1 - m r^s: (1-mr)^ω / (m r^ω log(1/r)).
inline Complex lattice_residue(const LatticeStringSpec& spec, const Complex& omega)
{
    const double L = spec.log_inverse_ratio();
    const Complex num = std::exp(omega * log_of(spec.first_length()));
    const Complex mr = double(spec.multiplier()) * std::exp(-omega * L);
    return num / (mr * L);
}

/// (1/2πi) ∮ (s-ω)^k ζ(s) ds over a circle of radius ρ about ω, trapezoid rule.
template <class C = Complex>
C contour_moment(const LatticeStringSpec& spec, const C& center, unsigned k,
                 double radius = defaults::contour_radius, int nodes = defaults::contour_nodes)
{
    using T = ComplexTraits<C>;
    using R = RealOf<C>;
    using std::cos;
    using std::sin;
    if (nodes < 8) throw InvalidArgument("contour needs at least 8 nodes");
    if (spec.period() <= 2 * radius) throw DomainError("contour would enclose more than one lattice pole");
    const R two_pi = 2 * T::pi();
    C sum(0);
    for (int j = 0; j < nodes; ++j) {
        const R theta = two_pi * R(j) / R(nodes);
        const C unit(cos(theta), sin(theta));
        const C offset = C(R(radius)) * unit;
        C weight = offset; // ds/(i dθ) = ρ e^{iθ}
        for (unsigned i = 0; i < k; ++i) weight *= offset;
        sum += zeta_closed_form_lattice(spec, center + offset).value * weight;
    }
    return sum / C(R(nodes));
}

/// Residue by contour quadrature near ω. ω must lie within 0.1 of a lattice pole.
template <class C = Complex>
C verify_pole_numerically(const LatticeStringSpec& spec, const C& omega,
                          double radius = defaults::contour_radius, int nodes = defaults::contour_nodes)
{
    Complex w;
    if constexpr (std::is_same_v<C, Complex>) w = omega;
    else w = to_complex(omega);
    if (std::abs(w - nearest_lattice_pole(spec, w)) > 0.1)
        throw InvalidArgument("verify_pole_numerically: point is not within 0.1 of a lattice pole");
    return contour_moment(spec, omega, 0, radius, nodes);
}

/// All poles D + i k p (k ∈ ℤ) inside the window, sorted by Im then Re. Each
/// analytic residue is cross-checked against contour quadrature.
inline std::vector<ComplexDimension> complex_dimensions_lattice(const LatticeStringSpec& spec, const Window& w)
{
    std::vector<ComplexDimension> out;
    const double D = spec.dimension();
    if (D < w.re_min || D > w.re_max) return out;
    const double p = spec.period();
    const auto k_lo = static_cast<long long>(std::ceil(w.im_min / p));
    const auto k_hi = static_cast<long long>(std::floor(w.im_max / p));
    for (long long k = k_lo; k <= k_hi; ++k) {
        const Complex omega(D, double(k) * p);
        const Complex res = lattice_residue(spec, omega);
        const Complex numeric = verify_pole_numerically(spec, omega);
        if (std::abs(numeric - res) > defaults::residue_agreement * std::max(1.0, std::abs(res)))
            throw Error("residue cross-check failed at a lattice pole");
        out.push_back({omega, res, true});
    }
    return out;
}

inline void sort_poles(std::vector<ComplexDimension>& poles)
{
    std::sort(poles.begin(), poles.end(), [](const ComplexDimension& a, const ComplexDimension& b) {
        if (a.omega.imag() != b.omega.imag()) return a.omega.imag() < b.omega.imag();
        return a.omega.real() < b.omega.real();
    });
}

} // namespace fzeta
