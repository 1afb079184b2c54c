#pragma once

// Partition zeta functions of μ(h, w) and the abscissa-of-convergence
// spectrum σ(α), with the base-2 entropy spectrum for comparison.

#include "fzeta/core.hpp"
#include "fzeta/defaults.hpp"
#include "fzeta/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <vector>

namespace fzeta {

/// Σ_{n>=1} C(n k2, n k1) h^(-k2 n s): the partition intervals of regularity
/// α(k1, k2) occur only at levels n k2, with binomial multiplicities.
struct PartitionZeta {
    BinomialMeasureSpec spec;
    RegularityIndex idx;
};

/// Binomial coefficient, exact.
inline BigInt binomial(unsigned long n, unsigned long k)
{
    if (k > n) return 0;
    BigInt c;
    mpz_bin_uiui(c.backend().data(), n, k);
    return c;
}

/// log C(n, k): exact big integers up to the log-domain threshold, log-gamma beyond.
inline double log_binomial(unsigned long n, unsigned long k)
{
    if (k > n) throw DomainError("log_binomial: k > n");
    if (k == 0 || k == n) return 0;
    k = std::min(k, n - k); // C(n, k) and C(n, n-k) must agree bit for bit
    if (n <= static_cast<unsigned long>(defaults::log_domain_threshold)) return log_of(binomial(n, k));
    return std::lgamma(double(n) + 1) - std::lgamma(double(k) + 1) - std::lgamma(double(n - k) + 1);
}

/// Natural binary entropy with 0 log 0 = 0.
inline double binary_entropy(double t)
{
    auto xlogx = [](double x) { return x > 0 ? x * std::log(x) : 0.0; };
    return -xlogx(t) - xlogx(1 - t);
}

/// Exponential growth rate per n of the coefficients, k2 H(k1/k2).
inline double partition_zeta_growth(const PartitionZeta& pz)
{
    return pz.idx.k2 * binary_entropy(double(pz.idx.k1) / double(pz.idx.k2));
}

struct PartitionZetaValue {
    Complex value;
    int terms = 0;
    double tail_bound = 0; ///< +inf in the divergent region
    bool divergent_region = false;
};

/// Partial sum up to n = N with a ratio-test tail bound. The ratio of
/// consecutive binomials increases to e^(k2 H), so the tail after N is at most
/// |term_N| q / (1 - q) with q = e^(k2 H) h^(-k2 σ) whenever q < 1.
inline PartitionZetaValue partition_zeta_eval(const PartitionZeta& pz, const Complex& s,
                                              int N = defaults::partition_zeta_terms)
{
    if (N < 1) throw InvalidArgument("N must be >= 1");
    const unsigned k1 = pz.idx.k1, k2 = pz.idx.k2;
    const double log_h = pz.spec.log_h();
    PartitionZetaValue out;
    out.terms = N;
    Complex sum = 0;
    double last_log_abs = 0;
    for (int n = 1; n <= N; ++n) {
        const double lc = log_binomial(static_cast<unsigned long>(n) * k2, static_cast<unsigned long>(n) * k1);
        const Complex log_term = lc - double(k2) * n * log_h * s;
        sum += std::exp(log_term);
        last_log_abs = log_term.real();
    }
    out.value = sum;
    const double log_q = partition_zeta_growth(pz) - double(k2) * s.real() * log_h;
    if (log_q < 0) {
        out.tail_bound = std::exp(last_log_abs + log_q - std::log1p(-std::exp(log_q)));
    } else {
        out.divergent_region = true;
        out.tail_bound = std::numeric_limits<double>::infinity();
    }
    return out;
}

struct AbscissaEstimate {
    double value = 0;
    double growth_rate = 0; ///< extrapolated lim (1/n) log C(n k2, n k1)
    double tolerance = defaults::abscissa_tolerance;
};

/// Abscissa of convergence by bisection on the root test
/// lim C(nk2,nk1)^(1/n) h^(-k2 σ) < 1. The limit is extrapolated from exact
/// coefficients at n, 2n, 4n (4n = abscissa_max_n): with the -½ log n
/// correction added back, b(n) = c n + d + e/n + ..., and
/// (b(4n) - b(2n) - (b(2n) - b(n))/2) / (1.5 n) cancels d and e.
inline AbscissaEstimate abscissa_numeric(const PartitionZeta& pz)
{
    const unsigned k1 = pz.idx.k1, k2 = pz.idx.k2;
    const bool trivial = k1 == 0 || k1 == k2;
    auto b = [&](unsigned long n) {
        const double lc = log_binomial(n * k2, n * k1);
        return trivial ? lc : lc + 0.5 * std::log(double(n));
    };
    const unsigned long n = defaults::abscissa_max_n / 4;
    const double A = b(2 * n) - b(n);
    const double B = b(4 * n) - b(2 * n);
    const double c = (B - 0.5 * A) / (1.5 * double(n));

    const double log_h = pz.spec.log_h();
    auto converges = [&](double sigma) { return c - double(k2) * sigma * log_h < 0; };
    double lo = 0, hi = 1;
    AbscissaEstimate out;
    out.growth_rate = c;
    if (converges(lo)) {
        out.value = 0;
        return out;
    }
    while (hi - lo > 1e-3 * defaults::abscissa_tolerance) {
        const double mid = 0.5 * (lo + hi);
        (converges(mid) ? hi : lo) = mid;
    }
    out.value = 0.5 * (lo + hi);
    return out;
}

/// σ(α) = x log_h(-x) - (1 + x) log_h(1 + x), x = (α - log_h w)/log_h(w-1),
/// with 0 log 0 = 0 at the ends of [α_min, α_max].
inline double sigma_formula(const BinomialMeasureSpec& spec, double alpha)
{
    if (spec.degenerate()) throw HypothesisError("degenerate: equal weights");
    const double lh = spec.log_h();
    const double x = (alpha - spec.log_w() / lh) / (spec.log_w_minus_1() / lh);
    constexpr double slack = 1e-12;
    if (x > slack || x < -1 - slack) throw DomainError("alpha outside [alpha_min, alpha_max]");
    // Snap rounding residue at the ends so σ(α_min) and σ(α_max) are exactly 0.
    constexpr double snap = 1e-13;
    double neg_x = std::clamp(-x, 0.0, 1.0);
    double one_plus_x = std::clamp(1 + x, 0.0, 1.0);
    if (neg_x < snap) neg_x = 0, one_plus_x = 1;
    if (one_plus_x < snap) one_plus_x = 0, neg_x = 1;
    const double first = neg_x > 0 ? -neg_x * std::log(neg_x) / lh : 0.0;      // x log_h(-x)
    const double second = one_plus_x > 0 ? one_plus_x * std::log(one_plus_x) / lh : 0.0;
    const double sigma = first - second;
    return sigma == 0 ? 0.0 : sigma; // no negative zero
}

/// Two-term base-2 entropy spectrum in terms of (α - α_min)/(α_max - α_min).
inline double peitgen_f(double alpha, double alpha_min, double alpha_max)
{
    if (!(alpha_min < alpha_max)) throw DomainError("need alpha_min < alpha_max");
    if (alpha < alpha_min || alpha > alpha_max) throw DomainError("alpha outside [alpha_min, alpha_max]");
    const double span = alpha_max - alpha_min;
    const double a = (alpha_max - alpha) / span;
    const double b = (alpha - alpha_min) / span;
    auto term = [](double t) { return t > 0 ? -t * std::log2(t) : 0.0; };
    return term(a) + term(b);
}

struct SpectrumPoint {
    double alpha;
    double sigma;
    RegularityIndex idx;
    std::optional<double> f_alpha; ///< only for h = 2
    bool is_max = false;
};

/// One point per reduced pair 0 <= k1 <= k2 <= K, sorted by alpha then k2.
/// Points attaining the largest sampled σ are marked is_max.
inline std::vector<SpectrumPoint> spectrum_sample(const BinomialMeasureSpec& spec,
                                                  unsigned K = defaults::spectrum_max_denominator)
{
    if (K < 2) throw InvalidArgument("K must be >= 2");
    if (spec.degenerate()) throw HypothesisError("degenerate: equal weights");
    std::vector<SpectrumPoint> out;
    for (unsigned k2 = 1; k2 <= K; ++k2)
        for (unsigned k1 = 0; k1 <= k2; ++k1) {
            if (std::gcd(k1, k2) != 1) continue;
            const RegularityIndex idx(k1, k2);
            const double alpha = regularity_value(spec, idx);
            SpectrumPoint p{alpha, sigma_formula(spec, alpha), idx, std::nullopt, false};
            if (spec.h() == 2) p.f_alpha = peitgen_f(alpha, spec.alpha_min(), spec.alpha_max());
            out.push_back(p);
        }
    std::sort(out.begin(), out.end(), [](const SpectrumPoint& a, const SpectrumPoint& b) {
        if (a.alpha != b.alpha) return a.alpha < b.alpha;
        return a.idx.k2 < b.idx.k2;
    });
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& p : out) best = std::max(best, p.sigma);
    for (auto& p : out) p.is_max = p.sigma == best;
    return out;
}

} // namespace fzeta
