#include "fzeta/pzeta.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace fzeta;

TEST(Binomial, ExactAndLogDomain)
{
    const auto tri = oracle::pascal(60);
    for (unsigned n = 0; n <= 60; ++n)
        for (unsigned k = 0; k <= n; ++k) EXPECT_EQ(binomial(n, k), BigInt(tri[n][k]));
    EXPECT_EQ(binomial(5, 7), 0);
    EXPECT_NEAR(log_binomial(20000, 7000), log_of(binomial(20000, 7000)), 1e-8);
    EXPECT_EQ(log_binomial(30000, 1000), log_binomial(30000, 29000));
}

TEST(Abscissa, MatchesEntropyFormula)
{
    for (const auto& spec : {BinomialMeasureSpec(3, Rational(3)), BinomialMeasureSpec(2, Rational(3)),
                             BinomialMeasureSpec(4, Rational(5))})
        for (unsigned k2 = 1; k2 <= 20; ++k2)
            for (unsigned k1 = 0; k1 <= k2; ++k1) {
                if (std::gcd(k1, k2) != 1) continue;
                const double want = double(oracle::entropy_over_log((long double)k1 / k2, spec.h()));
                const auto est = abscissa_numeric({spec, RegularityIndex(k1, k2)});
                EXPECT_NEAR(est.value, want, 1e-6) << k1 << "/" << k2;
            }
}

TEST(Sigma, FormulaMatchesEntropy)
{
    const BinomialMeasureSpec spec(3, Rational(3));
    for (unsigned k2 = 1; k2 <= 30; ++k2)
        for (unsigned k1 = 0; k1 <= k2; ++k1) {
            if (std::gcd(k1, k2) != 1) continue;
            const double a = regularity_value(spec, RegularityIndex(k1, k2));
            EXPECT_NEAR(sigma_formula(spec, a), double(oracle::entropy_over_log((long double)k1 / k2, 3)), 1e-12);
        }
    EXPECT_EQ(sigma_formula(spec, spec.alpha_min()), 0.0);
    EXPECT_EQ(sigma_formula(spec, spec.alpha_max()), 0.0);
}

TEST(Sigma, Errors)
{
    EXPECT_THROW(sigma_formula(BinomialMeasureSpec(3, Rational(2)), 0.5), HypothesisError);
    const BinomialMeasureSpec spec(3, Rational(3));
    EXPECT_THROW(sigma_formula(spec, spec.alpha_max() + 0.01), DomainError);
    EXPECT_THROW(spectrum_sample(BinomialMeasureSpec(3, Rational(2))), HypothesisError);
}

TEST(Sigma, ConcaveAndSymmetricInTurns)
{
    const BinomialMeasureSpec spec(3, Rational(4));
    const double lo = spec.alpha_min(), hi = spec.alpha_max();
    for (int i = 1; i < 99; ++i) {
        const double a = lo + (hi - lo) * i / 100.0;
        const double b = lo + (hi - lo) * (i + 1) / 100.0;
        const double c = lo + (hi - lo) * (i - 1) / 100.0;
        EXPECT_GE(sigma_formula(spec, a), 0.5 * (sigma_formula(spec, b) + sigma_formula(spec, c)) - 1e-14);
        EXPECT_NEAR(sigma_formula(spec, a), sigma_formula(spec, lo + hi - a), 1e-12);
    }
}

TEST(Spectrum, ArgmaxAtOneHalf)
{
    const BinomialMeasureSpec spec(3, Rational(3));
    const auto pts = spectrum_sample(spec, 24);
    int maxima = 0;
    for (const auto& p : pts)
        if (p.is_max) {
            ++maxima;
            EXPECT_EQ(p.idx, RegularityIndex(1, 2));
            EXPECT_NEAR(p.sigma, std::log(2.0) / std::log(3.0), 1e-15);
        }
    EXPECT_EQ(maxima, 1);
    EXPECT_TRUE(std::is_sorted(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return a.alpha < b.alpha; }));
    for (const auto& p : pts) EXPECT_FALSE(p.f_alpha.has_value());
}

TEST(Spectrum, PeitgenAgreementForBaseTwo)
{
    const BinomialMeasureSpec spec(2, Rational(3));
    for (const auto& p : spectrum_sample(spec, 12)) {
        ASSERT_TRUE(p.f_alpha.has_value());
        EXPECT_NEAR(*p.f_alpha, p.sigma, 1e-12);
        EXPECT_NEAR(*p.f_alpha, double(oracle::peitgen(p.alpha, spec.alpha_min(), spec.alpha_max())), 1e-12);
    }
}

TEST(PartitionZetaEval, ConvergesRightOfAbscissa)
{
    const BinomialMeasureSpec spec(3, Rational(3));
    const PartitionZeta pz{spec, RegularityIndex(1, 2)};
    const auto v = partition_zeta_eval(pz, Complex(1, 0));
    EXPECT_FALSE(v.divergent_region);
    EXPECT_NEAR(v.value.real(), 0.3416407865, 1e-9);
    EXPECT_LT(v.tail_bound, 1e-12);
    // Σ C(2n, n) x^n = 1/sqrt(1 - 4x) - 1 at x = 1/9
    EXPECT_NEAR(v.value.real(), 1 / std::sqrt(1 - 4.0 / 9) - 1, 1e-12);
    EXPECT_TRUE(partition_zeta_eval(pz, Complex(0.5, 0)).divergent_region);
}
