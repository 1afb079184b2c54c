#include "fzeta/content.hpp"
#include "fzeta/tube.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>
#include <ranges>

using namespace fzeta;

TEST(TubeExact, SpotValue)
{
    const auto ls = build_lattice_string(LatticeStringSpec::cantor());
    EXPECT_EQ(tube_volume_exact(ls, Rational(1, 18)), Rational(7, 9));
    EXPECT_EQ(tube_volume_exact(ls, Rational(1, 2)), 1);
    EXPECT_EQ(tube_volume_exact(ls, Rational(5)), 1);
    EXPECT_THROW(tube_volume_exact(ls, Rational(0)), InvalidArgument);
}

TEST(TubeExact, MatchesOracleAndIsMonotone)
{
    const auto ls = build_lattice_string(LatticeStringSpec::cantor());
    double prev = 0;
    const auto grid = log_grid(1e-7, 0.5, 200);
    for (double eps : grid | std::views::reverse) {
        const auto r = tube_volume_direct(ls, eps);
        EXPECT_NEAR(r.volume, double(oracle::cantor_tube(eps)), 1e-15);
        EXPECT_GE(r.volume, prev);
        prev = r.volume;
    }
}

TEST(TubeExact, RuleTailAgreesWithMaterializedSum)
{
    // Raw data long enough that every tail term is below 2ε.
    const auto spec = LatticeStringSpec::cantor();
    std::vector<LengthEntry> raw;
    for (unsigned n = 1; n <= 60; ++n) raw.push_back({spec.length(n), spec.multiplicity(n)});
    const LengthSequence finite(std::move(raw));
    const auto rule = build_lattice_string(spec);
    const Rational eps(1, 1000);
    const Rational rest = 1 - finite.total_length();
    EXPECT_EQ(tube_volume_exact(rule, eps), tube_volume_exact(finite, eps) + rest);
}

TEST(TubeExplicit, CantorSeriesAgreesWithDirect)
{
    const auto ls = build_lattice_string(LatticeStringSpec::cantor());
    for (double eps : log_grid(1e-4, 0.5, 25)) {
        const auto direct = tube_volume_direct(ls, eps).volume;
        const auto ex = tube_volume_explicit_cantor(eps, 500);
        EXPECT_LE(std::abs(ex.volume - direct), 2e-3) << eps;
        EXPECT_LT(ex.max_imag_drift, 1e-12);
    }
}

TEST(TubeExplicit, GenericPathMatchesCantorSpecialCase)
{
    const auto spec = LatticeStringSpec::cantor();
    for (double eps : {1e-4, 3e-3, 0.05, 0.5}) {
        const auto a = tube_volume_explicit(spec, eps, 200);
        const auto b = tube_volume_explicit_cantor(eps, 200);
        EXPECT_NEAR(a.volume, b.volume, 1e-12) << eps;
        ASSERT_TRUE(a.error_bound.has_value());
        EXPECT_NEAR(*a.error_bound, *b.error_bound, 1e-15);
    }
}

TEST(TubeExplicit, ErrorShrinksWithMoreTerms)
{
    const auto spec = LatticeStringSpec::cantor();
    const auto ls = build_lattice_string(spec);
    const double eps = 0.0123;
    const double direct = tube_volume_direct(ls, eps).volume;
    double prev = 1;
    for (int n : {20, 80, 320}) {
        const double err = std::abs(tube_volume_explicit(spec, eps, n).volume - direct);
        EXPECT_LT(err, prev);
        prev = err;
    }
}

TEST(TubeExplicit, OtherLatticeStrings)
{
    for (auto [r, m] : {std::pair{Rational(1, 4), 3u}, std::pair{Rational(1, 5), 2u}, std::pair{Rational(1, 2), 1u}}) {
        const LatticeStringSpec spec(r, m);
        const auto ls = build_lattice_string(spec);
        const double limit = to_double(explicit_validity_limit(spec));
        for (double eps : log_grid(1e-3, limit, 12)) {
            const double direct = tube_volume_direct(ls, eps).volume;
            const double ex = tube_volume_explicit(spec, eps, 800).volume;
            EXPECT_NEAR(ex, direct, 3e-3) << "r=" << to_string(r) << " m=" << m << " eps=" << eps;
        }
    }
}

TEST(TubeExplicit, OutsideValidityRange)
{
    EXPECT_THROW(tube_volume_explicit_cantor(0.6), DomainError);
    EXPECT_THROW(tube_volume_explicit(LatticeStringSpec::cantor(), 0.51), DomainError);
    EXPECT_EQ(explicit_validity_limit(LatticeStringSpec::cantor()), Rational(1, 2));
}

TEST(Content, CantorBoundsOscillate)
{
    const auto ls = build_lattice_string(LatticeStringSpec::cantor());
    const double D = LatticeStringSpec::cantor().dimension();
    const auto b = minkowski_content_bounds(ls, D, log_grid(1e-4, 1e-2, 400));
    EXPECT_GT(b.upper - b.lower, 1e-2);
    // the same oscillation reappears one period coarser
    const auto c = minkowski_content_bounds(ls, D, log_grid(3e-4, 3e-2, 400));
    EXPECT_NEAR(c.upper - c.lower, b.upper - b.lower, 5e-3);
}

TEST(Content, PeriodicityInScale)
{
    // V(ε) + 2ε is 3-self-similar: (V(ε/3) + 2ε/3) (ε/3)^(D-1) = (V(ε) + 2ε) ε^(D-1).
    const auto ls = build_lattice_string(LatticeStringSpec::cantor());
    const double D = LatticeStringSpec::cantor().dimension();
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(1e-3, 0.15);
    for (int i = 0; i < 100; ++i) {
        const double e = u(rng);
        const double a = (tube_volume_direct(ls, e).volume + 2 * e) * std::pow(e, D - 1);
        const double b = (tube_volume_direct(ls, e / 3).volume + 2 * e / 3) * std::pow(e / 3, D - 1);
        EXPECT_NEAR(a, b, 1e-12);
    }
}

TEST(Content, Validation)
{
    const auto ls = build_lattice_string(LatticeStringSpec::cantor());
    EXPECT_THROW(minkowski_content_bounds(ls, 1.5, {0.1}), InvalidArgument);
    EXPECT_THROW(minkowski_content_bounds(ls, 0.5, {}), InvalidArgument);
    EXPECT_THROW(log_grid(1, 0.5, 10), InvalidArgument);
}

TEST(Content, LatticeNeverMeasurable)
{
    const auto v = is_minkowski_measurable_lattice(LatticeStringSpec::cantor());
    EXPECT_FALSE(v.measurable);
    EXPECT_NEAR(v.witness.omega.real(), oracle::cantor_dimension(), 1e-15);
    EXPECT_NEAR(v.witness.omega.imag(), oracle::cantor_period(), 1e-14);
}
