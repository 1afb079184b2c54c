#include "fzeta/zeta.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace fzeta;

namespace {

Complex to_c(const oracle::CLD& z) { return {double(z.real()), double(z.imag())}; }

} // namespace

TEST(ClosedForm, MatchesOracleOffPoles)
{
    const auto spec = LatticeStringSpec::cantor();
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> re(-2, 3), im(-40, 40);
    for (int i = 0; i < 300; ++i) {
        const Complex s(re(rng), im(rng));
        const auto want = to_c(oracle::cantor_zeta_closed({s.real(), s.imag()}));
        const auto got = zeta_closed_form_lattice(spec, s).value;
        EXPECT_LE(std::abs(got - want), 1e-12 * std::max(1.0, std::abs(want))) << s;
    }
}

TEST(Truncated, WithinTailBoundOfClosedForm)
{
    const auto spec = LatticeStringSpec::cantor();
    const auto ls = build_lattice_string(spec);
    for (double sigma : {0.7, 1.0, 2.0}) {
        const Complex s(sigma, 4.2);
        const auto t = zeta_truncated(ls, s, 40);
        const auto c = zeta_closed_form_lattice(spec, s);
        EXPECT_TRUE(t.convergent);
        EXPECT_LE(std::abs(t.value - c.value), t.tail_bound + t.rounding_bound + 1e-15);
    }
    // Where truncation dominates rounding the bound is the majorant, so not loose.
    const auto t = zeta_truncated(ls, Complex(1.0, 0), 8);
    const auto c = zeta_closed_form_lattice(spec, Complex(1.0, 0));
    EXPECT_NEAR(t.tail_bound, std::abs(t.value - c.value), 1e-14);
}

TEST(Truncated, BelowAbscissaIsFlagged)
{
    const auto ls = build_lattice_string(LatticeStringSpec::cantor());
    const auto t = zeta_truncated(ls, Complex(0.5, 0), 30);
    EXPECT_FALSE(t.convergent);
    EXPECT_TRUE(std::isinf(t.tail_bound));
}

TEST(Truncated, ExtendedPrecisionAgreesWithDouble)
{
    const auto ls = build_lattice_string(LatticeStringSpec::cantor());
    const Complex s(1.3, -7.0);
    const auto d = zeta_truncated(ls, s, 100);
    const auto e = zeta_truncated(ls, to_extended(s), 100);
    EXPECT_NEAR(std::abs(to_complex(e.value) - d.value), 0.0, 1e-13);
    EXPECT_LT(e.rounding_bound, 1e-40);
}

TEST(Truncated, RawDataTailIsExactRemainder)
{
    const LengthSequence ls({{Rational(1, 2), 1}, {Rational(1, 4), 1}, {Rational(1, 8), 2}});
    const auto t = zeta_truncated(ls, Complex(1, 0), 2);
    EXPECT_NEAR(t.value.real(), 0.75, 1e-15);
    EXPECT_NEAR(t.tail_bound, 0.25, 1e-15);
    EXPECT_THROW(zeta_truncated(ls, Complex(1, 0), 4), InvalidArgument);
}

TEST(Poles, ClosedFormRefusesPoleNeighbourhood)
{
    const auto spec = LatticeStringSpec::cantor();
    const Complex D(spec.dimension(), spec.period());
    try {
        zeta_closed_form_lattice(spec, D);
        FAIL() << "expected PoleProximityError";
    } catch (const PoleProximityError& e) {
        EXPECT_NEAR(std::abs(e.nearest_pole() - D), 0, 1e-12);
    }
}

TEST(Poles, LatticeSetAndResidues)
{
    const auto spec = LatticeStringSpec::cantor();
    auto dims = complex_dimensions_lattice(spec, Window(-1, 2, -30, 30));
    const auto want = oracle::cantor_poles(30);
    ASSERT_EQ(dims.size(), want.size());
    for (std::size_t i = 0; i < dims.size(); ++i) {
        EXPECT_LE(std::abs(dims[i].omega - to_c(want[i])), 1e-12);
        EXPECT_NEAR(std::abs(dims[i].residue), 1 / (2 * std::log(3.0)), 1e-12);
        EXPECT_LE(std::abs(dims[i].residue - to_c(oracle::contour_residue(want[i]))), 1e-9);
    }
}

TEST(Poles, WindowMissingDimensionIsEmpty)
{
    const auto spec = LatticeStringSpec::cantor();
    EXPECT_TRUE(complex_dimensions_lattice(spec, Window(0.7, 2, -30, 30)).empty());
    EXPECT_EQ(complex_dimensions_lattice(spec, Window(0, 1, -0.1, 0.1)).size(), 1u);
}

TEST(Poles, OtherLatticeStrings)
{
    // r = 1/4, m = 3: poles log4(3) + 2πik/log 4, residue (1/4)^ω / (3 (1/4)^ω log 4)
    const LatticeStringSpec spec(Rational(1, 4), 3);
    const auto dims = complex_dimensions_lattice(spec, Window(0, 1, -10, 10));
    const double p = 2 * std::numbers::pi / std::log(4.0);
    EXPECT_EQ(dims.size(), 2 * static_cast<std::size_t>(std::floor(10 / p)) + 1);
    for (const auto& d : dims) {
        EXPECT_NEAR(d.omega.real(), std::log(3.0) / std::log(4.0), 1e-14);
        const Complex res = std::exp(d.omega * std::log(0.25)) / (3.0 * std::exp(-d.omega * std::log(4.0)) * std::log(4.0));
        EXPECT_LE(std::abs(d.residue - res), 1e-12);
    }
}

TEST(Poles, VerifyRequiresNearbyPole)
{
    const auto spec = LatticeStringSpec::cantor();
    EXPECT_THROW(verify_pole_numerically(spec, Complex(0.2, 1.0)), InvalidArgument);
}

TEST(Poles, SortedByImaginaryPart)
{
    std::vector<ComplexDimension> v{{{0.5, 2}, 1, true}, {{0.1, -3}, 1, true}, {{0.2, 2}, 1, true}};
    sort_poles(v);
    EXPECT_EQ(v[0].omega, Complex(0.1, -3));
    EXPECT_EQ(v[1].omega, Complex(0.2, 2));
    EXPECT_EQ(v[2].omega, Complex(0.5, 2));
}
