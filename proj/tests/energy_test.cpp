#include <gtest/gtest.h>

#include <random>

#include "seamcarve/energy.hpp"
#include "support.hpp"

namespace sc = seamcarve;

namespace {

sc::GrayField constant_gray(std::size_t w, std::size_t h, double v) {
    return sc::GrayField(w, h, std::vector<double>(w * h, v));
}

const sc::RampParams kPaper{0.0625, 4, 5, true};

} // namespace

TEST(PlusLr, ZeroOnConstantImage) {
    auto g = constant_gray(6, 4, 0.4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 6; ++j) EXPECT_EQ(sc::plus_lr(g, i, j), 0.0);
}

TEST(PlusLr, DifferenceOfHorizontalNeighbours) {
    sc::GrayField g(3, 3, {0.2, 0.5, 0.9, 0, 0, 0, 0, 0, 0});
    EXPECT_NEAR(sc::plus_lr(g, 0, 1), 0.7, 1e-15);
}

TEST(PlusLr, ClampsAtLeftBorder) {
    sc::GrayField g(3, 3, {0.3, 0.8, 0.1, 0, 0, 0, 0, 0, 0});
    EXPECT_NEAR(sc::plus_lr(g, 0, 0), 0.5, 1e-15);
}

TEST(PlusLu, DiagonalDifferenceAndFirstRowRule) {
    // I(0,1) = 0.9 above, I(1,0) = 0.1 to the left of (1,1).
    sc::GrayField g(3, 3, {0.0, 0.9, 0.0, 0.1, 0.5, 0.5, 0.2, 0.2, 0.2});
    EXPECT_NEAR(sc::plus_lu(g, 1, 1), 0.8, 1e-15);
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(sc::plus_lu(g, 0, j), 0.0);
    EXPECT_EQ(sc::plus_lu(constant_gray(4, 4, 0.7), 2, 2), 0.0);
}

TEST(MinusLu, DiagonalDifferenceAndLastRowRule) {
    // I(2,1) = 0.25 below, I(1,0) = 1.0 to the left of (1,1).
    sc::GrayField g(3, 3, {0.0, 0.0, 0.0, 1.0, 0.3, 0.3, 0.6, 0.25, 0.6});
    EXPECT_NEAR(sc::minus_lu(g, 1, 1), 0.75, 1e-15);
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(sc::minus_lu(g, 2, j), 0.0);
    EXPECT_EQ(sc::minus_lu(constant_gray(4, 4, 0.7), 1, 2), 0.0);
}

TEST(RampEnergy, PublishedParameters) {
    EXPECT_EQ(sc::ramp_energy(kPaper, 0, 0), 0.0);
    EXPECT_DOUBLE_EQ(sc::ramp_energy(kPaper, 5, 6), 0.125);
    EXPECT_EQ(sc::ramp_energy(kPaper, 3, 6), 0.0);
    EXPECT_DOUBLE_EQ(sc::ramp_energy(kPaper, 10, 3), 0.1875);
}

TEST(RampEnergy, MaximumIsAlphaTimesPeriodMinusOne) {
    double best = 0.0;
    for (std::size_t i = 0; i < 40; ++i)
        for (std::size_t j = 0; j < 40; ++j) best = std::max(best, sc::ramp_energy(kPaper, i, j));
    EXPECT_DOUBLE_EQ(best, 0.0625 * 3);
}

TEST(RampEnergy, IsPeriodicInBothAxes) {
    std::mt19937 rng(2);
    std::uniform_int_distribution<std::size_t> period(1, 9);
    std::uniform_real_distribution<double> alpha(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        sc::RampParams p{alpha(rng), period(rng), period(rng), true};
        for (std::size_t i = 0; i < 30; ++i)
            for (std::size_t j = 0; j < 30; ++j) {
                EXPECT_EQ(sc::ramp_energy(p, i, j), sc::ramp_energy(p, i + p.r2, j));
                EXPECT_EQ(sc::ramp_energy(p, i, j), sc::ramp_energy(p, i, j + p.r1));
            }
    }
}

TEST(RampEnergy, DisabledEqualsZeroAlpha) {
    sc::RampParams zero{0.0, 4, 5, true};
    sc::RampParams off{0.0625, 4, 5, false};
    for (std::size_t i = 0; i < 64; ++i)
        for (std::size_t j = 0; j < 64; ++j) {
            EXPECT_EQ(sc::ramp_energy(zero, i, j), 0.0);
            EXPECT_EQ(sc::ramp_energy(off, i, j), 0.0);
        }
}

TEST(BuildTransitionCosts, ConstantImageWithoutRampIsAllZero) {
    auto c = sc::build_transition_costs(constant_gray(7, 6, 0.3), sc::RampParams::disabled());
    for (const auto* plane : {&c.cost_lr, &c.cost_lu_left, &c.cost_lu_right, &c.node_extra})
        for (double v : plane->values()) EXPECT_EQ(v, 0.0);
}

TEST(BuildTransitionCosts, ConstantImageCarriesRampRows) {
    auto c = sc::build_transition_costs(constant_gray(9, 12, 0.3), kPaper);
    for (std::size_t i = 0; i < 12; ++i)
        for (std::size_t j = 0; j < 9; ++j) {
            const double expect = i % 5 == 0 ? 0.0625 * static_cast<double>(j % 4) : 0.0;
            EXPECT_EQ(c.node_extra(i, j), expect) << i << "," << j;
        }
}

TEST(BuildTransitionCosts, MatchesScalarOperatorsEverywhere) {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        auto g = sc::testing::random_gray(5, 5, rng);
        auto c = sc::build_transition_costs(g, kPaper);
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 5; ++j) {
                EXPECT_EQ(c.cost_lr(i, j), sc::plus_lr(g, i, j));
                EXPECT_EQ(c.cost_lu_left(i, j), sc::plus_lu(g, i, j));
                EXPECT_EQ(c.node_extra(i, j), sc::ramp_energy(kPaper, i, j));
                const double right = i == 0 ? 0.0 : sc::minus_lu(g, i - 1, std::min<std::size_t>(j + 1, 4));
                EXPECT_EQ(c.cost_lu_right(i, j), right);
                // In DP terms the right-diagonal step costs |I(i, j+1) - I(i-1, j)|.
                if (i > 0 && j + 1 < 5) EXPECT_EQ(c.cost_lu_right(i, j), std::abs(g(i, j + 1) - g(i - 1, j)));
            }
    }
}

TEST(BuildTransitionCosts, GradientTermsStayInUnitInterval) {
    std::mt19937 rng(23);
    auto g = sc::testing::random_gray(16, 11, rng);
    auto c = sc::build_transition_costs(g, kPaper);
    for (const auto* plane : {&c.cost_lr, &c.cost_lu_left, &c.cost_lu_right})
        for (double v : plane->values()) {
            EXPECT_GE(v, 0.0);
            EXPECT_LE(v, 1.0);
        }
    for (double v : c.node_extra.values()) EXPECT_GE(v, 0.0);
}

TEST(BuildTransitionCosts, PlusLrIsMirrorSymmetric) {
    std::mt19937 rng(29);
    auto g = sc::testing::random_gray(8, 6, rng);
    std::vector<double> mirrored(g.size());
    for (std::size_t r = 0; r < 6; ++r)
        for (std::size_t c = 0; c < 8; ++c) mirrored[r * 8 + (7 - c)] = g(r, c);
    sc::GrayField m(8, 6, mirrored);
    for (std::size_t r = 0; r < 6; ++r)
        for (std::size_t c = 0; c < 8; ++c) EXPECT_EQ(sc::plus_lr(g, r, c), sc::plus_lr(m, r, 7 - c));
}

TEST(BuildTransitionCosts, RampColumnMappingIsHonoured) {
    auto g = constant_gray(6, 6, 0.5);
    auto c = sc::build_transition_costs(g, kPaper, [](std::size_t, std::size_t j) { return j + 1; });
    for (std::size_t j = 0; j < 6; ++j) EXPECT_EQ(c.node_extra(0, j), sc::ramp_energy(kPaper, 0, j + 1));
}

TEST(BuildTransitionCosts, RejectsTinyFieldsAndBadParams) {
    EXPECT_THROW(sc::build_transition_costs(constant_gray(2, 5, 0.1), kPaper), sc::Error);
    EXPECT_THROW(sc::build_transition_costs(constant_gray(5, 2, 0.1), kPaper), sc::Error);
    EXPECT_THROW(sc::build_transition_costs(constant_gray(5, 5, 0.1), sc::RampParams{-1.0, 4, 5, true}), sc::Error);
    EXPECT_THROW(sc::build_transition_costs(constant_gray(5, 5, 0.1), sc::RampParams{0.1, 0, 5, true}), sc::Error);
}
