// Copyright 2026 The sqent Authors
// SPDX-License-Identifier: Apache-2.0

#include <sqent/error.hpp>
#include <sqent/fock_oracle.hpp>
#include <sqent/mode_transform.hpp>

#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include <gtest/gtest.h>

#include "support/test_support.hpp"

namespace sqent::fock {
namespace {

using modes::BogoliubovMap;

const std::array<int, 1> kFirstMode{0};

/// Mean occupation of the geometric spectrum p_n ~ t^n restricted to n <= cutoff.
double truncated_geometric_mean(double t, int cutoff) {
    double num = 0.0;
    double den = 0.0;
    double w = 1.0;
    for (int n = 0; n <= cutoff; ++n) {
        num += n * w;
        den += w;
        w *= t;
    }
    return num / den;
}

TEST(BuildLadder, QubitTruncation) {
    const LadderOperatorSet ops = build_ladder(1, 1);
    const ComplexMatrix a(ops.annihilation(0));
    ComplexMatrix expected = ComplexMatrix::Zero(2, 2);
    expected(0, 1) = 1.0;
    EXPECT_TRUE(a == expected);
}

TEST(BuildLadder, NumberOperatorDiagonal) {
    const int cutoff = 7;
    const LadderOperatorSet ops = build_ladder(1, cutoff);
    const ComplexMatrix n(ops.number(0));
    for (int k = 0; k <= cutoff; ++k) {
        EXPECT_NEAR(n(k, k).real(), k, 1e-14);
    }
    EXPECT_NEAR((n - ComplexMatrix(n.diagonal().asDiagonal())).norm(), 0.0, 0.0);
}

TEST(BuildLadder, DistinctModesCommute) {
    const LadderOperatorSet ops = build_ladder(2, 3);
    EXPECT_EQ(ComplexMatrix(ops.commutator(0, 1)).cwiseAbs().maxCoeff(), 0.0);
    EXPECT_EQ(ComplexMatrix(ops.commutator(1, 0)).cwiseAbs().maxCoeff(), 0.0);
}

TEST(BuildLadder, CanonicalCommutatorBelowBoundary) {
    const int cutoff = 5;
    const LadderOperatorSet ops = build_ladder(3, cutoff);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const ComplexMatrix c(ops.commutator(i, j));
            for (long r = 0; r < ops.dim(); ++r) {
                const auto occ_r = ops.occupations(r);
                if (*std::max_element(occ_r.begin(), occ_r.end()) >= cutoff - 1) {
                    continue;
                }
                for (long col = 0; col < ops.dim(); ++col) {
                    const auto occ_c = ops.occupations(col);
                    if (*std::max_element(occ_c.begin(), occ_c.end()) >= cutoff - 1) {
                        continue;
                    }
                    const double expected = (i == j && r == col) ? 1.0 : 0.0;
                    EXPECT_NEAR(std::abs(c(r, col) - expected), 0.0, 1e-12);
                }
            }
        }
    }
}

TEST(BuildLadder, SizeLimit) {
    EXPECT_THROW((void)build_ladder(4, 20), ResourceError);
    EXPECT_THROW((void)build_ladder(2, 10, 100), ResourceError);
    EXPECT_NO_THROW((void)build_ladder(2, 9, 100));
    EXPECT_THROW((void)build_ladder(0, 3), ValidationError);
}

TEST(NumericVacuum, IdentityMapGivesFockVacuum) {
    const LadderOperatorSet ops = build_ladder(3, 4);
    const TruncatedFockState vac = numeric_vacuum(ops, BogoliubovMap::identity(3));
    EXPECT_NEAR(std::abs(vac.amplitudes(0)), 1.0, 1e-14);
    EXPECT_NEAR(vac.amplitudes.tail(vac.amplitudes.size() - 1).norm(), 0.0, 1e-14);
    EXPECT_NEAR(vac.residual, 0.0, 1e-28);
    EXPECT_NEAR(vac.spectral_gap, 1.0, 1e-12);
}

TEST(NumericVacuum, TwoModeSqueezeAmplitudesAndOccupation) {
    const double r = 0.5;
    const LadderOperatorSet ops = build_ladder(2, 30);
    const TruncatedFockState vac = numeric_vacuum(ops, BogoliubovMap::two_mode_squeeze(r));
    const double c0 = std::abs(vac.amplitudes(0));
    for (int n = 0; n <= 30; ++n) {
        const Complex amp = vac.amplitudes(n * 31 + n);
        EXPECT_NEAR(std::abs(amp) / c0, std::pow(std::tanh(r), n), 1e-8) << n;
    }
    EXPECT_NEAR(expectation(ops, vac, ops.number(0)).real(), 0.271540317407621889, 1e-8);
    EXPECT_NEAR(expectation(ops, vac, ops.number(1)).real(), 0.271540317407621889, 1e-8);
}

TEST(NumericVacuum, OccupationAtStrongSqueezeAndCutoff40) {
    const LadderOperatorSet ops = build_ladder(2, 40);
    const TruncatedFockState vac = numeric_vacuum(ops, BogoliubovMap::two_mode_squeeze(1.0));
    EXPECT_NEAR(expectation(ops, vac, ops.number(0)).real(), 1.381097845541815730, 1e-5);
}

TEST(NumericVacuum, OccupationMatchesClosedForm) {
    const LadderOperatorSet ops = build_ladder(2, 30);
    for (double r : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        const BogoliubovMap map = BogoliubovMap::two_mode_squeeze(r);
        const TruncatedFockState vac = numeric_vacuum(ops, map);
        EXPECT_NEAR(expectation(ops, vac, ops.number(0)).real(), modes::vacuum_occupation(map, 0), 1e-6) << r;
    }
}

TEST(NumericVacuum, TruncationDeficitIsExactlyTheGeometricTail) {
    // Near r = 1 the cutoff-30 vacuum is the truncated geometric state, so its
    // occupation falls short of sinh^2 r by the known tail contribution.
    const LadderOperatorSet ops = build_ladder(2, 30);
    for (double r : {0.9, 0.95, 1.0}) {
        const TruncatedFockState vac = numeric_vacuum(ops, BogoliubovMap::two_mode_squeeze(r));
        const double t = std::tanh(r) * std::tanh(r);
        EXPECT_NEAR(expectation(ops, vac, ops.number(0)).real(), truncated_geometric_mean(t, 30), 1e-10);
    }
}

TEST(NumericVacuum, ForwardOccupationForAsymmetricBeta) {
    // b = U (C a + S a^dagger) with single-mode squeezes of different strength
    // and a real rotation U: beta = U S is not symmetric.
    const double r1 = 0.4;
    const double r2 = 0.2;
    const double th = 0.7;
    Eigen::Matrix2d u;
    u << std::cos(th), -std::sin(th), std::sin(th), std::cos(th);
    const Eigen::Matrix2d c = Eigen::Vector2d(std::cosh(r1), std::cosh(r2)).asDiagonal();
    const Eigen::Matrix2d s = Eigen::Vector2d(std::sinh(r1), std::sinh(r2)).asDiagonal();
    const BogoliubovMap map((u * c).cast<Complex>(), (u * s).cast<Complex>());
    ASSERT_TRUE(modes::check_canonical(map).canonical);

    const LadderOperatorSet ops = build_ladder(2, 30);
    const TruncatedFockState vac = numeric_vacuum(ops, map);
    const double numeric = expectation(ops, vac, ops.number(0)).real();
    EXPECT_NEAR(numeric, modes::vacuum_occupation_forward(map, 0), 1e-9);
    EXPECT_NEAR(numeric, std::sinh(r1) * std::sinh(r1), 1e-9);
    EXPECT_GT(std::abs(numeric - modes::vacuum_occupation(map, 0)), 1e-3);
}

TEST(NumericVacuum, ResidualShrinksWithCutoff) {
    const BogoliubovMap map = BogoliubovMap::two_mode_squeeze(0.8);
    VacuumOptions loose;
    loose.max_tail_mass = 1.0;
    double prev = INFINITY;
    for (int cutoff : {10, 20, 30}) {
        const TruncatedFockState vac = numeric_vacuum(build_ladder(2, cutoff), map, loose);
        EXPECT_LT(vac.residual, prev) << cutoff;
        prev = vac.residual;
    }
}

TEST(NumericVacuum, Errors) {
    const LadderOperatorSet ops = build_ladder(2, 10);
    EXPECT_THROW((void)numeric_vacuum(ops, BogoliubovMap::balanced_particle_hole_mix()), ValidationError);
    EXPECT_THROW((void)numeric_vacuum(ops, BogoliubovMap::two_mode_squeeze(2.0)), TruncationError);
    VacuumOptions strict;
    strict.min_gap = 10.0;
    EXPECT_THROW((void)numeric_vacuum(ops, BogoliubovMap::identity(2), strict), AmbiguityError);
    EXPECT_THROW((void)numeric_vacuum(ops, BogoliubovMap::identity(3)), ValidationError);
}

TEST(Expectation, NumberStates) {
    const LadderOperatorSet ops = build_ladder(1, 6);
    for (int n = 0; n <= 6; ++n) {
        TruncatedFockState s;
        s.modes = 1;
        s.cutoff = 6;
        s.amplitudes = ComplexVector::Unit(7, n);
        EXPECT_NEAR(expectation(ops, s, ops.number(0)).real(), n, 1e-14);
    }
    TruncatedFockState wrong;
    wrong.amplitudes = ComplexVector::Zero(3);
    EXPECT_THROW((void)expectation(ops, wrong, ops.number(0)), ValidationError);
}

TEST(Expectation, CommutatorOnLowStates) {
    auto rng = testing::make_rng(41);
    const int cutoff = 8;
    const LadderOperatorSet ops = build_ladder(2, cutoff);
    for (int trial = 0; trial < 10; ++trial) {
        TruncatedFockState s;
        s.modes = 2;
        s.cutoff = cutoff;
        s.amplitudes = ComplexVector::Zero(ops.dim());
        for (long idx = 0; idx < ops.dim(); ++idx) {
            const auto occ = ops.occupations(idx);
            if (occ[0] < cutoff - 1 && occ[1] < cutoff - 1) {
                s.amplitudes(idx) = testing::random_gaussian(rng, 1, 1)(0, 0);
            }
        }
        s.amplitudes.normalize();
        EXPECT_NEAR(std::abs(expectation(ops, s, ops.commutator(0, 0)) - 1.0), 0.0, 1e-12);
        EXPECT_NEAR(s.amplitudes.norm(), 1.0, 1e-10);
    }
}

TEST(BipartitionEntropy, Examples) {
    const LadderOperatorSet ops = build_ladder(2, 30);
    TruncatedFockState product;
    product.modes = 2;
    product.cutoff = 3;
    product.amplitudes = ComplexVector::Zero(16);
    product.amplitudes(1 * 4 + 2) = 1.0;
    EXPECT_NEAR(bipartition_entropy(product, kFirstMode), 0.0, 1e-14);

    const double r = std::atanh(std::sqrt(0.5));
    const TruncatedFockState sq = numeric_vacuum(ops, BogoliubovMap::two_mode_squeeze(r));
    EXPECT_NEAR(bipartition_entropy(sq, kFirstMode), 2.0 * std::numbers::ln2, 1e-6);

    const double t = 0.3;
    const modes::CondensatePair pair{std::sqrt(1.0 / (1.0 - t)), std::sqrt(t / (1.0 - t))};
    const auto pair_state = TruncatedFockState::from_two_mode(modes::condensate_pair_state(pair, 60));
    EXPECT_NEAR(bipartition_entropy(pair_state, kFirstMode),
                modes::geometric_entropy(modes::GeometricParameter(t)), 1e-8);
}

TEST(BipartitionEntropy, Errors) {
    TruncatedFockState s;
    s.modes = 2;
    s.cutoff = 1;
    s.amplitudes = ComplexVector::Unit(4, 0);
    const std::array<int, 0> none{};
    const std::array<int, 2> all{0, 1};
    const std::array<int, 1> bad{2};
    EXPECT_THROW((void)bipartition_entropy(s, none), ValidationError);
    EXPECT_THROW((void)bipartition_entropy(s, all), ValidationError);
    EXPECT_THROW((void)bipartition_entropy(s, bad), ValidationError);
}

TEST(BipartitionEntropy, ThreeModeSplit) {
    // squeeze on (0,1), vacuum on 2: cutting {0} or {0,2} gives the entropy of
    // the truncated geometric spectrum, cutting {2} gives 0
    const double strengths[] = {0.4, 0.0};
    const BogoliubovMap map = BogoliubovMap::squeeze_chain(strengths, 3);
    const TruncatedFockState vac = numeric_vacuum(build_ladder(3, 10), map);
    std::vector<double> weights;
    for (int n = 0; n <= 10; ++n) {
        weights.push_back(std::pow(std::tanh(0.4), 2 * n));
    }
    const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    for (double& w : weights) {
        w /= total;
    }
    const double expected = testing::entropy_of(weights);
    const std::array<int, 2> zero_two{0, 2};
    const std::array<int, 1> two{2};
    EXPECT_NEAR(bipartition_entropy(vac, kFirstMode), expected, 1e-10);
    EXPECT_NEAR(bipartition_entropy(vac, zero_two), expected, 1e-10);
    EXPECT_NEAR(bipartition_entropy(vac, two), 0.0, 1e-8);
}

TEST(OracleVsClosedForm, RandomTwoModeSqueezes) {
    auto rng = testing::make_rng(42);
    std::uniform_real_distribution<double> strength(0.0, 1.0);
    const LadderOperatorSet ops = build_ladder(2, 30);
    for (int trial = 0; trial < 20; ++trial) {
        const double r = strength(rng);
        const TruncatedFockState vac = numeric_vacuum(ops, BogoliubovMap::two_mode_squeeze(r));
        const double t = std::tanh(r) * std::tanh(r);
        EXPECT_NEAR(bipartition_entropy(vac, kFirstMode), modes::geometric_entropy(modes::GeometricParameter(t)),
                    1e-6)
            << "r=" << r;
        EXPECT_NEAR(vac.amplitudes.norm(), 1.0, 1e-10);
    }
}

} // namespace
} // namespace sqent::fock
