// Tests for equilibrium analysis: deviation differences against factored
// forms, grid Nash verification, symmetric evolutionary stability, analytic
// NE families, candidate enumeration, and b2 region scans.
#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "qgt/equilibrium.hpp"

namespace {

using namespace qgt;

using Pairing = EntangledInitialState::Pairing;

PayoffBimatrix random_bimatrix(std::mt19937& rng) {
  std::uniform_real_distribution<double> pay(-5, 5);
  return make_bimatrix({pay(rng), pay(rng)}, {pay(rng), pay(rng)}, {pay(rng), pay(rng)},
                       {pay(rng), pay(rng)});
}

// Factored form of the unilateral deviation differences for the aligned
// state: each difference is (star - dev) times a bracket linear in the other
// seat's tactic and the state weight.
std::pair<double, double> factored_differences(const PayoffBimatrix& m, double b2,
                                               const TacticProfile& star,
                                               const TacticProfile& dev) {
  const double a2 = 1 - b2;
  const double row_hold = m.cell[0][1].row - m.cell[1][1].row;   // held vs flipped reply
  const double row_flip = m.cell[1][0].row - m.cell[0][0].row;
  const double col_hold = m.cell[1][0].col - m.cell[1][1].col;
  const double col_flip = m.cell[0][1].col - m.cell[0][0].col;
  const double da = (star.p - dev.p) *
                    (a2 * row_hold + b2 * row_flip - star.q * (row_hold + row_flip));
  const double db = (star.q - dev.q) *
                    (a2 * col_hold + b2 * col_flip - star.p * (col_hold + col_flip));
  return {da, db};
}

TEST(DeviationDifferences, MatchTheFactoredFormOnRandomInstances) {
  std::mt19937 rng(53);
  std::uniform_real_distribution<double> prob(0, 1);
  for (int trial = 0; trial < 1000; ++trial) {
    const PayoffBimatrix m = random_bimatrix(rng);
    const double b2 = prob(rng);
    const TacticProfile star{prob(rng), prob(rng)}, dev{prob(rng), prob(rng)};
    const auto direct = ne_payoff_differences(m, EntangledInitialState::from_b2(b2), star,
                                              dev);
    const auto factored = factored_differences(m, b2, star, dev);
    EXPECT_NEAR(direct.first, factored.first, 1e-12);
    EXPECT_NEAR(direct.second, factored.second, 1e-12);
  }
}

TEST(DeviationDifferences, DilemmaBracketIsThreeB2MinusReplyPlusOne) {
  const PayoffBimatrix pd = preset_pd();
  std::mt19937 rng(59);
  std::uniform_real_distribution<double> prob(0, 1);
  for (int trial = 0; trial < 200; ++trial) {
    const double b2 = prob(rng);
    const TacticProfile star{prob(rng), prob(rng)}, dev{prob(rng), prob(rng)};
    const auto [da, db] = ne_payoff_differences(pd, EntangledInitialState::from_b2(b2),
                                                star, dev);
    EXPECT_NEAR(da, (star.p - dev.p) * (3 * b2 - (star.q + 1)), 1e-12);
    EXPECT_NEAR(db, (star.q - dev.q) * (3 * b2 - (star.p + 1)), 1e-12);
  }
}

TEST(DeviationDifferences, FirstSwitchingGameCornerSlopes) {
  const PayoffBimatrix m = preset_game28();
  // At star (0,0): row difference -p(3 b2 - 2), column difference -q(2 b2 - 1).
  for (double b2 : {0.0, 0.25, 0.5, 1.0})
    for (double dev : {0.3, 1.0}) {
      const auto [da, db] = ne_payoff_differences(m, EntangledInitialState::from_b2(b2),
                                                  {0, 0}, {dev, dev});
      EXPECT_NEAR(da, -dev * (3 * b2 - 2), 1e-12) << b2;
      EXPECT_NEAR(db, -dev * (2 * b2 - 1), 1e-12) << b2;
    }
  const auto [da, db] = ne_payoff_differences(m, EntangledInitialState::from_b2(0), {0, 0},
                                              {1, 1});
  EXPECT_NEAR(da, 2.0, 1e-15);
  EXPECT_NEAR(db, 1.0, 1e-15);
}

TEST(DeviationDifferences, SecondSwitchingGameDifferencesScaleWithTheWeight) {
  const PayoffBimatrix m = preset_game29();
  std::mt19937 rng(61);
  std::uniform_real_distribution<double> prob(0, 1);
  for (int trial = 0; trial < 200; ++trial) {
    const double b2 = prob(rng), p = prob(rng), q = prob(rng);
    const auto [da, db] = ne_payoff_differences(m, EntangledInitialState::from_b2(b2),
                                                {0, 0}, {p, q});
    EXPECT_NEAR(da, p * b2, 1e-12);
    EXPECT_NEAR(db, q * b2, 1e-12);
  }
}

TEST(VerifyNash, DilemmaCornersAcrossWeights) {
  const PayoffBimatrix pd = preset_pd();
  const auto low = verify_nash(pd, EntangledInitialState::from_b2(0.2), {0, 0});
  EXPECT_TRUE(low.is_nash);
  EXPECT_TRUE(low.is_strict);
  EXPECT_TRUE(low.is_ess);
  EXPECT_NEAR(low.min_delta_row, 0.004, 1e-12);  // bracket 3*b2-1 at the 0.01 step
  const auto interior = verify_nash(pd, EntangledInitialState::from_b2(0.5), {0.5, 0.5});
  EXPECT_TRUE(interior.is_nash);
  EXPECT_FALSE(interior.is_strict);
  EXPECT_FALSE(interior.is_ess);
  EXPECT_NEAR(interior.min_delta_row, 0.0, 1e-12);
  EXPECT_NEAR(interior.min_delta_col, 0.0, 1e-12);
  const auto wrong = verify_nash(pd, EntangledInitialState::from_b2(0.2), {1, 1});
  EXPECT_FALSE(wrong.is_nash);
  EXPECT_FALSE(wrong.is_ess);
}

TEST(VerifyNash, WitnessesRecordTheWorstDeviation) {
  const PayoffBimatrix pd = preset_pd();
  const auto rep = verify_nash(pd, EntangledInitialState::from_b2(0.2), {1, 1});
  ASSERT_EQ(rep.witnesses.size(), 2u);
  // Against a holding opponent the bracket is 3 b2 - 2 = -1.4, worst at a
  // full deviation to 0.
  EXPECT_EQ(rep.witnesses[0].seat, DeviationWitness::Seat::row);
  EXPECT_NEAR(rep.witnesses[0].deviation, 0.0, 1e-15);
  EXPECT_NEAR(rep.witnesses[0].delta, -1.4, 1e-12);
  EXPECT_NEAR(rep.min_delta_row, -1.4, 1e-12);
  EXPECT_EQ(rep.witnesses[1].seat, DeviationWitness::Seat::col);
  EXPECT_NEAR(rep.witnesses[1].delta, -1.4, 1e-12);
  ASSERT_TRUE(rep.context.has_value());
  EXPECT_NEAR(rep.context->b2(), 0.2, 1e-15);
}

TEST(VerifyNash, SkipsTheCandidateItselfWhenJudgingStrictness) {
  // At b2 = 0 the corner (0,0) is strictly best; the nearest genuine
  // deviation on the default grid is 0.01 with margin 0.01.
  const auto rep = verify_nash(preset_pd(), EntangledInitialState::from_b2(0), {0, 0});
  EXPECT_TRUE(rep.is_strict);
  EXPECT_NEAR(rep.min_delta_row, 0.01, 1e-12);
  EXPECT_NEAR(rep.witnesses[0].deviation, 0.01, 1e-12);
}

TEST(VerifyNash, RequiresAMinimumResolution) {
  const PayoffBimatrix pd = preset_pd();
  const auto init = EntangledInitialState::from_b2(0);
  EXPECT_THROW(verify_nash(pd, init, {0, 0}, 100), std::domain_error);
  EXPECT_NO_THROW(verify_nash(pd, init, {0, 0}, 101));
}

TEST(VerifyNash, StrictImpliesNashOnRandomInstances) {
  std::mt19937 rng(67);
  std::uniform_real_distribution<double> prob(0, 1);
  for (int trial = 0; trial < 60; ++trial) {
    const PayoffBimatrix m = random_bimatrix(rng);
    const auto rep = verify_nash(m, EntangledInitialState::from_b2(prob(rng)),
                                 {prob(rng), prob(rng)});
    if (rep.is_ess) {
      EXPECT_TRUE(rep.is_nash);
      EXPECT_TRUE(rep.is_strict);
    }
    if (rep.is_strict) {
      EXPECT_TRUE(rep.is_nash);
    }
    EXPECT_LE(rep.min_delta_row, rep.witnesses[0].delta + 1e-15);
  }
}

// ── symmetric evolutionary stability ────────────────────────────────────────

TEST(SymmetricEss, ClassicalDefectionRepelsEveryOneParameterMutant) {
  const PayoffBimatrix pd = preset_pd();
  const auto payoff = [&pd](const QuantumStrategy& self, const QuantumStrategy& opp) {
    return eisert_payoffs(pd, self, opp).first;
  };
  std::vector<QuantumStrategy> mutants;
  for (int k = 0; k <= 20; ++k)
    mutants.push_back(QuantumStrategy::one_parameter(k == 20 ? kPi : k * kPi / 20));
  const auto rep = symmetric_ess_check(payoff, QuantumStrategy::one_parameter(kPi), mutants);
  EXPECT_TRUE(rep.is_nash);
  EXPECT_TRUE(rep.is_strict);  // the incumbent itself is skipped
  EXPECT_TRUE(rep.is_ess);
  EXPECT_GT(rep.min_delta_row, 0.0);
}

TEST(SymmetricEss, PhaseRichMutantOverthrowsDefection) {
  const PayoffBimatrix pd = preset_pd();
  const auto payoff = [&pd](const QuantumStrategy& self, const QuantumStrategy& opp) {
    return eisert_payoffs(pd, self, opp).first;
  };
  const std::vector<QuantumStrategy> mutants = {QuantumStrategy::two_parameter(0, kPi / 3)};
  const auto rep = symmetric_ess_check(payoff, QuantumStrategy::D(), mutants);
  EXPECT_FALSE(rep.is_nash);
  EXPECT_FALSE(rep.is_ess);
  EXPECT_NEAR(rep.min_delta_row, 1 - 5 * std::sin(kPi / 3) * std::sin(kPi / 3), 1e-12);
}

TEST(SymmetricEss, TiedFirstConditionFallsThroughToTheSecond) {
  // At weight 1/3 every reply against a flipping opponent ties; stability
  // must come from the second condition, whose margin is the square of the
  // entrant's distance.
  const double b2 = 1.0 / 3;
  const auto payoff = [b2](double self, double opp) {
    return pd_symmetric_payoff(self, opp, b2);
  };
  std::vector<double> entrants;
  for (int k = 0; k <= 100; ++k) entrants.push_back(k / 100.0);
  const auto rep = symmetric_ess_check(payoff, 0.0, entrants);
  EXPECT_TRUE(rep.is_nash);
  EXPECT_FALSE(rep.is_strict);
  EXPECT_TRUE(rep.is_ess);
  EXPECT_NEAR(rep.min_delta_row, 0.0, 1e-12);
  EXPECT_NEAR(rep.min_delta_col, 1e-4, 1e-12);  // nearest entrant at 0.01
}

TEST(SymmetricEss, ExactTiesInBothConditionsAreNotStable) {
  const auto flat = [](double, double) { return 1.0; };
  const std::vector<double> entrants = {0.5, 1.0};
  const auto rep = symmetric_ess_check(flat, 0.0, entrants);
  EXPECT_TRUE(rep.is_nash);
  EXPECT_FALSE(rep.is_strict);
  EXPECT_FALSE(rep.is_ess);
  EXPECT_NEAR(rep.min_delta_col, 0.0, 1e-15);
}

// ── analytic families ───────────────────────────────────────────────────────

TEST(DilemmaFamilies, OneFamilyPerWeightRegion) {
  const auto low = mw_pd_symmetric_ne(0.2);
  ASSERT_EQ(low.size(), 1u);
  EXPECT_EQ(low[0].profile_at(0.2).p, 0.0);
  EXPECT_EQ(low[0].profile_at(0.2).q, 0.0);
  const auto mid = mw_pd_symmetric_ne(0.6);
  ASSERT_EQ(mid.size(), 1u);
  EXPECT_NEAR(mid[0].profile_at(0.6).p, 0.8, 1e-12);
  EXPECT_NEAR(mid[0].profile_at(0.6).q, 0.8, 1e-12);
  const auto high = mw_pd_symmetric_ne(0.8);
  ASSERT_EQ(high.size(), 1u);
  EXPECT_EQ(high[0].profile_at(0.8).p, 1.0);
  EXPECT_THROW(mw_pd_symmetric_ne(-0.1), std::domain_error);
  EXPECT_THROW(mw_pd_symmetric_ne(1.2), std::domain_error);
}

TEST(DilemmaFamilies, BoundaryWeightsKeepTheCornerFamilies) {
  const auto at_third = mw_pd_symmetric_ne(1.0 / 3);
  ASSERT_EQ(at_third.size(), 1u);  // 3*b2 ties the lower corner's weak bound
  EXPECT_EQ(at_third[0].profile_at(1.0 / 3).p, 0.0);
  const auto at_two_thirds = mw_pd_symmetric_ne(2.0 / 3);
  ASSERT_EQ(at_two_thirds.size(), 1u);
  EXPECT_EQ(at_two_thirds[0].profile_at(2.0 / 3).p, 1.0);
}

TEST(DilemmaFamilies, EachValidProfilePassesTheGridCheck) {
  for (double b2 : {0.0, 0.2, 0.45, 0.6, 0.8, 1.0}) {
    for (const auto& family : mw_pd_symmetric_ne(b2)) {
      const auto rep = verify_nash(preset_pd(), EntangledInitialState::from_b2(b2),
                                   family.profile_at(b2));
      EXPECT_TRUE(rep.is_nash) << family.description << " at b2=" << b2;
    }
  }
}

TEST(BattleOfTheSexes, AlignedStateCarriesTwoStablePlusOneMixed) {
  for (double b2 : {0.0, 0.3}) {
    const auto reports = bos_ne(3, 2, 1, EntangledInitialState::from_b2(b2));
    ASSERT_EQ(reports.size(), 3u);
    EXPECT_TRUE(reports[0].is_ess);  // both hold
    EXPECT_TRUE(reports[1].is_ess);  // both flip
    EXPECT_TRUE(reports[2].is_nash);
    EXPECT_FALSE(reports[2].is_strict);
    EXPECT_FALSE(reports[2].is_ess);
  }
  const auto classical = bos_ne(3, 2, 1, EntangledInitialState::from_b2(0));
  EXPECT_NEAR(classical[2].candidate.p, 2.0 / 3, 1e-12);
  EXPECT_NEAR(classical[2].candidate.q, 1.0 / 3, 1e-12);
  const auto shifted = bos_ne(3, 2, 1, EntangledInitialState::from_b2(0.3));
  EXPECT_NEAR(shifted[2].candidate.p, 1.7 / 3, 1e-12);
  EXPECT_NEAR(shifted[2].candidate.q, 1.3 / 3, 1e-12);
}

TEST(BattleOfTheSexes, CrossedStateHasOneSymmetricNeverStrictPoint) {
  for (double b2 : {0.0, 0.3, 0.5, 1.0}) {
    const auto reports =
        bos_ne(3, 2, 1, EntangledInitialState::from_b2(b2, Pairing::crossed));
    ASSERT_EQ(reports.size(), 1u) << b2;
    const auto& rep = reports[0];
    EXPECT_NEAR(rep.candidate.p, (2 * (1 - b2) + b2) / 3, 1e-12);
    EXPECT_EQ(rep.candidate.p, rep.candidate.q);
    EXPECT_TRUE(rep.is_nash) << b2;
    EXPECT_FALSE(rep.is_strict) << b2;
    EXPECT_FALSE(rep.is_ess) << b2;
  }
}

TEST(BattleOfTheSexes, RejectsPayoffsOutOfOrder) {
  EXPECT_THROW(bos_ne(2, 2, 1, EntangledInitialState::from_b2(0)), std::domain_error);
  EXPECT_THROW(bos_ne(3, 2, 2, EntangledInitialState::from_b2(0)), std::domain_error);
}

// ── candidate enumeration ───────────────────────────────────────────────────

TEST(Candidates, DilemmaHasOnlyTheFourCorners) {
  const auto c = mw_ne_candidates(preset_pd(), EntangledInitialState::from_b2(0));
  ASSERT_EQ(c.size(), 4u);  // the indifference point lies outside [0,1]
}

TEST(Candidates, FirstSwitchingGameHasNoInteriorPoint) {
  // The column player's payoff has no genuine bilinear term at weight 0.
  const auto c = mw_ne_candidates(preset_game28(), EntangledInitialState::from_b2(0));
  ASSERT_EQ(c.size(), 4u);
}

TEST(Candidates, BattleOfTheSexesInteriorMatchesTheAnalyticPoint) {
  const auto init = EntangledInitialState::from_b2(0.3);
  const auto c = mw_ne_candidates(preset_bos(), init);
  ASSERT_EQ(c.size(), 5u);
  EXPECT_NEAR(c[4].p, 1.7 / 3, 1e-12);
  EXPECT_NEAR(c[4].q, 1.3 / 3, 1e-12);
  // Corner ordering is fixed.
  EXPECT_EQ(c[0].p, 0.0);
  EXPECT_EQ(c[0].q, 0.0);
  EXPECT_EQ(c[1].q, 1.0);
  EXPECT_EQ(c[2].p, 1.0);
  EXPECT_EQ(c[3].p, 1.0);
  EXPECT_EQ(c[3].q, 1.0);
}

// ── region scans ────────────────────────────────────────────────────────────

TEST(RegionScan, FirstSwitchingGameLosesStabilityThenEquilibrium) {
  const auto scan = ess_region_scan(preset_game28(), {0, 0}, {0, 0.25, 0.5, 0.75, 1});
  ASSERT_EQ(scan.points.size(), 5u);
  EXPECT_EQ(scan.points[0].verdict, StabilityVerdict::ess);
  EXPECT_EQ(scan.points[1].verdict, StabilityVerdict::ess);
  EXPECT_EQ(scan.points[2].verdict, StabilityVerdict::ne_not_ess);
  EXPECT_EQ(scan.points[3].verdict, StabilityVerdict::not_ne);
  EXPECT_EQ(scan.points[4].verdict, StabilityVerdict::not_ne);
  // At the switching weight the column player's worst difference is an exact 0.
  EXPECT_NEAR(scan.points[2].min_delta_col, 0.0, 1e-12);
  EXPECT_GT(scan.points[2].min_delta_row, 0.0);
  ASSERT_EQ(scan.intervals.size(), 3u);
  EXPECT_EQ(scan.intervals[0].verdict, StabilityVerdict::ess);
  EXPECT_EQ(scan.intervals[0].b2_lo, 0.0);
  EXPECT_EQ(scan.intervals[0].b2_hi, 0.25);
  EXPECT_EQ(scan.intervals[1].verdict, StabilityVerdict::ne_not_ess);
  EXPECT_EQ(scan.intervals[1].b2_lo, 0.5);
  EXPECT_EQ(scan.intervals[2].verdict, StabilityVerdict::not_ne);
  EXPECT_EQ(scan.intervals[2].b2_hi, 1.0);
}

TEST(RegionScan, SecondSwitchingGameGainsStabilityWithEntanglement) {
  const auto scan = ess_region_scan(preset_game29(), {0, 0}, {0, 0.5, 1});
  ASSERT_EQ(scan.points.size(), 3u);
  EXPECT_EQ(scan.points[0].verdict, StabilityVerdict::ne_not_ess);
  EXPECT_NEAR(scan.points[0].min_delta_row, 0.0, 1e-12);
  EXPECT_NEAR(scan.points[0].min_delta_col, 0.0, 1e-12);
  EXPECT_EQ(scan.points[1].verdict, StabilityVerdict::ess);
  EXPECT_EQ(scan.points[2].verdict, StabilityVerdict::ess);
}

TEST(RegionScan, SortsItsGridAndValidatesInput) {
  const auto scan = ess_region_scan(preset_game29(), {0, 0}, {1, 0, 0.5});
  ASSERT_EQ(scan.points.size(), 3u);
  EXPECT_EQ(scan.points[0].b2, 0.0);
  EXPECT_EQ(scan.points[1].b2, 0.5);
  EXPECT_EQ(scan.points[2].b2, 1.0);
  EXPECT_THROW(ess_region_scan(preset_pd(), {0, 0}, {}), std::invalid_argument);
  EXPECT_THROW(ess_region_scan(preset_pd(), {0, 0}, {0.5, 1.5}), std::domain_error);
}

TEST(RegionScan, VerdictNamesAreStable) {
  EXPECT_STREQ(to_string(StabilityVerdict::ess), "ESS");
  EXPECT_STREQ(to_string(StabilityVerdict::ne_not_ess), "NE-not-ESS");
  EXPECT_STREQ(to_string(StabilityVerdict::not_ne), "not-NE");
}

}  // namespace
