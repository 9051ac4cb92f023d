// Sweeps the initial-state weight |b|^2 through the Marinatto-Weber scheme:
// the prisoners' dilemma's symmetric equilibrium families, the battle of the
// sexes on both entangled pairings, and the stability-switching regions of two
// asymmetric 2x2 games.
#include <cstdio>
#include <vector>

#include "qgt/qgt.hpp"

using namespace qgt;

int main() {
  std::printf("=== prisoners' dilemma: symmetric equilibria by weight ===\n\n");
  std::vector<double> entrants;
  for (int k = 0; k <= 100; ++k) entrants.push_back(k / 100.0);
  for (double b2 : {0.0, 0.2, 1.0 / 3, 0.5, 0.6, 2.0 / 3, 0.8, 1.0}) {
    std::printf("b2 = %-7.4f", b2);
    for (const auto& family : mw_pd_symmetric_ne(b2)) {
      const TacticProfile star = family.profile_at(b2);
      const auto init = EntangledInitialState::from_b2(b2);
      const auto rep = verify_nash(preset_pd(), init, star);
      // The grid check certifies the equilibrium; the symmetric check also
      // applies the second-order stability condition at payoff ties.
      const auto ess = symmetric_ess_check(
          [&init](double self, double opp) {
            return mw_payoffs(preset_pd(), init, TacticProfile(self, opp)).first;
          },
          star.p, entrants);
      std::printf("  (%.4f, %.4f) nash=%s ess=%s [%s]", star.p, star.q,
                  rep.is_nash ? "yes" : "no ", ess.is_ess ? "yes" : "no ",
                  family.description.c_str());
    }
    std::printf("\n");
  }

  std::printf("\n=== battle of the sexes (3, 2, 1): equilibria by pairing ===\n\n");
  for (double b2 : {0.0, 0.3}) {
    for (auto pairing :
         {EntangledInitialState::Pairing::aligned, EntangledInitialState::Pairing::crossed}) {
      const auto init = EntangledInitialState::from_b2(b2, pairing);
      std::printf("b2 = %.1f %s:\n", b2,
                  pairing == EntangledInitialState::Pairing::aligned ? "aligned" : "crossed");
      for (const auto& rep : bos_ne(3, 2, 1, init))
        std::printf("  (%.6f, %.6f) %s\n", rep.candidate.p, rep.candidate.q,
                    rep.is_ess ? "ESS" : rep.is_nash ? "NE-not-ESS" : "not-NE");
    }
  }

  std::printf("\n=== stability switching at the (0,0) corner ===\n\n");
  std::vector<double> grid;
  for (int k = 0; k <= 20; ++k) grid.push_back(k / 20.0);
  const struct {
    const char* name;
    PayoffBimatrix m;
  } games[] = {{"game losing stability with weight", preset_game28()},
               {"game gaining stability with weight", preset_game29()}};
  for (const auto& g : games) {
    std::printf("%s:\n", g.name);
    for (const auto& iv : ess_region_scan(g.m, {0, 0}, grid).intervals)
      std::printf("  b2 in [%.2f, %.2f]: %s\n", iv.b2_lo, iv.b2_hi, to_string(iv.verdict));
  }
  return 0;
}
