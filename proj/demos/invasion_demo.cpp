// Walks the three invasion case studies of the quantized prisoners' dilemma:
// a one-parameter mutant against classical defection, a two-parameter mutant
// against defection, and a two-parameter mutant against the fully quantum
// incumbent. Prints each contest table, the invasion barrier, and where the
// replicator dynamic sends a 1% mutant seed.
#include <cstdio>

#include "qgt/qgt.hpp"

using namespace qgt;

namespace {

void show(const char* label, const InvasionReport& rep) {
  std::printf("%s\n", label);
  std::printf("  incumbent theta=%.4f phi=%.4f   mutant theta=%.4f phi=%.4f\n",
              rep.incumbent.theta, rep.incumbent.phi, rep.mutant.theta, rep.mutant.phi);
  std::printf("  contest table  [incumbent] %-7.4f %-7.4f\n", rep.table.P_AA, rep.table.P_AB);
  std::printf("                 [mutant]    %-7.4f %-7.4f\n", rep.table.P_BA, rep.table.P_BB);
  std::printf("  invasion barrier: %.4f\n", rep.barrier);
  std::printf("  mutant share: %.4f -> %.3e after %zu steps\n", rep.trajectory.front(),
              rep.trajectory.back(), rep.trajectory.size() - 1);
  std::printf("  verdict: %s\n\n", rep.verdict());
}

}  // namespace

int main() {
  std::printf("=== one-parameter mutants vs classical defection ===\n\n");
  show("mutant theta = pi/2:",
       case_study(InvasionCase::a, QuantumStrategy::one_parameter(kPi / 2)));

  std::printf("=== two-parameter mutants vs classical defection ===\n\n");
  show("mutant (theta, phi) = (0, 0.40) — below the phase threshold:",
       case_study(InvasionCase::b, QuantumStrategy::two_parameter(0, 0.40)));
  show("mutant (theta, phi) = (0, 0.60) — above the phase threshold:",
       case_study(InvasionCase::b, QuantumStrategy::two_parameter(0, 0.60)));
  std::printf("(the verdict flips at phi = asin(1/sqrt 5) = 0.4636...)\n\n");

  std::printf("=== two-parameter mutants vs the fully quantum incumbent ===\n\n");
  show("mutant (theta, phi) = (pi/2, pi/4):",
       case_study(InvasionCase::c, QuantumStrategy::two_parameter(kPi / 2, kPi / 4)));
  show("mutant (theta, phi) = (pi/2, 0):",
       case_study(InvasionCase::c, QuantumStrategy::two_parameter(kPi / 2, 0)));
  return 0;
}
