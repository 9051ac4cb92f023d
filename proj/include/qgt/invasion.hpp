// Population contests between an incumbent strategy and a mutant: linear
// fitness in the mutant share, analytic invasion barrier, a discrete
// replicator trajectory, and the three Eisert case studies (one-parameter
// mutants against D; two-parameter mutants against D; two-parameter mutants
// against Q), with contest tables built from the closed-form payoffs.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qgt/eisert.hpp"
#include "qgt/equilibrium.hpp"

namespace qgt {

// Round-robin payoffs between incumbent A and mutant B (row meets column).
struct ContestTable {
  double P_AA = 0, P_AB = 0, P_BA = 0, P_BB = 0;
  void validate() const {
    if (!(std::isfinite(P_AA) && std::isfinite(P_AB) && std::isfinite(P_BA) &&
          std::isfinite(P_BB)))
      throw std::invalid_argument("ContestTable: entries must be finite");
  }
};

struct PopulationState {
  double F_A = 1, F_B = 0;
  PopulationState() = default;
  PopulationState(double fa, double fb) : F_A(fa), F_B(fb) {
    if (!(fa >= 0 && fa <= 1 && fb >= 0 && fb <= 1))
      throw std::domain_error("PopulationState: frequencies must lie in [0,1]");
    if (std::abs(fa + fb - 1) > 1e-12)
      throw std::domain_error("PopulationState: frequencies must sum to 1");
  }
  static PopulationState from_mutant_fraction(double eps) { return {1 - eps, eps}; }
};

// Mean payoffs (W_A, W_B) against the current population mix.
inline std::pair<double, double> fitness(const ContestTable& t, const PopulationState& pop) {
  t.validate();
  return {t.P_AA * pop.F_A + t.P_AB * pop.F_B, t.P_BA * pop.F_A + t.P_BB * pop.F_B};
}

// Supremum mutant share eps0 such that the incumbent strictly outperforms the
// mutant against every mix with mutant share in (0, eps0): 1 when that holds
// on all of (0,1), 0 when it already fails as the share tends to 0. The
// incumbent-minus-mutant fitness gap is linear in the share, so the crossing
// is exact.
inline double invasion_barrier(const ContestTable& t) {
  t.validate();
  const double gap_at_zero = t.P_AA - t.P_BA;
  const double gap_at_one = t.P_AB - t.P_BB;
  if (gap_at_zero < 0) return 0;
  if (gap_at_zero == 0) return gap_at_one > 0 ? 1.0 : 0.0;
  if (gap_at_one >= 0) return 1.0;
  return gap_at_zero / (gap_at_zero - gap_at_one);
}

// Discrete replicator dynamics on the mutant frequency: F_B <- F_B*W_B/mean
// with payoffs shifted once by 1 - min entry whenever the minimum is <= 0, so
// both fitnesses stay positive. Returns steps+1 frequencies starting at
// eps_init.
inline std::vector<double> replicator_trajectory(const ContestTable& table, double eps_init,
                                                 int steps) {
  table.validate();
  if (!(eps_init > 0 && eps_init < 1))
    throw std::domain_error("replicator_trajectory: eps_init must lie in (0,1)");
  if (steps < 1) throw std::domain_error("replicator_trajectory: steps must be >= 1");
  ContestTable t = table;
  const double lo = std::min(std::min(t.P_AA, t.P_AB), std::min(t.P_BA, t.P_BB));
  if (lo <= 0) {
    const double shift = 1 - lo;
    t.P_AA += shift;
    t.P_AB += shift;
    t.P_BA += shift;
    t.P_BB += shift;
  }
  std::vector<double> freq;
  freq.reserve(static_cast<std::size_t>(steps) + 1);
  double fb = eps_init;
  freq.push_back(fb);
  for (int s = 0; s < steps; ++s) {
    const auto [wa, wb] = fitness(t, PopulationState(1 - fb, fb));
    const double mean = (1 - fb) * wa + fb * wb;
    if (!(mean > 0)) throw std::runtime_error("replicator_trajectory: degenerate mean fitness");
    fb = std::clamp(fb * wb / mean, 0.0, 1.0);
    freq.push_back(fb);
  }
  return freq;
}

enum class InvasionCase { a, b, c };

struct InvasionReport {
  InvasionCase kind = InvasionCase::a;
  QuantumStrategy incumbent;
  QuantumStrategy mutant;
  ContestTable table;
  EquilibriumReport<int> ess_restriction;  // stability on {incumbent, mutant} alone
  double barrier = 0;
  std::vector<double> trajectory;  // mutant frequency per step
  bool resists = false;
  const char* verdict() const { return resists ? "resists" : "invaded"; }
};

// Runs one invasion case study. Case a pits a one-parameter mutant against
// the one-parameter incumbent D; case b a two-parameter mutant against D;
// case c a two-parameter mutant against Q. A mutant that coincides with the
// incumbent is rejected (for D that is theta = pi regardless of phi, whose
// unitary D ignores). The verdict is "resists" exactly when the barrier is
// positive: a zero barrier means arbitrarily small mutant shares already
// match or beat the incumbent, i.e. the mutant can invade.
inline InvasionReport case_study(InvasionCase kind, const QuantumStrategy& mutant,
                                 double eps_init = 0.01, int steps = 200) {
  InvasionReport rep;
  rep.kind = kind;
  rep.mutant = mutant;
  switch (kind) {
    case InvasionCase::a: {
      if (mutant.kind != QuantumStrategy::Kind::one_parameter)
        throw std::invalid_argument("case_study: case a takes a one-parameter mutant");
      if (mutant.theta == kPi)
        throw std::invalid_argument("case_study: mutant coincides with the incumbent D");
      rep.incumbent = QuantumStrategy::one_parameter(kPi);
      const auto f = closed_form_case_a(mutant.theta);
      rep.table = {f.d_vs_d, f.d_vs_theta, f.theta_vs_d, f.theta_vs_theta};
      break;
    }
    case InvasionCase::b: {
      if (mutant.kind != QuantumStrategy::Kind::two_parameter)
        throw std::invalid_argument("case_study: case b takes a two-parameter mutant");
      if (mutant.theta == kPi)
        throw std::invalid_argument("case_study: mutant coincides with the incumbent D");
      rep.incumbent = QuantumStrategy::D();
      const auto f = closed_form_case_b(mutant.theta, mutant.phi);
      rep.table = {f.d_vs_d, f.d_vs_u, f.u_vs_d, f.u_vs_u};
      break;
    }
    case InvasionCase::c: {
      if (mutant.kind != QuantumStrategy::Kind::two_parameter)
        throw std::invalid_argument("case_study: case c takes a two-parameter mutant");
      if (mutant.theta == 0 && mutant.phi == kPi / 2)
        throw std::invalid_argument("case_study: mutant coincides with the incumbent Q");
      rep.incumbent = QuantumStrategy::Q();
      const auto fc = closed_form_case_c(mutant.theta, mutant.phi);
      const auto fb = closed_form_case_b(mutant.theta, mutant.phi);
      rep.table = {fc.q_vs_q, fc.q_vs_u, fc.u_vs_q, fb.u_vs_u};
      break;
    }
  }
  rep.ess_restriction = symmetric_ess_check(
      [&rep](int self, int opp) {
        const double entries[2][2] = {{rep.table.P_AA, rep.table.P_AB},
                                      {rep.table.P_BA, rep.table.P_BB}};
        return entries[self][opp];
      },
      0, std::array<int, 1>{1});
  rep.barrier = invasion_barrier(rep.table);
  rep.trajectory = replicator_trajectory(rep.table, eps_init, steps);
  rep.resists = rep.barrier > 0;
  return rep;
}

}  // namespace qgt
