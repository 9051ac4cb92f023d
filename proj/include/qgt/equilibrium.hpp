// Equilibrium analysis for Marinatto-Weber games and symmetric strategy sets:
// unilateral payoff differences, grid Nash verification, evolutionary
// stability checks, analytic NE families, and b2 region scans.
//
// Conventions: a payoff difference ("delta") is always payoff-at-candidate
// minus payoff-after-unilateral-deviation, so nonnegative deltas mean the
// candidate is a best reply. |delta| <= tol counts as a tie; for asymmetric
// games an ESS is exactly a strict NE.
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qgt/bimatrix.hpp"
#include "qgt/eisert.hpp"
#include "qgt/marinatto_weber.hpp"

namespace qgt {

// ── unilateral payoff differences ───────────────────────────────────────────

// (P_A(star) - P_A(dev.p, star.q), P_B(star) - P_B(star.p, dev.q)): each
// player's loss (gain, if negative) from deviating alone to their component
// of `dev`.
inline std::pair<double, double> ne_payoff_differences(const PayoffBimatrix& m,
                                                       const EntangledInitialState& init,
                                                       const TacticProfile& star,
                                                       const TacticProfile& dev) {
  const auto at_star = mw_payoffs(m, init, star);
  const auto row_dev = mw_payoffs(m, init, TacticProfile(dev.p, star.q));
  const auto col_dev = mw_payoffs(m, init, TacticProfile(star.p, dev.q));
  return {at_star.first - row_dev.first, at_star.second - col_dev.second};
}

// ── reports ─────────────────────────────────────────────────────────────────

struct DeviationWitness {
  enum class Seat { row, col };
  Seat seat = Seat::row;
  double deviation = 0;  // the unilateral tactic the witness deviates to
  double delta = 0;      // candidate payoff minus deviation payoff
};

template <typename Candidate>
struct EquilibriumReport {
  Candidate candidate{};
  bool is_nash = false;
  bool is_strict = false;
  bool is_ess = false;
  // Worst (smallest) payoff difference over all deviations of each seat.
  double min_delta_row = std::numeric_limits<double>::infinity();
  double min_delta_col = std::numeric_limits<double>::infinity();
  std::vector<DeviationWitness> witnesses;  // the argmin deviations
  std::optional<EntangledInitialState> context;  // initial state, when relevant
};

// ── grid Nash verification ──────────────────────────────────────────────────

// Checks `star` against every unilateral deviation on a uniform grid of
// `resolution` points over [0,1] (endpoints included exactly). Deviations
// within 1e-12 of the candidate's own component are skipped, so strictness is
// judged against genuinely different tactics. ESS here follows the strict-NE
// rule for asymmetric games.
inline EquilibriumReport<TacticProfile> verify_nash(const PayoffBimatrix& m,
                                                    const EntangledInitialState& init,
                                                    const TacticProfile& star,
                                                    int resolution = 101,
                                                    double tol = kDefaultTol) {
  if (resolution < 101)
    throw std::domain_error("verify_nash: resolution must be at least 101");
  EquilibriumReport<TacticProfile> rep;
  rep.candidate = star;
  rep.context = init;
  const auto at_star = mw_payoffs(m, init, star);
  DeviationWitness worst_row{DeviationWitness::Seat::row, 0, 0};
  DeviationWitness worst_col{DeviationWitness::Seat::col, 0, 0};
  for (int k = 0; k < resolution; ++k) {
    const double dev = static_cast<double>(k) / (resolution - 1);
    if (std::abs(dev - star.p) > 1e-12) {
      const double delta =
          at_star.first - mw_payoffs(m, init, TacticProfile(dev, star.q)).first;
      if (delta < rep.min_delta_row) {
        rep.min_delta_row = delta;
        worst_row = {DeviationWitness::Seat::row, dev, delta};
      }
    }
    if (std::abs(dev - star.q) > 1e-12) {
      const double delta =
          at_star.second - mw_payoffs(m, init, TacticProfile(star.p, dev)).second;
      if (delta < rep.min_delta_col) {
        rep.min_delta_col = delta;
        worst_col = {DeviationWitness::Seat::col, dev, delta};
      }
    }
  }
  rep.witnesses = {worst_row, worst_col};
  rep.is_nash = rep.min_delta_row >= -tol && rep.min_delta_col >= -tol;
  rep.is_strict = rep.min_delta_row > tol && rep.min_delta_col > tol;
  rep.is_ess = rep.is_nash && rep.is_strict;
  return rep;
}

// ── symmetric evolutionary stability ────────────────────────────────────────

namespace detail {
struct SameStrategy {
  bool operator()(double a, double b) const { return std::abs(a - b) <= 1e-12; }
  bool operator()(const QuantumStrategy& a, const QuantumStrategy& b) const {
    return same_strategy(a, b);
  }
};
}  // namespace detail

// Evolutionary stability of `candidate` in a symmetric game given by
// payoff(self, opponent), tested against each strategy in `opponents`:
// either the candidate does strictly better against itself than the entrant
// does, or they tie and the candidate does strictly better against the
// entrant. Entrants equal to the candidate are skipped.
//
// In the returned report, min_delta_row is the worst first-condition margin
// P(cand,cand) - P(B,cand); min_delta_col is the worst second-condition
// margin P(cand,B) - P(B,B) among entrants that tie the first condition
// (infinity when none tie).
template <typename PayoffFn, typename Strategy, typename Range,
          typename SamePred = detail::SameStrategy>
EquilibriumReport<Strategy> symmetric_ess_check(PayoffFn&& payoff, const Strategy& candidate,
                                                const Range& opponents,
                                                double tol = kDefaultTol,
                                                SamePred&& same = SamePred{}) {
  EquilibriumReport<Strategy> rep;
  rep.candidate = candidate;
  const double self_payoff = payoff(candidate, candidate);
  bool nash = true, strict = true, ess = true;
  for (const auto& entrant : opponents) {
    if (same(entrant, candidate)) continue;
    const double first_margin = self_payoff - payoff(entrant, candidate);
    rep.min_delta_row = std::min(rep.min_delta_row, first_margin);
    if (first_margin > tol) continue;  // strictly repelled
    strict = false;
    if (first_margin < -tol) {  // entrant strictly better against the incumbent
      nash = false;
      ess = false;
      continue;
    }
    const double second_margin = payoff(candidate, entrant) - payoff(entrant, entrant);
    rep.min_delta_col = std::min(rep.min_delta_col, second_margin);
    if (!(second_margin > tol)) ess = false;
  }
  rep.is_nash = nash;
  rep.is_strict = strict;
  rep.is_ess = ess;
  return rep;
}

// ── analytic NE families ────────────────────────────────────────────────────

// A one-parameter family of symmetric equilibria: where it is valid as a
// function of the initial-state weight b2, and the profile it prescribes.
struct NEFamily {
  std::string description;
  std::function<bool(double)> valid_at;
  std::function<TacticProfile(double)> profile_at;
};

// The symmetric NE families of the Marinatto-Weber prisoners' dilemma on the
// aligned state, returned restricted to those valid at the given b2. The
// boundary weights use the families' own weak inequalities.
inline std::vector<NEFamily> mw_pd_symmetric_ne(double b2) {
  if (!(b2 >= 0 && b2 <= 1))
    throw std::domain_error("mw_pd_symmetric_ne: b2 must lie in [0,1]");
  static const std::vector<NEFamily> families = {
      {"both flip (p = q = 0)", [](double w) { return 3 * w <= 1; },
       [](double) { return TacticProfile(0, 0); }},
      {"both hold (p = q = 1)", [](double w) { return 3 * w >= 2; },
       [](double) { return TacticProfile(1, 1); }},
      {"interior p = q = 3*b2 - 1", [](double w) { return 3 * w > 1 && 3 * w < 2; },
       [](double w) { return TacticProfile(3 * w - 1, 3 * w - 1); }},
  };
  std::vector<NEFamily> valid;
  for (const auto& f : families)
    if (f.valid_at(b2)) valid.push_back(f);
  return valid;
}

// ── battle of the sexes ─────────────────────────────────────────────────────

// The analytic NE families of the Marinatto-Weber battle of the sexes,
// verified on the spot against the deviation grid. The aligned state carries
// the two pure coordination equilibria (strict, hence ESS) plus a mixed
// interior point; the crossed state's interior point is symmetric in the
// tactics and never strict.
inline std::vector<EquilibriumReport<TacticProfile>> bos_ne(double alpha, double beta,
                                                            double gamma,
                                                            const EntangledInitialState& init,
                                                            int resolution = 101,
                                                            double tol = kDefaultTol) {
  const PayoffBimatrix m = preset_bos(alpha, beta, gamma);  // validates ordering
  const double denom = alpha + beta - 2 * gamma;
  const double a2 = init.a2(), b2 = init.b2();
  std::vector<TacticProfile> candidates;
  if (init.pairing == EntangledInitialState::Pairing::aligned) {
    candidates.emplace_back(1, 1);
    candidates.emplace_back(0, 0);
    candidates.emplace_back(((alpha - gamma) * a2 + (beta - gamma) * b2) / denom,
                            ((alpha - gamma) * b2 + (beta - gamma) * a2) / denom);
  } else {
    const double r = ((alpha - gamma) * a2 + (beta - gamma) * b2) / denom;
    candidates.emplace_back(r, r);
  }
  std::vector<EquilibriumReport<TacticProfile>> reports;
  reports.reserve(candidates.size());
  for (const auto& c : candidates) reports.push_back(verify_nash(m, init, c, resolution, tol));
  return reports;
}

// ── NE candidate enumeration ────────────────────────────────────────────────

// Candidate equilibria of the Marinatto-Weber game at one initial state: the
// four pure tactic corners plus the interior indifference point when it
// exists. Each payoff is bilinear in (p,q), so the row player is indifferent
// where d P_A/d p = 0 (linear in q) and likewise for the column player; the
// interior candidate solves both. Candidates are returned in corner order
// (0,0),(0,1),(1,0),(1,1) then interior, without verification — feed them to
// verify_nash.
inline std::vector<TacticProfile> mw_ne_candidates(const PayoffBimatrix& m,
                                                   const EntangledInitialState& init) {
  std::vector<TacticProfile> out = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  const auto p00 = mw_payoffs(m, init, {0, 0});
  const auto p01 = mw_payoffs(m, init, {0, 1});
  const auto p10 = mw_payoffs(m, init, {1, 0});
  const auto p11 = mw_payoffs(m, init, {1, 1});
  // P(p,q) = c0 + c1 p + c2 q + c3 pq per player.
  const double a1 = p10.first - p00.first;
  const double a3 = p11.first - p10.first - p01.first + p00.first;
  const double b2c = p01.second - p00.second;
  const double b3 = p11.second - p10.second - p01.second + p00.second;
  if (std::abs(a3) > 1e-12 && std::abs(b3) > 1e-12) {
    const double q_star = -a1 / a3;   // row player indifferent
    const double p_star = -b2c / b3;  // column player indifferent
    const auto inside = [](double v) { return v > 1e-12 && v < 1 - 1e-12; };
    if (inside(p_star) && inside(q_star)) out.push_back({p_star, q_star});
  }
  return out;
}

// ── region scans ────────────────────────────────────────────────────────────

enum class StabilityVerdict { ess, ne_not_ess, not_ne };

inline const char* to_string(StabilityVerdict v) {
  switch (v) {
    case StabilityVerdict::ess: return "ESS";
    case StabilityVerdict::ne_not_ess: return "NE-not-ESS";
    case StabilityVerdict::not_ne: return "not-NE";
  }
  return "?";
}

struct RegionScanPoint {
  double b2 = 0;
  StabilityVerdict verdict = StabilityVerdict::not_ne;
  double min_delta_row = 0;
  double min_delta_col = 0;
};

struct RegionScanInterval {
  double b2_lo = 0;
  double b2_hi = 0;
  StabilityVerdict verdict = StabilityVerdict::not_ne;
};

struct RegionScanResult {
  std::vector<RegionScanPoint> points;       // one per grid value, ascending b2
  std::vector<RegionScanInterval> intervals;  // maximal runs of equal verdicts
};

// Classifies `star` at each initial-state weight in `b2_grid` (processed in
// ascending order) and merges equal consecutive verdicts into intervals.
inline RegionScanResult ess_region_scan(
    const PayoffBimatrix& m, const TacticProfile& star, std::vector<double> b2_grid,
    EntangledInitialState::Pairing pairing = EntangledInitialState::Pairing::aligned,
    int resolution = 101, double tol = kDefaultTol) {
  if (b2_grid.empty()) throw std::invalid_argument("ess_region_scan: empty b2 grid");
  std::sort(b2_grid.begin(), b2_grid.end());
  RegionScanResult out;
  out.points.reserve(b2_grid.size());
  for (const double b2 : b2_grid) {
    const auto rep = verify_nash(m, EntangledInitialState::from_b2(b2, pairing), star,
                                 resolution, tol);
    StabilityVerdict v = StabilityVerdict::not_ne;
    if (rep.is_nash) v = rep.is_strict ? StabilityVerdict::ess : StabilityVerdict::ne_not_ess;
    out.points.push_back({b2, v, rep.min_delta_row, rep.min_delta_col});
  }
  for (const auto& pt : out.points) {
    if (out.intervals.empty() || out.intervals.back().verdict != pt.verdict)
      out.intervals.push_back({pt.b2, pt.b2, pt.verdict});
    else
      out.intervals.back().b2_hi = pt.b2;
  }
  return out;
}

}  // namespace qgt
