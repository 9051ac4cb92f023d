// Eisert-style quantization of 2x2 games: strategy unitaries, the
// entangle-play-disentangle pipeline, and the closed-form payoff families used
// by the invasion case studies.
#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>

#include "qgt/bimatrix.hpp"
#include "qgt/two_qubit.hpp"

namespace qgt {

// ── strategies ──────────────────────────────────────────────────────────────

// A player's move: a one-parameter rotation U(theta) or a two-parameter
// unitary U(theta, phi) with theta in [0, pi], phi in [0, pi/2].
struct QuantumStrategy {
  enum class Kind { one_parameter, two_parameter };

  Kind kind = Kind::one_parameter;
  double theta = 0;
  double phi = 0;

  static QuantumStrategy one_parameter(double theta) {
    check_theta(theta);
    return {Kind::one_parameter, theta, 0};
  }

  static QuantumStrategy two_parameter(double theta, double phi) {
    check_theta(theta);
    if (!(phi >= 0 && phi <= kPi / 2))
      throw std::domain_error("QuantumStrategy: phi must lie in [0, pi/2]");
    return {Kind::two_parameter, theta, phi};
  }

  // Named moves: cooperate, defect, and the fully quantum move.
  static QuantumStrategy C() { return two_parameter(0, 0); }
  static QuantumStrategy D() { return two_parameter(kPi, 0); }
  static QuantumStrategy Q() { return two_parameter(0, kPi / 2); }

 private:
  static void check_theta(double theta) {
    if (!(theta >= 0 && theta <= kPi))
      throw std::domain_error("QuantumStrategy: theta must lie in [0, pi]");
  }
};

inline bool same_strategy(const QuantumStrategy& a, const QuantumStrategy& b) {
  return a.theta == b.theta && a.phi == b.phi;
}

// U(theta,phi) = [[e^{i phi} cos(theta/2), sin(theta/2)],
//                 [-sin(theta/2), e^{-i phi} cos(theta/2)]].
// cos(theta/2) is evaluated as sin((pi - theta)/2) so the endpoint unitaries
// come out exact: U(pi) has a true 0 where cos(pi/2) would leave 6e-17 dust,
// which keeps unentangled pure-strategy payoffs bit-exact.
inline Mat2 strategy_unitary(const QuantumStrategy& s) {
  const double c = std::sin(0.5 * (kPi - s.theta));
  const double sn = std::sin(0.5 * s.theta);
  const Complex phase = (s.phi == 0.0) ? Complex(1) : std::polar(1.0, s.phi);
  return {{{phase * c, Complex(sn)}, {Complex(-sn), std::conj(phase) * c}}};
}

// ── pipeline ────────────────────────────────────────────────────────────────

// Full density-matrix route: rho = J|CC><CC|J†, sigma = (U_A⊗U_B) rho (·)†,
// then projective measurement against the basis {J|xy>} and payoff expectation.
inline std::pair<double, double> eisert_payoffs(const PayoffBimatrix& m,
                                                const QuantumStrategy& alice,
                                                const QuantumStrategy& bob,
                                                double gamma = kPi / 2) {
  m.validate();
  const Mat4 j = entangler(gamma);  // validates gamma's range
  const Mat4 rho = density_from_state(mat_vec(j, basis_state(0)));
  const Mat4 play = tensor(strategy_unitary(alice), strategy_unitary(bob));
  const Mat4 sigma = conjugate(play, rho);
  const auto p = measure_probabilities(sigma, entangled_basis(gamma));
  double pa = 0, pb = 0;
  for (int k = 0; k < 4; ++k) {
    const PayoffPair& cell = m.cell[k >> 1][k & 1];
    pa += p[k] * cell.row;
    pb += p[k] * cell.col;
  }
  return {pa, pb};
}

// ── closed-form payoff families (maximally entangled PD) ────────────────────
//
// These are the analytic contest tables the invasion case studies are built
// from. Each is kept as a literal formula; the test suite compares them
// against the pipeline and writes any disagreement to a report instead of
// patching either side.

// Incumbent D against a one-parameter mutant U(theta).
struct CaseAClosedForm {
  double theta_vs_d = 0;  // mutant against incumbent
  double theta_vs_theta = 0;
  double d_vs_theta = 0;  // incumbent against mutant
  double d_vs_d = 0;
};

inline CaseAClosedForm closed_form_case_a(double theta) {
  const double c2 = std::cos(theta / 2) * std::cos(theta / 2);
  const double s2 = std::sin(theta / 2) * std::sin(theta / 2);
  CaseAClosedForm f;
  f.theta_vs_d = s2;
  f.theta_vs_theta = 2 * c2 + 5 * c2 * s2 + 1;
  f.d_vs_theta = 5 * c2 + s2;
  f.d_vs_d = 1;
  return f;
}

// Incumbent D against a two-parameter mutant U(theta, phi).
struct CaseBClosedForm {
  double d_vs_d = 0;
  double d_vs_u = 0;
  double u_vs_d = 0;
  double u_vs_u = 0;
};

inline CaseBClosedForm closed_form_case_b(double theta, double phi) {
  const double c2 = std::cos(theta / 2) * std::cos(theta / 2);
  const double s2 = std::sin(theta / 2) * std::sin(theta / 2);
  const double cp = std::cos(phi), sp = std::sin(phi);
  CaseBClosedForm f;
  f.d_vs_d = 1;
  f.d_vs_u = 5 * cp * cp * c2 + s2;
  f.u_vs_d = 5 * sp * sp * c2 + s2;
  const double t1 = std::cos(2 * phi) * c2;
  const double t3 = std::sin(2 * phi) * c2 + s2;
  f.u_vs_u = 3 * t1 * t1 + 5 * c2 * s2 * (sp - cp) * (sp - cp) + t3 * t3;
  return f;
}

// Incumbent Q against a two-parameter mutant U(theta, phi).
struct CaseCClosedForm {
  double q_vs_q = 0;
  double u_vs_q = 0;
  double q_vs_u = 0;
};

inline CaseCClosedForm closed_form_case_c(double theta, double phi) {
  const double c2 = std::cos(theta / 2) * std::cos(theta / 2);
  const double s2 = std::sin(theta / 2) * std::sin(theta / 2);
  const double cp = std::cos(phi);
  CaseCClosedForm f;
  f.q_vs_q = 3;
  f.u_vs_q = (3 - 2 * cp * cp) * c2;
  f.q_vs_u = (3 - 2 * cp * cp) * c2 + 5 * s2;
  return f;
}

}  // namespace qgt
