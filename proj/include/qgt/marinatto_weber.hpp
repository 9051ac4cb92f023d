// Marinatto-Weber quantization: a fixed entangled two-qubit initial state,
// probabilistic identity/flip tactics, and payoffs from the diagonal of the
// resulting density matrix. Only |a|^2 and |b|^2 ever enter the payoffs.
#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>

#include "qgt/bimatrix.hpp"
#include "qgt/two_qubit.hpp"

namespace qgt {

// Initial state a|00> + b|11> (aligned) or a|01> + b|10> (crossed), with
// |a|^2 + |b|^2 = 1. "Crossed" is the same machinery on a relabeled basis:
// the second qubit starts flipped.
struct EntangledInitialState {
  enum class Pairing { aligned, crossed };

  Complex a{1, 0};
  Complex b{0, 0};
  Pairing pairing = Pairing::aligned;

  EntangledInitialState() = default;

  EntangledInitialState(Complex a_, Complex b_, Pairing pairing_ = Pairing::aligned)
      : a(a_), b(b_), pairing(pairing_) {
    if (std::abs(std::norm(a) + std::norm(b) - 1.0) > kLinAlgTol)
      throw std::invalid_argument("EntangledInitialState: |a|^2 + |b|^2 must equal 1");
  }

  // Real-amplitude state with |b|^2 = b2.
  static EntangledInitialState from_b2(double b2, Pairing pairing = Pairing::aligned) {
    if (!(b2 >= 0 && b2 <= 1))
      throw std::domain_error("EntangledInitialState: b2 must lie in [0,1]");
    return EntangledInitialState(Complex(std::sqrt(1 - b2), 0), Complex(std::sqrt(b2), 0),
                                 pairing);
  }

  double a2() const { return std::norm(a); }
  double b2() const { return std::norm(b); }

  Vec4 ket() const {
    Vec4 v{};
    if (pairing == Pairing::aligned) {
      v[0] = a;  // |00>
      v[3] = b;  // |11>
    } else {
      v[1] = a;  // |01>
      v[2] = b;  // |10>
    }
    return v;
  }
};

// Each player applies the identity with their probability (p for the row
// player, q for the column player) and the bit flip otherwise.
struct TacticProfile {
  double p = 0;
  double q = 0;

  TacticProfile() = default;
  TacticProfile(double p_, double q_) : p(p_), q(q_) {
    if (!(p >= 0 && p <= 1 && q >= 0 && q <= 1))
      throw std::domain_error("TacticProfile: probabilities must lie in [0,1]");
  }
};

// Mixture over the four identity/flip combinations applied to |psi><psi|.
inline Mat4 mw_final_density(const EntangledInitialState& init, const TacticProfile& t) {
  const Mat4 rho = density_from_state(init.ket());
  const Mat2 id = identity2();
  const Mat2 x = pauli_x();
  const Mat4 ops[4] = {tensor(id, id), tensor(id, x), tensor(x, id), tensor(x, x)};
  const double w[4] = {t.p * t.q, t.p * (1 - t.q), (1 - t.p) * t.q,
                       (1 - t.p) * (1 - t.q)};
  Mat4 out{};
  for (int k = 0; k < 4; ++k) {
    const Mat4 term = conjugate(ops[k], rho);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) out[i][j] += w[k] * term[i][j];
  }
  return out;
}

// Expected payoffs: bimatrix entries weighted by the diagonal of the final
// density matrix (outcome |rc> pays cell[r][c]).
inline std::pair<double, double> mw_payoffs(const PayoffBimatrix& m,
                                            const EntangledInitialState& init,
                                            const TacticProfile& t) {
  m.validate();
  const Mat4 rho = mw_final_density(init, t);
  double pa = 0, pb = 0;
  for (int k = 0; k < 4; ++k) {
    const double weight = rho[k][k].real();
    pa += weight * m.cell[k >> 1][k & 1].row;
    pb += weight * m.cell[k >> 1][k & 1].col;
  }
  return {pa, pb};
}

// Symmetric prisoners'-dilemma payoff to a player using tactic t_self against
// t_opp on the aligned state with weight b2. Literal expansion used as an
// independent check of (and convenience wrapper around) the density route.
inline double pd_symmetric_payoff(double t_self, double t_opp, double b2) {
  if (!(t_self >= 0 && t_self <= 1 && t_opp >= 0 && t_opp <= 1))
    throw std::domain_error("pd_symmetric_payoff: tactics must lie in [0,1]");
  if (!(b2 >= 0 && b2 <= 1))
    throw std::domain_error("pd_symmetric_payoff: b2 must lie in [0,1]");
  const double a2 = 1 - b2;
  const double p = t_self, q = t_opp;
  return 3 * (p * q * a2 + (1 - p) * (1 - q) * b2) +
         5 * (p * (1 - q) * b2 + q * (1 - p) * a2) +
         (p * q * b2 + (1 - p) * (1 - q) * a2);
}

}  // namespace qgt
