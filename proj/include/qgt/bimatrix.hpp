// 2x2 bimatrix games: payoff storage, the built-in presets, and classical
// mixed-strategy expectations.
#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace qgt {

// One cell of a bimatrix: payoffs to the row and column player.
struct PayoffPair {
  double row = 0;
  double col = 0;
};

inline bool operator==(const PayoffPair& a, const PayoffPair& b) {
  return a.row == b.row && a.col == b.col;
}

// Payoffs of a two-player, two-move game, addressed [row_move][col_move]
// with move 0 the first row/column.
struct PayoffBimatrix {
  std::array<std::array<PayoffPair, 2>, 2> cell{};

  const PayoffPair& at(int row_move, int col_move) const {
    if (row_move < 0 || row_move > 1 || col_move < 0 || col_move > 1)
      throw std::domain_error("PayoffBimatrix::at: moves must be 0 or 1");
    return cell[row_move][col_move];
  }

  // True when the column player's payoffs are the transpose of the row
  // player's, i.e. the game looks the same from both seats.
  bool is_symmetric(double tol = 1e-12) const {
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c)
        if (std::abs(cell[r][c].row - cell[c][r].col) > tol) return false;
    return true;
  }

  void validate() const {
    for (const auto& row : cell)
      for (const auto& p : row)
        if (!std::isfinite(p.row) || !std::isfinite(p.col))
          throw std::invalid_argument("PayoffBimatrix: entries must be finite");
  }
};

inline PayoffBimatrix make_bimatrix(PayoffPair rr, PayoffPair rc, PayoffPair cr,
                                    PayoffPair cc) {
  PayoffBimatrix m;
  m.cell[0][0] = rr;
  m.cell[0][1] = rc;
  m.cell[1][0] = cr;
  m.cell[1][1] = cc;
  m.validate();
  return m;
}

// ── presets ─────────────────────────────────────────────────────────────────

// Prisoners' dilemma with the usual (3,3)/(0,5)/(5,0)/(1,1) payoffs;
// move 0 = cooperate, move 1 = defect.
inline PayoffBimatrix preset_pd() {
  return make_bimatrix({3, 3}, {0, 5}, {5, 0}, {1, 1});
}

// Battle of the sexes [[ (a,b), (g,g) ], [ (g,g), (b,a) ]], requires a > b > g.
inline PayoffBimatrix preset_bos(double alpha = 3, double beta = 2, double gamma = 1) {
  if (!(alpha > beta && beta > gamma))
    throw std::domain_error("preset_bos: requires alpha > beta > gamma");
  return make_bimatrix({alpha, beta}, {gamma, gamma}, {gamma, gamma}, {beta, alpha});
}

// Asymmetric game whose (0,0) profile is a strict NE classically but loses
// strictness (and then equilibrium) as the initial-state weight shifts.
inline PayoffBimatrix preset_game28() {
  return make_bimatrix({1, 1}, {1, 2}, {2, 1}, {3, 2});
}

// Asymmetric game whose (0,0) profile is a weak NE classically and becomes
// strict as the initial-state weight shifts.
inline PayoffBimatrix preset_game29() {
  return make_bimatrix({2, 1}, {1, 0}, {1, 0}, {1, 0});
}

// ── classical play ──────────────────────────────────────────────────────────

// Expected payoffs when the row player uses move 0 with probability p and the
// column player uses move 0 with probability q.
inline std::pair<double, double> classical_mixed(const PayoffBimatrix& m, double p,
                                                 double q) {
  if (!(p >= 0 && p <= 1 && q >= 0 && q <= 1))
    throw std::domain_error("classical_mixed: probabilities must lie in [0,1]");
  const double w00 = p * q, w01 = p * (1 - q), w10 = (1 - p) * q, w11 = (1 - p) * (1 - q);
  const double pa = w00 * m.cell[0][0].row + w01 * m.cell[0][1].row +
                    w10 * m.cell[1][0].row + w11 * m.cell[1][1].row;
  const double pb = w00 * m.cell[0][0].col + w01 * m.cell[0][1].col +
                    w10 * m.cell[1][0].col + w11 * m.cell[1][1].col;
  return {pa, pb};
}

}  // namespace qgt
