// Two-qubit linear algebra for 2x2 quantum games: fixed-size complex matrices,
// tensor products, the entangling gate, and projective measurement.
// Basis order throughout: |CC>, |CD>, |DC>, |DD> (first slot = row player).
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace qgt {

using Complex = std::complex<double>;
using Mat2 = std::array<std::array<Complex, 2>, 2>;
using Mat4 = std::array<std::array<Complex, 4>, 4>;
using Vec4 = std::array<Complex, 4>;

// Absolute tolerances used across the library.
inline constexpr double kLinAlgTol = 1e-12;       // exact linear-algebra identities
inline constexpr double kDefaultTol = 1e-9;       // payoff/equilibrium comparisons
inline constexpr double kBasisTol = 1e-10;        // orthonormality of measurement bases
inline constexpr double kNegativityAllowance = 1e-10;  // tolerated probability dust

inline constexpr double kPi = 3.14159265358979323846;

// ── elementary constructors ─────────────────────────────────────────────────

inline Mat2 identity2() {
  return {{{Complex(1), Complex(0)}, {Complex(0), Complex(1)}}};
}

inline Mat4 identity4() {
  Mat4 m{};
  for (int i = 0; i < 4; ++i) m[i][i] = Complex(1);
  return m;
}

inline Mat2 pauli_x() {
  return {{{Complex(0), Complex(1)}, {Complex(1), Complex(0)}}};
}

// ── products and adjoints ───────────────────────────────────────────────────

inline Mat2 matmul(const Mat2& a, const Mat2& b) {
  Mat2 r{};
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k)
      for (int j = 0; j < 2; ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}

inline Mat4 matmul(const Mat4& a, const Mat4& b) {
  Mat4 r{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k)
      for (int j = 0; j < 4; ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}

inline Vec4 mat_vec(const Mat4& m, const Vec4& v) {
  Vec4 r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i] += m[i][j] * v[j];
  return r;
}

inline Mat2 dagger(const Mat2& m) {
  Mat2 r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = std::conj(m[j][i]);
  return r;
}

inline Mat4 dagger(const Mat4& m) {
  Mat4 r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i][j] = std::conj(m[j][i]);
  return r;
}

inline Complex inner(const Vec4& a, const Vec4& b) {  // <a|b>
  Complex s{};
  for (int i = 0; i < 4; ++i) s += std::conj(a[i]) * b[i];
  return s;
}

inline double norm_squared(const Vec4& v) {
  double s = 0;
  for (const auto& c : v) s += std::norm(c);
  return s;
}

// ── validation helpers ──────────────────────────────────────────────────────

// Frobenius distance of U U† from the identity.
inline double unitarity_defect(const Mat2& u) {
  const Mat2 p = matmul(u, dagger(u));
  double s = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      s += std::norm(p[i][j] - (i == j ? Complex(1) : Complex(0)));
  return std::sqrt(s);
}

inline double unitarity_defect(const Mat4& u) {
  const Mat4 p = matmul(u, dagger(u));
  double s = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      s += std::norm(p[i][j] - (i == j ? Complex(1) : Complex(0)));
  return std::sqrt(s);
}

inline bool is_unitary(const Mat2& u, double tol = kLinAlgTol) {
  return unitarity_defect(u) <= tol;
}

inline bool is_unitary(const Mat4& u, double tol = kLinAlgTol) {
  return unitarity_defect(u) <= tol;
}

inline double hermiticity_defect(const Mat4& m) {
  double worst = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      worst = std::max(worst, std::abs(m[i][j] - std::conj(m[j][i])));
  return worst;
}

inline double trace_real(const Mat4& m) {
  double t = 0;
  for (int i = 0; i < 4; ++i) t += m[i][i].real();
  return t;
}

// ── tensor product ──────────────────────────────────────────────────────────

// Kronecker product of two single-qubit unitaries; rejects non-unitary operands.
inline Mat4 tensor(const Mat2& left, const Mat2& right) {
  if (!is_unitary(left))
    throw std::invalid_argument("tensor: left operand is not unitary");
  if (!is_unitary(right))
    throw std::invalid_argument("tensor: right operand is not unitary");
  Mat4 r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) r[2 * i + k][2 * j + l] = left[i][j] * right[k][l];
  return r;
}

// ── entangling gate ─────────────────────────────────────────────────────────

// J(gamma) = cos(gamma/2) I⊗I + i sin(gamma/2) F⊗F with F the full flip
// [[0,1],[-1,0]]; gamma in [0, pi/2]. J(0) is the identity; J(pi/2) sends
// |CC> to (|CC> + i|DD>)/sqrt(2).
inline Mat4 entangler(double gamma) {
  if (!(gamma >= 0.0 && gamma <= kPi / 2))
    throw std::domain_error("entangler: gamma must lie in [0, pi/2]");
  const Mat2 flip = {{{Complex(0), Complex(1)}, {Complex(-1), Complex(0)}}};
  const Mat4 ff = tensor(flip, flip);
  const double c = std::cos(gamma / 2);
  const double s = std::sin(gamma / 2);
  Mat4 j = identity4();
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) j[i][k] = c * j[i][k] + Complex(0, s) * ff[i][k];
  return j;
}

// ── states and densities ────────────────────────────────────────────────────

inline Vec4 basis_state(int index) {
  if (index < 0 || index > 3) throw std::domain_error("basis_state: index must be 0..3");
  Vec4 v{};
  v[index] = Complex(1);
  return v;
}

// |psi><psi| for a normalized four-level state.
inline Mat4 density_from_state(const Vec4& psi) {
  if (std::abs(norm_squared(psi) - 1.0) > kLinAlgTol)
    throw std::invalid_argument("density_from_state: state is not normalized");
  Mat4 rho{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) rho[i][j] = psi[i] * std::conj(psi[j]);
  return rho;
}

// U rho U†
inline Mat4 conjugate(const Mat4& u, const Mat4& rho) {
  return matmul(matmul(u, rho), dagger(u));
}

// ── measurement ─────────────────────────────────────────────────────────────

inline std::array<Vec4, 4> computational_basis() {
  return {basis_state(0), basis_state(1), basis_state(2), basis_state(3)};
}

// The four states J|xy>; at gamma = pi/2 these are the maximally entangled
// measurement directions of the quantized game.
inline std::array<Vec4, 4> entangled_basis(double gamma) {
  const Mat4 j = entangler(gamma);
  return {mat_vec(j, basis_state(0)), mat_vec(j, basis_state(1)), mat_vec(j, basis_state(2)),
          mat_vec(j, basis_state(3))};
}

// Projective outcome probabilities p_k = <psi_k| rho |psi_k>. The basis must be
// orthonormal; tiny negative dust (>= -1e-10) is clamped to 0, anything worse
// is a numeric failure rather than something to hide.
inline std::array<double, 4> measure_probabilities(const Mat4& rho,
                                                   const std::array<Vec4, 4>& basis) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const Complex g = inner(basis[i], basis[j]);
      const Complex want = (i == j) ? Complex(1) : Complex(0);
      if (std::abs(g - want) > kBasisTol)
        throw std::invalid_argument("measure_probabilities: basis is not orthonormal");
    }
  std::array<double, 4> p{};
  for (int k = 0; k < 4; ++k) {
    const Vec4 rv = mat_vec(rho, basis[k]);
    const double val = inner(basis[k], rv).real();
    if (val < -kNegativityAllowance || val > 1.0 + kNegativityAllowance)
      throw std::runtime_error("measure_probabilities: probability outside [0,1] beyond allowance");
    p[k] = std::min(1.0, std::max(0.0, val));
  }
  return p;
}

}  // namespace qgt
