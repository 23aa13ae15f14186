#pragma once

#include <string>
#include <vector>

#include "skeinlab/laurent.hpp"

namespace skeinlab {

/// Small dense matrix over exact Laurent polynomials; entries live in the
/// coefficient ring extended by a formal i with i^2 = -1.
struct PolyMatrix {
  int rows = 0, cols = 0;
  std::vector<LaurentPoly> m;

  PolyMatrix() = default;
  PolyMatrix(int r, int c) : rows(r), cols(c), m(static_cast<size_t>(r) * static_cast<size_t>(c)) {}
  static PolyMatrix identity(int n);

  LaurentPoly& at(int r, int c) { return m[static_cast<size_t>(r) * static_cast<size_t>(cols) + static_cast<size_t>(c)]; }
  const LaurentPoly& at(int r, int c) const {
    return m[static_cast<size_t>(r) * static_cast<size_t>(cols) + static_cast<size_t>(c)];
  }

  PolyMatrix multiplied(const PolyMatrix& o) const;
  PolyMatrix tensored(const PolyMatrix& o) const;  // Kronecker product
  bool operator==(const PolyMatrix& o) const { return rows == o.rows && cols == o.cols && m == o.m; }
};

/// Rewrites powers of the formal unit: i^2 -> -1 (negative powers too).
LaurentPoly reduce_imaginary(const LaurentPoly& p);

/// Cup/cap matrix M and the crossing matrices, indexed R[(out pair)][(in pair)]
/// with pair index 2a+b.
struct RMatrixSet {
  PolyMatrix M;        // 2x2
  PolyMatrix R_plus;   // 4x4
  PolyMatrix R_minus;  // 4x4
};

/// M12 = iA, M21 = -iA^{-1}; R+- from the bracket expansion
/// R+ = A Id + A^{-1} |cup><cap|, R- its inverse.
RMatrixSet default_rmatrix();

struct MorseEvent {
  enum class Kind { cup, cap, cross_pos, cross_neg };
  Kind kind;
  int pos;
};

/// Morse presentation: strand count starts and ends at zero.
struct MorseWord {
  std::vector<MorseEvent> events;
};

/// Morse word of a braid trace closure: n nested cups, the letters, n caps.
MorseWord compile_morse(int n_strands, const std::vector<int>& word);

/// Exact left-to-right sweep contraction.  For a braid closure this equals
/// d * bracket of the diagram (the sweep counts the base loop).
LaurentPoly contract(const MorseWord& mw, const RMatrixSet& rm);

struct AxiomCheck {
  std::string name;
  bool pass;
  std::string detail;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool all_pass() const;
};

/// min/max cancellation, loop value, vertical R2, slide of an arc across a
/// max/min (twist compatibility of M with R), and the Yang-Baxter equation;
/// every residual is required to vanish identically.
AxiomReport verify_tensor_axioms(const RMatrixSet& rm);

}  // namespace skeinlab
