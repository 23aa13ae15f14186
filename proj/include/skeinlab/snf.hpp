#pragma once

#include <map>
#include <utility>
#include <vector>

#include "skeinlab/laurent.hpp"

namespace skeinlab {

/// Sparse integer matrix; only nonzero entries are stored.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::map<std::pair<int, int>, BigInt> entries;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c) {}

  void set(int r, int c, const BigInt& v);
  void add(int r, int c, const BigInt& v);
  BigInt at(int r, int c) const;

  IntMatrix multiplied(const IntMatrix& o) const;
  bool is_zero() const { return entries.empty(); }
};

/// Invariant factors d_1 | d_2 | ... (length min(rows, cols), zero-padded)
/// plus the rank (count of nonzero factors).
struct SmithForm {
  std::vector<BigInt> diagonal;
  int rank = 0;
};

/// Elimination with pivot = minimal nonzero absolute value and full reduction;
/// the divisibility chain is enforced during elimination.
SmithForm smith_normal_form(const IntMatrix& m);

int matrix_rank(const IntMatrix& m);

}  // namespace skeinlab
