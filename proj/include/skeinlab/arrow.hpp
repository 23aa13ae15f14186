#pragma once

#include <string>
#include <vector>

#include "skeinlab/bracket.hpp"
#include "skeinlab/diagram.hpp"
#include "skeinlab/laurent.hpp"

namespace skeinlab {

/// Cancels adjacent equal letters of the cyclic cusp word (letters 'L'/'R')
/// until it alternates; returns the zigzag index n (reduced length 2n).
/// Odd-length input signals a cusp bookkeeping bug upstream (OddLength).
int reduce_cusp_word(const std::string& word);

/// Cusp words of every loop of a resolved state, loops in canonical order.
/// A letter is recorded per orientation-reversing passage, 'R' when the
/// traversal exits at the next counterclockwise slot, 'L' at the previous.
std::vector<std::string> state_cusp_words(const Diagram& d, const std::vector<Smoothing>& choice);

struct ArrowValue {
  LaurentPoly raw;         // in A and K1, K2, ...
  LaurentPoly normalized;  // raw * (-A^3)^{-writhe}
};

/// Oriented state sum: bracket weights with each loop contributing K_n for
/// its reduced zigzag index (n >= 1).  Setting every K_i = 1 recovers the
/// bracket polynomial.
ArrowValue arrow_polynomial(const Diagram& d, int cap = kDefaultCrossingCap);

}  // namespace skeinlab
