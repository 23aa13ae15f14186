#pragma once

#include "skeinlab/diagram.hpp"
#include "skeinlab/laurent.hpp"

namespace skeinlab {

/// Default ceiling on classical crossings for the 2^c state enumerations.
constexpr int kDefaultCrossingCap = 20;

struct StateSummary {
  std::vector<Smoothing> choice;
  int loop_count = 0;
  int tier = 0;  // number of B-smoothings
};

/// All 2^c states with loop counts, in tier order (by B-count, lexicographic
/// within a tier).
std::vector<StateSummary> enumerate_states(const Diagram& d, int cap = kDefaultCrossingCap);

/// <K> = sum over states of A^(#A - #B) d^(loops - 1), d = -A^2 - A^{-2}.
/// Virtual crossings contribute no weight and pass strands through.
LaurentPoly bracket_poly(const Diagram& d, int cap = kDefaultCrossingCap);

struct BracketValue {
  LaurentPoly bracket;  // in A
  LaurentPoly f;        // (-A^3)^{-writhe} * bracket
  LaurentPoly jones;    // f at A = t^{-1/4}
};

BracketValue normalized_jones(const Diagram& d, int cap = kDefaultCrossingCap);

}  // namespace skeinlab
