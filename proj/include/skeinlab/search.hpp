#pragma once

#include <string>
#include <vector>

#include "skeinlab/laurent.hpp"

namespace skeinlab {

struct UnitJonesHit {
  std::string gauss;           // code of the diagram
  int classical = 0;
  int virtual_crossings = 0;
  LaurentPoly arrow_normalized;
};

struct UnitJonesReport {
  int max_classical = 0;
  long long searched = 0;  // diagrams examined
  long long unit_f = 0;    // diagrams with normalized bracket 1
  std::vector<UnitJonesHit> hits;  // unit bracket but arrow != 1
};

/// Exhaustive walk over signed gauss codes with up to `max_classical`
/// classical crossings (every such code is a virtual diagram), reporting the
/// diagrams whose normalized bracket is 1 while the normalized arrow
/// polynomial is not.
UnitJonesReport search_unit_jones(int max_classical);

}  // namespace skeinlab
