#pragma once

#include <string>
#include <vector>

#include "skeinlab/diagram.hpp"

namespace skeinlab {

struct BraidFixture {
  std::string name;
  int strands;
  std::vector<int> word;
};

struct GaussFixture {
  std::string name;
  std::string code;
};

/// Ten classical knot fixtures used by the move fuzzer.
const std::vector<BraidFixture>& classical_fixtures();

/// Twenty-five braid closures with at most 12 crossings for the
/// cross-engine agreement runs.
const std::vector<BraidFixture>& corpus_braids();

/// Five virtual fixtures (gauss codes).
const std::vector<GaussFixture>& virtual_fixtures();

Diagram fixture_diagram(const BraidFixture& f);

}  // namespace skeinlab
