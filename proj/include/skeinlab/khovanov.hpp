#pragma once

#include <map>
#include <vector>

#include "skeinlab/diagram.hpp"
#include "skeinlab/laurent.hpp"
#include "skeinlab/snf.hpp"

namespace skeinlab {

constexpr int kKhovanovCap = 12;

/// Bigraded free chain complex of a diagram: generators are loop labelings
/// over Z[x]/(x^2) per cube state, homological grading i = (#B) - n_minus,
/// quantum grading j = (#1 - #x) + #B + n_plus - 2 n_minus.  Differentials
/// are the signed merge/split maps per quantum degree.
class KhovanovComplex {
public:
  int n_plus = 0, n_minus = 0, crossings = 0;
  std::map<std::pair<int, int>, int> dims;                  // (i, j) -> rank of C^{i,j}
  std::map<std::pair<int, int>, IntMatrix> differentials;   // (i, j): C^{i,j} -> C^{i+1,j}

  int dim(int i, int j) const {
    auto it = dims.find({i, j});
    return it == dims.end() ? 0 : it->second;
  }
  const IntMatrix* differential(int i, int j) const {
    auto it = differentials.find({i, j});
    return it == differentials.end() ? nullptr : &it->second;
  }
  /// total rank of the tier-graded object C^tier (before the n_minus shift)
  std::map<int, long long> tier_ranks() const;
};

/// Builds the cube-of-resolutions complex; the sign of a resmoothing edge is
/// (-1)^(number of A-smoothings preceding the resolved crossing).  Checks
/// that every composite differential vanishes.
KhovanovComplex build_complex(const Diagram& d, int cap = kKhovanovCap);

struct HomologyEntry {
  int free_rank = 0;
  std::vector<BigInt> torsion;  // invariant factors > 1
  bool operator==(const HomologyEntry& o) const {
    return free_rank == o.free_rank && torsion == o.torsion;
  }
};

/// (i, j) -> homology group; entries with zero rank and no torsion omitted.
using HomologyTable = std::map<std::pair<int, int>, HomologyEntry>;

HomologyTable homology(const KhovanovComplex& c);

/// sum (-1)^i q^j rank C^{i,j} as an exact polynomial in q.
LaurentPoly graded_euler(const KhovanovComplex& c);

std::string homology_text(const HomologyTable& t);

}  // namespace skeinlab
