#pragma once

#include <array>
#include <map>
#include <vector>

#include "skeinlab/diagram.hpp"
#include "skeinlab/laurent.hpp"

namespace skeinlab {

/// Faces of a connected planar classical diagram, with corner and edge-side
/// incidences.  Corner k of a crossing sits between slots k and k+1.
struct RegionComplex {
  int count = 0;
  std::map<std::pair<int, int>, int> corner_region;  // (crossing, corner) -> region
  std::vector<std::array<int, 2>> edge_regions;      // regions on the two sides of each edge
};

RegionComplex regions(const Diagram& d);  // NonPlanar when virtual crossings are present

/// Region-matrix determinant with the columns of two adjacent regions deleted
/// (the two sides of edge 0), before any normalization.
LaurentPoly alexander_raw_determinant(const Diagram& d);

/// The determinant normalized by +-t^N: exponent range centered at zero and
/// the lowest coefficient positive.
LaurentPoly alexander_poly(const Diagram& d);

/// One marker state: a choice, by the kept regions, of incident crossing
/// corners, one corner per crossing.
struct TrailState {
  std::vector<std::pair<int, int>> markers;  // (crossing, corner), by region order
  int sign = 1;                              // permutation sign
  LaurentPoly term;                          // sign * product of corner labels
  int trail_loops = 0;                       // loops of the marker-directed smoothing
};

struct TrailSum {
  LaurentPoly poly;  // signed sum of the terms = deleted-minor determinant
  std::vector<TrailState> states;
  std::pair<int, int> deleted;  // the deleted region pair
};

/// Enumerates all marker states for the given deleted adjacent-region pair
/// (default: the two sides of edge 0).
TrailSum trail_state_sum(const Diagram& d);
TrailSum trail_state_sum(const Diagram& d, std::pair<int, int> deleted_regions);

namespace detail {
/// Region-incidence matrix rows=crossings, cols=regions, with the corner
/// labels t, -t, 1, -1 assigned starting at corner `offset` and proceeding
/// counterclockwise (step +1) or clockwise (-1).  Exposed for calibration.
std::vector<std::vector<LaurentPoly>> alexander_matrix(const Diagram& d, int offset, int step);
LaurentPoly minor_determinant(const std::vector<std::vector<LaurentPoly>>& m,
                              std::pair<int, int> delete_cols);
}  // namespace detail

}  // namespace skeinlab
