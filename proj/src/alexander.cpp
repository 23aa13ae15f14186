#include "skeinlab/alexander.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace skeinlab {

namespace {

// pinned by the calibration tests: labels t, -t, 1, -1 run counterclockwise
// from the corner counterclockwise-adjacent to the incoming under-edge
constexpr int kCornerOffset = 0;
constexpr int kCornerStep = 1;

LaurentPoly corner_label(int j) {
  switch (j) {
    case 0: return LaurentPoly::variable("t");
    case 1: return LaurentPoly::variable("t").scaled(-1);
    case 2: return LaurentPoly::constant(1);
    default: return LaurentPoly::constant(-1);
  }
}

// exact univariate division in Z[t]; the Bareiss quotients always divide
LaurentPoly poly_div_exact(const LaurentPoly& num, const LaurentPoly& den) {
  require(!den.is_zero(), "BadPolynomial", "division by zero polynomial");
  if (num.is_zero()) return num;
  std::map<int, BigInt> n;  // exponent (quarter units) -> coeff
  for (const auto& [e, c] : num.terms()) n[e.empty() ? 0 : e[0]] = c;
  std::map<int, BigInt> d;
  for (const auto& [e, c] : den.terms()) d[e.empty() ? 0 : e[0]] = c;
  const auto [dlo, dhi] = std::pair(d.begin()->first, d.rbegin()->first);
  const BigInt dlead = d.rbegin()->second;
  std::map<ExpVec, BigInt> q;
  while (!n.empty()) {
    const int nhi = n.rbegin()->first;
    const BigInt nlead = n.rbegin()->second;
    require(nhi >= dhi && nlead % dlead == 0, "BadPolynomial", "inexact polynomial division");
    const BigInt qc = nlead / dlead;
    const int qe = nhi - dhi;
    q[{qe}] += qc;
    for (const auto& [e, c] : d) {
      auto it = n.find(e + qe);
      BigInt nv = (it == n.end() ? BigInt(0) : it->second) - qc * c;
      if (nv == 0) {
        if (it != n.end()) n.erase(it);
      } else {
        n[e + qe] = nv;
      }
    }
  }
  (void)dlo;
  return LaurentPoly::from_terms({"t"}, std::move(q));
}

}  // namespace

RegionComplex regions(const Diagram& d) {
  require(d.virtual_count() == 0, "NonPlanar", "regions need a classical diagram");
  if (d.crossing_count() == 0) {
    // crossing-free circles: nested-free placement, inside faces plus the
    // outer one
    RegionComplex rc;
    rc.count = d.free_loops() + 1;
    return rc;
  }
  require(d.genus() == 0, "NonPlanar", "diagram is not planar");
  const FaceStructure fs = d.faces();
  RegionComplex rc;
  rc.count = fs.count;
  rc.corner_region = fs.corner_face;
  rc.edge_regions = fs.edge_faces;
  return rc;
}

namespace detail {

std::vector<std::vector<LaurentPoly>> alexander_matrix(const Diagram& d, int offset, int step) {
  const RegionComplex rc = regions(d);
  const int n = d.crossing_count();
  std::vector<std::vector<LaurentPoly>> m(static_cast<size_t>(n),
                                          std::vector<LaurentPoly>(static_cast<size_t>(rc.count)));
  for (int c = 0; c < n; ++c) {
    for (int j = 0; j < 4; ++j) {
      const int corner = ((offset + step * j) % 4 + 4) % 4;
      const int region = rc.corner_region.at({c, corner});
      m[static_cast<size_t>(c)][static_cast<size_t>(region)] =
          m[static_cast<size_t>(c)][static_cast<size_t>(region)] + corner_label(j);
    }
  }
  return m;
}

LaurentPoly minor_determinant(const std::vector<std::vector<LaurentPoly>>& m,
                              std::pair<int, int> delete_cols) {
  const int n = static_cast<int>(m.size());
  std::vector<std::vector<LaurentPoly>> a;
  for (int r = 0; r < n; ++r) {
    std::vector<LaurentPoly> row;
    for (int c = 0; c < static_cast<int>(m[static_cast<size_t>(r)].size()); ++c)
      if (c != delete_cols.first && c != delete_cols.second)
        row.push_back(m[static_cast<size_t>(r)][static_cast<size_t>(c)]);
    require(static_cast<int>(row.size()) == n, "BadDiagram", "minor is not square");
    a.push_back(std::move(row));
  }
  // fraction-free Bareiss elimination
  LaurentPoly prev = LaurentPoly::constant(1);
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a[static_cast<size_t>(k)][static_cast<size_t>(k)].is_zero()) {
      int p = -1;
      for (int r = k + 1; r < n; ++r)
        if (!a[static_cast<size_t>(r)][static_cast<size_t>(k)].is_zero()) {
          p = r;
          break;
        }
      if (p < 0) return LaurentPoly::zero();
      std::swap(a[static_cast<size_t>(k)], a[static_cast<size_t>(p)]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[static_cast<size_t>(i)][static_cast<size_t>(j)] = poly_div_exact(
            a[static_cast<size_t>(k)][static_cast<size_t>(k)] * a[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                a[static_cast<size_t>(i)][static_cast<size_t>(k)] * a[static_cast<size_t>(k)][static_cast<size_t>(j)],
            prev);
    prev = a[static_cast<size_t>(k)][static_cast<size_t>(k)];
  }
  LaurentPoly det = n == 0 ? LaurentPoly::constant(1) : a[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)];
  return sign > 0 ? det : -det;
}

}  // namespace detail

LaurentPoly alexander_raw_determinant(const Diagram& d) {
  require(d.oriented(), "Unoriented", "the region matrix needs an orientation");
  require(d.component_count() == 1, "MultiComponent", "region determinant computed for knots");
  if (d.crossing_count() == 0) return LaurentPoly::constant(1);
  const RegionComplex rc = regions(d);
  auto m = detail::alexander_matrix(d, kCornerOffset, kCornerStep);
  const auto del = rc.edge_regions[0];
  require(del[0] != del[1], "BadDiagram", "edge with one region on both sides");
  return detail::minor_determinant(m, {del[0], del[1]});
}

LaurentPoly alexander_poly(const Diagram& d) {
  LaurentPoly det = alexander_raw_determinant(d);
  if (det.is_zero()) return det;
  const auto [lo, hi] = det.exponent_range("t");
  det = det.shifted("t", -(lo + hi) / 2);
  // lowest coefficient positive
  if (det.terms().begin()->second < 0) det = -det;
  return det;
}

TrailSum trail_state_sum(const Diagram& d) {
  if (d.crossing_count() == 0) {
    TrailSum ts;
    ts.poly = LaurentPoly::constant(1);
    ts.states.push_back({{}, 1, LaurentPoly::constant(1), 1});
    ts.deleted = {0, 1};
    return ts;
  }
  const auto del = regions(d).edge_regions[0];
  return trail_state_sum(d, {del[0], del[1]});
}

TrailSum trail_state_sum(const Diagram& d, std::pair<int, int> deleted_regions) {
  require(d.oriented(), "Unoriented", "marker states need an orientation");
  require(d.component_count() == 1, "MultiComponent", "marker states computed for knots");
  const RegionComplex rc = regions(d);
  const int n = d.crossing_count();
  require(deleted_regions.first != deleted_regions.second && deleted_regions.first >= 0 &&
              deleted_regions.second >= 0 && deleted_regions.first < rc.count &&
              deleted_regions.second < rc.count,
          "BadDiagram", "deleted regions must be two distinct regions");

  // kept regions in id order row up against crossings
  std::vector<int> kept;
  for (int r = 0; r < rc.count; ++r)
    if (r != deleted_regions.first && r != deleted_regions.second) kept.push_back(r);
  require(static_cast<int>(kept.size()) == n, "BadDiagram", "region count mismatch");

  // region -> incident corners (crossing, corner, label index)
  std::vector<std::vector<std::pair<int, int>>> corners_of(kept.size());
  std::map<int, int> kept_pos;
  for (size_t i = 0; i < kept.size(); ++i) kept_pos[kept[static_cast<size_t>(i)]] = static_cast<int>(i);
  for (const auto& [key, region] : rc.corner_region) {
    auto it = kept_pos.find(region);
    if (it == kept_pos.end()) continue;
    corners_of[static_cast<size_t>(it->second)].push_back(key);
  }

  TrailSum out;
  out.deleted = deleted_regions;
  std::vector<int> assigned(kept.size(), -1);  // region-pos -> crossing
  std::vector<std::pair<int, int>> markers(kept.size());
  std::vector<bool> crossing_used(static_cast<size_t>(n), false);

  // the label index of a corner under the pinned convention
  auto label_index = [&](int corner) { return ((corner - kCornerOffset) * kCornerStep % 4 + 4) % 4; };

  std::function<void(size_t)> dfs = [&](size_t pos) {
    if (pos == kept.size()) {
      // permutation sign of region-pos -> crossing
      int sign = 1;
      for (size_t i = 0; i < assigned.size(); ++i)
        for (size_t j = i + 1; j < assigned.size(); ++j)
          if (assigned[i] > assigned[j]) sign = -sign;
      LaurentPoly term = LaurentPoly::constant(sign);
      for (const auto& [c, corner] : markers) term = term * corner_label(label_index(corner));
      // marker-directed smoothing: the reconnection separates the marked
      // corner, and every state yields a single closed trail
      std::vector<int> parent(static_cast<size_t>(4 * n));
      std::iota(parent.begin(), parent.end(), 0);
      std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x)
          x = parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
        return x;
      };
      auto unite = [&](int x, int y) { parent[static_cast<size_t>(find(x))] = find(y); };
      for (const Edge& e : d.edges())
        unite(4 * e.tail.crossing + e.tail.slot, 4 * e.head.crossing + e.head.slot);
      std::vector<int> marker_of(static_cast<size_t>(n), -1);
      for (const auto& [c, corner] : markers) marker_of[static_cast<size_t>(c)] = corner;
      for (int c = 0; c < n; ++c) {
        const int k = marker_of[static_cast<size_t>(c)];
        unite(4 * c + (k + 1) % 4, 4 * c + (k + 2) % 4);
        unite(4 * c + (k + 3) % 4, 4 * c + k);
      }
      int loops = 0;
      for (int p = 0; p < 4 * n; ++p)
        if (find(p) == p) ++loops;

      TrailState st;
      st.markers = markers;
      st.sign = sign;
      st.term = term;
      st.trail_loops = loops;
      out.poly = out.poly + term;
      out.states.push_back(std::move(st));
      return;
    }
    for (const auto& [c, corner] : corners_of[pos]) {
      if (crossing_used[static_cast<size_t>(c)]) continue;
      crossing_used[static_cast<size_t>(c)] = true;
      assigned[pos] = c;
      markers[pos] = {c, corner};
      dfs(pos + 1);
      crossing_used[static_cast<size_t>(c)] = false;
    }
  };
  dfs(0);
  return out;
}

}  // namespace skeinlab
