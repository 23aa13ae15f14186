#include "skeinlab/moves.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>

namespace skeinlab {

namespace {

int over_in_slot(int sign) { return sign > 0 ? 1 : 3; }
int over_out_slot(int sign) { return sign > 0 ? 3 : 1; }

struct Builder {
  std::vector<Crossing> crossings;
  std::vector<Edge> edges;
  int free_loops = 0;
  bool oriented = true;

  explicit Builder(const Diagram& d)
      : crossings(d.crossings()), edges(d.edges()), free_loops(d.free_loops()), oriented(d.oriented()) {}

  Diagram build() { return Diagram(std::move(crossings), std::move(edges), free_loops, oriented); }
};

// (crossing, slot) -> (edge, is_tail)
std::map<std::pair<int, int>, std::pair<int, bool>> attach_map(const std::vector<Edge>& edges) {
  std::map<std::pair<int, int>, std::pair<int, bool>> at;
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    at[{edges[static_cast<size_t>(e)].tail.crossing, edges[static_cast<size_t>(e)].tail.slot}] = {e, true};
    at[{edges[static_cast<size_t>(e)].head.crossing, edges[static_cast<size_t>(e)].head.slot}] = {e, false};
  }
  return at;
}

/// Removes `gone` crossings, joining their strands straight through
/// ((0,2) and (1,3) pairs), and renumbers the survivors.
Diagram resplice_without(const Diagram& d, const std::set<int>& gone) {
  std::vector<Crossing> cs;
  std::vector<int> cmap(d.crossings().size(), -1);
  for (int c = 0; c < d.crossing_count(); ++c) {
    if (gone.count(c)) continue;
    cmap[static_cast<size_t>(c)] = static_cast<int>(cs.size());
    cs.push_back(d.crossings()[static_cast<size_t>(c)]);
  }
  auto att = attach_map(d.edges());
  int circles = d.free_loops();
  std::vector<bool> used(d.edges().size(), false);
  std::vector<Edge> es;

  auto step = [&](int e, bool fwd, int& e2, bool& fwd2, EndRef& terminal) -> bool {
    const EndRef p = fwd ? d.edges()[static_cast<size_t>(e)].head : d.edges()[static_cast<size_t>(e)].tail;
    if (!gone.count(p.crossing)) {
      terminal = p;
      return false;
    }
    auto [en, at_tail] = att.at({p.crossing, p.slot ^ 2});
    e2 = en;
    fwd2 = at_tail;
    return true;
  };

  for (int e0 = 0; e0 < static_cast<int>(d.edges().size()); ++e0) {
    if (used[static_cast<size_t>(e0)]) continue;
    used[static_cast<size_t>(e0)] = true;
    bool closed = false;
    EndRef head_end{}, tail_end{};
    {
      int e = e0;
      bool fwd = true;
      for (;;) {
        int e2;
        bool fwd2;
        if (!step(e, fwd, e2, fwd2, head_end)) break;
        if (e2 == e0 && fwd2) {
          closed = true;
          break;
        }
        used[static_cast<size_t>(e2)] = true;
        e = e2;
        fwd = fwd2;
      }
    }
    if (closed) {
      ++circles;
      continue;
    }
    {
      int e = e0;
      bool fwd = false;
      for (;;) {
        int e2;
        bool fwd2;
        if (!step(e, fwd, e2, fwd2, tail_end)) break;
        used[static_cast<size_t>(e2)] = true;
        e = e2;
        fwd = fwd2;
      }
    }
    es.push_back({{cmap[static_cast<size_t>(tail_end.crossing)], tail_end.slot},
                  {cmap[static_cast<size_t>(head_end.crossing)], head_end.slot}});
  }
  return Diagram(std::move(cs), std::move(es), circles, d.oriented());
}

// ---------------------------------------------------------------------------
// R1 family

Diagram apply_r1_plus(const Diagram& d, int edge, int sign, int side) {
  require(sign == 1 || sign == -1, "PatternNotFound", "kink sign must be +-1");
  Builder b(d);
  const int c = static_cast<int>(b.crossings.size());
  b.crossings.push_back({CrossKind::classical, sign});
  // port path along the strand: in0 -> out0 -> (loop) -> in1 -> out1
  int in0, out0, in1, out1;
  if (sign > 0) {
    if (side == 0) in0 = 0, out0 = 2, in1 = 1, out1 = 3;  // under pass first
    else in0 = 1, out0 = 3, in1 = 0, out1 = 2;            // over pass first
  } else {
    if (side == 0) in0 = 0, out0 = 2, in1 = 3, out1 = 1;
    else in0 = 3, out0 = 1, in1 = 0, out1 = 2;
  }
  if (edge < 0) {
    require(b.free_loops > 0, "PatternNotFound", "no free circle to kink");
    --b.free_loops;
    b.edges.push_back({{c, out0}, {c, in1}});  // inner loop
    b.edges.push_back({{c, out1}, {c, in0}});  // rest of the circle
  } else {
    require(edge < static_cast<int>(b.edges.size()), "PatternNotFound", "no such edge");
    const Edge old = b.edges[static_cast<size_t>(edge)];
    b.edges[static_cast<size_t>(edge)] = {old.tail, {c, in0}};
    b.edges.push_back({{c, out0}, {c, in1}});
    b.edges.push_back({{c, out1}, old.head});
  }
  return b.build();
}

std::optional<int> kink_loop_edge(const Diagram& d, int c) {
  for (int e = 0; e < static_cast<int>(d.edges().size()); ++e) {
    const Edge& ed = d.edges()[static_cast<size_t>(e)];
    if (ed.tail.crossing == c && ed.head.crossing == c && ((ed.tail.slot ^ ed.head.slot) & 1))
      return e;
  }
  return std::nullopt;
}

Diagram apply_r1_minus(const Diagram& d, int c, bool want_virtual) {
  require(c >= 0 && c < d.crossing_count(), "PatternNotFound", "no such crossing");
  const bool is_virtual = d.crossings()[static_cast<size_t>(c)].kind == CrossKind::virtual_;
  require(is_virtual == want_virtual, "PatternNotFound", "crossing kind mismatch");
  require(kink_loop_edge(d, c).has_value(), "PatternNotFound", "crossing carries no kink loop");
  return resplice_without(d, {c});
}

// ---------------------------------------------------------------------------
// R2 family

struct EndDesc {
  int strand;  // 0 = e, 1 = f
  bool is_in;
};

// Builds a crossing record from four counterclockwise ends.  For classical
// crossings `over` names the over strand and the slot layout is normalized so
// that slot0 is the under-in end.  Returns the rotation offset r such that
// slot k holds ends[(k + r) % 4].
std::pair<Crossing, int> make_crossing(const std::array<EndDesc, 4>& ends, int over) {
  if (over < 0) {
    // virtual: keep the given rotation; pairs (0,2), (1,3) must alternate
    require(ends[0].strand == ends[2].strand && ends[1].strand == ends[3].strand &&
                ends[0].strand != ends[1].strand,
            "PatternNotFound", "virtual crossing ends must alternate");
    return {{CrossKind::virtual_, 0}, 0};
  }
  int r = -1;
  for (int k = 0; k < 4; ++k) {
    if (ends[static_cast<size_t>(k)].strand != over && ends[static_cast<size_t>(k)].is_in) {
      r = k;
      break;
    }
  }
  require(r >= 0, "PatternNotFound", "no under-in end");
  const EndDesc& slot1 = ends[static_cast<size_t>((r + 1) % 4)];
  const int sign = (slot1.strand == over && slot1.is_in) ? 1 : -1;
  return {{CrossKind::classical, sign}, r};
}

Diagram apply_r2(const Diagram& d, int edge_e, int side_e, int edge_f, int side_f, int e_over,
                 bool virtual_pair) {
  require(edge_e >= 0 && edge_e < static_cast<int>(d.edges().size()) && edge_f >= 0 &&
              edge_f < static_cast<int>(d.edges().size()) && edge_e != edge_f,
          "PatternNotFound", "R2 needs two distinct edges");
  // alpha: e runs along its forward half-edge in the local picture (east);
  // beta: f runs along its forward half-edge (west).  side = 1 flips.
  const bool alpha = side_e == 0;
  const bool beta = side_f == 0;

  // c1 ends ccw: [f_W1? no: [f_E1, e_NW, f_W1, e_SE]; c2: [f_E2, e_NE, f_W2, e_SW]
  // strand tags: 0 = e, 1 = f
  const std::array<EndDesc, 4> c1_ends = {EndDesc{1, beta}, EndDesc{0, alpha}, EndDesc{1, !beta},
                                          EndDesc{0, !alpha}};
  const std::array<EndDesc, 4> c2_ends = {EndDesc{1, beta}, EndDesc{0, !alpha}, EndDesc{1, !beta},
                                          EndDesc{0, alpha}};
  const int over_tag = virtual_pair ? -1 : (e_over ? 0 : 1);
  auto [x1, r1] = make_crossing(c1_ends, over_tag);
  auto [x2, r2] = make_crossing(c2_ends, over_tag);

  Builder b(d);
  const int c1 = static_cast<int>(b.crossings.size());
  b.crossings.push_back(x1);
  const int c2 = c1 + 1;
  b.crossings.push_back(x2);

  // slot of a named end: ends[(k + r) % 4] sits at slot k  =>  end j at slot (j - r) mod 4
  auto slot1 = [&](int j) { return ((j - r1) % 4 + 4) % 4; };
  auto slot2 = [&](int j) { return ((j - r2) % 4 + 4) % 4; };
  // end indices: c1: 0=f_E1 1=e_NW 2=f_W1 3=e_SE ; c2: 0=f_E2 1=e_NE 2=f_W2 3=e_SW

  // port path along e: alpha: e_NW(in@c1), e_SE(out@c1), e_SW(in@c2), e_NE(out@c2)
  std::array<EndRef, 4> epath, fpath;
  if (alpha)
    epath = {EndRef{c1, slot1(1)}, EndRef{c1, slot1(3)}, EndRef{c2, slot2(3)}, EndRef{c2, slot2(1)}};
  else
    epath = {EndRef{c2, slot2(1)}, EndRef{c2, slot2(3)}, EndRef{c1, slot1(3)}, EndRef{c1, slot1(1)}};
  if (beta)
    fpath = {EndRef{c2, slot2(0)}, EndRef{c2, slot2(2)}, EndRef{c1, slot1(0)}, EndRef{c1, slot1(2)}};
  else
    fpath = {EndRef{c1, slot1(2)}, EndRef{c1, slot1(0)}, EndRef{c2, slot2(2)}, EndRef{c2, slot2(0)}};

  const Edge old_e = b.edges[static_cast<size_t>(edge_e)];
  const Edge old_f = b.edges[static_cast<size_t>(edge_f)];
  b.edges[static_cast<size_t>(edge_e)] = {old_e.tail, epath[0]};
  b.edges.push_back({epath[1], epath[2]});
  b.edges.push_back({epath[3], old_e.head});
  b.edges[static_cast<size_t>(edge_f)] = {old_f.tail, fpath[0]};
  b.edges.push_back({fpath[1], fpath[2]});
  b.edges.push_back({fpath[3], old_f.head});
  return b.build();
}

bool r2inv_pattern(const Diagram& d, int ep, int eq, bool virtual_pair) {
  if (ep < 0 || eq < 0 || ep == eq || ep >= static_cast<int>(d.edges().size()) ||
      eq >= static_cast<int>(d.edges().size()))
    return false;
  const Edge& p = d.edges()[static_cast<size_t>(ep)];
  const Edge& q = d.edges()[static_cast<size_t>(eq)];
  const int c1 = p.tail.crossing, c2 = p.head.crossing;
  if (c1 == c2) return false;
  const std::set<int> qc = {q.tail.crossing, q.head.crossing};
  if (qc != std::set<int>{c1, c2}) return false;
  const Crossing& x1 = d.crossings()[static_cast<size_t>(c1)];
  const Crossing& x2 = d.crossings()[static_cast<size_t>(c2)];
  if (virtual_pair) {
    if (x1.kind != CrossKind::virtual_ || x2.kind != CrossKind::virtual_) return false;
    // p and q must ride different strands at both crossings
    auto strand = [](int slot) { return slot & 1; };
    const int q1 = q.tail.crossing == c1 ? q.tail.slot : q.head.slot;
    const int q2 = q.tail.crossing == c2 ? q.tail.slot : q.head.slot;
    return strand(p.tail.slot) != strand(q1) && strand(p.head.slot) != strand(q2);
  }
  if (x1.kind != CrossKind::classical || x2.kind != CrossKind::classical) return false;
  if (x1.sign != -x2.sign) return false;
  // p rides the over strand out of c1 into c2; q rides the under strand
  if (p.tail.slot != over_out_slot(x1.sign) || p.head.slot != over_in_slot(x2.sign)) return false;
  const bool q_under_both =
      (q.tail.crossing == c1 ? q.tail.slot == 2 : q.head.slot == 0) &&
      (q.tail.crossing == c2 ? q.tail.slot == 2 : q.head.slot == 0);
  return q_under_both;
}

Diagram apply_r2_inv(const Diagram& d, int ep, int eq, bool virtual_pair) {
  require(r2inv_pattern(d, ep, eq, virtual_pair), "PatternNotFound", "no bigon at the site");
  const Edge& p = d.edges()[static_cast<size_t>(ep)];
  return resplice_without(d, {p.tail.crossing, p.head.crossing});
}

// ---------------------------------------------------------------------------
// triangle moves

struct TriangleSide {
  int edge;
  int first_c, second_c;  // along the edge direction
};

// slides the strand of side s across the crossing shared by u and v
Diagram apply_triangle(const Diagram& d, int es, int eu, int ev) {
  const auto& edges = d.edges();
  auto side_of = [&](int e) -> TriangleSide {
    require(e >= 0 && e < static_cast<int>(edges.size()), "PatternNotFound", "no such edge");
    return {e, edges[static_cast<size_t>(e)].tail.crossing, edges[static_cast<size_t>(e)].head.crossing};
  };
  TriangleSide s = side_of(es), u = side_of(eu), v = side_of(ev);
  std::set<int> su = {s.first_c, s.second_c}, uu = {u.first_c, u.second_c}, vv = {v.first_c, v.second_c};
  require(su.size() == 2 && uu.size() == 2 && vv.size() == 2, "PatternNotFound",
          "triangle sides must join distinct crossings");
  // X on s&u, Y on s&v, Z on u&v
  std::vector<int> xs, ys, zs;
  std::set_intersection(su.begin(), su.end(), uu.begin(), uu.end(), std::back_inserter(xs));
  std::set_intersection(su.begin(), su.end(), vv.begin(), vv.end(), std::back_inserter(ys));
  std::set_intersection(uu.begin(), uu.end(), vv.begin(), vv.end(), std::back_inserter(zs));
  require(xs.size() == 1 && ys.size() == 1 && zs.size() == 1, "PatternNotFound",
          "sides do not form a triangle");
  const int X = xs[0], Y = ys[0], Z = zs[0];
  require(X != Y && Y != Z && X != Z, "PatternNotFound", "triangle crossings must be distinct");

  auto att = attach_map(edges);
  Builder b(d);

  // For one strand with its side edge: rewire so the strand visits its two
  // crossings in the opposite order.  Ports keep their roles.
  auto swap_strand = [&](const TriangleSide& side) {
    const Edge t = edges[static_cast<size_t>(side.edge)];
    const int C1 = t.tail.crossing, C2 = t.head.crossing;
    const int p1_out = t.tail.slot, p2_in = t.head.slot;
    const int p1_in = p1_out ^ 2, p2_out = p2_in ^ 2;
    auto [pre, pre_tail] = att.at({C1, p1_in});
    auto [post, post_tail] = att.at({C2, p2_out});
    require(!pre_tail && post_tail, "PatternNotFound", "triangle side orientation broken");
    // pre now enters the second crossing; the side runs backwards; post
    // leaves the first crossing
    b.edges[static_cast<size_t>(pre)].head = {C2, p2_in};
    b.edges[static_cast<size_t>(side.edge)] = {{C2, p2_out}, {C1, p1_in}};
    b.edges[static_cast<size_t>(post)].tail = {C1, p1_out};
  };

  swap_strand(s);
  swap_strand(u);
  swap_strand(v);
  return b.build();
}

bool triangle_slide_ok(const Diagram& d, int es, int eu, int ev, MoveType t) {
  const auto& edges = d.edges();
  if (es < 0 || eu < 0 || ev < 0) return false;
  const Edge& ts = edges[static_cast<size_t>(es)];
  const int X = ts.tail.crossing, Y = ts.head.crossing;
  auto kind = [&](int c) { return d.crossings()[static_cast<size_t>(c)].kind; };
  std::set<int> uu = {edges[static_cast<size_t>(eu)].tail.crossing, edges[static_cast<size_t>(eu)].head.crossing};
  std::set<int> vv = {edges[static_cast<size_t>(ev)].tail.crossing, edges[static_cast<size_t>(ev)].head.crossing};
  std::vector<int> zs;
  std::set_intersection(uu.begin(), uu.end(), vv.begin(), vv.end(), std::back_inserter(zs));
  if (zs.size() != 1) return false;
  const int Z = zs[0];
  switch (t) {
    case MoveType::R3: {
      if (kind(X) != CrossKind::classical || kind(Y) != CrossKind::classical ||
          kind(Z) != CrossKind::classical)
        return false;
      // the slid strand is over at both of its crossings or under at both
      auto is_over = [&](const EndRef& r) {
        const int sign = d.crossings()[static_cast<size_t>(r.crossing)].sign;
        return r.slot == over_in_slot(sign) || r.slot == over_out_slot(sign);
      };
      return is_over(ts.tail) == is_over(ts.head);
    }
    case MoveType::V3:
      return kind(X) == CrossKind::virtual_ && kind(Y) == CrossKind::virtual_ &&
             kind(Z) == CrossKind::virtual_;
    case MoveType::VMixed:
      return kind(X) == CrossKind::virtual_ && kind(Y) == CrossKind::virtual_ &&
             kind(Z) == CrossKind::classical;
    default:
      return false;
  }
}

// ---------------------------------------------------------------------------
// virtual insertions

Diagram apply_v1(const Diagram& d, int edge) {
  require(edge >= 0 && edge < static_cast<int>(d.edges().size()), "PatternNotFound", "no such edge");
  Builder b(d);
  const int c = static_cast<int>(b.crossings.size());
  b.crossings.push_back({CrossKind::virtual_, 0});
  const Edge old = b.edges[static_cast<size_t>(edge)];
  b.edges[static_cast<size_t>(edge)] = {old.tail, {c, 0}};
  b.edges.push_back({{c, 2}, {c, 1}});
  b.edges.push_back({{c, 3}, old.head});
  return b.build();
}

}  // namespace

std::string move_name(MoveType t) {
  switch (t) {
    case MoveType::R1Plus: return "R1+";
    case MoveType::R1Minus: return "R1-";
    case MoveType::R2: return "R2";
    case MoveType::R2Inv: return "R2inv";
    case MoveType::R3: return "R3";
    case MoveType::V1: return "V1";
    case MoveType::V1Inv: return "V1inv";
    case MoveType::V2: return "V2";
    case MoveType::V2Inv: return "V2inv";
    case MoveType::V3: return "V3";
    case MoveType::VMixed: return "Vmixed";
  }
  return "?";
}

std::vector<MoveSpec> enumerate_move_sites(const Diagram& d, MoveType t) {
  std::vector<MoveSpec> out;
  const int E = static_cast<int>(d.edges().size());
  switch (t) {
    case MoveType::R1Plus: {
      for (int e = 0; e < E; ++e)
        for (int sign : {1, -1})
          for (int side : {0, 1}) out.push_back({t, {e, sign, side}});
      if (d.free_loops() > 0)
        for (int sign : {1, -1}) out.push_back({t, {-1, sign, 0}});
      break;
    }
    case MoveType::R1Minus:
    case MoveType::V1Inv: {
      const bool want_virtual = t == MoveType::V1Inv;
      for (int c = 0; c < d.crossing_count(); ++c) {
        const bool is_virtual = d.crossings()[static_cast<size_t>(c)].kind == CrossKind::virtual_;
        if (is_virtual == want_virtual && kink_loop_edge(d, c)) out.push_back({t, {c}});
      }
      break;
    }
    case MoveType::R2:
    case MoveType::V2: {
      const bool facial = t == MoveType::R2 && d.virtual_count() == 0;
      std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> pairs;
      if (facial) {
        const FaceStructure fs = d.faces();
        // collect (edge, side) per face from the edge->faces table
        std::vector<std::vector<std::pair<int, int>>> by_face(static_cast<size_t>(fs.count));
        for (int e = 0; e < E; ++e) {
          by_face[static_cast<size_t>(fs.edge_faces[static_cast<size_t>(e)][0])].push_back({e, 0});
          by_face[static_cast<size_t>(fs.edge_faces[static_cast<size_t>(e)][1])].push_back({e, 1});
        }
        for (const auto& sides : by_face)
          for (const auto& a : sides)
            for (const auto& bb : sides)
              if (a.first != bb.first) pairs.push_back({a, bb});
      } else {
        for (int e = 0; e < E; ++e)
          for (int se : {0, 1})
            for (int f = 0; f < E; ++f)
              for (int sf : {0, 1})
                if (e != f) pairs.push_back({{e, se}, {f, sf}});
      }
      for (const auto& [a, bb] : pairs) {
        if (t == MoveType::V2) {
          out.push_back({t, {a.first, a.second, bb.first, bb.second, 0}});
        } else {
          for (int over : {1, 0}) out.push_back({t, {a.first, a.second, bb.first, bb.second, over}});
        }
      }
      break;
    }
    case MoveType::R2Inv:
    case MoveType::V2Inv: {
      const bool virtual_pair = t == MoveType::V2Inv;
      for (int p = 0; p < E; ++p)
        for (int q = 0; q < E; ++q)
          if (r2inv_pattern(d, p, q, virtual_pair)) out.push_back({t, {p, q}});
      break;
    }
    case MoveType::R3:
    case MoveType::V3:
    case MoveType::VMixed: {
      const FaceStructure fs = d.faces();
      // triangle faces: exactly three corners with three distinct crossings
      for (int face = 0; face < fs.count; ++face) {
        const auto& corners = fs.face_corners[static_cast<size_t>(face)];
        if (corners.size() != 3) continue;
        std::set<int> cs = {corners[0].first, corners[1].first, corners[2].first};
        if (cs.size() != 3) continue;
        // boundary edges of this face
        std::vector<int> side_edges;
        for (int e = 0; e < E; ++e) {
          const auto& ef = fs.edge_faces[static_cast<size_t>(e)];
          if (ef[0] == face || ef[1] == face) side_edges.push_back(e);
        }
        if (side_edges.size() != 3) continue;
        // each permutation assigning one side as the slid strand
        for (int si = 0; si < 3; ++si) {
          const int es = side_edges[static_cast<size_t>(si)];
          const int eu = side_edges[static_cast<size_t>((si + 1) % 3)];
          const int ev = side_edges[static_cast<size_t>((si + 2) % 3)];
          // orient (u = side at X, v = side at Y)
          const Edge& ts = d.edges()[static_cast<size_t>(es)];
          const int X = ts.tail.crossing;
          std::set<int> uu = {d.edges()[static_cast<size_t>(eu)].tail.crossing,
                              d.edges()[static_cast<size_t>(eu)].head.crossing};
          const bool u_at_x = uu.count(X) > 0;
          const int e_u = u_at_x ? eu : ev;
          const int e_v = u_at_x ? ev : eu;
          if (triangle_slide_ok(d, es, e_u, e_v, t)) out.push_back({t, {es, e_u, e_v}});
        }
      }
      break;
    }
    case MoveType::V1: {
      for (int e = 0; e < E; ++e) out.push_back({t, {e}});
      break;
    }
  }
  return out;
}

Diagram apply_move(const Diagram& d, const MoveSpec& m) {
  const auto& s = m.site;
  auto want = [&](size_t n) { require(s.size() == n, "PatternNotFound", "bad site arity"); };
  switch (m.move) {
    case MoveType::R1Plus:
      want(3);
      return apply_r1_plus(d, s[0], s[1], s[2]);
    case MoveType::R1Minus:
      want(1);
      return apply_r1_minus(d, s[0], false);
    case MoveType::V1Inv:
      want(1);
      return apply_r1_minus(d, s[0], true);
    case MoveType::R2:
      want(5);
      return apply_r2(d, s[0], s[1], s[2], s[3], s[4], false);
    case MoveType::V2:
      want(5);
      return apply_r2(d, s[0], s[1], s[2], s[3], 0, true);
    case MoveType::R2Inv:
      want(2);
      return apply_r2_inv(d, s[0], s[1], false);
    case MoveType::V2Inv:
      want(2);
      return apply_r2_inv(d, s[0], s[1], true);
    case MoveType::R3:
    case MoveType::V3:
    case MoveType::VMixed:
      want(3);
      require(triangle_slide_ok(d, s[0], s[1], s[2], m.move), "PatternNotFound",
              "no such triangle pattern");
      return apply_triangle(d, s[0], s[1], s[2]);
    case MoveType::V1:
      want(1);
      return apply_v1(d, s[0]);
  }
  fail("PatternNotFound", "unknown move");
}

const std::vector<MoveType>& classical_move_set() {
  static const std::vector<MoveType> kSet = {MoveType::R1Plus, MoveType::R1Minus, MoveType::R2,
                                             MoveType::R2Inv, MoveType::R3};
  return kSet;
}

const std::vector<MoveType>& virtual_move_set() {
  static const std::vector<MoveType> kSet = {
      MoveType::R1Plus, MoveType::R1Minus, MoveType::R2, MoveType::R2Inv, MoveType::R3,
      MoveType::V1,     MoveType::V1Inv,   MoveType::V2, MoveType::V2Inv, MoveType::V3,
      MoveType::VMixed};
  return kSet;
}

FuzzResult random_moves(const Diagram& d, int n_moves, std::uint64_t seed,
                        const std::vector<MoveType>& allowed, int crossing_budget) {
  std::mt19937_64 rng(seed);
  FuzzResult out{d, {}};
  auto grows = [](MoveType t) {
    return t == MoveType::R1Plus || t == MoveType::R2 || t == MoveType::V1 || t == MoveType::V2;
  };
  for (int step = 0; step < n_moves; ++step) {
    std::vector<MoveType> usable;
    for (MoveType t : allowed) {
      if (grows(t) && out.diagram.crossing_count() +
                              (t == MoveType::R2 || t == MoveType::V2 ? 2 : 1) >
                          crossing_budget)
        continue;
      usable.push_back(t);
    }
    bool applied = false;
    while (!usable.empty() && !applied) {
      const size_t pick = rng() % usable.size();
      const MoveType t = usable[pick];
      auto sites = enumerate_move_sites(out.diagram, t);
      if (sites.empty()) {
        usable.erase(usable.begin() + static_cast<long>(pick));
        continue;
      }
      const MoveSpec& spec = sites[rng() % sites.size()];
      out.diagram = apply_move(out.diagram, spec);
      out.steps.push_back({spec, out.diagram.crossing_count()});
      applied = true;
    }
  }
  return out;
}

}  // namespace skeinlab
