#include "skeinlab/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace skeinlab {

namespace {

int smoothing_partner(int slot, Smoothing s) {
  return s == Smoothing::A ? 3 - slot : slot ^ 1;
}

int passthrough_partner(int slot) { return slot ^ 2; }

int over_in_slot(int sign) { return sign > 0 ? 1 : 3; }
int over_out_slot(int sign) { return sign > 0 ? 3 : 1; }

// Attachment table: (crossing, slot) -> (edge index, attached at tail?)
struct AttachMap {
  std::vector<std::array<std::pair<int, bool>, 4>> at;

  AttachMap(int n_crossings, const std::vector<Edge>& edges) {
    at.assign(static_cast<size_t>(n_crossings), {std::pair{-1, false}, std::pair{-1, false},
                                                 std::pair{-1, false}, std::pair{-1, false}});
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
      place(edges[static_cast<size_t>(e)].tail, e, true);
      place(edges[static_cast<size_t>(e)].head, e, false);
    }
  }

  void place(const EndRef& r, int e, bool is_tail) {
    require(r.crossing >= 0 && r.crossing < static_cast<int>(at.size()) && r.slot >= 0 && r.slot < 4,
            "BadDiagram", "edge end out of range");
    auto& slot = at[static_cast<size_t>(r.crossing)][static_cast<size_t>(r.slot)];
    require(slot.first < 0, "BadDiagram", "slot attached twice");
    slot = {e, is_tail};
  }

  std::pair<int, bool> operator()(int c, int s) const {
    return at[static_cast<size_t>(c)][static_cast<size_t>(s)];
  }
};

}  // namespace

Diagram::Diagram(std::vector<Crossing> crossings, std::vector<Edge> edges, int free_loops,
                 bool oriented)
    : crossings_(std::move(crossings)),
      edges_(std::move(edges)),
      free_loops_(free_loops),
      oriented_(oriented) {
  validate();
}

void Diagram::validate() const {
  AttachMap att(crossing_count(), edges_);
  for (int c = 0; c < crossing_count(); ++c) {
    const Crossing& x = crossings_[static_cast<size_t>(c)];
    for (int s = 0; s < 4; ++s)
      require(att(c, s).first >= 0, "BadDiagram", "unattached slot");
    if (x.kind == CrossKind::classical)
      require(x.sign == 1 || x.sign == -1, "BadDiagram", "classical crossing needs a sign");
    else
      require(x.sign == 0, "BadDiagram", "virtual crossing carries no sign");
    if (!oriented_) continue;
    // head = edge comes in
    auto is_head = [&](int s) { return !att(c, s).second; };
    if (x.kind == CrossKind::classical) {
      require(is_head(0) && !is_head(2), "BadDiagram", "under strand direction");
      require(is_head(over_in_slot(x.sign)) && !is_head(over_out_slot(x.sign)), "BadDiagram",
              "over strand direction");
    } else {
      require(is_head(0) != is_head(2) && is_head(1) != is_head(3), "BadDiagram",
              "virtual strand direction");
    }
  }
  require(free_loops_ >= 0, "BadDiagram", "negative circle count");
}

int Diagram::classical_count() const {
  return static_cast<int>(std::count_if(crossings_.begin(), crossings_.end(), [](const Crossing& c) {
    return c.kind == CrossKind::classical;
  }));
}

std::vector<int> Diagram::classical_ids() const {
  std::vector<int> out;
  for (int c = 0; c < crossing_count(); ++c)
    if (crossings_[static_cast<size_t>(c)].kind == CrossKind::classical) out.push_back(c);
  return out;
}

std::pair<int, bool> Diagram::edge_at(int crossing, int slot) const {
  AttachMap att(crossing_count(), edges_);
  return att(crossing, slot);
}

std::vector<std::vector<int>> Diagram::components() const {
  AttachMap att(crossing_count(), edges_);
  std::vector<bool> seen(edges_.size(), false);
  std::vector<std::vector<int>> comps;
  for (int start = 0; start < static_cast<int>(edges_.size()); ++start) {
    if (seen[static_cast<size_t>(start)]) continue;
    std::vector<int> comp;
    int e = start;
    bool fwd = true;
    do {
      seen[static_cast<size_t>(e)] = true;
      comp.push_back(e);
      const EndRef arrive = fwd ? edges_[static_cast<size_t>(e)].head : edges_[static_cast<size_t>(e)].tail;
      const int out = passthrough_partner(arrive.slot);
      auto [e2, at_tail] = att(arrive.crossing, out);
      e = e2;
      fwd = at_tail;
    } while (e != start || !fwd);
    comps.push_back(std::move(comp));
  }
  return comps;
}

int Diagram::component_count() const {
  return static_cast<int>(components().size()) + free_loops_;
}

int Diagram::writhe() const {
  require(oriented_, "Unoriented", "writhe needs an oriented diagram");
  int w = 0;
  for (const Crossing& c : crossings_) w += c.sign;
  return w;
}

std::pair<int, int> Diagram::sign_counts() const {
  require(oriented_, "Unoriented", "crossing signs need an oriented diagram");
  int pos = 0, neg = 0;
  for (const Crossing& c : crossings_) {
    if (c.sign > 0) ++pos;
    if (c.sign < 0) ++neg;
  }
  return {pos, neg};
}

State Diagram::resolve_state(const std::vector<Smoothing>& choice) const {
  const auto cls = classical_ids();
  require(choice.size() == cls.size(), "IncompleteChoice",
          "smoothing choice must cover the classical crossings");
  std::vector<int> choice_of(crossings_.size(), -1);
  for (size_t i = 0; i < cls.size(); ++i)
    choice_of[static_cast<size_t>(cls[i])] = static_cast<int>(choice[i]);

  AttachMap att(crossing_count(), edges_);
  auto partner = [&](int c, int s) {
    if (crossings_[static_cast<size_t>(c)].kind == CrossKind::virtual_) return passthrough_partner(s);
    return smoothing_partner(s, static_cast<Smoothing>(choice_of[static_cast<size_t>(c)]));
  };

  State st;
  st.choice = choice;
  std::vector<bool> seen(edges_.size(), false);
  for (int start = 0; start < static_cast<int>(edges_.size()); ++start) {
    if (seen[static_cast<size_t>(start)]) continue;
    StateLoop loop;
    int e = start;
    bool fwd = true;
    do {
      seen[static_cast<size_t>(e)] = true;
      loop.edges.push_back(e);
      const EndRef arrive = fwd ? edges_[static_cast<size_t>(e)].head : edges_[static_cast<size_t>(e)].tail;
      const int out = partner(arrive.crossing, arrive.slot);
      auto [e2, at_tail] = att(arrive.crossing, out);
      // reversed_after: the next edge is traversed against its orientation
      loop.passes.push_back({arrive.crossing, arrive.slot, out, !at_tail});
      e = e2;
      fwd = at_tail;
    } while (e != start || !fwd);
    std::sort(loop.edges.begin(), loop.edges.end());
    st.loops.push_back(std::move(loop));
  }
  std::sort(st.loops.begin(), st.loops.end(),
            [](const StateLoop& a, const StateLoop& b) { return a.min_edge() < b.min_edge(); });
  for (int k = 0; k < free_loops_; ++k) st.loops.push_back(StateLoop{});
  st.loop_count = static_cast<int>(st.loops.size());
  return st;
}

FaceStructure Diagram::faces() const {
  AttachMap att(crossing_count(), edges_);
  const int H = 2 * static_cast<int>(edges_.size());
  auto endpoint = [&](int h) {
    const Edge& e = edges_[static_cast<size_t>(h / 2)];
    return (h % 2 == 0) ? e.head : e.tail;
  };
  FaceStructure fs;
  fs.edge_faces.assign(edges_.size(), {-1, -1});
  std::vector<int> face_of(static_cast<size_t>(H), -1);
  for (int h0 = 0; h0 < H; ++h0) {
    if (face_of[static_cast<size_t>(h0)] >= 0) continue;
    const int face = fs.count++;
    fs.face_corners.emplace_back();
    int h = h0;
    do {
      face_of[static_cast<size_t>(h)] = face;
      const EndRef arrive = endpoint(h);
      fs.corner_face[{arrive.crossing, arrive.slot}] = face;
      fs.face_corners[static_cast<size_t>(face)].push_back({arrive.crossing, arrive.slot});
      const int s2 = (arrive.slot + 1) % 4;
      auto [e2, at_tail] = att(arrive.crossing, s2);
      h = at_tail ? 2 * e2 : 2 * e2 + 1;
    } while (h != h0);
  }
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e)
    fs.edge_faces[static_cast<size_t>(e)] = {face_of[static_cast<size_t>(2 * e)],
                                             face_of[static_cast<size_t>(2 * e + 1)]};
  return fs;
}

int Diagram::genus() const {
  if (crossings_.empty()) return 0;
  // connected components of the crossing graph
  std::vector<int> comp(crossings_.size(), -1);
  int ncomp = 0;
  for (int c0 = 0; c0 < crossing_count(); ++c0) {
    if (comp[static_cast<size_t>(c0)] >= 0) continue;
    std::vector<int> stack{c0};
    comp[static_cast<size_t>(c0)] = ncomp;
    while (!stack.empty()) {
      int c = stack.back();
      stack.pop_back();
      for (const Edge& e : edges_) {
        int a = e.tail.crossing, b = e.head.crossing;
        if (a == c && comp[static_cast<size_t>(b)] < 0) {
          comp[static_cast<size_t>(b)] = ncomp;
          stack.push_back(b);
        }
        if (b == c && comp[static_cast<size_t>(a)] < 0) {
          comp[static_cast<size_t>(a)] = ncomp;
          stack.push_back(a);
        }
      }
    }
    ++ncomp;
  }
  const int V = crossing_count();
  const int E = static_cast<int>(edges_.size());
  const int F = faces().count;
  const int euler = V - E + F;
  const int g2 = 2 * ncomp - euler;  // total genus, doubled
  require(g2 >= 0 && g2 % 2 == 0, "BadDiagram", "inconsistent rotation system");
  return g2 / 2;
}

Diagram Diagram::with_crossing_switched(int crossing) const {
  require(crossing >= 0 && crossing < crossing_count(), "BadIndex", "no such crossing");
  require(crossings_[static_cast<size_t>(crossing)].kind == CrossKind::classical, "BadIndex",
          "cannot switch a virtual crossing");
  std::vector<Crossing> cs = crossings_;
  const int old_sign = cs[static_cast<size_t>(crossing)].sign;
  cs[static_cast<size_t>(crossing)].sign = -old_sign;
  // Physical rotation is unchanged; slot labels shift so slot0 stays under-in.
  const int shift = old_sign > 0 ? 3 : 1;
  std::vector<Edge> es = edges_;
  for (Edge& e : es) {
    if (e.tail.crossing == crossing) e.tail.slot = (e.tail.slot + shift) % 4;
    if (e.head.crossing == crossing) e.head.slot = (e.head.slot + shift) % 4;
  }
  return Diagram(std::move(cs), std::move(es), free_loops_, oriented_);
}

Diagram Diagram::with_crossing_smoothed(int crossing, Smoothing s) const {
  require(crossing >= 0 && crossing < crossing_count(), "BadIndex", "no such crossing");
  require(crossings_[static_cast<size_t>(crossing)].kind == CrossKind::classical, "BadIndex",
          "cannot smooth a virtual crossing");
  AttachMap att(crossing_count(), edges_);

  std::vector<Crossing> cs;
  std::vector<int> cmap(crossings_.size(), -1);
  for (int c = 0; c < crossing_count(); ++c) {
    if (c == crossing) continue;
    cmap[static_cast<size_t>(c)] = static_cast<int>(cs.size());
    cs.push_back(crossings_[static_cast<size_t>(c)]);
  }

  // Glue the edges across the smoothed crossing into chains.  A chain whose
  // walk returns to its start edge is a circle; otherwise it becomes one new
  // edge between two surviving crossings.
  int circles = free_loops_;
  bool ok_oriented = oriented_;
  std::vector<bool> used(edges_.size(), false);
  std::vector<Edge> es;

  // one walk step: (edge, dir) -> (edge, dir); reports the terminal endpoint
  auto step = [&](int e, bool fwd, int& e2, bool& fwd2, EndRef& terminal) -> bool {
    const EndRef p = fwd ? edges_[static_cast<size_t>(e)].head : edges_[static_cast<size_t>(e)].tail;
    if (p.crossing != crossing) {
      terminal = p;
      return false;
    }
    const int out = smoothing_partner(p.slot, s);
    auto [en, at_tail] = att(crossing, out);
    e2 = en;
    fwd2 = at_tail;
    if (fwd != fwd2) ok_oriented = false;
    return true;
  };

  for (int e0 = 0; e0 < static_cast<int>(edges_.size()); ++e0) {
    if (used[static_cast<size_t>(e0)]) continue;
    used[static_cast<size_t>(e0)] = true;

    bool closed = false;
    EndRef head_end{}, tail_end{};
    // extend toward the head
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
    // extend toward the tail (walk the reversed edge)
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
    Edge ne;
    ne.tail = {cmap[static_cast<size_t>(tail_end.crossing)], tail_end.slot};
    ne.head = {cmap[static_cast<size_t>(head_end.crossing)], head_end.slot};
    es.push_back(ne);
  }
  return Diagram(std::move(cs), std::move(es), circles, ok_oriented);
}

Diagram Diagram::with_extra_circle() const {
  return Diagram(crossings_, edges_, free_loops_ + 1, oriented_);
}

std::string Diagram::canonical_code() const {
  require(oriented_, "Unoriented", "canonical code needs an oriented diagram");
  const auto comps = components();
  const size_t n = comps.size();
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), 0);

  AttachMap att(crossing_count(), edges_);
  auto walk_tokens = [&](int start_edge) {
    // token per pass: (crossing, O/U/V, sign)
    std::vector<std::tuple<int, char, int>> out;
    int e = start_edge;
    bool fwd = true;
    do {
      const EndRef arrive = fwd ? edges_[static_cast<size_t>(e)].head : edges_[static_cast<size_t>(e)].tail;
      const Crossing& x = crossings_[static_cast<size_t>(arrive.crossing)];
      char role = 'V';
      if (x.kind == CrossKind::classical) role = arrive.slot == 0 ? 'U' : 'O';
      out.push_back({arrive.crossing, role, x.sign});
      auto [e2, at_tail] = att(arrive.crossing, passthrough_partner(arrive.slot));
      e = e2;
      fwd = at_tail;
    } while (e != start_edge || !fwd);
    return out;
  };

  std::string best;
  std::sort(order.begin(), order.end());
  do {
    // candidate rotations per component
    std::vector<std::vector<int>> starts;
    for (size_t oi : order) starts.push_back(comps[oi]);
    // enumerate start-edge combinations
    std::vector<size_t> idx(n, 0);
    for (;;) {
      std::map<int, int> relabel;
      std::string code;
      for (size_t k = 0; k < n; ++k) {
        if (k) code += "|";
        for (auto [c, role, sign] : walk_tokens(starts[k][idx[k]])) {
          auto it = relabel.find(c);
          if (it == relabel.end()) it = relabel.insert({c, static_cast<int>(relabel.size()) + 1}).first;
          code += role;
          code += std::to_string(it->second);
          if (role != 'V') code += sign > 0 ? '+' : '-';
        }
      }
      if (best.empty() || code < best) best = code;
      // next combination
      size_t k = 0;
      while (k < n && ++idx[k] == starts[k].size()) idx[k++] = 0;
      if (k == n) break;
      if (n == 0) break;
    }
    if (n == 0) break;
  } while (std::next_permutation(order.begin(), order.end()));
  best += "#" + std::to_string(free_loops_);
  return best;
}

// ---------------------------------------------------------------------------
// braid codec

Diagram from_braid_word(int n_strands, const std::vector<int>& word) {
  require(n_strands >= 1, "BadIndex", "need at least one strand");
  for (int k : word)
    require(k != 0 && std::abs(k) < n_strands, "BadIndex",
            "braid letter out of range for " + std::to_string(n_strands) + " strands");

  std::vector<Crossing> cs;
  std::vector<Edge> es;
  // open end per strand position: the (crossing, slot) the next edge leaves from
  std::vector<std::optional<EndRef>> cur(static_cast<size_t>(n_strands));
  std::vector<std::optional<EndRef>> first_in(static_cast<size_t>(n_strands));

  auto feed = [&](int pos, EndRef in_slot) {
    if (!first_in[static_cast<size_t>(pos)]) {
      first_in[static_cast<size_t>(pos)] = in_slot;  // closure arc added at the end
    } else {
      es.push_back({*cur[static_cast<size_t>(pos)], in_slot});
    }
  };

  for (int letter : word) {
    const int p = std::abs(letter) - 1;
    const int c = static_cast<int>(cs.size());
    cs.push_back({CrossKind::classical, letter > 0 ? 1 : -1});
    if (letter > 0) {
      feed(p, {c, 1});      // left strand enters over
      feed(p + 1, {c, 0});  // right strand enters under
      cur[static_cast<size_t>(p)] = EndRef{c, 2};
      cur[static_cast<size_t>(p + 1)] = EndRef{c, 3};
    } else {
      feed(p, {c, 0});      // left strand enters under
      feed(p + 1, {c, 3});  // right strand enters over
      cur[static_cast<size_t>(p)] = EndRef{c, 1};
      cur[static_cast<size_t>(p + 1)] = EndRef{c, 2};
    }
  }
  int circles = 0;
  for (int p = 0; p < n_strands; ++p) {
    if (!first_in[static_cast<size_t>(p)]) {
      ++circles;
      continue;
    }
    es.push_back({*cur[static_cast<size_t>(p)], *first_in[static_cast<size_t>(p)]});
  }
  return Diagram(std::move(cs), std::move(es), circles);
}

// ---------------------------------------------------------------------------
// pd codec

namespace {

std::vector<std::array<long, 4>> parse_pd_terms(const std::string& text) {
  std::vector<std::array<long, 4>> terms;
  size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  skip_ws();
  while (i < text.size()) {
    require(text[i] == 'X' || text[i] == 'x', "ParseError", "expected X(...) term");
    ++i;
    skip_ws();
    require(i < text.size() && (text[i] == '(' || text[i] == '['), "ParseError", "expected (");
    const char close = text[i] == '(' ? ')' : ']';
    ++i;
    std::array<long, 4> t{};
    for (int k = 0; k < 4; ++k) {
      skip_ws();
      size_t j = i;
      while (j < text.size() && (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '-')) ++j;
      require(j > i, "ParseError", "expected edge label");
      t[static_cast<size_t>(k)] = std::stol(text.substr(i, j - i));
      i = j;
      skip_ws();
      if (k < 3) {
        require(i < text.size() && text[i] == ',', "ParseError", "expected ,");
        ++i;
      }
    }
    require(i < text.size() && text[i] == close, "ParseError", "unterminated X term");
    ++i;
    terms.push_back(t);
    skip_ws();
  }
  require(!terms.empty(), "ParseError", "empty pd code");
  return terms;
}

}  // namespace

Diagram decode_pd(const std::string& text) {
  const auto terms = parse_pd_terms(text);
  const int n = static_cast<int>(terms.size());

  // occurrences per label
  std::map<long, std::vector<std::pair<int, int>>> occ;  // label -> [(crossing, slot)]
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s) occ[terms[static_cast<size_t>(c)][static_cast<size_t>(s)]].push_back({c, s});
  for (const auto& [label, where] : occ)
    require(where.size() == 2, "InconsistentCode",
            "edge label " + std::to_string(label) + " used " + std::to_string(where.size()) + " times");

  // Orient the over strands: x[c] true means slot1 = over-in (sign +).
  // h(c, s): is the occurrence a head, as a function of x[c]:
  //   slot0 head, slot2 tail, slot1 = x, slot3 = !x.
  std::vector<int> x(static_cast<size_t>(n), -1);  // -1 unknown
  bool changed = true;
  auto head_expr = [&](int /*crossing*/, int s, bool xv) {
    if (s == 0) return true;
    if (s == 2) return false;
    return s == 1 ? xv : !xv;
  };
  // propagate until fixed; free crossings default to +
  while (true) {
    changed = false;
    for (const auto& [label, where] : occ) {
      auto [c1, s1] = where[0];
      auto [c2, s2] = where[1];
      const bool fixed1 = s1 == 0 || s1 == 2 || x[static_cast<size_t>(c1)] >= 0;
      const bool fixed2 = s2 == 0 || s2 == 2 || x[static_cast<size_t>(c2)] >= 0;
      if (fixed1 && fixed2) {
        bool h1 = head_expr(c1, s1, x[static_cast<size_t>(c1)] == 1);
        bool h2 = head_expr(c2, s2, x[static_cast<size_t>(c2)] == 1);
        require(h1 != h2, "InconsistentCode",
                "edge label " + std::to_string(label) + " has mismatched directions");
      } else if (fixed1 != fixed2) {
        // solve for the open one
        int oc = fixed1 ? c2 : c1;
        int os = fixed1 ? s2 : s1;
        bool want_head = !head_expr(fixed1 ? c1 : c2, fixed1 ? s1 : s2,
                                    x[static_cast<size_t>(fixed1 ? c1 : c2)] == 1);
        // head_expr(oc, os, xv) == want_head
        bool xv = (os == 1) ? want_head : !want_head;
        x[static_cast<size_t>(oc)] = xv ? 1 : 0;
        changed = true;
      }
    }
    if (changed) continue;
    auto it = std::find(x.begin(), x.end(), -1);
    if (it == x.end()) break;
    *it = 1;  // free choice: orient as positive
  }

  std::vector<Crossing> cs(static_cast<size_t>(n));
  for (int c = 0; c < n; ++c) cs[static_cast<size_t>(c)] = {CrossKind::classical, x[static_cast<size_t>(c)] ? 1 : -1};
  std::vector<Edge> es;
  for (const auto& [label, where] : occ) {
    auto [c1, s1] = where[0];
    auto [c2, s2] = where[1];
    const bool h1 = head_expr(c1, s1, x[static_cast<size_t>(c1)] == 1);
    Edge e;
    e.tail = h1 ? EndRef{c2, s2} : EndRef{c1, s1};
    e.head = h1 ? EndRef{c1, s1} : EndRef{c2, s2};
    es.push_back(e);
  }
  Diagram d(std::move(cs), std::move(es), 0);
  require(d.genus() == 0, "InconsistentCode", "pd code is not planar");
  // connectivity of the crossing graph
  {
    std::set<int> reach;
    std::vector<int> stack{0};
    while (!stack.empty()) {
      int c = stack.back();
      stack.pop_back();
      if (!reach.insert(c).second) continue;
      for (const Edge& e : d.edges()) {
        if (e.tail.crossing == c) stack.push_back(e.head.crossing);
        if (e.head.crossing == c) stack.push_back(e.tail.crossing);
      }
    }
    require(static_cast<int>(reach.size()) == d.crossing_count(), "DisconnectedDiagram",
            "pd code describes a disconnected diagram");
  }
  return d;
}

std::string encode_pd(const Diagram& d) {
  require(d.virtual_count() == 0, "NonPlanar", "pd form cannot express virtual crossings");
  require(d.free_loops() == 0, "InconsistentCode", "pd form cannot express crossing-free circles");
  require(d.crossing_count() > 0, "InconsistentCode", "pd form needs at least one crossing");
  // number edges along the walk, components in canonical order
  std::vector<int> label(d.edges().size(), 0);
  int next = 1;
  std::vector<int> crossing_order;
  std::set<int> seen_crossing;
  for (const auto& comp : d.components())
    for (int e : comp) {
      label[static_cast<size_t>(e)] = next++;
      const int c = d.edges()[static_cast<size_t>(e)].head.crossing;
      if (seen_crossing.insert(c).second) crossing_order.push_back(c);
    }
  std::ostringstream os;
  bool first = true;
  for (int c : crossing_order) {
    if (!first) os << " ";
    first = false;
    os << "X(";
    for (int s = 0; s < 4; ++s) {
      auto [e, is_tail] = d.edge_at(c, s);
      (void)is_tail;
      os << label[static_cast<size_t>(e)] << (s < 3 ? "," : ")");
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// gauss codec

namespace {

struct GaussPass {
  char role;  // 'O', 'U', 'V'
  long label;
  int sign;  // 0 for V
};

std::vector<GaussPass> parse_gauss(const std::string& text) {
  std::vector<GaussPass> out;
  size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',') {
      ++i;
      continue;
    }
    char role = static_cast<char>(std::toupper(static_cast<unsigned char>(text[i])));
    require(role == 'O' || role == 'U' || role == 'V', "ParseError",
            std::string("unexpected token '") + text[i] + "'");
    ++i;
    size_t j = i;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    require(j > i, "ParseError", "crossing label expected");
    long label = std::stol(text.substr(i, j - i));
    i = j;
    int sign = 0;
    if (role != 'V') {
      require(i < text.size() && (text[i] == '+' || text[i] == '-'), "ParseError",
              "sign expected after crossing label");
      sign = text[i] == '+' ? 1 : -1;
      ++i;
    }
    out.push_back({role, label, sign});
  }
  require(!out.empty(), "ParseError", "empty gauss code");
  return out;
}

// Incremental planar embedding used to realize non-planar signed codes:
// edges are routed through faces, and each crossed edge gets a virtual
// crossing.  Faces are recomputed per insertion (desk-scale inputs).
struct PlanarBuilder {
  std::vector<Crossing> crossings;
  std::vector<Edge> edges;

  // attachments: (crossing, slot) -> (edge, is_tail), -1 when open
  std::vector<std::array<std::pair<int, bool>, 4>> att;

  explicit PlanarBuilder(std::vector<Crossing> cs) : crossings(std::move(cs)) {
    att.assign(crossings.size(),
               {std::pair{-1, false}, std::pair{-1, false}, std::pair{-1, false}, std::pair{-1, false}});
  }

  int add_crossing(const Crossing& c) {
    crossings.push_back(c);
    att.push_back({std::pair{-1, false}, std::pair{-1, false}, std::pair{-1, false}, std::pair{-1, false}});
    return static_cast<int>(crossings.size()) - 1;
  }

  void attach(int e, const EndRef& r, bool is_tail) {
    auto& slot = att[static_cast<size_t>(r.crossing)][static_cast<size_t>(r.slot)];
    require(slot.first < 0, "BadDiagram", "slot attached twice during routing");
    slot = {e, is_tail};
  }

  int add_edge(const EndRef& tail, const EndRef& head) {
    edges.push_back({tail, head});
    const int e = static_cast<int>(edges.size()) - 1;
    attach(e, tail, true);
    attach(e, head, false);
    return e;
  }

  void detach_edge(int e) {
    const Edge& ed = edges[static_cast<size_t>(e)];
    att[static_cast<size_t>(ed.tail.crossing)][static_cast<size_t>(ed.tail.slot)] = {-1, false};
    att[static_cast<size_t>(ed.head.crossing)][static_cast<size_t>(ed.head.slot)] = {-1, false};
  }

  bool vertex_has_attachment(int v) const {
    for (int s = 0; s < 4; ++s)
      if (att[static_cast<size_t>(v)][static_cast<size_t>(s)].first >= 0) return true;
    return false;
  }

  struct Faces {
    int count = 0;
    std::vector<std::array<int, 2>> edge_faces;            // [fwd, bwd]
    std::map<std::pair<int, int>, int> gap_face;           // open (v, slot) -> face
  };

  Faces compute_faces() const {
    Faces f;
    f.edge_faces.assign(edges.size(), {-1, -1});
    const int H = 2 * static_cast<int>(edges.size());
    std::vector<int> face_of(static_cast<size_t>(H), -1);
    auto endpoint = [&](int h) {
      const Edge& e = edges[static_cast<size_t>(h / 2)];
      return h % 2 == 0 ? e.head : e.tail;
    };
    for (int h0 = 0; h0 < H; ++h0) {
      if (face_of[static_cast<size_t>(h0)] >= 0) continue;
      const int face = f.count++;
      int h = h0;
      do {
        face_of[static_cast<size_t>(h)] = face;
        const EndRef a = endpoint(h);
        int s2 = -1;
        for (int k = 1; k <= 4; ++k) {
          int cand = (a.slot + k) % 4;
          if (att[static_cast<size_t>(a.crossing)][static_cast<size_t>(cand)].first >= 0) {
            s2 = cand;
            break;
          }
          f.gap_face[{a.crossing, cand}] = face;  // open slot inside this corner span
        }
        auto [e2, at_tail] = att[static_cast<size_t>(a.crossing)][static_cast<size_t>(s2)];
        h = at_tail ? 2 * e2 : 2 * e2 + 1;
      } while (h != h0);
    }
    for (int e = 0; e < static_cast<int>(edges.size()); ++e)
      f.edge_faces[static_cast<size_t>(e)] = {face_of[static_cast<size_t>(2 * e)],
                                              face_of[static_cast<size_t>(2 * e + 1)]};
    return f;
  }

  /// Adds the diagram edge tail->head, inserting virtual crossings where the
  /// route must cross existing edges.
  void route_edge(EndRef tail, EndRef head) {
    if (edges.empty()) {
      add_edge(tail, head);
      return;
    }
    const Faces f = compute_faces();
    auto face_at = [&](const EndRef& r) -> int {
      if (!vertex_has_attachment(r.crossing)) return -1;  // floating vertex: any face
      auto it = f.gap_face.find({r.crossing, r.slot});
      require(it != f.gap_face.end(), "BadDiagram", "routing slot is not open");
      return it->second;
    };
    const int start = face_at(tail);
    const int target = face_at(head);
    require(start >= 0, "BadDiagram", "route tail must touch the drawn part");

    // BFS over faces; parent chain records the crossed edge and the side.
    std::vector<int> parent_face(static_cast<size_t>(f.count), -2);
    std::vector<std::pair<int, bool>> via(static_cast<size_t>(f.count), {-1, false});  // (edge, from_fwd_side)
    std::vector<int> queue{start};
    parent_face[static_cast<size_t>(start)] = -1;
    size_t qi = 0;
    while (qi < queue.size() && (target >= 0 ? parent_face[static_cast<size_t>(target)] == -2 : false)) {
      const int cur = queue[qi++];
      for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        const auto [ffwd, fbwd] = f.edge_faces[static_cast<size_t>(e)];
        if (ffwd == fbwd) continue;
        int nxt = -1;
        bool from_fwd = false;
        if (ffwd == cur) {
          nxt = fbwd;
          from_fwd = true;
        } else if (fbwd == cur) {
          nxt = ffwd;
        } else {
          continue;
        }
        if (parent_face[static_cast<size_t>(nxt)] != -2) continue;
        parent_face[static_cast<size_t>(nxt)] = cur;
        via[static_cast<size_t>(nxt)] = {e, from_fwd};
        queue.push_back(nxt);
      }
    }

    std::vector<std::pair<int, bool>> path;  // crossed edges from start to target
    if (target >= 0) {
      require(parent_face[static_cast<size_t>(target)] != -2, "BadDiagram", "face routing failed");
      for (int fct = target; fct != start; fct = parent_face[static_cast<size_t>(fct)])
        path.push_back(via[static_cast<size_t>(fct)]);
      std::reverse(path.begin(), path.end());
    }

    EndRef cur_tail = tail;
    for (auto [e, from_fwd] : path) {
      const Edge crossed = edges[static_cast<size_t>(e)];
      const int vc = add_crossing({CrossKind::virtual_, 0});
      // Crossing from the forward-orbit side attaches the crossed edge at
      // slots (in 3, out 1); the mirror side swaps them.
      const int e_in = from_fwd ? 3 : 1;
      const int e_out = from_fwd ? 1 : 3;
      detach_edge(e);
      edges[static_cast<size_t>(e)] = {crossed.tail, {vc, e_in}};
      attach(e, crossed.tail, true);
      attach(e, {vc, e_in}, false);
      add_edge({vc, e_out}, crossed.head);
      add_edge(cur_tail, {vc, 0});
      cur_tail = {vc, 2};
    }
    add_edge(cur_tail, head);
  }
};

}  // namespace

Diagram decode_gauss(const std::string& text) {
  const auto passes = parse_gauss(text);

  // classical labels: one O and one U with equal signs; virtual labels: two V's
  std::map<long, std::vector<int>> where_c, where_v;
  for (int i = 0; i < static_cast<int>(passes.size()); ++i) {
    (passes[static_cast<size_t>(i)].role == 'V' ? where_v : where_c)[passes[static_cast<size_t>(i)].label]
        .push_back(i);
  }
  std::map<long, int> crossing_of;  // label-space-tagged below
  std::vector<Crossing> cs;
  for (const auto& [label, idx] : where_c) {
    require(idx.size() == 2, "InconsistentCode",
            "crossing " + std::to_string(label) + " appears " + std::to_string(idx.size()) + " times");
    const GaussPass& p1 = passes[static_cast<size_t>(idx[0])];
    const GaussPass& p2 = passes[static_cast<size_t>(idx[1])];
    require(p1.role != p2.role, "InconsistentCode",
            "crossing " + std::to_string(label) + " needs one over and one under pass");
    require(p1.sign == p2.sign, "InconsistentCode",
            "crossing " + std::to_string(label) + " has mismatched signs");
    crossing_of[label] = static_cast<int>(cs.size());
    cs.push_back({CrossKind::classical, p1.sign});
  }
  const bool explicit_virtuals = !where_v.empty();
  std::map<long, int> vcrossing_of;
  for (const auto& [label, idx] : where_v) {
    require(idx.size() == 2, "InconsistentCode",
            "virtual crossing " + std::to_string(label) + " appears " + std::to_string(idx.size()) +
                " times");
    vcrossing_of[label] = static_cast<int>(cs.size());
    cs.push_back({CrossKind::virtual_, 0});
  }

  // per pass: crossing id, in-slot, out-slot
  std::vector<std::array<int, 3>> hops;
  std::map<long, int> v_seen;
  for (const GaussPass& p : passes) {
    if (p.role == 'V') {
      const int c = vcrossing_of[p.label];
      const int k = v_seen[p.label]++;
      hops.push_back({c, k == 0 ? 0 : 1, k == 0 ? 2 : 3});
    } else if (p.role == 'U') {
      hops.push_back({crossing_of[p.label], 0, 2});
    } else {
      const int c = crossing_of[p.label];
      const int sign = cs[static_cast<size_t>(c)].sign;
      hops.push_back({c, over_in_slot(sign), over_out_slot(sign)});
    }
  }

  auto build_direct = [&]() {
    std::vector<Edge> es;
    for (size_t i = 0; i < hops.size(); ++i) {
      const auto& a = hops[i];
      const auto& b = hops[(i + 1) % hops.size()];
      es.push_back({{a[0], a[2]}, {b[0], b[1]}});
    }
    return Diagram(cs, std::move(es), 0);
  };

  Diagram direct = build_direct();
  if (explicit_virtuals || direct.genus() == 0) return direct;

  // Non-realizable signed code: embed with virtual crossings.
  PlanarBuilder pb(cs);
  for (size_t i = 0; i < hops.size(); ++i) {
    const auto& a = hops[i];
    const auto& b = hops[(i + 1) % hops.size()];
    pb.route_edge({a[0], a[2]}, {b[0], b[1]});
  }
  Diagram out(std::move(pb.crossings), std::move(pb.edges), 0);
  require(out.genus() == 0, "BadDiagram", "virtual embedding failed to flatten the code");
  return out;
}

std::string encode_gauss(const Diagram& d) {
  require(d.oriented(), "Unoriented", "gauss code needs an oriented diagram");
  require(d.free_loops() == 0, "MultiComponent", "gauss form cannot express extra circles");
  const auto comps = d.components();
  require(comps.size() == 1, "MultiComponent", "gauss form encodes single-component diagrams");
  std::ostringstream os;
  std::map<int, int> relabel;
  for (int e : comps[0]) {
    const EndRef arrive = d.edges()[static_cast<size_t>(e)].head;
    const Crossing& x = d.crossings()[static_cast<size_t>(arrive.crossing)];
    auto it = relabel.find(arrive.crossing);
    if (it == relabel.end())
      it = relabel.insert({arrive.crossing, static_cast<int>(relabel.size()) + 1}).first;
    if (x.kind == CrossKind::virtual_) {
      os << "V" << it->second;
    } else {
      os << (arrive.slot == 0 ? "U" : "O") << it->second << (x.sign > 0 ? "+" : "-");
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// json codec

std::string encode_json(const Diagram& d) {
  nlohmann::json j;
  j["format"] = "skeinlab-diagram/1";
  j["free_loops"] = d.free_loops();
  j["oriented"] = d.oriented();
  auto& cs = j["crossings"] = nlohmann::json::array();
  for (const Crossing& c : d.crossings()) {
    nlohmann::json jc;
    jc["kind"] = c.kind == CrossKind::classical ? "classical" : "virtual";
    if (c.kind == CrossKind::classical) jc["sign"] = c.sign;
    cs.push_back(jc);
  }
  auto& es = j["edges"] = nlohmann::json::array();
  for (const Edge& e : d.edges())
    es.push_back({e.tail.crossing, e.tail.slot, e.head.crossing, e.head.slot});
  return j.dump();
}

Diagram decode_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    fail("ParseError", std::string("bad json: ") + e.what());
  }
  require(j.value("format", "") == "skeinlab-diagram/1", "ParseError", "unknown diagram format");
  std::vector<Crossing> cs;
  for (const auto& jc : j.at("crossings")) {
    Crossing c;
    c.kind = jc.at("kind") == "classical" ? CrossKind::classical : CrossKind::virtual_;
    c.sign = c.kind == CrossKind::classical ? jc.at("sign").get<int>() : 0;
    cs.push_back(c);
  }
  std::vector<Edge> es;
  for (const auto& je : j.at("edges")) {
    require(je.is_array() && je.size() == 4, "ParseError", "edge needs 4 entries");
    es.push_back({{je[0].get<int>(), je[1].get<int>()}, {je[2].get<int>(), je[3].get<int>()}});
  }
  return Diagram(std::move(cs), std::move(es), j.value("free_loops", 0), j.value("oriented", true));
}

Diagram codec_decode(CodecFormat f, const std::string& text) {
  switch (f) {
    case CodecFormat::pd:
      return decode_pd(text);
    case CodecFormat::gauss:
      return decode_gauss(text);
    case CodecFormat::json:
      return decode_json(text);
    case CodecFormat::braid: {
      std::vector<int> word;
      std::istringstream is(text);
      std::string token;
      int max_abs = 0;
      while (is >> token) {
        try {
          size_t used = 0;
          const int v = std::stoi(token, &used);
          require(used == token.size(), "ParseError", "bad braid letter " + token);
          word.push_back(v);
          max_abs = std::max(max_abs, std::abs(v));
        } catch (const std::logic_error&) {
          fail("ParseError", "braid word must be whitespace-separated integers");
        }
      }
      return from_braid_word(max_abs + 1, word);
    }
  }
  fail("ParseError", "unknown codec format");
}

std::string codec_encode(CodecFormat f, const Diagram& d) {
  switch (f) {
    case CodecFormat::pd:
      return encode_pd(d);
    case CodecFormat::gauss:
      return encode_gauss(d);
    case CodecFormat::json:
      return encode_json(d);
    case CodecFormat::braid:
      fail("ParseError", "general diagrams cannot be re-encoded as braid words");
  }
  fail("ParseError", "unknown codec format");
}

}  // namespace skeinlab
