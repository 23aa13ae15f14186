#include "skeinlab/vassiliev.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "skeinlab/bracket.hpp"

namespace skeinlab {

namespace {

std::vector<int> relabel_by_first_occurrence(const std::vector<int>& w) {
  std::map<int, int> names;
  std::vector<int> out;
  out.reserve(w.size());
  for (int x : w) {
    auto it = names.find(x);
    if (it == names.end()) it = names.insert({x, static_cast<int>(names.size()) + 1}).first;
    out.push_back(it->second);
  }
  return out;
}

}  // namespace

ChordDiagram ChordDiagram::from_endpoints(const std::vector<int>& word, bool quotient_reflection) {
  std::map<int, int> count;
  for (int x : word) ++count[x];
  for (const auto& [label, n] : count)
    require(n == 2, "BadChordDiagram",
            "label " + std::to_string(label) + " appears " + std::to_string(n) + " times");
  ChordDiagram cd;
  const size_t n = word.size();
  auto consider = [&](const std::vector<int>& w) {
    for (size_t r = 0; r < std::max<size_t>(n, 1); ++r) {
      std::vector<int> rot;
      rot.reserve(n);
      for (size_t k = 0; k < n; ++k) rot.push_back(w[(r + k) % n]);
      rot = relabel_by_first_occurrence(rot);
      if (cd.word_.empty() || rot < cd.word_) cd.word_ = std::move(rot);
      if (n == 0) break;
    }
  };
  consider(word);
  if (quotient_reflection && n > 0) consider(std::vector<int>(word.rbegin(), word.rend()));
  return cd;
}

ChordDiagram ChordDiagram::mirrored() const {
  if (word_.empty()) return *this;
  return from_endpoints(std::vector<int>(word_.rbegin(), word_.rend()));
}

std::string ChordDiagram::to_text() const {
  std::ostringstream os;
  for (int x : word_) os << x;
  return os.str();
}

ChordDiagram chord_from_nodal(const Diagram& d, const std::set<int>& nodes) {
  require(d.component_count() == 1, "MultiComponent", "chord diagrams read off knots");
  for (int c : nodes)
    require(c >= 0 && c < d.crossing_count() &&
                d.crossings()[static_cast<size_t>(c)].kind == CrossKind::classical,
            "BadIndex", "flagged nodes must be classical crossings");
  std::vector<int> word;
  const auto comps = d.components();
  if (!comps.empty()) {
    for (int e : comps[0]) {
      const int c = d.edges()[static_cast<size_t>(e)].head.crossing;
      if (nodes.count(c)) word.push_back(c);
    }
  }
  return ChordDiagram::from_endpoints(word);
}

void WeightSystem::validate() const {
  require(basis_dim > 0 && rep_dim > 0, "BadWeightSystem", "empty weight system");
  auto commutator = [&](int a, int b) {
    std::vector<std::vector<long>> m(static_cast<size_t>(rep_dim), std::vector<long>(static_cast<size_t>(rep_dim), 0));
    for (int r = 0; r < rep_dim; ++r)
      for (int c = 0; c < rep_dim; ++c) {
        long acc = 0;
        for (int k = 0; k < rep_dim; ++k)
          acc += insertion[static_cast<size_t>(a)][static_cast<size_t>(r)][static_cast<size_t>(k)] *
                     insertion[static_cast<size_t>(b)][static_cast<size_t>(k)][static_cast<size_t>(c)] -
                 insertion[static_cast<size_t>(b)][static_cast<size_t>(r)][static_cast<size_t>(k)] *
                     insertion[static_cast<size_t>(a)][static_cast<size_t>(k)][static_cast<size_t>(c)];
        m[static_cast<size_t>(r)][static_cast<size_t>(c)] = acc;
      }
    return m;
  };
  // commutator closure [T_a, T_b] = sum_c f_abc T_c
  for (int a = 0; a < basis_dim; ++a)
    for (int b = 0; b < basis_dim; ++b) {
      const auto com = commutator(a, b);
      for (int r = 0; r < rep_dim; ++r)
        for (int c = 0; c < rep_dim; ++c) {
          long want = 0;
          for (int k = 0; k < basis_dim; ++k)
            want += structure[static_cast<size_t>(a)][static_cast<size_t>(b)][static_cast<size_t>(k)] *
                    insertion[static_cast<size_t>(k)][static_cast<size_t>(r)][static_cast<size_t>(c)];
          require(com[static_cast<size_t>(r)][static_cast<size_t>(c)] == want, "BadWeightSystem",
                  "commutator closure fails");
        }
      // antisymmetry
      for (int k = 0; k < basis_dim; ++k)
        require(structure[static_cast<size_t>(a)][static_cast<size_t>(b)][static_cast<size_t>(k)] ==
                    -structure[static_cast<size_t>(b)][static_cast<size_t>(a)][static_cast<size_t>(k)],
                "BadWeightSystem", "structure constants not antisymmetric");
    }
  // matrix Jacobi identity [A,[B,C]] = [[A,B],C] + [B,[A,C]] holds for
  // commutators identically; check the structure-constant version instead:
  // sum_e (f_abe f_ecd + f_bce f_ead + f_cae f_ebd) = 0
  for (int a = 0; a < basis_dim; ++a)
    for (int b = 0; b < basis_dim; ++b)
      for (int c = 0; c < basis_dim; ++c)
        for (int dd = 0; dd < basis_dim; ++dd) {
          long acc = 0;
          for (int e = 0; e < basis_dim; ++e)
            acc += structure[static_cast<size_t>(a)][static_cast<size_t>(b)][static_cast<size_t>(e)] *
                       structure[static_cast<size_t>(e)][static_cast<size_t>(c)][static_cast<size_t>(dd)] +
                   structure[static_cast<size_t>(b)][static_cast<size_t>(c)][static_cast<size_t>(e)] *
                       structure[static_cast<size_t>(e)][static_cast<size_t>(a)][static_cast<size_t>(dd)] +
                   structure[static_cast<size_t>(c)][static_cast<size_t>(a)][static_cast<size_t>(e)] *
                       structure[static_cast<size_t>(e)][static_cast<size_t>(b)][static_cast<size_t>(dd)];
          require(acc == 0, "BadWeightSystem", "Jacobi identity fails");
        }
}

WeightSystem WeightSystem::so3() {
  WeightSystem ws;
  ws.basis_dim = 3;
  ws.rep_dim = 3;
  auto eps = [](int a, int b, int c) -> long {
    if (a == b || b == c || a == c) return 0;
    return ((b - a + 3) % 3 == 1) ? 1 : -1;
  };
  ws.insertion.assign(3, std::vector<std::vector<long>>(3, std::vector<long>(3, 0)));
  ws.structure.assign(3, std::vector<std::vector<long>>(3, std::vector<long>(3, 0)));
  ws.metric.assign(3, std::vector<long>(3, 0));
  for (int a = 0; a < 3; ++a) {
    ws.metric[static_cast<size_t>(a)][static_cast<size_t>(a)] = 1;
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) {
        ws.insertion[static_cast<size_t>(a)][static_cast<size_t>(b)][static_cast<size_t>(c)] = eps(a, b, c);
        // (T_a)_{bc} = eps_{abc} satisfies [T_a, T_b] = -eps_{abc} T_c
        ws.structure[static_cast<size_t>(a)][static_cast<size_t>(b)][static_cast<size_t>(c)] = -eps(a, b, c);
      }
  }
  ws.validate();
  return ws;
}

BigInt lie_weight(const ChordDiagram& cd, const WeightSystem& ws) {
  const auto& w = cd.word();
  const int n = cd.degree();
  if (n == 0) return ws.rep_dim;  // trace of the identity

  // endpoints of each chord around the circle
  BigInt total = 0;
  std::vector<int> assign_a(static_cast<size_t>(n)), assign_b(static_cast<size_t>(n));
  // each chord carries indices (a, b) at its first/second endpoint, paired by
  // the metric
  std::function<void(int, BigInt)> rec = [&](int chord, BigInt factor) {
    if (chord == n) {
      // trace of the ordered product
      std::vector<std::vector<BigInt>> acc(static_cast<size_t>(ws.rep_dim),
                                           std::vector<BigInt>(static_cast<size_t>(ws.rep_dim), 0));
      for (int r = 0; r < ws.rep_dim; ++r) acc[static_cast<size_t>(r)][static_cast<size_t>(r)] = 1;
      std::vector<int> seen(static_cast<size_t>(n), 0);
      for (int pos = 0; pos < 2 * n; ++pos) {
        const int chord_id = w[static_cast<size_t>(pos)] - 1;
        const int a = seen[static_cast<size_t>(chord_id)]++ == 0 ? assign_a[static_cast<size_t>(chord_id)]
                                                                 : assign_b[static_cast<size_t>(chord_id)];
        std::vector<std::vector<BigInt>> next(static_cast<size_t>(ws.rep_dim),
                                              std::vector<BigInt>(static_cast<size_t>(ws.rep_dim), 0));
        for (int r = 0; r < ws.rep_dim; ++r)
          for (int c = 0; c < ws.rep_dim; ++c) {
            if (acc[static_cast<size_t>(r)][static_cast<size_t>(c)] == 0) continue;
            for (int k = 0; k < ws.rep_dim; ++k) {
              const long t = ws.insertion[static_cast<size_t>(a)][static_cast<size_t>(c)][static_cast<size_t>(k)];
              if (t != 0)
                next[static_cast<size_t>(r)][static_cast<size_t>(k)] +=
                    acc[static_cast<size_t>(r)][static_cast<size_t>(c)] * t;
            }
          }
        acc = std::move(next);
      }
      BigInt tr = 0;
      for (int r = 0; r < ws.rep_dim; ++r) tr += acc[static_cast<size_t>(r)][static_cast<size_t>(r)];
      total += factor * tr;
      return;
    }
    for (int a = 0; a < ws.basis_dim; ++a)
      for (int b = 0; b < ws.basis_dim; ++b) {
        const long g = ws.metric[static_cast<size_t>(a)][static_cast<size_t>(b)];
        if (g == 0) continue;
        assign_a[static_cast<size_t>(chord)] = a;
        assign_b[static_cast<size_t>(chord)] = b;
        rec(chord + 1, factor * g);
      }
  };
  rec(0, 1);
  return total;
}

std::vector<FourTermRelation> four_term_relations(int degree) {
  require(degree >= 1 && degree <= 6, "DegreeTooLarge", "four-term generation limited to degree 6");

  // all canonical chord diagrams of this degree
  std::vector<ChordDiagram> all;
  {
    std::vector<int> word(static_cast<size_t>(2 * degree), 0);
    std::function<void(int)> fill = [&](int next_label) {
      int pos = -1;
      for (int k = 0; k < 2 * degree; ++k)
        if (word[static_cast<size_t>(k)] == 0) {
          pos = k;
          break;
        }
      if (pos < 0) {
        all.push_back(ChordDiagram::from_endpoints(word));
        return;
      }
      word[static_cast<size_t>(pos)] = next_label;
      for (int k = pos + 1; k < 2 * degree; ++k) {
        if (word[static_cast<size_t>(k)] != 0) continue;
        word[static_cast<size_t>(k)] = next_label;
        fill(next_label + 1);
        word[static_cast<size_t>(k)] = 0;
      }
      word[static_cast<size_t>(pos)] = 0;
    };
    fill(1);
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
  }

  std::set<std::vector<std::pair<int, std::vector<int>>>> seen;
  std::vector<FourTermRelation> out;
  for (const ChordDiagram& cd : all) {
    const auto& w = cd.word();
    const int len = static_cast<int>(w.size());
    for (int px = 0; px < len; ++px) {
      const int c = w[static_cast<size_t>(px)];
      const int pe = (px + 1) % len;
      const int dd = w[static_cast<size_t>(pe)];
      if (dd == c) continue;  // both endpoints of the same chord
      // x-bar: the other endpoint of chord c
      int pxbar = -1;
      for (int k = 0; k < len; ++k)
        if (k != px && w[static_cast<size_t>(k)] == c) pxbar = k;
      // remove the endpoint pe and reinsert in the four local slots
      std::vector<int> base;
      for (int k = 0; k < len; ++k)
        if (k != pe) base.push_back(w[static_cast<size_t>(k)]);
      auto pos_of = [&](int orig) {  // position in `base` of original index
        int p = orig < pe ? orig : orig - 1;
        return p;
      };
      auto insert_at = [&](int slot) {
        std::vector<int> v = base;
        v.insert(v.begin() + slot, dd);
        return ChordDiagram::from_endpoints(v);
      };
      const int bx = pos_of(px), bxbar = pos_of(pxbar);
      FourTermRelation rel;
      rel.diagrams = {insert_at(bx + 1), insert_at(bx), insert_at(bxbar + 1), insert_at(bxbar)};
      rel.signs = {1, -1, 1, -1};
      // canonical key for dedup: signed multiset, sign-normalized
      std::vector<std::pair<int, std::vector<int>>> key;
      for (int k = 0; k < 4; ++k) key.push_back({rel.signs[static_cast<size_t>(k)], rel.diagrams[static_cast<size_t>(k)].word()});
      std::sort(key.begin(), key.end());
      std::vector<std::pair<int, std::vector<int>>> flipped;
      for (auto [s, ww] : key) flipped.push_back({-s, ww});
      std::sort(flipped.begin(), flipped.end());
      if (seen.count(key) || seen.count(flipped)) continue;
      seen.insert(key);
      out.push_back(std::move(rel));
    }
  }
  return out;
}

std::vector<BigRat> jones_vassiliev_coeffs(const Diagram& d, int n_max) {
  return normalized_jones(d).jones.series_coeffs("t", n_max);
}

BigRat finite_type_defect(const Diagram& d, const std::set<int>& nodes, int n) {
  require(static_cast<int>(nodes.size()) <= 12, "TooManyNodes",
          "resolution sum limited to 12 nodes");
  for (int c : nodes)
    require(c >= 0 && c < d.crossing_count() &&
                d.crossings()[static_cast<size_t>(c)].kind == CrossKind::classical,
            "BadIndex", "flagged nodes must be classical crossings");
  const std::vector<int> node_list(nodes.begin(), nodes.end());
  const size_t total = static_cast<size_t>(1) << node_list.size();
  BigRat acc = 0;
  for (size_t mask = 0; mask < total; ++mask) {
    Diagram res = d;
    int negatives = 0;
    for (size_t k = 0; k < node_list.size(); ++k) {
      const int want = (mask >> k & 1) ? -1 : 1;
      if (want < 0) ++negatives;
      if (res.crossings()[static_cast<size_t>(node_list[k])].sign != want)
        res = res.with_crossing_switched(node_list[k]);
    }
    const BigRat coeff = jones_vassiliev_coeffs(res, n)[static_cast<size_t>(n)];
    acc += (negatives % 2 == 0) ? coeff : -coeff;
  }
  return acc;
}

}  // namespace skeinlab
