#include "skeinlab/skein.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace skeinlab {

namespace {

// Combinatorial link code for the recursion: cyclic pass sequences over
// abstract crossings.  Planarity plays no role here; descending diagrams are
// unlinks and both skein branches strictly reduce the measure
// (crossing count, first bad pass position).
struct SkeinLink {
  struct Pass {
    int crossing;
    bool over;
  };
  std::vector<std::vector<Pass>> comps;
  std::vector<int> sign;  // per crossing
  int circles = 0;

  int crossing_count() const { return static_cast<int>(sign.size()); }

  // first crossing met as an undercrossing on first visit; -1 if descending
  struct Bad {
    int comp = -1, pos = -1, crossing = -1;
  };
  Bad first_bad() const {
    std::vector<bool> seen(sign.size(), false);
    for (int ci = 0; ci < static_cast<int>(comps.size()); ++ci) {
      for (int p = 0; p < static_cast<int>(comps[static_cast<size_t>(ci)].size()); ++p) {
        const Pass& ps = comps[static_cast<size_t>(ci)][static_cast<size_t>(p)];
        if (seen[static_cast<size_t>(ps.crossing)]) continue;
        if (!ps.over) return {ci, p, ps.crossing};
        seen[static_cast<size_t>(ps.crossing)] = true;
      }
    }
    return {};
  }

  int component_count() const { return static_cast<int>(comps.size()) + circles; }

  SkeinLink switched(int crossing) const {
    SkeinLink out = *this;
    out.sign[static_cast<size_t>(crossing)] = -out.sign[static_cast<size_t>(crossing)];
    for (auto& comp : out.comps)
      for (auto& ps : comp)
        if (ps.crossing == crossing) ps.over = !ps.over;
    return out;
  }

  // oriented smoothing: drop the crossing, rejoining the two passes
  SkeinLink smoothed(int crossing) const {
    SkeinLink out;
    out.circles = circles;
    // locate the two passes
    int c1 = -1, p1 = -1, c2 = -1, p2 = -1;
    for (int ci = 0; ci < static_cast<int>(comps.size()); ++ci)
      for (int p = 0; p < static_cast<int>(comps[static_cast<size_t>(ci)].size()); ++p)
        if (comps[static_cast<size_t>(ci)][static_cast<size_t>(p)].crossing == crossing) {
          if (c1 < 0) {
            c1 = ci;
            p1 = p;
          } else {
            c2 = ci;
            p2 = p;
          }
        }
    // crossing renumbering
    std::vector<int> cmap(sign.size(), -1);
    for (int c = 0, k = 0; c < static_cast<int>(sign.size()); ++c)
      if (c != crossing) {
        cmap[static_cast<size_t>(c)] = k++;
        out.sign.push_back(sign[static_cast<size_t>(c)]);
      }
    auto remap = [&](std::vector<Pass> seq) {
      for (auto& ps : seq) ps.crossing = cmap[static_cast<size_t>(ps.crossing)];
      return seq;
    };

    for (int ci = 0; ci < static_cast<int>(comps.size()); ++ci) {
      if (ci == c1 || ci == c2) continue;
      out.comps.push_back(remap(comps[static_cast<size_t>(ci)]));
    }
    const auto& A = comps[static_cast<size_t>(c1)];
    if (c1 == c2) {
      // split into two cycles: (p1+1..p2-1) and (p2+1..p1-1)
      auto slice = [&](int from, int to) {  // exclusive cyclic (from, to)
        std::vector<Pass> s;
        const int n = static_cast<int>(A.size());
        for (int k = (from + 1) % n; k != to; k = (k + 1) % n) s.push_back(A[static_cast<size_t>(k)]);
        return s;
      };
      for (auto part : {slice(p1, p2), slice(p2, p1)}) {
        if (part.empty())
          ++out.circles;
        else
          out.comps.push_back(remap(std::move(part)));
      }
    } else {
      // merge: A without p1, with B spliced in starting after p2
      const auto& B = comps[static_cast<size_t>(c2)];
      std::vector<Pass> merged;
      const int na = static_cast<int>(A.size()), nb = static_cast<int>(B.size());
      for (int k = (p1 + 1) % na; k != p1; k = (k + 1) % na) merged.push_back(A[static_cast<size_t>(k)]);
      for (int k = (p2 + 1) % nb; k != p2; k = (k + 1) % nb) merged.push_back(B[static_cast<size_t>(k)]);
      if (merged.empty())
        ++out.circles;
      else
        out.comps.push_back(remap(std::move(merged)));
    }
    return out;
  }

  // deterministic memo key: each component at its minimal rotation (raw
  // crossing ids), components in stored order, labels by first occurrence.
  // Any lossless deterministic encoding is sound as a memo key; restricting
  // the normalization keeps it linear-ish instead of factorial.
  std::string canonical() const {
    std::ostringstream os;
    std::map<int, int> relabel;
    for (const auto& comp : comps) {
      const int n = static_cast<int>(comp.size());
      auto raw_token = [&](int pos) {
        const Pass& ps = comp[static_cast<size_t>(pos)];
        return (ps.over ? 1 : 0) * 2 * static_cast<int>(sign.size()) +
               2 * ps.crossing + (sign[static_cast<size_t>(ps.crossing)] > 0 ? 1 : 0);
      };
      int best_rot = 0;
      for (int r = 1; r < n; ++r) {
        for (int j = 0; j < n; ++j) {
          const int a = raw_token((r + j) % n), b = raw_token((best_rot + j) % n);
          if (a != b) {
            if (a < b) best_rot = r;
            break;
          }
        }
      }
      os << "|";
      for (int j = 0; j < n; ++j) {
        const Pass& ps = comp[static_cast<size_t>((best_rot + j) % n)];
        auto it = relabel.find(ps.crossing);
        if (it == relabel.end())
          it = relabel.insert({ps.crossing, static_cast<int>(relabel.size())}).first;
        os << (ps.over ? 'O' : 'U') << it->second
           << (sign[static_cast<size_t>(ps.crossing)] > 0 ? '+' : '-');
      }
    }
    os << "#" << circles;
    return os.str();
  }
};

SkeinLink from_diagram(const Diagram& d) {
  require(d.oriented(), "Unoriented", "skein evaluation needs an orientation");
  require(d.virtual_count() == 0, "NonPlanar", "skein evaluation needs a classical diagram");
  SkeinLink link;
  link.circles = d.free_loops();
  std::map<int, int> cmap;
  for (int c = 0; c < d.crossing_count(); ++c) {
    cmap[c] = c;
    link.sign.push_back(d.crossings()[static_cast<size_t>(c)].sign);
  }
  for (const auto& comp : d.components()) {
    std::vector<SkeinLink::Pass> seq;
    for (int e : comp) {
      const EndRef arrive = d.edges()[static_cast<size_t>(e)].head;
      seq.push_back({arrive.crossing, arrive.slot != 0});
    }
    link.comps.push_back(std::move(seq));
  }
  return link;
}

LaurentPoly delta_power(const LaurentPoly& delta, int k) {
  if (k <= 0) return LaurentPoly::constant(1);
  LaurentPoly out = LaurentPoly::constant(1);
  for (int i = 0; i < k; ++i) out = out * delta;
  return out;
}

LaurentPoly eval(const SkeinLink& link, const SkeinRule& rule,
                 std::map<std::string, LaurentPoly>& memo) {
  const std::string key = link.canonical();
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const auto bad = link.first_bad();
  LaurentPoly result;
  if (bad.crossing < 0) {
    result = delta_power(rule.unlink_delta, link.component_count() - 1);
  } else {
    const int s = link.sign[static_cast<size_t>(bad.crossing)];
    const LaurentPoly sw = eval(link.switched(bad.crossing), rule, memo);
    const LaurentPoly sm = eval(link.smoothed(bad.crossing), rule, memo);
    result = s > 0 ? rule.switch_pos * sw + rule.smooth_pos * sm
                   : rule.switch_neg * sw + rule.smooth_neg * sm;
  }
  memo.insert({key, result});
  return result;
}

}  // namespace

SkeinRule conway_rule() {
  SkeinRule r;
  r.name = "conway";
  r.switch_pos = LaurentPoly::constant(1);
  r.smooth_pos = LaurentPoly::variable("z");
  r.switch_neg = LaurentPoly::constant(1);
  r.smooth_neg = LaurentPoly::variable("z").scaled(-1);
  r.unlink_delta = LaurentPoly::zero();
  return r;
}

SkeinRule homflypt_rule() {
  SkeinRule r;
  r.name = "homflypt";
  const LaurentPoly z = LaurentPoly::variable("z");
  r.switch_pos = LaurentPoly::monomial("a", -2 * kQuarter);
  r.smooth_pos = LaurentPoly::monomial("a", -kQuarter) * z;
  r.switch_neg = LaurentPoly::monomial("a", 2 * kQuarter);
  r.smooth_neg = (LaurentPoly::variable("a") * z).scaled(-1);
  r.unlink_delta = (LaurentPoly::variable("a") - LaurentPoly::monomial("a", -kQuarter)) *
                   LaurentPoly::monomial("z", -kQuarter);
  return r;
}

SkeinRule jones_skein_rule() {
  SkeinRule r;
  r.name = "jones";
  r.switch_pos = LaurentPoly::monomial("t", 2 * kQuarter);
  r.smooth_pos = LaurentPoly::monomial("t", 6) - LaurentPoly::monomial("t", 2);  // t^{3/2} - t^{1/2}
  r.switch_neg = LaurentPoly::monomial("t", -2 * kQuarter);
  r.smooth_neg = LaurentPoly::monomial("t", -6) - LaurentPoly::monomial("t", -2);
  r.unlink_delta = LaurentPoly::monomial("t", 2, -1) + LaurentPoly::monomial("t", -2, -1);
  return r;
}

LaurentPoly skein_eval(const Diagram& d, const SkeinRule& rule) {
  std::map<std::string, LaurentPoly> memo;
  return eval(from_diagram(d), rule, memo);
}

}  // namespace skeinlab
