#include "skeinlab/khovanov.hpp"

#include <algorithm>
#include <sstream>

#include "skeinlab/parallel.hpp"

namespace skeinlab {

namespace {

// loop identification key across neighbouring states: crossing loops by their
// least edge, crossing-free circles by position
struct LoopKey {
  bool free_circle;
  int id;
  bool operator<(const LoopKey& o) const {
    return free_circle != o.free_circle ? free_circle < o.free_circle : id < o.id;
  }
  bool operator==(const LoopKey& o) const { return free_circle == o.free_circle && id == o.id; }
};

struct StateData {
  std::vector<StateLoop> loops;
  std::vector<int> edge_loop;   // edge -> loop index
  std::vector<bool> touches;    // crossing classical index -> (any loop pass)
  int loop_count = 0;
};

}  // namespace

std::map<int, long long> KhovanovComplex::tier_ranks() const {
  std::map<int, long long> out;
  for (const auto& [ij, dim] : dims) out[ij.first + n_minus] += dim;
  return out;
}

KhovanovComplex build_complex(const Diagram& d, int cap) {
  require(d.oriented(), "Unoriented", "the cube complex needs an orientation");
  require(d.virtual_count() == 0, "NonPlanar", "the cube complex needs a classical diagram");
  const int c = d.classical_count();
  require(c <= cap, "TooManyCrossings",
          std::to_string(c) + " crossings exceed the cap " + std::to_string(cap));
  require(c <= 20, "TooManyCrossings", "cube would not fit in memory");

  KhovanovComplex kc;
  kc.crossings = c;
  std::tie(kc.n_plus, kc.n_minus) = d.sign_counts();

  const std::uint32_t total = static_cast<std::uint32_t>(1) << c;
  std::vector<StateData> states(total);
  std::vector<Smoothing> choice(static_cast<size_t>(c));
  for (std::uint32_t bits = 0; bits < total; ++bits) {
    for (int k = 0; k < c; ++k)
      choice[static_cast<size_t>(k)] = (bits >> k & 1) ? Smoothing::B : Smoothing::A;
    State st = d.resolve_state(choice);
    StateData& sd = states[bits];
    sd.loops = std::move(st.loops);
    sd.loop_count = st.loop_count;
    sd.edge_loop.assign(d.edges().size(), -1);
    for (int l = 0; l < static_cast<int>(sd.loops.size()); ++l)
      for (int e : sd.loops[static_cast<size_t>(l)].edges)
        sd.edge_loop[static_cast<size_t>(e)] = l;
  }

  auto loop_key = [&](const StateData& sd, int l) -> LoopKey {
    const StateLoop& loop = sd.loops[static_cast<size_t>(l)];
    if (loop.edges.empty()) {
      // count free circles before l
      int pos = 0;
      for (int k = 0; k < l; ++k)
        if (sd.loops[static_cast<size_t>(k)].edges.empty()) ++pos;
      return {true, pos};
    }
    return {false, loop.min_edge()};
  };

  // generator indexing per (i, j): states ascending, labelings ascending
  auto grade_i = [&](std::uint32_t bits) {
    return __builtin_popcount(bits) - kc.n_minus;
  };
  auto grade_j = [&](std::uint32_t bits, std::uint32_t labeling, int loops) {
    const int ones = loops - 2 * __builtin_popcount(labeling);
    return ones + __builtin_popcount(bits) + kc.n_plus - 2 * kc.n_minus;
  };

  std::map<std::pair<int, int>, int> next_index;
  // generator -> index within its (i, j) block
  std::vector<std::vector<int>> gen_index(total);
  for (std::uint32_t bits = 0; bits < total; ++bits) {
    const int loops = states[bits].loop_count;
    gen_index[bits].assign(static_cast<size_t>(1) << loops, -1);
    const int i = grade_i(bits);
    for (std::uint32_t lab = 0; lab < (static_cast<std::uint32_t>(1) << loops); ++lab) {
      const int j = grade_j(bits, lab, loops);
      gen_index[bits][lab] = next_index[{i, j}]++;
    }
  }
  kc.dims.insert(next_index.begin(), next_index.end());

  // differentials
  std::map<std::pair<int, int>, IntMatrix> diffs;
  auto matrix_for = [&](int i, int j) -> IntMatrix& {
    auto key = std::pair{i, j};
    auto it = diffs.find(key);
    if (it == diffs.end())
      it = diffs.insert({key, IntMatrix(kc.dim(i + 1, j), kc.dim(i, j))}).first;
    return it->second;
  };

  for (std::uint32_t bits = 0; bits < total; ++bits) {
    const StateData& src = states[bits];
    const int i = grade_i(bits);
    for (int k = 0; k < c; ++k) {
      if (bits >> k & 1) continue;  // already B
      const std::uint32_t tbits = bits | (static_cast<std::uint32_t>(1) << k);
      const StateData& dst = states[tbits];
      const int t = __builtin_popcount(~bits & ((static_cast<std::uint32_t>(1) << k) - 1));
      const int sign = (t % 2 == 0) ? 1 : -1;

      // loop correspondence through the least edge
      const int nsrc = src.loop_count, ndst = dst.loop_count;
      std::vector<int> fwd(static_cast<size_t>(nsrc), -1);  // src loop -> dst loop
      {
        std::map<LoopKey, int> dst_of;
        for (int l = 0; l < ndst; ++l) {
          const StateLoop& loop = dst.loops[static_cast<size_t>(l)];
          if (loop.edges.empty()) dst_of[loop_key(dst, l)] = l;
        }
        for (int l = 0; l < nsrc; ++l) {
          const StateLoop& loop = src.loops[static_cast<size_t>(l)];
          fwd[static_cast<size_t>(l)] =
              loop.edges.empty() ? dst_of.at(loop_key(src, l))
                                 : dst.edge_loop[static_cast<size_t>(loop.min_edge())];
        }
      }

      const bool is_merge = ndst == nsrc - 1;
      require(is_merge || ndst == nsrc + 1, "BadDiagram", "resmoothing changed loops by != 1");
      int a = -1, b = -1, m = -1, split_src = -1, split_c = -1, split_d = -1;
      if (is_merge) {
        // two source loops share an image
        std::vector<int> hits(static_cast<size_t>(ndst), -1);
        for (int l = 0; l < nsrc; ++l) {
          int& h = hits[static_cast<size_t>(fwd[static_cast<size_t>(l)])];
          if (h >= 0) {
            a = h;
            b = l;
            m = fwd[static_cast<size_t>(l)];
          } else {
            h = l;
          }
        }
        require(a >= 0, "BadDiagram", "merge target not found");
      } else {
        // one destination loop is not an image
        std::vector<bool> hit(static_cast<size_t>(ndst), false);
        for (int l = 0; l < nsrc; ++l) hit[static_cast<size_t>(fwd[static_cast<size_t>(l)])] = true;
        for (int l = 0; l < ndst; ++l)
          if (!hit[static_cast<size_t>(l)]) split_d = l;
        require(split_d >= 0, "BadDiagram", "split target not found");
        // the split source: the loop whose edges got divided; it is the loop
        // of the flipped crossing in the source state
        for (int l = 0; l < nsrc; ++l) {
          for (const LoopPass& p : src.loops[static_cast<size_t>(l)].passes)
            if (p.crossing == d.classical_ids()[static_cast<size_t>(k)]) split_src = l;
        }
        require(split_src >= 0, "BadDiagram", "split source not found");
        split_c = fwd[static_cast<size_t>(split_src)];
      }

      const int j_shift = 0;  // differentials preserve j; asserted below
      (void)j_shift;
      for (std::uint32_t lab = 0; lab < (static_cast<std::uint32_t>(1) << nsrc); ++lab) {
        const int j = grade_j(bits, lab, nsrc);
        IntMatrix& mat = matrix_for(i, j);
        const int col = gen_index[bits][lab];
        auto emit = [&](std::uint32_t tlab) {
          require(grade_j(tbits, tlab, ndst) == j, "BadDiagram", "differential broke the grading");
          mat.add(gen_index[tbits][tlab], col, sign);
        };
        if (is_merge) {
          const bool xa = lab >> a & 1, xb = lab >> b & 1;
          if (xa && xb) continue;  // x x -> 0
          std::uint32_t tlab = 0;
          for (int l = 0; l < nsrc; ++l) {
            if (l == a || l == b) continue;
            if (lab >> l & 1) tlab |= static_cast<std::uint32_t>(1) << fwd[static_cast<size_t>(l)];
          }
          if (xa || xb) tlab |= static_cast<std::uint32_t>(1) << m;
          emit(tlab);
        } else {
          std::uint32_t base = 0;
          for (int l = 0; l < nsrc; ++l) {
            if (l == split_src) continue;
            if (lab >> l & 1) base |= static_cast<std::uint32_t>(1) << fwd[static_cast<size_t>(l)];
          }
          if (lab >> split_src & 1) {
            emit(base | (static_cast<std::uint32_t>(1) << split_c) |
                 (static_cast<std::uint32_t>(1) << split_d));  // x -> x (x) x
          } else {
            emit(base | (static_cast<std::uint32_t>(1) << split_c));  // 1 -> 1 (x) x + x (x) 1
            emit(base | (static_cast<std::uint32_t>(1) << split_d));
          }
        }
      }
    }
  }
  kc.differentials = std::move(diffs);

  // defining check: every composite vanishes
  for (const auto& [ij, mat] : kc.differentials) {
    auto next = kc.differentials.find({ij.first + 1, ij.second});
    if (next == kc.differentials.end()) continue;
    require(next->second.multiplied(mat).is_zero(), "BadDiagram", "d^2 != 0");
  }
  return kc;
}

HomologyTable homology(const KhovanovComplex& c) {
  // ranks and invariant factors per differential, one SNF each
  std::map<std::pair<int, int>, SmithForm> forms;
  std::vector<std::pair<const std::pair<int, int>, const IntMatrix*>> work;
  for (const auto& [ij, mat] : c.differentials) work.push_back({ij, &mat});
  std::vector<SmithForm> results(work.size());
  parallel_chunks(static_cast<std::int64_t>(work.size()), 16,
                  [&](std::int64_t lo, std::int64_t hi, int) {
                    for (std::int64_t w = lo; w < hi; ++w)
                      results[static_cast<size_t>(w)] = smith_normal_form(*work[static_cast<size_t>(w)].second);
                  });
  for (size_t w = 0; w < work.size(); ++w) forms[work[w].first] = std::move(results[w]);

  auto rank_of = [&](int i, int j) {
    auto it = forms.find({i, j});
    return it == forms.end() ? 0 : it->second.rank;
  };

  HomologyTable table;
  for (const auto& [ij, dim] : c.dims) {
    const auto [i, j] = ij;
    HomologyEntry h;
    h.free_rank = dim - rank_of(i, j) - rank_of(i - 1, j);
    if (auto it = forms.find({i - 1, j}); it != forms.end())
      for (const BigInt& f : it->second.diagonal)
        if (f > 1) h.torsion.push_back(f);
    if (h.free_rank != 0 || !h.torsion.empty()) table[{i, j}] = std::move(h);
  }
  return table;
}

LaurentPoly graded_euler(const KhovanovComplex& c) {
  LaurentPoly out;
  for (const auto& [ij, dim] : c.dims) {
    const auto [i, j] = ij;
    out = out + LaurentPoly::monomial("q", j * kQuarter, (i % 2 == 0 ? 1 : -1) * BigInt(dim));
  }
  return out;
}

std::string homology_text(const HomologyTable& t) {
  std::ostringstream os;
  for (const auto& [ij, h] : t) {
    os << "(" << ij.first << "," << ij.second << "): ";
    bool first = true;
    if (h.free_rank > 0) {
      os << "Z" << (h.free_rank > 1 ? "^" + std::to_string(h.free_rank) : "");
      first = false;
    }
    for (const BigInt& f : h.torsion) {
      if (!first) os << " + ";
      os << "Z/" << f.str();
      first = false;
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace skeinlab
