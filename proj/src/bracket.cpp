#include "skeinlab/bracket.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "skeinlab/parallel.hpp"

namespace skeinlab {

namespace {

// Flat union-find over the 4c crossing ports, seeded once with the edge
// unions; states only add the 2c smoothing unions on top of a copy.
struct LoopCounter {
  std::vector<int> base;     // edge unions folded in, fully compressed
  std::vector<int> scratch;
  std::vector<int> classical;
  int ports;

  explicit LoopCounter(const Diagram& d) {
    ports = 4 * d.crossing_count();
    base.resize(static_cast<size_t>(ports));
    for (int i = 0; i < ports; ++i) base[static_cast<size_t>(i)] = i;
    auto find = [&](int a) {
      while (base[static_cast<size_t>(a)] != a) a = base[static_cast<size_t>(a)] = base[static_cast<size_t>(base[static_cast<size_t>(a)])];
      return a;
    };
    for (const Edge& e : d.edges())
      base[static_cast<size_t>(find(4 * e.tail.crossing + e.tail.slot))] =
          find(4 * e.head.crossing + e.head.slot);
    // virtual pass-through is state independent
    for (int c = 0; c < d.crossing_count(); ++c) {
      if (d.crossings()[static_cast<size_t>(c)].kind == CrossKind::virtual_) {
        base[static_cast<size_t>(find(4 * c + 0))] = find(4 * c + 2);
        base[static_cast<size_t>(find(4 * c + 1))] = find(4 * c + 3);
      } else {
        classical.push_back(c);
      }
    }
    for (int i = 0; i < ports; ++i) base[static_cast<size_t>(i)] = find(i);
    scratch.resize(base.size());
  }

  // loop count of the state given by bitmask (bit k set = B at classical k)
  int count(std::uint64_t bits) {
    scratch = base;
    auto find = [&](int a) {
      while (scratch[static_cast<size_t>(a)] != a)
        a = scratch[static_cast<size_t>(a)] = scratch[static_cast<size_t>(scratch[static_cast<size_t>(a)])];
      return a;
    };
    auto unite = [&](int a, int b) { scratch[static_cast<size_t>(find(a))] = find(b); };
    for (size_t k = 0; k < classical.size(); ++k) {
      const int c = classical[k];
      if (bits >> k & 1) {  // B: (0,1), (2,3)
        unite(4 * c + 0, 4 * c + 1);
        unite(4 * c + 2, 4 * c + 3);
      } else {  // A: (1,2), (3,0)
        unite(4 * c + 1, 4 * c + 2);
        unite(4 * c + 3, 4 * c + 0);
      }
    }
    int loops = 0;
    for (int i = 0; i < ports; ++i)
      if (find(i) == i) ++loops;
    return loops;
  }
};

}  // namespace

std::vector<StateSummary> enumerate_states(const Diagram& d, int cap) {
  const int c = d.classical_count();
  require(c <= cap, "TooManyCrossings",
          std::to_string(c) + " classical crossings exceed the cap " + std::to_string(cap));
  LoopCounter lc(d);
  std::vector<StateSummary> out;
  out.reserve(static_cast<size_t>(1) << c);
  // tier order: by number of B-smoothings, lexicographic within a tier
  std::vector<std::uint64_t> masks(static_cast<size_t>(1) << c);
  std::iota(masks.begin(), masks.end(), 0);
  std::stable_sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
    const int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
    return pa != pb ? pa < pb : a < b;
  });
  for (std::uint64_t bits : masks) {
    StateSummary s;
    s.tier = __builtin_popcountll(bits);
    s.choice.resize(static_cast<size_t>(c));
    for (int k = 0; k < c; ++k)
      s.choice[static_cast<size_t>(k)] = (bits >> k & 1) ? Smoothing::B : Smoothing::A;
    s.loop_count = lc.count(bits) + d.free_loops();
    out.push_back(std::move(s));
  }
  return out;
}

LaurentPoly bracket_poly(const Diagram& d, int cap) {
  const int c = d.classical_count();
  require(c <= cap, "TooManyCrossings",
          std::to_string(c) + " classical crossings exceed the cap " + std::to_string(cap));

  const int max_loops = c + 1 + d.free_loops() + 1;
  // d^k expanded once; exponents of A in quarter units
  const LaurentPoly dpoly = bracket_loop_value();
  std::vector<LaurentPoly> dpow(static_cast<size_t>(max_loops) + 1);
  dpow[0] = LaurentPoly::constant(1);
  for (size_t k = 1; k < dpow.size(); ++k) dpow[k] = dpow[k - 1] * dpoly;

  // dense accumulation over the A-exponent grid (quarter units, step 4)
  const int span = 4 * (c + 2 * max_loops) + 8;
  auto accumulate = [&](std::uint64_t lo, std::uint64_t hi, LoopCounter& lc,
                        std::vector<BigInt>& acc) {
    for (std::uint64_t bits = lo; bits < hi; ++bits) {
      const int b = __builtin_popcountll(bits);
      const int a_minus_b = c - 2 * b;
      const int loops = lc.count(bits) + d.free_loops();
      for (const auto& [e, coeff] : dpow[static_cast<size_t>(loops - 1)].terms()) {
        const int qe = (e.empty() ? 0 : e[0]) + 4 * a_minus_b;
        acc[static_cast<size_t>(qe + span)] += coeff;
      }
    }
  };

  const std::uint64_t total = static_cast<std::uint64_t>(1) << c;
  const int budget = thread_budget();
  std::vector<std::vector<BigInt>> partial;
  if (budget > 1 && total >= 1024) {
    const int chunks = std::min<std::int64_t>(budget, 64);
    partial.assign(static_cast<size_t>(chunks), std::vector<BigInt>(static_cast<size_t>(2 * span + 1)));
    std::vector<LoopCounter> counters(static_cast<size_t>(chunks), LoopCounter(d));
    parallel_chunks(static_cast<std::int64_t>(total), chunks,
                    [&](std::int64_t lo, std::int64_t hi, int chunk) {
                      accumulate(static_cast<std::uint64_t>(lo), static_cast<std::uint64_t>(hi),
                                 counters[static_cast<size_t>(chunk)],
                                 partial[static_cast<size_t>(chunk)]);
                    });
  } else {
    LoopCounter lc(d);
    partial.assign(1, std::vector<BigInt>(static_cast<size_t>(2 * span + 1)));
    accumulate(0, total, lc, partial[0]);
  }

  std::map<ExpVec, BigInt> terms;
  for (int qe = -span; qe <= span; ++qe) {
    BigInt v = 0;
    for (const auto& acc : partial) v += acc[static_cast<size_t>(qe + span)];
    if (v != 0) terms[{qe}] = v;
  }
  return LaurentPoly::from_terms({"A"}, std::move(terms));
}

BracketValue normalized_jones(const Diagram& d, int cap) {
  require(d.oriented(), "Unoriented", "the normalized bracket needs an orientation");
  BracketValue out;
  out.bracket = bracket_poly(d, cap);
  const LaurentPoly minus_a_cubed = LaurentPoly::monomial("A", 3 * kQuarter, -1);
  out.f = minus_a_cubed.pow(-static_cast<long long>(d.writhe())) * out.bracket;
  out.jones = out.f.substituted("A", LaurentPoly::monomial("t", -1));
  return out;
}

}  // namespace skeinlab
