#include "skeinlab/arrow.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace skeinlab {

int reduce_cusp_word(const std::string& word) {
  require(word.size() % 2 == 0, "OddLength", "cusp words have even length");
  std::deque<char> w;
  for (char c : word) {
    require(c == 'L' || c == 'R', "OddLength", "cusp letters are L and R");
    if (!w.empty() && w.back() == c)
      w.pop_back();
    else
      w.push_back(c);
  }
  // wrap-around cancellations of the cyclic word
  while (w.size() >= 2 && w.front() == w.back()) {
    w.pop_front();
    w.pop_back();
  }
  return static_cast<int>(w.size()) / 2;
}

std::vector<std::string> state_cusp_words(const Diagram& d, const std::vector<Smoothing>& choice) {
  const State st = d.resolve_state(choice);
  std::vector<std::string> out;
  for (const StateLoop& loop : st.loops) {
    std::string word;
    bool dir = true;  // the walk starts at the least edge, forward
    for (const LoopPass& p : loop.passes) {
      const bool dir_after = !p.reversed_after;
      if (dir != dir_after) {
        word += (p.out_slot == (p.in_slot + 1) % 4) ? 'R' : 'L';
      }
      dir = dir_after;
    }
    out.push_back(std::move(word));
  }
  return out;
}

ArrowValue arrow_polynomial(const Diagram& d, int cap) {
  require(d.oriented(), "Unoriented", "the arrow polynomial needs an orientation");
  const int c = d.classical_count();
  require(c <= cap, "TooManyCrossings",
          std::to_string(c) + " classical crossings exceed the cap " + std::to_string(cap));

  const LaurentPoly dpoly = bracket_loop_value();
  std::vector<LaurentPoly> dpow(static_cast<size_t>(c) + d.free_loops() + 2);
  dpow[0] = LaurentPoly::constant(1);
  for (size_t k = 1; k < dpow.size(); ++k) dpow[k] = dpow[k - 1] * dpoly;

  // first pass: per state, the A-weight, loop count, and K-index multiset
  struct StateTerm {
    int a_minus_b;
    int loops;
    std::map<int, int> kcount;
  };
  std::vector<StateTerm> states;
  int max_k = 0;
  const std::uint64_t total = static_cast<std::uint64_t>(1) << c;
  std::vector<Smoothing> choice(static_cast<size_t>(c));
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    for (int k = 0; k < c; ++k)
      choice[static_cast<size_t>(k)] = (bits >> k & 1) ? Smoothing::B : Smoothing::A;
    StateTerm t;
    t.a_minus_b = c - 2 * __builtin_popcountll(bits);
    const auto words = state_cusp_words(d, choice);
    t.loops = static_cast<int>(words.size());
    for (const auto& w : words) {
      const int n = reduce_cusp_word(w);
      if (n > 0) {
        ++t.kcount[n];
        max_k = std::max(max_k, n);
      }
    }
    states.push_back(std::move(t));
  }

  // assemble over variables [A, K1..Kmax]
  std::vector<std::string> vars = {"A"};
  for (int k = 1; k <= max_k; ++k) vars.push_back("K" + std::to_string(k));
  std::sort(vars.begin(), vars.end());
  std::map<std::string, size_t> pos;
  for (size_t i = 0; i < vars.size(); ++i) pos[vars[i]] = i;

  std::map<ExpVec, BigInt> terms;
  for (const StateTerm& t : states) {
    ExpVec base(vars.size(), 0);
    for (const auto& [k, mult] : t.kcount)
      base[pos.at("K" + std::to_string(k))] = mult * kQuarter;
    for (const auto& [de, dc] : dpow[static_cast<size_t>(t.loops - 1)].terms()) {
      ExpVec e = base;
      e[pos.at("A")] = (de.empty() ? 0 : de[0]) + 4 * t.a_minus_b;
      terms[e] += dc;
    }
  }
  ArrowValue out;
  out.raw = LaurentPoly::from_terms(vars, std::move(terms));
  out.normalized = LaurentPoly::monomial("A", 3 * kQuarter, -1).pow(-static_cast<long long>(d.writhe())) * out.raw;
  return out;
}

}  // namespace skeinlab
