#include "skeinlab/search.hpp"

#include <functional>
#include <sstream>

#include "skeinlab/arrow.hpp"
#include "skeinlab/bracket.hpp"
#include "skeinlab/diagram.hpp"

namespace skeinlab {

namespace {

// gauss sequences of c crossings with first occurrences in increasing label
// order (every code is a rotation/relabeling of one of these)
void enumerate_words(int c, std::vector<int>& word, std::vector<std::vector<int>>& out) {
  const int len = 2 * c;
  int pos = -1;
  for (int k = 0; k < len; ++k)
    if (word[static_cast<size_t>(k)] == 0) {
      pos = k;
      break;
    }
  if (pos < 0) {
    out.push_back(word);
    return;
  }
  int next_label = 1;
  for (int k = 0; k < len; ++k) next_label = std::max(next_label, word[static_cast<size_t>(k)] + 1);
  word[static_cast<size_t>(pos)] = next_label;
  for (int k = pos + 1; k < len; ++k) {
    if (word[static_cast<size_t>(k)] != 0) continue;
    word[static_cast<size_t>(k)] = next_label;
    enumerate_words(c, word, out);
    word[static_cast<size_t>(k)] = 0;
  }
  word[static_cast<size_t>(pos)] = 0;
}

}  // namespace

UnitJonesReport search_unit_jones(int max_classical) {
  require(max_classical >= 1 && max_classical <= 6, "TooManyCrossings",
          "the exhaustive search is desk-scale; use 1..6 classical crossings");
  UnitJonesReport report;
  report.max_classical = max_classical;
  const LaurentPoly one = LaurentPoly::constant(1);

  for (int c = 1; c <= max_classical; ++c) {
    std::vector<std::vector<int>> words;
    std::vector<int> word(static_cast<size_t>(2 * c), 0);
    enumerate_words(c, word, words);
    for (const auto& w : words) {
      for (std::uint32_t over_mask = 0; over_mask < (1u << c); ++over_mask) {
        for (std::uint32_t sign_mask = 0; sign_mask < (1u << c); ++sign_mask) {
          // assemble the token string
          std::ostringstream os;
          std::vector<int> seen(static_cast<size_t>(c) + 1, 0);
          for (int k = 0; k < 2 * c; ++k) {
            const int label = w[static_cast<size_t>(k)];
            const bool first = seen[static_cast<size_t>(label)]++ == 0;
            const bool over = ((over_mask >> (label - 1)) & 1) == (first ? 1u : 0u);
            os << (over ? 'O' : 'U') << label << (((sign_mask >> (label - 1)) & 1) ? '+' : '-');
          }
          const std::string code = os.str();
          Diagram d = decode_gauss(code);
          ++report.searched;
          BracketValue bv = normalized_jones(d);
          if (bv.f != one) continue;
          ++report.unit_f;
          ArrowValue av = arrow_polynomial(d);
          if (av.normalized == one) continue;
          UnitJonesHit hit;
          hit.gauss = code;
          hit.classical = d.classical_count();
          hit.virtual_crossings = d.virtual_count();
          hit.arrow_normalized = av.normalized;
          report.hits.push_back(std::move(hit));
        }
      }
    }
  }
  return report;
}

}  // namespace skeinlab
