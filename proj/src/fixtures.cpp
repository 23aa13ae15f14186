#include "skeinlab/fixtures.hpp"

namespace skeinlab {

const std::vector<BraidFixture>& classical_fixtures() {
  static const std::vector<BraidFixture> kFixtures = {
      {"trefoil", 2, {1, 1, 1}},
      {"trefoil-mirror", 2, {-1, -1, -1}},
      {"figure-eight", 3, {1, -2, 1, -2}},
      {"cinquefoil", 2, {1, 1, 1, 1, 1}},
      {"twist-4", 3, {1, 1, 1, 2}},
      {"twist-4b", 3, {1, 2, 2, 2}},
      {"granny", 3, {1, 1, 1, 2, 2, 2}},
      {"six-mixed", 3, {1, 1, 2, 2, -1, 2}},
      {"septafoil", 2, {1, 1, 1, 1, 1, 1, 1}},
      {"negative-twist", 3, {1, -2, -2, -2}},
  };
  return kFixtures;
}

const std::vector<BraidFixture>& corpus_braids() {
  static const std::vector<BraidFixture> kCorpus = [] {
    std::vector<BraidFixture> v = classical_fixtures();
    v.push_back({"unknot", 1, {}});
    v.push_back({"hopf", 2, {1, 1}});
    v.push_back({"hopf-negative", 2, {-1, -1}});
    v.push_back({"t24-link", 2, {1, 1, 1, 1}});
    v.push_back({"solomon-mixed", 3, {1, 2, 1, 2}});
    v.push_back({"closed-123", 4, {1, 2, 3, 1, 2, 3}});
    v.push_back({"alternating-b4", 4, {1, -2, 3, 1, -2, 3}});
    v.push_back({"b3-eight", 3, {1, 1, -2, -2, 1, 1, -2, -2}});
    v.push_back({"b3-nine", 3, {1, 1, 1, 2, 2, 2, 1, 2, 1}});
    v.push_back({"b2-ten", 2, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1}});
    v.push_back({"b4-eight", 4, {1, 2, -3, 1, 2, -3, 1, 2}});
    v.push_back({"b3-eleven", 3, {1, -2, 1, -2, 1, 1, -2, 1, 2, 2, 1}});
    v.push_back({"b4-twelve", 4, {1, -2, 3, -2, 1, -2, 3, -2, 1, 3, 2, 2}});
    v.push_back({"b2-kinked", 2, {1, -1, 1, 1, 1}});
    v.push_back({"b3-writhe-zero", 3, {1, -2, 2, -1, 1, -2}});
    return v;
  }();
  return kCorpus;
}

const std::vector<GaussFixture>& virtual_fixtures() {
  static const std::vector<GaussFixture> kVirtual = {
      {"virtual-trefoil", "O1+O2+U1+U2+"},
      {"virtual-trefoil-mirror", "O1-O2-U1-U2-"},
      {"virtual-three", "O1+O2+O3+U1+U2+U3+"},
      {"trefoil-with-detour", "O1+V1U2+O3+V1U1+O2+U3+"},
      {"mixed-signs", "O1-O2+U1-U2+"},
  };
  return kVirtual;
}

Diagram fixture_diagram(const BraidFixture& f) { return from_braid_word(f.strands, f.word); }

}  // namespace skeinlab
