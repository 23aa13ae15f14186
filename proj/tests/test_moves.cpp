#include <random>

#include "doctest.h"
#include "skeinlab/bracket.hpp"
#include "skeinlab/moves.hpp"

using namespace skeinlab;

namespace {
LaurentPoly A(int e, BigInt c = 1) { return LaurentPoly::monomial("A", e * kQuarter, c); }
}  // namespace

TEST_CASE("R1 on the bare unknot") {
  Diagram u = from_braid_word(1, {});
  Diagram k = apply_move(u, {MoveType::R1Plus, {-1, 1, 0}});
  CHECK(k.crossing_count() == 1);
  CHECK(k.writhe() == 1);
  CHECK(bracket_poly(k) == A(3, -1));
  Diagram k2 = apply_move(u, {MoveType::R1Plus, {-1, -1, 0}});
  CHECK(bracket_poly(k2) == A(-3, -1));

  // undo
  auto sites = enumerate_move_sites(k, MoveType::R1Minus);
  REQUIRE(sites.size() == 1);
  Diagram back = apply_move(k, sites[0]);
  CHECK(back.crossing_count() == 0);
  CHECK(back.free_loops() == 1);
}

TEST_CASE("R1 changes the bracket by -A^3 exactly") {
  Diagram t = from_braid_word(2, {1, 1, 1});
  const LaurentPoly base = bracket_poly(t);
  for (const auto& spec : enumerate_move_sites(t, MoveType::R1Plus)) {
    Diagram moved = apply_move(t, spec);
    CHECK(moved.genus() == 0);
    const LaurentPoly factor = spec.site[1] > 0 ? A(3, -1) : A(-3, -1);
    CHECK(bracket_poly(moved) == factor * base);
    CHECK(moved.component_count() == t.component_count());
  }
}

TEST_CASE("R2inv on closure of [1,-1]") {
  Diagram c = from_braid_word(2, {1, -1});
  auto sites = enumerate_move_sites(c, MoveType::R2Inv);
  REQUIRE(!sites.empty());
  Diagram r = apply_move(c, sites[0]);
  CHECK(r.crossing_count() == 0);
  CHECK(r.component_count() == c.component_count());
}

TEST_CASE("R2 preserves the bracket and planarity") {
  for (auto word : std::vector<std::vector<int>>{{1, 1, 1}, {1, -2, 1, -2}}) {
    Diagram d = from_braid_word(3, word);
    const LaurentPoly base = bracket_poly(d);
    auto sites = enumerate_move_sites(d, MoveType::R2);
    REQUIRE(!sites.empty());
    int checked = 0;
    for (size_t k = 0; k < sites.size(); k += 3) {  // sample
      Diagram moved = apply_move(d, sites[k]);
      CHECK(moved.crossing_count() == d.crossing_count() + 2);
      CHECK(moved.genus() == 0);
      CHECK(moved.writhe() == d.writhe());
      CHECK(bracket_poly(moved) == base);
      CHECK(moved.component_count() == d.component_count());
      ++checked;
    }
    CHECK(checked > 0);
  }
}

TEST_CASE("R3 realizes the braid relation") {
  Diagram lhs = from_braid_word(3, {1, 2, 1});
  Diagram rhs = from_braid_word(3, {2, 1, 2});
  auto sites = enumerate_move_sites(lhs, MoveType::R3);
  REQUIRE(!sites.empty());
  bool found = false;
  for (const auto& spec : sites) {
    Diagram moved = apply_move(lhs, spec);
    CHECK(moved.genus() == 0);
    CHECK(bracket_poly(moved) == bracket_poly(lhs));
    if (moved.isomorphic_to(rhs)) found = true;
  }
  CHECK(found);
}

TEST_CASE("classical fuzz preserves f and jones") {
  std::vector<std::vector<int>> fixtures = {{1, 1, 1}, {1, -2, 1, -2}, {1, 1, 1, 1, 1}, {-1, -1, -1}};
  for (size_t fi = 0; fi < fixtures.size(); ++fi) {
    Diagram d = from_braid_word(3, fixtures[fi]);
    BracketValue base = normalized_jones(d);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      FuzzResult r = random_moves(d, 15, seed * 977 + fi, classical_move_set(), 14);
      CHECK(r.diagram.genus() == 0);
      CHECK(r.diagram.virtual_count() == 0);
      BracketValue moved = normalized_jones(r.diagram);
      CHECK(moved.f == base.f);
      CHECK(moved.jones == base.jones);
      CHECK(r.diagram.component_count() == d.component_count());
    }
  }
}

TEST_CASE("bracket picks up one -A^3 factor per R1 move") {
  Diagram d = from_braid_word(2, {1, 1, 1});
  std::mt19937_64 rng(42);
  for (int it = 0; it < 10; ++it) {
    FuzzResult r = random_moves(d, 10, rng(), classical_move_set(), 12);
    // f is invariant, so bracket(moved) = (-A^3)^{writhe delta} * bracket(d)
    const int dw = r.diagram.writhe() - d.writhe();
    const LaurentPoly factor = LaurentPoly::monomial("A", 3 * kQuarter, -1).pow(dw);
    CHECK(bracket_poly(r.diagram) == factor * bracket_poly(d));
  }
}

TEST_CASE("virtual moves preserve the bracket") {
  Diagram v = decode_gauss("O1+O2+U1+U2+");
  const LaurentPoly base = bracket_poly(v);
  std::mt19937_64 rng(7);
  for (int it = 0; it < 10; ++it) {
    FuzzResult r = random_moves(v, 12, rng(), virtual_move_set(), 14);
    const int dw = r.diagram.writhe() - v.writhe();
    const LaurentPoly factor = LaurentPoly::monomial("A", 3 * kQuarter, -1).pow(dw);
    CHECK(bracket_poly(r.diagram) == factor * base);
    CHECK(r.diagram.component_count() == v.component_count());
  }
}

TEST_CASE("virtual kink insert and remove") {
  Diagram t = from_braid_word(2, {1, 1, 1});
  Diagram v = apply_move(t, {MoveType::V1, {0}});
  CHECK(v.virtual_count() == 1);
  CHECK(bracket_poly(v) == bracket_poly(t));
  auto sites = enumerate_move_sites(v, MoveType::V1Inv);
  REQUIRE(sites.size() == 1);
  Diagram back = apply_move(v, sites[0]);
  CHECK(back.virtual_count() == 0);
  CHECK(back.isomorphic_to(t));
}

TEST_CASE("bad sites raise PatternNotFound") {
  Diagram t = from_braid_word(2, {1, 1, 1});
  CHECK_THROWS_AS(apply_move(t, {MoveType::R1Minus, {0}}), Error);
  CHECK_THROWS_AS(apply_move(t, {MoveType::R2Inv, {0, 1}}), Error);
  CHECK_THROWS_AS(apply_move(t, {MoveType::V1Inv, {0}}), Error);
}
