#include "doctest.h"
#include "skeinlab/alexander.hpp"
#include "skeinlab/bracket.hpp"
#include "skeinlab/moves.hpp"
#include "skeinlab/skein.hpp"

using namespace skeinlab;

namespace {
LaurentPoly Z(int e, BigInt c = 1) { return LaurentPoly::monomial("z", e * kQuarter, c); }
LaurentPoly Av(int e, BigInt c = 1) { return LaurentPoly::monomial("a", e * kQuarter, c); }

LaurentPoly sqrt_t_minus_inv() {
  return LaurentPoly::monomial("t", 2) - LaurentPoly::monomial("t", -2);
}
}  // namespace

TEST_CASE("conway examples") {
  CHECK(skein_eval(from_braid_word(1, {}), conway_rule()) == LaurentPoly::constant(1));
  // positive Hopf link
  CHECK(skein_eval(from_braid_word(2, {1, 1}), conway_rule()) == LaurentPoly::variable("z"));
  // right trefoil
  CHECK(skein_eval(from_braid_word(2, {1, 1, 1}), conway_rule()) ==
        Z(2) + LaurentPoly::constant(1));
  // split unlink
  CHECK(skein_eval(from_braid_word(1, {}).with_extra_circle(), conway_rule()).is_zero());
}

TEST_CASE("homflypt examples") {
  // right trefoil: 2a^-2 - a^-4 + a^-2 z^2
  CHECK(skein_eval(from_braid_word(2, {1, 1, 1}), homflypt_rule()) ==
        Av(-2, 2) - Av(-4) + Av(-2) * Z(2));
  // positive Hopf: (a^-1 - a^-3)/z + a^-1 z
  CHECK(skein_eval(from_braid_word(2, {1, 1}), homflypt_rule()) ==
        (Av(-1) - Av(-3)) * Z(-1) + Av(-1) * Z(1));
  CHECK(skein_eval(from_braid_word(1, {}), homflypt_rule()) == LaurentPoly::constant(1));
}

TEST_CASE("homflypt at a=1 is conway") {
  for (auto [n, word] : std::vector<std::pair<int, std::vector<int>>>{
           {2, {1, 1, 1}}, {3, {1, -2, 1, -2}}, {2, {1, 1}}, {3, {1, 2, 1, 2}}, {2, {-1, -1, -1}}}) {
    Diagram d = from_braid_word(n, word);
    CHECK(skein_eval(d, homflypt_rule()).substituted("a", LaurentPoly::constant(1)) ==
          skein_eval(d, conway_rule()));
  }
}

TEST_CASE("homflypt specializes to jones on knots") {
  for (auto [n, word] : std::vector<std::pair<int, std::vector<int>>>{
           {2, {1, 1, 1}}, {3, {1, -2, 1, -2}}, {2, {1, 1, 1, 1, 1}}, {2, {-1, -1, -1}}}) {
    Diagram d = from_braid_word(n, word);
    LaurentPoly p = skein_eval(d, homflypt_rule());
    p = p.substituted("a", LaurentPoly::monomial("t", -kQuarter));
    p = p.substituted("z", sqrt_t_minus_inv());
    CHECK(p == normalized_jones(d).jones);
  }
}

TEST_CASE("jones skein rule agrees with the bracket on links too") {
  for (auto [n, word] : std::vector<std::pair<int, std::vector<int>>>{
           {2, {1, 1, 1}},
           {3, {1, -2, 1, -2}},
           {2, {1, 1}},
           {2, {-1, -1}},
           {3, {1, 2, 1, 2}},
           {3, {1, 1, 2, 2}},
           {4, {1, -2, 3, 1, -2, 3}}}) {
    Diagram d = from_braid_word(n, word);
    CHECK(skein_eval(d, jones_skein_rule()) == normalized_jones(d).jones);
  }
}

TEST_CASE("conway-alexander bridge") {
  for (auto [n, word] : std::vector<std::pair<int, std::vector<int>>>{
           {2, {1, 1, 1}}, {3, {1, -2, 1, -2}}, {2, {1, 1, 1, 1, 1}}, {3, {1, 1, -2, 1, -2}}}) {
    Diagram d = from_braid_word(n, word);
    if (d.component_count() != 1) continue;
    LaurentPoly nabla = skein_eval(d, conway_rule());
    LaurentPoly bridged = nabla.substituted("z", sqrt_t_minus_inv());
    CHECK(equal_up_to_unit_power(bridged, alexander_poly(d), "t"));
  }
}

TEST_CASE("conway invariant under fuzz") {
  Diagram d = from_braid_word(3, {1, -2, 1, -2});
  const LaurentPoly base = skein_eval(d, conway_rule());
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    FuzzResult r = random_moves(d, 12, seed * 17, classical_move_set(), 12);
    CHECK(skein_eval(r.diagram, conway_rule()) == base);
  }
}

TEST_CASE("skein rejects virtual diagrams") {
  CHECK_THROWS_AS(skein_eval(decode_gauss("O1+O2+U1+U2+"), conway_rule()), Error);
}
