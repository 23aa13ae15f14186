#include "doctest.h"
#include "skeinlab/bracket.hpp"
#include "skeinlab/tensor.hpp"

using namespace skeinlab;

TEST_CASE("imaginary unit reduction") {
  const LaurentPoly i = LaurentPoly::variable("i");
  CHECK(reduce_imaginary(i * i) == LaurentPoly::constant(-1));
  CHECK(reduce_imaginary(i * i * i) == i.scaled(-1));
  CHECK(reduce_imaginary(i * i * i * i) == LaurentPoly::constant(1));
  CHECK(reduce_imaginary(LaurentPoly::monomial("i", -kQuarter)) == i.scaled(-1));  // i^{-1} = -i
}

TEST_CASE("default matrices") {
  RMatrixSet rm = default_rmatrix();
  CHECK(rm.M.multiplied(rm.M) == PolyMatrix::identity(2));
  LaurentPoly loop;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) loop = loop + rm.M.at(a, b) * rm.M.at(a, b);
  CHECK(reduce_imaginary(loop) == bracket_loop_value());
  CHECK(rm.R_plus.multiplied(rm.R_minus) == PolyMatrix::identity(4));
}

TEST_CASE("axioms all pass for the default set") {
  AxiomReport rep = verify_tensor_axioms(default_rmatrix());
  for (const auto& c : rep.checks) {
    INFO(c.name);
    CHECK(c.pass);
  }
  CHECK(rep.all_pass());
  CHECK(rep.checks.size() == 5);
}

TEST_CASE("fault injection: corrupted M breaks min/max cancellation") {
  RMatrixSet rm = default_rmatrix();
  rm.M.at(1, 0) = rm.M.at(1, 0).scaled(-1);  // swap a sign
  AxiomReport rep = verify_tensor_axioms(rm);
  bool minmax = true, loop = true;
  for (const auto& c : rep.checks) {
    if (c.name == "minmax") minmax = c.pass;
    if (c.name == "loop") loop = c.pass;
  }
  CHECK(!minmax);
  CHECK(loop);  // the loop value survives the sign swap
}

TEST_CASE("fault injection: identity R passes YBE but fails the slide") {
  RMatrixSet rm = default_rmatrix();
  rm.R_plus = PolyMatrix::identity(4);
  rm.R_minus = PolyMatrix::identity(4);
  AxiomReport rep = verify_tensor_axioms(rm);
  for (const auto& c : rep.checks) {
    if (c.name == "ybe") CHECK(c.pass);
    if (c.name == "slide") CHECK(!c.pass);
    if (c.name == "vertical-r2") CHECK(c.pass);
  }
}

TEST_CASE("morse compilation shapes") {
  MorseWord circ = compile_morse(1, {});
  REQUIRE(circ.events.size() == 2);
  CHECK(circ.events[0].kind == MorseEvent::Kind::cup);
  CHECK(circ.events[0].pos == 0);
  CHECK(circ.events[1].kind == MorseEvent::Kind::cap);
  CHECK(circ.events[1].pos == 0);

  MorseWord one = compile_morse(2, {1});
  CHECK(one.events.size() == 5);
  MorseWord tre = compile_morse(2, {1, 1, 1});
  CHECK(tre.events.size() == 7);
}

TEST_CASE("contract golden values") {
  RMatrixSet rm = default_rmatrix();
  const LaurentPoly d = bracket_loop_value();
  // circle
  CHECK(contract(compile_morse(1, {}), rm) == d);
  // trefoil: d * bracket
  CHECK(contract(compile_morse(2, {1, 1, 1}), rm) ==
        d * bracket_poly(from_braid_word(2, {1, 1, 1})));
  // two circles, nested and sequential
  MorseWord nested{{{MorseEvent::Kind::cup, 0},
                    {MorseEvent::Kind::cup, 1},
                    {MorseEvent::Kind::cap, 1},
                    {MorseEvent::Kind::cap, 0}}};
  CHECK(contract(nested, rm) == d * d);
  MorseWord sequential{{{MorseEvent::Kind::cup, 0},
                        {MorseEvent::Kind::cap, 0},
                        {MorseEvent::Kind::cup, 0},
                        {MorseEvent::Kind::cap, 0}}};
  CHECK(contract(sequential, rm) == d * d);
}

TEST_CASE("contraction agrees with the bracket engine over corpus braids") {
  RMatrixSet rm = default_rmatrix();
  const LaurentPoly d = bracket_loop_value();
  for (auto [n, word] : std::vector<std::pair<int, std::vector<int>>>{
           {2, {1}},
           {2, {-1}},
           {2, {1, 1, 1}},
           {3, {1, -2, 1, -2}},
           {3, {1, 2, 1, 2}},
           {4, {1, -2, 3, 1, -2, 3}},
           {3, {-1, -1, 2, 2}},
       }) {
    CHECK(contract(compile_morse(n, word), rm) == d * bracket_poly(from_braid_word(n, word)));
  }
}

TEST_CASE("far-apart events commute") {
  RMatrixSet rm = default_rmatrix();
  // swap two crossings at disjoint positions in a 4-strand word
  MorseWord a = compile_morse(4, {1, 3, 1, 3});
  MorseWord b = compile_morse(4, {3, 1, 3, 1});
  CHECK(contract(a, rm) == contract(b, rm));
}
