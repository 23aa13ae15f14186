#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "skeinlab/diagram.hpp"

using namespace skeinlab;

namespace {

const char* kTrefoilPd = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
const char* kTrefoilGauss = "O1+U2+O3+U1+O2+U3+";
const char* kVirtualTrefoilGauss = "O1+O2+U1+U2+";

std::vector<Smoothing> all_choice(int n, Smoothing s) { return std::vector<Smoothing>(static_cast<size_t>(n), s); }

template <typename F>
std::string error_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

}  // namespace

TEST_CASE("braid trefoil basics") {
  Diagram t = from_braid_word(2, {1, 1, 1});
  CHECK(t.crossing_count() == 3);
  CHECK(t.classical_count() == 3);
  CHECK(t.component_count() == 1);
  CHECK(t.writhe() == 3);
  CHECK(t.genus() == 0);

  Diagram m = from_braid_word(2, {-1, -1, -1});
  CHECK(m.writhe() == -3);

  Diagram c = from_braid_word(2, {1, -1});
  CHECK(c.writhe() == 0);

  Diagram u = from_braid_word(1, {});
  CHECK(u.crossing_count() == 0);
  CHECK(u.component_count() == 1);
  CHECK(u.free_loops() == 1);

  Diagram f8 = from_braid_word(3, {1, -2, 1, -2});
  CHECK(f8.crossing_count() == 4);
  CHECK(f8.writhe() == 0);
  CHECK(f8.component_count() == 1);

  CHECK(error_code([] { from_braid_word(2, {2}); }) == "BadIndex");
}

TEST_CASE("state resolution loop counts") {
  Diagram t = from_braid_word(2, {1, 1, 1});
  CHECK(t.resolve_state(all_choice(3, Smoothing::A)).loop_count == 2);
  CHECK(t.resolve_state(all_choice(3, Smoothing::B)).loop_count == 3);

  Diagram u = from_braid_word(1, {});
  CHECK(u.resolve_state({}).loop_count == 1);

  CHECK(error_code([&] { t.resolve_state({Smoothing::A}); }) == "IncompleteChoice");
}

TEST_CASE("loop count independent of processing order") {
  // resolve_state walks edges in a fixed order; equivalence with a plain
  // union-find count over randomized orders.
  Diagram f8 = from_braid_word(3, {1, -2, 1, -2});
  std::vector<Smoothing> ch = {Smoothing::A, Smoothing::B, Smoothing::A, Smoothing::B};
  State st = f8.resolve_state(ch);
  std::mt19937 rng(5);
  for (int it = 0; it < 100; ++it) {
    // order-independent oracle: union-find over randomly permuted edges
    const auto& edges = f8.edges();
    std::vector<int> parent(4 * static_cast<size_t>(f8.crossing_count()));
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int a) { return parent[static_cast<size_t>(a)] == a ? a : parent[static_cast<size_t>(a)] = find(parent[static_cast<size_t>(a)]); };
    auto unite = [&](int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); };
    auto port = [&](int c, int s) { return 4 * c + s; };
    std::vector<int> order(edges.size());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (int e : order)
      unite(port(edges[static_cast<size_t>(e)].tail.crossing, edges[static_cast<size_t>(e)].tail.slot),
            port(edges[static_cast<size_t>(e)].head.crossing, edges[static_cast<size_t>(e)].head.slot));
    const auto cls = f8.classical_ids();
    for (size_t i = 0; i < cls.size(); ++i) {
      if (ch[i] == Smoothing::A) {
        unite(port(cls[i], 1), port(cls[i], 2));
        unite(port(cls[i], 3), port(cls[i], 0));
      } else {
        unite(port(cls[i], 0), port(cls[i], 1));
        unite(port(cls[i], 2), port(cls[i], 3));
      }
    }
    std::set<int> roots;
    for (size_t p = 0; p < parent.size(); ++p) roots.insert(find(static_cast<int>(p)));
    CHECK(static_cast<int>(roots.size()) == st.loop_count);
  }
}

TEST_CASE("pd codec") {
  Diagram t = decode_pd(kTrefoilPd);
  CHECK(t.crossing_count() == 3);
  CHECK(t.component_count() == 1);
  CHECK(t.writhe() == 3);
  CHECK(t.genus() == 0);
  CHECK(t.isomorphic_to(from_braid_word(2, {1, 1, 1})));

  // round trip up to relabeling
  Diagram t2 = decode_pd(encode_pd(t));
  CHECK(t2.isomorphic_to(t));

  CHECK(error_code([] { decode_pd("X(1,2,3)"); }) == "ParseError");
  CHECK(error_code([] { decode_pd("X(1,1,1,2) X(2,3,3,1)"); }) != "");
}

TEST_CASE("gauss codec classical") {
  Diagram t = decode_gauss(kTrefoilGauss);
  CHECK(t.crossing_count() == 3);
  CHECK(t.virtual_count() == 0);
  CHECK(t.component_count() == 1);
  CHECK(t.genus() == 0);
  CHECK(t.isomorphic_to(from_braid_word(2, {1, 1, 1})));

  CHECK(decode_gauss(encode_gauss(t)).isomorphic_to(t));

  CHECK(error_code([] { decode_gauss("O1+U2+O3+U1+O2+"); }) == "InconsistentCode");
  CHECK(error_code([] { decode_gauss("O1+U1-"); }) == "InconsistentCode");
  CHECK(error_code([] { decode_gauss("Q1+"); }) == "ParseError");
}

TEST_CASE("gauss codec inserts virtual crossings for non-planar codes") {
  Diagram v = decode_gauss(kVirtualTrefoilGauss);
  CHECK(v.classical_count() == 2);
  CHECK(v.virtual_count() == 1);
  CHECK(v.genus() == 0);  // embedded after insertion
  CHECK(v.component_count() == 1);

  // explicit virtual tokens round trip
  std::string enc = encode_gauss(v);
  CHECK(enc.find('V') != std::string::npos);
  Diagram v2 = decode_gauss(enc);
  CHECK(v2.isomorphic_to(v));
}

TEST_CASE("positive kink gauss code") {
  Diagram k = decode_gauss("O1+U1+");
  CHECK(k.crossing_count() == 1);
  CHECK(k.writhe() == 1);
  CHECK(k.genus() == 0);
  // A-state of the positive kink has 2 loops, B-state has 1
  CHECK(k.resolve_state({Smoothing::A}).loop_count == 2);
  CHECK(k.resolve_state({Smoothing::B}).loop_count == 1);
}

TEST_CASE("faces and Euler count") {
  Diagram t = from_braid_word(2, {1, 1, 1});
  CHECK(t.faces().count == 5);  // 2 - 3 + 6
  Diagram f8 = from_braid_word(3, {1, -2, 1, -2});
  CHECK(f8.faces().count == 6);  // 2 - 4 + 8

  // every corner belongs to exactly one face
  auto fs = t.faces();
  CHECK(fs.corner_face.size() == 12);
}

TEST_CASE("switch and smooth") {
  Diagram t = from_braid_word(2, {1, 1, 1});
  Diagram s = t.with_crossing_switched(0);
  CHECK(s.writhe() == 1);
  CHECK(s.genus() == 0);
  Diagram s2 = s.with_crossing_switched(0);
  CHECK(s2.writhe() == 3);
  CHECK(s2.isomorphic_to(t));

  // A-smoothing of a positive crossing keeps the orientation
  Diagram a = t.with_crossing_smoothed(0, Smoothing::A);
  CHECK(a.oriented());
  CHECK(a.crossing_count() == 2);
  // B-smoothing of a positive crossing is disoriented
  Diagram b = t.with_crossing_smoothed(0, Smoothing::B);
  CHECK(!b.oriented());
  CHECK(b.crossing_count() == 2);

  // smoothing the kink makes circles
  Diagram k = decode_gauss("O1+U1+");
  Diagram ka = k.with_crossing_smoothed(0, Smoothing::A);
  CHECK(ka.crossing_count() == 0);
  CHECK(ka.free_loops() == 2);
  Diagram kb = k.with_crossing_smoothed(0, Smoothing::B);
  CHECK(kb.free_loops() == 1);
}

TEST_CASE("json codec round trip") {
  Diagram v = decode_gauss(kVirtualTrefoilGauss);
  Diagram v2 = decode_json(encode_json(v));
  CHECK(v2.isomorphic_to(v));
  CHECK(v2.virtual_count() == v.virtual_count());
}

TEST_CASE("distant union circle") {
  Diagram t = from_braid_word(2, {1, 1, 1});
  Diagram tu = t.with_extra_circle();
  CHECK(tu.free_loops() == 1);
  CHECK(tu.component_count() == 2);
  CHECK(tu.resolve_state(all_choice(3, Smoothing::A)).loop_count == 3);
}

TEST_CASE("codec dispatch") {
  Diagram t = codec_decode(CodecFormat::braid, "1 1 1");
  CHECK(t.writhe() == 3);
  CHECK(error_code([&] { codec_encode(CodecFormat::braid, t); }) == "ParseError");
  CHECK(codec_decode(CodecFormat::gauss, kTrefoilGauss).isomorphic_to(t));
}

#include "skeinlab/fixtures.hpp"

TEST_CASE("codec round trip over the full fixture corpus") {
  for (const auto& fx : corpus_braids()) {
    Diagram d = fixture_diagram(fx);
    if (d.crossing_count() == 0 || d.free_loops() > 0) continue;
    CAPTURE(fx.name);
    CHECK(decode_pd(encode_pd(d)).isomorphic_to(d));
    CHECK(decode_json(encode_json(d)).isomorphic_to(d));
    if (d.component_count() == 1) CHECK(decode_gauss(encode_gauss(d)).isomorphic_to(d));
  }
  for (const auto& fx : virtual_fixtures()) {
    Diagram d = decode_gauss(fx.code);
    CAPTURE(fx.name);
    CHECK(decode_gauss(encode_gauss(d)).isomorphic_to(d));
    CHECK(decode_json(encode_json(d)).isomorphic_to(d));
  }
}

TEST_CASE("unoriented diagrams reject oriented-only queries") {
  Diagram t = from_braid_word(2, {1, 1, 1});
  Diagram b = t.with_crossing_smoothed(0, Smoothing::B);  // disoriented
  REQUIRE(!b.oriented());
  CHECK(error_code([&] { b.writhe(); }) == "Unoriented");
  CHECK(error_code([&] { b.canonical_code(); }) == "Unoriented");
  // state counting still works without orientation
  CHECK(b.resolve_state(all_choice(b.classical_count(), Smoothing::A)).loop_count >= 1);
}
