#include <random>

#include "doctest.h"
#include "skeinlab/snf.hpp"

using namespace skeinlab;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c)
      if (rows[static_cast<size_t>(r)][static_cast<size_t>(c)] != 0)
        m.set(r, c, rows[static_cast<size_t>(r)][static_cast<size_t>(c)]);
  return m;
}

// Bareiss fraction-free determinant, the independent oracle for |det|.
BigInt det_oracle(const IntMatrix& m) {
  REQUIRE(m.rows == m.cols);
  const int n = m.rows;
  std::vector<std::vector<BigInt>> a(static_cast<size_t>(n), std::vector<BigInt>(static_cast<size_t>(n), 0));
  for (const auto& [rc, v] : m.entries) a[static_cast<size_t>(rc.first)][static_cast<size_t>(rc.second)] = v;
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[static_cast<size_t>(k)][static_cast<size_t>(k)] == 0) {
      int p = -1;
      for (int r = k + 1; r < n; ++r)
        if (a[static_cast<size_t>(r)][static_cast<size_t>(k)] != 0) {
          p = r;
          break;
        }
      if (p < 0) return 0;
      std::swap(a[static_cast<size_t>(k)], a[static_cast<size_t>(p)]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            (a[static_cast<size_t>(i)][static_cast<size_t>(j)] * a[static_cast<size_t>(k)][static_cast<size_t>(k)] -
             a[static_cast<size_t>(i)][static_cast<size_t>(k)] * a[static_cast<size_t>(k)][static_cast<size_t>(j)]) /
            prev;
    prev = a[static_cast<size_t>(k)][static_cast<size_t>(k)];
    if (prev == 0) return 0;
  }
  return sign * a[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)];
}

// Rank over Q by fraction-free elimination.
int rank_oracle(IntMatrix m) {
  std::vector<std::vector<BigInt>> a(static_cast<size_t>(m.rows),
                                     std::vector<BigInt>(static_cast<size_t>(m.cols), 0));
  for (const auto& [rc, v] : m.entries) a[static_cast<size_t>(rc.first)][static_cast<size_t>(rc.second)] = v;
  int rank = 0;
  for (int c = 0; c < m.cols && rank < m.rows; ++c) {
    int p = -1;
    for (int r = rank; r < m.rows; ++r)
      if (a[static_cast<size_t>(r)][static_cast<size_t>(c)] != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    std::swap(a[static_cast<size_t>(rank)], a[static_cast<size_t>(p)]);
    for (int r = rank + 1; r < m.rows; ++r) {
      if (a[static_cast<size_t>(r)][static_cast<size_t>(c)] == 0) continue;
      const BigInt f1 = a[static_cast<size_t>(rank)][static_cast<size_t>(c)];
      const BigInt f2 = a[static_cast<size_t>(r)][static_cast<size_t>(c)];
      for (int j = 0; j < m.cols; ++j)
        a[static_cast<size_t>(r)][static_cast<size_t>(j)] =
            a[static_cast<size_t>(r)][static_cast<size_t>(j)] * f1 -
            a[static_cast<size_t>(rank)][static_cast<size_t>(j)] * f2;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("snf examples") {
  auto id2 = smith_normal_form(from_rows({{1, 0}, {0, 1}}));
  CHECK(id2.diagonal == std::vector<BigInt>{1, 1});
  CHECK(id2.rank == 2);

  auto m = smith_normal_form(from_rows({{2, 4}, {6, 8}}));
  CHECK(m.diagonal == std::vector<BigInt>{2, 4});
  CHECK(m.rank == 2);

  auto z = smith_normal_form(IntMatrix(3, 2));
  CHECK(z.diagonal == std::vector<BigInt>{0, 0});
  CHECK(z.rank == 0);
}

TEST_CASE("snf divisibility chain and det/rank oracles") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int it = 0; it < 50; ++it) {
    IntMatrix m(6, 6);
    for (int r = 0; r < 6; ++r)
      for (int c = 0; c < 6; ++c) m.set(r, c, entry(rng));
    auto s = smith_normal_form(m);
    // chain
    for (size_t i = 0; i + 1 < s.diagonal.size(); ++i) {
      if (s.diagonal[i + 1] == 0) continue;
      REQUIRE(s.diagonal[i] != 0);
      CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
    }
    // rank against rational rank
    CHECK(s.rank == rank_oracle(m));
    // |det| = product of invariant factors on nonsingular inputs
    BigInt det = det_oracle(m);
    if (det != 0) {
      BigInt prod = 1;
      for (const auto& d : s.diagonal) prod *= d;
      CHECK(prod == (det < 0 ? BigInt(-det) : det));
    }
  }
}

TEST_CASE("snf rectangular") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int it = 0; it < 30; ++it) {
    IntMatrix m(4, 7);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 7; ++c) m.set(r, c, entry(rng));
    auto s = smith_normal_form(m);
    CHECK(s.diagonal.size() == 4);
    CHECK(s.rank == rank_oracle(m));
    for (size_t i = 0; i + 1 < s.diagonal.size(); ++i)
      if (s.diagonal[i + 1] != 0) CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
  }
}

TEST_CASE("matrix product helper") {
  IntMatrix a = from_rows({{1, 2}, {3, 4}});
  IntMatrix b = from_rows({{0, 1}, {1, 0}});
  IntMatrix ab = a.multiplied(b);
  CHECK(ab.at(0, 0) == 2);
  CHECK(ab.at(0, 1) == 1);
  CHECK(ab.at(1, 0) == 4);
  CHECK(ab.at(1, 1) == 3);
}
