#include "skeinlab/snf.hpp"

#include <algorithm>
#include <set>

namespace skeinlab {

void IntMatrix::set(int r, int c, const BigInt& v) {
  require(r >= 0 && r < rows && c >= 0 && c < cols, "BadIndex", "matrix index out of range");
  if (v == 0)
    entries.erase({r, c});
  else
    entries[{r, c}] = v;
}

void IntMatrix::add(int r, int c, const BigInt& v) {
  require(r >= 0 && r < rows && c >= 0 && c < cols, "BadIndex", "matrix index out of range");
  auto it = entries.find({r, c});
  if (it == entries.end()) {
    if (v != 0) entries[{r, c}] = v;
    return;
  }
  it->second += v;
  if (it->second == 0) entries.erase(it);
}

BigInt IntMatrix::at(int r, int c) const {
  auto it = entries.find({r, c});
  return it == entries.end() ? BigInt(0) : it->second;
}

IntMatrix IntMatrix::multiplied(const IntMatrix& o) const {
  require(cols == o.rows, "BadIndex", "matrix product shape mismatch");
  IntMatrix out(rows, o.cols);
  std::vector<std::vector<std::pair<int, BigInt>>> orows(static_cast<size_t>(o.rows));
  for (const auto& [rc, v] : o.entries) orows[static_cast<size_t>(rc.first)].push_back({rc.second, v});
  std::map<std::pair<int, int>, BigInt> acc;
  for (const auto& [rc, v] : entries) {
    for (const auto& [c2, v2] : orows[static_cast<size_t>(rc.second)]) acc[{rc.first, c2}] += v * v2;
  }
  for (auto& [rc, v] : acc)
    if (v != 0) out.entries[rc] = std::move(v);
  return out;
}

namespace {

BigInt abs_big(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

// Round-to-nearest quotient so the remainder satisfies |r| <= |b|/2.
BigInt near_quot(const BigInt& a, const BigInt& b) {
  BigInt q = a / b, r = a - q * b;
  if (2 * abs_big(r) > abs_big(b)) q += (r < 0) == (b < 0) ? 1 : -1;
  return q;
}

// Sparse elimination workspace with a column -> rows index so row and column
// operations touch only live entries.
struct Work {
  std::vector<std::map<int, BigInt>> row;
  std::vector<std::set<int>> col_rows;

  explicit Work(const IntMatrix& m)
      : row(static_cast<size_t>(m.rows)), col_rows(static_cast<size_t>(m.cols)) {
    for (const auto& [rc, v] : m.entries) {
      row[static_cast<size_t>(rc.first)][rc.second] = v;
      col_rows[static_cast<size_t>(rc.second)].insert(rc.first);
    }
  }

  const BigInt* get(int r, int c) const {
    auto it = row[static_cast<size_t>(r)].find(c);
    return it == row[static_cast<size_t>(r)].end() ? nullptr : &it->second;
  }

  void put(int r, int c, BigInt v) {
    auto& rr = row[static_cast<size_t>(r)];
    auto it = rr.find(c);
    if (v == 0) {
      if (it != rr.end()) {
        rr.erase(it);
        col_rows[static_cast<size_t>(c)].erase(r);
      }
      return;
    }
    if (it == rr.end()) {
      rr[c] = std::move(v);
      col_rows[static_cast<size_t>(c)].insert(r);
    } else {
      it->second = std::move(v);
    }
  }

  // row dst += q * row src
  void add_row(int dst, int src, const BigInt& q) {
    if (q == 0) return;
    // snapshot to avoid iterator invalidation through put()
    std::vector<std::pair<int, BigInt>> src_entries(row[static_cast<size_t>(src)].begin(),
                                                    row[static_cast<size_t>(src)].end());
    for (const auto& [c, v] : src_entries) {
      const BigInt* cur = get(dst, c);
      put(dst, c, (cur ? *cur : BigInt(0)) + q * v);
    }
  }

  // col dst += q * col src
  void add_col(int dst, int src, const BigInt& q) {
    if (q == 0) return;
    std::vector<int> rows_with_src(col_rows[static_cast<size_t>(src)].begin(),
                                   col_rows[static_cast<size_t>(src)].end());
    for (int r : rows_with_src) {
      const BigInt v = *get(r, src);
      const BigInt* cur = get(r, dst);
      put(r, dst, (cur ? *cur : BigInt(0)) + q * v);
    }
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  Work w(m);
  std::vector<bool> row_done(static_cast<size_t>(m.rows), false);
  std::vector<bool> col_done(static_cast<size_t>(m.cols), false);
  std::vector<BigInt> diag;

  const int bound = std::min(m.rows, m.cols);
  while (static_cast<int>(diag.size()) < bound) {
    // Pivot: minimal nonzero |value| among live entries; ties broken by the
    // Markowitz fill estimate, then by position.
    int pr = -1, pc = -1;
    BigInt best;
    long long best_fill = 0;
    for (int r = 0; r < m.rows && !(pr >= 0 && best == 1 && best_fill == 0); ++r) {
      if (row_done[static_cast<size_t>(r)]) continue;
      const long long rlen = static_cast<long long>(w.row[static_cast<size_t>(r)].size());
      for (const auto& [c, v] : w.row[static_cast<size_t>(r)]) {
        if (col_done[static_cast<size_t>(c)]) continue;
        BigInt a = abs_big(v);
        const long long fill =
            (rlen - 1) * (static_cast<long long>(w.col_rows[static_cast<size_t>(c)].size()) - 1);
        if (pr < 0 || a < best || (a == best && fill < best_fill)) {
          best = a;
          best_fill = fill;
          pr = r;
          pc = c;
          if (best == 1 && best_fill == 0) break;
        }
      }
    }
    if (pr < 0) break;  // remaining submatrix is zero

    for (;;) {
      const BigInt p = *w.get(pr, pc);
      bool again = false;
      // clear the pivot column; a nonzero remainder becomes the new pivot row
      {
        std::vector<int> rows_with(w.col_rows[static_cast<size_t>(pc)].begin(),
                                   w.col_rows[static_cast<size_t>(pc)].end());
        for (int r : rows_with) {
          if (r == pr || row_done[static_cast<size_t>(r)]) continue;
          w.add_row(r, pr, -near_quot(*w.get(r, pc), p));
          if (w.get(r, pc)) {
            pr = r;  // strictly smaller remainder
            again = true;
            break;
          }
        }
      }
      if (again) continue;
      // clear the pivot row; a nonzero remainder becomes the new pivot column
      {
        std::vector<int> cols_with;
        for (const auto& [c, v] : w.row[static_cast<size_t>(pr)])
          if (c != pc && !col_done[static_cast<size_t>(c)]) cols_with.push_back(c);
        for (int c : cols_with) {
          w.add_col(c, pc, -near_quot(*w.get(pr, c), p));
          if (w.get(pr, c)) {
            pc = c;
            again = true;
            break;
          }
        }
      }
      if (again) continue;

      // pivot is alone in its row and column; enforce divisibility over the
      // remaining live entries by folding an offending row in
      bool divides = true;
      for (int r = 0; r < m.rows && divides; ++r) {
        if (r == pr || row_done[static_cast<size_t>(r)]) continue;
        for (const auto& [c, v] : w.row[static_cast<size_t>(r)]) {
          if (col_done[static_cast<size_t>(c)]) continue;
          if (v % p != 0) {
            w.add_row(pr, r, 1);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }

    diag.push_back(abs_big(*w.get(pr, pc)));
    row_done[static_cast<size_t>(pr)] = true;
    col_done[static_cast<size_t>(pc)] = true;
  }

  SmithForm out;
  out.rank = static_cast<int>(diag.size());
  out.diagonal = std::move(diag);
  out.diagonal.resize(static_cast<size_t>(bound), BigInt(0));
  return out;
}

int matrix_rank(const IntMatrix& m) { return smith_normal_form(m).rank; }

}  // namespace skeinlab
