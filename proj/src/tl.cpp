#include "skeinlab/tl.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <vector>

namespace skeinlab {

namespace {

bool noncrossing(const std::vector<int>& pair) {
  // stack check over the circular order; any starting point works for
  // testing chord crossings
  const int n = static_cast<int>(pair.size());
  std::vector<int> stack;
  std::vector<bool> open(static_cast<size_t>(n), false);
  for (int i = 0; i < n; ++i) {
    if (pair[static_cast<size_t>(i)] > i) {
      stack.push_back(i);
      open[static_cast<size_t>(i)] = true;
    } else {
      if (stack.empty() || stack.back() != pair[static_cast<size_t>(i)]) return false;
      stack.pop_back();
    }
  }
  return stack.empty();
}

}  // namespace

Matching::Matching(int top, int bottom, std::vector<int> pairing)
    : top_(top), bottom_(bottom), pair_(std::move(pairing)) {
  const int n = top_ + bottom_;
  require(n % 2 == 0, "SignatureMismatch", "odd number of boundary points");
  require(static_cast<int>(pair_.size()) == n, "SignatureMismatch", "pairing size mismatch");
  for (int i = 0; i < n; ++i) {
    const int j = pair_[static_cast<size_t>(i)];
    require(j >= 0 && j < n && j != i && pair_[static_cast<size_t>(j)] == i, "SignatureMismatch",
            "pairing is not an involution");
  }
  require(noncrossing(pair_), "SignatureMismatch", "matching is not planar");
}

Matching Matching::identity(int n) {
  std::vector<int> p(static_cast<size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    const int j = 2 * n - 1 - i;  // bottom position i in circular order
    p[static_cast<size_t>(i)] = j;
    p[static_cast<size_t>(j)] = i;
  }
  return Matching(n, n, std::move(p));
}

Matching Matching::u_generator(int n, int i) {
  require(i >= 1 && i < n, "BadIndex", "generator index out of range");
  Matching id = identity(n);
  std::vector<int> p = id.pair_;
  auto link = [&p](int a, int b) {
    p[static_cast<size_t>(a)] = b;
    p[static_cast<size_t>(b)] = a;
  };
  const int t1 = i - 1, t2 = i;
  const int b1 = 2 * n - 1 - (i - 1), b2 = 2 * n - 1 - i;
  link(t1, t2);
  link(b1, b2);
  return Matching(n, n, std::move(p));
}

Matching Matching::cap(int n, int i) {
  require(n >= 2 && i >= 1 && i < n, "BadIndex", "cap position out of range");
  std::vector<int> p(static_cast<size_t>(2 * n - 2), -1);
  auto link = [&p](int a, int b) {
    p[static_cast<size_t>(a)] = b;
    p[static_cast<size_t>(b)] = a;
  };
  link(i - 1, i);
  int bpos = 0;
  for (int t = 0; t < n; ++t) {
    if (t == i - 1 || t == i) continue;
    link(t, n + (n - 2 - 1 - bpos));
    ++bpos;
  }
  return Matching(n, n - 2, std::move(p));
}

Matching Matching::cup(int n, int i) {
  require(i >= 1 && i <= n + 1, "BadIndex", "cup position out of range");
  std::vector<int> p(static_cast<size_t>(2 * n + 2), -1);
  auto link = [&p](int a, int b) {
    p[static_cast<size_t>(a)] = b;
    p[static_cast<size_t>(b)] = a;
  };
  const int bn = n + 2;
  auto bidx = [&](int pos) { return n + (bn - 1 - pos); };
  link(bidx(i - 1), bidx(i));
  int bpos = 0;
  for (int t = 0; t < n; ++t) {
    if (bpos == i - 1) bpos += 2;
    link(t, bidx(bpos));
    ++bpos;
  }
  return Matching(n, n + 2, std::move(p));
}

bool Matching::operator<(const Matching& o) const {
  if (top_ != o.top_) return top_ < o.top_;
  if (bottom_ != o.bottom_) return bottom_ < o.bottom_;
  return pair_ < o.pair_;
}

std::pair<Matching, int> Matching::stacked(const Matching& other) const {
  require(bottom_ == other.top_, "SignatureMismatch",
          "stacking needs bottom row = other's top row");
  const int mid = bottom_;
  const int m = top_, n = other.bottom_;

  // nodes: result tops 0..m-1, result bottoms (positions) 0..n-1, mids 0..mid-1
  // walk from each result boundary point through the middle row
  std::vector<int> result_pair(static_cast<size_t>(m + n), -1);
  std::vector<bool> mid_seen(static_cast<size_t>(mid), false);

  auto x_partner = [&](int circ) { return pair_[static_cast<size_t>(circ)]; };
  auto y_partner = [&](int circ) { return other.pairing()[static_cast<size_t>(circ)]; };

  // classify a circular index of *this*: top point or bottom position
  auto x_is_top = [&](int circ) { return circ < m; };
  auto x_bottom_pos = [&](int circ) { return top_ + bottom_ - 1 - circ; };
  auto y_is_top = [&](int circ) { return circ < other.top(); };
  auto y_bottom_pos = [&](int circ) { return other.top() + other.bottom() - 1 - circ; };

  // result circular index helpers
  auto res_top = [&](int t) { return t; };
  auto res_bottom = [&](int pos) { return m + (n - 1 - pos); };

  auto trace_from = [&](bool start_in_x, int start_circ) -> std::pair<bool, int> {
    // returns the terminal as (in_x, circ); marks mid points visited
    bool in_x = start_in_x;
    int circ = start_circ;
    for (;;) {
      if (in_x) {
        const int p = x_partner(circ);
        if (x_is_top(p)) return {true, p};
        const int pos = x_bottom_pos(p);
        mid_seen[static_cast<size_t>(pos)] = true;
        in_x = false;
        circ = pos;  // y top position == circular index
      } else {
        const int p = y_partner(circ);
        if (!y_is_top(p)) return {false, p};
        mid_seen[static_cast<size_t>(p)] = true;
        in_x = true;
        circ = top_ + bottom_ - 1 - p;  // x's bottom position p, circular index
      }
    }
  };

  auto link_result = [&](int a, int b) {
    result_pair[static_cast<size_t>(a)] = b;
    result_pair[static_cast<size_t>(b)] = a;
  };

  for (int t = 0; t < m; ++t) {
    if (result_pair[static_cast<size_t>(res_top(t))] >= 0) continue;
    auto [in_x, circ] = trace_from(true, t);
    const int dst = in_x ? res_top(circ) : res_bottom(y_bottom_pos(circ));
    link_result(res_top(t), dst);
  }
  for (int pos = 0; pos < n; ++pos) {
    const int idx = res_bottom(pos);
    if (result_pair[static_cast<size_t>(idx)] >= 0) continue;
    auto [in_x, circ] = trace_from(false, other.top() + other.bottom() - 1 - pos);
    const int dst = in_x ? res_top(circ) : res_bottom(y_bottom_pos(circ));
    link_result(idx, dst);
  }

  // closed loops: unvisited mid points
  int loops = 0;
  for (int s = 0; s < mid; ++s) {
    if (mid_seen[static_cast<size_t>(s)]) continue;
    // follow the cycle through x and y
    int pos = s;
    do {
      mid_seen[static_cast<size_t>(pos)] = true;
      const int via_x = x_partner(top_ + bottom_ - 1 - pos);  // must be an x-bottom
      const int pos2 = x_bottom_pos(via_x);
      mid_seen[static_cast<size_t>(pos2)] = true;
      const int via_y = y_partner(pos2);  // must be a y-top
      pos = via_y;
    } while (pos != s);
    ++loops;
  }

  return {Matching(m, n, std::move(result_pair)), loops};
}

int Matching::closure_loops() const {
  require(top_ == bottom_, "SignatureMismatch", "trace closure needs a square matching");
  const int n = top_;
  std::vector<bool> seen(static_cast<size_t>(2 * n), false);
  int loops = 0;
  for (int start = 0; start < 2 * n; ++start) {
    if (seen[static_cast<size_t>(start)]) continue;
    int i = start;
    do {
      seen[static_cast<size_t>(i)] = true;
      const int j = pair_[static_cast<size_t>(i)];
      seen[static_cast<size_t>(j)] = true;
      // closure arc: top t <-> bottom position t
      i = j < n ? 2 * n - 1 - j            // top t joins bottom pos t
                : 2 * n - 1 - j;            // bottom pos p joins top p
    } while (i != start);
    ++loops;
  }
  return loops;
}

std::string Matching::to_text() const {
  std::ostringstream os;
  os << top_ << "->" << bottom_ << ":";
  for (int i = 0; i < static_cast<int>(pair_.size()); ++i) {
    if (pair_[static_cast<size_t>(i)] > i) os << " (" << i << "," << pair_[static_cast<size_t>(i)] << ")";
  }
  return os.str();
}

TLElement::TLElement(const Matching& m, const LaurentPoly& coeff) {
  if (!coeff.is_zero()) terms_.insert({m, coeff});
}

std::pair<int, int> TLElement::signature() const {
  require(!terms_.empty(), "SignatureMismatch", "zero element has no signature");
  return {terms_.begin()->first.top(), terms_.begin()->first.bottom()};
}

TLElement TLElement::operator+(const TLElement& o) const {
  TLElement out = *this;
  for (const auto& [m, c] : o.terms_) {
    auto it = out.terms_.find(m);
    if (it == out.terms_.end()) {
      out.terms_.insert({m, c});
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) out.terms_.erase(it);
    }
  }
  return out;
}

TLElement TLElement::operator-(const TLElement& o) const { return *this + o.scaled(LaurentPoly::constant(-1)); }

TLElement TLElement::scaled(const LaurentPoly& c) const {
  TLElement out;
  if (c.is_zero()) return out;
  for (const auto& [m, v] : terms_) out.terms_.insert({m, v * c});
  return out;
}

TLElement tl_multiply(const TLElement& x, const TLElement& y) {
  if (x.is_zero() || y.is_zero()) return TLElement();
  require(x.signature().second == y.signature().first, "SignatureMismatch",
          "product needs x.bottom = y.top");
  const LaurentPoly d = bracket_loop_value();
  TLElement out;
  for (const auto& [mx, cx] : x.terms()) {
    for (const auto& [my, cy] : y.terms()) {
      auto [m, loops] = mx.stacked(my);
      LaurentPoly coeff = cx * cy * d.pow(loops);
      TLElement t(m, coeff);
      out = out + t;
    }
  }
  return out;
}

TLElement braid_to_tl(int n_strands, const std::vector<int>& word) {
  require(n_strands >= 1, "BadIndex", "need at least one strand");
  const LaurentPoly a = LaurentPoly::variable("A");
  const LaurentPoly a_inv = LaurentPoly::monomial("A", -kQuarter);
  TLElement out = TLElement::tl_identity(n_strands);
  for (int letter : word) {
    require(letter != 0 && std::abs(letter) < n_strands, "BadIndex", "braid letter out of range");
    const int i = std::abs(letter);
    TLElement u(Matching::u_generator(n_strands, i));
    TLElement rho = letter > 0
                        ? TLElement(Matching::identity(n_strands), a) + u.scaled(a_inv)
                        : TLElement(Matching::identity(n_strands), a_inv) + u.scaled(a);
    out = tl_multiply(out, rho);
  }
  return out;
}

LaurentPoly closure_trace(const TLElement& x) {
  if (x.is_zero()) return LaurentPoly::zero();
  require(x.signature().first == x.signature().second, "SignatureMismatch",
          "trace needs a square element");
  const LaurentPoly d = bracket_loop_value();
  LaurentPoly out;
  for (const auto& [m, c] : x.terms()) out = out + c * d.pow(m.closure_loops() - 1);
  return out;
}

std::pair<TLElement, int> meander_projector(const Matching& a, const Matching& b) {
  require(a.bottom() == b.top() && a.top() == b.bottom(), "SignatureMismatch",
          "meander factors must have opposite signatures");
  TLElement q = tl_multiply(TLElement(a), TLElement(b));
  auto [m, k] = b.stacked(a);
  (void)m;
  return {q, k};
}

namespace {

// Non-crossing matchings via a worklist of independent spans: the first point
// of the first span pairs with a point at odd offset, splitting that span.
void gen_matchings(std::vector<std::vector<int>> segments, std::vector<int>& pair,
                   std::vector<Matching>& out, int top, int bottom) {
  while (!segments.empty() && segments.back().empty()) segments.pop_back();
  if (segments.empty()) {
    out.push_back(Matching(top, bottom, pair));
    return;
  }
  std::vector<int> seg = std::move(segments.back());
  segments.pop_back();
  const int a = seg[0];
  for (size_t k = 1; k < seg.size(); k += 2) {
    const int b = seg[k];
    pair[static_cast<size_t>(a)] = b;
    pair[static_cast<size_t>(b)] = a;
    auto next = segments;
    if (k + 1 < seg.size()) next.emplace_back(seg.begin() + static_cast<long>(k) + 1, seg.end());
    if (k > 1) next.emplace_back(seg.begin() + 1, seg.begin() + static_cast<long>(k));
    gen_matchings(std::move(next), pair, out, top, bottom);
  }
}

}  // namespace

std::vector<Matching> enumerate_planar_matchings(int top, int bottom) {
  require((top + bottom) % 2 == 0, "SignatureMismatch", "odd point count");
  std::vector<Matching> out;
  const int n = top + bottom;
  if (n == 0) return out;
  std::vector<int> points(static_cast<size_t>(n));
  std::iota(points.begin(), points.end(), 0);
  std::vector<int> pair(static_cast<size_t>(n), -1);
  gen_matchings({points}, pair, out, top, bottom);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace skeinlab
