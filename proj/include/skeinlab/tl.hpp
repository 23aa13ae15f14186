#pragma once

#include <map>
#include <vector>

#include "skeinlab/laurent.hpp"

namespace skeinlab {

/// Planar perfect matching between a row of `top` points and a row of
/// `bottom` points.  Boundary points are indexed circularly: 0..top-1 runs
/// left-to-right along the top row, then top..top+bottom-1 runs right-to-left
/// along the bottom row; planarity is non-crossing in this circular order.
class Matching {
public:
  Matching(int top, int bottom, std::vector<int> pairing);

  static Matching identity(int n);
  /// U_i in TL_n (1-based i < n): cups at top (i-1, i) and bottom (i-1, i).
  static Matching u_generator(int n, int i);
  /// Cap: n points on top, n-2 on the bottom, top (i-1, i) joined.
  static Matching cap(int n, int i);
  /// Cup: n points on top, n+2 on the bottom, bottom (i-1, i) joined.
  static Matching cup(int n, int i);

  int top() const { return top_; }
  int bottom() const { return bottom_; }
  const std::vector<int>& pairing() const { return pair_; }

  int circular_index_top(int pos) const { return pos; }
  int circular_index_bottom(int pos) const { return top_ + (bottom_ - 1 - pos); }

  /// Stacks *this above `other` (bottom row glued to other's top row).
  /// Returns the composite matching and the number of closed loops formed.
  std::pair<Matching, int> stacked(const Matching& other) const;

  /// Loops of the trace closure (top point i joined to bottom point i).
  int closure_loops() const;

  bool operator==(const Matching& o) const {
    return top_ == o.top_ && bottom_ == o.bottom_ && pair_ == o.pair_;
  }
  bool operator<(const Matching& o) const;

  std::string to_text() const;

private:
  int top_ = 0, bottom_ = 0;
  std::vector<int> pair_;  // involution on circular indices
};

/// Formal Laurent-coefficient combination of matchings sharing one signature.
class TLElement {
public:
  TLElement() = default;
  explicit TLElement(const Matching& m, const LaurentPoly& coeff = LaurentPoly::constant(1));

  static TLElement tl_identity(int n) { return TLElement(Matching::identity(n)); }

  const std::map<Matching, LaurentPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::pair<int, int> signature() const;  // (top, bottom)

  TLElement operator+(const TLElement& o) const;
  TLElement operator-(const TLElement& o) const;
  TLElement scaled(const LaurentPoly& c) const;
  bool operator==(const TLElement& o) const { return terms_ == o.terms_; }

private:
  std::map<Matching, LaurentPoly> terms_;
  friend TLElement tl_multiply(const TLElement&, const TLElement&);
};

/// Stacks x above y; every closed loop formed contributes a factor d.
TLElement tl_multiply(const TLElement& x, const TLElement& y);

/// Bracket representation of the braid group: sigma_i -> A + A^{-1} U_i,
/// sigma_i^{-1} -> A^{-1} + A U_i.
TLElement braid_to_tl(int n_strands, const std::vector<int>& word);

/// Markov-style trace: sum of coeff * d^(closure loops - 1) over the terms.
LaurentPoly closure_trace(const TLElement& x);

/// Meander projector q = b after a (stacked a over b) with the loop exponent
/// k counted in the opposite composite; q satisfies q*q = d^k q whenever the
/// opposite composite's matching is the identity.
std::pair<TLElement, int> meander_projector(const Matching& a, const Matching& b);

/// All planar matchings with signature top->bottom (Catalan many when
/// top == bottom), in canonical order.
std::vector<Matching> enumerate_planar_matchings(int top, int bottom);

}  // namespace skeinlab
