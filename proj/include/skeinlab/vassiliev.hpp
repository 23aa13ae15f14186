#pragma once

#include <array>
#include <set>
#include <vector>

#include "skeinlab/diagram.hpp"
#include "skeinlab/laurent.hpp"

namespace skeinlab {

/// Cyclic arrangement of 2n endpoints paired into n chords.  Canonical form:
/// labels renumbered by first occurrence, minimal word over all rotations.
class ChordDiagram {
public:
  ChordDiagram() = default;
  /// Builds from an endpoint word (arbitrary labels, each exactly twice).
  /// By default mirror classes stay distinct; quotient_reflection also
  /// minimizes over the reversed circle.
  static ChordDiagram from_endpoints(const std::vector<int>& word,
                                     bool quotient_reflection = false);

  /// The reflected diagram (reversed circle), canonicalized.
  ChordDiagram mirrored() const;

  int degree() const { return static_cast<int>(word_.size()) / 2; }
  const std::vector<int>& word() const { return word_; }
  std::string to_text() const;

  bool operator==(const ChordDiagram& o) const { return word_ == o.word_; }
  bool operator<(const ChordDiagram& o) const { return word_ < o.word_; }

private:
  std::vector<int> word_;
};

/// Walks the knot and records the encounters with the flagged crossings.
/// The diagram must be a knot (one component); flagged ids must be classical.
ChordDiagram chord_from_nodal(const Diagram& d, const std::set<int>& nodes);

/// Lie-algebra weight data: insertion matrices T_a, a pairing metric on the
/// basis, and structure constants with [T_a, T_b] = sum_c f_abc T_c.
struct WeightSystem {
  int basis_dim = 0;
  int rep_dim = 0;
  std::vector<std::vector<std::vector<long>>> insertion;  // [a][r][c]
  std::vector<std::vector<long>> metric;                  // [a][b]
  std::vector<std::vector<std::vector<long>>> structure;  // f[a][b][c]

  /// Commutator closure, antisymmetry and the Jacobi identity; throws on
  /// failure.
  void validate() const;

  /// so(3): insertions (T_a)_{bc} = epsilon_{abc}, metric delta.
  static WeightSystem so3();
};

/// Sum over basis assignments of metric factors times the trace of the
/// ordered insertion product around the circle.
BigInt lie_weight(const ChordDiagram& cd, const WeightSystem& ws);

struct FourTermRelation {
  std::array<ChordDiagram, 4> diagrams;
  std::array<int, 4> signs;  // the signed sum of weights vanishes
};

/// All four-term relations at the given degree from the endpoint-slide
/// construction, deduplicated.  Degrees above 6 are rejected.
std::vector<FourTermRelation> four_term_relations(int degree);

/// Coefficients c_0..c_n of the Jones polynomial at t = e^x.
std::vector<BigRat> jones_vassiliev_coeffs(const Diagram& d, int n_max);

/// Alternating sum over the 2^|nodes| resolutions of the flagged crossings
/// of the n-th Jones coefficient.
BigRat finite_type_defect(const Diagram& d, const std::set<int>& nodes, int n);

}  // namespace skeinlab
