#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "skeinlab/error.hpp"

namespace skeinlab {

enum class CrossKind : uint8_t { classical, virtual_ };

/// One attachment point of an edge: slot 0..3 of a crossing, counterclockwise.
struct EndRef {
  int crossing = -1;
  int slot = -1;
  bool operator==(const EndRef& o) const { return crossing == o.crossing && slot == o.slot; }
  bool operator<(const EndRef& o) const {
    return crossing != o.crossing ? crossing < o.crossing : slot < o.slot;
  }
};

/// Classical crossings carry their slot layout implicitly, fixed by the sign:
///   sign +1 (ccw): slot0 under-in, slot1 over-in,  slot2 under-out, slot3 over-out
///   sign -1 (ccw): slot0 under-in, slot1 over-out, slot2 under-out, slot3 over-in
/// Virtual crossings pair slots (0,2) and (1,3); no over/under, sign 0.
struct Crossing {
  CrossKind kind = CrossKind::classical;
  int sign = 0;
};

/// Directed edge; tail leaves its crossing, head enters.  Directions agree
/// with the diagram orientation while `oriented()` holds.
struct Edge {
  EndRef tail, head;
};

/// Smoothing choice at a classical crossing.  In slot terms the A-smoothing
/// joins (slot1,slot2) and (slot3,slot0); B joins (slot0,slot1) and
/// (slot2,slot3).  The convention is pinned by the calibration test
/// <positive kink> = -A^3.
enum class Smoothing : uint8_t { A = 0, B = 1 };

/// One traversal pass of a state loop through a crossing.
struct LoopPass {
  int crossing;
  int in_slot;
  int out_slot;
  bool reversed_after;  // traversal runs against edge orientation after the pass
};

/// A closed loop of a resolved state: ordered passes plus the edge support.
struct StateLoop {
  std::vector<LoopPass> passes;
  std::vector<int> edges;  // ascending; empty for a crossing-free circle
  int min_edge() const { return edges.empty() ? -1 : edges.front(); }
};

struct State {
  std::vector<Smoothing> choice;  // indexed by classical crossing order
  std::vector<StateLoop> loops;   // sorted by least edge id
  int loop_count = 0;
};

/// Faces of the rotation system (well-defined for any genus; genus 0 iff the
/// classical diagram is planar).  Corner k of a crossing lies between slots k
/// and k+1 counterclockwise.
struct FaceStructure {
  int count = 0;
  std::map<std::pair<int, int>, int> corner_face;  // (crossing, corner) -> face
  std::vector<std::array<int, 2>> edge_faces;      // per edge: {left-ish, right-ish}
  std::vector<std::vector<std::pair<int, int>>> face_corners;  // face -> corners
};

/// Immutable combinatorial link diagram: 4-valent crossings (classical and
/// virtual) joined by directed edges, plus crossing-free circles.
class Diagram {
public:
  Diagram() = default;
  /// Validates attachments, orientation patterns and connectivity.
  Diagram(std::vector<Crossing> crossings, std::vector<Edge> edges, int free_loops,
          bool oriented = true);

  const std::vector<Crossing>& crossings() const { return crossings_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int free_loops() const { return free_loops_; }
  bool oriented() const { return oriented_; }

  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int classical_count() const;
  int virtual_count() const { return crossing_count() - classical_count(); }
  std::vector<int> classical_ids() const;

  /// Attachment lookup: which edge sits at (crossing, slot), and whether it
  /// is attached by its tail.
  std::pair<int, bool> edge_at(int crossing, int slot) const;

  int component_count() const;
  /// Edges of each strand component in traversal order, components sorted by
  /// least edge id.  Crossing-free circles are not included.
  std::vector<std::vector<int>> components() const;

  int writhe() const;  // sum of classical signs; requires orientation

  /// Counts of positive / negative classical crossings.
  std::pair<int, int> sign_counts() const;

  State resolve_state(const std::vector<Smoothing>& choice) const;

  FaceStructure faces() const;
  int genus() const;
  bool is_planar_classical() const { return virtual_count() == 0 && genus() == 0; }

  Diagram with_crossing_switched(int crossing) const;
  Diagram with_crossing_smoothed(int crossing, Smoothing s) const;
  Diagram with_extra_circle() const;  // distant union with an unknotted circle

  /// Minimal gauss-style code over all basepoints and component orders;
  /// equal strings == isomorphic oriented diagrams.
  std::string canonical_code() const;

  bool isomorphic_to(const Diagram& o) const { return canonical_code() == o.canonical_code(); }

private:
  std::vector<Crossing> crossings_;
  std::vector<Edge> edges_;
  int free_loops_ = 0;
  bool oriented_ = true;

  void validate() const;
  friend class DiagramBuilder;
};

// -- codecs -----------------------------------------------------------------

/// Trace closure of a braid word; one classical crossing per letter, strands
/// oriented downward, generator k crosses strands k, k+1 (positive: left over
/// right).  Untouched strand positions close into free circles.
Diagram from_braid_word(int n_strands, const std::vector<int>& word);

/// PD text `X(a,b,c,d) ...`, ends counterclockwise, `a` the incoming
/// under-edge.  Classical planar diagrams only.
Diagram decode_pd(const std::string& text);
std::string encode_pd(const Diagram& d);

/// Gauss text `O1+U2+...` with optional `V<k>` tokens.  Signed codes that are
/// not planar-realizable are embedded by inserting virtual crossings.
Diagram decode_gauss(const std::string& text);
std::string encode_gauss(const Diagram& d);

std::string encode_json(const Diagram& d);
Diagram decode_json(const std::string& text);

enum class CodecFormat { pd, gauss, braid, json };

Diagram codec_decode(CodecFormat f, const std::string& text);
std::string codec_encode(CodecFormat f, const Diagram& d);

}  // namespace skeinlab
