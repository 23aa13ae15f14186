#pragma once

#include <random>
#include <string>
#include <vector>

#include "skeinlab/diagram.hpp"

namespace skeinlab {

/// Diagram moves.  R2/R3 sites on planar classical diagrams come from faces
/// so planarity is preserved; on virtual diagrams R2 insertion is allowed on
/// any pair of arcs (the detour move absorbs the difference).
enum class MoveType {
  R1Plus,   // add a kink
  R1Minus,  // remove a kink
  R2,       // slide an arc over another (adds two crossings)
  R2Inv,    // remove a bigon
  R3,       // slide a strand across a crossing
  V1,       // add a virtual kink
  V1Inv,
  V2,  // add a virtual bigon
  V2Inv,
  V3,      // triangle move, all virtual
  VMixed,  // slide a doubly-virtual strand across a classical crossing
};

std::string move_name(MoveType t);

struct MoveSpec {
  MoveType move;
  /// Move-specific site references:
  ///   R1Plus: {edge or -1 for a free circle, sign(+1/-1), side(0/1)}
  ///   R1Minus / V1Inv: {crossing}
  ///   R2 / V2: {edge_e, side_e(0/1), edge_f, side_f(0/1), e_over(0/1; V2: 0)}
  ///   R2Inv / V2Inv: {edge_p, edge_q}
  ///   R3 / V3 / VMixed: {edge_s, edge_u, edge_v} (triangle sides; s slides)
  ///   V1: {edge}
  std::vector<int> site;
};

/// All applicable sites for a move type, in deterministic order.
std::vector<MoveSpec> enumerate_move_sites(const Diagram& d, MoveType t);

/// Applies the move; raises PatternNotFound when the site does not carry the
/// required local pattern.
Diagram apply_move(const Diagram& d, const MoveSpec& m);

/// Seeded random move walk.  Picks uniformly among the allowed move types
/// that have sites, skipping growth moves once the crossing budget is hit.
struct FuzzStep {
  MoveSpec spec;
  int crossings_after = 0;
};

struct FuzzResult {
  Diagram diagram;
  std::vector<FuzzStep> steps;
};

FuzzResult random_moves(const Diagram& d, int n_moves, std::uint64_t seed,
                        const std::vector<MoveType>& allowed, int crossing_budget);

/// Move sets used by the fuzzer and the CLI.
const std::vector<MoveType>& classical_move_set();
const std::vector<MoveType>& virtual_move_set();

}  // namespace skeinlab
