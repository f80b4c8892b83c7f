#pragma once

#include <optional>
#include <vector>

#include "wang/solver.hpp"
#include "wang/tile.hpp"
#include "wang/trees.hpp"

namespace wang {

enum class TreeKind { Ait, Pit, Spokes };

struct TreeTileRole {
  enum class Kind {
    Root,
    MidRow,    // ait: side -1 left / +1 right, index i (1-based from root)
    Quadrant,  // ait: j in 1..4, outer band index i
    ColUp,     // ait/pit: node seq
    ColDown,   // ait/pit: node seq
    SpokeArm,  // spokes: dir 1..4 = up,right,down,left; node seq
    SpokeQuad  // spokes: j in 1..4; parent/child pair
  };
  Kind kind;
  int side = 0;  // MidRow
  int j = 0;     // Quadrant/SpokeQuad corner, SpokeArm direction
  int i = 0;     // MidRow/Quadrant index
  Seq node;      // column/arm node, SpokeQuad child
};

// Tree compiled to Wang tiles by one of the three constructions:
//   ait    aperiodic central-column set (root, mid-rows, quadrants, columns)
//   pit    periodic repeated-column set (root row plus U/D columns)
//   spokes four arms from the root with parent/child-keyed quadrant fillers
struct CompiledTree {
  TileSet tileset;
  TreeKind kind = TreeKind::Ait;
  FiniteTree tree;
  std::vector<TreeTileRole> roles;
  int root_tile = 0;  // the root pin: place this tile at cell (0,0)

  Pin root_pin() const { return Pin{{0, 0}, root_tile}; }
};

// Exact schema instantiation over the finite tree. The tree must be
// non-empty and normalized (prefix-closed).
CompiledTree compile_tree(const FiniteTree& tree, TreeKind kind);

// The proof's three-case walk: from `start` (default: locate the root),
// descend mid-row chains / quadrant bands to the root, then read the node
// labels up the column (the upward spoke for spokes-compiled sets).
// Returns the deepest initial segment visible in the window. Throws
// std::runtime_error when no root is reachable from the start cell.
Seq recover_path(const CompiledTree& ct, const Tiling& t,
                 std::optional<Cell> start = std::nullopt);

}  // namespace wang
