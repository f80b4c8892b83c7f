#pragma once

#include <optional>
#include <vector>

#include "wang/machines.hpp"
#include "wang/solver.hpp"
#include "wang/tile.hpp"

namespace wang {

// Role of a tile in a compiled machine set, used by the decoder.
struct TmTileRole {
  enum class Kind { Symbol, HeadLeft, HeadRight, Comp, Halt };
  Kind kind;
  int s = 0;      // Symbol: the symbol; Head: symbol part of (s,q)
  int q = 0;      // Head: state part of (s,q)
  int rule = -1;  // Comp/Halt: index into tm.rules
};

// Machine compiled to Wang tiles. Row y0+r of a pinned solve corresponds to
// computation step r; the tape is read off the head-marker track.
struct CompiledTm {
  TileSet tileset;
  TuringMachine tm;
  std::vector<int> input;          // symbol ids; input[0] sits under the head
  std::vector<TmTileRole> roles;   // per tile index
  int head_col = 0;                // column of the initial head tile
  bool reachable_only = false;

  int symbol_tile(int s) const;              // index of <B,s,B,s>
  int head_tile_left(int s, int q) const;    // <q,s,B,(s,q)>
  int head_tile_right(int s, int q) const;   // <B,s,q,(s,q)>

  // Row-0 pins for a window [x0, x0+width): head tile at head_col, input
  // symbols to its right, blanks beyond. Columns left of the head are left
  // free; the search absorbs the initial state edge there.
  std::vector<Pin> pins_for_window(int x0, int width) const;
};

// Instantiates the symbol / head-state / computation / halting schema over
// the machine's colours. Full sigma-cross-q head coverage by default;
// reachable_only restricts head tiles to (s,q) pairs a rule can produce.
// Throws std::invalid_argument if input contains a symbol not in tm.
CompiledTm compile_tm(const TuringMachine& tm, const std::vector<int>& input,
                      bool reachable_only = false);

// Reads configurations back out of a valid pinned tiling by following the
// head-marker track; returns one configuration per covered row. Throws
// std::runtime_error when the track is malformed (no unique marker).
std::vector<TmConfig> decode_tm_rows(const CompiledTm& ct, const Tiling& t);

}  // namespace wang
