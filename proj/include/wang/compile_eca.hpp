#pragma once

#include <string>
#include <vector>

#include "wang/machines.hpp"
#include "wang/tile.hpp"
#include "wang/tiling.hpp"

namespace wang {

// ---------------------------------------------------------------------------
// 18-tile Wang schema
// ---------------------------------------------------------------------------

// Tile index layout of a compiled 18-tile set:
//   0..7    rule tiles <a,b,c,mark(f(a,b,c))>, (a,b,c) from 111 down to 000
//   8..15   swap pairs per (s,t): <s,B,t,(s,t)> then <t,(s,t),s,B>
//   16..17  distributor tiles <s,mark(s),s,s> for s = 0,1
//
// Lattice layout (one faithful reconstruction of the sample figure; the
// descriptor is data so alternatives stay pluggable): space-time cell (i,j)
// is the distributor at lattice (2i, 2j); swap columns are odd x; rule tiles
// sit below distributors on odd rows.
struct WangEcaLayout {
  EcaRule rule;
  int col_stride = 2;
  int row_stride = 2;

  Cell distributor_cell(int i, int j) const { return {col_stride * i, row_stride * j}; }
};

struct CompiledWangEca {
  TileSet tileset;
  WangEcaLayout layout;

  int rule_tile(int a, int b, int c) const { return 7 - (4 * a + 2 * b + c); }
  int swap_upper(int s, int t) const { return 8 + 2 * (2 * s + t); }
  int swap_lower(int s, int t) const { return 8 + 2 * (2 * s + t) + 1; }
  int distributor(int s) const { return 16 + s; }
};

CompiledWangEca compile_eca_wang(const EcaRule& rule);

// Deterministic generation (no search): row 0 distributors encode the input,
// each later distributor row carries one more application of the rule under
// zero padding. Throws std::invalid_argument on empty input or rows < 1.
Tiling tile_eca(const CompiledWangEca& compiled, const BitRow& input, int rows);

// Reads the distributor bottoms row by row; rows+1 strings including input.
std::vector<BitRow> decode_eca_rows(const CompiledWangEca& compiled, const Tiling& t);

// ---------------------------------------------------------------------------
// 15-tile hexagon/lozenge schema
// ---------------------------------------------------------------------------

// Horizontally aligned hexagon rows; lozenges bridge vertically adjacent
// hexagon pairs and cross the two bits over. Axial addressing: hexagon
// (i, j) = column i of hexagon row j; the lozenge (i, j) sits between
// hexagons i and i+1 of row j and row j+1.
struct HexTile {
  Color ul, top, ur, bottom;
  bool operator==(const HexTile& o) const {
    return ul == o.ul && top == o.top && ur == o.ur && bottom == o.bottom;
  }
};

struct LozengeTile {
  Color nw, ne, sw, se;
  bool operator==(const LozengeTile& o) const {
    return nw == o.nw && ne == o.ne && sw == o.sw && se == o.se;
  }
};

struct HalfLozengeTile {  // top boundary filler; only lower edges exist
  Color sw, se;
};

// Exactly 15 tiles for every rule: 8 rule hexagons, 4 crossover lozenges,
// 2 I-hexagons and 1 I-half-lozenge.
struct HexTileSet {
  EcaRule rule;
  std::vector<HexTile> hexes;        // 0..7 rule hexes (111 down to 000), 8..9 I-hexes <I,I,I,s>
  std::vector<LozengeTile> lozenges; // (s,t) = (0,0),(0,1),(1,0),(1,1)
  HalfLozengeTile half_lozenge;

  int size() const { return static_cast<int>(hexes.size() + lozenges.size()) + 1; }
  int rule_hex(int a, int b, int c) const { return 7 - (4 * a + 2 * b + c); }
  int init_hex(int s) const { return 8 + s; }
  int lozenge(int s, int t) const { return 2 * s + t; }
};

HexTileSet compile_eca_hex(const EcaRule& rule);

struct HexTiling {
  int width = 0;  // hexagons per row
  int rows = 0;   // rule applications; hexagon rows = rows + 1
  std::vector<std::vector<int>> hex_rows;  // indices into HexTileSet::hexes
  std::vector<std::vector<int>> loz_rows;  // indices into HexTileSet::lozenges
  int half_lozenges = 0;                   // top boundary fillers, width + 1
};

HexTiling tile_eca(const HexTileSet& ts, const BitRow& input, int rows);

std::vector<BitRow> decode_eca_rows(const HexTileSet& ts, const HexTiling& t);

// Edge-meet check for the hex geometry, including the I boundary.
bool is_valid_hex_tiling(const HexTileSet& ts, const HexTiling& t);

}  // namespace wang
