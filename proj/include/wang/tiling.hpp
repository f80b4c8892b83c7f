#pragma once

#include <optional>
#include <vector>

#include "wang/tile.hpp"

namespace wang {

struct Cell {
  int x = 0;
  int y = 0;
  bool operator==(const Cell& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Cell& o) const { return !(*this == o); }
};

// Rectangular window of the lattice. x grows rightward, y grows downward,
// origin is the top-left cell. A cell holds a tile index or a wildcard
// (nullopt), which meets the edge conditions of any prototile.
struct Tiling {
  Cell origin;
  int width = 0;
  int height = 0;
  std::vector<std::optional<int>> cells;  // row-major from origin

  Tiling() = default;
  Tiling(Cell o, int w, int h)
      : origin(o), width(w), height(h),
        cells(static_cast<size_t>(w) * static_cast<size_t>(h)) {}

  bool contains(Cell c) const {
    return c.x >= origin.x && c.x < origin.x + width && c.y >= origin.y &&
           c.y < origin.y + height;
  }
  std::optional<int>& at(Cell c) {
    return cells[static_cast<size_t>(c.y - origin.y) * width + (c.x - origin.x)];
  }
  const std::optional<int>& at(Cell c) const {
    return cells[static_cast<size_t>(c.y - origin.y) * width + (c.x - origin.x)];
  }
};

struct EdgeViolation {
  Cell cell;       // tile placed here ...
  Direction dir;   // ... does not match its neighbour in this direction
};

struct ValidationReport {
  bool ok = true;      // every internal edge between two tiles matches
  bool total = false;  // no cell is wildcard or unassigned
  std::vector<EdgeViolation> violations;
};

// Checks every internal edge meet. Throws std::out_of_range if the tiling
// references a tile index outside the set (malformed tiling).
ValidationReport is_valid_tiling(const TileSet& ts, const Tiling& t);

}  // namespace wang
