#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "wang/tiling.hpp"

namespace wang {

// A pin fixes one cell of the search region: either to a concrete tile
// index or (in wildcard mode) to the wildcard.
struct Pin {
  Cell cell;
  std::optional<int> tile;  // nullopt pins a wildcard
};

struct SolveRequest {
  const TileSet* tileset = nullptr;
  int width = 1;
  int height = 1;
  Cell origin;  // top-left cell of the region
  std::vector<Pin> pins;
  bool wildcard_allowed = false;
  // Max number of wildcards the solver may place in unpinned cells.
  std::optional<int> wildcard_budget;
  // Tile preference order; empty means ascending tile index. The wildcard,
  // when allowed, always comes after every tile.
  std::vector<int> tie_break;
};

// Deterministic first solution: cells are scanned row-major from the origin
// and candidates are tried in tie-break order. Outward-facing edges of the
// region are unconstrained. Returns nullopt when no assignment exists.
// Throws std::invalid_argument on conflicting pins.
std::optional<Tiling> solve_rect(const SolveRequest& req);

// Can an n-by-n block be assembled? (Free boundary, no pins, no wildcards.)
bool block_tileable(const TileSet& ts, int n);

// p-by-q tiling whose edges also match with wraparound on both axes.
// A torus tiling certifies a biperiodic planar tiling.
struct TorusTiling {
  int p = 0, q = 0;
  std::vector<int> cells;  // row-major, q rows of p
  int at(int x, int y) const { return cells[static_cast<size_t>(y) * p + x]; }
};

std::optional<TorusTiling> solve_torus(const TileSet& ts, int p, int q);

// Unfolds a torus tiling into an a*p wide, b*q tall flat window; the result
// always passes is_valid_tiling.
Tiling unfold(const TorusTiling& t, int a, int b);

// Bounded search for the smallest torus dimensions, ordered by p*q then p.
// Absence within the bounds is not evidence of aperiodicity, so the result
// keeps the bounds that were exhausted.
struct PeriodSearch {
  bool found = false;
  int p = 0, q = 0;
  int max_p = 0, max_q = 0;
  bool none_up_to_bound() const { return !found; }
};

PeriodSearch find_period(const TileSet& ts, int max_p, int max_q);

// Largest h <= cap such that the width-by-h window with the given row-0
// pins is tileable; cap means no blockage observed. Throws
// std::invalid_argument when the pins are off row 0 or mutually inconsistent.
int max_tileable_height(const TileSet& ts, Cell origin, int width,
                        const std::vector<Pin>& first_row_pins, int cap);

// Exhaustive oracle: all valid total tilings of a w-by-h window in
// lexicographic order, truncated at limit. Deliberately naive and
// independent of the production search path. Guarded to w*h <= 12 and
// |ts| <= 8; larger requests throw std::invalid_argument.
std::vector<Tiling> enumerate_tilings(const TileSet& ts, int w, int h, int limit);

}  // namespace wang
