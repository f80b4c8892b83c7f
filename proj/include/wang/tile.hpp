#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wang/color.hpp"
#include "wang/meta.hpp"

namespace wang {

enum class Direction { Left, Up, Right, Down };

inline Direction inverse(Direction d) {
  switch (d) {
    case Direction::Left: return Direction::Right;
    case Direction::Right: return Direction::Left;
    case Direction::Up: return Direction::Down;
    case Direction::Down: return Direction::Up;
  }
  return d;
}

// Square tile, diagonally quadrisected; placed by translation only.
struct WangTile {
  Color left, up, right, bottom;

  const Color& edge(Direction d) const {
    switch (d) {
      case Direction::Left: return left;
      case Direction::Up: return up;
      case Direction::Right: return right;
      case Direction::Down: return bottom;
    }
    return left;
  }

  bool operator==(const WangTile& o) const {
    return left == o.left && up == o.up && right == o.right && bottom == o.bottom;
  }
  bool operator!=(const WangTile& o) const { return !(*this == o); }
};

// True iff placing b adjacent to a in direction dir satisfies the edge meet.
inline bool matches(const WangTile& a, const WangTile& b, Direction dir) {
  return a.edge(dir) == b.edge(inverse(dir));
}

// Finite ordered prototile catalogue; the index of a tile is its id.
struct TileSet {
  std::string name;
  Meta meta;
  std::vector<WangTile> tiles;

  int size() const { return static_cast<int>(tiles.size()); }
  const WangTile& operator[](int i) const { return tiles[static_cast<size_t>(i)]; }

  // Throws std::invalid_argument on a duplicate 4-tuple.
  void add(WangTile t);

  std::optional<int> find(const WangTile& t) const;
};

// Tints every colour of set i with component i+1 and concatenates.
// No tile of one tint can ever sit next to a tile of another.
TileSet disjoint_union(const std::vector<TileSet>& sets);

}  // namespace wang
