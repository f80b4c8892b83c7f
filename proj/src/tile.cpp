#include "wang/tile.hpp"

#include <stdexcept>

namespace wang {

void TileSet::add(WangTile t) {
  if (find(t)) throw std::invalid_argument("duplicate tile in set '" + name + "'");
  tiles.push_back(std::move(t));
}

std::optional<int> TileSet::find(const WangTile& t) const {
  for (size_t i = 0; i < tiles.size(); ++i)
    if (tiles[i] == t) return static_cast<int>(i);
  return std::nullopt;
}

TileSet disjoint_union(const std::vector<TileSet>& sets) {
  if (sets.empty()) throw std::invalid_argument("disjoint_union of no sets");
  TileSet out;
  out.name = "union";
  Meta boundaries = Meta::array();
  Meta parts = Meta::array();
  int offset = 0;
  for (size_t i = 0; i < sets.size(); ++i) {
    int tint = static_cast<int>(i) + 1;
    boundaries.push_back(offset);
    parts.push_back(sets[i].name);
    for (const WangTile& t : sets[i].tiles) {
      out.add(WangTile{t.left.tinted(tint), t.up.tinted(tint), t.right.tinted(tint),
                       t.bottom.tinted(tint)});
    }
    offset += sets[i].size();
  }
  boundaries.push_back(offset);
  out.meta = Meta{{"kind", "disjoint-union"}, {"parts", parts}, {"boundaries", boundaries}};
  return out;
}

}  // namespace wang
