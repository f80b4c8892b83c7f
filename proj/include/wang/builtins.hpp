#pragma once

#include <string>
#include <vector>

#include "wang/tile.hpp"

namespace wang {

// Reference sets transcribed tile-for-tile in figure order:
//   culik13       13 aperiodic tiles (Culik)
//   jeandel-rao11 11 aperiodic tiles (Jeandel and Rao)
//   binary16      all 16 tiles over {0,1}^4; encodes one bit string
//                 horizontally and another vertically
// Throws std::invalid_argument for an unknown name, listing valid names.
TileSet builtin(const std::string& name);

std::vector<std::string> builtin_names();

}  // namespace wang
