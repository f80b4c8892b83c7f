#pragma once

#include <map>
#include <string>

#include "wang/compile_eca.hpp"
#include "wang/tiling.hpp"

namespace wang {

struct RenderOptions {
  enum class Format { Svg, Ascii, Ppm };
  Format format = Format::Svg;
  int cell_size = 32;
  // colour label (canonical encoding) -> display colour; missing labels get
  // a deterministic auto palette keyed by a stable hash of the label.
  std::map<std::string, std::string> palette;
  bool show_labels = false;
};

// Pure functions of (input, options); byte-identical across runs.
// Unsupported geometry/format combinations throw std::invalid_argument.
std::string render(const TileSet& ts, const Tiling& t, const RenderOptions& opts);
std::string render(const TileSet& ts, const RenderOptions& opts);  // tile catalogue
std::string render(const HexTileSet& ts, const HexTiling& t, const RenderOptions& opts);

// Deterministic display colour for a canonical colour label.
std::string auto_color(const std::string& label);

}  // namespace wang
