#pragma once

#include <string>

#include "wang/compile_eca.hpp"
#include "wang/compile_tm.hpp"
#include "wang/compile_tree.hpp"
#include "wang/meta.hpp"
#include "wang/solver.hpp"
#include "wang/tiling.hpp"
#include "wang/trees.hpp"

namespace wang {

// Wire formats. Field order is fixed; colours use their canonical encoding.
//   tileset: {"name": str, "meta": {...}, "tiles": [{"l","u","r","b"}...]}
//   tiling:  {"width": w, "height": h, "origin": [x,y], "cells": [[idx|null,...],...]}
//   torus:   {"p": p, "q": q, "cells": [[idx,...],...]}
//   tree:    {"depth": d, "branching": b, "ones": ["", "0", "01", ...]}
//   tm:      {"symbols": [...], "blank": "B", "states": [...], "start": "q0",
//             "rules": [[s,q,s2,q2,"L"|"R"],...]}

Meta tileset_to_json(const TileSet& ts);
TileSet tileset_from_json(const Meta& j);

Meta tiling_to_json(const Tiling& t);
Tiling tiling_from_json(const Meta& j);

Meta torus_to_json(const TorusTiling& t);
TorusTiling torus_from_json(const Meta& j);

Meta tree_to_json(const FiniteTree& t);
FiniteTree tree_from_json(const Meta& j);

Meta tm_to_json(const TuringMachine& tm);
TuringMachine tm_from_json(const Meta& j);

// Compiled artifacts serialize as the tileset JSON plus a "layout" object in
// meta; hex sets use meta.geometry = "hex15" with per-tile role tags.
Meta compiled_tm_to_json(const CompiledTm& ct);
CompiledTm compiled_tm_from_json(const Meta& j);

Meta compiled_tree_to_json(const CompiledTree& ct);
CompiledTree compiled_tree_from_json(const Meta& j);

Meta compiled_wang_eca_to_json(const CompiledWangEca& c);
CompiledWangEca compiled_wang_eca_from_json(const Meta& j);

Meta hex_tileset_to_json(const HexTileSet& ts);
Meta hex_tiling_to_json(const HexTiling& t);

std::string dump_json(const Meta& j);  // 2-space indent, trailing newline
Meta parse_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace wang
