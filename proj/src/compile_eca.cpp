#include "wang/compile_eca.hpp"

#include <stdexcept>

namespace wang {

namespace {

Color bit(int s) { return Color::atom(s ? "1" : "0"); }
Color mark(int s) { return Color::indexed("f", {s}); }          // s^f output marker
Color cross(int s, int t) { return Color::indexed("st", {s, t}); }
Color eye() { return Color::atom("I"); }

void check_input(const BitRow& input, int rows) {
  if (input.empty())
    throw std::invalid_argument("window-too-small: empty input row");
  if (rows < 1) throw std::invalid_argument("rows must be >= 1");
}

}  // namespace

CompiledWangEca compile_eca_wang(const EcaRule& rule) {
  CompiledWangEca out;
  out.layout.rule = rule;
  out.tileset.name = "eca18-" + std::to_string(rule.n);
  for (int v = 7; v >= 0; --v) {  // rule tiles, (a,b,c) from 111 down to 000
    int a = (v >> 2) & 1, b = (v >> 1) & 1, c = v & 1;
    out.tileset.add({bit(a), bit(b), bit(c), mark(rule.table(a, b, c))});
  }
  for (int s = 0; s < 2; ++s) {
    for (int t = 0; t < 2; ++t) {
      out.tileset.add({bit(s), Color::atom("B"), bit(t), cross(s, t)});
      out.tileset.add({bit(t), cross(s, t), bit(s), Color::atom("B")});
    }
  }
  for (int s = 0; s < 2; ++s) out.tileset.add({bit(s), mark(s), bit(s), bit(s)});
  out.tileset.meta = Meta{{"kind", "eca18"},
                          {"rule", rule.n},
                          {"layout",
                           Meta{{"col_stride", out.layout.col_stride},
                                {"row_stride", out.layout.row_stride},
                                {"order", "rule[8] swap[8] distributor[2]"}}}};
  return out;
}

Tiling tile_eca(const CompiledWangEca& compiled, const BitRow& input, int rows) {
  check_input(input, rows);
  const EcaRule& rule = compiled.layout.rule;
  int w = static_cast<int>(input.size());
  Tiling t({0, 0}, 2 * w - 1, 2 * rows + 1);
  BitRow cur = input;
  for (int j = 0; j <= rows; ++j) {
    for (int i = 0; i < w; ++i) {
      t.at({2 * i, 2 * j}) = compiled.distributor(cur[i]);
      if (i + 1 < w) t.at({2 * i + 1, 2 * j}) = compiled.swap_upper(cur[i], cur[i + 1]);
    }
    if (j == rows) break;
    for (int i = 0; i < w; ++i) {
      int a = i == 0 ? 0 : cur[i - 1];
      int c = i + 1 == w ? 0 : cur[i + 1];
      t.at({2 * i, 2 * j + 1}) = compiled.rule_tile(a, cur[i], c);
      if (i + 1 < w) t.at({2 * i + 1, 2 * j + 1}) = compiled.swap_lower(cur[i], cur[i + 1]);
    }
    cur = eca_step(rule, cur, Boundary::ZeroPad);
  }
  return t;
}

std::vector<BitRow> decode_eca_rows(const CompiledWangEca& compiled, const Tiling& t) {
  std::vector<BitRow> rows;
  int w = (t.width + 1) / 2;
  for (int y = 0; y < t.height; y += 2) {
    BitRow row(static_cast<size_t>(w));
    for (int i = 0; i < w; ++i) {
      auto idx = t.at({t.origin.x + 2 * i, t.origin.y + y});
      if (!idx || (*idx != compiled.distributor(0) && *idx != compiled.distributor(1)))
        throw std::runtime_error("decode_eca_rows: expected a distributor tile");
      row[static_cast<size_t>(i)] = static_cast<uint8_t>(*idx - compiled.distributor(0));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

HexTileSet compile_eca_hex(const EcaRule& rule) {
  HexTileSet out;
  out.rule = rule;
  for (int v = 7; v >= 0; --v) {
    int a = (v >> 2) & 1, b = (v >> 1) & 1, c = v & 1;
    out.hexes.push_back({bit(a), bit(b), bit(c), bit(rule.table(a, b, c))});
  }
  out.hexes.push_back({eye(), eye(), eye(), bit(0)});
  out.hexes.push_back({eye(), eye(), eye(), bit(1)});
  for (int s = 0; s < 2; ++s)
    for (int t = 0; t < 2; ++t) out.lozenges.push_back({bit(s), bit(t), bit(t), bit(s)});
  out.half_lozenge = {eye(), eye()};
  return out;
}

HexTiling tile_eca(const HexTileSet& ts, const BitRow& input, int rows) {
  check_input(input, rows);
  HexTiling t;
  t.width = static_cast<int>(input.size());
  t.rows = rows;
  t.half_lozenges = t.width + 1;
  BitRow cur = input;
  std::vector<int> first;
  for (uint8_t b : input) first.push_back(ts.init_hex(b));
  t.hex_rows.push_back(first);
  for (int j = 0; j < rows; ++j) {
    std::vector<int> loz;
    for (size_t i = 0; i + 1 < cur.size(); ++i)
      loz.push_back(ts.lozenge(cur[i], cur[i + 1]));
    t.loz_rows.push_back(std::move(loz));
    BitRow next = eca_step(ts.rule, cur, Boundary::ZeroPad);
    std::vector<int> hexes;
    for (size_t i = 0; i < cur.size(); ++i) {
      int a = i == 0 ? 0 : cur[i - 1];
      int c = i + 1 == cur.size() ? 0 : cur[i + 1];
      hexes.push_back(ts.rule_hex(a, cur[i], c));
    }
    t.hex_rows.push_back(std::move(hexes));
    cur = std::move(next);
  }
  return t;
}

std::vector<BitRow> decode_eca_rows(const HexTileSet& ts, const HexTiling& t) {
  std::vector<BitRow> rows;
  for (const auto& hex_row : t.hex_rows) {
    BitRow row;
    for (int idx : hex_row) {
      const Color& b = ts.hexes[static_cast<size_t>(idx)].bottom;
      if (b == bit(0))
        row.push_back(0);
      else if (b == bit(1))
        row.push_back(1);
      else
        throw std::runtime_error("decode_eca_rows: hexagon bottom is not a bit");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

bool is_valid_hex_tiling(const HexTileSet& ts, const HexTiling& t) {
  if (t.hex_rows.size() != static_cast<size_t>(t.rows) + 1) return false;
  if (t.loz_rows.size() != static_cast<size_t>(t.rows)) return false;
  auto hex = [&](int i, int j) -> const HexTile& {
    return ts.hexes[static_cast<size_t>(t.hex_rows[static_cast<size_t>(j)][static_cast<size_t>(i)])];
  };
  // Top boundary: the first hexagon row meets only I half-lozenges above.
  for (int i = 0; i < t.width; ++i) {
    const HexTile& h = hex(i, 0);
    if (!(h.ul == eye() && h.top == eye() && h.ur == eye())) return false;
  }
  if (t.half_lozenges != t.width + 1) return false;
  for (int j = 0; j < t.rows; ++j) {
    if (t.hex_rows[static_cast<size_t>(j) + 1].size() != static_cast<size_t>(t.width))
      return false;
    if (t.loz_rows[static_cast<size_t>(j)].size() != static_cast<size_t>(t.width) - 1)
      return false;
    for (int i = 0; i < t.width; ++i)
      if (!(hex(i, j + 1).top == hex(i, j).bottom)) return false;
    for (int i = 0; i + 1 < t.width; ++i) {
      const LozengeTile& lz =
          ts.lozenges[static_cast<size_t>(t.loz_rows[static_cast<size_t>(j)][static_cast<size_t>(i)])];
      if (!(lz.nw == hex(i, j).bottom)) return false;
      if (!(lz.ne == hex(i + 1, j).bottom)) return false;
      if (!(lz.sw == hex(i, j + 1).ur)) return false;
      if (!(lz.se == hex(i + 1, j + 1).ul)) return false;
    }
  }
  return true;
}

}  // namespace wang
