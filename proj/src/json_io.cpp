#include "wang/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace wang {

Meta tileset_to_json(const TileSet& ts) {
  Meta j;
  j["name"] = ts.name;
  j["meta"] = ts.meta.is_null() ? Meta::object() : ts.meta;
  Meta tiles = Meta::array();
  for (const WangTile& t : ts.tiles) {
    tiles.push_back(Meta{{"l", t.left.encode()},
                         {"u", t.up.encode()},
                         {"r", t.right.encode()},
                         {"b", t.bottom.encode()}});
  }
  j["tiles"] = tiles;
  return j;
}

TileSet tileset_from_json(const Meta& j) {
  TileSet ts;
  ts.name = j.at("name").get<std::string>();
  ts.meta = j.value("meta", Meta::object());
  for (const auto& t : j.at("tiles")) {
    ts.add(WangTile{Color::decode(t.at("l").get<std::string>()),
                    Color::decode(t.at("u").get<std::string>()),
                    Color::decode(t.at("r").get<std::string>()),
                    Color::decode(t.at("b").get<std::string>())});
  }
  return ts;
}

Meta tiling_to_json(const Tiling& t) {
  Meta j;
  j["width"] = t.width;
  j["height"] = t.height;
  j["origin"] = Meta::array({t.origin.x, t.origin.y});
  Meta rows = Meta::array();
  for (int y = 0; y < t.height; ++y) {
    Meta row = Meta::array();
    for (int x = 0; x < t.width; ++x) {
      const auto& c = t.cells[static_cast<size_t>(y) * t.width + x];
      if (c)
        row.push_back(*c);
      else
        row.push_back(nullptr);
    }
    rows.push_back(row);
  }
  j["cells"] = rows;
  return j;
}

Tiling tiling_from_json(const Meta& j) {
  Tiling t({j.at("origin")[0].get<int>(), j.at("origin")[1].get<int>()},
           j.at("width").get<int>(), j.at("height").get<int>());
  const auto& rows = j.at("cells");
  if (rows.size() != static_cast<size_t>(t.height))
    throw std::invalid_argument("tiling json: row count mismatch");
  for (int y = 0; y < t.height; ++y) {
    const auto& row = rows[static_cast<size_t>(y)];
    if (row.size() != static_cast<size_t>(t.width))
      throw std::invalid_argument("tiling json: column count mismatch");
    for (int x = 0; x < t.width; ++x)
      if (!row[static_cast<size_t>(x)].is_null())
        t.cells[static_cast<size_t>(y) * t.width + x] = row[static_cast<size_t>(x)].get<int>();
  }
  return t;
}

Meta torus_to_json(const TorusTiling& t) {
  Meta j;
  j["p"] = t.p;
  j["q"] = t.q;
  Meta rows = Meta::array();
  for (int y = 0; y < t.q; ++y) {
    Meta row = Meta::array();
    for (int x = 0; x < t.p; ++x) row.push_back(t.at(x, y));
    rows.push_back(row);
  }
  j["cells"] = rows;
  return j;
}

TorusTiling torus_from_json(const Meta& j) {
  TorusTiling t;
  t.p = j.at("p").get<int>();
  t.q = j.at("q").get<int>();
  for (const auto& row : j.at("cells"))
    for (const auto& c : row) t.cells.push_back(c.get<int>());
  if (t.cells.size() != static_cast<size_t>(t.p) * t.q)
    throw std::invalid_argument("torus json: cell count mismatch");
  return t;
}

Meta tree_to_json(const FiniteTree& t) {
  if (t.branching_bound > 10)
    throw std::invalid_argument("tree json: digit format needs branching <= 10");
  Meta j;
  j["depth"] = t.depth_bound;
  j["branching"] = t.branching_bound;
  Meta ones = Meta::array();
  for (const Seq& s : t.nodes) ones.push_back(seq_to_digits(s));
  j["ones"] = ones;
  return j;
}

FiniteTree tree_from_json(const Meta& j) {
  FiniteTree t;
  t.depth_bound = j.at("depth").get<int>();
  t.branching_bound = j.at("branching").get<int>();
  for (const auto& s : j.at("ones")) t.nodes.insert(digits_to_seq(s.get<std::string>()));
  t.check_invariants();
  return t;
}

Meta tm_to_json(const TuringMachine& tm) {
  Meta j;
  j["symbols"] = tm.symbols;
  j["blank"] = tm.symbols[static_cast<size_t>(tm.blank)];
  j["states"] = tm.states;
  j["start"] = tm.states[static_cast<size_t>(tm.start)];
  Meta rules = Meta::array();
  for (const auto& r : tm.rules) {
    rules.push_back(Meta::array(
        {tm.symbols[static_cast<size_t>(r.s)], tm.states[static_cast<size_t>(r.q)],
         tm.symbols[static_cast<size_t>(r.s2)],
         r.q2 == TuringMachine::HALT ? "HALT" : tm.states[static_cast<size_t>(r.q2)],
         r.move == TuringMachine::Move::R ? "R" : "L"}));
  }
  j["rules"] = rules;
  return j;
}

TuringMachine tm_from_json(const Meta& j) {
  TuringMachine tm;
  tm.symbols = j.at("symbols").get<std::vector<std::string>>();
  tm.states = j.at("states").get<std::vector<std::string>>();
  tm.blank = tm.symbol_id(j.at("blank").get<std::string>());
  tm.start = tm.state_id(j.at("start").get<std::string>());
  for (const auto& r : j.at("rules")) {
    std::string move = r.at(4).get<std::string>();
    if (move != "L" && move != "R") throw std::invalid_argument("tm json: move must be L or R");
    tm.rules.push_back({tm.symbol_id(r.at(0).get<std::string>()),
                        tm.state_id(r.at(1).get<std::string>()),
                        tm.symbol_id(r.at(2).get<std::string>()),
                        tm.state_id(r.at(3).get<std::string>()),
                        move == "R" ? TuringMachine::Move::R : TuringMachine::Move::L});
  }
  tm.validate();
  return tm;
}

namespace {

Meta tm_role_to_json(const TmTileRole& r) {
  static const char* names[] = {"symbol", "head_left", "head_right", "comp", "halt"};
  return Meta{{"kind", names[static_cast<int>(r.kind)]}, {"s", r.s}, {"q", r.q}, {"rule", r.rule}};
}

TmTileRole tm_role_from_json(const Meta& j) {
  TmTileRole r;
  std::string k = j.at("kind").get<std::string>();
  if (k == "symbol") r.kind = TmTileRole::Kind::Symbol;
  else if (k == "head_left") r.kind = TmTileRole::Kind::HeadLeft;
  else if (k == "head_right") r.kind = TmTileRole::Kind::HeadRight;
  else if (k == "comp") r.kind = TmTileRole::Kind::Comp;
  else if (k == "halt") r.kind = TmTileRole::Kind::Halt;
  else throw std::invalid_argument("bad tm tile role");
  r.s = j.at("s").get<int>();
  r.q = j.at("q").get<int>();
  r.rule = j.at("rule").get<int>();
  return r;
}

Meta tree_role_to_json(const TreeTileRole& r) {
  static const char* names[] = {"root", "mid_row", "quadrant", "col_up",
                                "col_down", "spoke_arm", "spoke_quad"};
  return Meta{{"kind", names[static_cast<int>(r.kind)]},
              {"side", r.side},
              {"j", r.j},
              {"i", r.i},
              {"node", seq_to_digits(r.node)}};
}

TreeTileRole tree_role_from_json(const Meta& j) {
  TreeTileRole r;
  std::string k = j.at("kind").get<std::string>();
  if (k == "root") r.kind = TreeTileRole::Kind::Root;
  else if (k == "mid_row") r.kind = TreeTileRole::Kind::MidRow;
  else if (k == "quadrant") r.kind = TreeTileRole::Kind::Quadrant;
  else if (k == "col_up") r.kind = TreeTileRole::Kind::ColUp;
  else if (k == "col_down") r.kind = TreeTileRole::Kind::ColDown;
  else if (k == "spoke_arm") r.kind = TreeTileRole::Kind::SpokeArm;
  else if (k == "spoke_quad") r.kind = TreeTileRole::Kind::SpokeQuad;
  else throw std::invalid_argument("bad tree tile role");
  r.side = j.at("side").get<int>();
  r.j = j.at("j").get<int>();
  r.i = j.at("i").get<int>();
  r.node = digits_to_seq(j.at("node").get<std::string>());
  return r;
}

}  // namespace

Meta compiled_tm_to_json(const CompiledTm& ct) {
  Meta j = tileset_to_json(ct.tileset);
  Meta roles = Meta::array();
  for (const auto& r : ct.roles) roles.push_back(tm_role_to_json(r));
  Meta input = Meta::array();
  for (int s : ct.input) input.push_back(ct.tm.symbols[static_cast<size_t>(s)]);
  j["layout"] = Meta{{"machine", tm_to_json(ct.tm)},
                     {"input", input},
                     {"head_col", ct.head_col},
                     {"reachable_only", ct.reachable_only},
                     {"roles", roles}};
  return j;
}

CompiledTm compiled_tm_from_json(const Meta& j) {
  CompiledTm ct;
  ct.tileset = tileset_from_json(j);
  const Meta& l = j.at("layout");
  ct.tm = tm_from_json(l.at("machine"));
  for (const auto& s : l.at("input")) ct.input.push_back(ct.tm.symbol_id(s.get<std::string>()));
  ct.head_col = l.at("head_col").get<int>();
  ct.reachable_only = l.at("reachable_only").get<bool>();
  for (const auto& r : l.at("roles")) ct.roles.push_back(tm_role_from_json(r));
  return ct;
}

Meta compiled_tree_to_json(const CompiledTree& ct) {
  Meta j = tileset_to_json(ct.tileset);
  Meta roles = Meta::array();
  for (const auto& r : ct.roles) roles.push_back(tree_role_to_json(r));
  static const char* kinds[] = {"ait", "pit", "spokes"};
  j["layout"] = Meta{{"kind", kinds[static_cast<int>(ct.kind)]},
                     {"tree", tree_to_json(ct.tree)},
                     {"root_tile", ct.root_tile},
                     {"roles", roles}};
  return j;
}

CompiledTree compiled_tree_from_json(const Meta& j) {
  CompiledTree ct;
  ct.tileset = tileset_from_json(j);
  const Meta& l = j.at("layout");
  std::string k = l.at("kind").get<std::string>();
  ct.kind = k == "ait" ? TreeKind::Ait : k == "pit" ? TreeKind::Pit : TreeKind::Spokes;
  ct.tree = tree_from_json(l.at("tree"));
  ct.root_tile = l.at("root_tile").get<int>();
  for (const auto& r : l.at("roles")) ct.roles.push_back(tree_role_from_json(r));
  return ct;
}

Meta compiled_wang_eca_to_json(const CompiledWangEca& c) { return tileset_to_json(c.tileset); }

CompiledWangEca compiled_wang_eca_from_json(const Meta& j) {
  TileSet ts = tileset_from_json(j);
  int rule = ts.meta.at("rule").get<int>();
  CompiledWangEca rebuilt = compile_eca_wang(EcaRule{rule});
  if (!(tileset_to_json(rebuilt.tileset) == tileset_to_json(ts)))
    throw std::invalid_argument("compiled eca json does not match its rule");
  return rebuilt;
}

namespace {

Meta hex_tile_to_json(const HexTile& h, const char* role) {
  return Meta{{"role", role},
              {"ul", h.ul.encode()},
              {"top", h.top.encode()},
              {"ur", h.ur.encode()},
              {"b", h.bottom.encode()}};
}

}  // namespace

Meta hex_tileset_to_json(const HexTileSet& ts) {
  Meta j;
  j["name"] = "eca15-" + std::to_string(ts.rule.n);
  j["meta"] = Meta{{"kind", "eca15"}, {"geometry", "hex15"}, {"rule", ts.rule.n}};
  Meta tiles = Meta::array();
  for (size_t i = 0; i < ts.hexes.size(); ++i)
    tiles.push_back(hex_tile_to_json(ts.hexes[i], i < 8 ? "rule" : "init"));
  for (const auto& lz : ts.lozenges) {
    tiles.push_back(Meta{{"role", "lozenge"},
                         {"nw", lz.nw.encode()},
                         {"ne", lz.ne.encode()},
                         {"sw", lz.sw.encode()},
                         {"se", lz.se.encode()}});
  }
  tiles.push_back(Meta{{"role", "init"},
                       {"sw", ts.half_lozenge.sw.encode()},
                       {"se", ts.half_lozenge.se.encode()},
                       {"shape", "half-lozenge"}});
  j["tiles"] = tiles;
  return j;
}

Meta hex_tiling_to_json(const HexTiling& t) {
  Meta j;
  j["geometry"] = "hex15";
  j["width"] = t.width;
  j["rows"] = t.rows;
  j["hex_rows"] = t.hex_rows;
  j["loz_rows"] = t.loz_rows;
  j["half_lozenges"] = t.half_lozenges;
  return j;
}

std::string dump_json(const Meta& j) { return j.dump(2) + "\n"; }

Meta parse_json(const std::string& text) { return Meta::parse(text); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

}  // namespace wang
