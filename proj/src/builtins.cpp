#include "wang/builtins.hpp"

#include <stdexcept>

namespace wang {

namespace {

TileSet from_labels(const std::string& name, const char* const (*quads)[4], int count) {
  TileSet ts;
  ts.name = name;
  ts.meta = Meta{{"kind", "builtin"}, {"name", name}};
  for (int i = 0; i < count; ++i) {
    ts.add(WangTile{Color::atom(quads[i][0]), Color::atom(quads[i][1]),
                    Color::atom(quads[i][2]), Color::atom(quads[i][3])});
  }
  return ts;
}

// <l, u, r, b> in figure order.
constexpr const char* kCulik13[13][4] = {
    {"-2", "1", "-1", "2"}, {"-2", "1", "0", "1"},  {"-1", "1", "0", "2"},
    {"-1", "0", "-2", "1"}, {"0", "0", "-2", "2"},  {"0", "0", "-1", "1"},
    {"0'", "0'", "0'", "0"}, {"0'", "2", "0'", "1"}, {"0'", "1", "1/2", "0"},
    {"0'", "1", "1/2", "0'"}, {"1/2", "0'", "1/2", "0"}, {"1/2", "2", "1/2", "1"},
    {"1/2", "1", "0'", "1"},
};

constexpr const char* kJeandelRao11[11][4] = {
    {"3", "1", "1", "1"}, {"3", "2", "1", "2"}, {"3", "1", "3", "3"},
    {"2", "4", "2", "1"}, {"2", "2", "2", "0"}, {"0", "0", "0", "1"},
    {"0", "1", "3", "2"}, {"1", "2", "0", "2"}, {"1", "2", "1", "4"},
    {"1", "3", "3", "2"}, {"3", "1", "0", "1"},
};

TileSet binary16() {
  TileSet ts;
  ts.name = "binary16";
  ts.meta = Meta{{"kind", "builtin"}, {"name", "binary16"}};
  const char* bit[2] = {"0", "1"};
  // Listed order: l, then r, varies slowest; u, b enumerate within.
  for (int l = 0; l < 2; ++l)
    for (int r = 0; r < 2; ++r)
      for (int u = 0; u < 2; ++u)
        for (int b = 0; b < 2; ++b)
          ts.add(WangTile{Color::atom(bit[l]), Color::atom(bit[u]),
                          Color::atom(bit[r]), Color::atom(bit[b])});
  return ts;
}

}  // namespace

std::vector<std::string> builtin_names() { return {"culik13", "jeandel-rao11", "binary16"}; }

TileSet builtin(const std::string& name) {
  if (name == "culik13") return from_labels(name, kCulik13, 13);
  if (name == "jeandel-rao11") return from_labels(name, kJeandelRao11, 11);
  if (name == "binary16") return binary16();
  std::string valid;
  for (const auto& n : builtin_names()) valid += (valid.empty() ? "" : ", ") + n;
  throw std::invalid_argument("unknown builtin '" + name + "' (valid: " + valid + ")");
}

}  // namespace wang
