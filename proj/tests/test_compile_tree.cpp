#include <cstdlib>

#include "doctest.h"
#include "wang/compile_tree.hpp"
#include "wang/solver.hpp"

using namespace wang;

namespace {

FiniteTree single_path(const Seq& path, int depth, int branching = 2) {
  TreePredicate p;
  p.kind = TreePredicate::Kind::SinglePath;
  p.path = path;
  return normalize(from_predicate(p, depth, branching)).tree;
}

Tiling solve_centered(const CompiledTree& ct, int w, int h) {
  SolveRequest req;
  req.tileset = &ct.tileset;
  req.width = w;
  req.height = h;
  req.origin = {-(w / 2), -(h / 2)};
  req.pins = {ct.root_pin()};
  auto sol = solve_rect(req);
  REQUIRE(sol);
  return *sol;
}

Tiling solve_spokes_diamond(const CompiledTree& ct, int radius) {
  int w = 2 * radius + 1;
  SolveRequest req;
  req.tileset = &ct.tileset;
  req.width = w;
  req.height = w;
  req.origin = {-radius, -radius};
  req.wildcard_allowed = true;
  req.wildcard_budget = 0;
  req.pins = {ct.root_pin()};
  for (int y = -radius; y <= radius; ++y)
    for (int x = -radius; x <= radius; ++x)
      if (std::abs(x) + std::abs(y) > radius) req.pins.push_back({{x, y}, std::nullopt});
  auto sol = solve_rect(req);
  REQUIRE(sol);
  return *sol;
}

int tile_count(const Tiling& t) {
  int n = 0;
  for (const auto& c : t.cells)
    if (c) ++n;
  return n;
}

}  // namespace

TEST_CASE("ait tile inventory for single-path 00, depth 2") {
  auto ct = compile_tree(single_path({0, 0}, 2), TreeKind::Ait);
  // 1 root + 2*depth mid-rows + 4*(2*depth-1) quadrant bands + 2 per edge.
  CHECK(ct.tileset.size() == 1 + 4 + 12 + 4);
  int up = 0, down = 0;
  for (const auto& r : ct.roles) {
    up += r.kind == TreeTileRole::Kind::ColUp;
    down += r.kind == TreeTileRole::Kind::ColDown;
  }
  CHECK(up == 2);
  CHECK(down == 2);
  // Root tile <ML0, lamU, MR0, lamD> sits at index root_tile.
  CHECK(ct.tileset[ct.root_tile] ==
        WangTile{Color::atom("ML0"), Color::atom("lamU"), Color::atom("MR0"),
                 Color::atom("lamD")});
}

TEST_CASE("pit and spokes tile inventories") {
  FiniteTree t;
  t.depth_bound = 2;
  t.branching_bound = 2;
  t.nodes = {{}, {0}, {1}, {1, 0}};
  auto pit = compile_tree(t, TreeKind::Pit);
  CHECK(pit.tileset.size() == 1 + 2 * 3);  // root + up/down per edge
  CHECK(pit.tileset[pit.root_tile] ==
        WangTile{Color::atom("M"), Color::atom("lamU"), Color::atom("M"), Color::atom("lamD")});
  auto spokes = compile_tree(t, TreeKind::Spokes);
  // root + 4 arms per edge + 4 quadrants per depth>=2 edge
  CHECK(spokes.tileset.size() == 1 + 4 * 3 + 4 * 1);
  CHECK(spokes.tileset[spokes.root_tile] ==
        WangTile{Color::atom("lamL"), Color::atom("lamU"), Color::atom("lamR"),
                 Color::atom("lamD")});
}

TEST_CASE("ait pinned solve recovers the path") {
  auto ct = compile_tree(single_path({0, 0}, 2), TreeKind::Ait);
  Tiling t = solve_centered(ct, 5, 5);
  auto rep = is_valid_tiling(ct.tileset, t);
  CHECK(rep.ok);
  CHECK(rep.total);
  CHECK(recover_path(ct, t) == Seq{0, 0});
  // Start-point independence: quadrant, mid-row and column starts agree.
  for (Cell start : {Cell{-2, -2}, Cell{2, 2}, Cell{-2, 0}, Cell{0, 1}, Cell{1, -2}})
    CHECK(recover_path(ct, t, start) == Seq{0, 0});
}

TEST_CASE("ait without a full-depth path cannot fill the window") {
  FiniteTree t;
  t.depth_bound = 3;
  t.branching_bound = 2;
  t.nodes = {{}, {0}, {1}};
  auto ct = compile_tree(t, TreeKind::Ait);
  SolveRequest req;
  req.tileset = &ct.tileset;
  req.width = 7;
  req.height = 7;
  req.origin = {-3, -3};
  req.pins = {ct.root_pin()};
  CHECK_FALSE(solve_rect(req));
}

TEST_CASE("ait picks the lexicographically least full-depth path") {
  FiniteTree t;
  t.depth_bound = 2;
  t.branching_bound = 3;
  t.nodes = {{}, {2}, {2, 1}, {2, 2}, {1}, {1, 2}};
  auto ct = compile_tree(t, TreeKind::Ait);
  Tiling sol = solve_centered(ct, 5, 5);
  CHECK(recover_path(ct, sol) == Seq{1, 2});
}

TEST_CASE("pit solved rectangles repeat one column") {
  auto ct = compile_tree(single_path({0, 1}, 2), TreeKind::Pit);
  Tiling t = solve_centered(ct, 4, 5);
  CHECK(is_valid_tiling(ct.tileset, t).ok);
  for (int y = 0; y < 5; ++y)
    for (int x = 1; x < 4; ++x)
      CHECK(t.cells[static_cast<size_t>(y) * 4 + x] == t.cells[static_cast<size_t>(y) * 4]);
  CHECK(recover_path(ct, t) == Seq{0, 1});
  // Any column works as a starting point.
  for (int x = -2; x <= 1; ++x) CHECK(recover_path(ct, t, Cell{x, 0}) == Seq{0, 1});
  CHECK(recover_path(ct, t, Cell{1, -2}) == Seq{0, 1});
}

TEST_CASE("pit-compiled sets admit no torus tiling") {
  // The vertical colour graph of a pit set is a path (up copies descend to
  // the root, down copies extend below it), so no vertical cycle exists at
  // any height; this is why the periodicity of the construction shows up as
  // column repetition rather than as a torus.
  auto ct = compile_tree(single_path({0, 1}, 2), TreeKind::Pit);
  for (int p = 1; p <= 3; ++p)
    for (int q = 1; q <= 7; ++q) CHECK_FALSE(solve_torus(ct.tileset, p, q));
}

TEST_CASE("spokes diamond has arms of longest-path length") {
  FiniteTree t;
  t.depth_bound = 2;
  t.branching_bound = 2;
  t.nodes = {{}, {0}, {1}, {1, 0}};
  auto ct = compile_tree(t, TreeKind::Spokes);
  auto lp = longest_path(t);
  int radius = static_cast<int>(lp.path.size());
  Tiling sol = solve_spokes_diamond(ct, radius);
  CHECK(is_valid_tiling(ct.tileset, sol).ok);
  CHECK(tile_count(sol) == 2 * radius * (radius + 1) + 1);
  CHECK(recover_path(ct, sol) == lp.path);

  // The tiled patch is one 4-connected diamond: every tile within distance
  // radius of the root, wildcards outside.
  for (int y = -radius; y <= radius; ++y)
    for (int x = -radius; x <= radius; ++x)
      CHECK(sol.at({x, y}).has_value() == (std::abs(x) + std::abs(y) <= radius));
}

TEST_CASE("all three kinds round-trip a deep single path") {
  Seq path{1, 0, 2, 1};
  for (TreeKind kind : {TreeKind::Ait, TreeKind::Pit, TreeKind::Spokes}) {
    auto ct = compile_tree(single_path(path, 4, 3), kind);
    Seq got;
    if (kind == TreeKind::Spokes) {
      got = recover_path(ct, solve_spokes_diamond(ct, 4));
    } else {
      Tiling t = solve_centered(ct, kind == TreeKind::Ait ? 9 : 3, 9);
      got = recover_path(ct, t);
    }
    CHECK(got == path);
  }
}

TEST_CASE("recover_path needs a root") {
  auto ct = compile_tree(single_path({0}, 1), TreeKind::Ait);
  Tiling empty({0, 0}, 2, 2);
  CHECK_THROWS_AS(recover_path(ct, empty), std::runtime_error);
}

TEST_CASE("compile_tree rejects empty and malformed trees") {
  FiniteTree empty;
  CHECK_THROWS_AS(compile_tree(empty, TreeKind::Ait), std::invalid_argument);
  FiniteTree broken;
  broken.depth_bound = 2;
  broken.branching_bound = 2;
  broken.nodes = {{}, {0, 1}};  // not prefix-closed
  CHECK_THROWS_AS(compile_tree(broken, TreeKind::Ait), std::invalid_argument);
}
