#include <random>

#include "doctest.h"
#include "wang/builtins.hpp"
#include "wang/solver.hpp"

using namespace wang;

namespace {

WangTile bits(int l, int u, int r, int b) {
  auto c = [](int v) { return Color::atom(std::to_string(v)); };
  return {c(l), c(u), c(r), c(b)};
}

TileSet single(int l, int u, int r, int b) {
  TileSet ts;
  ts.name = "single";
  ts.add(bits(l, u, r, b));
  return ts;
}

}  // namespace

TEST_CASE("solve_rect basics") {
  TileSet uni = single(0, 0, 0, 0);
  SolveRequest req;
  req.tileset = &uni;
  req.width = 3;
  req.height = 3;
  auto sol = solve_rect(req);
  REQUIRE(sol);
  for (const auto& c : sol->cells) CHECK(c == 0);
  CHECK(is_valid_tiling(uni, *sol).total);

  TileSet lonely = single(0, 0, 1, 0);  // cannot sit beside itself
  SolveRequest req2;
  req2.tileset = &lonely;
  req2.width = 2;
  req2.height = 1;
  CHECK_FALSE(solve_rect(req2));
}

TEST_CASE("pins and wildcards") {
  TileSet two;
  two.name = "two";
  two.add(bits(0, 0, 0, 0));
  two.add(bits(1, 1, 1, 1));
  SolveRequest req;
  req.tileset = &two;
  req.width = 2;
  req.height = 1;
  req.pins = {{{1, 0}, 1}};
  auto sol = solve_rect(req);
  REQUIRE(sol);
  CHECK(*sol->at({0, 0}) == 1);  // colour 1 forces the whole row
  CHECK(*sol->at({1, 0}) == 1);

  SolveRequest conflict = req;
  conflict.pins.push_back({{1, 0}, 0});
  CHECK_THROWS_AS(solve_rect(conflict), std::invalid_argument);

  // A wildcard bridges otherwise incompatible pinned tiles.
  TileSet clash;
  clash.name = "clash";
  clash.add(bits(0, 0, 0, 0));
  clash.add(bits(1, 1, 1, 1));
  SolveRequest wreq;
  wreq.tileset = &clash;
  wreq.width = 3;
  wreq.height = 1;
  wreq.pins = {{{0, 0}, 0}, {{2, 0}, 1}};
  CHECK_FALSE(solve_rect(wreq));
  wreq.wildcard_allowed = true;
  wreq.wildcard_budget = 1;
  auto wsol = solve_rect(wreq);
  REQUIRE(wsol);
  CHECK_FALSE(wsol->at({1, 0}).has_value());
}

TEST_CASE("solver agrees with the exhaustive oracle and returns its first element") {
  // Exhaustive over all 1..3-tile sets over two colours, on regions up to
  // 3x3; the oracle path is an independent naive enumerator.
  std::vector<WangTile> univ;
  for (int v = 0; v < 16; ++v) univ.push_back(bits(v >> 3 & 1, v >> 2 & 1, v >> 1 & 1, v & 1));
  std::mt19937 gen(7);
  int agree = 0;
  auto check_set = [&](const TileSet& ts) {
    for (int w = 1; w <= 3; ++w) {
      for (int h = 1; h <= 3; ++h) {
        auto all = enumerate_tilings(ts, w, h, 1);
        SolveRequest req;
        req.tileset = &ts;
        req.width = w;
        req.height = h;
        auto sol = solve_rect(req);
        REQUIRE(sol.has_value() == !all.empty());
        if (sol) {
          REQUIRE(sol->cells == all[0].cells);
          ++agree;
        }
      }
    }
  };
  for (int i = 0; i < 16; ++i) {
    TileSet t1;
    t1.name = "t1";
    t1.add(univ[i]);
    check_set(t1);
    for (int j = i + 1; j < 16; ++j) {
      TileSet t2 = t1;
      t2.add(univ[j]);
      if (i < 4) check_set(t2);  // keep the pair sweep affordable here
      for (int k = j + 1; k < 16; ++k) {
        if (gen() % 37 != 0) continue;  // sampled triples
        TileSet t3 = t2;
        t3.add(univ[k]);
        check_set(t3);
      }
    }
  }
  CHECK(agree > 100);
}

TEST_CASE("enumerate_tilings examples and guard") {
  TileSet uni = single(0, 0, 0, 0);
  CHECK(enumerate_tilings(uni, 2, 2, 100).size() == 1);

  TileSet two;
  two.name = "two";
  two.add(bits(0, 0, 0, 0));
  two.add(bits(1, 1, 1, 1));
  CHECK(enumerate_tilings(two, 1, 2, 100).size() == 2);  // the colours never mix

  CHECK(enumerate_tilings(builtin("binary16"), 1, 1, 100).size() == 16);
  CHECK_THROWS_AS(enumerate_tilings(builtin("binary16"), 4, 4, 10), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_tilings(builtin("culik13"), 2, 2, 10), std::invalid_argument);
}

TEST_CASE("block_tileable and monotonicity") {
  CHECK(block_tileable(single(0, 0, 0, 0), 5));
  CHECK_FALSE(block_tileable(single(0, 0, 1, 0), 2));
  TileSet culik = builtin("culik13");
  CHECK(block_tileable(culik, 6));
  for (int n = 1; n < 6; ++n) CHECK(block_tileable(culik, n));  // monotone downwards
}

TEST_CASE("solve_torus") {
  auto t11 = solve_torus(single(0, 0, 0, 0), 1, 1);
  REQUIRE(t11);
  CHECK(t11->cells == std::vector<int>{0});

  // binary16 admits a 2x2 torus; cross-checked by brute force over all 16^4
  // assignments of the 2x2 grid with wraparound.
  TileSet b16 = builtin("binary16");
  bool brute = false;
  for (int a = 0; a < 16 && !brute; ++a)
    for (int b = 0; b < 16 && !brute; ++b)
      for (int c = 0; c < 16 && !brute; ++c)
        for (int d = 0; d < 16 && !brute; ++d) {
          // grid [a b; c d]
          auto ok = [&](int t, int rgt, int blw) {
            return matches(b16[t], b16[rgt], Direction::Right) &&
                   matches(b16[t], b16[blw], Direction::Down);
          };
          brute = ok(a, b, c) && ok(b, a, d) && ok(c, d, a) && ok(d, c, b);
        }
  CHECK(brute);
  CHECK(solve_torus(b16, 2, 2));

  // Torus tilings certify biperiodic planar tilings: unfold and revalidate.
  auto t22 = solve_torus(b16, 2, 2);
  REQUIRE(t22);
  Tiling flat = unfold(*t22, 2, 2);
  auto rep = is_valid_tiling(b16, flat);
  CHECK(rep.ok);
  CHECK(rep.total);

  // 1-wide tori need the tile to match itself across the wrap.
  TileSet net = single(0, 1, 0, 1);
  CHECK(solve_torus(net, 1, 1));
  TileSet skew = single(0, 1, 1, 1);
  CHECK_FALSE(solve_torus(skew, 1, 1));
}

TEST_CASE("find_period") {
  auto res = find_period(single(3, 4, 3, 4), 3, 3);
  CHECK(res.found);
  CHECK(res.p == 1);
  CHECK(res.q == 1);

  auto res16 = find_period(builtin("binary16"), 3, 3);
  CHECK(res16.found);
  CHECK((res16.p == 1 && res16.q == 1));

  auto none = find_period(builtin("culik13"), 4, 4);
  CHECK(none.none_up_to_bound());
  CHECK(none.max_p == 4);
}

TEST_CASE("determinism: identical requests give identical tilings") {
  TileSet jr = builtin("jeandel-rao11");
  SolveRequest req;
  req.tileset = &jr;
  req.width = 5;
  req.height = 5;
  auto a = solve_rect(req);
  auto b = solve_rect(req);
  REQUIRE(a);
  REQUIRE(b);
  CHECK(a->cells == b->cells);
}

TEST_CASE("max_tileable_height basics") {
  TileSet uni = single(0, 0, 0, 0);
  std::vector<Pin> pins{{{0, 0}, 0}, {{1, 0}, 0}};
  CHECK(max_tileable_height(uni, {0, 0}, 2, pins, 9) == 9);

  std::vector<Pin> off_row{{{0, 1}, 0}};
  CHECK_THROWS_AS(max_tileable_height(uni, {0, 0}, 2, off_row, 5), std::invalid_argument);

  TileSet two;
  two.name = "two";
  two.add(bits(0, 0, 0, 0));
  two.add(bits(1, 1, 1, 1));
  std::vector<Pin> clash{{{0, 0}, 0}, {{1, 0}, 1}};
  CHECK_THROWS_AS(max_tileable_height(two, {0, 0}, 2, clash, 5), std::invalid_argument);
}
