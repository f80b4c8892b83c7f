#include "doctest.h"
#include "wang/compile_tm.hpp"
#include "wang/solver.hpp"

using namespace wang;

namespace {

TuringMachine one_rule_halter() {
  TuringMachine tm;
  tm.symbols = {"B", "1"};
  tm.blank = 0;
  tm.states = {"q0"};
  tm.start = 0;
  tm.rules = {{1, 0, 1, TuringMachine::HALT, TuringMachine::Move::R}};
  return tm;
}

TuringMachine right_mover() {
  TuringMachine tm;
  tm.symbols = {"B"};
  tm.blank = 0;
  tm.states = {"q0"};
  tm.start = 0;
  tm.rules = {{0, 0, 0, 0, TuringMachine::Move::R}};
  return tm;
}

TuringMachine busy_beaver2() {
  TuringMachine tm;
  tm.symbols = {"0", "1"};
  tm.blank = 0;
  tm.states = {"A", "B"};
  tm.start = 0;
  using M = TuringMachine::Move;
  tm.rules = {{0, 0, 1, 1, M::R},
              {1, 0, 1, 1, M::L},
              {0, 1, 1, 0, M::L},
              {1, 1, 1, TuringMachine::HALT, M::R}};
  return tm;
}

struct TmHarness {
  CompiledTm ct;
  int x0 = -25, width = 50, cap = 20;

  explicit TmHarness(const TuringMachine& tm, std::vector<int> input)
      : ct(compile_tm(tm, std::move(input))) {}

  std::vector<Pin> pins() const { return ct.pins_for_window(x0, width); }

  int max_height() const {
    return max_tileable_height(ct.tileset, {x0, 0}, width, pins(), cap);
  }

  Tiling solve(int h) const {
    SolveRequest req;
    req.tileset = &ct.tileset;
    req.width = width;
    req.height = h;
    req.origin = {x0, 0};
    req.pins = pins();
    req.wildcard_allowed = true;  // row-0 pins include one wild absorber cell
    req.wildcard_budget = 0;
    auto sol = solve_rect(req);
    REQUIRE(sol);
    return *sol;
  }
};

}  // namespace

TEST_CASE("compiled schema families are exactly as constructed") {
  TuringMachine tm = one_rule_halter();
  CompiledTm ct = compile_tm(tm, {1});
  // |Sigma| symbol tiles + 2|Sigma||Q| head tiles + one tile per 5-tuple.
  CHECK(ct.tileset.size() == 2 + 2 * 2 * 1 + 1);

  Color b = Color::indexed("s", {0});
  Color one = Color::indexed("s", {1});
  Color q0 = Color::indexed("q", {0});
  Color sq = Color::indexed("sq", {1, 0});
  // Symbol tile <B,s,B,s>.
  CHECK(ct.tileset[ct.symbol_tile(1)] == WangTile{b, one, b, one});
  // Head tiles <q,s,B,(s,q)> and <B,s,q,(s,q)>.
  CHECK(ct.tileset[ct.head_tile_left(1, 0)] == WangTile{q0, one, b, sq});
  CHECK(ct.tileset[ct.head_tile_right(1, 0)] == WangTile{b, one, q0, sq});
  // Halting tile <B,(s,q),H,s'> present for the halting tuple.
  bool has_halt = ct.tileset.find(WangTile{b, sq, Color::atom("H"), one}).has_value();
  CHECK(has_halt);
}

TEST_CASE("computation tiles place the exit state on the move side") {
  TuringMachine tm = busy_beaver2();
  CompiledTm ct = compile_tm(tm, {});
  Color b = Color::indexed("s", {0});
  // (0,A,1,B,R): state B exits right.
  CHECK(ct.tileset
            .find(WangTile{b, Color::indexed("sq", {0, 0}), Color::indexed("q", {1}),
                           Color::indexed("s", {1})})
            .has_value());
  // (1,A,1,B,L): state B exits left.
  CHECK(ct.tileset
            .find(WangTile{Color::indexed("q", {1}), Color::indexed("sq", {1, 0}), b,
                           Color::indexed("s", {1})})
            .has_value());
}

TEST_CASE("tile count audit across machines") {
  auto audit = [](const TuringMachine& tm) {
    CompiledTm ct = compile_tm(tm, {});
    int sigma = static_cast<int>(tm.symbols.size());
    int q = static_cast<int>(tm.states.size());
    CHECK(ct.tileset.size() ==
          sigma + 2 * sigma * q + static_cast<int>(tm.rules.size()));
  };
  audit(one_rule_halter());
  audit(right_mover());
  audit(busy_beaver2());
}

TEST_CASE("reachable-only trims head tiles") {
  // The halter never re-enters q0 via a rule, but q0 is the start state, so
  // reachable-only keeps it; a machine with an unreachable state drops it.
  TuringMachine tm = busy_beaver2();
  tm.states.push_back("dead");
  CompiledTm full = compile_tm(tm, {});
  CompiledTm trim = compile_tm(tm, {}, true);
  CHECK(full.tileset.size() == 2 + 2 * 2 * 3 + 4);
  CHECK(trim.tileset.size() == 2 + 2 * 2 * 2 + 4);
}

TEST_CASE("input symbols outside the alphabet are rejected") {
  CHECK_THROWS_AS(compile_tm(one_rule_halter(), {5}), std::invalid_argument);
}

TEST_CASE("halting machine blocks the window at its halt step") {
  TmHarness h(one_rule_halter(), {1});
  CHECK(h.max_height() == 1);
  Tiling t = h.solve(1);
  auto decoded = decode_tm_rows(h.ct, t);
  REQUIRE(decoded.size() == 1);
  CHECK(decoded[0].state == 0);
  CHECK(decoded[0].head == 0);
  CHECK(decoded[0].read(0, 0) == 1);  // pinned row encodes the input
}

TEST_CASE("mover runs to the cap and decodes one step right per row") {
  TmHarness h(right_mover(), {});
  CHECK(h.max_height() == h.cap);
  Tiling t = h.solve(h.cap);
  CHECK(is_valid_tiling(h.ct.tileset, t).ok);
  auto decoded = decode_tm_rows(h.ct, t);
  auto sim = tm_run(right_mover(), {}, h.cap);
  REQUIRE(decoded.size() == static_cast<size_t>(h.cap));
  for (size_t i = 0; i < decoded.size(); ++i) {
    CHECK(decoded[i].head == static_cast<int>(i));
    CHECK(decoded[i] == sim.configs[i]);
  }
}

TEST_CASE("busy beaver 2 blocks at height 6 and decodes its trace") {
  TmHarness h(busy_beaver2(), {});
  CHECK(h.max_height() == 6);
  Tiling t = h.solve(6);
  CHECK(is_valid_tiling(h.ct.tileset, t).ok);
  auto decoded = decode_tm_rows(h.ct, t);
  auto sim = tm_run(busy_beaver2(), {}, h.cap);
  CHECK(sim.halted);
  REQUIRE(decoded.size() == 6);
  for (size_t i = 0; i < decoded.size(); ++i) CHECK(decoded[i] == sim.configs[i]);
}

TEST_CASE("halting iff max height below cap") {
  CHECK(TmHarness(one_rule_halter(), {1}).max_height() < 20);
  CHECK(TmHarness(busy_beaver2(), {}).max_height() < 20);
  CHECK(TmHarness(right_mover(), {}).max_height() == 20);
}
