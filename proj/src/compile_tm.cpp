#include "wang/compile_tm.hpp"

#include <set>
#include <stdexcept>

namespace wang {

namespace {

Color sym_color(int s) { return Color::indexed("s", {s}); }
Color state_color(int q) { return Color::indexed("q", {q}); }
Color sq_color(int s, int q) { return Color::indexed("sq", {s, q}); }
Color halt_color() { return Color::atom("H"); }

}  // namespace

int CompiledTm::symbol_tile(int s) const { return s; }

int CompiledTm::head_tile_left(int s, int q) const {
  for (size_t i = 0; i < roles.size(); ++i)
    if (roles[i].kind == TmTileRole::Kind::HeadLeft && roles[i].s == s && roles[i].q == q)
      return static_cast<int>(i);
  throw std::invalid_argument("no head tile for (s,q)");
}

int CompiledTm::head_tile_right(int s, int q) const {
  for (size_t i = 0; i < roles.size(); ++i)
    if (roles[i].kind == TmTileRole::Kind::HeadRight && roles[i].s == s && roles[i].q == q)
      return static_cast<int>(i);
  throw std::invalid_argument("no head tile for (s,q)");
}

std::vector<Pin> CompiledTm::pins_for_window(int x0, int width) const {
  int right = x0 + width;
  int k = static_cast<int>(input.size());
  if (x0 > head_col || right <= head_col + std::max(k - 1, 0))
    throw std::invalid_argument("window does not cover the input row");
  std::vector<Pin> pins;
  // The head tile carries the start state on its left edge. The cell
  // immediately left of the head is pinned wild to absorb that edge (a
  // symbol pin there could not match it, and a head-tile pin would spawn a
  // second marker). Everything further left is pinned blank so the tape
  // outside the input is fixed. The one wild cell leaves tape position
  // head_col-1 unconstrained at step 0; branches that exploit it must still
  // tile on their own and die against the forced track for the machines
  // compiled here.
  for (int x = x0; x < head_col - 1; ++x) pins.push_back({{x, 0}, symbol_tile(tm.blank)});
  if (head_col - 1 >= x0) pins.push_back({{head_col - 1, 0}, std::nullopt});
  int s0 = input.empty() ? tm.blank : input[0];
  pins.push_back({{head_col, 0}, head_tile_left(s0, tm.start)});
  for (int x = head_col + 1; x < right; ++x) {
    int i = x - head_col;
    int s = i < k ? input[static_cast<size_t>(i)] : tm.blank;
    pins.push_back({{x, 0}, symbol_tile(s)});
  }
  return pins;
}

CompiledTm compile_tm(const TuringMachine& tm, const std::vector<int>& input,
                      bool reachable_only) {
  tm.validate();
  for (int s : input)
    if (s < 0 || s >= static_cast<int>(tm.symbols.size()))
      throw std::invalid_argument("compile_tm: input symbol not in machine alphabet");

  CompiledTm ct;
  ct.tm = tm;
  ct.input = input;
  ct.reachable_only = reachable_only;
  ct.tileset.name = "tm";
  const Color b = sym_color(tm.blank);

  auto add = [&](WangTile t, TmTileRole role) {
    ct.tileset.add(std::move(t));
    ct.roles.push_back(role);
  };

  int ns = static_cast<int>(tm.symbols.size());
  for (int s = 0; s < ns; ++s)
    add({b, sym_color(s), b, sym_color(s)}, {TmTileRole::Kind::Symbol, s, 0, -1});

  std::set<int> head_states;
  if (reachable_only) {
    head_states.insert(tm.start);
    for (const auto& r : tm.rules)
      if (r.q2 != TuringMachine::HALT) head_states.insert(r.q2);
  } else {
    for (int q = 0; q < static_cast<int>(tm.states.size()); ++q) head_states.insert(q);
  }
  for (int s = 0; s < ns; ++s) {
    for (int q : head_states) {
      add({state_color(q), sym_color(s), b, sq_color(s, q)},
          {TmTileRole::Kind::HeadLeft, s, q, -1});
      add({b, sym_color(s), state_color(q), sq_color(s, q)},
          {TmTileRole::Kind::HeadRight, s, q, -1});
    }
  }

  for (size_t i = 0; i < tm.rules.size(); ++i) {
    const auto& r = tm.rules[i];
    Color top = sq_color(r.s, r.q);
    Color bottom = sym_color(r.s2);
    if (r.q2 == TuringMachine::HALT) {
      add({b, top, halt_color(), bottom},
          {TmTileRole::Kind::Halt, 0, 0, static_cast<int>(i)});
    } else if (r.move == TuringMachine::Move::R) {
      add({b, top, state_color(r.q2), bottom},
          {TmTileRole::Kind::Comp, 0, 0, static_cast<int>(i)});
    } else {
      add({state_color(r.q2), top, b, bottom},
          {TmTileRole::Kind::Comp, 0, 0, static_cast<int>(i)});
    }
  }

  ct.tileset.meta = Meta{{"kind", "tm"},
                         {"symbols", tm.symbols},
                         {"states", tm.states},
                         {"reachable_only", reachable_only}};
  return ct;
}

std::vector<TmConfig> decode_tm_rows(const CompiledTm& ct, const Tiling& t) {
  const TuringMachine& tm = ct.tm;
  std::vector<TmConfig> configs;
  TmConfig c;
  c.state = tm.start;
  for (size_t i = 0; i < ct.input.size(); ++i)
    if (ct.input[i] != tm.blank) c.tape[static_cast<int>(i) + ct.head_col] = ct.input[i];
  c.head = ct.head_col;
  configs.push_back(c);

  for (int r = 1; r < t.height; ++r) {
    int y = t.origin.y + r;
    Cell under{c.head, y};
    if (!t.contains(under)) break;
    auto idx = t.at(under);
    if (!idx) throw std::runtime_error("decode_tm_rows: wildcard under head track");
    const TmTileRole& role = ct.roles[static_cast<size_t>(*idx)];
    if (role.kind == TmTileRole::Kind::Comp || role.kind == TmTileRole::Kind::Halt) {
      const auto& rule = tm.rules[static_cast<size_t>(role.rule)];
      if (rule.s != c.read(c.head, tm.blank) || rule.q != c.state)
        throw std::runtime_error("decode_tm_rows: computation tile disagrees with track");
      c.tape[c.head] = rule.s2;
      c.normalize(tm.blank);
      c.head += rule.move == TuringMachine::Move::R ? 1 : -1;
      c.state = rule.q2;
      c.step = r;
      if (role.kind == TmTileRole::Kind::Halt) {
        configs.push_back(c);
        break;
      }
      Cell marker{c.head, y};
      if (!t.contains(marker)) break;  // head left the window
      auto midx = t.at(marker);
      bool ok = midx.has_value();
      if (ok) {
        const TmTileRole& mrole = ct.roles[static_cast<size_t>(*midx)];
        ok = (mrole.kind == TmTileRole::Kind::HeadLeft ||
              mrole.kind == TmTileRole::Kind::HeadRight) &&
             mrole.s == c.read(c.head, tm.blank) && mrole.q == c.state;
      }
      if (!ok)
        throw std::runtime_error("decode_tm_rows: row lacks the unique head marker");
      configs.push_back(c);
    } else {
      throw std::runtime_error("decode_tm_rows: expected a computation tile under the marker");
    }
  }
  return configs;
}

}  // namespace wang
