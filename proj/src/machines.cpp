#include "wang/machines.hpp"

#include <algorithm>
#include <stdexcept>

namespace wang {

// ---------------------------------------------------------------------------
// Turing machines
// ---------------------------------------------------------------------------

int TuringMachine::rule_for(int s, int q) const {
  for (size_t i = 0; i < rules.size(); ++i)
    if (rules[i].s == s && rules[i].q == q) return static_cast<int>(i);
  return -1;
}

void TuringMachine::validate() const {
  if (symbols.empty() || states.empty()) throw std::invalid_argument("tm: empty alphabet");
  if (blank < 0 || blank >= static_cast<int>(symbols.size()))
    throw std::invalid_argument("tm: blank symbol out of range");
  if (start < 0 || start >= static_cast<int>(states.size()))
    throw std::invalid_argument("tm: start state out of range");
  for (size_t i = 0; i < rules.size(); ++i) {
    const Rule& r = rules[i];
    if (r.q == HALT) throw std::invalid_argument("tm: HALT used as source state");
    if (r.s < 0 || r.s >= static_cast<int>(symbols.size()) || r.s2 < 0 ||
        r.s2 >= static_cast<int>(symbols.size()))
      throw std::invalid_argument("tm: rule symbol out of range");
    if (r.q < 0 || r.q >= static_cast<int>(states.size()) ||
        (r.q2 != HALT && (r.q2 < 0 || r.q2 >= static_cast<int>(states.size()))))
      throw std::invalid_argument("tm: rule state out of range");
    for (size_t j = 0; j < i; ++j)
      if (rules[j].s == r.s && rules[j].q == r.q)
        throw std::invalid_argument("tm: two rules for one (symbol, state)");
  }
}

int TuringMachine::symbol_id(const std::string& name) const {
  auto it = std::find(symbols.begin(), symbols.end(), name);
  if (it == symbols.end()) throw std::invalid_argument("tm: unknown symbol '" + name + "'");
  return static_cast<int>(it - symbols.begin());
}

int TuringMachine::state_id(const std::string& name) const {
  if (name == "HALT") return HALT;
  auto it = std::find(states.begin(), states.end(), name);
  if (it == states.end()) throw std::invalid_argument("tm: unknown state '" + name + "'");
  return static_cast<int>(it - states.begin());
}

void TmConfig::normalize(int blank) {
  for (auto it = tape.begin(); it != tape.end();)
    it = (it->second == blank) ? tape.erase(it) : std::next(it);
}

TmStep tm_step(const TuringMachine& tm, const TmConfig& c) {
  TmStep out;
  out.config = c;
  int s = c.read(c.head, tm.blank);
  int ri = tm.rule_for(s, c.state);
  if (ri < 0) {  // no matching 5-tuple: treated as a halt, flagged
    out.halted = true;
    out.stuck = true;
    return out;
  }
  const auto& r = tm.rules[static_cast<size_t>(ri)];
  out.config.tape[c.head] = r.s2;
  out.config.normalize(tm.blank);
  out.config.head = c.head + (r.move == TuringMachine::Move::R ? 1 : -1);
  out.config.state = r.q2;
  out.config.step = c.step + 1;
  out.halted = (r.q2 == TuringMachine::HALT);
  return out;
}

TmTrace tm_run(const TuringMachine& tm, const std::vector<int>& input, int max_steps) {
  if (max_steps < 1) throw std::invalid_argument("tm_run: max_steps must be >= 1");
  TmTrace trace;
  TmConfig c;
  c.state = tm.start;
  for (size_t i = 0; i < input.size(); ++i)
    if (input[i] != tm.blank) c.tape[static_cast<int>(i)] = input[i];
  trace.configs.push_back(c);
  for (int step = 0; step < max_steps; ++step) {
    TmStep next = tm_step(tm, trace.configs.back());
    if (next.stuck) {
      trace.halted = true;
      trace.stuck = true;
      break;
    }
    trace.configs.push_back(next.config);
    if (next.halted) {
      trace.halted = true;
      break;
    }
  }
  return trace;
}

// ---------------------------------------------------------------------------
// Elementary cellular automata
// ---------------------------------------------------------------------------

BitRow eca_step(const EcaRule& rule, const BitRow& row, Boundary boundary) {
  if (row.empty()) throw std::invalid_argument("eca_step: empty row");
  size_t n = row.size();
  BitRow out(n);
  for (size_t i = 0; i < n; ++i) {
    int a, c;
    if (boundary == Boundary::Wrap) {
      a = row[(i + n - 1) % n];
      c = row[(i + 1) % n];
    } else {
      a = i == 0 ? 0 : row[i - 1];
      c = i + 1 == n ? 0 : row[i + 1];
    }
    out[i] = static_cast<uint8_t>(rule.table(a, row[i], c));
  }
  return out;
}

std::vector<BitRow> eca_run(const EcaRule& rule, const BitRow& row, int steps,
                            Boundary boundary) {
  std::vector<BitRow> rows{row};
  for (int i = 0; i < steps; ++i) rows.push_back(eca_step(rule, rows.back(), boundary));
  return rows;
}

BitRow parse_bits(const std::string& s) {
  BitRow out;
  out.reserve(s.size());
  for (char ch : s) {
    if (ch != '0' && ch != '1') throw std::invalid_argument("bit string must be 0/1");
    out.push_back(static_cast<uint8_t>(ch - '0'));
  }
  return out;
}

std::string format_bits(const BitRow& r) {
  std::string s;
  s.reserve(r.size());
  for (uint8_t b : r) s += static_cast<char>('0' + b);
  return s;
}

PermutivityClass permutivity(const EcaRule& rule) {
  bool leftmost = true, rightmost = true;
  for (int b = 0; b < 2; ++b)
    for (int c = 0; c < 2; ++c)
      if (rule.table(0, b, c) == rule.table(1, b, c)) leftmost = false;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      if (rule.table(a, b, 0) == rule.table(a, b, 1)) rightmost = false;
  PermutivityClass out;
  using K = PermutivityClass::Kind;
  out.kind = leftmost ? (rightmost ? K::Both : K::Leftmost)
                      : (rightmost ? K::Rightmost : K::Neither);
  out.chaotic = out.kind != K::Neither;
  return out;
}

// ---------------------------------------------------------------------------
// Cyclic tag systems
// ---------------------------------------------------------------------------

std::optional<TagState> tag_step(const TagSystem& sys, const TagState& st) {
  if (sys.productions.empty()) throw std::invalid_argument("tag system needs productions");
  if (st.d.empty()) return std::nullopt;
  TagState next;
  next.d = st.d.substr(1);
  if (st.d[0] == '1') next.d += sys.productions[st.i];
  next.i = (st.i + 1) % sys.productions.size();
  return next;
}

TagTrace tag_run(const TagSystem& sys, const std::string& d0, int max_steps) {
  TagTrace trace;
  trace.states.push_back(TagState{0, d0});
  for (int i = 0; i < max_steps; ++i) {
    auto next = tag_step(sys, trace.states.back());
    if (!next) {
      trace.halted = true;
      break;
    }
    trace.states.push_back(*next);
  }
  return trace;
}

}  // namespace wang
