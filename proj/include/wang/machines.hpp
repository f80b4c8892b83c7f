#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace wang {

// ---------------------------------------------------------------------------
// Turing machines
// ---------------------------------------------------------------------------

// Deterministic single-tape machine given by 5-tuples (s, q, s', q', L/R).
// Symbols and states are interned; HALT is the sentinel state id -1.
struct TuringMachine {
  static constexpr int HALT = -1;

  std::vector<std::string> symbols;  // symbol id = position
  int blank = 0;
  std::vector<std::string> states;  // state id = position; HALT is not listed
  int start = 0;

  enum class Move : uint8_t { L, R };
  struct Rule {
    int s, q;       // read symbol, current state
    int s2, q2;     // written symbol, next state (q2 may be HALT)
    Move move;
  };
  std::vector<Rule> rules;

  // Index of the unique rule for (s, q), or -1 when the machine is stuck.
  int rule_for(int s, int q) const;
  // Throws std::invalid_argument when nondeterministic or HALT is a source.
  void validate() const;

  int symbol_id(const std::string& name) const;
  int state_id(const std::string& name) const;
};

struct TmConfig {
  std::map<int, int> tape;  // position -> symbol id; absent cells are blank
  int head = 0;
  int state = 0;  // TuringMachine::HALT once halted
  int step = 0;

  int read(int pos, int blank) const {
    auto it = tape.find(pos);
    return it == tape.end() ? blank : it->second;
  }
  // Drops explicit blanks so equal configurations compare equal.
  void normalize(int blank);
  bool operator==(const TmConfig& o) const {
    return tape == o.tape && head == o.head && state == o.state && step == o.step;
  }
};

struct TmStep {
  TmConfig config;
  bool halted = false;
  bool stuck = false;  // no matching 5-tuple; treated as a flagged halt
};

// Applies the unique matching 5-tuple. Precondition: c.state != HALT.
TmStep tm_step(const TuringMachine& tm, const TmConfig& c);

struct TmTrace {
  std::vector<TmConfig> configs;  // c0 .. ck
  bool halted = false;
  bool stuck = false;
};

// Runs from `input` written at positions 0.., head 0, start state.
TmTrace tm_run(const TuringMachine& tm, const std::vector<int>& input, int max_steps);

// ---------------------------------------------------------------------------
// Elementary cellular automata
// ---------------------------------------------------------------------------

struct EcaRule {
  int n = 0;  // 0..255
  // table(a,b,c) = bit (4a+2b+c) of n; bit 0 is input 000.
  int table(int a, int b, int c) const { return (n >> (4 * a + 2 * b + c)) & 1; }
};

enum class Boundary { ZeroPad, Wrap };

using BitRow = std::vector<uint8_t>;

BitRow eca_step(const EcaRule& rule, const BitRow& row, Boundary boundary = Boundary::ZeroPad);

// Trace of steps+1 rows including the initial one.
std::vector<BitRow> eca_run(const EcaRule& rule, const BitRow& row, int steps,
                            Boundary boundary = Boundary::ZeroPad);

BitRow parse_bits(const std::string& s);   // "0110" -> row
std::string format_bits(const BitRow& r);  // row -> "0110"

// Chaos classifier after Cattaneo et al.: an ECA is Devaney/Knudson chaotic
// iff its local rule is leftmost or rightmost permutive (or both).
struct PermutivityClass {
  enum class Kind { Leftmost, Rightmost, Both, Neither };
  Kind kind = Kind::Neither;
  bool chaotic = false;
};

PermutivityClass permutivity(const EcaRule& rule);

// ---------------------------------------------------------------------------
// Cyclic tag systems
// ---------------------------------------------------------------------------

struct TagSystem {
  std::vector<std::string> productions;  // binary strings; empty allowed
};

struct TagState {
  size_t i = 0;    // production counter mod |P|
  std::string d;   // data string
  bool operator==(const TagState& o) const { return i == o.i && d == o.d; }
};

// Empty data string halts; else drop d0, append P_i when d0 = 1, advance i.
std::optional<TagState> tag_step(const TagSystem& sys, const TagState& st);

struct TagTrace {
  std::vector<TagState> states;  // initial state first
  bool halted = false;
};

TagTrace tag_run(const TagSystem& sys, const std::string& d0, int max_steps);

}  // namespace wang
