#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace wang {

using Seq = std::vector<int>;

std::string seq_to_digits(const Seq& s);   // {0,1} -> "01"; entries must be < 10
Seq digits_to_seq(const std::string& s);

// Finite truncation of a tree T subset of omega^<omega: prefix-closed, every
// node length <= depth_bound, every entry < branching_bound.
struct FiniteTree {
  std::set<Seq> nodes;
  int depth_bound = 0;
  int branching_bound = 1;

  bool empty() const { return nodes.empty(); }
  bool contains(const Seq& s) const { return nodes.count(s) != 0; }
  void check_invariants() const;  // throws std::invalid_argument
};

// Total characteristic table of all sequences within the bounds.
struct MembershipTable {
  int depth = 0;
  int branching = 1;
  std::set<Seq> ones;

  bool value(const Seq& s) const { return ones.count(s) != 0; }
};

struct NormalizeResult {
  FiniteTree tree;
  std::vector<Seq> deleted;  // 1-entries removed for having a 0 ancestor
  bool clean = false;        // input was already prefix-closed
};

// The largest prefix-closed subset of the table's 1-set (the finite analogue
// of the tree-filter pre-processing).
NormalizeResult normalize(const MembershipTable& tbl);

struct LongestPath {
  Seq path;                        // lexicographically least node of maximal length
  bool ill_at_truncation = false;  // that length hits depth_bound
};

// Throws std::invalid_argument on an empty tree.
LongestPath longest_path(const FiniteTree& tree);

// Fixture generators, all deterministic.
struct TreePredicate {
  enum class Kind { All, SinglePath, Comb, Random };
  Kind kind = Kind::All;
  Seq path;              // SinglePath
  int comb_teeth = 0;    // Comb: spine of 0s with a 1-child at the first k levels
  uint32_t seed = 0;     // Random
  double density = 0.5;  // Random
};

MembershipTable from_predicate(const TreePredicate& pred, int depth, int branching);

}  // namespace wang
