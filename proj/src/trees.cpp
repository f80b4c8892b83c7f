#include "wang/trees.hpp"

#include <random>
#include <stdexcept>

namespace wang {

std::string seq_to_digits(const Seq& s) {
  std::string out;
  for (int d : s) {
    if (d < 0 || d > 9) throw std::invalid_argument("sequence entry not a digit");
    out += static_cast<char>('0' + d);
  }
  return out;
}

Seq digits_to_seq(const std::string& s) {
  Seq out;
  for (char ch : s) {
    if (ch < '0' || ch > '9') throw std::invalid_argument("bad digit string");
    out.push_back(ch - '0');
  }
  return out;
}

void FiniteTree::check_invariants() const {
  if (nodes.empty()) return;
  if (!nodes.count(Seq{})) throw std::invalid_argument("tree: missing root");
  for (const Seq& s : nodes) {
    if (static_cast<int>(s.size()) > depth_bound)
      throw std::invalid_argument("tree: node deeper than depth_bound");
    for (int d : s)
      if (d < 0 || d >= branching_bound)
        throw std::invalid_argument("tree: entry outside branching_bound");
    if (!s.empty()) {
      Seq parent(s.begin(), s.end() - 1);
      if (!nodes.count(parent)) throw std::invalid_argument("tree: not prefix-closed");
    }
  }
}

NormalizeResult normalize(const MembershipTable& tbl) {
  NormalizeResult res;
  res.tree.depth_bound = tbl.depth;
  res.tree.branching_bound = tbl.branching;
  res.clean = true;
  // Keep exactly the 1-nodes all of whose proper prefixes are also 1.
  for (const Seq& s : tbl.ones) {
    bool ok = true;
    for (size_t k = 0; k < s.size(); ++k) {
      Seq prefix(s.begin(), s.begin() + static_cast<long>(k));
      if (!tbl.value(prefix)) {
        ok = false;
        break;
      }
    }
    if (ok)
      res.tree.nodes.insert(s);
    else {
      res.deleted.push_back(s);
      res.clean = false;
    }
  }
  res.tree.check_invariants();
  return res;
}

LongestPath longest_path(const FiniteTree& tree) {
  if (tree.empty()) throw std::invalid_argument("longest_path: empty tree");
  LongestPath out;
  size_t best = 0;
  bool first = true;
  for (const Seq& s : tree.nodes) {  // std::set iterates in lex order
    if (first || s.size() > best) {
      best = s.size();
      out.path = s;
      first = false;
    }
  }
  // Lexicographic tie-break: set order visits shorter-prefix first, so among
  // equal lengths the first encountered is the least; the loop above only
  // replaces on strictly greater length, keeping it.
  out.ill_at_truncation = static_cast<int>(best) == tree.depth_bound;
  return out;
}

MembershipTable from_predicate(const TreePredicate& pred, int depth, int branching) {
  if (depth < 0 || branching < 1) throw std::invalid_argument("from_predicate: bad bounds");
  MembershipTable tbl;
  tbl.depth = depth;
  tbl.branching = branching;

  std::vector<Seq> all{Seq{}};
  for (size_t i = 0; i < all.size(); ++i) {
    Seq s = all[i];
    if (static_cast<int>(s.size()) == depth) continue;
    for (int d = 0; d < branching; ++d) {
      Seq child = s;
      child.push_back(d);
      all.push_back(child);
    }
  }

  switch (pred.kind) {
    case TreePredicate::Kind::All:
      tbl.ones.insert(all.begin(), all.end());
      break;
    case TreePredicate::Kind::SinglePath:
      for (size_t k = 0; k <= pred.path.size(); ++k) {
        Seq prefix(pred.path.begin(), pred.path.begin() + static_cast<long>(k));
        if (static_cast<int>(prefix.size()) <= depth) tbl.ones.insert(prefix);
      }
      break;
    case TreePredicate::Kind::Comb: {
      Seq spine;
      tbl.ones.insert(spine);
      for (int i = 0; i < depth; ++i) {
        if (i < pred.comb_teeth && branching > 1) {
          Seq tooth = spine;
          tooth.push_back(1);
          tbl.ones.insert(tooth);
        }
        spine.push_back(0);
        tbl.ones.insert(spine);
      }
      break;
    }
    case TreePredicate::Kind::Random: {
      std::mt19937 gen(pred.seed);
      auto threshold = static_cast<uint64_t>(pred.density * 4294967296.0);
      for (const Seq& s : all) {
        if (s.empty()) {
          tbl.ones.insert(s);  // keep the root so random trees are non-empty
          continue;
        }
        if (static_cast<uint64_t>(gen()) < threshold) tbl.ones.insert(s);
      }
      break;
    }
  }
  return tbl;
}

}  // namespace wang
