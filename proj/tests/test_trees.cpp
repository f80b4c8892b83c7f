#include <random>

#include "doctest.h"
#include "wang/trees.hpp"

using namespace wang;

TEST_CASE("normalize keeps prefix-closed tables unchanged") {
  MembershipTable tbl;
  tbl.depth = 3;
  tbl.branching = 2;
  tbl.ones = {{}, {0}, {0, 0}};
  auto res = normalize(tbl);
  CHECK(res.clean);
  CHECK(res.tree.nodes == tbl.ones);
  CHECK(res.deleted.empty());
}

TEST_CASE("normalize deletes orphans") {
  MembershipTable tbl;
  tbl.depth = 2;
  tbl.branching = 2;
  tbl.ones = {{}, {0, 1}};  // 01 present, 0 absent
  auto res = normalize(tbl);
  CHECK_FALSE(res.clean);
  CHECK(res.tree.nodes == std::set<Seq>{{}});
  REQUIRE(res.deleted.size() == 1);
  CHECK(res.deleted[0] == Seq{0, 1});
}

TEST_CASE("normalize output is the maximal prefix-closed subset") {
  // Brute force: a subset is prefix-closed iff every parent is present;
  // the maximal one is unique. Checked on random tables, depth 4, branching 3.
  std::mt19937 gen(3);
  for (int trial = 0; trial < 40; ++trial) {
    TreePredicate p;
    p.kind = TreePredicate::Kind::Random;
    p.seed = 1000 + static_cast<uint32_t>(trial);
    p.density = 0.6;
    MembershipTable tbl = from_predicate(p, 4, 3);
    auto res = normalize(tbl);
    res.tree.check_invariants();
    std::set<Seq> brute;
    for (const Seq& s : tbl.ones) {
      bool keep = true;
      for (size_t k = 0; k < s.size(); ++k)
        if (!tbl.ones.count(Seq(s.begin(), s.begin() + static_cast<long>(k)))) keep = false;
      if (keep) brute.insert(s);
    }
    CHECK(res.tree.nodes == brute);
    for (const Seq& s : res.tree.nodes) CHECK(tbl.ones.count(s));
    // Idempotence.
    MembershipTable again;
    again.depth = tbl.depth;
    again.branching = tbl.branching;
    again.ones = res.tree.nodes;
    CHECK(normalize(again).tree.nodes == res.tree.nodes);
  }
}

TEST_CASE("longest_path") {
  FiniteTree t;
  t.depth_bound = 3;
  t.branching_bound = 2;
  t.nodes = {{}, {0}, {0, 0}, {0, 0, 0}};
  auto lp = longest_path(t);
  CHECK(lp.path == Seq{0, 0, 0});
  CHECK(lp.ill_at_truncation);

  FiniteTree shallow;
  shallow.depth_bound = 3;
  shallow.branching_bound = 2;
  shallow.nodes = {{}, {0}, {1}};
  auto lp2 = longest_path(shallow);
  CHECK(lp2.path == Seq{0});
  CHECK_FALSE(lp2.ill_at_truncation);

  // Lexicographically least among maximal: {1,0} loses to nothing shorter.
  FiniteTree mix;
  mix.depth_bound = 2;
  mix.branching_bound = 2;
  mix.nodes = {{}, {0}, {1}, {1, 0}, {1, 1}};
  CHECK(longest_path(mix).path == Seq{1, 0});

  FiniteTree empty;
  CHECK_THROWS_AS(longest_path(empty), std::invalid_argument);
}

TEST_CASE("longest_path has no extension in the tree") {
  std::mt19937 gen(9);
  for (int trial = 0; trial < 30; ++trial) {
    TreePredicate p;
    p.kind = TreePredicate::Kind::Random;
    p.seed = 500 + static_cast<uint32_t>(trial);
    p.density = 0.7;
    auto tree = normalize(from_predicate(p, 4, 3)).tree;
    if (tree.empty()) continue;
    auto lp = longest_path(tree);
    for (int d = 0; d < tree.branching_bound; ++d) {
      Seq ext = lp.path;
      ext.push_back(d);
      CHECK_FALSE(tree.contains(ext));
    }
  }
}

TEST_CASE("full binary tree depth 5") {
  auto tbl = from_predicate({TreePredicate::Kind::All}, 5, 2);
  auto tree = normalize(tbl).tree;
  CHECK(tree.nodes.size() == 63);
  CHECK(longest_path(tree).path == Seq{0, 0, 0, 0, 0});
}

TEST_CASE("fixture predicates") {
  TreePredicate sp;
  sp.kind = TreePredicate::Kind::SinglePath;
  sp.path = {0, 1, 0};
  auto tbl = from_predicate(sp, 3, 2);
  CHECK(tbl.ones == std::set<Seq>{{}, {0}, {0, 1}, {0, 1, 0}});

  TreePredicate comb;
  comb.kind = TreePredicate::Kind::Comb;
  comb.comb_teeth = 2;
  auto ct = from_predicate(comb, 3, 2);
  CHECK(ct.ones.count(Seq{0, 0, 0}));
  CHECK(ct.ones.count(Seq{1}));
  CHECK(ct.ones.count(Seq{0, 1}));
  CHECK_FALSE(ct.ones.count(Seq{0, 0, 1}));

  // random(7, 0.5) is reproducible: frozen 1-set footprint.
  TreePredicate rnd;
  rnd.kind = TreePredicate::Kind::Random;
  rnd.seed = 7;
  rnd.density = 0.5;
  auto a = from_predicate(rnd, 4, 3);
  auto b = from_predicate(rnd, 4, 3);
  CHECK(a.ones == b.ones);
}

TEST_CASE("digit strings") {
  CHECK(seq_to_digits({0, 1, 2}) == "012");
  CHECK(digits_to_seq("012") == Seq{0, 1, 2});
  CHECK(seq_to_digits({}) == "");
  CHECK_THROWS_AS(digits_to_seq("0a"), std::invalid_argument);
}
