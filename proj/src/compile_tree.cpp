#include "wang/compile_tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace wang {

namespace {

Color lam(char dir) {  // 'U','D','L','R'
  return Color::atom(std::string("lam") + dir);
}
Color mid(int i, int side) {  // side -1 left chain, +1 right chain, 0 centre
  if (i == 0) return side < 0 ? Color::atom("ML0") : Color::atom("MR0");
  return Color::indexed("M", {i});
}
Color quad(int j, int i) { return Color::indexed("c", {j, i}); }
Color plain(const Seq& s) { return Color::seq(s); }
Color sup(const Seq& s, int j) { return Color::seq_ext(s, j); }

Seq parent_of(const Seq& s) { return Seq(s.begin(), s.end() - 1); }

constexpr int kPitUp = 1;
constexpr int kPitDown = 2;

// Non-root nodes, deepest first and lexicographic within a depth. Deep tiles
// must precede shallow ones in the set so the first solution carries the
// deepest (then lexicographically least) path instead of a shallow arm
// capped by a reflected tile whose odd edge faces the free boundary.
std::vector<Seq> nodes_deep_first(const FiniteTree& tree) {
  std::vector<Seq> nodes(tree.nodes.begin(), tree.nodes.end());
  std::erase_if(nodes, [](const Seq& s) { return s.empty(); });
  std::stable_sort(nodes.begin(), nodes.end(), [](const Seq& a, const Seq& b) {
    return a.size() > b.size();
  });
  return nodes;
}

}  // namespace

CompiledTree compile_tree(const FiniteTree& tree, TreeKind kind) {
  if (tree.empty()) throw std::invalid_argument("compile_tree: empty tree");
  tree.check_invariants();

  CompiledTree ct;
  ct.kind = kind;
  ct.tree = tree;
  int depth = tree.depth_bound;

  auto add = [&](WangTile t, TreeTileRole role) {
    ct.tileset.add(std::move(t));
    ct.roles.push_back(std::move(role));
  };
  using K = TreeTileRole::Kind;

  if (kind == TreeKind::Ait) {
    ct.tileset.name = "ait";
    add({mid(0, -1), lam('U'), mid(0, +1), lam('D')}, {K::Root});
    for (int i = 1; i <= depth; ++i) {
      add({mid(i, -1), quad(1, i), mid(i - 1, -1), quad(4, i)},
          {K::MidRow, -1, 0, i, {}});
      add({mid(i - 1, +1), quad(2, i), mid(i, +1), quad(3, i)},
          {K::MidRow, +1, 0, i, {}});
    }
    // Quadrant bands radiate from the root; a (2d+1)-wide window needs
    // outer indices up to 2d.
    for (int k = 2; k <= 2 * depth; ++k) {
      add({quad(1, k), quad(1, k), quad(1, k - 1), quad(1, k - 1)}, {K::Quadrant, 0, 1, k, {}});
      add({quad(2, k - 1), quad(2, k), quad(2, k), quad(2, k - 1)}, {K::Quadrant, 0, 2, k, {}});
      add({quad(3, k - 1), quad(3, k - 1), quad(3, k), quad(3, k)}, {K::Quadrant, 0, 3, k, {}});
      add({quad(4, k), quad(4, k - 1), quad(4, k - 1), quad(4, k)}, {K::Quadrant, 0, 4, k, {}});
    }
    for (const Seq& s : nodes_deep_first(tree)) {
      int d = static_cast<int>(s.size());
      Color above = d == 1 ? lam('U') : plain(parent_of(s));
      Color below = d == 1 ? lam('D') : plain(parent_of(s));
      add({quad(1, d), plain(s), quad(2, d), above}, {K::ColUp, 0, 0, d, s});
      add({quad(4, d), below, quad(3, d), plain(s)}, {K::ColDown, 0, 0, d, s});
    }
    ct.tileset.meta = Meta{{"kind", "ait"}, {"depth", depth},
                           {"nodes", static_cast<int>(tree.nodes.size())}};
  } else if (kind == TreeKind::Pit) {
    ct.tileset.name = "pit";
    add({Color::atom("M"), lam('U'), Color::atom("M"), lam('D')}, {K::Root});
    for (const Seq& s : nodes_deep_first(tree)) {
      int d = static_cast<int>(s.size());
      Color u = Color::indexed("U", {d}), dn = Color::indexed("D", {d});
      Color above_u = d == 1 ? lam('U') : sup(parent_of(s), kPitUp);
      Color above_d = d == 1 ? lam('D') : sup(parent_of(s), kPitDown);
      add({u, sup(s, kPitUp), u, above_u}, {K::ColUp, 0, 0, d, s});
      add({dn, above_d, dn, sup(s, kPitDown)}, {K::ColDown, 0, 0, d, s});
    }
    ct.tileset.meta = Meta{{"kind", "pit"}, {"depth", depth},
                           {"nodes", static_cast<int>(tree.nodes.size())}};
  } else {
    ct.tileset.name = "spokes";
    add({lam('L'), lam('U'), lam('R'), lam('D')}, {K::Root});
    for (const Seq& s : nodes_deep_first(tree)) {
      int d = static_cast<int>(s.size());
      Seq pi = parent_of(s);
      Color pp = plain(pi);
      add({sup(s, 1), plain(s), sup(s, 2), d == 1 ? lam('U') : pp}, {K::SpokeArm, 0, 1, d, s});
      add({d == 1 ? lam('R') : pp, sup(s, 2), plain(s), sup(s, 3)}, {K::SpokeArm, 0, 2, d, s});
      add({sup(s, 4), d == 1 ? lam('D') : pp, sup(s, 3), plain(s)}, {K::SpokeArm, 0, 3, d, s});
      add({plain(s), sup(s, 1), d == 1 ? lam('L') : pp, sup(s, 4)}, {K::SpokeArm, 0, 4, d, s});
      if (d >= 2) {  // quadrant bands start two steps out; no lambda pairs
        add({sup(s, 1), sup(s, 1), sup(pi, 1), sup(pi, 1)}, {K::SpokeQuad, 0, 1, d, s});
        add({sup(pi, 2), sup(s, 2), sup(s, 2), sup(pi, 2)}, {K::SpokeQuad, 0, 2, d, s});
        add({sup(pi, 3), sup(pi, 3), sup(s, 3), sup(s, 3)}, {K::SpokeQuad, 0, 3, d, s});
        add({sup(s, 4), sup(pi, 4), sup(pi, 4), sup(s, 4)}, {K::SpokeQuad, 0, 4, d, s});
      }
    }
    ct.tileset.meta = Meta{{"kind", "spokes"}, {"depth", depth},
                           {"nodes", static_cast<int>(tree.nodes.size())}};
  }
  return ct;
}

namespace {

const TreeTileRole* role_at(const CompiledTree& ct, const Tiling& t, Cell c) {
  if (!t.contains(c)) return nullptr;
  auto idx = t.at(c);
  if (!idx) return nullptr;
  return &ct.roles[static_cast<size_t>(*idx)];
}

}  // namespace

Seq recover_path(const CompiledTree& ct, const Tiling& t, std::optional<Cell> start) {
  using K = TreeTileRole::Kind;
  Cell cur;
  if (start) {
    cur = *start;
  } else {
    bool found = false;
    for (int y = t.origin.y; y < t.origin.y + t.height && !found; ++y)
      for (int x = t.origin.x; x < t.origin.x + t.width && !found; ++x) {
        const TreeTileRole* r = role_at(ct, t, {x, y});
        if (r && r->kind == K::Root) {
          cur = {x, y};
          found = true;
        }
      }
    if (!found) throw std::runtime_error("recover_path: cannot locate root");
  }

  // Walk to the root: quadrants move vertically to the mid row or arm,
  // mid rows and arms move horizontally or vertically toward the root.
  for (int guard = 0; guard < t.width * t.height + 4; ++guard) {
    const TreeTileRole* r = role_at(ct, t, cur);
    if (!r) throw std::runtime_error("recover_path: cannot locate root");
    if (r->kind == K::Root) break;
    switch (r->kind) {
      case K::Quadrant:
      case K::SpokeQuad:
        cur.y += (r->j == 1 || r->j == 2) ? 1 : -1;  // upper quadrants walk down
        break;
      case K::MidRow:
        cur.x += r->side < 0 ? 1 : -1;
        break;
      case K::ColUp:
        cur.y += 1;
        break;
      case K::ColDown:
        cur.y -= 1;
        break;
      case K::SpokeArm:
        switch (r->j) {
          case 1: cur.y += 1; break;  // up arm: walk down
          case 2: cur.x -= 1; break;  // right arm: walk left
          case 3: cur.y -= 1; break;
          default: cur.x += 1; break;
        }
        break;
      default:
        throw std::runtime_error("recover_path: unexpected tile on walk");
    }
  }
  const TreeTileRole* r = role_at(ct, t, cur);
  if (!r || r->kind != K::Root) throw std::runtime_error("recover_path: cannot locate root");

  // Read the node labels up the column above the root.
  Seq path;
  for (int y = cur.y - 1; y >= t.origin.y; --y) {
    const TreeTileRole* up = role_at(ct, t, {cur.x, y});
    if (!up || !(up->kind == K::ColUp || (up->kind == K::SpokeArm && up->j == 1))) break;
    path = up->node;
  }
  return path;
}

}  // namespace wang
