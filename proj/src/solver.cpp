#include "wang/solver.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace wang {

namespace {

class Bitset {
 public:
  Bitset() = default;
  Bitset(int n, bool ones) : n_(n), w_((n + 63) / 64, 0) {
    if (ones) {
      for (auto& w : w_) w = ~0ull;
      trim();
    }
  }
  void set(int i) { w_[i >> 6] |= 1ull << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(1ull << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  bool intersects(const Bitset& o) const {
    for (size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & o.w_[k]) return true;
    return false;
  }
  template <typename F>
  void for_each(F f) const {
    for (size_t k = 0; k < w_.size(); ++k) {
      uint64_t w = w_[k];
      while (w) {
        int b = __builtin_ctzll(w);
        f(static_cast<int>(k * 64 + b));
        w &= w - 1;
      }
    }
  }

 private:
  void trim() {
    if (n_ % 64) w_.back() &= (1ull << (n_ % 64)) - 1;
  }
  int n_ = 0;
  std::vector<uint64_t> w_;
};

constexpr int kUnset = -2;
constexpr int kWildcard = -1;

// Shared search engine for flat windows and tori. Cells are scanned
// row-major; candidates in tie-break order, wildcard last. Arc consistency
// is maintained through the search so that pinned structures propagate.
class Search {
 public:
  Search(const TileSet& ts, int w, int h, bool torus) : ts_(ts), w_(w), h_(h), torus_(torus) {
    intern();
    n_ = w_ * h_;
    domains_.assign(n_, Bitset(ts_.size(), true));
    assign_.assign(n_, kUnset);
    wildcard_ok_.assign(n_, 0);
    order_.resize(ts_.size());
    for (int i = 0; i < ts_.size(); ++i) order_[i] = i;
  }

  void set_tie_break(const std::vector<int>& order) {
    if (order.empty()) return;
    if (static_cast<int>(order.size()) != ts_.size())
      throw std::invalid_argument("tie_break must permute all tile indices");
    order_ = order;
  }

  void allow_wildcards(std::optional<int> budget) {
    wildcards_allowed_ = true;
    budget_ = budget;
    bool usable = !budget_ || *budget_ > 0;
    for (int i = 0; i < n_; ++i)
      if (assign_[i] == kUnset) wildcard_ok_[i] = usable;
  }

  void pin(int cell, std::optional<int> tile) {
    if (tile) {
      if (*tile < 0 || *tile >= ts_.size())
        throw std::invalid_argument("pin references tile outside set");
      if (assign_[cell] != kUnset && assign_[cell] != *tile)
        throw std::invalid_argument("conflicting pins on one cell");
      assign_[cell] = *tile;
      Bitset single(ts_.size(), false);
      single.set(*tile);
      domains_[cell] = single;
      wildcard_ok_[cell] = 0;
    } else {
      if (!wildcards_allowed_)
        throw std::invalid_argument("wildcard pin without wildcard mode");
      if (assign_[cell] >= 0)
        throw std::invalid_argument("conflicting pins on one cell");
      assign_[cell] = kWildcard;
      wildcard_ok_[cell] = 1;
    }
  }

  // First solution in lexicographic order, as a flat cell vector.
  std::optional<std::vector<int>> run() {
    if (!initial_ac()) return std::nullopt;
    if (!dfs(0)) return std::nullopt;
    return std::vector<int>(assign_.begin(), assign_.end());
  }

 private:
  struct Edge {
    int other;  // neighbour cell, -1 outside region
    // colour-id of the facing edge per tile, and candidate bitsets keyed by it
    const std::vector<int>* my_edge;
    const std::vector<Bitset>* their_candidates;
  };

  void intern() {
    std::map<std::string, int> ids;
    auto id_of = [&](const Color& c) {
      auto [it, fresh] = ids.emplace(c.encode(), static_cast<int>(ids.size()));
      return it->second;
    };
    int nt = ts_.size();
    l_.resize(nt);
    u_.resize(nt);
    r_.resize(nt);
    b_.resize(nt);
    for (int i = 0; i < nt; ++i) {
      l_[i] = id_of(ts_[i].left);
      u_[i] = id_of(ts_[i].up);
      r_[i] = id_of(ts_[i].right);
      b_[i] = id_of(ts_[i].bottom);
    }
    int nc = static_cast<int>(ids.size());
    with_l_.assign(nc, Bitset(nt, false));
    with_u_.assign(nc, Bitset(nt, false));
    with_r_.assign(nc, Bitset(nt, false));
    with_b_.assign(nc, Bitset(nt, false));
    for (int i = 0; i < nt; ++i) {
      with_l_[l_[i]].set(i);
      with_u_[u_[i]].set(i);
      with_r_[r_[i]].set(i);
      with_b_[b_[i]].set(i);
    }
  }

  int neighbour(int cell, int dir) const {  // dir: 0=L 1=U 2=R 3=D
    int x = cell % w_, y = cell / w_;
    switch (dir) {
      case 0: x -= 1; break;
      case 1: y -= 1; break;
      case 2: x += 1; break;
      default: y += 1; break;
    }
    if (torus_) {
      x = (x + w_) % w_;
      y = (y + h_) % h_;
      return y * w_ + x;
    }
    if (x < 0 || x >= w_ || y < 0 || y >= h_) return -1;
    return y * w_ + x;
  }

  // Facing-edge colour of tile t toward dir, and the bitset family that a
  // neighbour tile must belong to.
  int my_edge(int t, int dir) const {
    switch (dir) {
      case 0: return l_[t];
      case 1: return u_[t];
      case 2: return r_[t];
      default: return b_[t];
    }
  }
  const Bitset& partner_set(int dir, int colour) const {
    switch (dir) {
      case 0: return with_r_[colour];  // my left meets their right
      case 1: return with_b_[colour];  // my up meets their bottom
      case 2: return with_l_[colour];
      default: return with_u_[colour];
    }
  }

  bool value_supported(int cell, int t) const {
    for (int dir = 0; dir < 4; ++dir) {
      int nb = neighbour(cell, dir);
      if (nb < 0) continue;
      if (nb == cell) {  // 1-wide torus: the tile faces itself
        if (!partner_set(dir, my_edge(t, dir)).test(t)) return false;
        continue;
      }
      if (assign_[nb] == kWildcard) continue;
      if (assign_[nb] >= 0) {
        if (!partner_set(dir, my_edge(t, dir)).test(assign_[nb])) return false;
        continue;
      }
      if (wildcard_ok_[nb]) continue;
      if (!domains_[nb].intersects(partner_set(dir, my_edge(t, dir)))) return false;
    }
    return true;
  }

  // Removes unsupported values from cell's domain; records removals.
  // Returns false when the domain empties for a cell that cannot be wild.
  bool revise(int cell, std::vector<int>& changed) {
    if (assign_[cell] == kWildcard) return true;
    bool removed_any = false;
    std::vector<int> doomed;
    domains_[cell].for_each([&](int t) {
      if (!value_supported(cell, t)) doomed.push_back(t);
    });
    for (int t : doomed) {
      domains_[cell].reset(t);
      trail_.push_back({cell, t});
      removed_any = true;
    }
    if (removed_any) changed.push_back(cell);
    if (!domains_[cell].any() && !wildcard_ok_[cell]) return false;
    if (assign_[cell] >= 0 && !domains_[cell].test(assign_[cell])) return false;
    return true;
  }

  bool propagate(std::vector<int> queue) {
    std::vector<uint8_t> queued(n_, 0);
    for (int c : queue) queued[c] = 1;
    while (!queue.empty()) {
      int cell = queue.back();
      queue.pop_back();
      queued[cell] = 0;
      for (int dir = 0; dir < 4; ++dir) {
        int nb = neighbour(cell, dir);
        if (nb < 0 || nb == cell) continue;
        std::vector<int> changed;
        if (!revise(nb, changed)) return false;
        for (int c : changed)
          if (!queued[c]) {
            queued[c] = 1;
            queue.push_back(c);
          }
      }
    }
    return true;
  }

  bool initial_ac() {
    std::vector<int> all(n_);
    for (int i = 0; i < n_; ++i) all[i] = i;
    std::vector<int> changed;
    for (int c : all)
      if (!revise(c, changed)) return false;
    return propagate(all);
  }

  bool dfs(int cell) {
    while (cell < n_ && assign_[cell] != kUnset) ++cell;
    if (cell == n_) return true;
    for (int t : order_) {
      if (!domains_[cell].test(t)) continue;
      size_t mark = trail_.size();
      assign_[cell] = t;
      std::vector<int> doomed;
      domains_[cell].for_each([&](int v) {
        if (v != t) doomed.push_back(v);
      });
      for (int v : doomed) {
        domains_[cell].reset(v);
        trail_.push_back({cell, v});
      }
      if (propagate({cell}) && dfs(cell + 1)) return true;
      undo_to(mark);
      assign_[cell] = kUnset;
    }
    if (wildcards_allowed_ && wildcard_ok_[cell] &&
        (!budget_ || wildcards_used_ < *budget_)) {
      ++wildcards_used_;
      assign_[cell] = kWildcard;
      // A wildcard meets every edge, so neighbours only gain support.
      if (dfs(cell + 1)) return true;
      assign_[cell] = kUnset;
      --wildcards_used_;
    }
    return false;
  }

  void undo_to(size_t mark) {
    while (trail_.size() > mark) {
      auto [cell, t] = trail_.back();
      trail_.pop_back();
      domains_[cell].set(t);
    }
  }

  const TileSet& ts_;
  int w_, h_, n_ = 0;
  bool torus_;
  std::vector<int> l_, u_, r_, b_;
  std::vector<Bitset> with_l_, with_u_, with_r_, with_b_;
  std::vector<Bitset> domains_;
  std::vector<int> assign_;
  std::vector<uint8_t> wildcard_ok_;
  std::vector<int> order_;
  std::vector<std::pair<int, int>> trail_;
  bool wildcards_allowed_ = false;
  std::optional<int> budget_;
  int wildcards_used_ = 0;
};

}  // namespace

std::optional<Tiling> solve_rect(const SolveRequest& req) {
  if (!req.tileset) throw std::invalid_argument("solve_rect: no tileset");
  if (req.width < 1 || req.height < 1)
    throw std::invalid_argument("solve_rect: empty region");
  Search s(*req.tileset, req.width, req.height, false);
  if (req.wildcard_allowed) s.allow_wildcards(req.wildcard_budget);
  s.set_tie_break(req.tie_break);
  for (const Pin& p : req.pins) {
    if (p.cell.x < req.origin.x || p.cell.x >= req.origin.x + req.width ||
        p.cell.y < req.origin.y || p.cell.y >= req.origin.y + req.height)
      throw std::invalid_argument("pin outside region");
    s.pin((p.cell.y - req.origin.y) * req.width + (p.cell.x - req.origin.x), p.tile);
  }
  auto flat = s.run();
  if (!flat) return std::nullopt;
  Tiling out(req.origin, req.width, req.height);
  for (size_t i = 0; i < flat->size(); ++i)
    if ((*flat)[i] >= 0) out.cells[i] = (*flat)[i];
  return out;
}

bool block_tileable(const TileSet& ts, int n) {
  if (n < 1) throw std::invalid_argument("block_tileable: n must be >= 1");
  SolveRequest req;
  req.tileset = &ts;
  req.width = n;
  req.height = n;
  return solve_rect(req).has_value();
}

std::optional<TorusTiling> solve_torus(const TileSet& ts, int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("solve_torus: p,q must be >= 1");
  Search s(ts, p, q, true);
  auto flat = s.run();
  if (!flat) return std::nullopt;
  TorusTiling out;
  out.p = p;
  out.q = q;
  out.cells = *flat;
  return out;
}

Tiling unfold(const TorusTiling& t, int a, int b) {
  Tiling out({0, 0}, t.p * a, t.q * b);
  for (int y = 0; y < t.q * b; ++y)
    for (int x = 0; x < t.p * a; ++x)
      out.at({x, y}) = t.at(x % t.p, y % t.q);
  return out;
}

PeriodSearch find_period(const TileSet& ts, int max_p, int max_q) {
  if (max_p < 1 || max_q < 1) throw std::invalid_argument("find_period: bounds must be >= 1");
  PeriodSearch res;
  res.max_p = max_p;
  res.max_q = max_q;
  std::vector<std::pair<int, int>> dims;
  for (int p = 1; p <= max_p; ++p)
    for (int q = 1; q <= max_q; ++q) dims.push_back({p, q});
  std::stable_sort(dims.begin(), dims.end(), [](auto a, auto b) {
    if (a.first * a.second != b.first * b.second)
      return a.first * a.second < b.first * b.second;
    return a.first < b.first;
  });
  for (auto [p, q] : dims) {
    if (solve_torus(ts, p, q)) {
      res.found = true;
      res.p = p;
      res.q = q;
      return res;
    }
  }
  return res;
}

int max_tileable_height(const TileSet& ts, Cell origin, int width,
                        const std::vector<Pin>& first_row_pins, int cap) {
  if (cap < 1) throw std::invalid_argument("max_tileable_height: cap must be >= 1");
  std::map<int, std::optional<int>> row0;
  bool any_wild = false;
  for (const Pin& p : first_row_pins) {
    if (p.cell.y != origin.y)
      throw std::invalid_argument("max_tileable_height: pins must cover row 0 only");
    if (!p.tile) any_wild = true;
    auto [it, fresh] = row0.emplace(p.cell.x, p.tile);
    if (!fresh && it->second != p.tile)
      throw std::invalid_argument("max_tileable_height: conflicting pins on one cell");
  }
  for (auto it = row0.begin(); it != row0.end(); ++it) {
    auto next = std::next(it);
    if (next != row0.end() && next->first == it->first + 1 && it->second && next->second &&
        !matches(ts[*it->second], ts[*next->second], Direction::Right))
      throw std::invalid_argument("max_tileable_height: adjacent pins do not match");
  }
  int best = 0;
  for (int h = 1; h <= cap; ++h) {
    SolveRequest req;
    req.tileset = &ts;
    req.width = width;
    req.height = h;
    req.origin = origin;
    req.pins = first_row_pins;
    if (any_wild) {  // pinned wildcards only; the solver itself places none
      req.wildcard_allowed = true;
      req.wildcard_budget = 0;
    }
    if (!solve_rect(req)) break;
    best = h;
  }
  return best;
}

std::vector<Tiling> enumerate_tilings(const TileSet& ts, int w, int h, int limit) {
  if (w < 1 || h < 1) throw std::invalid_argument("enumerate_tilings: empty region");
  if (w * h > 12 || ts.size() > 8)
    throw std::invalid_argument("enumerate_tilings: oracle too large (need w*h <= 12, |ts| <= 8)");
  // Deliberately naive and independent of the production search: plain
  // nested candidate loops with direct colour comparisons.
  std::vector<Tiling> out;
  std::vector<int> cells(static_cast<size_t>(w) * h, -1);
  auto rec = [&](auto&& self, int idx) -> void {
    if (limit >= 0 && static_cast<int>(out.size()) >= limit) return;
    if (idx == w * h) {
      Tiling t({0, 0}, w, h);
      for (size_t i = 0; i < cells.size(); ++i) t.cells[i] = cells[i];
      out.push_back(t);
      return;
    }
    int x = idx % w, y = idx / w;
    for (int c = 0; c < ts.size(); ++c) {
      if (x > 0 && !(ts[cells[idx - 1]].right == ts[c].left)) continue;
      if (y > 0 && !(ts[cells[idx - w]].bottom == ts[c].up)) continue;
      cells[idx] = c;
      self(self, idx + 1);
      cells[idx] = -1;
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace wang
