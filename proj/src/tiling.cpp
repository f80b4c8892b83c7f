#include "wang/tiling.hpp"

#include <stdexcept>

namespace wang {

ValidationReport is_valid_tiling(const TileSet& ts, const Tiling& t) {
  ValidationReport rep;
  rep.total = true;
  for (const auto& c : t.cells) {
    if (!c) {
      rep.total = false;
    } else if (*c < 0 || *c >= ts.size()) {
      throw std::out_of_range("tiling references tile " + std::to_string(*c) +
                              " outside set of " + std::to_string(ts.size()));
    }
  }
  for (int y = t.origin.y; y < t.origin.y + t.height; ++y) {
    for (int x = t.origin.x; x < t.origin.x + t.width; ++x) {
      auto here = t.at({x, y});
      if (!here) continue;
      if (x + 1 < t.origin.x + t.width) {
        auto right = t.at({x + 1, y});
        if (right && !matches(ts[*here], ts[*right], Direction::Right)) {
          rep.ok = false;
          rep.violations.push_back({{x, y}, Direction::Right});
        }
      }
      if (y + 1 < t.origin.y + t.height) {
        auto below = t.at({x, y + 1});
        if (below && !matches(ts[*here], ts[*below], Direction::Down)) {
          rep.ok = false;
          rep.violations.push_back({{x, y}, Direction::Down});
        }
      }
    }
  }
  return rep;
}

}  // namespace wang
