#include "wang/render.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace wang {

namespace {

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hsl_to_hex(double h, double s, double l) {
  auto f = [&](double n) {
    double k = std::fmod(n + h / 30.0, 12.0);
    double a = s * std::min(l, 1 - l);
    return l - a * std::max(-1.0, std::min({k - 3, 9 - k, 1.0}));
  };
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", static_cast<int>(f(0) * 255 + 0.5),
                static_cast<int>(f(8) * 255 + 0.5), static_cast<int>(f(4) * 255 + 0.5));
  return buf;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  return buf;
}

struct Svg {
  std::string body;
  void poly(const std::vector<std::pair<double, double>>& pts, const std::string& fill) {
    body += "<polygon points=\"";
    for (size_t i = 0; i < pts.size(); ++i) {
      if (i) body += ' ';
      body += fmt(pts[i].first) + "," + fmt(pts[i].second);
    }
    body += "\" fill=\"" + fill + "\" stroke=\"#333\" stroke-width=\"0.5\"/>\n";
  }
  void label(double x, double y, const std::string& text, int px) {
    body += "<text x=\"" + fmt(x) + "\" y=\"" + fmt(y) + "\" font-size=\"" +
            std::to_string(px) +
            "\" text-anchor=\"middle\" dominant-baseline=\"middle\" "
            "font-family=\"monospace\">" +
            text + "</text>\n";
  }
  std::string finish(double w, double h) const {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(w) + "\" height=\"" +
           fmt(h) + "\" viewBox=\"0 0 " + fmt(w) + " " + fmt(h) + "\">\n" + body + "</svg>\n";
  }
};

std::string short_label(const Color& c) {
  std::string e = c.encode();
  auto pos = e.find(':');
  return pos == std::string::npos ? e : e.substr(pos + 1);
}

class Palette {
 public:
  explicit Palette(const RenderOptions& opts) : opts_(opts) {}
  std::string operator()(const Color& c) const {
    std::string key = c.encode();
    auto it = opts_.palette.find(key);
    if (it != opts_.palette.end()) return it->second;
    return auto_color(key);
  }

 private:
  const RenderOptions& opts_;
};

void draw_square_tile(Svg& svg, const Palette& pal, const WangTile& t, double x, double y,
                      double s, bool labels) {
  double cx = x + s / 2, cy = y + s / 2;
  svg.poly({{x, y}, {cx, cy}, {x, y + s}}, pal(t.left));
  svg.poly({{x, y}, {x + s, y}, {cx, cy}}, pal(t.up));
  svg.poly({{x + s, y}, {x + s, y + s}, {cx, cy}}, pal(t.right));
  svg.poly({{x, y + s}, {cx, cy}, {x + s, y + s}}, pal(t.bottom));
  if (labels) {
    int px = static_cast<int>(s / 5);
    svg.label(x + s * 0.16, cy, short_label(t.left), px);
    svg.label(cx, y + s * 0.16, short_label(t.up), px);
    svg.label(x + s * 0.84, cy, short_label(t.right), px);
    svg.label(cx, y + s * 0.84, short_label(t.bottom), px);
  }
}

char index_char(int idx) {
  if (idx < 10) return static_cast<char>('0' + idx);
  if (idx < 36) return static_cast<char>('a' + idx - 10);
  return '?';
}

std::string ascii_tiling(const Tiling& t) {
  std::string out;
  for (int y = 0; y < t.height; ++y) {
    for (int x = 0; x < t.width; ++x) {
      const auto& c = t.cells[static_cast<size_t>(y) * t.width + x];
      out += c ? index_char(*c) : '.';
    }
    out += '\n';
  }
  return out;
}

std::string ppm_tiling(const TileSet& ts, const Tiling& t, const RenderOptions& opts) {
  Palette pal(opts);
  int s = opts.cell_size;
  int w = t.width * s, h = t.height * s;
  auto rgb = [&](const std::string& hex) {
    return std::array<unsigned char, 3>{
        static_cast<unsigned char>(std::stoi(hex.substr(1, 2), nullptr, 16)),
        static_cast<unsigned char>(std::stoi(hex.substr(3, 2), nullptr, 16)),
        static_cast<unsigned char>(std::stoi(hex.substr(5, 2), nullptr, 16))};
  };
  std::string out = "P6\n" + std::to_string(w) + " " + std::to_string(h) + "\n255\n";
  out.reserve(out.size() + static_cast<size_t>(w) * h * 3);
  for (int py = 0; py < h; ++py) {
    for (int px = 0; px < w; ++px) {
      const auto& cell = t.cells[static_cast<size_t>(py / s) * t.width + px / s];
      std::array<unsigned char, 3> c{220, 220, 220};
      if (cell) {
        const WangTile& tile = ts[*cell];
        double u = (px % s + 0.5) / s, v = (py % s + 0.5) / s;
        const Color* quad;
        if (v < u && v < 1 - u) quad = &tile.up;
        else if (v > u && v > 1 - u) quad = &tile.bottom;
        else if (u < 0.5) quad = &tile.left;
        else quad = &tile.right;
        c = rgb(pal(*quad));
      }
      out.append(reinterpret_cast<const char*>(c.data()), 3);
    }
  }
  return out;
}

}  // namespace

std::string auto_color(const std::string& label) {
  uint64_t h = fnv1a(label);
  double hue = static_cast<double>(h % 360);
  double sat = 0.45 + static_cast<double>((h >> 16) % 30) / 100.0;
  double light = 0.55 + static_cast<double>((h >> 32) % 25) / 100.0;
  return hsl_to_hex(hue, sat, light);
}

std::string render(const TileSet& ts, const Tiling& t, const RenderOptions& opts) {
  using F = RenderOptions::Format;
  if (opts.format == F::Ascii) return ascii_tiling(t);
  if (opts.format == F::Ppm) return ppm_tiling(ts, t, opts);
  Svg svg;
  Palette pal(opts);
  double s = opts.cell_size;
  for (int y = 0; y < t.height; ++y) {
    for (int x = 0; x < t.width; ++x) {
      const auto& cell = t.cells[static_cast<size_t>(y) * t.width + x];
      if (!cell) continue;
      draw_square_tile(svg, pal, ts[*cell], x * s, y * s, s, opts.show_labels);
    }
  }
  return svg.finish(t.width * s, t.height * s);
}

std::string render(const TileSet& ts, const RenderOptions& opts) {
  if (opts.format != RenderOptions::Format::Svg)
    throw std::invalid_argument("tile catalogues render as svg only");
  Svg svg;
  Palette pal(opts);
  double s = opts.cell_size, gap = opts.cell_size / 4.0;
  int per_row = 8;
  int rows = ts.size() == 0 ? 0 : (ts.size() + per_row - 1) / per_row;
  for (int i = 0; i < ts.size(); ++i) {
    double x = (i % per_row) * (s + gap) + gap / 2;
    double y = (i / per_row) * (s + gap) + gap / 2;
    draw_square_tile(svg, pal, ts[i], x, y, s, opts.show_labels);
  }
  double w = ts.size() == 0 ? s : per_row * (s + gap);
  return svg.finish(w, rows == 0 ? s : rows * (s + gap));
}

std::string render(const HexTileSet& ts, const HexTiling& t, const RenderOptions& opts) {
  using F = RenderOptions::Format;
  if (opts.format == F::Ascii) {  // one character per hexagon bottom, per row
    std::string out;
    for (const auto& row : decode_eca_rows(ts, t)) out += format_bits(row) + "\n";
    return out;
  }
  if (opts.format != F::Svg)
    throw std::invalid_argument("hex tilings render as svg or ascii only");

  Svg svg;
  Palette pal(opts);
  double R = opts.cell_size / 2.0;
  double ex = 2 * R;            // horizontal pitch
  double ey = 1.7320508 * R;    // vertical pitch
  double x0 = R, y0 = ey;       // leave room for the half-lozenge boundary row
  int px = static_cast<int>(R / 2.5);

  auto hex_center = [&](int i, int j) {
    return std::pair<double, double>{x0 + ex * i, y0 + ey * j};
  };
  auto vtx = [&](double cx, double cy, int angle_deg) {
    double a = angle_deg * 3.14159265358979 / 180.0;
    return std::pair<double, double>{cx + R * std::cos(a), cy - R * std::sin(a)};
  };

  for (int j = 0; j < static_cast<int>(t.hex_rows.size()); ++j) {
    for (int i = 0; i < t.width; ++i) {
      const HexTile& h = ts.hexes[static_cast<size_t>(t.hex_rows[static_cast<size_t>(j)][static_cast<size_t>(i)])];
      auto [cx, cy] = hex_center(i, j);
      auto v0 = vtx(cx, cy, 0), v60 = vtx(cx, cy, 60), v120 = vtx(cx, cy, 120),
           v180 = vtx(cx, cy, 180), v240 = vtx(cx, cy, 240), v300 = vtx(cx, cy, 300);
      svg.poly({{cx, cy}, v180, v120}, pal(h.ul));
      svg.poly({{cx, cy}, v120, v60}, pal(h.top));
      svg.poly({{cx, cy}, v60, v0}, pal(h.ur));
      svg.poly({{cx, cy}, v0, v300, v240, v180}, pal(h.bottom));
      if (opts.show_labels) {
        svg.label((cx + v120.first) / 2, (cy + v120.second) / 2, short_label(h.ul), px);
        svg.label(cx, cy - R * 0.62, short_label(h.top), px);
        svg.label((cx + v60.first) / 2, (cy + v60.second) / 2, short_label(h.ur), px);
        svg.label(cx, cy + R * 0.5, short_label(h.bottom), px);
      }
    }
    if (j >= static_cast<int>(t.loz_rows.size())) continue;
    for (int i = 0; i + 1 < t.width; ++i) {
      const LozengeTile& lz =
          ts.lozenges[static_cast<size_t>(t.loz_rows[static_cast<size_t>(j)][static_cast<size_t>(i)])];
      auto [cx0, cy0] = hex_center(i, j);
      double cx = cx0 + ex / 2, cy = cy0 + ey / 2;  // rhombus centre between four hexes
      std::pair<double, double> top{cx, cy - ey / 2}, right{cx + R / 2, cy},
          bottom{cx, cy + ey / 2}, left{cx - R / 2, cy};
      svg.poly({{cx, cy}, left, top}, pal(lz.nw));
      svg.poly({{cx, cy}, top, right}, pal(lz.ne));
      svg.poly({{cx, cy}, right, bottom}, pal(lz.se));
      svg.poly({{cx, cy}, bottom, left}, pal(lz.sw));
    }
  }
  // Half-lozenge boundary fillers above the first row.
  for (int i = 0; i < t.half_lozenges; ++i) {
    auto [cx0, cy0] = hex_center(i - 1, 0);
    double cx = cx0 + ex / 2, cy = cy0 - ey / 2;
    std::pair<double, double> right{cx + R / 2, cy}, bottom{cx, cy + ey / 2},
        left{cx - R / 2, cy};
    svg.poly({{cx, cy}, right, bottom}, pal(ts.half_lozenge.se));
    svg.poly({{cx, cy}, bottom, left}, pal(ts.half_lozenge.sw));
  }
  double w = ex * t.width + 2 * R;
  double h = ey * (static_cast<double>(t.hex_rows.size()) + 1.5);
  return svg.finish(w, h);
}

}  // namespace wang
