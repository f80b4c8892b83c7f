// wangforge: build tile sets from machines and trees, solve finite tiling
// instances, search for periods, and render the results.

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "wang/builtins.hpp"
#include "wang/compile_eca.hpp"
#include "wang/compile_tm.hpp"
#include "wang/compile_tree.hpp"
#include "wang/json_io.hpp"
#include "wang/render.hpp"
#include "wang/solver.hpp"

namespace {

using namespace wang;

constexpr int kExitDomain = 1;  // well-formed request, negative answer
constexpr int kExitUsage = 2;

int solver_workers() {
  // The solver contract is a deterministic first solution, so it always
  // searches sequentially; the variable is accepted and clamped.
  const char* env = std::getenv("WANGFORGE_THREADS");
  if (!env) return 1;
  int n = std::atoi(env);
  return n < 1 ? 1 : n;
}

TileSet load_tileset(const std::string& ref) {
  for (const auto& n : builtin_names())
    if (ref == n) return builtin(ref);
  return tileset_from_json(parse_json(read_file(ref)));
}

Tiling load_tiling(const std::string& path) {
  return tiling_from_json(parse_json(read_file(path)));
}

std::vector<Pin> parse_pins(const std::vector<std::string>& specs) {
  std::vector<Pin> pins;
  for (const auto& s : specs) {  // x,y=idx
    auto eq = s.find('=');
    auto comma = s.find(',');
    if (eq == std::string::npos || comma == std::string::npos || comma > eq)
      throw CLI::ValidationError("--pin expects x,y=idx");
    Pin p;
    p.cell.x = std::stoi(s.substr(0, comma));
    p.cell.y = std::stoi(s.substr(comma + 1, eq - comma - 1));
    p.tile = std::stoi(s.substr(eq + 1));
    pins.push_back(p);
  }
  return pins;
}

void emit(const std::string& text) { std::cout << text; }

RenderOptions::Format parse_format(const std::string& f) {
  if (f == "svg") return RenderOptions::Format::Svg;
  if (f == "ascii") return RenderOptions::Format::Ascii;
  if (f == "ppm") return RenderOptions::Format::Ppm;
  throw CLI::ValidationError("--format must be svg, ascii or ppm");
}

TreeKind parse_kind(const std::string& k) {
  if (k == "ait") return TreeKind::Ait;
  if (k == "pit") return TreeKind::Pit;
  if (k == "spokes") return TreeKind::Spokes;
  throw CLI::ValidationError("--kind must be ait, pit or spokes");
}

FiniteTree tree_from_options(const std::string& tree_path, const std::string& pred,
                             int depth, int branching, uint32_t seed, double density) {
  if (!tree_path.empty()) return tree_from_json(parse_json(read_file(tree_path)));
  TreePredicate p;
  if (pred == "all") {
    p.kind = TreePredicate::Kind::All;
  } else if (pred.rfind("single-path:", 0) == 0) {
    p.kind = TreePredicate::Kind::SinglePath;
    p.path = digits_to_seq(pred.substr(12));
  } else if (pred.rfind("comb:", 0) == 0) {
    p.kind = TreePredicate::Kind::Comb;
    p.comb_teeth = std::stoi(pred.substr(5));
  } else if (pred == "random") {
    p.kind = TreePredicate::Kind::Random;
    p.seed = seed;
    p.density = density;
  } else {
    throw CLI::ValidationError("--pred must be all, single-path:<digits>, comb:<k> or random");
  }
  return normalize(from_predicate(p, depth, branching)).tree;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wang tiling and machine-to-tileset workbench"};
  app.require_subcommand(1);
  (void)solver_workers();

  std::string out_path;
  app.add_option("-o,--out", out_path, "write primary output to a file instead of stdout");

  // ---- builtin ----
  auto* cmd_builtin = app.add_subcommand("builtin", "emit a built-in tile set");
  std::string b_name;
  cmd_builtin->add_option("--name", b_name, "culik13, jeandel-rao11 or binary16")->required();

  // ---- solve ----
  auto* cmd_solve = app.add_subcommand("solve", "tile a rectangle");
  std::string s_tileset;
  int s_w = 1, s_h = 1;
  std::vector<int> s_origin{0, 0};
  std::vector<std::string> s_pins;
  bool s_wild = false, s_json = false;
  int s_budget = -1;
  cmd_solve->add_option("--tileset", s_tileset, "path or builtin name")->required();
  cmd_solve->add_option("--width", s_w)->required();
  cmd_solve->add_option("--height", s_h)->required();
  cmd_solve->add_option("--origin", s_origin)->expected(2);
  cmd_solve->add_option("--pin", s_pins, "x,y=idx (repeatable)");
  cmd_solve->add_flag("--wildcard", s_wild, "allow wildcard cells");
  cmd_solve->add_option("--budget", s_budget, "max wildcards");
  cmd_solve->add_flag("--json", s_json);

  // ---- torus ----
  auto* cmd_torus = app.add_subcommand("torus", "tile a torus");
  std::string t_tileset;
  int t_p = 1, t_q = 1;
  cmd_torus->add_option("--tileset", t_tileset)->required();
  cmd_torus->add_option("--p", t_p)->required();
  cmd_torus->add_option("--q", t_q)->required();

  // ---- period ----
  auto* cmd_period = app.add_subcommand("period", "bounded search for torus periods");
  std::string p_tileset;
  std::vector<int> p_max{4};
  bool p_json = false;
  cmd_period->add_option("--tileset", p_tileset)->required();
  cmd_period->add_option("--max", p_max, "bound (one value or p q)")->expected(1, 2);
  cmd_period->add_flag("--json", p_json);

  // ---- compile ----
  auto* cmd_compile = app.add_subcommand("compile", "machine/tree to tile set");
  cmd_compile->require_subcommand(1);
  auto* cc_tm = cmd_compile->add_subcommand("tm", "Turing machine to tiles");
  std::string ctm_machine, ctm_input;
  bool ctm_reachable = false;
  cc_tm->add_option("--machine", ctm_machine, "tm spec json")->required();
  cc_tm->add_option("--input", ctm_input, "input symbols, comma separated or one word");
  cc_tm->add_flag("--reachable-only", ctm_reachable);

  auto* cc_tree = cmd_compile->add_subcommand("tree", "finite tree to tiles");
  std::string ctr_tree, ctr_kind = "ait", ctr_pred;
  int ctr_depth = 3, ctr_branching = 2;
  uint32_t ctr_seed = 0;
  double ctr_density = 0.5;
  cc_tree->add_option("--tree", ctr_tree, "tree json file");
  cc_tree->add_option("--pred", ctr_pred, "fixture: all | single-path:<digits> | comb:<k> | random");
  cc_tree->add_option("--kind", ctr_kind, "ait | pit | spokes");
  cc_tree->add_option("--depth", ctr_depth);
  cc_tree->add_option("--branching", ctr_branching);
  cc_tree->add_option("--seed", ctr_seed, "fixture generation only");
  cc_tree->add_option("--density", ctr_density);

  auto* cc_eca = cmd_compile->add_subcommand("eca", "ECA rule to tiles");
  int ceca_rule = 30;
  std::string ceca_geom = "wang";
  cc_eca->add_option("--rule", ceca_rule)->required();
  cc_eca->add_option("--geometry", ceca_geom, "wang (18 tiles) | hex (15 tiles)");

  // ---- tm-run ----
  auto* cmd_tmrun = app.add_subcommand("tm-run", "simulate a Turing machine");
  std::string tr_machine, tr_input;
  int tr_max = 100;
  cmd_tmrun->add_option("--machine", tr_machine)->required();
  cmd_tmrun->add_option("--input", tr_input);
  cmd_tmrun->add_option("--max-steps", tr_max);

  // ---- eca ----
  auto* cmd_eca = app.add_subcommand("eca", "elementary cellular automata");
  cmd_eca->require_subcommand(1);
  auto* eca_run_cmd = cmd_eca->add_subcommand("run", "iterate a rule");
  int er_rule = 30, er_rows = 8;
  std::string er_input;
  bool er_wrap = false;
  eca_run_cmd->add_option("--rule", er_rule)->required();
  eca_run_cmd->add_option("--input", er_input, "bit string")->required();
  eca_run_cmd->add_option("--rows", er_rows);
  eca_run_cmd->add_flag("--wrap", er_wrap);

  auto* eca_hex_cmd = cmd_eca->add_subcommand("hex", "tile a rule on the hex lattice");
  int eh_rule = 30, eh_rows = 8;
  std::string eh_input, eh_render;
  eca_hex_cmd->add_option("--rule", eh_rule)->required();
  eca_hex_cmd->add_option("--input", eh_input)->required();
  eca_hex_cmd->add_option("--rows", eh_rows);
  eca_hex_cmd->add_option("--render", eh_render, "svg | ascii");

  // ---- tag ----
  auto* cmd_tag = app.add_subcommand("tag", "cyclic tag systems");
  cmd_tag->require_subcommand(1);
  auto* tag_run_cmd = cmd_tag->add_subcommand("run", "run a cyclic tag system");
  std::string tg_prods, tg_data;
  int tg_steps = 16;
  tag_run_cmd->add_option("--productions", tg_prods, "comma separated binary strings")->required();
  tag_run_cmd->add_option("--data", tg_data)->required();
  tag_run_cmd->add_option("--steps", tg_steps);

  // ---- recover-path ----
  auto* cmd_recover = app.add_subcommand("recover-path", "read a tree path out of a tiling");
  std::string rp_compiled, rp_tiling;
  std::vector<int> rp_start;
  cmd_recover->add_option("--compiled", rp_compiled, "compiled tree json")->required();
  cmd_recover->add_option("--tiling", rp_tiling, "tiling json")->required();
  cmd_recover->add_option("--start", rp_start, "x y")->expected(2);

  // ---- render ----
  auto* cmd_render = app.add_subcommand("render", "render a tiling or tile set");
  std::string rd_tileset, rd_tiling, rd_format = "svg";
  int rd_cell = 32;
  bool rd_labels = false;
  cmd_render->add_option("--tileset", rd_tileset, "path or builtin name")->required();
  cmd_render->add_option("--tiling", rd_tiling, "tiling json (omit for the tile catalogue)");
  cmd_render->add_option("--format", rd_format, "svg | ascii | ppm");
  cmd_render->add_option("--cell-size", rd_cell);
  cmd_render->add_flag("--labels", rd_labels);

  // Let global options like -o appear after the subcommand.
  auto enable_fallthrough = [](CLI::App* a, auto&& self) -> void {
    for (CLI::App* sub : a->get_subcommands(nullptr)) {
      sub->fallthrough();
      self(sub, self);
    }
  };
  enable_fallthrough(&app, enable_fallthrough);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    std::string output;
    int exit_code = 0;

    if (*cmd_builtin) {
      output = dump_json(tileset_to_json(builtin(b_name)));
    } else if (*cmd_solve) {
      TileSet ts = load_tileset(s_tileset);
      SolveRequest req;
      req.tileset = &ts;
      req.width = s_w;
      req.height = s_h;
      req.origin = {s_origin[0], s_origin[1]};
      req.pins = parse_pins(s_pins);
      req.wildcard_allowed = s_wild;
      if (s_budget >= 0) req.wildcard_budget = s_budget;
      auto sol = solve_rect(req);
      if (!sol) {
        std::cerr << "unsolvable\n";
        return kExitDomain;
      }
      output = dump_json(tiling_to_json(*sol));
    } else if (*cmd_torus) {
      TileSet ts = load_tileset(t_tileset);
      auto sol = solve_torus(ts, t_p, t_q);
      if (!sol) {
        std::cerr << "no torus tiling\n";
        return kExitDomain;
      }
      output = dump_json(torus_to_json(*sol));
    } else if (*cmd_period) {
      TileSet ts = load_tileset(p_tileset);
      int mp = p_max[0], mq = p_max.size() > 1 ? p_max[1] : p_max[0];
      PeriodSearch res = find_period(ts, mp, mq);
      if (p_json) {
        Meta j{{"found", res.found}, {"max_p", res.max_p}, {"max_q", res.max_q}};
        if (res.found) {
          j["p"] = res.p;
          j["q"] = res.q;
        }
        output = dump_json(j);
      } else {
        output = res.found ? "(" + std::to_string(res.p) + "," + std::to_string(res.q) + ")\n"
                           : "none-up-to-bound\n";
      }
      if (!res.found) exit_code = kExitDomain;
    } else if (*cc_tm) {
      TuringMachine tm = tm_from_json(parse_json(read_file(ctm_machine)));
      std::vector<int> input;
      for (char ch : ctm_input)
        if (ch != ',') input.push_back(tm.symbol_id(std::string(1, ch)));
      output = dump_json(compiled_tm_to_json(compile_tm(tm, input, ctm_reachable)));
    } else if (*cc_tree) {
      FiniteTree tree = tree_from_options(ctr_tree, ctr_pred.empty() ? "all" : ctr_pred,
                                          ctr_depth, ctr_branching, ctr_seed, ctr_density);
      output = dump_json(compiled_tree_to_json(compile_tree(tree, parse_kind(ctr_kind))));
    } else if (*cc_eca) {
      if (ceca_geom == "wang")
        output = dump_json(compiled_wang_eca_to_json(compile_eca_wang(EcaRule{ceca_rule})));
      else if (ceca_geom == "hex")
        output = dump_json(hex_tileset_to_json(compile_eca_hex(EcaRule{ceca_rule})));
      else
        throw CLI::ValidationError("--geometry must be wang or hex");
    } else if (*cmd_tmrun) {
      TuringMachine tm = tm_from_json(parse_json(read_file(tr_machine)));
      std::vector<int> input;
      for (char ch : tr_input)
        if (ch != ',') input.push_back(tm.symbol_id(std::string(1, ch)));
      TmTrace trace = tm_run(tm, input, tr_max);
      Meta steps = Meta::array();
      for (const auto& c : trace.configs) {
        Meta tape = Meta::object();
        for (auto [pos, s] : c.tape)
          tape[std::to_string(pos)] = tm.symbols[static_cast<size_t>(s)];
        steps.push_back(Meta{{"step", c.step},
                             {"head", c.head},
                             {"state", c.state == TuringMachine::HALT
                                           ? "HALT"
                                           : tm.states[static_cast<size_t>(c.state)]},
                             {"tape", tape}});
      }
      output = dump_json(Meta{{"halted", trace.halted}, {"stuck", trace.stuck}, {"trace", steps}});
    } else if (*eca_run_cmd) {
      auto rows = eca_run(EcaRule{er_rule}, parse_bits(er_input), er_rows,
                          er_wrap ? Boundary::Wrap : Boundary::ZeroPad);
      for (const auto& r : rows) output += format_bits(r) + "\n";
    } else if (*eca_hex_cmd) {
      HexTileSet ts = compile_eca_hex(EcaRule{eh_rule});
      HexTiling t = tile_eca(ts, parse_bits(eh_input), eh_rows);
      if (eh_render.empty()) {
        output = dump_json(hex_tiling_to_json(t));
      } else {
        RenderOptions opts;
        opts.format = parse_format(eh_render);
        output = render(ts, t, opts);
        if (opts.format == RenderOptions::Format::Svg)
          for (const auto& r : decode_eca_rows(ts, t))
            output += "<!-- " + format_bits(r) + " -->\n";
      }
    } else if (*tag_run_cmd) {
      TagSystem sys;
      std::string cur;
      for (char ch : tg_prods + ",") {
        if (ch == ',') {
          sys.productions.push_back(cur);
          cur.clear();
        } else {
          cur += ch;
        }
      }
      TagTrace trace = tag_run(sys, tg_data, tg_steps);
      for (const auto& st : trace.states)
        output += std::to_string(st.i) + " " + (st.d.empty() ? "(empty)" : st.d) + "\n";
      if (trace.halted) output += "halted\n";
    } else if (*cmd_recover) {
      CompiledTree ct = compiled_tree_from_json(parse_json(read_file(rp_compiled)));
      Tiling t = load_tiling(rp_tiling);
      std::optional<Cell> start;
      if (!rp_start.empty()) start = Cell{rp_start[0], rp_start[1]};
      output = seq_to_digits(recover_path(ct, t, start)) + "\n";
    } else if (*cmd_render) {
      RenderOptions opts;
      opts.format = parse_format(rd_format);
      opts.cell_size = rd_cell;
      opts.show_labels = rd_labels;
      TileSet ts = load_tileset(rd_tileset);
      output = rd_tiling.empty() ? render(ts, opts) : render(ts, load_tiling(rd_tiling), opts);
    }

    if (!out_path.empty())
      write_file(out_path, output);
    else
      emit(output);
    return exit_code;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}
