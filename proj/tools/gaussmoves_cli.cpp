// Command-line front end: parsing, validation, rewriting, trace replay,
// random generation, statistics and static rendering.
//
// Exit codes: 0 success, 1 domain error (invalid code, illegal step,
// unequal diagrams), 2 usage error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "gauss/diagram.hpp"
#include "gauss/invariants.hpp"
#include "gauss/moves.hpp"
#include "gauss/render.hpp"
#include "gauss/rewrite.hpp"

using namespace gauss;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct Ctx {
  std::string table_path;
  std::string in_path;  // diagram read from file instead of argv
  bool raw = false;

  const VariantTable& table() const {
    if (!table_path.empty()) {
      loaded = VariantTable::load_file(table_path);
      return loaded;
    }
    return VariantTable::builtin();
  }
  GaussDiagram diagram(const std::string& arg) const {
    if (!in_path.empty()) return parse_gauss_code(read_file(in_path));
    return parse_gauss_code(arg);
  }
  std::string show(const GaussDiagram& d) const {
    return raw ? serialize(d) : canonical_form(d);
  }

 private:
  mutable VariantTable loaded;
};

void emit_trace(const Trace& t, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << format_trace(t);
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open " + out_path);
    out << format_trace(t);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gauss diagram rewriting: Reidemeister and forbidden moves"};
  app.require_subcommand(1);
  Ctx ctx;
  app.add_option("--table", ctx.table_path, "variant table JSON (default: built in)");
  app.add_flag("--raw", ctx.raw, "print diagrams as parsed, not canonicalized");

  std::string code, code_b, trace_path, out_path, step_text, kind = "all";
  std::string format = "ascii";
  int chords = 4, count = 1;
  std::uint64_t seed = 0;
  bool strict = false;

  auto* parse_cmd = app.add_subcommand("parse", "parse a Gauss code and reprint it");
  parse_cmd->add_option("code", code);
  parse_cmd->add_option("--in", ctx.in_path, "read the code from a file");

  auto* validate_cmd = app.add_subcommand("validate", "check diagram invariants");
  validate_cmd->add_option("code", code);
  validate_cmd->add_option("--in", ctx.in_path);

  auto* canon_cmd = app.add_subcommand("canon", "print the canonical form");
  canon_cmd->add_option("code", code);
  canon_cmd->add_option("--in", ctx.in_path);

  auto* equal_cmd = app.add_subcommand("equal", "compare two diagrams up to rotation");
  equal_cmd->add_option("a", code)->required();
  equal_cmd->add_option("b", code_b)->required();

  auto* random_cmd = app.add_subcommand("random", "generate random diagrams");
  random_cmd->add_option("--chords", chords);
  random_cmd->add_option("--seed", seed);
  random_cmd->add_option("--count", count);

  auto* moves_cmd = app.add_subcommand("moves", "list legal move instances");
  moves_cmd->add_option("code", code);
  moves_cmd->add_option("--in", ctx.in_path);
  moves_cmd->add_option("--kind", kind, "R1I R1R R2I R2R R3 FH FT or all");

  auto* apply_cmd = app.add_subcommand("apply", "apply one move step");
  apply_cmd->add_option("code", code);
  apply_cmd->add_option("step", step_text)->required();
  apply_cmd->add_option("--in", ctx.in_path);

  auto* unknot_cmd = app.add_subcommand("unknot", "emit a trace to the empty diagram");
  unknot_cmd->add_option("code", code);
  unknot_cmd->add_option("--in", ctx.in_path);
  unknot_cmd->add_option("--out", out_path, "write the trace to a file");

  auto* transform_cmd = app.add_subcommand("transform", "emit a trace from a to b");
  transform_cmd->add_option("a", code)->required();
  transform_cmd->add_option("b", code_b)->required();
  transform_cmd->add_option("--out", out_path);

  auto* replay_cmd = app.add_subcommand("replay", "replay a trace file on a diagram");
  replay_cmd->add_option("code", code);
  replay_cmd->add_option("trace", trace_path)->required();
  replay_cmd->add_option("--in", ctx.in_path);
  replay_cmd->add_flag("--strict", strict, "validate every intermediate state");

  auto* stats_cmd = app.add_subcommand("stats", "summarize a trace file");
  stats_cmd->add_option("trace", trace_path)->required();
  stats_cmd->add_option("code", code, "start diagram, enables peak-chord count");
  stats_cmd->add_option("--in", ctx.in_path);

  auto* render_cmd = app.add_subcommand("render", "draw the diagram");
  render_cmd->add_option("code", code);
  render_cmd->add_option("--in", ctx.in_path);
  render_cmd->add_option("--format", format)->check(CLI::IsMember({"ascii", "dot"}));

  // let --table / --raw appear after the subcommand too
  for (auto* sc : app.get_subcommands([](const CLI::App*) { return true; }))
    sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // --help exits 0, genuine usage errors exit 2
  }

  try {
    if (*parse_cmd) {
      std::cout << ctx.show(ctx.diagram(code)) << "\n";
    } else if (*validate_cmd) {
      auto v = validate(ctx.diagram(code));
      for (const auto& viol : v) std::cout << viol.message << "\n";
      if (!v.empty()) return 1;
      std::cout << "ok\n";
    } else if (*canon_cmd) {
      std::cout << canonical_form(ctx.diagram(code)) << "\n";
    } else if (*equal_cmd) {
      bool eq = diagrams_equal(parse_gauss_code(code), parse_gauss_code(code_b));
      std::cout << (eq ? "equal" : "different") << "\n";
      return eq ? 0 : 1;
    } else if (*random_cmd) {
      for (int i = 0; i < count; ++i)
        std::cout << ctx.show(random_diagram(chords, seed + static_cast<std::uint64_t>(i)))
                  << "\n";
    } else if (*moves_cmd) {
      auto d = ctx.diagram(code);
      const auto& tab = ctx.table();
      auto list = [&](MoveKind k) {
        for (const auto& m : enumerate_moves(d, k, tab))
          std::cout << format_step(m) << "\n";
      };
      if (kind == "all") {
        for (MoveKind k : {MoveKind::R1Insert, MoveKind::R1Remove, MoveKind::R2Insert,
                           MoveKind::R2Remove, MoveKind::R3, MoveKind::FH, MoveKind::FT})
          list(k);
      } else {
        bool found = false;
        for (MoveKind k : {MoveKind::R1Insert, MoveKind::R1Remove, MoveKind::R2Insert,
                           MoveKind::R2Remove, MoveKind::R3, MoveKind::FH, MoveKind::FT})
          if (kind_name(k) == kind) { list(k); found = true; }
        if (!found) throw CLI::ValidationError("--kind", "unknown move kind " + kind);
      }
    } else if (*apply_cmd) {
      auto d = ctx.diagram(code);
      std::cout << ctx.show(apply_move(d, parse_step(step_text), ctx.table())) << "\n";
    } else if (*unknot_cmd) {
      auto d = ctx.diagram(code);
      auto t = unknot(d, ctx.table());
      auto res = replay(d, t, ctx.table());
      emit_trace(t, out_path);
      std::cout << ctx.show(res) << "\n";
    } else if (*transform_cmd) {
      auto a = parse_gauss_code(code), b = parse_gauss_code(code_b);
      auto t = transform(a, b, ctx.table());
      auto res = replay(a, t, ctx.table());
      if (!diagrams_equal(res, b)) throw std::runtime_error("transform self-check failed");
      emit_trace(t, out_path);
      if (!out_path.empty()) std::cout << ctx.show(res) << "\n";
    } else if (*replay_cmd) {
      auto d = ctx.diagram(code);
      auto t = parse_trace(read_file(trace_path));
      const auto& tab = ctx.table();
      if (strict) {
        GaussDiagram state = d;
        for (int i = 0; i < t.length(); ++i) {
          if (!is_legal(state, t.steps[i], tab))
            throw ReplayError(i, t.steps[i], serialize(state),
                              "step " + std::to_string(i) +
                                  " illegal: " + format_step(t.steps[i]));
          state = apply_move(state, t.steps[i], tab);
          auto v = validate(state);
          if (!v.empty())
            throw ReplayError(i, t.steps[i], serialize(state),
                              "step " + std::to_string(i) +
                                  " broke a diagram invariant: " + v[0].message);
        }
        std::cout << ctx.show(state) << "\n";
      } else {
        std::cout << ctx.show(replay(d, t, tab)) << "\n";
      }
    } else if (*stats_cmd) {
      auto t = parse_trace(read_file(trace_path));
      TraceStats s;
      if (!code.empty() || !ctx.in_path.empty()) {
        auto d = ctx.diagram(code);
        const auto& tab = ctx.table();
        s = trace_stats(t, &d, &tab);
        std::cout << "peak_chords " << s.peak_chords << "\n";
      } else {
        s = trace_stats(t);
      }
      std::cout << "steps " << s.total << "\nmacros " << s.macro_count << "\n";
      for (const auto& [k, n] : s.counts) std::cout << k << " " << n << "\n";
    } else if (*render_cmd) {
      auto d = ctx.diagram(code);
      std::cout << (format == "dot" ? render_dot(d) : render_ascii(d));
    }
  } catch (const ReplayError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const CLI::ValidationError&) {
    std::cerr << "unknown move kind\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
