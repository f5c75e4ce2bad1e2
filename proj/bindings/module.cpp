#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gauss/diagram.hpp"
#include "gauss/invariants.hpp"
#include "gauss/moves.hpp"
#include "gauss/render.hpp"
#include "gauss/rewrite.hpp"

namespace py = pybind11;
using namespace gauss;

// Python-facing surface: diagrams travel as Gauss-code strings, traces as
// their line-oriented text.  This keeps the bindings thin and mirrors the
// file formats the CLI speaks.
namespace {

const VariantTable& table(const std::optional<std::string>& path) {
  static std::map<std::string, VariantTable> cache;
  if (!path) return VariantTable::builtin();
  auto it = cache.find(*path);
  if (it == cache.end()) it = cache.emplace(*path, VariantTable::load_file(*path)).first;
  return it->second;
}

GaussDiagram parse_checked(const std::string& code) { return parse_gauss_code(code); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Gauss diagram rewriting: Reidemeister moves I-III and the forbidden moves";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<MoveError>(m, "MoveError", PyExc_ValueError);
  py::register_exception<ReplayError>(m, "ReplayError", PyExc_ValueError);

  m.def("parse", [](const std::string& code) { return serialize(parse_checked(code)); },
        py::arg("code"), "Parse a signed Gauss code; returns its normalized form.");
  m.def("validate",
        [](const std::string& code) {
          std::vector<std::string> out;
          for (const auto& v : validate(parse_checked(code))) out.push_back(v.message);
          return out;
        },
        py::arg("code"), "Messages for violated diagram invariants (empty when valid).");
  m.def("canonical_form",
        [](const std::string& code) { return canonical_form(parse_checked(code)); },
        py::arg("code"), "Lexicographically least rotation of the code.");
  m.def("equal",
        [](const std::string& a, const std::string& b) {
          return diagrams_equal(parse_checked(a), parse_checked(b));
        },
        py::arg("a"), py::arg("b"), "Equality up to basepoint rotation.");
  m.def("random_diagram",
        [](int chords, std::uint64_t seed) { return serialize(random_diagram(chords, seed)); },
        py::arg("chords"), py::arg("seed") = 0);

  m.def("moves",
        [](const std::string& code, const std::string& kind,
           const std::optional<std::string>& table_path) {
          auto d = parse_checked(code);
          const auto& tab = table(table_path);
          std::vector<std::string> out;
          for (MoveKind k : {MoveKind::R1Insert, MoveKind::R1Remove, MoveKind::R2Insert,
                             MoveKind::R2Remove, MoveKind::R3, MoveKind::FH, MoveKind::FT})
            if (kind == "all" || kind_name(k) == kind)
              for (const auto& mi : enumerate_moves(d, k, tab))
                out.push_back(format_step(mi));
          return out;
        },
        py::arg("code"), py::arg("kind") = "all", py::arg("table") = py::none(),
        "Legal move instances, one step line each.");
  m.def("apply",
        [](const std::string& code, const std::string& step,
           const std::optional<std::string>& table_path) {
          return serialize(apply_move(parse_checked(code), parse_step(step),
                                      table(table_path)));
        },
        py::arg("code"), py::arg("step"), py::arg("table") = py::none());

  m.def("unknot",
        [](const std::string& code, const std::optional<std::string>& table_path) {
          return format_trace(unknot(parse_checked(code), table(table_path)));
        },
        py::arg("code"), py::arg("table") = py::none(),
        "Trace (as text) taking the diagram to the empty diagram.");
  m.def("transform",
        [](const std::string& a, const std::string& b,
           const std::optional<std::string>& table_path) {
          return format_trace(transform(parse_checked(a), parse_checked(b),
                                        table(table_path)));
        },
        py::arg("src"), py::arg("dst"), py::arg("table") = py::none());
  m.def("replay",
        [](const std::string& code, const std::string& trace_text,
           const std::optional<std::string>& table_path) {
          return serialize(replay(parse_checked(code), parse_trace(trace_text),
                                  table(table_path)));
        },
        py::arg("code"), py::arg("trace"), py::arg("table") = py::none(),
        "Replay a trace (text) on a diagram; raises ReplayError on an illegal step.");
  m.def("trace_stats",
        [](const std::string& trace_text, const std::optional<std::string>& code,
           const std::optional<std::string>& table_path) {
          auto t = parse_trace(trace_text);
          py::dict out;
          TraceStats s;
          if (code) {
            auto d = parse_checked(*code);
            const auto& tab = table(table_path);
            s = trace_stats(t, &d, &tab);
            out["peak_chords"] = s.peak_chords;
          } else {
            s = trace_stats(t);
          }
          out["steps"] = s.total;
          out["macros"] = s.macro_count;
          py::dict counts;
          for (const auto& [k, n] : s.counts) counts[py::str(k)] = n;
          out["counts"] = counts;
          return out;
        },
        py::arg("trace"), py::arg("code") = py::none(), py::arg("table") = py::none());

  m.def("writhe", [](const std::string& code) { return writhe(parse_checked(code)); },
        py::arg("code"));
  m.def("odd_writhe",
        [](const std::string& code) { return odd_writhe(parse_checked(code)); },
        py::arg("code"),
        "Invariant under moves I-III; changed by the forbidden moves.");

  m.def("render_ascii",
        [](const std::string& code) { return render_ascii(parse_checked(code)); },
        py::arg("code"));
  m.def("render_dot",
        [](const std::string& code) { return render_dot(parse_checked(code)); },
        py::arg("code"));

  m.attr("UNKNOT_LENGTH_FACTOR") = kUnknotLengthFactor;
}
