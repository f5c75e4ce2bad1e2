#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gauss/moves.hpp"

namespace gauss {

/// Adjacent head/tail transposition realized by a five-move sequence.
/// FS requires equal signs, FO opposite signs.
enum class MacroKind { FS, FO };

/// Ordered, replayable list of primitive move instances.  macro_count
/// tracks how many head/tail macro transpositions the trace came from
/// (reporting only; the steps themselves are always primitive).
struct Trace {
  std::vector<MoveInstance> steps;
  int macro_count = 0;

  void append(const Trace& other);
  void push(MoveInstance m) { steps.push_back(std::move(m)); }
  int length() const { return static_cast<int>(steps.size()); }
};

struct TraceStats {
  std::map<std::string, int> counts;  // kind name -> count
  int total = 0;
  int macro_count = 0;
  int peak_chords = 0;  // only meaningful when a start diagram was given
};

struct ReplayError : std::runtime_error {
  int step_index;
  MoveInstance step;
  std::string state_code;  // serialized offending state
  ReplayError(int index, MoveInstance m, std::string state, const std::string& what)
      : std::runtime_error(what), step_index(index), step(std::move(m)),
        state_code(std::move(state)) {}
};

/// Applies steps left to right, checking each for legality.
GaussDiagram replay(const GaussDiagram& d, const Trace& t, const VariantTable& table);

/// Expands an FS/FO macro at position p (endpoints p, p+1 cyclic: one head,
/// one tail, distinct chords) into its five-move primitive trace.  Kinds are
/// [R2I, FT, FH, R3, R2R] for FS and [R2I, FH, R3, FT, R2R] for FO; the
/// replayed net effect is exactly the transposition of the two endpoints.
Trace expand_macro(const GaussDiagram& d, MacroKind kind, int p, const VariantTable& table);

/// Primitive trace swapping the endpoints at p, p+1 (cyclic), which must
/// belong to distinct chords.  Head-head -> FH, tail-tail -> FT, mixed ->
/// FS/FO expansion by sign.
std::pair<Trace, GaussDiagram> transpose_endpoints(const GaussDiagram& d, int p,
                                                   const VariantTable& table);

/// Walks c's head next to its tail by macro transpositions, then removes the
/// kink.  Result has one chord fewer; all other endpoints keep their cyclic order.
std::pair<Trace, GaussDiagram> contract_chord(const GaussDiagram& d, int c,
                                              const VariantTable& table);

/// Trace taking d to the empty diagram.  Never uses R1Insert; primitive
/// length is at most kUnknotLengthFactor * n^2.
Trace unknot(const GaussDiagram& d, const VariantTable& table);

/// Documented constant C in the unknot length bound C * n^2.
inline constexpr int kUnknotLengthFactor = 6;

/// Trace whose replay from src is canonically equal to dst.
Trace transform(const GaussDiagram& src, const GaussDiagram& dst, const VariantTable& table);

TraceStats trace_stats(const Trace& t, const GaussDiagram* start = nullptr,
                       const VariantTable* table = nullptr);

/// Line-oriented trace file format; '#' starts a comment line.
std::string format_trace(const Trace& t);
Trace parse_trace(const std::string& text);

}  // namespace gauss
