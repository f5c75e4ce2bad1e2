#include "gauss/rewrite.hpp"

#include "doctest.h"

using namespace gauss;

namespace {
const VariantTable& tab() { return VariantTable::builtin(); }
}

TEST_CASE("replay: empty trace is the identity") {
  auto d = parse_gauss_code("O1+U1+");
  CHECK(exact_equal(replay(d, Trace{}, tab()), d));
}

TEST_CASE("replay: legal steps apply in order") {
  Trace t;
  t.push({MoveKind::R1Insert, R1InsertSite{0, Role::Tail, Sign::Plus}});
  t.push({MoveKind::R1Insert, R1InsertSite{1, Role::Head, Sign::Minus}});
  auto res = replay(GaussDiagram{}, t, tab());
  CHECK(serialize(res) == "O1+U2-O2-U1+");
}

TEST_CASE("replay: illegal step reports index, step and state") {
  Trace t;
  t.push({MoveKind::FH, TransposeSite{0}});
  try {
    replay(GaussDiagram{}, t, tab());
    FAIL("expected ReplayError");
  } catch (const ReplayError& e) {
    CHECK(e.step_index == 0);
    CHECK(e.step.kind == MoveKind::FH);
    CHECK(e.state_code == "");
    CHECK(std::string(e.what()).find("step 0") != std::string::npos);
  }

  Trace t2;
  t2.push({MoveKind::R1Insert, R1InsertSite{0, Role::Tail, Sign::Plus}});
  t2.push({MoveKind::R1Remove, R1RemoveSite{5}});
  try {
    replay(GaussDiagram{}, t2, tab());
    FAIL("expected ReplayError");
  } catch (const ReplayError& e) {
    CHECK(e.step_index == 1);
    CHECK(e.state_code == "O1+U1+");
  }
}

TEST_CASE("contract_chord") {
  auto d = parse_gauss_code("O1+O2+U1+U2+");
  auto [t, res] = contract_chord(d, 1, tab());
  // the surviving chord keeps its label 2; serialize relabels it to 1
  REQUIRE(res.chord_count() == 1);
  CHECK(res.signs.count(2) == 1);
  CHECK(serialize(res) == "O1+U1+");
  CHECK(exact_equal(replay(d, t, tab()), res));
  CHECK(res.chord_count() == d.chord_count() - 1);
  CHECK_THROWS_AS(contract_chord(d, 9, tab()), MoveError);
}

TEST_CASE("contract_chord preserves the other endpoints' cyclic order") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto d = random_diagram(4, seed + 900);
    auto [t, res] = contract_chord(d, 2, tab());
    (void)t;
    std::vector<Endpoint> before, after;
    for (const auto& e : d.endpoints)
      if (e.chord != 2) before.push_back(e);
    for (const auto& e : res.endpoints) after.push_back(e);
    // same sequence up to rotation
    REQUIRE(before.size() == after.size());
    bool match = false;
    for (std::size_t r = 0; r < before.size() && !match; ++r) {
      match = true;
      for (std::size_t i = 0; i < before.size(); ++i)
        if (before[(i + r) % before.size()] != after[i]) { match = false; break; }
    }
    CHECK(match);
  }
}

TEST_CASE("unknot: examples") {
  CHECK(unknot(GaussDiagram{}, tab()).length() == 0);

  auto kink = parse_gauss_code("O1+U1+");
  auto t = unknot(kink, tab());
  REQUIRE(t.length() == 1);
  CHECK(t.steps[0].kind == MoveKind::R1Remove);
  CHECK(replay(kink, t, tab()).empty());

  // virtual trefoil: nontrivial under I/II/III alone, undone with forbidden moves
  auto vt = parse_gauss_code("O1+O2+U1+U2+");
  auto tv = unknot(vt, tab());
  CHECK(replay(vt, tv, tab()).empty());

  auto tre = parse_gauss_code("O1+U2+O3+U1+O2+U3+");
  CHECK(replay(tre, unknot(tre, tab()), tab()).empty());
}

TEST_CASE("unknot: random diagrams, no insertions of kind I, length bound") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    int n = 1 + static_cast<int>(seed % 8);
    auto d = random_diagram(n, seed * 7 + 1);
    auto t = unknot(d, tab());
    CHECK(replay(d, t, tab()).empty());
    CHECK(t.length() <= kUnknotLengthFactor * n * n);
    for (const auto& s : t.steps) CHECK(s.kind != MoveKind::R1Insert);
  }
}

TEST_CASE("transform: examples") {
  auto kink = parse_gauss_code("O1+U1+");
  auto t = transform(GaussDiagram{}, kink, tab());
  REQUIRE(t.length() == 1);
  CHECK(t.steps[0] ==
        MoveInstance{MoveKind::R1Insert, R1InsertSite{0, Role::Tail, Sign::Plus}});
  CHECK(diagrams_equal(replay(GaussDiagram{}, t, tab()), kink));

  auto idt = transform(kink, kink, tab());
  CHECK(diagrams_equal(replay(kink, idt, tab()), kink));
}

TEST_CASE("transform: random pairs replay to the target") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    auto src = random_diagram(1 + static_cast<int>(seed % 5), seed * 3 + 5);
    auto dst = random_diagram(1 + static_cast<int>((seed + 2) % 5), seed * 13 + 2);
    auto t = transform(src, dst, tab());
    CHECK(diagrams_equal(replay(src, t, tab()), dst));
  }
}

TEST_CASE("trace_stats") {
  auto d = parse_gauss_code("O1+U1+O2+U2+");
  auto t = expand_macro(d, MacroKind::FS, 1, tab());
  auto s = trace_stats(t, &d, &tab());
  CHECK(s.total == 5);
  CHECK(s.macro_count == 1);
  CHECK(s.counts.at("R2I") == 1);
  CHECK(s.counts.at("FT") == 1);
  CHECK(s.counts.at("FH") == 1);
  CHECK(s.counts.at("R3") == 1);
  CHECK(s.counts.at("R2R") == 1);
  CHECK(s.peak_chords == 4);  // two chords plus the auxiliary pair
}

TEST_CASE("trace text round trip") {
  auto d = parse_gauss_code("O1+O2+U1+U2+");
  auto t = unknot(d, tab());
  auto text = format_trace(t);
  auto back = parse_trace(text);
  CHECK(back.steps == t.steps);
  CHECK(back.macro_count == t.macro_count);
  CHECK(replay(d, back, tab()).empty());
  // comments and blank lines are ignored
  auto commented = parse_trace("# a comment\n\nR1I 0 T +\n  # indented\nR1R 1\n");
  CHECK(commented.length() == 2);
  CHECK(parse_trace("").length() == 0);
}
