#include "gauss/rewrite.hpp"

#include "doctest.h"

using namespace gauss;

namespace {
const VariantTable& tab() { return VariantTable::builtin(); }

// post-state oracle: the same diagram with endpoints p, p+1 swapped
GaussDiagram swapped(const GaussDiagram& d, int p) {
  GaussDiagram w = d;
  std::swap(w.endpoints[p], w.endpoints[(p + 1) % d.size()]);
  return w;
}

std::vector<MoveKind> kinds_of(const Trace& t) {
  std::vector<MoveKind> ks;
  for (const auto& s : t.steps) ks.push_back(s.kind);
  return ks;
}
}  // namespace

TEST_CASE("FS expansion: head past tail, equal signs") {
  auto d = parse_gauss_code("O1+U1+O2+U2+");
  // p=1: U1 (head of 1, +) then O2 (tail of 2, +): equal signs -> FS
  auto t = expand_macro(d, MacroKind::FS, 1, tab());
  CHECK(kinds_of(t) == std::vector<MoveKind>{MoveKind::R2Insert, MoveKind::FT,
                                             MoveKind::FH, MoveKind::R3,
                                             MoveKind::R2Remove});
  CHECK(t.macro_count == 1);
  CHECK(exact_equal(replay(d, t, tab()), swapped(d, 1)));
}

TEST_CASE("FO expansion: head past tail, opposite signs") {
  auto d = parse_gauss_code("O1+U1+O2-U2-");
  auto t = expand_macro(d, MacroKind::FO, 1, tab());
  CHECK(kinds_of(t) == std::vector<MoveKind>{MoveKind::R2Insert, MoveKind::FH,
                                             MoveKind::R3, MoveKind::FT,
                                             MoveKind::R2Remove});
  CHECK(exact_equal(replay(d, t, tab()), swapped(d, 1)));
}

TEST_CASE("macro sign conditions are enforced") {
  auto eq = parse_gauss_code("O1+U1+O2+U2+");
  CHECK_THROWS_AS(expand_macro(eq, MacroKind::FO, 1, tab()), MoveError);
  auto op = parse_gauss_code("O1+U1+O2-U2-");
  CHECK_THROWS_AS(expand_macro(op, MacroKind::FS, 1, tab()), MoveError);
  // same chord on both sides of the window
  CHECK_THROWS_AS(expand_macro(eq, MacroKind::FS, 0, tab()), MoveError);
}

TEST_CASE("macros work in either endpoint order and across the basepoint") {
  auto d = parse_gauss_code("U1+O2+O1+U2+");
  for (int p = 0; p < d.size(); ++p) {
    const auto& e1 = d.endpoints[p];
    const auto& e2 = d.endpoints[(p + 1) % d.size()];
    if (e1.chord == e2.chord || e1.role == e2.role) continue;
    MacroKind mk = d.sign_of(e1.chord) == d.sign_of(e2.chord) ? MacroKind::FS
                                                              : MacroKind::FO;
    auto t = expand_macro(d, mk, p, tab());
    CHECK(t.length() == 5);
    CHECK(exact_equal(replay(d, t, tab()), swapped(d, p)));
  }
}

TEST_CASE("net effect oracle on random diagrams") {
  int checked = 0;
  for (int n = 2; n <= 7; ++n)
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      auto d = random_diagram(n, seed * 101 + n);
      for (int p = 0; p < d.size(); ++p) {
        const auto& e1 = d.endpoints[p];
        const auto& e2 = d.endpoints[(p + 1) % d.size()];
        if (e1.chord == e2.chord) continue;
        auto [t, res] = transpose_endpoints(d, p, tab());
        CHECK(exact_equal(res, swapped(d, p)));
        // traces only contain primitive steps, each legal at replay time
        CHECK(exact_equal(replay(d, t, tab()), res));
        ++checked;
      }
    }
  CHECK(checked > 250);
}

TEST_CASE("transpose_endpoints dispatch") {
  auto d = parse_gauss_code("O1+O2-U1+U2-");
  // heads at 2,3 -> single FH
  auto [t1, r1] = transpose_endpoints(d, 2, tab());
  REQUIRE(t1.length() == 1);
  CHECK(t1.steps[0].kind == MoveKind::FH);
  CHECK(t1.macro_count == 0);
  CHECK(serialize(r1) == "O1+O2-U2-U1+");
  // tails at 0,1 -> single FT
  auto [t2, r2] = transpose_endpoints(d, 0, tab());
  REQUIRE(t2.length() == 1);
  CHECK(t2.steps[0].kind == MoveKind::FT);
  // mixed pair at 1 (O2-, U1+): opposite signs -> FO, five steps
  auto [t3, r3] = transpose_endpoints(d, 1, tab());
  CHECK(t3.length() == 5);
  CHECK(t3.macro_count == 1);
  CHECK(exact_equal(r3, swapped(d, 1)));
  // same chord is not transposable
  auto kink = parse_gauss_code("O1+U1+");
  CHECK_THROWS_AS(transpose_endpoints(kink, 0, tab()), MoveError);
}
