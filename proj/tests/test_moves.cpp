#include "gauss/moves.hpp"

#include <set>

#include "doctest.h"

using namespace gauss;

namespace {
const VariantTable& tab() { return VariantTable::builtin(); }
}

TEST_CASE("enumerate: empty diagram has no transposition sites") {
  CHECK(enumerate_moves(GaussDiagram{}, MoveKind::FH, tab()).empty());
  CHECK(enumerate_moves(GaussDiagram{}, MoveKind::FT, tab()).empty());
  CHECK(enumerate_moves(GaussDiagram{}, MoveKind::R1Remove, tab()).empty());
  CHECK(enumerate_moves(GaussDiagram{}, MoveKind::R3, tab()).empty());
}

TEST_CASE("enumerate: kink removal") {
  auto d = parse_gauss_code("O1+U1+");
  auto ms = enumerate_moves(d, MoveKind::R1Remove, tab());
  REQUIRE(ms.size() == 1);
  CHECK(std::get<R1RemoveSite>(ms[0].site).chord == 1);
}

TEST_CASE("enumerate: forbidden move sites") {
  auto d = parse_gauss_code("O1+O2-U1+U2-");
  auto fh = enumerate_moves(d, MoveKind::FH, tab());
  REQUIRE(fh.size() == 1);
  CHECK(std::get<TransposeSite>(fh[0].site).pos == 2);
  auto ft = enumerate_moves(d, MoveKind::FT, tab());
  REQUIRE(ft.size() == 1);
  CHECK(std::get<TransposeSite>(ft[0].site).pos == 0);
  // cyclic pair (3,0) is head-tail, listed under neither
}

TEST_CASE("forbidden moves ignore signs and far ends") {
  // adjacent same-role pairs are sites whatever the signs and wherever the
  // partners sit
  for (const char* code : {"O1+O2-U2-U1+", "O1-U2+O2+U1-", "U1+U2-O1+O2-"}) {
    auto d = parse_gauss_code(code);
    for (int p = 0; p < d.size(); ++p) {
      const auto& e1 = d.endpoints[p];
      const auto& e2 = d.endpoints[(p + 1) % d.size()];
      if (e1.chord == e2.chord || e1.role != e2.role) continue;
      MoveKind k = e1.role == Role::Head ? MoveKind::FH : MoveKind::FT;
      CHECK(is_legal(d, {k, TransposeSite{p}}, tab()));
    }
  }
}

TEST_CASE("apply: FH transposes tokens") {
  auto d = parse_gauss_code("O1+O2-U1+U2-");
  auto out = apply_move(d, {MoveKind::FH, TransposeSite{2}}, tab());
  CHECK(serialize(out) == "O1+O2-U2-U1+");
}

TEST_CASE("apply: R1 insert on empty diagram") {
  auto out = apply_move(GaussDiagram{},
                        {MoveKind::R1Insert, R1InsertSite{0, Role::Tail, Sign::Plus}},
                        tab());
  CHECK(serialize(out) == "O1+U1+");
}

TEST_CASE("apply: R2 insert on empty diagram matches its pattern") {
  // IIa: tails group then heads group in the same chord order
  auto out = apply_move(
      GaussDiagram{},
      {MoveKind::R2Insert, R2InsertSite{0, 0, "IIa", Sign::Plus}}, tab());
  CHECK(serialize(out) == "O1+O2-U1+U2-");
  CHECK(validate(out).empty());

  // brute force: every 2-chord insertion on the empty diagram yields a valid
  // diagram whose chords carry opposite signs and form two adjacent groups
  for (const auto& m : enumerate_moves(GaussDiagram{}, MoveKind::R2Insert, tab())) {
    auto d2 = apply_move(GaussDiagram{}, m, tab());
    CHECK(validate(d2).empty());
    CHECK(d2.sign_of(1) == opposite(d2.sign_of(2)));
    CHECK(d2.endpoints[0].role == d2.endpoints[1].role);
    CHECK(d2.endpoints[2].role == d2.endpoints[3].role);
  }
}

TEST_CASE("apply: R2 remove undoes the insert") {
  auto d = parse_gauss_code("O1+O2-U1+U2-");
  auto out = apply_move(d, {MoveKind::R2Remove, R2RemoveSite{1, 2, "IIa"}}, tab());
  CHECK(out.empty());
}

TEST_CASE("apply: illegal instance throws") {
  CHECK_THROWS_AS(apply_move(GaussDiagram{}, {MoveKind::FH, TransposeSite{0}}, tab()),
                  MoveError);
  auto d = parse_gauss_code("O1+U1+");
  CHECK_THROWS_AS(apply_move(d, {MoveKind::R1Remove, R1RemoveSite{9}}, tab()), MoveError);
  CHECK_THROWS_AS(apply_move(d, {MoveKind::FT, TransposeSite{0}}, tab()), MoveError);
}

TEST_CASE("invert examples") {
  auto d = parse_gauss_code("O1+O2-U1+U2-");
  // FH is an involution
  auto m = MoveInstance{MoveKind::FH, TransposeSite{2}};
  CHECK(invert_move(m, d, tab()) == m);
  // R1 insert inverts to removal of the inserted chord
  auto ins = MoveInstance{MoveKind::R1Insert, R1InsertSite{1, Role::Head, Sign::Minus}};
  auto inv = invert_move(ins, d, tab());
  CHECK(inv.kind == MoveKind::R1Remove);
  CHECK(std::get<R1RemoveSite>(inv.site).chord == 3);
}

TEST_CASE("invert round-trips every enumerable instance") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    auto d = random_diagram(2 + static_cast<int>(seed % 5), seed * 17 + 3);
    for (MoveKind k : {MoveKind::R1Insert, MoveKind::R1Remove, MoveKind::R2Insert,
                       MoveKind::R2Remove, MoveKind::R3, MoveKind::FH, MoveKind::FT})
      for (const auto& mi : enumerate_moves(d, k, tab())) {
        auto next = apply_move(d, mi, tab());
        CHECK(validate(next).empty());
        auto back = apply_move(next, invert_move(mi, d, tab()), tab());
        CHECK(exact_equal(back, d));
      }
  }
}

TEST_CASE("is_legal agrees with enumeration") {
  auto d = random_diagram(4, 11);
  for (MoveKind k : {MoveKind::R1Remove, MoveKind::R2Remove, MoveKind::R3,
                     MoveKind::FH, MoveKind::FT}) {
    auto ms = enumerate_moves(d, k, tab());
    std::set<std::string> listed;
    for (const auto& m : ms) {
      listed.insert(format_step(m));
      CHECK(is_legal(d, m, tab()));
    }
    // spot-check some non-enumerated sites are rejected
    for (int p = 0; p < d.size(); ++p) {
      MoveInstance probe{k == MoveKind::FH ? MoveKind::FH : MoveKind::FT,
                         TransposeSite{p}};
      if ((k == MoveKind::FH || k == MoveKind::FT) && !listed.count(format_step(probe)))
        CHECK(!is_legal(d, probe, tab()));
    }
  }
}

TEST_CASE("chord count and sign deltas") {
  auto d = random_diagram(4, 23);
  auto sign_multiset = [](const GaussDiagram& g) {
    int plus = 0, minus = 0;
    for (const auto& [c, s] : g.signs) {
      (void)c;
      (s == Sign::Plus ? plus : minus)++;
    }
    return std::pair{plus, minus};
  };
  auto [p0, m0] = sign_multiset(d);
  for (MoveKind k : {MoveKind::R1Insert, MoveKind::R1Remove, MoveKind::R2Insert,
                     MoveKind::R2Remove, MoveKind::R3, MoveKind::FH, MoveKind::FT})
    for (const auto& mi : enumerate_moves(d, k, tab())) {
      auto next = apply_move(d, mi, tab());
      int delta = next.chord_count() - d.chord_count();
      auto [p1, m1] = sign_multiset(next);
      switch (k) {
        case MoveKind::R1Insert: CHECK(delta == 1); break;
        case MoveKind::R1Remove: CHECK(delta == -1); break;
        case MoveKind::R2Insert:
          CHECK(delta == 2);
          CHECK(p1 == p0 + 1);
          CHECK(m1 == m0 + 1);
          break;
        case MoveKind::R2Remove: CHECK(delta == -2); break;
        default:
          CHECK(delta == 0);
          CHECK(p1 == p0);
          CHECK(m1 == m0);
      }
    }
}

TEST_CASE("step text round trip") {
  auto d = random_diagram(3, 5);
  for (MoveKind k : {MoveKind::R1Insert, MoveKind::R1Remove, MoveKind::R2Insert,
                     MoveKind::R2Remove, MoveKind::R3, MoveKind::FH, MoveKind::FT})
    for (const auto& m : enumerate_moves(d, k, tab()))
      CHECK(parse_step(format_step(m)) == m);
  CHECK_THROWS_AS(parse_step("XX 1"), MoveError);
  CHECK_THROWS_AS(parse_step("R1I 0 Q +"), MoveError);
}

TEST_CASE("variant table load and validation") {
  CHECK(tab().find_r2("IIa") != nullptr);
  CHECK(tab().find_r2("nope") == nullptr);
  CHECK(tab().r3().size() == 16);
  for (const auto& v : tab().r3()) CHECK(tab().find_r3(v.inverse_id) != nullptr);
  CHECK_THROWS_AS(VariantTable::from_json("{\"r2_variants\":[],"), std::exception);
  CHECK_THROWS_AS(VariantTable::load_file("/no/such/file.json"), MoveError);
}
