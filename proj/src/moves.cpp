#include "gauss/moves.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace gauss {

std::string kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::R1Insert: return "R1I";
    case MoveKind::R1Remove: return "R1R";
    case MoveKind::R2Insert: return "R2I";
    case MoveKind::R2Remove: return "R2R";
    case MoveKind::R3: return "R3";
    case MoveKind::FH: return "FH";
    case MoveKind::FT: return "FT";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Variant table

namespace {

PatternEndpoint parse_pattern_endpoint(const nlohmann::json& j) {
  std::string chord = j.at("chord").get<std::string>();
  std::string role = j.at("role").get<std::string>();
  if (chord.size() != 1 || chord[0] < 'a' || chord[0] > 'c')
    throw MoveError("variant table: chord tag must be 'a', 'b' or 'c'");
  if (role != "T" && role != "H")
    throw MoveError("variant table: role must be 'T' or 'H'");
  return {chord[0] - 'a', role == "T" ? Role::Tail : Role::Head};
}

Sign parse_sign_str(const std::string& s) {
  if (s == "+") return Sign::Plus;
  if (s == "-") return Sign::Minus;
  throw MoveError("variant table: sign must be '+' or '-'");
}

template <std::size_t NGroups, std::size_t NTags>
void check_pattern(const std::array<std::array<PatternEndpoint, 2>, NGroups>& groups,
                   const std::string& id) {
  std::array<int, NTags> tails{}, heads{};
  for (const auto& g : groups)
    for (const auto& e : g) {
      if (e.tag < 0 || e.tag >= static_cast<int>(NTags))
        throw MoveError("variant " + id + ": tag out of range");
      (e.role == Role::Tail ? tails[e.tag] : heads[e.tag])++;
    }
  for (std::size_t t = 0; t < NTags; ++t)
    if (tails[t] != 1 || heads[t] != 1)
      throw MoveError("variant " + id + ": each chord needs exactly one tail and one head");
}

}  // namespace

VariantTable VariantTable::from_json(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  VariantTable t;
  for (const auto& jv : j.at("r2_variants")) {
    R2Variant v;
    v.id = jv.at("id").get<std::string>();
    const auto& groups = jv.at("groups");
    if (groups.size() != 2) throw MoveError("variant " + v.id + ": need 2 groups");
    for (int g = 0; g < 2; ++g) {
      if (groups[g].size() != 2) throw MoveError("variant " + v.id + ": group size != 2");
      for (int e = 0; e < 2; ++e) v.groups[g][e] = parse_pattern_endpoint(groups[g][e]);
    }
    check_pattern<2, 2>(v.groups, v.id);
    const auto& js = jv.at("signs");
    if (js.is_string()) {
      std::string s = js.get<std::string>();
      if (s == "opposite") v.signs = SignConstraint::Opposite;
      else if (s == "equal") v.signs = SignConstraint::Equal;
      else throw MoveError("variant " + v.id + ": bad sign constraint");
    } else {
      v.signs = SignConstraint::Fixed;
      v.fixed = {parse_sign_str(js.at("a").get<std::string>()),
                 parse_sign_str(js.at("b").get<std::string>())};
    }
    t.r2_.push_back(std::move(v));
  }
  for (const auto& jv : j.at("r3_variants")) {
    R3Variant v;
    v.id = jv.at("id").get<std::string>();
    const auto& arcs = jv.at("arcs");
    if (arcs.size() != 3) throw MoveError("variant " + v.id + ": need 3 arcs");
    for (int a = 0; a < 3; ++a) {
      if (arcs[a].size() != 2) throw MoveError("variant " + v.id + ": arc size != 2");
      for (int e = 0; e < 2; ++e) v.arcs[a][e] = parse_pattern_endpoint(arcs[a][e]);
    }
    check_pattern<3, 3>(v.arcs, v.id);
    const auto& js = jv.at("signs");
    v.signs = {parse_sign_str(js.at("a").get<std::string>()),
               parse_sign_str(js.at("b").get<std::string>()),
               parse_sign_str(js.at("c").get<std::string>())};
    t.r3_.push_back(std::move(v));
  }
  {
    std::set<std::string> ids;
    for (const auto& v : t.r2_)
      if (!ids.insert(v.id).second) throw MoveError("duplicate variant id " + v.id);
    for (const auto& v : t.r3_)
      if (!ids.insert(v.id).second) throw MoveError("duplicate variant id " + v.id);
  }

  // Resolve the post-swap partner of each r3 variant: reverse every arc and
  // look the pattern up again (modulo tag naming and arc order).  Applying a
  // move whose reversed pattern is missing could not be inverted, so a table
  // that is not closed under reversal is rejected.
  auto matches_reversed = [](const R3Variant& rev, const R3Variant& cand) {
    std::array<int, 3> perm = {0, 1, 2};
    std::sort(perm.begin(), perm.end());
    do {
      std::array<int, 3> tagmap = {-1, -1, -1};
      bool ok = true;
      for (int a = 0; a < 3 && ok; ++a)
        for (int e = 0; e < 2 && ok; ++e) {
          const auto& pe = rev.arcs[a][1 - e];  // reversed order
          const auto& ce = cand.arcs[perm[a]][e];
          if (pe.role != ce.role) { ok = false; break; }
          if (tagmap[pe.tag] == -1) tagmap[pe.tag] = ce.tag;
          else if (tagmap[pe.tag] != ce.tag) ok = false;
        }
      if (ok) {
        for (int tag = 0; tag < 3; ++tag)
          if (rev.signs[tag] != cand.signs[tagmap[tag]]) ok = false;
      }
      if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
  };
  for (auto& v : t.r3_) {
    for (const auto& cand : t.r3_)
      if (matches_reversed(v, cand)) { v.inverse_id = cand.id; break; }
    if (v.inverse_id.empty())
      throw MoveError("variant table not closed under reversal: " + v.id);
  }
  return t;
}

VariantTable VariantTable::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MoveError("cannot open variant table " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

const R2Variant* VariantTable::find_r2(const std::string& id) const {
  for (const auto& v : r2_)
    if (v.id == id) return &v;
  return nullptr;
}

const R3Variant* VariantTable::find_r3(const std::string& id) const {
  for (const auto& v : r3_)
    if (v.id == id) return &v;
  return nullptr;
}

// ---------------------------------------------------------------------------
// Legality

namespace {

bool r2_signs_ok(const R2Variant& v, Sign sa, Sign sb) {
  switch (v.signs) {
    case SignConstraint::Opposite: return sa == opposite(sb);
    case SignConstraint::Equal: return sa == sb;
    case SignConstraint::Fixed: return sa == v.fixed[0] && sb == v.fixed[1];
  }
  return false;
}

// The four endpoint positions of chords (a, b), grouped into the two
// non-wrapping adjacent pairs required by an r2 pattern; nullopt otherwise.
std::optional<std::array<std::array<int, 2>, 2>> r2_groups(const GaussDiagram& d,
                                                           int a, int b) {
  std::array<int, 4> pos = {d.find(a, Role::Tail), d.find(a, Role::Head),
                            d.find(b, Role::Tail), d.find(b, Role::Head)};
  for (int p : pos)
    if (p < 0) return std::nullopt;
  std::sort(pos.begin(), pos.end());
  if (pos[1] != pos[0] + 1 || pos[3] != pos[2] + 1) return std::nullopt;
  return std::array<std::array<int, 2>, 2>{{{pos[0], pos[1]}, {pos[2], pos[3]}}};
}

bool r2_remove_matches(const GaussDiagram& d, const R2Variant& v, int chord_a,
                       int chord_b) {
  if (chord_a == chord_b) return false;
  auto groups = r2_groups(d, chord_a, chord_b);
  if (!groups) return false;
  std::array<int, 2> tag2chord = {chord_a, chord_b};
  for (int g = 0; g < 2; ++g)
    for (int e = 0; e < 2; ++e) {
      const auto& pat = v.groups[g][e];
      const auto& ep = d.endpoints[(*groups)[g][e]];
      if (ep.chord != tag2chord[pat.tag] || ep.role != pat.role) return false;
    }
  return r2_signs_ok(v, d.sign_of(chord_a), d.sign_of(chord_b));
}

struct R3ArcView {
  std::array<Endpoint, 2> eps;
};

std::optional<std::array<R3ArcView, 3>> r3_arc_views(const GaussDiagram& d,
                                                     const std::array<int, 3>& arcs) {
  int L = d.size();
  if (L < 6) return std::nullopt;
  if (!(arcs[0] < arcs[1] && arcs[1] < arcs[2])) return std::nullopt;
  std::set<int> used;
  std::array<R3ArcView, 3> out;
  for (int a = 0; a < 3; ++a) {
    int s = arcs[a];
    if (s < 0 || s >= L) return std::nullopt;
    int s2 = (s + 1) % L;
    if (!used.insert(s).second || !used.insert(s2).second) return std::nullopt;
    out[a].eps = {d.endpoints[s], d.endpoints[s2]};
    if (out[a].eps[0].chord == out[a].eps[1].chord) return std::nullopt;
  }
  // three chords, each in exactly two arcs, no repeated arc chord-pair
  std::map<int, int> count;
  std::set<std::pair<int, int>> pairs;
  for (const auto& av : out) {
    int c1 = av.eps[0].chord, c2 = av.eps[1].chord;
    count[c1]++;
    count[c2]++;
    if (!pairs.insert(std::minmax(c1, c2)).second) return std::nullopt;
  }
  if (count.size() != 3) return std::nullopt;
  for (const auto& [c, n] : count)
    if (n != 2) return std::nullopt;
  return out;
}

bool r3_matches(const GaussDiagram& d, const R3Variant& v,
                const std::array<R3ArcView, 3>& views) {
  std::array<int, 3> perm = {0, 1, 2};
  do {
    std::array<int, 3> tag2chord = {-1, -1, -1};
    bool ok = true;
    for (int a = 0; a < 3 && ok; ++a)
      for (int e = 0; e < 2 && ok; ++e) {
        const auto& pat = v.arcs[a][e];
        const auto& ep = views[perm[a]].eps[e];
        if (pat.role != ep.role) { ok = false; break; }
        if (tag2chord[pat.tag] == -1) tag2chord[pat.tag] = ep.chord;
        else if (tag2chord[pat.tag] != ep.chord) ok = false;
      }
    if (ok)
      for (int tag = 0; tag < 3; ++tag)
        if (d.sign_of(tag2chord[tag]) != v.signs[tag]) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// R1 kink: head and tail of c adjacent at (i, i+1); wrap adjacency across
// the basepoint is not a site (its removal has no exact gap-insert inverse).
int r1_pair_start(const GaussDiagram& d, int chord) {
  int t = d.find(chord, Role::Tail), h = d.find(chord, Role::Head);
  if (t < 0 || h < 0) return -1;
  int lo = std::min(t, h), hi = std::max(t, h);
  return hi == lo + 1 ? lo : -1;
}

bool transpose_site_ok(const GaussDiagram& d, int pos, Role role) {
  int L = d.size();
  if (L < 2 || pos < 0 || pos >= L) return false;
  const auto& e1 = d.endpoints[pos];
  const auto& e2 = d.endpoints[(pos + 1) % L];
  return e1.role == role && e2.role == role && e1.chord != e2.chord;
}

}  // namespace

bool is_legal(const GaussDiagram& d, const MoveInstance& m, const VariantTable& table) {
  int L = d.size();
  switch (m.kind) {
    case MoveKind::R1Insert: {
      const auto& s = std::get<R1InsertSite>(m.site);
      return s.gap >= 0 && s.gap <= L;
    }
    case MoveKind::R1Remove: {
      const auto& s = std::get<R1RemoveSite>(m.site);
      return r1_pair_start(d, s.chord) >= 0;
    }
    case MoveKind::R2Insert: {
      const auto& s = std::get<R2InsertSite>(m.site);
      if (s.gap_a < 0 || s.gap_a > s.gap_b || s.gap_b > L) return false;
      const R2Variant* v = table.find_r2(s.variant);
      return v && r2_signs_ok(*v, s.sign_a, opposite(s.sign_a));
    }
    case MoveKind::R2Remove: {
      const auto& s = std::get<R2RemoveSite>(m.site);
      const R2Variant* v = table.find_r2(s.variant);
      return v && r2_remove_matches(d, *v, s.chord_a, s.chord_b);
    }
    case MoveKind::R3: {
      const auto& s = std::get<R3Site>(m.site);
      const R3Variant* v = table.find_r3(s.variant);
      if (!v) return false;
      auto views = r3_arc_views(d, s.arcs);
      return views && r3_matches(d, *v, *views);
    }
    case MoveKind::FH: {
      return transpose_site_ok(d, std::get<TransposeSite>(m.site).pos, Role::Head);
    }
    case MoveKind::FT: {
      return transpose_site_ok(d, std::get<TransposeSite>(m.site).pos, Role::Tail);
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Application

GaussDiagram apply_move(const GaussDiagram& d, const MoveInstance& m,
                        const VariantTable& table) {
  if (!is_legal(d, m, table))
    throw MoveError("illegal " + kind_name(m.kind) + " instance: " + format_step(m));
  GaussDiagram out = d;
  int L = d.size();
  switch (m.kind) {
    case MoveKind::R1Insert: {
      const auto& s = std::get<R1InsertSite>(m.site);
      int c = d.max_label() + 1;
      Role second = s.first == Role::Tail ? Role::Head : Role::Tail;
      out.endpoints.insert(out.endpoints.begin() + s.gap,
                           {Endpoint{c, s.first}, Endpoint{c, second}});
      out.signs.emplace(c, s.sign);
      break;
    }
    case MoveKind::R1Remove: {
      const auto& s = std::get<R1RemoveSite>(m.site);
      int lo = r1_pair_start(d, s.chord);
      out.endpoints.erase(out.endpoints.begin() + lo, out.endpoints.begin() + lo + 2);
      out.signs.erase(s.chord);
      break;
    }
    case MoveKind::R2Insert: {
      const auto& s = std::get<R2InsertSite>(m.site);
      const R2Variant& v = *table.find_r2(s.variant);
      std::array<int, 2> tag2chord = {d.max_label() + 1, d.max_label() + 2};
      std::array<Sign, 2> tag2sign = {s.sign_a, opposite(s.sign_a)};
      auto make = [&](const PatternEndpoint& pe) {
        return Endpoint{tag2chord[pe.tag], pe.role};
      };
      // later gap first so the earlier index stays valid
      out.endpoints.insert(out.endpoints.begin() + s.gap_b,
                           {make(v.groups[1][0]), make(v.groups[1][1])});
      out.endpoints.insert(out.endpoints.begin() + s.gap_a,
                           {make(v.groups[0][0]), make(v.groups[0][1])});
      out.signs.emplace(tag2chord[0], tag2sign[0]);
      out.signs.emplace(tag2chord[1], tag2sign[1]);
      break;
    }
    case MoveKind::R2Remove: {
      const auto& s = std::get<R2RemoveSite>(m.site);
      auto groups = r2_groups(d, s.chord_a, s.chord_b);
      out.endpoints.erase(out.endpoints.begin() + (*groups)[1][0],
                          out.endpoints.begin() + (*groups)[1][1] + 1);
      out.endpoints.erase(out.endpoints.begin() + (*groups)[0][0],
                          out.endpoints.begin() + (*groups)[0][1] + 1);
      out.signs.erase(s.chord_a);
      out.signs.erase(s.chord_b);
      break;
    }
    case MoveKind::R3: {
      const auto& s = std::get<R3Site>(m.site);
      for (int a : s.arcs) std::swap(out.endpoints[a], out.endpoints[(a + 1) % L]);
      break;
    }
    case MoveKind::FH:
    case MoveKind::FT: {
      int p = std::get<TransposeSite>(m.site).pos;
      std::swap(out.endpoints[p], out.endpoints[(p + 1) % L]);
      break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration

std::vector<MoveInstance> enumerate_moves(const GaussDiagram& d, MoveKind kind,
                                          const VariantTable& table) {
  std::vector<MoveInstance> out;
  int L = d.size();
  switch (kind) {
    case MoveKind::R1Insert: {
      for (int g = 0; g <= L; ++g)
        for (Role r : {Role::Tail, Role::Head})
          for (Sign s : {Sign::Plus, Sign::Minus})
            out.push_back({kind, R1InsertSite{g, r, s}});
      break;
    }
    case MoveKind::R1Remove: {
      for (const auto& [c, s] : d.signs) {
        (void)s;
        if (r1_pair_start(d, c) >= 0) out.push_back({kind, R1RemoveSite{c}});
      }
      break;
    }
    case MoveKind::R2Insert: {
      for (int ga = 0; ga <= L; ++ga)
        for (int gb = ga; gb <= L; ++gb)
          for (const auto& v : table.r2())
            for (Sign s : {Sign::Plus, Sign::Minus})
              if (r2_signs_ok(v, s, opposite(s)))
                out.push_back({kind, R2InsertSite{ga, gb, v.id, s}});
      break;
    }
    case MoveKind::R2Remove: {
      for (const auto& [ca, sa] : d.signs)
        for (const auto& [cb, sb] : d.signs) {
          (void)sa;
          (void)sb;
          if (ca == cb) continue;
          for (const auto& v : table.r2())
            if (r2_remove_matches(d, v, ca, cb))
              out.push_back({kind, R2RemoveSite{ca, cb, v.id}});
        }
      break;
    }
    case MoveKind::R3: {
      std::vector<int> starts;
      for (int s = 0; s < L; ++s)
        if (d.endpoints[s].chord != d.endpoints[(s + 1) % L].chord) starts.push_back(s);
      for (std::size_t i = 0; i < starts.size(); ++i)
        for (std::size_t j = i + 1; j < starts.size(); ++j)
          for (std::size_t k = j + 1; k < starts.size(); ++k) {
            std::array<int, 3> arcs = {starts[i], starts[j], starts[k]};
            auto views = r3_arc_views(d, arcs);
            if (!views) continue;
            for (const auto& v : table.r3())
              if (r3_matches(d, v, *views)) out.push_back({kind, R3Site{arcs, v.id}});
          }
      break;
    }
    case MoveKind::FH:
    case MoveKind::FT: {
      Role role = kind == MoveKind::FH ? Role::Head : Role::Tail;
      for (int p = 0; p < L; ++p)
        if (transpose_site_ok(d, p, role)) out.push_back({kind, TransposeSite{p}});
      break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Inversion

MoveInstance invert_move(const MoveInstance& m, const GaussDiagram& d_before,
                         const VariantTable& table) {
  if (!is_legal(d_before, m, table))
    throw MoveError("invert_move: illegal instance " + format_step(m));
  switch (m.kind) {
    case MoveKind::R1Insert:
      return {MoveKind::R1Remove, R1RemoveSite{d_before.max_label() + 1}};
    case MoveKind::R1Remove: {
      const auto& s = std::get<R1RemoveSite>(m.site);
      int lo = r1_pair_start(d_before, s.chord);
      return {MoveKind::R1Insert,
              R1InsertSite{lo, d_before.endpoints[lo].role, d_before.sign_of(s.chord)}};
    }
    case MoveKind::R2Insert: {
      const auto& s = std::get<R2InsertSite>(m.site);
      return {MoveKind::R2Remove,
              R2RemoveSite{d_before.max_label() + 1, d_before.max_label() + 2, s.variant}};
    }
    case MoveKind::R2Remove: {
      const auto& s = std::get<R2RemoveSite>(m.site);
      auto groups = r2_groups(d_before, s.chord_a, s.chord_b);
      return {MoveKind::R2Insert,
              R2InsertSite{(*groups)[0][0], (*groups)[1][0] - 2, s.variant,
                           d_before.sign_of(s.chord_a)}};
    }
    case MoveKind::R3: {
      const auto& s = std::get<R3Site>(m.site);
      return {MoveKind::R3, R3Site{s.arcs, table.find_r3(s.variant)->inverse_id}};
    }
    case MoveKind::FH:
    case MoveKind::FT:
      return m;
  }
  throw MoveError("invert_move: unknown kind");
}

// ---------------------------------------------------------------------------
// Step text format

std::string format_step(const MoveInstance& m) {
  std::ostringstream os;
  os << kind_name(m.kind);
  switch (m.kind) {
    case MoveKind::R1Insert: {
      const auto& s = std::get<R1InsertSite>(m.site);
      os << ' ' << s.gap << ' ' << (s.first == Role::Tail ? 'T' : 'H') << ' '
         << sign_char(s.sign);
      break;
    }
    case MoveKind::R1Remove:
      os << ' ' << std::get<R1RemoveSite>(m.site).chord;
      break;
    case MoveKind::R2Insert: {
      const auto& s = std::get<R2InsertSite>(m.site);
      os << ' ' << s.gap_a << ' ' << s.gap_b << ' ' << s.variant << ' '
         << sign_char(s.sign_a);
      break;
    }
    case MoveKind::R2Remove: {
      const auto& s = std::get<R2RemoveSite>(m.site);
      os << ' ' << s.chord_a << ' ' << s.chord_b << ' ' << s.variant;
      break;
    }
    case MoveKind::R3: {
      const auto& s = std::get<R3Site>(m.site);
      os << ' ' << s.arcs[0] << ' ' << s.arcs[1] << ' ' << s.arcs[2] << ' ' << s.variant;
      break;
    }
    case MoveKind::FH:
    case MoveKind::FT:
      os << ' ' << std::get<TransposeSite>(m.site).pos;
      break;
  }
  return os.str();
}

MoveInstance parse_step(const std::string& line) {
  std::istringstream is(line);
  std::string kind;
  is >> kind;
  auto need = [&](bool ok) {
    if (!ok) throw MoveError("bad step line: '" + line + "'");
  };
  auto read_sign = [&]() {
    char c = 0;
    need(static_cast<bool>(is >> c) && (c == '+' || c == '-'));
    return c == '+' ? Sign::Plus : Sign::Minus;
  };
  if (kind == "R1I") {
    R1InsertSite s;
    char rc = 0;
    need(static_cast<bool>(is >> s.gap >> rc) && (rc == 'T' || rc == 'H'));
    s.first = rc == 'T' ? Role::Tail : Role::Head;
    s.sign = read_sign();
    return {MoveKind::R1Insert, s};
  }
  if (kind == "R1R") {
    R1RemoveSite s;
    need(static_cast<bool>(is >> s.chord));
    return {MoveKind::R1Remove, s};
  }
  if (kind == "R2I") {
    R2InsertSite s;
    need(static_cast<bool>(is >> s.gap_a >> s.gap_b >> s.variant));
    s.sign_a = read_sign();
    return {MoveKind::R2Insert, s};
  }
  if (kind == "R2R") {
    R2RemoveSite s;
    need(static_cast<bool>(is >> s.chord_a >> s.chord_b >> s.variant));
    return {MoveKind::R2Remove, s};
  }
  if (kind == "R3") {
    R3Site s;
    need(static_cast<bool>(is >> s.arcs[0] >> s.arcs[1] >> s.arcs[2] >> s.variant));
    return {MoveKind::R3, s};
  }
  if (kind == "FH" || kind == "FT") {
    TransposeSite s;
    need(static_cast<bool>(is >> s.pos));
    return {kind == "FH" ? MoveKind::FH : MoveKind::FT, s};
  }
  throw MoveError("unknown step kind '" + kind + "'");
}

}  // namespace gauss
