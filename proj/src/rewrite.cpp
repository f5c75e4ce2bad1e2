#include "gauss/rewrite.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>

namespace gauss {

void Trace::append(const Trace& other) {
  steps.insert(steps.end(), other.steps.begin(), other.steps.end());
  macro_count += other.macro_count;
}

GaussDiagram replay(const GaussDiagram& d, const Trace& t, const VariantTable& table) {
  GaussDiagram state = d;
  for (int k = 0; k < t.length(); ++k) {
    const auto& m = t.steps[k];
    if (!is_legal(state, m, table))
      throw ReplayError(k, m, serialize(state),
                        "step " + std::to_string(k) + " illegal: " + format_step(m) +
                            " on \"" + serialize(state) + "\"");
    state = apply_move(state, m, table);
  }
  return state;
}

// ---------------------------------------------------------------------------
// Macro expansion.
//
// The five-step sequences are found by a deterministic bounded search over
// sites local to the transposed pair and to the far endpoints of its two
// chords, constrained to the required kind skeleton.  The final state is
// checked against the direct transposition, so whatever the search returns
// is correct by construction.  Successful choice paths are memoized by the
// local configuration; a cached path is re-verified on use and falls back
// to the full search if it no longer applies.

namespace {

struct MacroSearch {
  const VariantTable& table;
  GaussDiagram target;
  std::array<MoveKind, 5> skeleton;
  int chord_a = 0, chord_b = 0;  // head chord / tail chord of the window
  int fresh1 = 0, fresh2 = 0;
  int window_p = 0;

  std::vector<MoveInstance> steps;
  std::vector<int> path;

  bool in_set(int chord) const {
    return chord == chord_a || chord == chord_b || chord == fresh1 || chord == fresh2;
  }
  bool is_fresh(int chord) const { return chord == fresh1 || chord == fresh2; }

  std::vector<MoveInstance> candidates(const GaussDiagram& s, int depth) const {
    std::vector<MoveInstance> out;
    int L = s.size();
    MoveKind kind = skeleton[depth];
    switch (kind) {
      case MoveKind::R2Insert: {
        int t = s.find(chord_a, Role::Tail);
        int h = s.find(chord_b, Role::Head);
        int w2 = (window_p + 1) % L;
        std::vector<int> gaps;
        for (int g : {t, t + 1, h, h + 1, window_p, window_p + 1, w2, w2 + 1})
          if (g >= 0 && g <= L) gaps.push_back(g);
        std::sort(gaps.begin(), gaps.end());
        gaps.erase(std::unique(gaps.begin(), gaps.end()), gaps.end());
        auto near = [](int g, int a) { return g == a || g == a + 1; };
        auto add_pairs = [&](bool priority) {
          for (int ga : gaps)
            for (int gb : gaps) {
              if (ga > gb) continue;
              bool pri = (near(ga, t) && near(gb, h)) || (near(ga, h) && near(gb, t));
              if (pri != priority) continue;
              for (const auto& v : table.r2())
                for (Sign sg : {Sign::Plus, Sign::Minus})
                  out.push_back({kind, R2InsertSite{ga, gb, v.id, sg}});
            }
        };
        add_pairs(true);
        add_pairs(false);
        break;
      }
      case MoveKind::FH:
      case MoveKind::FT: {
        Role role = kind == MoveKind::FH ? Role::Head : Role::Tail;
        for (int q = 0; q < L; ++q) {
          const auto& e1 = s.endpoints[q];
          const auto& e2 = s.endpoints[(q + 1) % L];
          if (e1.role != role || e2.role != role) continue;
          if (e1.chord == e2.chord) continue;
          if (!in_set(e1.chord) || !in_set(e2.chord)) continue;
          if (!is_fresh(e1.chord) && !is_fresh(e2.chord)) continue;
          out.push_back({kind, TransposeSite{q}});
        }
        break;
      }
      case MoveKind::R3: {
        std::vector<int> starts;
        for (int q = 0; q < L; ++q) {
          const auto& e1 = s.endpoints[q];
          const auto& e2 = s.endpoints[(q + 1) % L];
          if (e1.chord != e2.chord && in_set(e1.chord) && in_set(e2.chord))
            starts.push_back(q);
        }
        for (std::size_t i = 0; i < starts.size(); ++i)
          for (std::size_t j = i + 1; j < starts.size(); ++j)
            for (std::size_t k = j + 1; k < starts.size(); ++k)
              for (const auto& v : table.r3()) {
                MoveInstance m{kind, R3Site{{starts[i], starts[j], starts[k]}, v.id}};
                if (is_legal(s, m, table)) out.push_back(std::move(m));
              }
        break;
      }
      case MoveKind::R2Remove: {
        for (const auto& v : table.r2()) {
          for (auto [ca, cb] : {std::pair{fresh1, fresh2}, std::pair{fresh2, fresh1}}) {
            MoveInstance m{kind, R2RemoveSite{ca, cb, v.id}};
            if (is_legal(s, m, table)) out.push_back(std::move(m));
          }
        }
        break;
      }
      default:
        break;
    }
    return out;
  }

  bool dfs(const GaussDiagram& s, int depth) {
    if (depth == 5) return exact_equal(s, target);
    auto cands = candidates(s, depth);
    for (int i = 0; i < static_cast<int>(cands.size()); ++i) {
      if (!is_legal(s, cands[i], table)) continue;
      GaussDiagram next = apply_move(s, cands[i], table);
      steps.push_back(cands[i]);
      path.push_back(i);
      if (dfs(next, depth + 1)) return true;
      steps.pop_back();
      path.pop_back();
    }
    return false;
  }

  bool follow(const GaussDiagram& s, int depth, const std::vector<int>& cached) {
    if (depth == 5) return exact_equal(s, target);
    auto cands = candidates(s, depth);
    int i = cached[depth];
    if (i >= static_cast<int>(cands.size())) return false;
    if (!is_legal(s, cands[i], table)) return false;
    steps.push_back(cands[i]);
    return follow(apply_move(s, cands[i], table), depth + 1, cached);
  }
};

// Local configuration key: kind, window order, signs, and the clamped cyclic
// spacing layout of the window and the two far endpoints.
std::string macro_signature(const GaussDiagram& d, MacroKind kind, int p, int t, int h,
                            bool head_first, Sign sa, Sign sb) {
  int L = d.size();
  std::vector<std::pair<int, char>> pts = {{p, 'W'}, {t, 'T'}, {h, 'H'}};
  for (auto& pt : pts) pt.first = (pt.first - p + L) % L;  // relative to window
  std::sort(pts.begin(), pts.end());
  std::string sig;
  sig += kind == MacroKind::FS ? 'S' : 'O';
  sig += head_first ? 'h' : 't';
  sig += sign_char(sa);
  sig += sign_char(sb);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    int next = pts[(i + 1) % pts.size()].first;
    int gap = (next - pts[i].first + L) % L;
    sig += pts[i].second;
    sig += std::to_string(std::min(gap, 6));
  }
  sig += 'L';
  sig += std::to_string(std::min(L, 12));
  return sig;
}

std::mutex g_macro_cache_mutex;
std::map<std::string, std::vector<int>> g_macro_cache;

}  // namespace

Trace expand_macro(const GaussDiagram& d, MacroKind kind, int p, const VariantTable& table) {
  int L = d.size();
  if (L < 2 || p < 0 || p >= L) throw MoveError("expand_macro: bad position");
  const Endpoint& e1 = d.endpoints[p];
  const Endpoint& e2 = d.endpoints[(p + 1) % L];
  if (e1.chord == e2.chord)
    throw MoveError("expand_macro: endpoints belong to the same chord");
  if (e1.role == e2.role)
    throw MoveError("expand_macro: endpoints are not a head/tail pair");
  bool head_first = e1.role == Role::Head;
  int ca = head_first ? e1.chord : e2.chord;  // head in window
  int cb = head_first ? e2.chord : e1.chord;  // tail in window
  Sign sa = d.sign_of(ca), sb = d.sign_of(cb);
  if (kind == MacroKind::FS && sa != sb)
    throw MoveError("expand_macro: FS requires equal signs");
  if (kind == MacroKind::FO && sa == sb)
    throw MoveError("expand_macro: FO requires opposite signs");

  MacroSearch search{table};
  search.target = d;
  std::swap(search.target.endpoints[p], search.target.endpoints[(p + 1) % L]);
  search.skeleton = kind == MacroKind::FS
                        ? std::array{MoveKind::R2Insert, MoveKind::FT, MoveKind::FH,
                                     MoveKind::R3, MoveKind::R2Remove}
                        : std::array{MoveKind::R2Insert, MoveKind::FH, MoveKind::R3,
                                     MoveKind::FT, MoveKind::R2Remove};
  search.chord_a = ca;
  search.chord_b = cb;
  search.fresh1 = d.max_label() + 1;
  search.fresh2 = d.max_label() + 2;
  search.window_p = p;

  int t = d.find(ca, Role::Tail);
  int h = d.find(cb, Role::Head);
  std::string sig = macro_signature(d, kind, p, t, h, head_first, sa, sb);

  {
    std::lock_guard<std::mutex> lock(g_macro_cache_mutex);
    auto it = g_macro_cache.find(sig);
    if (it != g_macro_cache.end()) {
      if (search.follow(d, 0, it->second)) {
        Trace out;
        out.steps = std::move(search.steps);
        out.macro_count = 1;
        return out;
      }
      search.steps.clear();
    }
  }

  if (!search.dfs(d, 0))
    throw MoveError("expand_macro: no expansion found (variant table too small?)");
  {
    std::lock_guard<std::mutex> lock(g_macro_cache_mutex);
    g_macro_cache.emplace(sig, search.path);
  }
  Trace out;
  out.steps = std::move(search.steps);
  out.macro_count = 1;
  return out;
}

// ---------------------------------------------------------------------------

std::pair<Trace, GaussDiagram> transpose_endpoints(const GaussDiagram& d, int p,
                                                   const VariantTable& table) {
  int L = d.size();
  if (L < 2 || p < 0 || p >= L) throw MoveError("transpose_endpoints: bad position");
  const Endpoint& e1 = d.endpoints[p];
  const Endpoint& e2 = d.endpoints[(p + 1) % L];
  if (e1.chord == e2.chord)
    throw MoveError("transpose_endpoints: endpoints belong to the same chord");
  Trace t;
  if (e1.role == e2.role) {
    MoveKind k = e1.role == Role::Head ? MoveKind::FH : MoveKind::FT;
    t.push({k, TransposeSite{p}});
  } else {
    bool equal_signs = d.sign_of(e1.chord) == d.sign_of(e2.chord);
    t = expand_macro(d, equal_signs ? MacroKind::FS : MacroKind::FO, p, table);
  }
  return {t, replay(d, t, table)};
}

std::pair<Trace, GaussDiagram> contract_chord(const GaussDiagram& d, int c,
                                              const VariantTable& table) {
  if (!d.signs.count(c)) throw MoveError("contract_chord: unknown chord " + std::to_string(c));
  Trace trace;
  GaussDiagram state = d;
  int L = state.size();
  int t = state.find(c, Role::Tail);
  int h = state.find(c, Role::Head);

  // Walk the head next to the tail.  Right walk ends with the head at t-1,
  // left walk at t+1; a walk whose final pair would span the basepoint is
  // not eligible (R1 removal sites are non-wrapping).
  int dist_right = (t - 1 - h + 2 * L) % L;
  int dist_left = (h - t - 1 + 2 * L) % L;
  bool right_ok = t != 0;
  bool left_ok = t != L - 1;
  bool go_right;
  if (right_ok && left_ok)
    go_right = dist_right <= dist_left;  // tie: increasing index
  else
    go_right = right_ok;
  int dist = go_right ? dist_right : dist_left;
  for (int i = 0; i < dist; ++i) {
    int q = go_right ? h : (h - 1 + L) % L;
    auto [t_step, next] = transpose_endpoints(state, q, table);
    trace.append(t_step);
    state = std::move(next);
    h = go_right ? (h + 1) % L : (h - 1 + L) % L;
  }
  MoveInstance removal{MoveKind::R1Remove, R1RemoveSite{c}};
  state = apply_move(state, removal, table);
  trace.push(removal);
  return {trace, std::move(state)};
}

Trace unknot(const GaussDiagram& d, const VariantTable& table) {
  Trace trace;
  GaussDiagram state = d;
  while (state.chord_count() > 0) {
    int L = state.size();
    int best = -1, best_gap = L + 1;
    for (const auto& [c, s] : state.signs) {
      (void)s;
      int t = state.find(c, Role::Tail), h = state.find(c, Role::Head);
      int gap = std::min((h - t + L) % L, (t - h + L) % L);
      if (gap < best_gap) { best_gap = gap; best = c; }
    }
    auto [t_step, next] = contract_chord(state, best, table);
    trace.append(t_step);
    state = std::move(next);
  }
  return trace;
}

namespace {

// Chord labels are reallocated when a trace is replayed, so an inverted
// step computed against the recorded forward state must have its chord
// references mapped onto the labels of the state actually being rebuilt.
// `recorded` and `actual` are structurally equal; the position-wise label
// bijection carries one onto the other.
MoveInstance relabel_chords(MoveInstance m, const GaussDiagram& recorded,
                            const GaussDiagram& actual) {
  std::map<int, int> to_actual;
  for (int i = 0; i < recorded.size(); ++i)
    to_actual[recorded.endpoints[i].chord] = actual.endpoints[i].chord;
  if (m.kind == MoveKind::R1Remove) {
    auto& s = std::get<R1RemoveSite>(m.site);
    s.chord = to_actual.at(s.chord);
  } else if (m.kind == MoveKind::R2Remove) {
    auto& s = std::get<R2RemoveSite>(m.site);
    s.chord_a = to_actual.at(s.chord_a);
    s.chord_b = to_actual.at(s.chord_b);
  }
  return m;
}

}  // namespace

Trace transform(const GaussDiagram& src, const GaussDiagram& dst, const VariantTable& table) {
  Trace out = unknot(src, table);
  Trace down = unknot(dst, table);

  // replay down from dst, recording pre-step states
  std::vector<GaussDiagram> states;
  states.reserve(down.length() + 1);
  states.push_back(dst);
  for (const auto& m : down.steps) states.push_back(apply_move(states.back(), m, table));

  GaussDiagram cur;  // unknot(src) ends at the empty diagram
  for (int k = down.length() - 1; k >= 0; --k) {
    MoveInstance inv = invert_move(down.steps[k], states[k], table);
    inv = relabel_chords(std::move(inv), states[k + 1], cur);
    cur = apply_move(cur, inv, table);
    out.push(std::move(inv));
  }
  out.macro_count += down.macro_count;
  return out;
}

TraceStats trace_stats(const Trace& t, const GaussDiagram* start, const VariantTable* table) {
  TraceStats st;
  st.total = t.length();
  st.macro_count = t.macro_count;
  for (const auto& m : t.steps) st.counts[kind_name(m.kind)]++;
  if (start) {
    const VariantTable& tab = table ? *table : VariantTable::builtin();
    GaussDiagram state = *start;
    st.peak_chords = state.chord_count();
    for (const auto& m : t.steps) {
      state = apply_move(state, m, tab);
      st.peak_chords = std::max(st.peak_chords, state.chord_count());
    }
  }
  return st;
}

std::string format_trace(const Trace& t) {
  std::ostringstream os;
  if (t.macro_count > 0) os << "# macros " << t.macro_count << "\n";
  for (const auto& m : t.steps) os << format_step(m) << "\n";
  return os.str();
}

Trace parse_trace(const std::string& text) {
  Trace t;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      std::istringstream cs(line.substr(first + 1));
      std::string word;
      int n = 0;
      if (cs >> word >> n && word == "macros") t.macro_count = n;
      continue;
    }
    t.push(parse_step(line));
  }
  return t;
}

}  // namespace gauss
