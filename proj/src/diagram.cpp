#include "gauss/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>

namespace gauss {

int GaussDiagram::find(int chord, Role role) const {
  for (int i = 0; i < size(); ++i)
    if (endpoints[i].chord == chord && endpoints[i].role == role) return i;
  return -1;
}

Sign GaussDiagram::sign_of(int chord) const {
  auto it = signs.find(chord);
  if (it == signs.end()) throw std::out_of_range("unknown chord " + std::to_string(chord));
  return it->second;
}

int GaussDiagram::max_label() const {
  return signs.empty() ? 0 : signs.rbegin()->first;
}

GaussDiagram parse_gauss_code(std::string_view text) {
  GaussDiagram d;
  std::size_t i = 0;
  auto fail = [&](const std::string& msg) {
    throw ParseError(msg + " (at offset " + std::to_string(i) + ")");
  };
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) { ++i; continue; }
    char rc = text[i];
    if (rc != 'O' && rc != 'U') fail(std::string("expected 'O' or 'U', got '") + rc + "'");
    ++i;
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '0')
      fail("expected label [1-9][0-9]*");
    int label = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      label = label * 10 + (text[i] - '0');
      if (label > 1'000'000) fail("label too large");
      ++i;
    }
    if (i >= text.size() || (text[i] != '+' && text[i] != '-')) fail("expected sign '+' or '-'");
    Sign s = text[i] == '+' ? Sign::Plus : Sign::Minus;
    ++i;
    Role role = rc == 'O' ? Role::Tail : Role::Head;
    auto it = d.signs.find(label);
    if (it != d.signs.end() && it->second != s)
      throw ParseError("sign mismatch for label " + std::to_string(label));
    d.signs.emplace(label, s);
    d.endpoints.push_back({label, role});
  }
  auto violations = validate(d);
  if (!violations.empty()) throw ParseError(violations.front().message);
  return d;
}

std::string serialize(const GaussDiagram& d) {
  std::map<int, int> relabel;
  std::string out;
  for (const auto& e : d.endpoints) {
    auto [it, fresh] = relabel.emplace(e.chord, static_cast<int>(relabel.size()) + 1);
    out += role_char(e.role);
    out += std::to_string(it->second);
    out += sign_char(d.sign_of(e.chord));
  }
  return out;
}

std::vector<Violation> validate(const GaussDiagram& d) {
  std::vector<Violation> out;
  std::map<int, std::pair<int, int>> counts;  // chord -> (tails, heads)
  for (int i = 0; i < d.size(); ++i) {
    const auto& e = d.endpoints[i];
    if (e.chord <= 0)
      out.push_back({e.chord, i, "non-positive chord label at index " + std::to_string(i)});
    auto& c = counts[e.chord];
    (e.role == Role::Tail ? c.first : c.second)++;
  }
  for (const auto& [chord, c] : counts) {
    if (c.first + c.second != 2)
      out.push_back({chord, -1, "chord " + std::to_string(chord) + " occurs " +
                                    std::to_string(c.first + c.second) + " times, expected 2"});
    else if (c.first != 1)
      out.push_back({chord, -1, "chord " + std::to_string(chord) + " has " +
                                    std::to_string(c.first) + " tails and " +
                                    std::to_string(c.second) + " heads"});
    if (!d.signs.count(chord))
      out.push_back({chord, -1, "chord " + std::to_string(chord) + " has no sign entry"});
  }
  for (const auto& [chord, s] : d.signs) {
    (void)s;
    if (!counts.count(chord))
      out.push_back({chord, -1,
                     "sign entry for absent chord " + std::to_string(chord)});
  }
  return out;
}

static GaussDiagram rotated(const GaussDiagram& d, int r) {
  GaussDiagram out;
  out.signs = d.signs;
  int n = d.size();
  out.endpoints.reserve(n);
  for (int i = 0; i < n; ++i) out.endpoints.push_back(d.endpoints[(i + r) % n]);
  return out;
}

std::string canonical_form(const GaussDiagram& d) {
  if (d.empty()) return "";
  std::string best = serialize(d);
  for (int r = 1; r < d.size(); ++r) best = std::min(best, serialize(rotated(d, r)));
  return best;
}

bool diagrams_equal(const GaussDiagram& a, const GaussDiagram& b) {
  return canonical_form(a) == canonical_form(b);
}

bool exact_equal(const GaussDiagram& a, const GaussDiagram& b) {
  return a.size() == b.size() && serialize(a) == serialize(b);
}

bool interleaved(const GaussDiagram& d, int c1, int c2) {
  if (c1 == c2) throw std::invalid_argument("interleaved: chords must differ");
  int a = d.find(c1, Role::Tail), b = d.find(c1, Role::Head);
  int x = d.find(c2, Role::Tail), y = d.find(c2, Role::Head);
  if (a < 0 || b < 0) throw std::out_of_range("unknown chord " + std::to_string(c1));
  if (x < 0 || y < 0) throw std::out_of_range("unknown chord " + std::to_string(c2));
  if (a > b) std::swap(a, b);
  auto inside = [&](int p) { return p > a && p < b; };
  return inside(x) != inside(y);
}

int interleave_count(const GaussDiagram& d, int c) {
  int count = 0;
  for (const auto& [other, s] : d.signs) {
    (void)s;
    if (other != c && interleaved(d, c, other)) ++count;
  }
  return count;
}

GaussDiagram random_diagram(int n, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("random_diagram: n must be >= 0");
  std::mt19937_64 rng(seed);
  GaussDiagram d;
  for (int c = 1; c <= n; ++c) {
    d.endpoints.push_back({c, Role::Tail});
    d.endpoints.push_back({c, Role::Head});
  }
  std::shuffle(d.endpoints.begin(), d.endpoints.end(), rng);
  for (int c = 1; c <= n; ++c)
    d.signs.emplace(c, rng() % 2 ? Sign::Plus : Sign::Minus);
  return d;
}

}  // namespace gauss
