#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gauss {

/// Local writhe of a crossing.
enum class Sign : int { Plus = +1, Minus = -1 };

/// Which passage of a crossing an endpoint records.  A chord points from
/// its Tail (overcrossing passage, token 'O') to its Head (undercrossing
/// passage, token 'U').
enum class Role : std::uint8_t { Tail, Head };

inline Sign opposite(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
inline char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }
inline char role_char(Role r) { return r == Role::Tail ? 'O' : 'U'; }

struct Endpoint {
  int chord = 0;
  Role role = Role::Tail;
  auto operator<=>(const Endpoint&) const = default;
};

/// Oriented circle of 2n chord endpoints with a basepoint at index 0.
/// Chord labels are arbitrary positive integers with no semantic content;
/// structural equality relabels by first occurrence.
struct GaussDiagram {
  std::vector<Endpoint> endpoints;
  std::map<int, Sign> signs;

  int size() const { return static_cast<int>(endpoints.size()); }
  int chord_count() const { return static_cast<int>(signs.size()); }
  bool empty() const { return endpoints.empty(); }

  /// Position of the given endpoint; -1 if absent.
  int find(int chord, Role role) const;
  Sign sign_of(int chord) const;
  int max_label() const;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One violated diagram invariant.
struct Violation {
  int chord = 0;  ///< offending chord label (0 when positional)
  int index = -1; ///< offending endpoint index, if applicable
  std::string message;
};

GaussDiagram parse_gauss_code(std::string_view text);
std::string serialize(const GaussDiagram& d);
std::vector<Violation> validate(const GaussDiagram& d);

/// Lexicographically least serialization over all basepoint rotations.
std::string canonical_form(const GaussDiagram& d);

/// Basepoint-independent equality (canonical forms coincide).
bool diagrams_equal(const GaussDiagram& a, const GaussDiagram& b);

/// Basepoint-respecting structural equality: equal after relabeling chords
/// by first occurrence.  serialize() is a faithful encoding of this.
bool exact_equal(const GaussDiagram& a, const GaussDiagram& b);

/// True iff exactly one endpoint of c2 lies strictly inside one of the two
/// arcs bounded by c1's endpoints (the chords cross when drawn).
bool interleaved(const GaussDiagram& d, int c1, int c2);

/// Number of chords interleaved with c.
int interleave_count(const GaussDiagram& d, int c);

/// Deterministic pseudo-random valid diagram with n chords.
GaussDiagram random_diagram(int n, std::uint64_t seed);

}  // namespace gauss
