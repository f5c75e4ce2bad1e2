#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gauss/diagram.hpp"

namespace gauss {

enum class MoveKind { R1Insert, R1Remove, R2Insert, R2Remove, R3, FH, FT };

std::string kind_name(MoveKind k);

struct MoveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Site parameters.  Gap index g means "insert before endpoint g"; gaps run
// 0..2n inclusive.  Transposition positions are cyclic (p and p+1 mod 2n).
struct R1InsertSite {
  int gap = 0;
  Role first = Role::Tail;  // role of the first inserted endpoint
  Sign sign = Sign::Plus;
  auto operator<=>(const R1InsertSite&) const = default;
};
struct R1RemoveSite {
  int chord = 0;
  auto operator<=>(const R1RemoveSite&) const = default;
};
struct R2InsertSite {
  int gap_a = 0, gap_b = 0;  // gap_a <= gap_b, both in the pre-state indexing
  std::string variant;
  Sign sign_a = Sign::Plus;  // sign of the chord tagged 'a'; 'b' gets the opposite
  auto operator<=>(const R2InsertSite&) const = default;
};
struct R2RemoveSite {
  int chord_a = 0, chord_b = 0;  // tagged 'a'/'b' in the matched variant
  std::string variant;
  auto operator<=>(const R2RemoveSite&) const = default;
};
struct R3Site {
  std::array<int, 3> arcs{};  // arc start positions, ascending; arc i = (a_i, a_i+1 mod 2n)
  std::string variant;
  auto operator<=>(const R3Site&) const = default;
};
struct TransposeSite {  // FH / FT
  int pos = 0;
  auto operator<=>(const TransposeSite&) const = default;
};

struct MoveInstance {
  MoveKind kind = MoveKind::FH;
  std::variant<R1InsertSite, R1RemoveSite, R2InsertSite, R2RemoveSite, R3Site,
               TransposeSite>
      site;
  bool operator==(const MoveInstance&) const = default;
};

// ---------------------------------------------------------------------------
// Variant table

struct PatternEndpoint {
  int tag = 0;  // 0='a', 1='b', 2='c'
  Role role = Role::Tail;
  bool operator==(const PatternEndpoint&) const = default;
};

enum class SignConstraint { Opposite, Equal, Fixed };

struct R2Variant {
  std::string id;
  std::array<std::array<PatternEndpoint, 2>, 2> groups{};
  SignConstraint signs = SignConstraint::Opposite;
  std::array<Sign, 2> fixed{};  // when signs == Fixed
};

struct R3Variant {
  std::string id;
  std::array<std::array<PatternEndpoint, 2>, 3> arcs{};
  std::array<Sign, 3> signs{};  // fixed per tag
  std::string inverse_id;       // variant matching the post-swap state
};

/// Immutable catalog of legal oriented/signed patterns for moves II and III.
class VariantTable {
 public:
  static VariantTable from_json(const std::string& json_text);
  static VariantTable load_file(const std::string& path);
  /// Table compiled into the library.
  static const VariantTable& builtin();

  const std::vector<R2Variant>& r2() const { return r2_; }
  const std::vector<R3Variant>& r3() const { return r3_; }
  const R2Variant* find_r2(const std::string& id) const;
  const R3Variant* find_r3(const std::string& id) const;

 private:
  std::vector<R2Variant> r2_;
  std::vector<R3Variant> r3_;
};

// ---------------------------------------------------------------------------
// Operations

std::vector<MoveInstance> enumerate_moves(const GaussDiagram& d, MoveKind kind,
                                          const VariantTable& table);

/// Equivalent to `m` being produced by enumerate_moves(d, m.kind).
bool is_legal(const GaussDiagram& d, const MoveInstance& m, const VariantTable& table);

/// Applies a legal move; throws MoveError otherwise.
GaussDiagram apply_move(const GaussDiagram& d, const MoveInstance& m,
                        const VariantTable& table);

/// Instance legal on apply_move(d_before, m) that restores d_before exactly.
MoveInstance invert_move(const MoveInstance& m, const GaussDiagram& d_before,
                         const VariantTable& table);

std::string format_step(const MoveInstance& m);
MoveInstance parse_step(const std::string& line);

}  // namespace gauss
