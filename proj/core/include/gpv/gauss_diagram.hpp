#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gpv/formal_sum.hpp"

namespace gpv {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Role of one passage through a crossing. DOver/DUnder belong to double
/// chords and record the roles of the chord's positive resolution.
enum class Role : std::uint8_t { Over, Under, DOver, DUnder };

enum class ChordKind : std::uint8_t { Real, Double };

[[nodiscard]] constexpr bool is_double(Role r) {
  return r == Role::DOver || r == Role::DUnder;
}
[[nodiscard]] constexpr Role complement(Role r) {
  switch (r) {
    case Role::Over: return Role::Under;
    case Role::Under: return Role::Over;
    case Role::DOver: return Role::DUnder;
    case Role::DUnder: return Role::DOver;
  }
  return r;
}
/// True for the passage that runs on top (in the positive resolution for doubles).
[[nodiscard]] constexpr bool is_over(Role r) {
  return r == Role::Over || r == Role::DOver;
}

struct Passage {
  std::uint32_t chord = 0;  // 0-based, canonical: numbered by first passage
  Role role = Role::Over;
  auto operator<=>(const Passage&) const = default;
};

struct Chord {
  ChordKind kind = ChordKind::Real;
  int sign = 1;
  auto operator<=>(const Chord&) const = default;
};

/// Virtual long-knot diagram: passages along the line plus chord data.
///
/// Always held in canonical form (chords numbered by first passage), so the
/// defaulted comparison is structural equality of diagrams.
class GaussDiagram {
 public:
  GaussDiagram() = default;

  /// Builds a diagram from passages carrying arbitrary chord labels, one
  /// role and one sign per passage. Validates and canonicalizes.
  static GaussDiagram from_passages(std::span<const std::uint32_t> labels,
                                    std::span<const Role> roles,
                                    std::span<const int> signs);

  [[nodiscard]] std::size_t chord_count() const { return chords_.size(); }
  [[nodiscard]] std::size_t real_count() const;
  [[nodiscard]] std::size_t double_count() const;
  [[nodiscard]] bool empty() const { return passages_.empty(); }

  [[nodiscard]] const std::vector<Passage>& passages() const { return passages_; }
  [[nodiscard]] const std::vector<Chord>& chords() const { return chords_; }
  [[nodiscard]] const Chord& chord(std::uint32_t id) const;

  /// Positions (0-based) of the first and second passage of a chord.
  [[nodiscard]] std::size_t first_position(std::uint32_t id) const;
  [[nodiscard]] std::size_t second_position(std::uint32_t id) const;

  /// Role of the chord's first passage.
  [[nodiscard]] Role first_role(std::uint32_t id) const;

  /// Canonical text form, e.g. "O1+ U2+ U1+ O2+"; empty diagram gives "".
  [[nodiscard]] std::string key() const;

  auto operator<=>(const GaussDiagram&) const = default;

 private:
  std::vector<Passage> passages_;
  std::vector<Chord> chords_;
};

/// Parses the whitespace-separated token grammar ("O1+", "U1+", "DO2-", ...).
GaussDiagram parse_gauss(std::string_view text);

/// Crossing change of a real chord: roles exchanged, sign negated.
GaussDiagram switch_crossing(const GaussDiagram& d, std::uint32_t id);

/// A double chord as (positive resolution) - (switched resolution).
FormalSum<GaussDiagram> resolve_double(const GaussDiagram& d, std::uint32_t id);

/// Replaces a real chord by a double chord whose positive resolution is the
/// chord as it stands.
GaussDiagram make_double(const GaussDiagram& d, std::uint32_t id);

/// Keeps the given real chords and every double chord.
GaussDiagram subdiagram(const GaussDiagram& d, std::span<const std::uint32_t> keep_real);

/// Subdiagram keeping the real chords whose bit is set in `mask`, bit i
/// referring to the i-th real chord in canonical order.
GaussDiagram subdiagram_mask(const GaussDiagram& d, std::uint64_t mask);

/// Ids of the real chords in canonical order.
std::vector<std::uint32_t> real_chords(const GaussDiagram& d);

std::string to_text(const GaussDiagram& d);

}  // namespace gpv
