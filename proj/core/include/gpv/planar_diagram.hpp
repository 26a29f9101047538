#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "gpv/formal_sum.hpp"
#include "gpv/gauss_diagram.hpp"

namespace gpv {

/// One crossing of a planar diagram. Arcs are listed counterclockwise starting
/// from the incoming under-strand ("pd-ccw-under-in"). For a double crossing
/// the roles are those of its positive resolution.
struct PlanarCrossing {
  std::array<int, 4> arcs{};
  int sign = 1;
  ChordKind kind = ChordKind::Real;
  auto operator<=>(const PlanarCrossing&) const = default;
};

/// Realized long-knot diagram as a crossing list. `strand` lists the arc labels
/// in traversal order; the first and last label are the two open ends.
struct PlanarDiagram {
  std::vector<PlanarCrossing> crossings;
  std::vector<int> strand;

  [[nodiscard]] std::size_t double_count() const;
  [[nodiscard]] std::string key() const;
  auto operator<=>(const PlanarDiagram&) const = default;
};

inline constexpr const char* kPdConvention = "pd-ccw-under-in";

/// Reads a signed Gauss code as the planar diagram it describes. The code is
/// trusted to be realizable; arcs are numbered 1..2n+1 along the strand.
PlanarDiagram planar_from_gauss(const GaussDiagram& d);

/// Re-reads a planar diagram as a Gauss diagram by traversing its strand.
GaussDiagram gauss_from_planar(const PlanarDiagram& pd);

/// Checks the single-open-strand invariant; throws std::invalid_argument.
void validate(const PlanarDiagram& pd);

/// The diagram with one crossing's over/under exchanged (sign negated).
PlanarDiagram switch_planar(const PlanarDiagram& pd, std::size_t index);

std::string to_text(const PlanarDiagram& pd);

/// {"convention":"pd-ccw-under-in","crossings":[{"arcs","sign","kind"}],"strand":[...]}
std::string to_json(const PlanarDiagram& pd);

/// Parses and validates PlanarDiagram JSON. A "convention" field, when
/// present, must be "pd-ccw-under-in". Throws std::invalid_argument.
PlanarDiagram planar_from_json(const std::string& text);

/// {"convention":...,"terms":[{"coeff":c,"diagram":{...}}]}, terms in key order.
std::string to_json(const FormalSum<PlanarDiagram>& x);

}  // namespace gpv
