#pragma once

#include <functional>
#include <map>
#include <string>

#include "gpv/formal_sum.hpp"
#include "gpv/planar_diagram.hpp"

namespace gpv {

/// Integer Laurent polynomial in t. No zero coefficients are stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly constant(Coeff c) { LaurentPoly p; p.set(0, c); return p; }

  void set(int exponent, Coeff c);
  [[nodiscard]] Coeff at(int exponent) const;
  [[nodiscard]] const std::map<int, Coeff>& coefficients() const { return coeffs_; }
  [[nodiscard]] Coeff eval_at_one() const;
  [[nodiscard]] bool is_symmetric() const;
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  std::map<int, Coeff> coeffs_;
};

/// Alexander polynomial of the closure of a long knot, normalized so that it
/// is symmetric under t <-> 1/t and takes the value 1 at t = 1.
/// Throws std::invalid_argument on diagrams with double crossings.
LaurentPoly alexander(const PlanarDiagram& pd);

/// Second Conway coefficient: half the second derivative of the normalized
/// Alexander polynomial at t = 1.
Coeff c2(const PlanarDiagram& pd);

/// A knot invariant of declared finite type, evaluated on real diagrams.
struct Invariant {
  std::string name;
  int degree = 0;
  std::function<Coeff(const PlanarDiagram&)> evaluate;
};

Invariant c2_invariant();
Invariant zero_invariant();
/// Looks up a named invariant ("c2", "zero"); throws std::invalid_argument.
Invariant invariant_by_name(const std::string& name);

/// Value of the Vassiliev extension: each double crossing is resolved as
/// (recorded resolution) - (switched resolution) before evaluating.
Coeff eval_singular(const PlanarDiagram& pd, const Invariant& nu);
Coeff eval_singular(const FormalSum<PlanarDiagram>& x, const Invariant& nu);

}  // namespace gpv
