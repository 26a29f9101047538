#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "gpv/formal_sum.hpp"
#include "gpv/gauss_diagram.hpp"

namespace gpv {

using DiagramSum = FormalSum<GaussDiagram>;

/// Sum over all subsets of real chords; double chords are kept in every term.
DiagramSum s(const DiagramSum& x);
DiagramSum s(const GaussDiagram& d);

/// Signed subdiagram sum, (-1)^(number of real chords removed).
DiagramSum s_inv(const DiagramSum& x);
DiagramSum s_inv(const GaussDiagram& d);

/// Every real-chord diagram with 0..kmax chords, sorted by canonical key.
std::vector<GaussDiagram> enumerate(int kmax);

/// (2k-1)!! * 4^k.
std::uint64_t diagram_count(int k);

/// Uniformly random pairing of 2*chords positions with random roles and
/// signs; the first `doubles` chords (by first passage) become double.
GaussDiagram random_diagram(std::mt19937_64& rng, int chords, int doubles = 0);

/// All ways of turning some chords of the enumerated real diagrams into
/// double chords, up to kmax chords in total. Sorted by key, no repeats.
std::vector<GaussDiagram> enumerate_mixed(int kmax);

struct FormulaTable {
  int degree = 0;
  std::string invariant;
  std::map<GaussDiagram, Coeff> entries;  // zero entries never stored

  void set(const GaussDiagram& d, Coeff c);
  [[nodiscard]] Coeff at(const GaussDiagram& d) const;
};

/// Sum of table entries over the subdiagrams of d.
Coeff eval_formula(const FormulaTable& table, const GaussDiagram& d);

std::string to_json(const FormulaTable& table);
FormulaTable formula_table_from_json(const std::string& text);

}  // namespace gpv
