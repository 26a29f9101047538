#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gpv/expansion.hpp"

namespace gpv {

struct Check {
  std::string name;
  std::string anchor;  // the property being checked, in words
  bool pass = false;
  std::string detail;
};

struct Report {
  std::string suite;
  std::vector<Check> checks;

  [[nodiscard]] bool pass() const;
  [[nodiscard]] std::string to_json() const;
  [[nodiscard]] std::string summary() const;
};

struct VerifyOptions {
  std::uint64_t seed = 20240611;
  int max_chords = 3;     // exhaustive range
  int random_chords = 6;  // upper bound for random diagrams
  int samples = 200;
  int degree = 2;
};

inline constexpr const char* kTrefoil = "O1+ U2+ O3+ U1+ O2+ U3+";
inline constexpr const char* kFigureEight = "O1+ U2- O3- U1+ O4+ U3- O2- U4+";

/// Seeded long knots from random braid closures, 3 to 5 strands.
std::vector<GaussDiagram> random_braid_knots(std::uint64_t seed, int count);

// Expansion
Check check_inverse_exhaustive(int kmax);
Check check_inverse_random(std::uint64_t seed, int count, int max_chords);
Check check_double_preservation(std::uint64_t seed, int count, int max_chords);
Check check_enumeration_counts(int kmax);

// Tree
Check check_tree_roundtrip_exhaustive(int kmax);
Check check_tree_roundtrip_random(std::uint64_t seed, int count, int max_chords);
Check check_descending_stable_under_s(std::uint64_t seed, int count);

// Projection
Check check_vassiliev_relation(std::uint64_t seed, int count, int max_chords);
Check check_projection_faithful(std::uint64_t seed, int braid_knots);
Check check_routing_independence(std::uint64_t seed, int count, int max_chords);
Check check_step2_invariance(std::uint64_t seed, int count);
Check check_normalize_termination(std::uint64_t seed, int count, int max_chords, int n);
Check check_descending_omega(int kmax);
Check check_vanishing(int chords);
Check check_main_identity(const FormulaTable& table, std::uint64_t seed, int braid_knots);
Check check_q_descending(std::uint64_t seed, int count, int max_chords);

// Oracle
Check check_oracle_sanity(std::uint64_t seed, int count);

// Words
Check check_word_inverse(std::uint64_t seed, int count, int max_length);
Check check_word_expansion(std::uint64_t seed, int count, int max_length);
Check check_word_vanishing();
Check check_word_formula(std::uint64_t seed, int count, int max_length);
Check check_braid_linking_formula(std::uint64_t seed, int count, int max_length);

/// lemma1 | lemma2 | lemma3 | main | words. Throws std::invalid_argument otherwise.
Report run_suite(const std::string& name, const VerifyOptions& opt);

}  // namespace gpv
