// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "gpv/projection.hpp"
#include "gpv/verify.hpp"

using namespace gpv;

namespace {

struct Criterion {
  int number;
  std::string title;
  double budget_seconds;
  std::function<std::vector<Check>()> run;
};

}  // namespace

int main() {
  constexpr std::uint64_t seed = 20240611;
  const std::vector<Criterion> criteria{
      {1, "s_inv inverts s", 10,
       [] { return std::vector{check_inverse_exhaustive(3), check_inverse_random(seed, 200, 6)}; }},
      {2, "s and s_inv keep double chords", 5, [] { return std::vector{check_double_preservation(seed, 200, 6)}; }},
      {3, "P is well defined", 120,
       [] {
         return std::vector{check_vassiliev_relation(seed, 50, 6), check_projection_faithful(seed, 10),
                            check_routing_independence(seed, 50, 5)};
       }},
      {4, "omega vanishes on descending diagrams", 120, [] { return std::vector{check_descending_omega(3)}; }},
      {5, "omega vanishes on all 3-chord diagrams", 600, [] { return std::vector{check_vanishing(3)}; }},
      {6, "formula equals c2", 300,
       [] { return std::vector{check_main_identity(omega_table(c2_invariant(), 2), seed, 10)}; }},
      {7, "Q is descending and keeps nu-bar s_inv", 300, [] { return std::vector{check_q_descending(seed, 50, 4)}; }},
      {8, "tree round trip", 10,
       [] { return std::vector{check_tree_roundtrip_exhaustive(3), check_tree_roundtrip_random(seed, 200, 6)}; }},
      {9, "oracle sanity", 60, [] { return std::vector{check_oracle_sanity(seed, 50)}; }},
      {10, "word formulas", 60,
       [] {
         return std::vector{check_word_vanishing(), check_word_formula(seed, 100, 8),
                            check_braid_linking_formula(seed, 100, 8)};
       }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    const auto checks = c.run();
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = seconds <= c.budget_seconds;
    std::string detail;
    for (const auto& check : checks) {
      pass = pass && check.pass;
      if (!detail.empty()) detail += "; ";
      detail += (check.pass ? "" : "FAILED ") + check.name + " (" + check.detail + ")";
    }
    failed += !pass;
    std::printf("%s criterion %d: %s [%.2fs of %.0fs] %s\n", pass ? "PASS" : "FAIL", c.number, c.title.c_str(),
                seconds, c.budget_seconds, detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
