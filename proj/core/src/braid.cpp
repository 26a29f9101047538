#include "gpv/braid.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace gpv {

std::optional<GaussDiagram> braid_closure_long_knot(const BraidWord& word, int strands) {
  if (strands < 1) throw std::invalid_argument("braid needs at least one strand");
  for (int g : word)
    if (g == 0 || std::abs(g) >= strands) throw std::invalid_argument("braid generator out of range");

  // Permutation of the braid, to check that the closure is connected.
  std::vector<int> perm(static_cast<std::size_t>(strands));
  std::iota(perm.begin(), perm.end(), 0);
  for (int g : word) {
    const int i = std::abs(g) - 1;
    for (auto& p : perm) {
      if (p == i) p = i + 1;
      else if (p == i + 1) p = i;
    }
  }
  // perm[s] = top position of the strand starting at bottom position s.
  int cycle = 0, p = 0;
  do { p = perm[static_cast<std::size_t>(p)]; ++cycle; } while (p != 0);
  if (cycle != strands) return std::nullopt;

  std::vector<std::uint32_t> labels;
  std::vector<Role> roles;
  std::vector<int> signs;
  int pos = 0;
  for (int round = 0; round < strands; ++round) {
    for (std::size_t k = 0; k < word.size(); ++k) {
      const int g = word[k];
      const int i = std::abs(g) - 1;
      if (pos != i && pos != i + 1) continue;
      const bool moving_right = pos == i;
      const bool over = moving_right == (g > 0);
      labels.push_back(static_cast<std::uint32_t>(k + 1));
      roles.push_back(over ? Role::Over : Role::Under);
      signs.push_back(g > 0 ? 1 : -1);
      pos = moving_right ? i + 1 : i;
    }
  }
  return GaussDiagram::from_passages(labels, roles, signs);
}

BraidWord random_knot_braid(std::mt19937_64& rng, int strands, int length) {
  if (strands < 2) return {};
  std::uniform_int_distribution<int> gen(1, strands - 1);
  std::bernoulli_distribution inv(0.5);
  // A full cycle on k strands has parity k-1, so only such lengths can close up.
  if (length % 2 != (strands - 1) % 2) ++length;
  for (;;) {
    BraidWord w;
    for (int i = 0; i < length; ++i) w.push_back(inv(rng) ? -gen(rng) : gen(rng));
    if (braid_closure_long_knot(w, strands)) return w;
  }
}

}  // namespace gpv
