#pragma once

#include <optional>
#include <random>
#include <vector>

#include "gpv/gauss_diagram.hpp"

namespace gpv {

/// Braid word letter: +i is sigma_i (strand moving right passes over), -i its
/// inverse. Strands are numbered 1..strands.
using BraidWord = std::vector<int>;

/// Long knot obtained by closing the braid and cutting at the bottom of the
/// first strand. Returns nullopt when the closure has more than one component.
std::optional<GaussDiagram> braid_closure_long_knot(const BraidWord& word, int strands);

/// Random braid whose closure is a knot, drawn with the given engine. The
/// length is bumped by one when its parity rules out a single component.
BraidWord random_knot_braid(std::mt19937_64& rng, int strands, int length);

}  // namespace gpv
