#pragma once

#include <cstdint>
#include <random>

#include "wienerlab/tree.hpp"

namespace wienerlab {

using Rng = std::mt19937_64;

// Uniform over labeled trees on n vertices (random Pruefer sequence).
Tree random_tree(std::size_t n, Rng& rng);

// A uniform random tree with two equal-depth brooms grafted onto one vertex,
// so it usually contains a special context. Order is at least min_order and
// at most max_order.
Tree random_broom_grafted_tree(std::size_t min_order, std::size_t max_order, Rng& rng);

// Decodes a Pruefer sequence over 0..n-1 (length n - 2).
Tree tree_from_pruefer(std::size_t n, const std::vector<Vertex>& code);

}  // namespace wienerlab
