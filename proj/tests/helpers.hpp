#pragma once

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "wienerlab/tree.hpp"

namespace testing {

inline oracle::EdgeList edge_list(const wienerlab::Tree& t) { return {t.edges().begin(), t.edges().end()}; }

inline std::int64_t oracle_wiener(const wienerlab::Tree& t) { return oracle::wiener(t.order(), edge_list(t)); }

// Same tree under a random relabeling.
inline wienerlab::Tree relabel(const wienerlab::Tree& t, std::mt19937_64& rng) {
  std::vector<wienerlab::Vertex> perm(t.order());
  std::iota(perm.begin(), perm.end(), 0u);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<wienerlab::Edge> edges;
  for (const auto& [u, v] : t.edges()) edges.emplace_back(perm[u], perm[v]);
  std::shuffle(edges.begin(), edges.end(), rng);
  return wienerlab::tree_from_edges(t.order(), edges);
}

}  // namespace testing
