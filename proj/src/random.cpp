#include "wienerlab/random.hpp"

#include <algorithm>
#include <vector>

namespace wienerlab {

Tree tree_from_pruefer(std::size_t n, const std::vector<Vertex>& code) {
  if (n < 2 || code.size() != n - 2) throw Error(ErrorKind::kPrecondition, "Pruefer code must have length n - 2");
  std::vector<std::size_t> degree(n, 1);
  for (Vertex v : code) {
    if (v >= n) throw Error(ErrorKind::kPrecondition, "Pruefer label out of range");
    ++degree[v];
  }
  // Linear-time decoding: `ptr` scans for the smallest leaf, `leaf` is the
  // current smallest leaf.
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  std::size_t ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  std::size_t leaf = ptr;
  for (Vertex v : code) {
    edges.emplace_back(static_cast<Vertex>(leaf), v);
    if (--degree[v] == 1 && v < ptr) {
      leaf = v;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(static_cast<Vertex>(leaf), static_cast<Vertex>(n - 1));
  return tree_from_edges(n, edges);
}

Tree random_tree(std::size_t n, Rng& rng) {
  if (n == 1) return tree_from_edges(1, {});
  if (n == 2) return tree_from_edges(2, {{0, 1}});
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  std::vector<Vertex> code(n - 2);
  for (auto& v : code) v = pick(rng);
  return tree_from_pruefer(n, code);
}

Tree random_broom_grafted_tree(std::size_t min_order, std::size_t max_order, Rng& rng) {
  if (min_order < 8 || max_order < min_order) {
    throw Error(ErrorKind::kPrecondition, "grafted trees need 8 <= min_order <= max_order");
  }
  const std::size_t n = std::uniform_int_distribution<std::size_t>(min_order, max_order)(rng);
  // Each broom has p - 1 path vertices and t leaves; keep at least two base vertices.
  const std::size_t budget = n - 2;
  const std::size_t max_depth = std::max<std::size_t>(2, std::min<std::size_t>(6, budget / 2));
  const std::size_t p = std::uniform_int_distribution<std::size_t>(2, max_depth)(rng);
  const std::size_t leaf_room = budget - 2 * (p - 1);  // >= 2
  const std::size_t t1 = std::uniform_int_distribution<std::size_t>(1, std::max<std::size_t>(1, leaf_room / 2))(rng);
  const std::size_t t2 =
      std::uniform_int_distribution<std::size_t>(1, std::max<std::size_t>(1, std::min(leaf_room - t1, leaf_room / 2)))(rng);
  const std::size_t base_order = n - 2 * (p - 1) - t1 - t2;

  const Tree base = random_tree(base_order, rng);
  std::vector<Edge> edges(base.edges().begin(), base.edges().end());
  const Vertex x = std::uniform_int_distribution<Vertex>(0, static_cast<Vertex>(base_order - 1))(rng);
  auto next = static_cast<Vertex>(base_order);
  auto graft = [&](std::size_t leaves) {
    Vertex prev = x;
    for (std::size_t i = 0; i + 1 < p; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
    for (std::size_t i = 0; i < leaves; ++i) edges.emplace_back(prev, next++);
  };
  graft(t1);
  graft(t2);
  return tree_from_edges(n, edges);
}

}  // namespace wienerlab
