#include <algorithm>
#include <string>
#include <vector>

#include "wienerlab/tree.hpp"

namespace wienerlab {

namespace {

struct Centers {
  Vertex first = 0;
  Vertex second = 0;
  bool bicentral = false;
};

Centers find_centers(const Tree& t) {
  const std::size_t n = t.order();
  auto farthest = [&](Vertex src, std::vector<Vertex>& parent) {
    std::vector<std::uint32_t> depth(n, UINT32_MAX);
    std::vector<Vertex> queue{src};
    depth[src] = 0;
    parent.assign(n, src);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      for (Vertex w : t.neighbors(u)) {
        if (depth[w] != UINT32_MAX) continue;
        depth[w] = depth[u] + 1;
        parent[w] = u;
        queue.push_back(w);
      }
    }
    return std::pair{queue.back(), depth[queue.back()]};
  };

  std::vector<Vertex> parent;
  const Vertex u = farthest(0, parent).first;
  const auto [v, length] = farthest(u, parent);
  std::vector<Vertex> path{v};
  while (path.back() != u) path.push_back(parent[path.back()]);

  Centers c;
  c.first = path[length / 2];
  if (length % 2 == 1) {
    c.second = path[length / 2 + 1];
    c.bicentral = true;
  }
  return c;
}

}  // namespace

std::string canonical_form(const Tree& t) {
  const std::size_t n = t.order();
  if (n == 1) return "0";

  const Centers centers = find_centers(t);

  // Root the tree (or both halves) and group vertices by depth.
  std::vector<Vertex> parent(n, 0);
  std::vector<std::uint32_t> depth(n, UINT32_MAX);
  std::vector<Vertex> order;
  order.reserve(n);
  auto seed = [&](Vertex r) {
    depth[r] = 0;
    parent[r] = r;
    order.push_back(r);
  };
  seed(centers.first);
  if (centers.bicentral) seed(centers.second);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Vertex u = order[head];
    for (Vertex w : t.neighbors(u)) {
      if (depth[w] != UINT32_MAX) continue;
      depth[w] = depth[u] + 1;
      parent[w] = u;
      order.push_back(w);
    }
  }

  const std::uint32_t height = depth[order.back()];
  std::vector<std::vector<Vertex>> levels(height + 1);
  for (Vertex v : order) levels[depth[v]].push_back(v);

  // Bottom-up AHU ranking: a vertex's signature is the sorted list of its
  // children's ranks; ranks are positions among the distinct signatures of
  // its level.
  std::vector<std::vector<std::uint32_t>> signature(n);
  std::vector<std::uint32_t> rank(n, 0);
  for (std::size_t k = levels.size(); k-- > 0;) {
    auto& level = levels[k];
    for (Vertex v : level) std::sort(signature[v].begin(), signature[v].end());
    std::sort(level.begin(), level.end(), [&](Vertex a, Vertex b) { return signature[a] < signature[b]; });
    std::uint32_t r = 0;
    for (std::size_t i = 0; i < level.size(); ++i) {
      if (i > 0 && signature[level[i - 1]] != signature[level[i]]) ++r;
      rank[level[i]] = r;
    }
    if (k == 0) break;
    for (Vertex v : level) signature[parent[v]].push_back(rank[v]);
  }

  std::vector<std::vector<Vertex>> children(n);
  for (std::size_t k = 1; k < levels.size(); ++k) {
    for (Vertex v : levels[k]) children[parent[v]].push_back(v);
  }
  for (auto& ch : children) {
    std::stable_sort(ch.begin(), ch.end(), [&](Vertex a, Vertex b) { return rank[a] < rank[b]; });
  }

  std::string out;
  auto emit = [&](Vertex root) {
    std::vector<Vertex> stack{root};
    bool first = true;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      if (!first) out += '.';
      first = false;
      out += std::to_string(depth[v]);
      const auto& ch = children[v];
      for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
    }
  };

  if (!centers.bicentral) {
    emit(centers.first);
  } else {
    Vertex lo = centers.first, hi = centers.second;
    if (rank[hi] < rank[lo]) std::swap(lo, hi);
    emit(lo);
    out += '|';
    emit(hi);
  }
  return out;
}

}  // namespace wienerlab
