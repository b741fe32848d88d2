#include "wienerlab/transforms.hpp"

#include <algorithm>
#include <tuple>

namespace wienerlab {

namespace {

// One component of T - x seen from the neighbor `root`.
struct Component {
  Vertex root = 0;
  std::vector<Vertex> vertices;
  std::size_t broom_count = 0;
  Vertex broom = 0;
  std::uint32_t leaf_depth = 0;  // common depth from x of the T-leaves, if equal
  bool equal_depth = true;
  std::size_t leaf_count = 0;
  Vertex first_leaf = 0;
};

Component scan_component(const Tree& t, Vertex x, Vertex root, const std::vector<bool>& is_broom,
                         std::vector<Vertex>& mark, std::vector<std::uint32_t>& depth) {
  Component c;
  c.root = root;
  c.first_leaf = static_cast<Vertex>(t.order());
  mark[x] = root;
  mark[root] = root;
  depth[root] = 1;
  c.vertices.push_back(root);
  bool any_leaf = false;
  for (std::size_t head = 0; head < c.vertices.size(); ++head) {
    const Vertex u = c.vertices[head];
    if (is_broom[u]) {
      ++c.broom_count;
      c.broom = u;
    }
    if (t.is_leaf(u)) {
      if (any_leaf && depth[u] != c.leaf_depth) c.equal_depth = false;
      c.leaf_depth = depth[u];
      any_leaf = true;
      ++c.leaf_count;
      c.first_leaf = std::min(c.first_leaf, u);
    }
    for (Vertex w : t.neighbors(u)) {
      if (mark[w] == root) continue;
      mark[w] = root;
      depth[w] = depth[u] + 1;
      c.vertices.push_back(w);
    }
  }
  std::sort(c.vertices.begin(), c.vertices.end());
  return c;
}

// A single-broom-vertex component is automatically a broom: a path from the
// root to the broom vertex with every leaf hanging off its far end. Check it
// anyway so a context never describes anything else.
bool broom_shaped(const Tree& t, const Component& c) {
  if (c.broom_count != 1 || !c.equal_depth || c.leaf_count == 0) return false;
  const std::size_t p = c.leaf_depth;
  if (c.vertices.size() != p + c.leaf_count - 1) return false;
  const auto nb = t.neighbors(c.broom);
  const auto at_broom = std::count_if(nb.begin(), nb.end(), [&](Vertex w) { return t.is_leaf(w); });
  return static_cast<std::size_t>(at_broom) == c.leaf_count;
}

}  // namespace

SpecialContext SpecialContext::swapped() const {
  SpecialContext s = *this;
  std::swap(s.first_component, s.second_component);
  std::swap(s.first_broom, s.second_broom);
  std::swap(s.first_witness, s.second_witness);
  std::swap(s.first_leaves, s.second_leaves);
  return s;
}

SpecialScan special_scan(const Tree& t) {
  const std::size_t n = t.order();
  SpecialScan out;
  if (n < 5) return out;

  std::vector<bool> is_broom(n, false);
  for (Vertex v : broom_vertices(t)) is_broom[v] = true;
  const std::uint32_t diam = diameter(t);

  std::vector<Vertex> mark(n, static_cast<Vertex>(n));
  std::vector<std::uint32_t> depth(n, 0);
  for (Vertex x = 0; x < n; ++x) {
    if (t.degree(x) < 3) continue;
    std::fill(mark.begin(), mark.end(), static_cast<Vertex>(n));
    std::vector<Component> brooms;
    for (Vertex root : t.neighbors(x)) {
      Component c = scan_component(t, x, root, is_broom, mark, depth);
      if (c.broom_count == 1) brooms.push_back(std::move(c));
    }
    std::sort(brooms.begin(), brooms.end(),
              [](const Component& a, const Component& b) { return a.vertices.front() < b.vertices.front(); });

    for (std::size_t i = 0; i < brooms.size(); ++i) {
      for (std::size_t j = i + 1; j < brooms.size(); ++j) {
        const Component& c1 = brooms[i];
        const Component& c2 = brooms[j];
        const bool shaped = broom_shaped(t, c1) && broom_shaped(t, c2);
        if (shaped && c1.leaf_depth == c2.leaf_depth && 2 * c1.leaf_depth < diam) {
          SpecialContext ctx;
          ctx.order = n;
          ctx.special = x;
          ctx.first_component = c1.vertices;
          ctx.second_component = c2.vertices;
          ctx.first_broom = c1.broom;
          ctx.second_broom = c2.broom;
          ctx.first_witness = c1.first_leaf;
          ctx.second_witness = c2.first_leaf;
          ctx.depth = c1.leaf_depth;
          ctx.first_leaves = c1.leaf_count;
          ctx.second_leaves = c2.leaf_count;
          out.contexts.push_back(std::move(ctx));
        } else {
          NearMiss miss;
          miss.special = x;
          miss.first_root = c1.root;
          miss.second_root = c2.root;
          miss.first_depth = c1.leaf_depth;
          miss.second_depth = c2.leaf_depth;
          miss.reason = (shaped && c1.leaf_depth == c2.leaf_depth) ? NearMiss::Reason::kDiametral
                                                                   : NearMiss::Reason::kUnequalDepth;
          out.near_misses.push_back(miss);
        }
      }
    }
  }

  std::sort(out.contexts.begin(), out.contexts.end(), [](const SpecialContext& a, const SpecialContext& b) {
    return std::tuple(a.special, a.first_component.front(), a.second_component.front()) <
           std::tuple(b.special, b.first_component.front(), b.second_component.front());
  });
  return out;
}

std::vector<SpecialContext> find_special_contexts(const Tree& t) { return special_scan(t).contexts; }

Tree relocate_broom(const Tree& t, const SpecialContext& ctx) {
  // The context (in either orientation) must be one the scan finds now.
  const auto current = find_special_contexts(t);
  const bool known = std::any_of(current.begin(), current.end(), [&](const SpecialContext& c) {
    return c == ctx || c.swapped() == ctx;
  });
  if (ctx.order != t.order() || !known) {
    throw Error(ErrorKind::kDomain, "stale special context: it does not describe this tree");
  }

  std::vector<bool> moved(t.order(), false);
  for (Vertex v : ctx.second_component) moved[v] = true;

  std::vector<Edge> edges;
  edges.reserve(t.order() - 1);
  for (const Edge& e : t.edges()) {
    if (!moved[e.first] && !moved[e.second]) edges.push_back(e);
  }
  for (Vertex v : ctx.second_component) edges.emplace_back(ctx.first_broom, v);
  return tree_from_edges(t.order(), edges);
}

std::int64_t predicted_broom_delta_full(std::int64_t outside_second, std::int64_t rest, std::int64_t p,
                                        std::int64_t t1, std::int64_t t2) {
  const std::int64_t moved = p + t2 - 1;  // |V(T2)|
  // p(p-1)(3 t2 + p - 2)/6 = C(p,3) + t2 C(p,2), kept integral.
  const std::int64_t inner_wiener = p * (p - 1) * (p - 2) / 6 + t2 * (p * (p - 1) / 2);
  // (p/2)(p - 1 + 2 t2) = C(p,2) + p t2
  const std::int64_t spread = p * (p - 1) / 2 + p * t2;
  return moved * (moved - 1) - inner_wiener - t2 * (t2 - 1) + outside_second * (moved - spread) +
         moved * (p - 1) * (rest - t1);
}

std::int64_t predicted_broom_delta_full(const SpecialContext& ctx) {
  return predicted_broom_delta_full(ctx.outside_second(), ctx.rest(), ctx.depth,
                                    static_cast<std::int64_t>(ctx.first_leaves),
                                    static_cast<std::int64_t>(ctx.second_leaves));
}

std::int64_t predicted_broom_delta_reduced(std::int64_t t1, std::int64_t t2, std::int64_t p, std::int64_t n) {
  const std::int64_t bracket = 12 * (t1 - 1) * (p + t2 - 1) + p * (-3 * n - 5 + 12 * t2 + 10 * p);
  // (p-1) p (10p - 5 - 3n + 12 t2) is divisible by 6, so the division is exact.
  const std::int64_t numerator = (p - 1) * bracket;
  if (numerator % 6 != 0) {
    throw Error(ErrorKind::kInvariant, "reduced broom delta is not integral");
  }
  return -numerator / 6;
}

bool keep_inequality(std::int64_t t1, std::int64_t t2, std::int64_t p, std::int64_t n) {
  if (p < 2) throw Error(ErrorKind::kPrecondition, "keep inequality needs p >= 2");
  // The denominator 12(p + t2 - 1) is positive, so cross-multiply.
  const __int128 lhs = static_cast<__int128>(12) * (t1 - 1) * (p + t2 - 1);
  const __int128 rhs = static_cast<__int128>(p) * (3 * n + 5 - 12 * t2 - 10 * p);
  if (p + t2 - 1 <= 0) throw Error(ErrorKind::kPrecondition, "keep inequality needs p + t2 > 1");
  return lhs >= rhs;
}

LeafPath leaf_path(const Tree& t, Vertex x, Vertex y) {
  const std::size_t n = t.order();
  if (x >= n || y >= n) throw Error(ErrorKind::kDomain, "leaf label out of range");
  if (x == y) throw Error(ErrorKind::kDomain, "leaves must be distinct");
  if (!t.is_leaf(x)) throw Error(ErrorKind::kDomain, "vertex " + std::to_string(x) + " is not a leaf");
  if (!t.is_leaf(y)) throw Error(ErrorKind::kDomain, "vertex " + std::to_string(y) + " is not a leaf");

  const auto from_x = distances_from(t, x).distances;
  LeafPath lp;
  lp.from = x;
  lp.to = y;
  lp.length = from_x[y];

  // Walk back from y along strictly decreasing distance.
  std::vector<Vertex> path{y};
  while (path.back() != x) {
    const Vertex u = path.back();
    for (Vertex w : t.neighbors(u)) {
      if (from_x[w] + 1 == from_x[u]) {
        path.push_back(w);
        break;
      }
    }
  }
  std::reverse(path.begin(), path.end());
  lp.vertices = path;

  // Flood from every path vertex at once; each off-path vertex is credited to
  // the path vertex it hangs from.
  std::vector<std::int64_t> owner(n, -1);
  std::vector<Vertex> queue;
  for (std::size_t i = 0; i < path.size(); ++i) {
    owner[path[i]] = static_cast<std::int64_t>(i);
    queue.push_back(path[i]);
  }
  lp.hanging.assign(lp.length > 0 ? lp.length - 1 : 0, 1);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : t.neighbors(u)) {
      if (owner[w] != -1) continue;
      owner[w] = owner[u];
      queue.push_back(w);
      ++lp.hanging[static_cast<std::size_t>(owner[w]) - 1];
    }
  }
  return lp;
}

Tree relocate_leaf(const Tree& t, Vertex x, Vertex y) {
  if (t.order() < 3) throw Error(ErrorKind::kPrecondition, "leaf relocation needs n >= 3");
  const LeafPath lp = leaf_path(t, x, y);
  const Vertex y_neighbor = lp.vertices[lp.vertices.size() - 2];

  std::vector<Edge> edges;
  edges.reserve(t.order() - 1);
  for (const Edge& e : t.edges()) {
    if (e.first != x && e.second != x) edges.push_back(e);
  }
  edges.emplace_back(y_neighbor, x);
  return tree_from_edges(t.order(), edges);
}

std::int64_t predicted_leaf_delta(const LeafPath& lp) {
  const auto r = static_cast<std::int64_t>(lp.length);
  std::int64_t delta = -(r - 2);
  for (std::int64_t i = 1; i < r; ++i) {
    delta += (r - 2 * i) * static_cast<std::int64_t>(lp.hanging[static_cast<std::size_t>(i - 1)]);
  }
  return delta;
}

}  // namespace wienerlab
