#include "wienerlab/tree.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace wienerlab {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse: return "parse";
    case ErrorKind::kValidation: return "validation";
    case ErrorKind::kPrecondition: return "precondition";
    case ErrorKind::kDomain: return "domain";
    case ErrorKind::kInvariant: return "invariant";
  }
  return "unknown";
}

const char* to_string(Violation v) {
  switch (v) {
    case Violation::kEmpty: return "empty";
    case Violation::kTooLarge: return "too-large";
    case Violation::kOutOfRange: return "out-of-range";
    case Violation::kSelfLoop: return "self-loop";
    case Violation::kDuplicateEdge: return "duplicate-edge";
    case Violation::kCycle: return "cycle";
    case Violation::kDisconnected: return "disconnected";
  }
  return "unknown";
}

namespace {

std::string edge_text(const Edge& e) {
  return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), Vertex{0});
  }

  Vertex find(Vertex v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  bool unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<Vertex> parent_;
};

// Breadth-first order from `root`, with parents. Shared by most traversals.
struct Bfs {
  std::vector<Vertex> order;
  std::vector<Vertex> parent;
  std::vector<std::uint32_t> depth;
};

Bfs bfs(const Tree& t, Vertex root) {
  const std::size_t n = t.order();
  Bfs out;
  out.order.reserve(n);
  out.parent.assign(n, root);
  out.depth.assign(n, 0);
  std::vector<bool> seen(n, false);
  out.order.push_back(root);
  seen[root] = true;
  for (std::size_t head = 0; head < out.order.size(); ++head) {
    const Vertex u = out.order[head];
    for (Vertex w : t.neighbors(u)) {
      if (seen[w]) continue;
      seen[w] = true;
      out.parent[w] = u;
      out.depth[w] = out.depth[u] + 1;
      out.order.push_back(w);
    }
  }
  return out;
}

void check_vertex(const Tree& t, Vertex v) {
  if (v >= t.order()) {
    throw Error(ErrorKind::kPrecondition,
                "vertex " + std::to_string(v) + " out of range for order " + std::to_string(t.order()));
  }
}

}  // namespace

Tree tree_from_edges(std::size_t n, std::span<const Edge> edges) {
  if (n == 0) throw ValidationError(Violation::kEmpty, "order must be at least 1");
  if (n > kMaxOrder) {
    throw ValidationError(Violation::kTooLarge,
                          "order " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder));
  }

  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges.size() * 2);
  DisjointSets sets(n);
  for (const Edge& e : edges) {
    if (e.first >= n || e.second >= n) {
      throw ValidationError(Violation::kOutOfRange, "edge " + edge_text(e) + " with n=" + std::to_string(n));
    }
    if (e.first == e.second) throw ValidationError(Violation::kSelfLoop, "edge " + edge_text(e));
    const auto lo = std::min(e.first, e.second);
    const auto hi = std::max(e.first, e.second);
    if (!seen.insert((std::uint64_t{lo} << 32) | hi).second) {
      throw ValidationError(Violation::kDuplicateEdge, "edge " + edge_text(e));
    }
    if (!sets.unite(e.first, e.second)) {
      throw ValidationError(Violation::kCycle, "edge " + edge_text(e) + " closes a cycle");
    }
  }
  if (edges.size() != n - 1) {
    throw ValidationError(Violation::kDisconnected, std::to_string(edges.size()) + " edges for " +
                                                        std::to_string(n) + " vertices");
  }

  Tree t;
  t.edges_.assign(edges.begin(), edges.end());
  t.offsets_.assign(n + 1, 0);
  for (const Edge& e : edges) {
    ++t.offsets_[e.first + 1];
    ++t.offsets_[e.second + 1];
  }
  std::partial_sum(t.offsets_.begin(), t.offsets_.end(), t.offsets_.begin());
  t.adjacency_.resize(2 * edges.size());
  std::vector<std::size_t> fill(t.offsets_.begin(), t.offsets_.end() - 1);
  for (const Edge& e : edges) {
    t.adjacency_[fill[e.first]++] = e.second;
    t.adjacency_[fill[e.second]++] = e.first;
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(t.adjacency_.begin() + t.offsets_[v], t.adjacency_.begin() + t.offsets_[v + 1]);
  }
  return t;
}

Tree path_tree(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return tree_from_edges(n, edges);
}

Tree star_tree(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
  return tree_from_edges(n, edges);
}

namespace {

// Parses one non-negative integer token; rejects signs, garbage and overflow.
std::uint64_t parse_count(const std::string& token, std::size_t line) {
  if (token.empty() || token.size() > 18 ||
      !std::all_of(token.begin(), token.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
    throw Error(ErrorKind::kParse, "line " + std::to_string(line) + ": expected a non-negative integer, got '" +
                                       token + "'");
  }
  return std::stoull(token);
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string tok; ss >> tok;) out.push_back(tok);
  return out;
}

}  // namespace

Tree parse_tree(std::istream& in) {
  std::vector<std::vector<std::string>> lines;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(tokens_of(line));
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw Error(ErrorKind::kParse, "empty input");
  if (lines[0].size() != 1) throw Error(ErrorKind::kParse, "line 1: expected the vertex count alone");

  const std::uint64_t n = parse_count(lines[0][0], 1);
  if (n == 0) throw ValidationError(Violation::kEmpty, "order must be at least 1");
  if (n > kMaxOrder) {
    throw ValidationError(Violation::kTooLarge, "order " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder));
  }
  if (lines.size() != n) {
    throw Error(ErrorKind::kParse, "expected " + std::to_string(n - 1) + " edge lines, found " +
                                       std::to_string(lines.size() - 1));
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].size() != 2) {
      throw Error(ErrorKind::kParse, "line " + std::to_string(i + 1) + ": expected two vertex labels");
    }
    const auto u = parse_count(lines[i][0], i + 1);
    const auto v = parse_count(lines[i][1], i + 1);
    if (u >= n || v >= n) {
      throw ValidationError(Violation::kOutOfRange, "line " + std::to_string(i + 1) + ": label >= n=" +
                                                        std::to_string(n));
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return tree_from_edges(n, edges);
}

Tree parse_tree(const std::string& text) {
  std::istringstream in(text);
  return parse_tree(in);
}

std::string format_tree(const Tree& t) {
  std::ostringstream out;
  out << t.order() << '\n';
  for (const Edge& e : t.edges()) out << e.first << ' ' << e.second << '\n';
  return out.str();
}

DistanceProfile distances_from(const Tree& t, Vertex v) {
  check_vertex(t, v);
  return {v, bfs(t, v).depth};
}

std::uint32_t eccentricity(const Tree& t, Vertex v) {
  check_vertex(t, v);
  const auto d = bfs(t, v).depth;
  return *std::max_element(d.begin(), d.end());
}

std::uint32_t diameter(const Tree& t) {
  // The farthest vertex from anywhere is an end of some diametral path.
  const Vertex far = bfs(t, 0).order.back();
  const Bfs second = bfs(t, far);
  return second.depth[second.order.back()];
}

Wiener wiener_pairwise(const Tree& t) {
  Wiener twice = 0;
  for (Vertex v = 0; v < t.order(); ++v) {
    for (auto d : bfs(t, v).depth) twice += d;
  }
  return twice / 2;
}

Wiener wiener_edge_decomposition(const Tree& t) {
  const std::size_t n = t.order();
  const Bfs b = bfs(t, 0);
  std::vector<Wiener> size(n, 1);
  Wiener total = 0;
  for (std::size_t i = n; i-- > 1;) {
    const Vertex v = b.order[i];
    total += size[v] * (static_cast<Wiener>(n) - size[v]);
    size[b.parent[v]] += size[v];
  }
  return total;
}

std::vector<Vertex> leaves(const Tree& t) {
  if (t.order() < 2) throw Error(ErrorKind::kPrecondition, "leaves need n >= 2");
  std::vector<Vertex> out;
  for (Vertex v = 0; v < t.order(); ++v) {
    if (t.is_leaf(v)) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> broom_vertices(const Tree& t) {
  if (t.order() < 2) throw Error(ErrorKind::kPrecondition, "broom vertices need n >= 2");
  std::vector<Vertex> out;
  for (Vertex v = 0; v < t.order(); ++v) {
    const auto nb = t.neighbors(v);
    if (std::any_of(nb.begin(), nb.end(), [&](Vertex w) { return t.is_leaf(w); })) out.push_back(v);
  }
  return out;
}

namespace {

std::size_t leaf_count_at(const Tree& t, Vertex v) {
  const auto nb = t.neighbors(v);
  return static_cast<std::size_t>(std::count_if(nb.begin(), nb.end(), [&](Vertex w) { return t.is_leaf(w); }));
}

// Leaf total over `brooms` equals the tree's leaf total iff every leaf hangs
// off one of them.
bool brooms_carry_all_leaves(const Tree& t, std::span<const Vertex> brooms) {
  std::size_t carried = 0;
  for (Vertex v : brooms) carried += leaf_count_at(t, v);
  return carried == leaves(t).size();
}

}  // namespace

bool is_double_broom(const Tree& t) {
  if (t.order() < 4) return false;
  const auto brooms = broom_vertices(t);
  return brooms.size() == 2 && brooms_carry_all_leaves(t, brooms);
}

std::string ShapeClass::to_string() const {
  switch (kind) {
    case Kind::kPath: return "path";
    case Kind::kStar: return "star";
    case Kind::kDoubleBroom: return "double(" + std::to_string(a) + ";" + std::to_string(b) + ")";
    case Kind::kTripleBroom:
      return "triple(" + std::to_string(a) + ";" + std::to_string(b) + ";" + std::to_string(c) + ")";
    case Kind::kOther: return "other";
  }
  return "other";
}

ShapeClass classify(const Tree& t) {
  const std::size_t n = t.order();
  if (n < 2) throw Error(ErrorKind::kPrecondition, "classify needs n >= 2");

  std::size_t max_degree = 0;
  for (Vertex v = 0; v < n; ++v) max_degree = std::max(max_degree, t.degree(v));
  if (max_degree <= 2) return {ShapeClass::Kind::kPath};
  if (max_degree == n - 1) return {ShapeClass::Kind::kStar};

  const auto brooms = broom_vertices(t);
  if (!brooms_carry_all_leaves(t, brooms)) return {};
  const std::uint32_t d = diameter(t);

  if (brooms.size() == 2) {
    const Vertex u = brooms[0], v = brooms[1];
    const auto gap = distances_from(t, u).distances[v];
    std::size_t a = leaf_count_at(t, u), b = leaf_count_at(t, v);
    if (gap + 2 != d || n != (d - 1) + a + b) return {};
    if (a > b) std::swap(a, b);
    return {ShapeClass::Kind::kDoubleBroom, a, b};
  }

  if (brooms.size() == 3) {
    std::vector<std::vector<std::uint32_t>> dist;
    for (Vertex v : brooms) dist.push_back(distances_from(t, v).distances);
    // Try each broom vertex in the far role y; the other two must be at
    // distance 2 from each other and d-2 from y.
    for (std::size_t yi = 0; yi < 3; ++yi) {
      const std::size_t xi = (yi + 1) % 3, zi = (yi + 2) % 3;
      const Vertex x = brooms[xi], y = brooms[yi], z = brooms[zi];
      if (d < 4 || dist[xi][z] != 2 || dist[xi][y] != d - 2 || dist[zi][y] != d - 2) continue;
      std::size_t a = leaf_count_at(t, x), b = leaf_count_at(t, y), c = leaf_count_at(t, z);
      if (n != d + a + b + c) continue;
      if (d == 4) {
        // All three roles are interchangeable.
        std::size_t p[3] = {a, b, c};
        std::sort(p, p + 3);
        return {ShapeClass::Kind::kTripleBroom, p[0], p[1], p[2]};
      }
      if (a > c) std::swap(a, c);
      return {ShapeClass::Kind::kTripleBroom, a, b, c};
    }
  }
  return {};
}

}  // namespace wienerlab
