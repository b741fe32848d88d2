#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wienerlab/error.hpp"

namespace wienerlab {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;
using Wiener = std::int64_t;

// Largest order accepted anywhere in the library. W(T) <= n^3/6 stays well
// inside int64 at this size.
inline constexpr std::size_t kMaxOrder = 200'000;

// A finite simple tree on the dense labels 0..n-1. Immutable once built;
// every instance has passed validation.
class Tree {
 public:
  std::size_t order() const { return offsets_.size() - 1; }
  std::span<const Edge> edges() const { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool is_leaf(Vertex v) const { return degree(v) == 1; }

  friend Tree tree_from_edges(std::size_t n, std::span<const Edge> edges);

 private:
  Tree() = default;

  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adjacency_;
};

// Validates and builds. Throws ValidationError naming the first violation.
Tree tree_from_edges(std::size_t n, std::span<const Edge> edges);

inline Tree tree_from_edges(std::size_t n, std::initializer_list<Edge> edges) {
  return tree_from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

Tree path_tree(std::size_t n);
Tree star_tree(std::size_t n);

// Tree text format: first line n, then n-1 lines "u v", 0-indexed.
Tree parse_tree(std::istream& in);
Tree parse_tree(const std::string& text);
std::string format_tree(const Tree& t);

struct DistanceProfile {
  Vertex source = 0;
  std::vector<std::uint32_t> distances;
};

DistanceProfile distances_from(const Tree& t, Vertex v);
std::uint32_t eccentricity(const Tree& t, Vertex v);
std::uint32_t diameter(const Tree& t);

// Sum over all unordered pairs of hop distances, one traversal per vertex.
Wiener wiener_pairwise(const Tree& t);
// Sum over edges of s(e) * (n - s(e)). Linear time.
Wiener wiener_edge_decomposition(const Tree& t);

std::vector<Vertex> leaves(const Tree& t);
std::vector<Vertex> broom_vertices(const Tree& t);

// Isomorphism-invariant string. Rooted at the center (or the central edge for
// bicentral trees); children ordered by per-level AHU ranks. The encoding is a
// '.'-separated level sequence, with '|' separating the two halves of a
// bicentral tree.
std::string canonical_form(const Tree& t);

struct ShapeClass {
  enum class Kind { kPath, kStar, kDoubleBroom, kTripleBroom, kOther };

  Kind kind = Kind::kOther;
  // Leaf counts. DoubleBroom: a <= b. TripleBroom: a at x, b at y, c at z
  // with a <= c.
  std::size_t a = 0, b = 0, c = 0;

  bool operator==(const ShapeClass&) const = default;

  std::string to_string() const;
};

ShapeClass classify(const Tree& t);

// True when the tree has exactly two broom vertices carrying every leaf
// (paths of order >= 4 included, as B(n,1,1)).
bool is_double_broom(const Tree& t);

}  // namespace wienerlab
