#pragma once

#include <cstdint>
#include <vector>

#include "wienerlab/tree.hpp"

namespace wienerlab {

// A special vertex together with two broom-shaped components T1, T2 of T - x
// whose leaves all sit at the same depth p and are closer than the diameter.
// Relocation moves T2 onto T1's broom vertex.
struct SpecialContext {
  std::size_t order = 0;  // n of the tree the context was found in
  Vertex special = 0;     // x
  std::vector<Vertex> first_component;   // V(T1), sorted
  std::vector<Vertex> second_component;  // V(T2), sorted
  Vertex first_broom = 0;                // y1'
  Vertex second_broom = 0;               // y2'
  Vertex first_witness = 0;              // y1, smallest leaf label in T1
  Vertex second_witness = 0;             // y2
  std::uint32_t depth = 0;               // p = d(x, y1) = d(x, y2)
  std::size_t first_leaves = 0;          // t1
  std::size_t second_leaves = 0;         // t2

  // |A u B| with A = V(T1) + {x}, B = V(T) \ (A u V(T2)).
  std::int64_t outside_second() const {
    return static_cast<std::int64_t>(order) - static_cast<std::int64_t>(second_component.size());
  }
  // |B|
  std::int64_t rest() const {
    return static_cast<std::int64_t>(order) - 1 - static_cast<std::int64_t>(first_component.size()) -
           static_cast<std::int64_t>(second_component.size());
  }

  // Same pair with the roles of T1 and T2 exchanged.
  SpecialContext swapped() const;

  bool operator==(const SpecialContext&) const = default;
};

// A pair of single-broom-vertex components at a vertex of degree >= 3 that
// fails the context conditions.
struct NearMiss {
  enum class Reason { kUnequalDepth, kDiametral };

  Vertex special = 0;
  Vertex first_root = 0;   // neighbor of x inside the first component
  Vertex second_root = 0;
  std::uint32_t first_depth = 0;
  std::uint32_t second_depth = 0;
  Reason reason = Reason::kUnequalDepth;

  bool operator==(const NearMiss&) const = default;
};

struct SpecialScan {
  std::vector<SpecialContext> contexts;  // sorted by (x, min label of T1, min label of T2)
  std::vector<NearMiss> near_misses;
};

SpecialScan special_scan(const Tree& t);
std::vector<SpecialContext> find_special_contexts(const Tree& t);

// Deletes T2 and hangs |V(T2)| leaves on y1'. The vertices of T2 keep their
// labels and become those leaves. Throws kDomain when ctx does not describe t.
Tree relocate_broom(const Tree& t, const SpecialContext& ctx);

// W(T') - W(T) from the component sizes, p, t1, t2.
std::int64_t predicted_broom_delta_full(const SpecialContext& ctx);
std::int64_t predicted_broom_delta_full(std::int64_t outside_second, std::int64_t rest, std::int64_t p,
                                        std::int64_t t1, std::int64_t t2);

// Same delta after substituting the sizes in terms of n. Defined for p = 1
// too (the factor p-1 makes it zero).
std::int64_t predicted_broom_delta_reduced(std::int64_t t1, std::int64_t t2, std::int64_t p, std::int64_t n);

// Exact test of t1 - 1 >= p(3n + 5 - 12 t2 - 10p) / (12(p + t2 - 1)), i.e.
// W(T) >= W(T') for the relocation T2 -> y1'.
bool keep_inequality(std::int64_t t1, std::int64_t t2, std::int64_t p, std::int64_t n);

// The x -> y leaf path. hanging[i-1] = |V(T_i)| for internal index i in [1, r-1].
struct LeafPath {
  Vertex from = 0;
  Vertex to = 0;
  std::uint32_t length = 0;  // r
  std::vector<std::size_t> hanging;
  std::vector<Vertex> vertices;  // the path itself, from..to
};

LeafPath leaf_path(const Tree& t, Vertex x, Vertex y);

// Deletes leaf x and attaches a new leaf (reusing label x) to y's neighbor.
Tree relocate_leaf(const Tree& t, Vertex x, Vertex y);

std::int64_t predicted_leaf_delta(const LeafPath& lp);

}  // namespace wienerlab
