#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wienerlab/tree.hpp"

namespace wienerlab {

inline constexpr std::size_t kDefaultCeiling = 16;
inline constexpr std::size_t kMaxCeiling = 20;

// Level sequence of a rooted tree in preorder: entry i is the depth of the
// i-th visited vertex, the root at depth 0.
using LevelSequence = std::vector<std::uint32_t>;

Tree tree_from_level_sequence(const LevelSequence& levels);

// Every free tree of order n exactly once, as level sequences of the tree
// rooted at a center. Successor rule of Wright, Richmond, Odlyzko and McKay
// layered over Beyer-Hedetniemi rooted-tree generation.
class FreeTreeStream {
 public:
  explicit FreeTreeStream(std::size_t n, std::size_t ceiling = kDefaultCeiling);

  // Next tree's level sequence, or nullopt when exhausted.
  std::optional<LevelSequence> next();

 private:
  std::size_t n_;
  std::optional<LevelSequence> pending_;
};

std::vector<Tree> free_trees(std::size_t n, std::size_t ceiling = kDefaultCeiling);
std::uint64_t count_free_trees(std::size_t n, std::size_t ceiling = kDefaultCeiling);

struct ArgmaxTree {
  std::string canonical;
  ShapeClass shape;
  Tree tree;
};

struct ExtremalRecord {
  std::size_t n = 0;
  std::uint32_t d = 0;
  Wiener max_wiener = 0;
  std::vector<ArgmaxTree> argmax;  // sorted by canonical form
  std::int64_t gap() const { return static_cast<std::int64_t>(n) - d; }  // c = n - d
  bool all_double_broom = false;
  bool any_double_broom = false;
  // W(best double broom) for the cell, when a double broom exists.
  std::optional<Wiener> best_double_wiener;
  bool max_equals_best_double() const { return best_double_wiener && *best_double_wiener == max_wiener; }
};

struct SearchOptions {
  std::size_t ceiling = kDefaultCeiling;
  unsigned jobs = 1;
};

ExtremalRecord extremal_trees(std::size_t n, std::uint32_t d, const SearchOptions& options = {});
// One record per diameter 2..n-1 (or d = 1 when n = 2), from a single pass.
std::vector<ExtremalRecord> extremal_sweep(std::size_t n, const SearchOptions& options = {});

// CSV: n,d,max_wiener,num_argmax,all_double_broom,c
std::string extremal_csv_header();
std::string extremal_csv_row(const ExtremalRecord& r);

}  // namespace wienerlab
