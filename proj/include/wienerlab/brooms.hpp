#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "wienerlab/tree.hpp"

namespace wienerlab {

// B(n, a, b): a spine of d-1 vertices with a leaves on its first vertex x and
// b on its last vertex y. d = n - a - b + 1 >= 3.
struct DoubleBroomSpec {
  std::int64_t n = 0, a = 0, b = 0;

  std::int64_t diameter() const { return n - a - b + 1; }
  std::int64_t leaf_total() const { return a + b; }
  bool operator==(const DoubleBroomSpec&) const = default;
};

// B(n, a, b, c): double broom on a spine x..y plus a vertex z hanging off the
// spine vertex next to x, carrying c leaves. d = n - a - b - c >= 5.
struct TripleBroomSpec {
  std::int64_t n = 0, a = 0, b = 0, c = 0;

  std::int64_t diameter() const { return n - a - b - c; }
  std::int64_t leaf_total() const { return a + b + c; }
  bool operator==(const TripleBroomSpec&) const = default;
};

using BroomSpec = std::variant<DoubleBroomSpec, TripleBroomSpec>;

// Throw kPrecondition on parameter violations.
void validate(const DoubleBroomSpec& spec);
void validate(const TripleBroomSpec& spec);

// Spine is 0..d-2 (x = 0, y = d-2); for the triple broom z = d-1; leaves follow.
Tree double_broom(std::int64_t n, std::int64_t a, std::int64_t b);
Tree triple_broom(std::int64_t n, std::int64_t a, std::int64_t b, std::int64_t c);
Tree realize(const BroomSpec& spec);

// Edge decomposition specialised to the broom layout; O(d).
Wiener wiener_broom(const BroomSpec& spec);

struct DoubleBroomChoice {
  std::int64_t a = 0, b = 0;
  Wiener wiener = 0;
};

struct TripleBroomChoice {
  std::int64_t a = 0, b = 0, c = 0;
  Wiener wiener = 0;
};

// Balanced split of g = n - d + 1 leaves, confirmed against an exhaustive scan
// of every split (kInvariant on disagreement). Ties go to the smallest a.
DoubleBroomChoice best_double_broom(std::int64_t n, std::int64_t d);
// Exhaustive over a + b + c = n - d; ties go to the lexicographically smallest.
TripleBroomChoice best_triple_broom(std::int64_t n, std::int64_t d);

// d - 2 + 4 floor(sqrt((d-1)/2)) and d + 4 + 4 floor(sqrt((d-1)/2)).
std::int64_t theorem_bound(std::int64_t d);
std::int64_t proposition_bound(std::int64_t d);

enum class Regime { kTheorem, kGap, kProposition };
const char* to_string(Regime r);
Regime regime_of(std::int64_t n, std::int64_t d);

struct BroomComparison {
  std::int64_t n = 0, d = 0;
  DoubleBroomChoice best_double;
  TripleBroomChoice best_triple;
  enum class Winner { kDouble, kTriple, kTie } winner = Winner::kTie;
  Wiener margin = 0;  // W(best triple) - W(best double)
  Regime regime = Regime::kTheorem;
};

const char* to_string(BroomComparison::Winner w);

BroomComparison compare_brooms(std::int64_t n, std::int64_t d);

}  // namespace wienerlab
