#include "wienerlab/brooms.hpp"

#include <vector>

#include "wienerlab/thresholds.hpp"

namespace wienerlab {

namespace {

[[noreturn]] void reject(const std::string& what) { throw Error(ErrorKind::kPrecondition, what); }

void check_order(std::int64_t n) {
  if (n < 1 || n > static_cast<std::int64_t>(kMaxOrder)) reject("order " + std::to_string(n) + " out of range");
}

}  // namespace

void validate(const DoubleBroomSpec& s) {
  check_order(s.n);
  if (s.a < 1 || s.b < 1) reject("double broom needs a, b >= 1");
  if (s.diameter() < 3) {
    reject("double broom B(" + std::to_string(s.n) + "," + std::to_string(s.a) + "," + std::to_string(s.b) +
           ") would have diameter " + std::to_string(s.diameter()) + " < 3");
  }
}

void validate(const TripleBroomSpec& s) {
  check_order(s.n);
  if (s.a < 1 || s.b < 1 || s.c < 1) reject("triple broom needs a, b, c >= 1");
  if (s.diameter() < 5) {
    reject("triple broom B(" + std::to_string(s.n) + "," + std::to_string(s.a) + "," + std::to_string(s.b) + "," +
           std::to_string(s.c) + ") would have diameter " + std::to_string(s.diameter()) + " < 5");
  }
}

Tree double_broom(std::int64_t n, std::int64_t a, std::int64_t b) {
  const DoubleBroomSpec spec{n, a, b};
  validate(spec);
  const auto spine = static_cast<Vertex>(spec.diameter() - 1);
  const Vertex x = 0, y = spine - 1;
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n - 1));
  for (Vertex v = 1; v < spine; ++v) edges.emplace_back(v - 1, v);
  Vertex next = spine;
  for (std::int64_t i = 0; i < a; ++i) edges.emplace_back(x, next++);
  for (std::int64_t i = 0; i < b; ++i) edges.emplace_back(y, next++);
  Tree t = tree_from_edges(static_cast<std::size_t>(n), edges);
  if (diameter(t) != static_cast<std::uint32_t>(spec.diameter())) {
    throw Error(ErrorKind::kInvariant, "double broom realised with the wrong diameter");
  }
  return t;
}

Tree triple_broom(std::int64_t n, std::int64_t a, std::int64_t b, std::int64_t c) {
  const TripleBroomSpec spec{n, a, b, c};
  validate(spec);
  const auto spine = static_cast<Vertex>(spec.diameter() - 1);
  const Vertex x = 0, y = spine - 1, z = spine;
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n - 1));
  for (Vertex v = 1; v < spine; ++v) edges.emplace_back(v - 1, v);
  edges.emplace_back(1, z);
  Vertex next = z + 1;
  for (std::int64_t i = 0; i < a; ++i) edges.emplace_back(x, next++);
  for (std::int64_t i = 0; i < b; ++i) edges.emplace_back(y, next++);
  for (std::int64_t i = 0; i < c; ++i) edges.emplace_back(z, next++);
  Tree t = tree_from_edges(static_cast<std::size_t>(n), edges);
  if (diameter(t) != static_cast<std::uint32_t>(spec.diameter())) {
    throw Error(ErrorKind::kInvariant, "triple broom realised with the wrong diameter");
  }
  return t;
}

Tree realize(const BroomSpec& spec) {
  return std::visit(
      [](const auto& s) -> Tree {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, DoubleBroomSpec>) {
          return double_broom(s.n, s.a, s.b);
        } else {
          return triple_broom(s.n, s.a, s.b, s.c);
        }
      },
      spec);
}

Wiener wiener_broom(const BroomSpec& spec) {
  return std::visit(
      [](const auto& s) -> Wiener {
        validate(s);
        using S = std::decay_t<decltype(s)>;
        const Wiener n = s.n;
        // Every leaf edge splits off one vertex.
        Wiener total = s.leaf_total() * (n - 1);
        const Wiener spine_edges = s.diameter() - 2;
        if constexpr (std::is_same_v<S, DoubleBroomSpec>) {
          // Spine edge i (0-based from x) has a + i + 1 vertices on x's side.
          for (Wiener i = 0; i < spine_edges; ++i) {
            const Wiener side = s.a + i + 1;
            total += side * (n - side);
          }
        } else {
          total += (s.c + 1) * (n - s.c - 1);  // z to the spine
          for (Wiener i = 0; i < spine_edges; ++i) {
            const Wiener side = s.a + i + 1 + (i >= 1 ? s.c + 1 : 0);
            total += side * (n - side);
          }
        }
        return total;
      },
      spec);
}

DoubleBroomChoice best_double_broom(std::int64_t n, std::int64_t d) {
  const std::int64_t g = n - d + 1;
  if (d < 3 || g < 2) {
    throw Error(ErrorKind::kDomain, "no double broom with n=" + std::to_string(n) + ", d=" + std::to_string(d));
  }
  check_order(n);
  DoubleBroomChoice balanced{g / 2, g - g / 2, 0};
  balanced.wiener = wiener_broom(DoubleBroomSpec{n, balanced.a, balanced.b});

  DoubleBroomChoice best;
  for (std::int64_t a = 1; a < g; ++a) {
    const Wiener w = wiener_broom(DoubleBroomSpec{n, a, g - a});
    if (a == 1 || w > best.wiener) best = {a, g - a, w};
  }
  if (best.a != balanced.a || best.wiener != balanced.wiener) {
    throw Error(ErrorKind::kInvariant, "balanced double broom is not the scan maximum for n=" +
                                           std::to_string(n) + ", d=" + std::to_string(d));
  }
  return best;
}

TripleBroomChoice best_triple_broom(std::int64_t n, std::int64_t d) {
  const std::int64_t g = n - d;
  if (d < 5 || g < 3) {
    throw Error(ErrorKind::kDomain, "no triple broom with n=" + std::to_string(n) + ", d=" + std::to_string(d));
  }
  check_order(n);
  TripleBroomChoice best;
  bool first = true;
  for (std::int64_t a = 1; a <= g - 2; ++a) {
    for (std::int64_t b = 1; a + b <= g - 1; ++b) {
      const std::int64_t c = g - a - b;
      const Wiener w = wiener_broom(TripleBroomSpec{n, a, b, c});
      if (first || w > best.wiener) best = {a, b, c, w};
      first = false;
    }
  }
  return best;
}

std::int64_t theorem_bound(std::int64_t d) {
  if (d < 3) throw Error(ErrorKind::kPrecondition, "bounds need d >= 3");
  return d - 2 + 4 * isqrt_floor((d - 1) / 2);
}

std::int64_t proposition_bound(std::int64_t d) {
  if (d < 3) throw Error(ErrorKind::kPrecondition, "bounds need d >= 3");
  return d + 4 + 4 * isqrt_floor((d - 1) / 2);
}

const char* to_string(Regime r) {
  switch (r) {
    case Regime::kTheorem: return "theorem";
    case Regime::kGap: return "gap";
    case Regime::kProposition: return "proposition";
  }
  return "unknown";
}

Regime regime_of(std::int64_t n, std::int64_t d) {
  if (n <= theorem_bound(d)) return Regime::kTheorem;
  if (n >= proposition_bound(d)) return Regime::kProposition;
  return Regime::kGap;
}

const char* to_string(BroomComparison::Winner w) {
  switch (w) {
    case BroomComparison::Winner::kDouble: return "double";
    case BroomComparison::Winner::kTriple: return "triple";
    case BroomComparison::Winner::kTie: return "tie";
  }
  return "unknown";
}

BroomComparison compare_brooms(std::int64_t n, std::int64_t d) {
  BroomComparison out;
  out.n = n;
  out.d = d;
  out.best_double = best_double_broom(n, d);
  out.best_triple = best_triple_broom(n, d);
  out.margin = out.best_triple.wiener - out.best_double.wiener;
  out.winner = out.margin > 0   ? BroomComparison::Winner::kTriple
               : out.margin < 0 ? BroomComparison::Winner::kDouble
                                : BroomComparison::Winner::kTie;
  out.regime = regime_of(n, d);
  return out;
}

}  // namespace wienerlab
