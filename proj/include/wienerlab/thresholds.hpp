#pragma once

#include <cstdint>
#include <utility>

namespace wienerlab {

// sqrt(radicand / divisor) + offset_halves / 2, compared against integers
// without floating point. value() is for display only.
struct SqrtThreshold {
  std::int64_t radicand = 0;
  std::int64_t divisor = 1;
  std::int64_t offset_halves = 0;

  // t >= threshold, decided exactly.
  bool admits(std::int64_t t) const;
  double value() const;
};

// Minimum t1 (with t1 = t2) keeping W(T) >= W(T'):
// sqrt(p(3n+2p-7)/12) - p + 1.
SqrtThreshold threshold_f(std::int64_t p, std::int64_t n);
// Minimum t1 (with t1 = t2 + 1): sqrt((p(3n+2p-7)+3)/12) - p + 3/2.
SqrtThreshold threshold_g(std::int64_t p, std::int64_t n);

// Exactly decides threshold(p + 1) > threshold(p) for f or g.
bool f_increases_at(std::int64_t p, std::int64_t n);
bool g_increases_at(std::int64_t p, std::int64_t n);

// Largest integer p with p <= 4 sqrt((n-1)/2) - 3.
std::int64_t monotone_range_end(std::int64_t n);

// (ceil(sqrt((n-1)/2)) - 1, ceil(sqrt((n-1/2)/2) - 1/2)): the least t1 in the
// t1 = t2 and t1 = t2 + 1 cases. Requires n >= 1636.
std::pair<std::int64_t, std::int64_t> okok_bounds(std::int64_t n);

// ceil(2 sqrt((n-1)/2)) - 2: off-path vertices forced by one special vertex.
std::int64_t offpath_bound(std::int64_t n);
// ceil(2 sqrt(p(3n+2p-7)/12) - p), the same count before minimizing over p.
std::int64_t offpath_bound_at(std::int64_t p, std::int64_t n);

// Integer square root helpers.
std::int64_t isqrt_floor(std::int64_t v);
// Smallest k >= 0 with k * k * divisor >= radicand, i.e. ceil(sqrt(radicand/divisor)).
std::int64_t sqrt_ceil(std::int64_t radicand, std::int64_t divisor = 1);

}  // namespace wienerlab
