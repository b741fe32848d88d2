#include "wienerlab/thresholds.hpp"

#include <cmath>

#include "wienerlab/error.hpp"

namespace wienerlab {

namespace {

using Wide = __int128;

void require_threshold_domain(std::int64_t p, std::int64_t n) {
  if (p < 2 || n < 3) throw Error(ErrorKind::kPrecondition, "thresholds need p >= 2 and n >= 3");
}

// p(3n + 2p - 7)
std::int64_t radicand_of(std::int64_t p, std::int64_t n) { return p * (3 * n + 2 * p - 7); }

// sqrt(next/12) - sqrt(cur/12) > 1, decided exactly.
bool step_exceeds_one(std::int64_t cur, std::int64_t next) {
  const Wide gap = Wide{next} - cur - 12;
  return gap > 0 && gap * gap > Wide{48} * cur;
}

}  // namespace

bool SqrtThreshold::admits(std::int64_t t) const {
  const Wide lhs = Wide{2} * t - offset_halves;
  if (lhs < 0) return false;
  return lhs * lhs * divisor >= Wide{4} * radicand;
}

double SqrtThreshold::value() const {
  return std::sqrt(static_cast<double>(radicand) / static_cast<double>(divisor)) +
         static_cast<double>(offset_halves) / 2.0;
}

SqrtThreshold threshold_f(std::int64_t p, std::int64_t n) {
  require_threshold_domain(p, n);
  return {radicand_of(p, n), 12, 2 * (1 - p)};
}

SqrtThreshold threshold_g(std::int64_t p, std::int64_t n) {
  require_threshold_domain(p, n);
  return {radicand_of(p, n) + 3, 12, 3 - 2 * p};
}

bool f_increases_at(std::int64_t p, std::int64_t n) {
  require_threshold_domain(p, n);
  return step_exceeds_one(radicand_of(p, n), radicand_of(p + 1, n));
}

bool g_increases_at(std::int64_t p, std::int64_t n) {
  require_threshold_domain(p, n);
  return step_exceeds_one(radicand_of(p, n) + 3, radicand_of(p + 1, n) + 3);
}

std::int64_t isqrt_floor(std::int64_t v) {
  if (v < 0) throw Error(ErrorKind::kPrecondition, "square root of a negative number");
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (Wide{r} * r > v) --r;
  while (Wide{r + 1} * (r + 1) <= v) ++r;
  return r;
}

std::int64_t sqrt_ceil(std::int64_t radicand, std::int64_t divisor) {
  if (divisor <= 0) throw Error(ErrorKind::kPrecondition, "divisor must be positive");
  if (radicand <= 0) return 0;
  std::int64_t k = isqrt_floor(radicand / divisor);
  while (k > 0 && Wide{k - 1} * (k - 1) * divisor >= radicand) --k;
  while (Wide{k} * k * divisor < radicand) ++k;
  return k;
}

std::int64_t monotone_range_end(std::int64_t n) {
  if (n < 1) throw Error(ErrorKind::kPrecondition, "n must be positive");
  return isqrt_floor(8 * (n - 1)) - 3;
}

std::pair<std::int64_t, std::int64_t> okok_bounds(std::int64_t n) {
  if (n < 1636) {
    throw Error(ErrorKind::kPrecondition, "okok bounds hold for n >= 1636, got " + std::to_string(n));
  }
  const std::int64_t equal_case = sqrt_ceil(n - 1, 2) - 1;
  // Smallest k with (2k + 1)^2 >= 2n - 1.
  const std::int64_t root = isqrt_floor(2 * n - 1);
  std::int64_t k = root / 2 > 0 ? root / 2 - 1 : 0;
  while (Wide{2 * k + 1} * (2 * k + 1) < 2 * n - 1) ++k;
  return {equal_case, k};
}

std::int64_t offpath_bound(std::int64_t n) {
  if (n < 2) throw Error(ErrorKind::kPrecondition, "offpath bound needs n >= 2");
  return sqrt_ceil(2 * (n - 1)) - 2;
}

std::int64_t offpath_bound_at(std::int64_t p, std::int64_t n) {
  require_threshold_domain(p, n);
  return sqrt_ceil(radicand_of(p, n), 3) - p;
}

}  // namespace wienerlab
