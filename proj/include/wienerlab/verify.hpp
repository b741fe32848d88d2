#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wienerlab/enumerate.hpp"

namespace wienerlab {

struct VerifyParams {
  std::size_t min_n = 0;  // 0 picks the lemma's default
  std::size_t max_n = 0;
  std::uint64_t samples = 10'000;
  std::uint64_t seed = 7;
  std::vector<std::int64_t> orders;  // "monotone": the n values to scan
  SearchOptions search;
};

struct Counterexample {
  std::string detail;
  std::string tree_text;  // tree text format; empty for purely arithmetic checks
};

struct VerificationReport {
  std::string lemma;
  std::string range;
  std::uint64_t checked = 0;
  std::vector<Counterexample> counterexamples;

  bool ok() const { return counterexamples.empty(); }
};

// Lemma ids: ecc, even, balance, delta-leaf, delta-broom, balanced-double,
// monotone. Unknown ids throw kPrecondition.
VerificationReport verify(const std::string& lemma, const VerifyParams& params = {});

const std::vector<std::string>& lemma_ids();

std::string render_summary(const VerificationReport& r);
// lemma,detail,tree  (tree text with newlines written as ';')
std::string render_counterexamples_csv(const VerificationReport& r);

}  // namespace wienerlab
