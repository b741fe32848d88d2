#include "wienerlab/verify.hpp"

#include <algorithm>
#include <sstream>

#include "wienerlab/brooms.hpp"
#include "wienerlab/random.hpp"
#include "wienerlab/thresholds.hpp"
#include "wienerlab/transforms.hpp"

namespace wienerlab {

namespace {

std::size_t pick(std::size_t value, std::size_t fallback) { return value == 0 ? fallback : value; }

std::string span_text(std::size_t lo, std::size_t hi) { return std::to_string(lo) + ".." + std::to_string(hi); }

// Runs `check` on every argmax tree of every (n, d) cell with n in [lo, hi].
template <typename Check>
void for_each_argmax(std::size_t lo, std::size_t hi, const SearchOptions& search, Check&& check) {
  for (std::size_t n = lo; n <= hi; ++n) {
    for (const ExtremalRecord& rec : extremal_sweep(n, search)) {
      for (const ArgmaxTree& a : rec.argmax) check(rec, a.tree);
    }
  }
}

VerificationReport verify_ecc(const VerifyParams& params) {
  VerificationReport r;
  r.lemma = "ecc";
  const std::size_t lo = std::max<std::size_t>(2, pick(params.min_n, 2)), hi = pick(params.max_n, 12);
  r.range = "n=" + span_text(lo, hi) + " all cells, argmax trees";
  for_each_argmax(lo, hi, params.search, [&](const ExtremalRecord& rec, const Tree& t) {
    for (Vertex leaf : leaves(t)) {
      ++r.checked;
      const auto ecc = eccentricity(t, leaf);
      if (ecc != rec.d) {
        r.counterexamples.push_back({"n=" + std::to_string(rec.n) + " d=" + std::to_string(rec.d) + " leaf " +
                                         std::to_string(leaf) + " has ecc " + std::to_string(ecc),
                                     format_tree(t)});
      }
    }
  });
  return r;
}

VerificationReport verify_even(const VerifyParams& params) {
  VerificationReport r;
  r.lemma = "even";
  const std::size_t lo = std::max<std::size_t>(2, pick(params.min_n, 2)), hi = pick(params.max_n, 12);
  r.range = "n=" + span_text(lo, hi) + " all cells, argmax leaf pairs";
  for_each_argmax(lo, hi, params.search, [&](const ExtremalRecord& rec, const Tree& t) {
    const auto ls = leaves(t);
    for (std::size_t i = 0; i < ls.size(); ++i) {
      const auto dist = distances_from(t, ls[i]).distances;
      for (std::size_t j = i + 1; j < ls.size(); ++j) {
        ++r.checked;
        const auto dd = dist[ls[j]];
        if (dd != rec.d && dd % 2 != 0) {
          r.counterexamples.push_back({"n=" + std::to_string(rec.n) + " d=" + std::to_string(rec.d) + " leaves " +
                                           std::to_string(ls[i]) + "," + std::to_string(ls[j]) + " at odd distance " +
                                           std::to_string(dd),
                                       format_tree(t)});
        }
      }
    }
  });
  return r;
}

VerificationReport verify_balance(const VerifyParams& params) {
  VerificationReport r;
  r.lemma = "balance";
  const std::size_t lo = std::max<std::size_t>(2, pick(params.min_n, 2)), hi = pick(params.max_n, 12);
  r.range = "n=" + span_text(lo, hi) + " all cells, special contexts of argmax trees";
  for_each_argmax(lo, hi, params.search, [&](const ExtremalRecord& rec, const Tree& t) {
    for (const SpecialContext& ctx : find_special_contexts(t)) {
      ++r.checked;
      const auto t1 = static_cast<std::int64_t>(ctx.first_leaves), t2 = static_cast<std::int64_t>(ctx.second_leaves);
      if (t1 - t2 > 1 || t2 - t1 > 1) {
        r.counterexamples.push_back({"n=" + std::to_string(rec.n) + " d=" + std::to_string(rec.d) + " special vertex " +
                                         std::to_string(ctx.special) + " has t1=" + std::to_string(t1) +
                                         " t2=" + std::to_string(t2),
                                     format_tree(t)});
      }
    }
  });
  return r;
}

VerificationReport verify_delta_leaf(const VerifyParams& params) {
  VerificationReport r;
  r.lemma = "delta-leaf";
  const std::size_t lo = std::max<std::size_t>(3, pick(params.min_n, 5)), hi = std::max(lo, pick(params.max_n, 60));
  r.range = "n=" + span_text(lo, hi) + " samples=" + std::to_string(params.samples) + " seed=" +
            std::to_string(params.seed);
  Rng rng(params.seed);
  for (std::uint64_t s = 0; s < params.samples; ++s) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    const Tree t = random_tree(n, rng);
    const auto ls = leaves(t);
    const std::size_t i = std::uniform_int_distribution<std::size_t>(0, ls.size() - 1)(rng);
    std::size_t j = std::uniform_int_distribution<std::size_t>(0, ls.size() - 2)(rng);
    if (j >= i) ++j;
    const Vertex x = ls[i], y = ls[j];
    const auto predicted = predicted_leaf_delta(leaf_path(t, x, y));
    const auto actual = wiener_edge_decomposition(relocate_leaf(t, x, y)) - wiener_edge_decomposition(t);
    ++r.checked;
    if (predicted != actual) {
      r.counterexamples.push_back({"leaves " + std::to_string(x) + "->" + std::to_string(y) + " predicted " +
                                       std::to_string(predicted) + " actual " + std::to_string(actual),
                                   format_tree(t)});
    }
  }
  return r;
}

void check_broom_contexts(const Tree& t, VerificationReport& r) {
  const Wiener before = wiener_edge_decomposition(t);
  for (const SpecialContext& found : find_special_contexts(t)) {
    for (const SpecialContext& ctx : {found, found.swapped()}) {
      ++r.checked;
      const auto full = predicted_broom_delta_full(ctx);
      const auto reduced =
          predicted_broom_delta_reduced(static_cast<std::int64_t>(ctx.first_leaves),
                                        static_cast<std::int64_t>(ctx.second_leaves), ctx.depth,
                                        static_cast<std::int64_t>(t.order()));
      const auto actual = wiener_edge_decomposition(relocate_broom(t, ctx)) - before;
      if (full != actual || reduced != actual) {
        r.counterexamples.push_back({"special vertex " + std::to_string(ctx.special) + " full " +
                                         std::to_string(full) + " reduced " + std::to_string(reduced) + " actual " +
                                         std::to_string(actual),
                                     format_tree(t)});
      }
    }
  }
}

VerificationReport verify_delta_broom(const VerifyParams& params) {
  VerificationReport r;
  r.lemma = "delta-broom";
  const std::size_t lo = std::max<std::size_t>(8, pick(params.min_n, 12)), hi = std::max(lo, pick(params.max_n, 40));
  r.range = "triple brooms n=" + span_text(lo, hi) + " + grafted random trees samples=" +
            std::to_string(params.samples) + " seed=" + std::to_string(params.seed);
  for (std::int64_t n = static_cast<std::int64_t>(lo); n <= static_cast<std::int64_t>(hi); ++n) {
    for (std::int64_t a = 1; a <= n; ++a) {
      for (std::int64_t b = 1; a + b <= n; ++b) {
        for (std::int64_t c = 1; n - a - b - c >= 5; ++c) check_broom_contexts(triple_broom(n, a, b, c), r);
      }
    }
  }
  Rng rng(params.seed);
  for (std::uint64_t s = 0; s < params.samples; ++s) check_broom_contexts(random_broom_grafted_tree(lo, hi, rng), r);
  return r;
}

VerificationReport verify_balanced_double(const VerifyParams& params) {
  VerificationReport r;
  r.lemma = "balanced-double";
  const std::size_t lo = std::max<std::size_t>(4, pick(params.min_n, 4)), hi = pick(params.max_n, 60);
  r.range = "n=" + span_text(lo, hi) + " all feasible g";
  for (auto n = static_cast<std::int64_t>(lo); n <= static_cast<std::int64_t>(hi); ++n) {
    for (std::int64_t d = 3; d <= n - 1; ++d) {
      const std::int64_t g = n - d + 1;
      const std::int64_t a0 = g / 2, b0 = g - g / 2;
      const Wiener balanced = wiener_broom(DoubleBroomSpec{n, a0, b0});
      for (std::int64_t a = 1; a < g; ++a) {
        ++r.checked;
        const Wiener w = wiener_broom(DoubleBroomSpec{n, a, g - a});
        const bool far = (a > g - a ? a - (g - a) : (g - a) - a) >= 2;
        if (w > balanced || (far && w >= balanced)) {
          r.counterexamples.push_back({"n=" + std::to_string(n) + " d=" + std::to_string(d) + " split (" +
                                           std::to_string(a) + "," + std::to_string(g - a) + ") W=" +
                                           std::to_string(w) + " vs balanced " + std::to_string(balanced),
                                       format_tree(double_broom(n, a, g - a))});
        }
      }
    }
  }
  return r;
}

VerificationReport verify_monotone(const VerifyParams& params) {
  VerificationReport r;
  r.lemma = "monotone";
  const std::vector<std::int64_t> orders =
      params.orders.empty() ? std::vector<std::int64_t>{1636, 2000, 5000} : params.orders;
  std::ostringstream range;
  range << "n=";
  for (std::size_t i = 0; i < orders.size(); ++i) range << (i ? ";" : "") << orders[i];
  range << " p=2..floor(4sqrt((n-1)/2)-3)";
  r.range = range.str();
  for (const std::int64_t n : orders) {
    const std::int64_t end = monotone_range_end(n);
    for (std::int64_t p = 2; p < end; ++p) {
      r.checked += 2;
      if (!f_increases_at(p, n)) {
        r.counterexamples.push_back({"f(" + std::to_string(p + 1) + ") <= f(" + std::to_string(p) + ") at n=" +
                                         std::to_string(n),
                                     ""});
      }
      if (!g_increases_at(p, n)) {
        r.counterexamples.push_back({"g(" + std::to_string(p + 1) + ") <= g(" + std::to_string(p) + ") at n=" +
                                         std::to_string(n),
                                     ""});
      }
    }
  }
  return r;
}

}  // namespace

const std::vector<std::string>& lemma_ids() {
  static const std::vector<std::string> ids{"ecc",         "even",           "balance", "delta-leaf",
                                            "delta-broom", "balanced-double", "monotone"};
  return ids;
}

VerificationReport verify(const std::string& lemma, const VerifyParams& params) {
  if (lemma == "ecc") return verify_ecc(params);
  if (lemma == "even") return verify_even(params);
  if (lemma == "balance") return verify_balance(params);
  if (lemma == "delta-leaf") return verify_delta_leaf(params);
  if (lemma == "delta-broom") return verify_delta_broom(params);
  if (lemma == "balanced-double") return verify_balanced_double(params);
  if (lemma == "monotone") return verify_monotone(params);
  throw Error(ErrorKind::kPrecondition, "unknown lemma id '" + lemma + "'");
}

std::string render_summary(const VerificationReport& r) {
  std::ostringstream out;
  out << "lemma=" << r.lemma << " range=\"" << r.range << "\" checked=" << r.checked
      << " counterexamples=" << r.counterexamples.size() << " status=" << (r.ok() ? "ok" : "FAILED") << '\n';
  for (std::size_t i = 0; i < std::min<std::size_t>(r.counterexamples.size(), 5); ++i) {
    out << "  " << r.counterexamples[i].detail << '\n';
  }
  return out.str();
}

std::string render_counterexamples_csv(const VerificationReport& r) {
  std::ostringstream out;
  out << "lemma,detail,tree\n";
  for (const Counterexample& c : r.counterexamples) {
    std::string tree = c.tree_text;
    while (!tree.empty() && tree.back() == '\n') tree.pop_back();
    std::replace(tree.begin(), tree.end(), '\n', ';');
    std::string detail = c.detail;
    std::replace(detail.begin(), detail.end(), ',', ' ');
    out << r.lemma << ',' << detail << ',' << tree << '\n';
  }
  return out.str();
}

}  // namespace wienerlab
