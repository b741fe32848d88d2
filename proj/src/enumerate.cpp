#include "wienerlab/enumerate.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <sstream>

#include "wienerlab/brooms.hpp"

namespace wienerlab {

Tree tree_from_level_sequence(const LevelSequence& levels) {
  if (levels.empty() || levels[0] != 0) throw Error(ErrorKind::kPrecondition, "level sequence must start at 0");
  std::vector<Edge> edges;
  edges.reserve(levels.size() - 1);
  // last[k] = most recent vertex seen at depth k
  std::vector<Vertex> last(levels.size() + 1, 0);
  for (std::size_t i = 1; i < levels.size(); ++i) {
    const auto k = levels[i];
    if (k == 0 || k > levels[i - 1] + 1) throw Error(ErrorKind::kPrecondition, "invalid level sequence");
    edges.emplace_back(last[k - 1], static_cast<Vertex>(i));
    last[k] = static_cast<Vertex>(i);
  }
  return tree_from_edges(levels.size(), edges);
}

namespace {

void check_ceiling(std::size_t n, std::size_t ceiling) {
  if (ceiling > kMaxCeiling) {
    throw Error(ErrorKind::kPrecondition, "ceiling " + std::to_string(ceiling) + " exceeds the maximum " +
                                              std::to_string(kMaxCeiling));
  }
  if (n < 1 || n > ceiling) {
    throw Error(ErrorKind::kPrecondition, "order " + std::to_string(n) + " outside the enumeration range 1.." +
                                              std::to_string(ceiling));
  }
}

// Beyer-Hedetniemi successor. With `from` unset, p is the last position whose
// level exceeds 1; nullopt once only the star remains.
std::optional<LevelSequence> next_rooted(const LevelSequence& pred, std::optional<std::size_t> from = {}) {
  std::size_t p;
  if (from) {
    p = *from;
  } else {
    p = pred.size() - 1;
    while (p > 0 && pred[p] == 1) --p;
  }
  if (p == 0) return std::nullopt;
  std::size_t q = p - 1;
  while (pred[q] != pred[p] - 1) --q;
  LevelSequence out = pred;
  for (std::size_t i = p; i < out.size(); ++i) out[i] = out[i - p + q];
  return out;
}

// Splits at the root's second child: the first child's subtree (re-rooted)
// and the rest of the tree.
std::pair<LevelSequence, LevelSequence> split_first_subtree(const LevelSequence& layout) {
  std::size_t m = layout.size();
  for (std::size_t i = 2; i < layout.size(); ++i) {
    if (layout[i] == 1) {
      m = i;
      break;
    }
  }
  LevelSequence left, rest{0};
  for (std::size_t i = 1; i < m; ++i) left.push_back(layout[i] - 1);
  for (std::size_t i = m; i < layout.size(); ++i) rest.push_back(layout[i]);
  return {left, rest};
}

std::uint32_t height(const LevelSequence& s) { return *std::max_element(s.begin(), s.end()); }

// Returns `candidate` when it is the center-rooted representative of its free
// tree, otherwise jumps past the run of invalid candidates.
std::optional<LevelSequence> next_free(const LevelSequence& candidate) {
  const auto [left, rest] = split_first_subtree(candidate);
  const auto left_height = height(left);
  const auto rest_height = height(rest);
  bool valid = rest_height >= left_height;
  if (valid && rest_height == left_height) {
    if (left.size() > rest.size()) {
      valid = false;
    } else if (left.size() == rest.size() && left > rest) {
      valid = false;
    }
  }
  if (valid) return candidate;

  const std::size_t p = left.size();
  auto jumped = next_rooted(candidate, p);
  if (!jumped) return std::nullopt;
  if (candidate[p] > 2) {
    const auto new_left = split_first_subtree(*jumped).first;
    const std::uint32_t h = height(new_left);
    // Overwrite the tail with the path 1, 2, ..., h + 1.
    const std::size_t tail = h + 1;
    for (std::size_t i = 0; i < tail; ++i) (*jumped)[jumped->size() - tail + i] = static_cast<std::uint32_t>(i + 1);
  }
  return jumped;
}

}  // namespace

FreeTreeStream::FreeTreeStream(std::size_t n, std::size_t ceiling) : n_(n) {
  check_ceiling(n, ceiling);
  LevelSequence start;
  if (n <= 2) {
    for (std::uint32_t i = 0; i < n; ++i) start.push_back(i);
  } else {
    // The path rooted at its center.
    for (std::uint32_t i = 0; i <= n / 2; ++i) start.push_back(i);
    for (std::uint32_t i = 1; i < (n + 1) / 2; ++i) start.push_back(i);
  }
  pending_ = std::move(start);
}

std::optional<LevelSequence> FreeTreeStream::next() {
  if (!pending_) return std::nullopt;
  if (n_ <= 2) {
    auto out = std::move(pending_);
    pending_.reset();
    return out;
  }
  auto current = next_free(*pending_);
  if (!current) {
    pending_.reset();
    return std::nullopt;
  }
  pending_ = next_rooted(*current);
  return current;
}

std::vector<Tree> free_trees(std::size_t n, std::size_t ceiling) {
  FreeTreeStream stream(n, ceiling);
  std::vector<Tree> out;
  while (auto levels = stream.next()) out.push_back(tree_from_level_sequence(*levels));
  return out;
}

std::uint64_t count_free_trees(std::size_t n, std::size_t ceiling) {
  FreeTreeStream stream(n, ceiling);
  std::uint64_t count = 0;
  while (stream.next()) ++count;
  return count;
}

namespace {

struct Measured {
  std::uint32_t d = 0;
  Wiener w = 0;
};

Measured measure(const LevelSequence& levels) {
  const Tree t = tree_from_level_sequence(levels);
  return {diameter(t), wiener_edge_decomposition(t)};
}

struct Cell {
  Wiener best = -1;
  std::vector<LevelSequence> winners;
};

std::map<std::uint32_t, Cell> scan_cells(std::size_t n, const SearchOptions& options) {
  FreeTreeStream stream(n, options.ceiling);
  std::map<std::uint32_t, Cell> cells;
  const unsigned jobs = std::max(1u, options.jobs);
  constexpr std::size_t kBatch = 8192;

  std::vector<LevelSequence> batch;
  std::vector<Measured> measured;
  auto flush = [&] {
    measured.assign(batch.size(), {});
    if (jobs == 1) {
      for (std::size_t i = 0; i < batch.size(); ++i) measured[i] = measure(batch[i]);
    } else {
      std::vector<std::future<void>> workers;
      const std::size_t chunk = (batch.size() + jobs - 1) / jobs;
      for (unsigned j = 0; j < jobs; ++j) {
        const std::size_t lo = j * chunk, hi = std::min(batch.size(), lo + chunk);
        if (lo >= hi) break;
        workers.push_back(std::async(std::launch::async, [&, lo, hi] {
          for (std::size_t i = lo; i < hi; ++i) measured[i] = measure(batch[i]);
        }));
      }
      for (auto& w : workers) w.get();
    }
    // Ordered reduction keeps results independent of the worker count.
    for (std::size_t i = 0; i < batch.size(); ++i) {
      Cell& cell = cells[measured[i].d];
      if (measured[i].w > cell.best) {
        cell.best = measured[i].w;
        cell.winners.clear();
      }
      if (measured[i].w == cell.best) cell.winners.push_back(std::move(batch[i]));
    }
    batch.clear();
  };

  while (auto levels = stream.next()) {
    batch.push_back(std::move(*levels));
    if (batch.size() == kBatch) flush();
  }
  flush();
  return cells;
}

ExtremalRecord make_record(std::size_t n, std::uint32_t d, const Cell& cell) {
  ExtremalRecord r;
  r.n = n;
  r.d = d;
  r.max_wiener = cell.best;
  for (const auto& levels : cell.winners) {
    Tree t = tree_from_level_sequence(levels);
    ArgmaxTree a{canonical_form(t), n >= 2 ? classify(t) : ShapeClass{}, std::move(t)};
    r.argmax.push_back(std::move(a));
  }
  std::sort(r.argmax.begin(), r.argmax.end(),
            [](const ArgmaxTree& a, const ArgmaxTree& b) { return a.canonical < b.canonical; });
  r.all_double_broom = !r.argmax.empty() && std::all_of(r.argmax.begin(), r.argmax.end(), [](const ArgmaxTree& a) {
    return is_double_broom(a.tree);
  });
  r.any_double_broom = std::any_of(r.argmax.begin(), r.argmax.end(),
                                   [](const ArgmaxTree& a) { return is_double_broom(a.tree); });
  if (d >= 3 && n >= d + 1) {
    r.best_double_wiener = best_double_broom(static_cast<std::int64_t>(n), d).wiener;
  }
  return r;
}

}  // namespace

ExtremalRecord extremal_trees(std::size_t n, std::uint32_t d, const SearchOptions& options) {
  check_ceiling(n, options.ceiling);
  if (d < 2 || d + 1 > n) {
    throw Error(ErrorKind::kDomain, "no tree of order " + std::to_string(n) + " has diameter " + std::to_string(d));
  }
  const auto cells = scan_cells(n, options);
  const auto it = cells.find(d);
  if (it == cells.end()) {
    throw Error(ErrorKind::kDomain, "no tree of order " + std::to_string(n) + " has diameter " + std::to_string(d));
  }
  return make_record(n, d, it->second);
}

std::vector<ExtremalRecord> extremal_sweep(std::size_t n, const SearchOptions& options) {
  check_ceiling(n, options.ceiling);
  std::vector<ExtremalRecord> out;
  for (const auto& [d, cell] : scan_cells(n, options)) {
    if (d == 0) continue;
    out.push_back(make_record(n, d, cell));
  }
  return out;
}

std::string extremal_csv_header() { return "n,d,max_wiener,num_argmax,all_double_broom,c"; }

std::string extremal_csv_row(const ExtremalRecord& r) {
  std::ostringstream out;
  out << r.n << ',' << r.d << ',' << r.max_wiener << ',' << r.argmax.size() << ','
      << (r.all_double_broom ? "true" : "false") << ',' << r.gap();
  return out.str();
}

}  // namespace wienerlab
