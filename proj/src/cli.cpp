#include "wienerlab/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "wienerlab/brooms.hpp"
#include "wienerlab/enumerate.hpp"
#include "wienerlab/transforms.hpp"
#include "wienerlab/verify.hpp"

namespace wienerlab::cli {

namespace {

// Carries an exit code through to run().
struct Failure {
  int code;
  std::string message;
};

[[noreturn]] void fail(int code, const std::string& message) { throw Failure{code, message}; }

// Maps library errors; `precondition_code` lets a command report bad domain
// arguments as domain errors.
int exit_code_for(const Error& e, int precondition_code) {
  switch (e.kind()) {
    case ErrorKind::kParse:
    case ErrorKind::kValidation: return kUsage;
    case ErrorKind::kPrecondition: return precondition_code;
    case ErrorKind::kDomain: return kDomainError;
    case ErrorKind::kInvariant: return kInvariantViolation;
  }
  return kUsage;
}

Tree read_tree_file(const std::string& path) {
  try {
    if (path == "-") return parse_tree(std::cin);
    std::ifstream in(path);
    if (!in) fail(kUsage, "cannot open '" + path + "'");
    return parse_tree(in);
  } catch (const Error& e) {
    fail(kUsage, path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) fail(kUsage, "cannot write '" + path + "'");
  out << text;
}

std::size_t resolve_ceiling(const std::optional<std::size_t>& flag) {
  std::size_t ceiling = kDefaultCeiling;
  if (const char* env = std::getenv("WIENERLAB_CEILING"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      ceiling = std::stoul(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
    } catch (const std::exception&) {
      fail(kUsage, std::string("WIENERLAB_CEILING is not an integer: ") + env);
    }
  }
  if (flag) ceiling = *flag;
  if (ceiling > kMaxCeiling) {
    fail(kUsage, "enumeration ceiling " + std::to_string(ceiling) + " exceeds " + std::to_string(kMaxCeiling));
  }
  return ceiling;
}

struct WienerArgs {
  std::string file;
  bool check = false;
};

int cmd_wiener(const WienerArgs& a, std::ostream& out) {
  const Tree t = read_tree_file(a.file);
  const Wiener w = wiener_edge_decomposition(t);
  if (a.check) {
    const Wiener pairwise = wiener_pairwise(t);
    if (pairwise != w) {
      fail(kInvariantViolation, "pairwise " + std::to_string(pairwise) + " != edge decomposition " + std::to_string(w));
    }
  }
  out << w << '\n';
  return kOk;
}

struct ExtremalArgs {
  std::size_t n = 0;
  std::optional<std::uint32_t> d;
  bool all_cells = false;
  std::string emit = "csv";
  unsigned jobs = 1;
  std::optional<std::size_t> ceiling;
  std::string sidecar_dir;
};

nlohmann::json record_json(const ExtremalRecord& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["d"] = r.d;
  j["c"] = r.gap();
  j["max_wiener"] = r.max_wiener;
  j["num_argmax"] = r.argmax.size();
  j["all_double_broom"] = r.all_double_broom;
  j["any_double_broom"] = r.any_double_broom;
  j["best_double_wiener"] = r.best_double_wiener ? nlohmann::json(*r.best_double_wiener) : nlohmann::json(nullptr);
  j["argmax"] = nlohmann::json::array();
  for (const ArgmaxTree& a : r.argmax) j["argmax"].push_back({{"canonical", a.canonical}, {"shape", a.shape.to_string()}});
  return j;
}

int cmd_extremal(const ExtremalArgs& a, std::ostream& out) {
  SearchOptions options;
  options.ceiling = resolve_ceiling(a.ceiling);
  options.jobs = a.jobs;
  if (a.n > options.ceiling) {
    fail(kUsage, "order " + std::to_string(a.n) + " is above the enumeration ceiling " +
                     std::to_string(options.ceiling) + " (raise with --ceiling or WIENERLAB_CEILING)");
  }
  if (a.all_cells == a.d.has_value()) fail(kUsage, "give exactly one of --d or --all-cells");

  std::vector<ExtremalRecord> records;
  if (a.all_cells) {
    records = extremal_sweep(a.n, options);
  } else {
    records.push_back(extremal_trees(a.n, *a.d, options));
  }

  if (a.emit == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : records) arr.push_back(record_json(r));
    out << arr.dump(2) << '\n';
  } else {
    out << extremal_csv_header() << '\n';
    for (const auto& r : records) out << extremal_csv_row(r) << '\n';
  }

  if (!a.sidecar_dir.empty()) {
    std::filesystem::create_directories(a.sidecar_dir);
    for (const auto& r : records) {
      std::string text;
      for (const ArgmaxTree& t : r.argmax) text += t.canonical + '\n';
      write_text_file((std::filesystem::path(a.sidecar_dir) /
                       ("cell_n" + std::to_string(r.n) + "_d" + std::to_string(r.d) + ".txt"))
                          .string(),
                      text);
    }
  }
  return kOk;
}

struct BroomArgs {
  std::int64_t n = 0;
  std::int64_t d = 0;
};

std::string double_line(std::int64_t n, std::int64_t d, const DoubleBroomChoice& c) {
  return "double," + std::to_string(n) + "," + std::to_string(d) + "," + std::to_string(c.a) + "," +
         std::to_string(c.b) + ",," + std::to_string(c.wiener);
}

std::string triple_line(std::int64_t n, std::int64_t d, const TripleBroomChoice& c) {
  return "triple," + std::to_string(n) + "," + std::to_string(d) + "," + std::to_string(c.a) + "," +
         std::to_string(c.b) + "," + std::to_string(c.c) + "," + std::to_string(c.wiener);
}

struct TransformArgs {
  std::string input;
  std::string op;
  std::optional<std::uint32_t> x, y;
  std::optional<std::size_t> context;
  bool swap = false;
  bool list_contexts = false;
  std::string output;
};

const char* reason_text(NearMiss::Reason r) {
  return r == NearMiss::Reason::kDiametral ? "diametral" : "unequal-depth";
}

int cmd_transform(const TransformArgs& a, std::ostream& out) {
  const Tree t = read_tree_file(a.input);

  if (a.list_contexts) {
    const SpecialScan scan = special_scan(t);
    out << "context,x,p,t1,t2,y1prime,y2prime,size1,size2\n";
    for (std::size_t i = 0; i < scan.contexts.size(); ++i) {
      const SpecialContext& c = scan.contexts[i];
      out << i << ',' << c.special << ',' << c.depth << ',' << c.first_leaves << ',' << c.second_leaves << ','
          << c.first_broom << ',' << c.second_broom << ',' << c.first_component.size() << ','
          << c.second_component.size() << '\n';
    }
    for (const NearMiss& m : scan.near_misses) {
      out << "near-miss," << m.special << ',' << m.first_root << ',' << m.second_root << ',' << m.first_depth << ','
          << m.second_depth << ',' << reason_text(m.reason) << '\n';
    }
    return kOk;
  }

  Tree after = t;
  std::int64_t predicted = 0;
  if (a.op == "relocate-leaf") {
    if (!a.x || !a.y) fail(kUsage, "relocate-leaf needs --x and --y");
    predicted = predicted_leaf_delta(leaf_path(t, *a.x, *a.y));
    after = relocate_leaf(t, *a.x, *a.y);
  } else if (a.op == "relocate-broom") {
    if (!a.context) fail(kUsage, "relocate-broom needs --context");
    const auto contexts = find_special_contexts(t);
    if (*a.context >= contexts.size()) {
      fail(kDomainError, "context " + std::to_string(*a.context) + " does not exist (tree has " +
                             std::to_string(contexts.size()) + ")");
    }
    const SpecialContext ctx = a.swap ? contexts[*a.context].swapped() : contexts[*a.context];
    predicted = predicted_broom_delta_full(ctx);
    after = relocate_broom(t, ctx);
  } else {
    fail(kUsage, "--op must be relocate-leaf or relocate-broom");
  }

  const std::int64_t actual = wiener_edge_decomposition(after) - wiener_edge_decomposition(t);
  if (a.output.empty()) {
    out << format_tree(after);
  } else {
    write_text_file(a.output, format_tree(after));
  }
  out << predicted << ',' << actual << '\n';
  if (predicted != actual) {
    fail(kInvariantViolation, "predicted delta " + std::to_string(predicted) + " != actual " + std::to_string(actual));
  }
  return kOk;
}

struct VerifyArgs {
  std::string lemma;
  VerifyParams params;
  std::optional<std::size_t> ceiling;
  std::string csv;
};

int cmd_verify(VerifyArgs a, std::ostream& out) {
  const auto& ids = lemma_ids();
  if (std::find(ids.begin(), ids.end(), a.lemma) == ids.end()) fail(kUsage, "unknown lemma id '" + a.lemma + "'");
  a.params.search.ceiling = resolve_ceiling(a.ceiling);
  const VerificationReport report = verify(a.lemma, a.params);
  out << render_summary(report);
  if (!a.csv.empty()) write_text_file(a.csv, render_counterexamples_csv(report));
  return report.ok() ? kOk : kCounterexample;
}

struct EnumerateArgs {
  std::size_t n = 0;
  bool count = false;
  std::string format = "canonical";
  std::optional<std::size_t> ceiling;
};

int cmd_enumerate(const EnumerateArgs& a, std::ostream& out) {
  const std::size_t ceiling = resolve_ceiling(a.ceiling);
  if (a.n > ceiling) fail(kUsage, "order " + std::to_string(a.n) + " is above the enumeration ceiling");
  FreeTreeStream stream(a.n, ceiling);
  std::uint64_t count = 0;
  while (auto levels = stream.next()) {
    ++count;
    if (a.count) continue;
    if (a.format == "levels") {
      for (std::size_t i = 0; i < levels->size(); ++i) out << (i ? "." : "") << (*levels)[i];
      out << '\n';
    } else if (a.format == "tree") {
      out << format_tree(tree_from_level_sequence(*levels)) << '\n';
    } else {
      out << canonical_form(tree_from_level_sequence(*levels)) << '\n';
    }
  }
  if (a.count) out << count << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Wiener-index tools for trees of given order and diameter", "wienerlab"};
  app.require_subcommand(1);

  WienerArgs wiener_args;
  auto* wiener = app.add_subcommand("wiener", "Wiener index of a tree file");
  wiener->add_option("tree-file", wiener_args.file, "tree text file ('-' for stdin)")->required();
  wiener->add_flag("--check", wiener_args.check, "cross-check pairwise and edge-decomposition algorithms");

  ExtremalArgs extremal_args;
  auto* extremal = app.add_subcommand("extremal", "brute-force maximum Wiener trees for (n, d)");
  extremal->add_option("--n", extremal_args.n, "order")->required()->check(CLI::PositiveNumber);
  extremal->add_option("--d", extremal_args.d, "diameter");
  extremal->add_flag("--all-cells", extremal_args.all_cells, "every diameter for the order");
  extremal->add_option("--emit", extremal_args.emit, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  extremal->add_option("--jobs", extremal_args.jobs, "worker threads")->check(CLI::PositiveNumber);
  extremal->add_option("--ceiling", extremal_args.ceiling, "enumeration ceiling (max 20)");
  extremal->add_option("--sidecar-dir", extremal_args.sidecar_dir, "write argmax canonical forms per cell");

  BroomArgs broom_args;
  auto* brooms = app.add_subcommand("brooms", "double/triple broom optimisers and bounds");
  brooms->require_subcommand(1);
  auto* compare = brooms->add_subcommand("compare", "best double vs best triple broom");
  auto* best_double = brooms->add_subcommand("best-double", "best double broom");
  auto* best_triple = brooms->add_subcommand("best-triple", "best triple broom");
  for (auto* sub : {compare, best_double, best_triple}) {
    sub->add_option("--n", broom_args.n, "order")->required();
    sub->add_option("--d", broom_args.d, "diameter")->required();
  }
  auto* bounds = brooms->add_subcommand("bounds", "theorem and proposition order bounds for d");
  bounds->add_option("--d", broom_args.d, "diameter")->required();

  TransformArgs transform_args;
  auto* transform = app.add_subcommand("transform", "relocate a leaf or a broom and report the Wiener delta");
  transform->add_option("--input", transform_args.input, "tree text file")->required();
  transform->add_option("--op", transform_args.op, "relocate-leaf or relocate-broom");
  transform->add_option("--x", transform_args.x, "leaf to delete");
  transform->add_option("--y", transform_args.y, "leaf whose neighbor receives the new leaf");
  transform->add_option("--context", transform_args.context, "context index from --list-contexts");
  transform->add_flag("--swap", transform_args.swap, "absorb T1 into T2's broom vertex instead");
  transform->add_flag("--list-contexts", transform_args.list_contexts, "list special contexts and near-misses");
  transform->add_option("--output", transform_args.output, "write the transformed tree here");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "check one lemma over a parameter range");
  verify_cmd->add_option("--lemma", verify_args.lemma, "ecc|even|balance|delta-leaf|delta-broom|balanced-double|monotone")
      ->required();
  verify_cmd->add_option("--min-n", verify_args.params.min_n, "smallest order");
  verify_cmd->add_option("--max-n", verify_args.params.max_n, "largest order");
  verify_cmd->add_option("--samples", verify_args.params.samples, "random instances (default 10000)");
  verify_cmd->add_option("--seed", verify_args.params.seed, "random seed (default 7)");
  verify_cmd->add_option("--orders", verify_args.params.orders, "orders for 'monotone'")->delimiter(',');
  verify_cmd->add_option("--jobs", verify_args.params.search.jobs, "worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--ceiling", verify_args.ceiling, "enumeration ceiling (max 20)");
  verify_cmd->add_option("--csv", verify_args.csv, "write counterexamples as CSV");

  EnumerateArgs enumerate_args;
  auto* enumerate = app.add_subcommand("enumerate", "all free trees of an order");
  enumerate->add_option("--n", enumerate_args.n, "order")->required()->check(CLI::PositiveNumber);
  enumerate->add_flag("--count", enumerate_args.count, "print only the count");
  enumerate->add_option("--format", enumerate_args.format, "canonical|levels|tree")
      ->check(CLI::IsMember({"canonical", "levels", "tree"}));
  enumerate->add_option("--ceiling", enumerate_args.ceiling, "enumeration ceiling (max 20)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "error:" << kUsage << ":" << msg << '\n';
    return kUsage;
  }

  int precondition_code = kUsage;
  try {
    if (wiener->parsed()) return cmd_wiener(wiener_args, out);
    if (extremal->parsed()) return cmd_extremal(extremal_args, out);
    if (brooms->parsed()) {
      precondition_code = kDomainError;
      if (bounds->parsed()) {
        out << theorem_bound(broom_args.d) << ',' << proposition_bound(broom_args.d) << '\n';
      } else if (best_double->parsed()) {
        out << double_line(broom_args.n, broom_args.d, best_double_broom(broom_args.n, broom_args.d)) << '\n';
      } else if (best_triple->parsed()) {
        out << triple_line(broom_args.n, broom_args.d, best_triple_broom(broom_args.n, broom_args.d)) << '\n';
      } else {
        const BroomComparison c = compare_brooms(broom_args.n, broom_args.d);
        out << double_line(c.n, c.d, c.best_double) << '\n'
            << triple_line(c.n, c.d, c.best_triple) << '\n'
            << "winner=" << to_string(c.winner) << " margin=" << c.margin << " regime=" << to_string(c.regime)
            << '\n';
      }
      return kOk;
    }
    if (transform->parsed()) {
      precondition_code = kDomainError;
      return cmd_transform(transform_args, out);
    }
    if (verify_cmd->parsed()) return cmd_verify(verify_args, out);
    if (enumerate->parsed()) return cmd_enumerate(enumerate_args, out);
  } catch (const Failure& f) {
    err << "error:" << f.code << ":" << f.message << '\n';
    return f.code;
  } catch (const Error& e) {
    const int code = exit_code_for(e, precondition_code);
    err << "error:" << code << ":" << to_string(e.kind()) << ": " << e.what() << '\n';
    return code;
  } catch (const std::exception& e) {
    err << "error:" << kUsage << ":" << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace wienerlab::cli
