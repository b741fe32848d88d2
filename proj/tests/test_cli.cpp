#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "wienerlab/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = wienerlab::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(WIENERLAB_TEST_DATA) + "/" + name; }

std::string last_line(const std::string& text) {
  std::string t = text;
  if (!t.empty() && t.back() == '\n') t.pop_back();
  const auto pos = t.rfind('\n');
  return pos == std::string::npos ? t : t.substr(pos + 1);
}

}  // namespace

TEST_CASE("cli wiener") {
  CHECK(invoke({"wiener", data("path4.txt")}).out == "10\n");
  CHECK(invoke({"wiener", "--check", data("double_6_2_2.txt")}).out == "29\n");
  const Result cyc = invoke({"wiener", data("cycle4.txt")});
  CHECK(cyc.code == 2);
  CHECK(cyc.err.rfind("error:2:", 0) == 0);
  CHECK(invoke({"wiener", data("missing.txt")}).code == 2);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
}

TEST_CASE("cli transform") {
  const Result broom = invoke({"transform", "--input", data("triple_12_2_2_2.txt"), "--op", "relocate-broom",
                               "--context", "0"});
  CHECK(broom.code == 0);
  CHECK(last_line(broom.out) == "-7,-7");
  CHECK(broom.out.rfind("12\n", 0) == 0);

  const Result swapped = invoke({"transform", "--input", data("triple_12_2_2_2.txt"), "--op", "relocate-broom",
                                 "--context", "0", "--swap"});
  CHECK(last_line(swapped.out) == "-7,-7");

  const Result leaf =
      invoke({"transform", "--input", data("path5.txt"), "--op", "relocate-leaf", "--x", "0", "--y", "4"});
  CHECK(leaf.code == 0);
  CHECK(last_line(leaf.out) == "-2,-2");

  const Result listing = invoke({"transform", "--input", data("triple_12_2_2_2.txt"), "--list-contexts"});
  CHECK(listing.code == 0);
  CHECK(listing.out.find("0,1,2,2,2,0,5,3,3\n") != std::string::npos);

  CHECK(invoke({"transform", "--input", data("path5.txt"), "--op", "relocate-broom", "--context", "0"}).code == 4);
  CHECK(invoke({"transform", "--input", data("path5.txt"), "--op", "relocate-leaf", "--x", "1", "--y", "4"}).code ==
        4);
  CHECK(invoke({"transform", "--input", data("path5.txt"), "--op", "spin"}).code == 2);

  const auto out_path = std::filesystem::temp_directory_path() / "wienerlab_cli_transform.txt";
  const Result to_file = invoke({"transform", "--input", data("path5.txt"), "--op", "relocate-leaf", "--x", "0",
                                 "--y", "4", "--output", out_path.string()});
  CHECK(to_file.out == "-2,-2\n");
  std::ifstream in(out_path);
  std::string first;
  std::getline(in, first);
  CHECK(first == "5");
  std::filesystem::remove(out_path);
}

TEST_CASE("cli brooms") {
  CHECK(invoke({"brooms", "bounds", "--d", "1634"}).out == "1744,1750\n");
  CHECK(invoke({"brooms", "best-double", "--n", "10", "--d", "6"}).out == "double,10,6,2,3,,139\n");
  CHECK(invoke({"brooms", "best-triple", "--n", "12", "--d", "6"}).out == "triple,12,6,1,3,2,216\n");
  const Result cmp = invoke({"brooms", "compare", "--n", "1750", "--d", "1634"});
  CHECK(cmp.code == 0);
  CHECK(cmp.out.find("winner=triple") != std::string::npos);
  CHECK(cmp.out.find("regime=proposition") != std::string::npos);
  CHECK(invoke({"brooms", "best-triple", "--n", "10", "--d", "4"}).code == 4);
  CHECK(invoke({"brooms"}).code == 2);
}

TEST_CASE("cli extremal") {
  const Result one = invoke({"extremal", "--n", "10", "--d", "6"});
  CHECK(one.code == 0);
  CHECK(one.out == "n,d,max_wiener,num_argmax,all_double_broom,c\n10,6,139,1,true,4\n");
  const Result all = invoke({"extremal", "--n", "7", "--all-cells", "--emit", "json"});
  CHECK(all.code == 0);
  CHECK(all.out.find("\"max_wiener\": 48") != std::string::npos);
  CHECK(invoke({"extremal", "--n", "30", "--d", "5"}).code == 2);
  CHECK(invoke({"extremal", "--n", "10", "--d", "10"}).code == 4);
  CHECK(invoke({"extremal", "--n", "10"}).code == 2);
  CHECK(invoke({"extremal", "--n", "10", "--d", "5", "--ceiling", "21"}).code == 2);

  const auto dir = std::filesystem::temp_directory_path() / "wienerlab_sidecar_test";
  std::filesystem::remove_all(dir);
  CHECK(invoke({"extremal", "--n", "7", "--d", "4", "--sidecar-dir", dir.string()}).code == 0);
  std::ifstream side(dir / "cell_n7_d4.txt");
  std::string line;
  int lines = 0;
  while (std::getline(side, line)) ++lines;
  CHECK(lines == 2);
  std::filesystem::remove_all(dir);
}

TEST_CASE("cli verify and enumerate") {
  const Result ok = invoke({"verify", "--lemma", "ecc", "--max-n", "8"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("status=ok") != std::string::npos);
  CHECK(invoke({"verify", "--lemma", "nosuch"}).code == 2);
  CHECK(invoke({"verify", "--lemma", "monotone", "--orders", "1636,2000"}).code == 0);

  CHECK(invoke({"enumerate", "--n", "7", "--count"}).out == "11\n");
  CHECK(invoke({"enumerate", "--n", "4"}).out.size() > 0);
  CHECK(invoke({"enumerate", "--n", "17", "--count"}).code == 2);
  CHECK(invoke({"enumerate", "--n", "17", "--count", "--ceiling", "17"}).out == "48629\n");
}

TEST_CASE("cli outputs are deterministic") {
  CHECK(invoke({"extremal", "--n", "7", "--d", "6"}).out.find("\n7,6,56,1,") != std::string::npos);
  const Result leaf = invoke(
      {"transform", "--input", data("triple_12_2_2_2.txt"), "--op", "relocate-leaf", "--x", "6", "--y", "8"});
  CHECK(last_line(leaf.out) == "2,2");

  const Result serial = invoke({"extremal", "--n", "10", "--all-cells", "--emit", "json", "--jobs", "1"});
  const Result parallel = invoke({"extremal", "--n", "10", "--all-cells", "--emit", "json", "--jobs", "3"});
  CHECK(serial.code == 0);
  CHECK(serial.out == parallel.out);

  const std::vector<std::string> args{"verify", "--lemma", "delta-leaf", "--samples", "10000", "--seed", "7"};
  const Result first = invoke(args), second = invoke(args);
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
  CHECK(invoke({"verify", "--lemma", "balanced-double", "--max-n", "60"}).code == 0);
}

TEST_CASE("cli ceiling from the environment") {
  setenv("WIENERLAB_CEILING", "17", 1);
  CHECK(invoke({"enumerate", "--n", "17", "--count"}).out == "48629\n");
  setenv("WIENERLAB_CEILING", "abc", 1);
  CHECK(invoke({"enumerate", "--n", "5", "--count"}).code == 2);
  unsetenv("WIENERLAB_CEILING");
}
