// Copyright 2026 The dbfold Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "dbfold/io.hpp"
#include "fixtures.hpp"
#include "gtest/gtest.h"

namespace dbfold {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("dbfold_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  void write(const std::string& name, const std::string& text) const {
    std::ofstream(dir_ / name, std::ios::binary) << text;
  }

  std::string read(const std::string& name) const {
    std::ifstream in(dir_ / name, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }

  // Runs the binary with `args`, capturing standard output; returns the
  // exit code.
  int run(const std::string& args) {
    const auto cmd = std::string(DBFOLD_CLI_PATH) + " " + args + " > " + path("stdout.txt") +
                     " 2> " + path("stderr.txt");
    const int raw = std::system(cmd.c_str());
    out_ = read("stdout.txt");
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  }

  fs::path dir_;
  std::string out_;
};

TEST_F(CliTest, FoldCount) {
  EXPECT_EQ(run("fold-count 3 2"), 0);
  EXPECT_EQ(out_, "192\n");
  EXPECT_EQ(run("fold-count 7 2"), 0);
  EXPECT_EQ(out_, "429768478195109381814\n");
  EXPECT_EQ(run("fold-count 2 3"), 0);
  EXPECT_EQ(out_, "30\n");
  EXPECT_EQ(run("bell 6"), 0);
  EXPECT_EQ(out_, "203\n");
}

TEST_F(CliTest, CheckHnVerdicts) {
  write("shift.txt", render(shift_transducer(2)));
  EXPECT_EQ(run("check-hn " + path("shift.txt")), 1);
  EXPECT_EQ(out_, "false\n");
  write("h.txt", render(testing::nonpermaut_transducer()));
  EXPECT_EQ(run("check-hn " + path("h.txt")), 0);
  EXPECT_EQ(out_, "true\n");
  EXPECT_EQ(run("order " + path("h.txt")), 0);
  EXPECT_EQ(out_, "2\n");
}

TEST_F(CliTest, DecomposeWritesFactorsAndManifest) {
  write("h.txt", render(testing::nonpermaut_transducer()));
  EXPECT_EQ(run("decompose " + path("h.txt") + " -o " + path("out")), 0);
  for (int i = 0; i < 3; ++i)
    EXPECT_TRUE(fs::exists(dir_ / "out" / ("factor_" + std::to_string(i) + ".txt")));
  EXPECT_FALSE(fs::exists(dir_ / "out" / "factor_3.txt"));
  const auto manifest = parse_manifest(read("out/manifest.txt"));
  EXPECT_TRUE(manifest.verified);
  EXPECT_EQ(manifest.entries.size(), 3u);

  // Multiplying the files back together restores the input.
  EXPECT_EQ(run("product " + path("out/factor_0.txt") + " " + path("out/factor_1.txt") + " -o " +
                path("p01.txt")),
            0);
  EXPECT_EQ(run("product " + path("p01.txt") + " " + path("out/factor_2.txt")), 0);
  EXPECT_TRUE(equal_omega(parse_transducer(out_), testing::nonpermaut_transducer()));
}

TEST_F(CliTest, OutputIsDeterministic) {
  EXPECT_EQ(run("random-hn 3 --factors 3 --seed 7"), 0);
  const auto first = out_;
  EXPECT_EQ(run("random-hn 3 --factors 3 --seed 7"), 0);
  EXPECT_EQ(out_, first);
  write("t.txt", first);
  EXPECT_EQ(run("decompose " + path("t.txt")), 0);
  const auto d1 = out_;
  EXPECT_EQ(run("decompose " + path("t.txt")), 0);
  EXPECT_EQ(out_, d1);
}

TEST_F(CliTest, Pipelines) {
  EXPECT_EQ(run("debruijn 3 2 -o " + path("g.txt")), 0);
  EXPECT_EQ(parse_automaton(read("g.txt")), de_bruijn(3, 2));
  EXPECT_EQ(run("sync " + path("g.txt")), 0);
  EXPECT_NE(out_.find("level: 2"), std::string::npos);
  EXPECT_EQ(run("aut " + path("g.txt")), 0);
  EXPECT_NE(out_.find("# automorphisms: 6"), std::string::npos);
  EXPECT_EQ(run("dot " + path("g.txt")), 0);
  EXPECT_EQ(out_.rfind("digraph", 0), 0u);

  write("h.txt", render(testing::nonpermaut_transducer()));
  EXPECT_EQ(run("subgroup-ag " + path("h.txt")), 0);
  EXPECT_NE(out_.find("# group order: 2"), std::string::npos);
  EXPECT_EQ(run("invert " + path("h.txt")), 0);
  EXPECT_EQ(parse_transducer(out_), invert(testing::nonpermaut_transducer()));
  EXPECT_EQ(run("fold-enum 2 2 --method lattice"), 0);
  EXPECT_EQ(std::count(out_.begin(), out_.end(), '\n'), 5);

  write("f.txt", render(testing::sample_rule_g()));
  EXPECT_EQ(run("rule2trans " + path("f.txt") + " -o " + path("tg.txt")), 0);
  EXPECT_EQ(run("trans2rule " + path("tg.txt")), 0);
  EXPECT_EQ(parse_rule(out_), testing::sample_rule_g());
}

TEST_F(CliTest, ErrorCodes) {
  EXPECT_EQ(run(""), 2);
  EXPECT_EQ(run("no-such-command"), 2);
  EXPECT_EQ(run("fold-enum 2 2 --method magic"), 2);
  write("bad.txt", "transducer n=2 states=1\nstate 0: 2 0 | 0 1\n");
  EXPECT_EQ(run("check-hn " + path("bad.txt")), 2);
  EXPECT_NE(read("stderr.txt").find("line 2"), std::string::npos);
  EXPECT_EQ(run("order " + path("missing.txt")), 2);
  EXPECT_EQ(run("aut " + path("loops.txt")), 2);
  write("loops.txt", "automaton n=5 states=1\nstate 0: 0 0 0 0 0\n");
  EXPECT_EQ(run("aut " + path("loops.txt") + " --cap 10"), 3);
  EXPECT_EQ(run("fold-count 13 2"), 3);
}

}  // namespace
}  // namespace dbfold
