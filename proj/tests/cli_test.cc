// Copyright 2026 The rtwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
#include "cli.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

namespace rtwalk::cli {
namespace {

namespace fs = std::filesystem;

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run Cli(std::vector<std::string> args) {
  args.insert(args.begin(), "rtwalk");
  std::ostringstream out, err;
  Run r;
  r.code = RunCli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string Slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("rtwalk_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
             "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  fs::path operator/(const std::string& name) const { return path_ / name; }

 private:
  fs::path path_;
};

TEST(TimeGridTest, Parsing) {
  EXPECT_EQ(ParseTimeGrid("5,0,5,10"), (std::vector<std::int64_t>{0, 5, 10}));
  EXPECT_EQ(ParseTimeGrid("0:10:5, 7"), (std::vector<std::int64_t>{0, 5, 7, 10}));
  EXPECT_THROW(ParseTimeGrid(""), std::invalid_argument);
  EXPECT_THROW(ParseTimeGrid("1:5"), std::invalid_argument);
  EXPECT_THROW(ParseTimeGrid("0:5:0"), std::invalid_argument);
  EXPECT_THROW(ParseTimeGrid("-1"), std::invalid_argument);
  EXPECT_THROW(ParseTimeGrid("x"), std::invalid_argument);
}

TEST(SpectrumCommandTest, TwoStepExample) {
  const auto r = Cli({"spectrum", "--n", "5", "--f", "3", "--g", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out,
            "eig_u,eig_p_num,eig_p_den,dim\n6,1,1,1\n3,11,17,8\n0,5,17,18\n-3,-1,17,8\n"
            "-6,-7,17,1\n");
  EXPECT_NE(r.err.find("total dimension = 36"), std::string::npos);
  EXPECT_NE(r.err.find("Delta = 6"), std::string::npos);
}

TEST(SpectrumCommandTest, FrozenVectorHasOneLine) {
  const auto r = Cli({"spectrum", "--b", "1,2,3"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "eig_u,eig_p_num,eig_p_den,dim\n0,1,1,1\n");
}

TEST(SpectrumCommandTest, GeneralVectorJson) {
  const auto r = Cli({"spectrum", "--b", "1,1,1,2,4", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"total_dim\": \"36\""), std::string::npos);
  EXPECT_NE(r.out.find("\"size\": \"36\""), std::string::npos);
  EXPECT_NE(r.out.find("\"command\": \"spectrum\""), std::string::npos);
  EXPECT_NE(r.out.find("\"eig_p\": \"1/1\""), std::string::npos);
}

TEST(SpectrumCommandTest, Errors) {
  const auto empty = Cli({"spectrum", "--b", "1,3,3"});
  EXPECT_EQ(empty.code, kExitUsage);
  EXPECT_NE(empty.err.find("b_2 = 3 > 2"), std::string::npos);
  EXPECT_EQ(Cli({"spectrum", "--b", "1,1", "--n", "2"}).code, kExitUsage);
  EXPECT_EQ(Cli({"spectrum", "--n", "5", "--f", "3"}).code, kExitUsage);
  EXPECT_EQ(Cli({"spectrum", "--n", "5", "--f", "2", "--g", "3"}).code, kExitUsage);
  EXPECT_EQ(Cli({"spectrum", "--n", "6", "--f", "3", "--g", "2", "--cap", "10"}).code, kExitCap);
  EXPECT_EQ(Cli({"spectrum", "--n", "5", "--f", "3", "--g", "2", "--format", "xml"}).code,
            kExitUsage);
}

TEST(SpectrumCommandTest, CapFromEnvironment) {
  ::setenv("RTWALK_CAP", "10", 1);
  const int capped = Cli({"spectrum", "--n", "6", "--f", "3", "--g", "2"}).code;
  const int flag_wins = Cli({"spectrum", "--n", "6", "--f", "3", "--g", "2", "--cap", "1000"}).code;
  ::setenv("RTWALK_CAP", "zero", 1);
  const int junk = Cli({"spectrum", "--n", "6", "--f", "3", "--g", "2"}).code;
  ::unsetenv("RTWALK_CAP");
  EXPECT_EQ(capped, kExitCap);
  EXPECT_EQ(flag_wins, kExitOk);
  EXPECT_EQ(junk, kExitUsage);
}

TEST(SpectrumCommandTest, FileOutputWithSidecarManifest) {
  TempDir dir;
  const auto path = (dir / "spec.csv").string();
  const auto r = Cli({"spectrum", "--n", "5", "--f", "3", "--g", "2", "--out", path});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("|S_M| = 36"), std::string::npos);
  EXPECT_EQ(Slurp(path).substr(0, 30), "eig_u,eig_p_num,eig_p_den,dim\n");
  const std::string manifest = Slurp(path + ".manifest.json");
  EXPECT_NE(manifest.find("\"command\": \"spectrum\""), std::string::npos);
  EXPECT_NE(manifest.find(path), std::string::npos);
  EXPECT_NE(manifest.find("\"version\""), std::string::npos);
}

TEST(VerifyCommandTest, QuickPassesAndUnknownLevelIsUsageError) {
  const auto r = Cli({"verify", "--level", "quick"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, 20), "check,result,detail\n");
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  EXPECT_EQ(Cli({"verify", "--level", "medium"}).code, kExitUsage);
}

TEST(BoundsCommandTest, MidpointWhenCIsZero) {
  const auto r = Cli({"bounds", "--n", "60", "--f", "6", "--g", "3", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto up = r.out.find("\"t_chi_upper\": ");
  const auto lo = r.out.find("\"t_chi_lower\": ");
  ASSERT_NE(up, std::string::npos);
  ASSERT_NE(lo, std::string::npos);
  const auto value = [&](std::size_t at) {
    const auto start = r.out.find('"', r.out.find(':', at)) + 1;
    return r.out.substr(start, r.out.find('"', start) - start);
  };
  EXPECT_EQ(value(up), value(lo));
  EXPECT_EQ(r.out.find("\"fast_mix\""), std::string::npos);
}

TEST(BoundsCommandTest, FastMixingExampleIncludesNoCutoffCurve) {
  const auto r = Cli({"bounds", "--n", "300", "--f", "10", "--g", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("tv-fastmix-lower"), std::string::npos);
  EXPECT_NE(r.err.find("t_fast_mix = 14118.94736842105263"), std::string::npos);
  EXPECT_EQ(Cli({"bounds", "--n", "5", "--f", "1", "--g", "1"}).code, kExitUsage);
  EXPECT_EQ(Cli({"bounds", "--b", "1,1,1,2,4"}).code, kExitUsage);
}

TEST(BoundsCommandTest, NegativeLowerTimeIsSkipped) {
  const auto r = Cli({"bounds", "--n", "60", "--f", "6", "--g", "3", "--c", "12"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.err.find("n/a (t < 0)"), std::string::npos);
}

TEST(DistanceCommandTest, UniformChainAtSix) {
  const auto r = Cli({"distance", "--b", "1,1,1,2,3", "--kind", "uniform", "--t-grid", "6",
                      "--curves", "tv-exact"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "t,value,kind\n6,0.5,tv-exact\n");
  EXPECT_EQ(Cli({"distance", "--b", "1,1,1,2,3", "--kind", "uniform", "--t", "2", "--curves",
                 "chi-spectral"})
                .code,
            kExitUsage);
  EXPECT_EQ(Cli({"distance", "--b", "1,1,1,2,3"}).code, kExitUsage);
  EXPECT_EQ(Cli({"distance", "--n", "8", "--f", "5", "--g", "3", "--t", "1", "--cap", "100"}).code,
            kExitCap);
}

TEST(ProbeCommandTest, FindsWitness) {
  const auto r = Cli({"probe", "--b", "1,1,1,2,3", "--kind", "uniform", "--t", "6",
                      "--candidates", "12345,45123"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out,
            "transitive_consistent,sigma,tau,t,p_sigma,p_tau\n"
            "false,12345,45123,6,5207/117649,5287/117649\n");
}

TEST(SimulateCommandTest, DeterministicAndWorkerIndependent) {
  TempDir dir;
  const std::vector<std::string> base{"simulate", "--n",    "7",  "--f",    "4",   "--g",
                                      "2",        "--t-grid", "0:40:10", "--reps", "500", "--seed",
                                      "3"};
  auto with = [&](std::vector<std::string> extra) {
    auto args = base;
    args.insert(args.end(), extra.begin(), extra.end());
    return args;
  };
  const auto a = (dir / "a.csv").string();
  const auto b = (dir / "b.csv").string();
  const auto c = (dir / "c.json").string();
  ASSERT_EQ(Cli(with({"--out", a})).code, 0);
  ASSERT_EQ(Cli(with({"--out", b, "--workers", "3"})).code, 0);
  EXPECT_EQ(Slurp(a), Slurp(b));
  ASSERT_EQ(Cli(with({"--out", c, "--format", "json", "--workers", "2"})).code, 0);
  const std::string first = Slurp(c);
  ASSERT_EQ(Cli(with({"--out", c, "--format", "json", "--workers", "2"})).code, 0);
  EXPECT_EQ(Slurp(c), first);
  EXPECT_NE(first.find("\"seed\": 3"), std::string::npos);
}

TEST(SimulateCommandTest, StationaryFrequencyNearHalf) {
  const auto r = Cli({"simulate", "--n", "5", "--f", "3", "--g", "2", "--t", "200", "--reps",
                      "20000", "--statistics", "in_A", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto at = r.out.find("\"mean\": \"");
  ASSERT_NE(at, std::string::npos);
  const double mean = std::stod(r.out.substr(at + 9));
  EXPECT_NEAR(mean, 0.5, 0.0092);
  EXPECT_NE(r.out.find("\"stationary_in_A\": \"1/2\""), std::string::npos);
}

TEST(SimulateCommandTest, UsageErrors) {
  EXPECT_EQ(Cli({"simulate", "--n", "5", "--f", "3", "--g", "2", "--t", "5", "--reps", "0"}).code,
            kExitUsage);
  EXPECT_EQ(Cli({"simulate", "--n", "5", "--f", "3", "--g", "2"}).code, kExitUsage);
  EXPECT_EQ(Cli({"simulate", "--n", "5", "--f", "3", "--g", "2", "--t", "5", "--statistics",
                 "bogus"})
                .code,
            kExitUsage);
  EXPECT_EQ(Cli({"simulate", "--n", "5", "--f", "3", "--g", "2", "--t", "5", "--start",
                 "45123"})
                .code,
            kExitUsage);
  EXPECT_EQ(Cli({}).code, kExitUsage);
  EXPECT_EQ(Cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(Cli({"--help"}).code, kExitOk);
}

TEST(SimulateCommandTest, ConfigFileMirrorsFlags) {
  TempDir dir;
  const auto config = (dir / "run.json").string();
  std::ofstream(config) << R"({"n": 5, "f": 3, "g": 2, "t-grid": [0, 5], "reps": 100,
                               "seed": 11, "statistics": ["in_A"]})";
  const auto from_file = Cli({"simulate", "--config", config});
  const auto from_flags = Cli({"simulate", "--n", "5", "--f", "3", "--g", "2", "--t-grid", "0,5",
                               "--reps", "100", "--seed", "11", "--statistics", "in_A"});
  ASSERT_EQ(from_file.code, 0) << from_file.err;
  EXPECT_EQ(from_file.out, from_flags.out);
  // Command-line flags win over the file.
  const auto override = Cli({"simulate", "--config", config, "--reps", "7"});
  EXPECT_NE(override.out.find(",7\n"), std::string::npos);
  std::ofstream(config) << R"({"bogus": 1})";
  EXPECT_EQ(Cli({"simulate", "--config", config}).code, kExitUsage);
  EXPECT_EQ(Cli({"simulate", "--config", (dir / "missing.json").string()}).code, kExitUsage);
}

}  // namespace
}  // namespace rtwalk::cli
