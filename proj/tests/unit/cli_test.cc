// Copyright 2026 The collatz_stop Authors.
//
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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace collatz::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "collatz");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "collatz_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

TEST(CliTest, Stop) {
  const auto r = invoke({"stop", "27"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out,
            "n,s,r,q,value\n27,59,37,"
            "11011111010110111011110100111011011111100111100010101000100,23\n");
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"stop"}).code, kExitUsage);
  EXPECT_EQ(invoke({"stop", "abc"}).code, kExitUsage);
  EXPECT_EQ(invoke({"seq", "12", "--apply", "3"}).code, kExitUsage);
  EXPECT_EQ(invoke({"scan", "--class", "odd"}).code, kExitUsage);
  EXPECT_EQ(invoke({"bounds"}).code, kExitUsage);
}

TEST(CliTest, HelpSucceeds) {
  const auto r = invoke({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("table4"), std::string::npos);
}

TEST(CliTest, DomainErrors) {
  const auto r = invoke({"stop", "1"});
  EXPECT_EQ(r.code, kExitDomain);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("n >= 2"), std::string::npos);
  EXPECT_EQ(invoke({"cycles", "--s-max", "30"}).code, kExitDomain);
  EXPECT_EQ(invoke({"stop", "27", "--cap", "5"}).code, kExitDomain);
}

TEST(CliTest, TrajectoryTruncationNote) {
  const auto r = invoke({"traj", "27", "--limit", "3"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.err.find("truncated"), std::string::npos);
}

TEST(CliTest, SeqClosedForm) {
  const auto r = invoke({"seq", "1100", "--apply", "7"});
  EXPECT_EQ(r.out, "q,s,r,weighted_sum,sigma,n,value,exact,prefix\n1100,4,2,5,5/16,7,17/4,0,0\n");
}

TEST(CliTest, Table2JsonLines) {
  const auto r = invoke({"table2", "--max-n", "11", "--json"});
  EXPECT_EQ(r.out,
            "{\"n\":3,\"class\":\"12i+3\",\"q\":\"1100\",\"F\":2}\n"
            "{\"n\":7,\"class\":\"12i+7\",\"q\":\"1110100\",\"F\":5}\n"
            "{\"n\":11,\"class\":\"12i+11\",\"q\":\"11010\",\"F\":10}\n");
}

TEST(CliTest, CheckpointRequiresOutputFile) {
  const auto r = invoke({"scan", "--end", "100", "--checkpoint", scratch("lonely").string()});
  EXPECT_EQ(r.code, kExitUsage);
}

TEST(CliTest, ScanFileOutputVerifies) {
  const auto out = scratch("scan.csv");
  const auto ledger = scratch("scan.ledger");
  fs::remove(out);
  fs::remove(ledger);
  auto r = invoke({"scan", "--end", "3000", "--out", out.string(), "--checkpoint",
                   ledger.string(), "--chunk-size", "128", "--workers", "3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.err.find("rows=2999"), std::string::npos);
  const std::string first = slurp(out);

  // Rerunning against the finished ledger leaves the file untouched.
  r = invoke({"scan", "--end", "3000", "--out", out.string(), "--checkpoint", ledger.string(),
              "--chunk-size", "128", "--workers", "3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(slurp(out), first);

  r = invoke({"verify", out.string()});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "kind=scan rows=2999 mismatches=0\n");

  r = invoke({"scan", "--end", "4000", "--out", out.string(), "--checkpoint", ledger.string()});
  EXPECT_EQ(r.code, kExitPersistence);
}

TEST(CliTest, VerifyDetectsEdits) {
  const auto out = scratch("t2.csv");
  ASSERT_EQ(invoke({"table2", "--max-n", "100", "--out", out.string()}).code, kExitOk);
  std::string text = slurp(out);
  const auto pos = text.find("27,12i+3,,23");
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, 12, "27,12i+3,,24");
  std::ofstream(out, std::ios::binary | std::ios::trunc) << text;
  const auto r = invoke({"verify", out.string()});
  EXPECT_EQ(r.code, kExitDomain);
  EXPECT_NE(r.out.find("mismatches=1"), std::string::npos);
}

TEST(CliTest, VerifyMissingFile) {
  EXPECT_EQ(invoke({"verify", scratch("absent.csv").string()}).code, kExitPersistence);
}

}  // namespace
}  // namespace collatz::cli
