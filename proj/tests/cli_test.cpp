// Copyright 2026 The szverify Authors.
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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"
#include "suzuki/pipeline.hpp"

namespace suzuki {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "szverify");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

// The installed binary, for the process-level exit status.
int run_binary(const std::string& args) {
  const std::string command = std::string(SZVERIFY_BINARY) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

nlohmann::json load_without_timings(const std::filesystem::path& path) {
  std::ifstream in(path);
  nlohmann::json j = nlohmann::json::parse(in);
  for (auto& stage : j["stages"]) stage.erase("elapsed_ms");
  return j;
}

class TempDir {
 public:
  TempDir() : path_(std::filesystem::temp_directory_path() / ("szverify_cli_" + std::to_string(::getpid()))) {
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"no-such-command"}).code, kExitUsage);
  EXPECT_EQ(run({"field-selftest", "--jobs", "0"}).code, kExitUsage);
  EXPECT_EQ(run({"enumerate-x", "--mode", "sideways"}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(Cli, UnsupportedQ) {
  const Outcome o = run({"field-selftest", "--q", "16"});
  EXPECT_EQ(o.code, kExitUnsupportedQ);
  EXPECT_NE(o.err.find("unsupported"), std::string::npos);
  EXPECT_EQ(run({"build-group", "--q", "128"}).code, kExitUnsupportedQ);
}

TEST(Cli, FieldSelftest) {
  const Outcome o = run({"field-selftest", "--q", "8"});
  EXPECT_EQ(o.code, kExitOk) << o.out;
  EXPECT_NE(o.out.find("[PASS] field"), std::string::npos);
  EXPECT_NE(o.out.find("overall: pass"), std::string::npos);
}

TEST(Cli, ClosedFormX) {
  const Outcome o = run({"enumerate-x", "--mode", "closed-form"});
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_NE(o.out.find("0 0 0 1 0 0 1 0 0 1 0 0 1 0 0 0\n"), std::string::npos);
  EXPECT_NE(o.out.find("1 0 0 0 0 1 0 0 0 0 1 0 0 0 0 1\n"), std::string::npos);
}

TEST(Cli, ScannedXDisagreesWithClosedForm) {
  const Outcome o = run({"enumerate-x", "--mode", "both"});
  EXPECT_EQ(o.code, kExitTheoremViolation);
  EXPECT_NE(o.out.find("closed form == brute force: false"), std::string::npos);
}

TEST(Cli, CheckEquationsOnOneMatrix) {
  const Outcome ok = run({"check-equations", "--matrix", "0 0 0 1 0 0 1 0 0 1 0 0 1 0 0 0"});
  EXPECT_EQ(ok.code, kExitOk);
  EXPECT_NE(ok.out.find("all satisfied: true"), std::string::npos);

  const Outcome bad = run({"check-equations", "--matrix", "1 1 0 0 1 1 0 0 0 0 1 0 0 0 0 1"});
  EXPECT_EQ(bad.code, kExitCheckFailed);
  EXPECT_NE(bad.out.find("S1   FAIL"), std::string::npos);

  // Not symmetric: a precondition, reported as a failed check.
  EXPECT_EQ(run({"check-equations", "--matrix", "1 1 0 0 0 1 0 0 0 0 1 0 0 0 0 1"}).code, kExitCheckFailed);
}

TEST(Cli, CheckEquationsSolvesSystem) {
  const Outcome o = run({"check-equations"});
  EXPECT_EQ(o.code, kExitOk) << o.out;
  EXPECT_NE(o.out.find("nonsingular solutions == closed form: true"), std::string::npos);
}

TEST(Cli, Involutions) {
  const Outcome o = run({"involutions"});
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_NE(o.out.find("involutions: 455, class of iota: 455"), std::string::npos);
}

TEST(Cli, BuildGroupWithCacheAndStableReports) {
  TempDir dir;
  const std::string cache = (dir.path() / "cache").string();
  const std::string r1 = (dir.path() / "r1.json").string();
  const std::string r8 = (dir.path() / "r8.json").string();
  const Outcome first = run({"build-group", "--cache-dir", cache, "--jobs", "1", "--report", r1});
  EXPECT_EQ(first.code, kExitOk) << first.out << first.err;
  EXPECT_NE(first.out.find("order: 29120"), std::string::npos);
  EXPECT_TRUE(std::filesystem::exists(std::filesystem::path(cache) / "sz8.szq"));

  const Outcome second = run({"build-group", "--cache-dir", cache, "--jobs", "8", "--report", r8});
  EXPECT_EQ(second.code, kExitOk);
  EXPECT_EQ(load_without_timings(r1), load_without_timings(r8));
  const nlohmann::json report = load_without_timings(r1);
  EXPECT_EQ(report["schema"], "szverify-report/1");
  EXPECT_EQ(report["q"], 8);

  // A corrupted cache is an I/O error, not a silent rebuild.
  std::ofstream(std::filesystem::path(cache) / "sz8.szq", std::ios::trunc) << "SZQ 8 3\n";
  EXPECT_EQ(run({"build-group", "--cache-dir", cache}).code, kExitIo);
}

TEST(Cli, ReportStableAcrossJobs) {
  TempDir dir;
  const std::string r1 = (dir.path() / "a.json").string();
  const std::string r8 = (dir.path() / "b.json").string();
  EXPECT_EQ(run({"involutions", "--jobs", "1", "--report", r1}).code, kExitOk);
  EXPECT_EQ(run({"involutions", "--jobs", "8", "--report", r8}).code, kExitOk);
  EXPECT_EQ(load_without_timings(r1), load_without_timings(r8));
}

TEST(Cli, UnwritableReport) {
  EXPECT_EQ(run({"field-selftest", "--report", "/nonexistent-dir/r.json"}).code, kExitIo);
}

TEST(Cli, BudgetExhausted) {
  EXPECT_EQ(run({"build-group", "--budget", "1000"}).code, kExitBudget);
}

TEST(Cli, BinaryExitStatus) {
  EXPECT_EQ(run_binary("field-selftest --q 8"), kExitOk);
  EXPECT_EQ(run_binary("field-selftest --q 16"), kExitUnsupportedQ);
  EXPECT_EQ(run_binary(""), kExitUsage);
}

}  // namespace
}  // namespace suzuki
