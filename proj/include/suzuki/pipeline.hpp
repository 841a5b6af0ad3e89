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

#ifndef SUZUKI_PIPELINE_HPP_
#define SUZUKI_PIPELINE_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "suzuki/context.hpp"
#include "suzuki/group_engine.hpp"
#include "suzuki/report.hpp"

namespace suzuki {

// Process exit statuses of szverify.
enum ExitStatus : int {
  kExitOk = 0,
  kExitCheckFailed = 1,       // a verification check did not hold
  kExitUsage = 2,             // unknown flag, bad value, missing subcommand
  kExitUnsupportedQ = 3,      // --q other than 8 or 32
  kExitBudget = 4,            // an enumeration hit --budget
  kExitTheoremViolation = 5,  // generating triple found, X mismatch, extra involution class, ...
  kExitIo = 6,                // cache or report file problem
  kExitInternal = 70,
};

struct RunOptions {
  std::uint32_t q = 8;
  unsigned jobs = 1;
  std::uint64_t budget = kDefaultBudget;
  std::optional<std::filesystem::path> cache_dir;
};

struct StageResult {
  std::string name;
  bool passed = false;
  // Set when the failure contradicts the theorem chain rather than being an
  // ordinary check failure.
  bool theorem_violation = false;
  double elapsed_ms = 0;
  std::string artifact;
  std::string claim;  // the mathematical statement the stage certifies
  Json details = Json::object();
};

struct VerificationRun {
  std::uint32_t q = 0;
  std::vector<StageResult> stages;
  bool overall() const;
  Json to_json() const;
};

// Stage names in pipeline order.
inline constexpr std::array<std::string_view, 6> kStageOrder{
    "field", "wilson", "group", "fixed-set", "involutions", "rank4"};

// Loads Sz(q) from the cache directory when a valid cache exists, otherwise
// builds it and (with a cache directory) stores it. `artifact` receives the
// cache path when one is used.
GroupSet obtain_group(const SuzukiContext& ctx, const RunOptions& opts, std::string* artifact);

StageResult stage_field(const SuzukiContext& ctx, const RunOptions& opts);
StageResult stage_wilson(const SuzukiContext& ctx, const RunOptions& opts);
StageResult stage_group(const SuzukiContext& ctx, const RunOptions& opts, const GroupSet& group,
                        const std::string& artifact);
StageResult stage_fixed_set(const SuzukiContext& ctx, const RunOptions& opts, const GroupSet& group);
StageResult stage_involutions(const SuzukiContext& ctx, const RunOptions& opts, const GroupSet& group);
StageResult stage_rank4(const SuzukiContext& ctx, const RunOptions& opts, const GroupSet& group);

// Every stage in order. Exceptions (budget, cache, theorem violations
// raised while building the group) propagate to the caller.
VerificationRun verify_all(const SuzukiContext& ctx, const RunOptions& opts);

// Entry point of the szverify tool. argv[0] is the program name.
int run_cli(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace suzuki

#endif  // SUZUKI_PIPELINE_HPP_
