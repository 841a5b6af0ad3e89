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

#include <chrono>
#include <cstdlib>
#include <fstream>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "suzuki/chiral_verifier.hpp"
#include "suzuki/fixed_set.hpp"
#include "suzuki/pipeline.hpp"
#include "suzuki/wilson.hpp"

namespace suzuki {

namespace {

struct CommonFlags {
  std::uint32_t q = 8;
  unsigned jobs = 1;
  std::uint64_t budget = kDefaultBudget;
  std::string cache_dir;
  std::string report;
};

void add_common_flags(CLI::App* sub, CommonFlags& flags) {
  sub->add_option("--q", flags.q, "Field size, 8 or 32")->capture_default_str();
  sub->add_option("--jobs", flags.jobs, "Worker threads for parallel stages")
      ->check(CLI::Range(1u, 1024u))
      ->capture_default_str();
  sub->add_option("--budget", flags.budget, "Element-count ceiling for enumerations")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--cache-dir", flags.cache_dir, "Directory for the enumerated group cache")
      ->envname("SUZUKI_CACHE_DIR");
  sub->add_option("--report", flags.report, "Write a JSON report to this path");
}

void print_stage(std::ostream& out, const StageResult& s) {
  out << fmt::format("[{}] {} ({:.0f} ms)\n", s.passed ? "PASS" : "FAIL", s.name, s.elapsed_ms);
  out << "  claim: " << s.claim << '\n';
  if (!s.artifact.empty()) out << "  artifact: " << s.artifact << '\n';
  if (s.details.contains("checks")) {
    for (const auto& [name, ok] : s.details["checks"].items()) {
      if (!ok.get<bool>()) out << "  failed check: " << name << '\n';
    }
  }
}

int finish(const VerificationRun& run, const CommonFlags& flags, std::ostream& out, std::ostream& err) {
  for (const StageResult& s : run.stages) print_stage(out, s);
  out << "overall: " << (run.overall() ? "pass" : "fail") << '\n';
  if (!flags.report.empty()) {
    std::ofstream file(flags.report, std::ios::trunc);
    file << run.to_json().dump(2) << '\n';
    if (!file) {
      err << "cannot write report " << flags.report << '\n';
      return kExitIo;
    }
  }
  for (const StageResult& s : run.stages) {
    if (s.theorem_violation) return kExitTheoremViolation;
  }
  return run.overall() ? kExitOk : kExitCheckFailed;
}

RunOptions to_options(const CommonFlags& flags) {
  RunOptions opts;
  opts.q = flags.q;
  opts.jobs = flags.jobs;
  opts.budget = flags.budget;
  if (!flags.cache_dir.empty()) opts.cache_dir = flags.cache_dir;
  return opts;
}

void print_equations(std::ostream& out, const EquationReport& r) {
  out << "matrix: " << to_text(r.matrix) << '\n';
  for (const EquationResult& e : r.equations) {
    out << fmt::format("  {:<4} {:<5} {}   (lhs {}, rhs {})\n", e.label, e.satisfied ? "ok" : "FAIL", e.text,
                       to_hex(e.lhs), to_hex(e.rhs));
  }
  out << "all satisfied: " << (r.all_satisfied ? "true" : "false") << '\n';
}

StageResult enumerate_x(const SuzukiContext& ctx, const RunOptions& opts, const std::string& mode,
                        std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  StageResult stage;
  stage.name = "fixed-set";
  stage.claim = "X = {x in Sz(q) : x iota x = iota} = {iota} u {diag(a, a^(2t+1), a^(-2t-1), a^(-1)) : a != 0}";
  stage.passed = true;
  const std::vector<Mat4> closed = closed_form_X(ctx);
  if (mode == "closed-form") {
    bool ok = true;
    for (const Mat4& x : closed) {
      out << to_text(x) << '\n';
      ok = ok && is_suzuki(ctx, x) && in_fixed_set(ctx.field(), x);
    }
    stage.details["closed_form"] = to_json(FixedSetResult{closed, {}, false})["closed_form"];
    stage.details["checks"]["members_in_suzuki_and_fixed"] = ok;
    stage.passed = ok;
  } else {
    std::string artifact;
    const GroupSet group = obtain_group(ctx, opts, &artifact);
    stage.artifact = artifact;
    if (mode == "scan") {
      const std::vector<Mat4> scanned = brute_force_X(ctx, group, opts.jobs);
      for (const Mat4& x : scanned) out << to_text(x) << '\n';
      stage.details["brute_force"] = to_json(FixedSetResult{{}, scanned, false})["brute_force"];
      stage.details["checks"]["size_is_q"] = scanned.size() == ctx.q();
      stage.passed = scanned.size() == ctx.q();
      stage.theorem_violation = !stage.passed;
    } else {
      const FixedSetResult result = compare_fixed_set(ctx, group, opts.jobs);
      for (const Mat4& x : result.brute_force) out << to_text(x) << '\n';
      out << "closed form == brute force: " << (result.equal ? "true" : "false") << '\n';
      stage.details["result"] = to_json(result);
      stage.details["checks"]["closed_form_equals_scan"] = result.equal;
      stage.passed = result.equal;
      stage.theorem_violation = !result.equal;
    }
  }
  stage.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return stage;
}

StageResult check_equations(const SuzukiContext& ctx, const RunOptions& opts, const std::string& matrix_text,
                            std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  StageResult stage;
  stage.name = "equations";
  stage.claim = "every symmetric x with x iota x = iota in Sz(q) satisfies the equation system; its nonsingular "
                "symmetric solutions are exactly the closed-form X";
  stage.passed = true;
  if (!matrix_text.empty()) {
    const EquationReport r = eval_equation_system(ctx, parse_mat4(ctx.field(), matrix_text));
    print_equations(out, r);
    stage.details["report"] = to_json(r);
    stage.passed = r.all_satisfied;
  } else {
    Json reports = Json::array();
    for (const Mat4& x : closed_form_X(ctx)) {
      const EquationReport r = eval_equation_system(ctx, x);
      print_equations(out, r);
      reports.push_back(to_json(r));
      stage.passed = stage.passed && r.all_satisfied;
    }
    stage.details["closed_form_reports"] = std::move(reports);
    const SystemSolutions solved = solve_equation_system(ctx, opts.budget);
    const bool matches = solved.nonsingular == closed_form_X(ctx);
    out << fmt::format("symmetric solutions: {} ({} nonsingular)\n", solved.solutions.size(),
                       solved.nonsingular.size());
    for (std::size_t c = 0; c < kSystemCaseCount; ++c) {
      out << fmt::format("  case {:<40} solutions {:>6}  nonsingular {:>3}\n", case_name(static_cast<SystemCase>(c)),
                         solved.per_case[c], solved.per_case_nonsingular[c]);
    }
    out << "nonsingular solutions == closed form: " << (matches ? "true" : "false") << '\n';
    stage.details["equation_system"] = to_json(solved);
    stage.details["checks"]["nonsingular_solutions_equal_closed_form"] = matches;
    stage.passed = stage.passed && matches;
    stage.theorem_violation = !matches;
  }
  stage.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return stage;
}

}  // namespace

int run_cli(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exhaustive verification that Sz(q) admits no rank-4 chiral polytope", "szverify"};
  app.require_subcommand(1, 1);

  CommonFlags flags;
  std::string mode = "both";
  std::string matrix_text;

  CLI::App* field_cmd = app.add_subcommand("field-selftest", "Field axioms and Frobenius identities");
  CLI::App* build_cmd = app.add_subcommand("build-group", "Enumerate Sz(q) and validate it");
  CLI::App* x_cmd = app.add_subcommand("enumerate-x", "The fixed set X by closed form and/or scan");
  CLI::App* eq_cmd = app.add_subcommand("check-equations", "Evaluate and solve the equation system");
  CLI::App* inv_cmd = app.add_subcommand("involutions", "Involution count and the class of iota");
  CLI::App* rank4_cmd = app.add_subcommand("search-rank4", "Exhaustive rank-4 generating triple search");
  CLI::App* all_cmd = app.add_subcommand("verify-all", "Run every stage in order");
  for (CLI::App* sub : {field_cmd, build_cmd, x_cmd, eq_cmd, inv_cmd, rank4_cmd, all_cmd}) {
    add_common_flags(sub, flags);
  }
  x_cmd->add_option("--mode", mode, "closed-form, scan or both")
      ->check(CLI::IsMember({"closed-form", "scan", "both"}))
      ->capture_default_str();
  eq_cmd->add_option("--matrix", matrix_text, "Symmetric matrix as 16 hex fields, row-major");

  std::vector<const char*> raw;
  for (const std::string& a : argv) raw.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "szverify: " << e.what() << '\n';
    return kExitUsage;
  }

  if (flags.q != 8 && flags.q != 32) {
    err << "szverify: unsupported --q " << flags.q << " (supported: 8, 32)\n";
    return kExitUnsupportedQ;
  }

  try {
    const SuzukiContext ctx = make_context(exponent_for_q(flags.q));
    const RunOptions opts = to_options(flags);
    VerificationRun run;
    run.q = ctx.q();
    if (*field_cmd) {
      run.stages.push_back(stage_field(ctx, opts));
    } else if (*build_cmd) {
      std::string artifact;
      const auto start = std::chrono::steady_clock::now();
      const GroupSet group = obtain_group(ctx, opts, &artifact);
      StageResult s = stage_group(ctx, opts, group, artifact);
      s.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      out << "order: " << group.order() << '\n';
      run.stages.push_back(std::move(s));
    } else if (*x_cmd) {
      run.stages.push_back(enumerate_x(ctx, opts, mode, out));
    } else if (*eq_cmd) {
      run.stages.push_back(check_equations(ctx, opts, matrix_text, out));
    } else if (*inv_cmd) {
      const GroupSet group = obtain_group(ctx, opts, nullptr);
      StageResult s = stage_involutions(ctx, opts, group);
      out << "involutions: " << s.details["census"]["involutions"] << ", class of iota: "
          << s.details["census"]["iota_class_size"] << '\n';
      run.stages.push_back(std::move(s));
    } else if (*rank4_cmd) {
      const GroupSet group = obtain_group(ctx, opts, nullptr);
      StageResult s = stage_rank4(ctx, opts, group);
      out << "candidates: " << s.details["search"]["candidates"]
          << ", successes: " << s.details["search"]["successes"].size() << '\n';
      if (s.details["exhaustive"].is_object()) {
        const Json& full = s.details["exhaustive"];
        out << "full fixed set: " << full["fixed_set_size"] << " elements, ordered pairs: "
            << full["ordered_pairs"] << ", generating: " << full["generating_pairs"]
            << ", with intersection condition: " << full["intersecting_pairs"] << '\n';
      }
      run.stages.push_back(std::move(s));
    } else if (*all_cmd) {
      run = verify_all(ctx, opts);
    }
    return finish(run, flags, out, err);
  } catch (const BudgetExceeded& e) {
    err << "szverify: budget exhausted: " << e.what() << '\n';
    return kExitBudget;
  } catch (const CacheError& e) {
    err << "szverify: cache error: " << e.what() << '\n';
    return kExitIo;
  } catch (const TheoremViolation& e) {
    err << "szverify: theorem violation: " << e.what() << '\n';
    return kExitTheoremViolation;
  } catch (const PreconditionViolated& e) {
    err << "szverify: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const std::invalid_argument& e) {
    err << "szverify: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "szverify: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    err << "szverify: internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace suzuki
