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

#include "suzuki/fixed_set.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <memory>
#include <random>

#include "suzuki/errors.hpp"
#include "suzuki/wilson.hpp"

namespace suzuki {
namespace {

class FixedSet : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    ctx_ = std::make_unique<SuzukiContext>(make_context(1));
    group_ = std::make_unique<GroupSet>(build_suzuki(*ctx_));
  }
  static void TearDownTestSuite() {
    group_.reset();
    ctx_.reset();
  }

  Mat4 random_symmetric(std::mt19937& rng) const {
    std::uniform_int_distribution<int> pick(0, static_cast<int>(f.order()) - 1);
    Mat4 x;
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i; j < 4; ++j) {
        x(i, j) = x(j, i) = FieldElement{static_cast<std::uint16_t>(pick(rng))};
      }
    }
    return x;
  }

  std::size_t label_index(std::string_view label) const {
    const auto defs = equation_definitions();
    for (std::size_t i = 0; i < defs.size(); ++i) {
      if (defs[i].label == label) return i;
    }
    ADD_FAILURE() << "no equation " << label;
    return 0;
  }

  static std::unique_ptr<SuzukiContext> ctx_;
  static std::unique_ptr<GroupSet> group_;
  const SuzukiContext& ctx = *ctx_;
  const GaloisField& f = ctx_->field();
  const GroupSet& group = *group_;
};

std::unique_ptr<SuzukiContext> FixedSet::ctx_;
std::unique_ptr<GroupSet> FixedSet::group_;

TEST_F(FixedSet, MembershipExamples) {
  EXPECT_TRUE(in_fixed_set(f, ctx.iota()));
  EXPECT_TRUE(in_fixed_set(f, identity_matrix()));
  // diag(a, b, c, d) iota diag(a, b, c, d) = iota needs ad = bc = 1.
  EXPECT_FALSE(in_fixed_set(f, diagonal_matrix(FieldElement{2}, FieldElement{1}, FieldElement{1}, FieldElement{2})));
  EXPECT_TRUE(in_fixed_set(f, diagonal_matrix(FieldElement{2}, FieldElement{3}, f.inv(FieldElement{3}),
                                              f.inv(FieldElement{2}))));
}

TEST_F(FixedSet, SymmetryLemmaPreconditions) {
  EXPECT_TRUE(symmetry_lemma_check(f, ctx.iota()));
  EXPECT_TRUE(symmetry_lemma_check(f, identity_matrix()));
  // Symplectic but outside X.
  EXPECT_THROW(symmetry_lemma_check(f, transvection(f, basis_vector(0), FieldElement{1})), PreconditionViolated);
  // s iota for the swap s of e1 and e2: in X, not symplectic.
  Mat4 swap;
  swap(0, 1) = swap(1, 0) = swap(2, 2) = swap(3, 3) = f.one();
  const Mat4 x = mat_mul(f, swap, ctx.iota());
  ASSERT_TRUE(in_fixed_set(f, x));
  ASSERT_FALSE(is_symplectic(f, x));
  EXPECT_THROW(symmetry_lemma_check(f, x), PreconditionViolated);
}

TEST_F(FixedSet, TwentyLabelledEquations) {
  const auto defs = equation_definitions();
  ASSERT_EQ(defs.size(), kEquationCount);
  EXPECT_EQ(defs.front().label, "S1");
  EXPECT_EQ(defs[17].label, "S18");
  EXPECT_EQ(defs[18].label, "P14");
  EXPECT_EQ(defs[19].label, "P23");
}

TEST_F(FixedSet, EquationExamples) {
  EXPECT_TRUE(eval_equation_system(ctx, identity_matrix()).all_satisfied);
  EXPECT_TRUE(eval_equation_system(ctx, ctx.iota()).all_satisfied);

  Mat4 x = identity_matrix();
  x(0, 1) = x(1, 0) = f.one();
  const EquationReport report = eval_equation_system(ctx, x);
  EXPECT_FALSE(report.all_satisfied);
  // S1 reads 0 * 0 + 0 * 1 = 0 against a12 = 1.
  const EquationResult& s1 = report.equations[label_index("S1")];
  EXPECT_FALSE(s1.satisfied);
  EXPECT_EQ(s1.lhs, f.zero());
  EXPECT_EQ(s1.rhs, f.one());

  Mat4 skew = identity_matrix();
  skew(0, 1) = f.one();
  EXPECT_THROW(eval_equation_system(ctx, skew), PreconditionViolated);
}

TEST_F(FixedSet, EquationsReadOnlyTheirListedEntries) {
  std::mt19937 rng(12);
  const auto defs = equation_definitions();
  std::vector<std::array<bool, 100>> seen_effect(defs.size());
  for (auto& s : seen_effect) s.fill(false);
  for (int k = 0; k < 400; ++k) {
    const Mat4 x = random_symmetric(rng);
    const SymmetricEntries base(f, x);
    for (int i = 1; i <= 4; ++i) {
      for (int j = i; j <= 4; ++j) {
        Mat4 y = x;
        const FieldElement bump = y(i - 1, j - 1) + FieldElement{static_cast<std::uint16_t>(1 + k % 7)};
        y(i - 1, j - 1) = y(j - 1, i - 1) = bump;
        const SymmetricEntries moved(f, y);
        for (std::size_t e = 0; e < defs.size(); ++e) {
          const bool listed = std::find(defs[e].reads.begin(), defs[e].reads.end(), 10 * i + j) != defs[e].reads.end();
          const bool changed = defs[e].evaluate(base) != defs[e].evaluate(moved);
          if (!listed) ASSERT_FALSE(changed) << defs[e].label << " reads a" << i << j;
          if (changed) seen_effect[e][10 * i + j] = true;
        }
      }
    }
  }
  for (std::size_t e = 0; e < defs.size(); ++e) {
    for (std::uint8_t code : defs[e].reads) {
      if (code != 0) EXPECT_TRUE(seen_effect[e][code]) << defs[e].label << " never depends on " << int(code);
    }
  }
}

// Each coordinate of x e_i . x e_j + x (e_i . e_j) vanishes exactly when
// the corresponding equation holds, for any symmetric x.
TEST_F(FixedSet, ProductCoordinatesMatchEquations) {
  struct Source {
    std::size_t i, j;
    std::array<const char*, 4> labels;
  };
  const std::array<Source, 6> sources{{
      {0, 1, {"S1", "S2", "S3", "S4"}},
      {0, 2, {"S5", "S4", "S6", "S7"}},
      {3, 2, {"S9", "S3", "S10", "S6"}},
      {1, 3, {"S8", "S1", "S9", "S5"}},
      {0, 3, {"S11", "S12", "S13", "S14"}},
      {1, 2, {"S15", "S16", "S17", "S18"}},
  }};
  std::mt19937 rng(31);
  for (int k = 0; k < 3000; ++k) {
    Mat4 x = random_symmetric(rng);
    // Zero a few entries so that many equations hold.
    for (std::size_t z = 0; z < 3; ++z) {
      const std::size_t r = rng() % 4, c = rng() % 4;
      x(r, c) = x(c, r) = f.zero();
    }
    const EquationReport report = eval_equation_system(ctx, x);
    for (const Source& s : sources) {
      const Vec4 residual = bullet(ctx, column(x, s.i), column(x, s.j)) +
                            mat_vec(f, x, bullet(ctx, basis_vector(s.i), basis_vector(s.j)));
      for (std::size_t c = 0; c < 4; ++c) {
        ASSERT_EQ(residual[c].is_zero(), report.equations[label_index(s.labels[c])].satisfied)
            << "pair e" << s.i + 1 << ", e" << s.j + 1 << " coordinate " << c + 1;
      }
    }
    EXPECT_EQ(from_nonperpendicular_pair(label_index("S11")), !form_f(f, basis_vector(0), basis_vector(3)).is_zero());
  }
}

TEST_F(FixedSet, ClosedForm) {
  const std::vector<Mat4> x = closed_form_X(ctx);
  ASSERT_EQ(x.size(), 8u);
  EXPECT_TRUE(std::is_sorted(x.begin(), x.end()));
  EXPECT_EQ(std::count(x.begin(), x.end(), ctx.iota()), 1);
  for (const Mat4& m : x) {
    EXPECT_TRUE(is_symmetric(m));
    EXPECT_TRUE(in_fixed_set(f, m));
    EXPECT_TRUE(is_suzuki(ctx, m));
    EXPECT_TRUE(eval_equation_system(ctx, m).all_satisfied);
    EXPECT_TRUE(group.contains(m));
  }
  const FieldElement a{2};
  const Mat4 d = torus_element(ctx, a);
  EXPECT_EQ(d(0, 0), a);
  EXPECT_EQ(d(1, 1), f.pow(a, 2 * ctx.t() + 1));
  EXPECT_EQ(d(2, 2), f.pow(a, -(2 * static_cast<std::int64_t>(ctx.t()) + 1)));
  EXPECT_EQ(d(3, 3), f.inv(a));
}

// x iota x = iota iff (x iota)^2 = 1, so X = {s iota : s^2 = 1}.
TEST_F(FixedSet, ScanMatchesInvolutionOracle) {
  std::vector<Mat4> oracle;
  for (std::size_t i = 0; i < group.order(); ++i) {
    const Mat4 s = group.element(i);
    if (mat_mul(f, s, s) == identity_matrix()) oracle.push_back(mat_mul(f, s, ctx.iota()));
  }
  std::sort(oracle.begin(), oracle.end());
  const std::vector<Mat4> scanned = brute_force_X(ctx, group);
  EXPECT_EQ(scanned, oracle);
  EXPECT_EQ(scanned.size(), 456u);
  EXPECT_EQ(brute_force_X(ctx, group, 8), scanned);

  const FixedSetResult result = compare_fixed_set(ctx, group);
  EXPECT_FALSE(result.equal);
  for (const Mat4& m : result.closed_form) {
    EXPECT_TRUE(std::binary_search(scanned.begin(), scanned.end(), m));
  }
}

TEST_F(FixedSet, ScannedMembersFailOnlyNonperpendicularEquations) {
  std::size_t violating = 0;
  for (const Mat4& x : brute_force_X(ctx, group)) {
    ASSERT_TRUE(symmetry_lemma_check(f, x));
    const EquationReport report = eval_equation_system(ctx, x);
    for (std::size_t e = 0; e < kEquationCount; ++e) {
      if (!report.equations[e].satisfied) ASSERT_TRUE(from_nonperpendicular_pair(e)) << report.equations[e].label;
    }
    if (!report.all_satisfied) ++violating;
  }
  EXPECT_EQ(violating, 456u - 8u);
}

TEST_F(FixedSet, SolverReplaysCaseAnalysis) {
  const SystemSolutions solved = solve_equation_system(ctx);
  EXPECT_EQ(solved.nonsingular, closed_form_X(ctx));
  EXPECT_GE(solved.solutions.size(), solved.nonsingular.size());
  for (const Mat4& m : solved.solutions) EXPECT_TRUE(eval_equation_system(ctx, m).all_satisfied);
  EXPECT_EQ(solved.per_case_nonsingular[static_cast<std::size_t>(SystemCase::kAllZero)], 7u);
  EXPECT_EQ(solved.per_case_nonsingular[static_cast<std::size_t>(SystemCase::kA14Nonzero)], 1u);
  for (SystemCase c : {SystemCase::kA24Nonzero, SystemCase::kA12Nonzero, SystemCase::kA34Nonzero,
                       SystemCase::kA13Nonzero}) {
    EXPECT_EQ(solved.per_case_nonsingular[static_cast<std::size_t>(c)], 0u) << case_name(c);
  }
  EXPECT_THROW(solve_equation_system(ctx, 10), BudgetExceeded);
}

TEST_F(FixedSet, CaseClassification) {
  EXPECT_EQ(classify_case(ctx.iota()), SystemCase::kA14Nonzero);
  EXPECT_EQ(classify_case(identity_matrix()), SystemCase::kAllZero);
  Mat4 x = identity_matrix();
  x(1, 3) = x(3, 1) = f.one();
  x(0, 1) = x(1, 0) = f.one();
  EXPECT_EQ(classify_case(x), SystemCase::kA24Nonzero);
}

}  // namespace
}  // namespace suzuki
