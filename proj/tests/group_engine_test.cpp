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

#include "suzuki/group_engine.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <memory>
#include <random>
#include <set>

#include "suzuki/errors.hpp"
#include "suzuki/fixed_set.hpp"
#include "suzuki/wilson.hpp"

namespace suzuki {
namespace {

class Sz8 : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    ctx_ = std::make_unique<SuzukiContext>(make_context(1));
    group_ = std::make_unique<GroupSet>(build_suzuki(*ctx_));
  }
  static void TearDownTestSuite() {
    group_.reset();
    ctx_.reset();
  }

  static std::unique_ptr<SuzukiContext> ctx_;
  static std::unique_ptr<GroupSet> group_;
  const SuzukiContext& ctx = *ctx_;
  const GaloisField& f = ctx_->field();
  const GroupSet& group = *group_;
};

std::unique_ptr<SuzukiContext> Sz8::ctx_;
std::unique_ptr<GroupSet> Sz8::group_;

TEST(Closure, DihedralOfOrder14) {
  const SuzukiContext ctx = make_context(1);
  const Mat4 d = torus_element(ctx, ctx.field().primitive_element());
  const std::vector<Mat4> gens{d, ctx.iota()};
  const GroupSet h = closure(ctx.field(), gens);
  EXPECT_EQ(h.order(), 14u);
  EXPECT_EQ(element_order(ctx.field(), d), 7u);
  EXPECT_EQ(element_order(ctx.field(), ctx.iota()), 2u);
  EXPECT_EQ(element_order(ctx.field(), identity_matrix()), 1u);
}

TEST(Closure, CeilingAndSingularGenerator) {
  const SuzukiContext ctx = make_context(1);
  const Mat4 d = torus_element(ctx, ctx.field().primitive_element());
  const std::vector<Mat4> gens{d, ctx.iota()};
  EXPECT_THROW(closure(ctx.field(), gens, 13), BudgetExceeded);
  EXPECT_NO_THROW(closure(ctx.field(), gens, 14));
  Mat4 singular = identity_matrix();
  singular(0, 0) = FieldElement{0};
  const std::vector<Mat4> bad{singular};
  EXPECT_THROW(closure(ctx.field(), bad), PreconditionViolated);
}

TEST(Closure, TrivialGroup) {
  const SuzukiContext ctx = make_context(1);
  const std::vector<Mat4> none;
  EXPECT_EQ(closure(ctx.field(), none).order(), 1u);
}

TEST(GroupSetTest, InsertFindContains) {
  GroupSet s;
  const Mat4 a = identity_matrix();
  Mat4 b = a;
  b(0, 1) = FieldElement{5};
  EXPECT_TRUE(s.insert(a));
  EXPECT_FALSE(s.insert(a));
  EXPECT_TRUE(s.insert(b));
  EXPECT_EQ(s.order(), 2u);
  EXPECT_TRUE(s.contains(b));
  EXPECT_EQ(s.find(b), std::optional<std::size_t>{1});
  Mat4 c = b;
  c(3, 3) = FieldElement{7};
  EXPECT_FALSE(s.contains(c));
  for (std::uint16_t k = 0; k < 2000; ++k) {
    Mat4 m;
    m(0, 0) = FieldElement{static_cast<std::uint16_t>(k & 0xff)};
    m(1, 1) = FieldElement{static_cast<std::uint16_t>(k >> 8)};
    s.insert(m);
  }
  EXPECT_TRUE(s.contains(b));
  const auto sorted = s.sorted_elements();
  EXPECT_TRUE(std::is_sorted(sorted.begin(), sorted.end()));
}

TEST_F(Sz8, OrderAndSylow) {
  EXPECT_EQ(group.order(), 29120u);
  EXPECT_EQ(group.order(), ctx.suzuki_order_formula());
  const std::vector<Mat4> sylow = sylow_two_subgroup(ctx);
  EXPECT_EQ(sylow.size(), 64u);
  const GroupSet p = closure(f, sylow);
  EXPECT_EQ(p.order(), 64u);
  for (const Mat4& g : sylow) {
    const std::uint64_t o = element_order(f, g);
    EXPECT_EQ(o & (o - 1), 0u) << o;
    // Fixes e3.
    EXPECT_EQ(mat_vec(f, g, basis_vector(2)), basis_vector(2));
  }
}

TEST_F(Sz8, PlainLowerUnitriangularMeetsOnlyQElements) {
  const std::vector<Mat4> lower = lower_unitriangular_symplectic(ctx);
  EXPECT_EQ(lower.size(), 4096u);
  std::size_t members = 0;
  for (const Mat4& m : lower) {
    EXPECT_TRUE(is_symplectic(f, m));
    if (is_suzuki(ctx, m)) ++members;
  }
  EXPECT_EQ(members, 8u);
  const Mat4 pi = weight_order_permutation();
  EXPECT_TRUE(is_symplectic(f, pi));
  EXPECT_EQ(mat_mul(f, pi, pi), identity_matrix());
}

TEST_F(Sz8, EveryElementPassesMembership) {
  for (std::size_t i = 0; i < group.order(); i += 7) ASSERT_TRUE(is_suzuki(ctx, group.element(i))) << i;
}

TEST_F(Sz8, ElementOrdersDivideGroupOrder) {
  std::set<std::uint64_t> orders;
  for (std::size_t i = 0; i < group.order(); i += 3) {
    const std::uint64_t o = element_order(f, group.element(i));
    EXPECT_EQ(group.order() % o, 0u);
    orders.insert(o);
  }
  // Sz(8) has elements of orders 1, 2, 4, 5, 7, 13 only.
  for (std::uint64_t o : orders) EXPECT_TRUE(std::set<std::uint64_t>({1, 2, 4, 5, 7, 13}).contains(o)) << o;
}

TEST_F(Sz8, ClosureIsIdempotentAndJobIndependent) {
  const std::vector<Mat4> gens = suzuki_generators(ctx);
  const GroupSet one = closure(f, gens, kDefaultBudget, 1);
  const GroupSet eight = closure(f, gens, kDefaultBudget, 8);
  ASSERT_EQ(one.order(), eight.order());
  for (std::size_t i = 0; i < one.order(); ++i) ASSERT_EQ(one.element(i), eight.element(i));
  const std::vector<Mat4> all = one.sorted_elements();
  std::vector<Mat4> some(all.begin(), all.begin() + 50);
  some.insert(some.end(), gens.begin(), gens.end());
  EXPECT_EQ(closure(f, some).order(), one.order());
}

TEST_F(Sz8, IotaClassHas455Elements) {
  const ConjugationOrbit orbit = conjugation_orbit(f, ctx.iota(), group);
  EXPECT_EQ(orbit.elements.size(), 455u);
  EXPECT_EQ(orbit.elements.front(), ctx.iota());
  for (const Mat4& x : orbit.elements) {
    const Mat4& h = orbit.conjugator.at(x);
    EXPECT_EQ(mat_mul(f, mat_mul(f, h, ctx.iota()), invert(f, h)), x);
  }
  Mat4 outside = identity_matrix();
  outside(0, 1) = FieldElement{1};
  EXPECT_THROW(conjugation_orbit(f, outside, group), PreconditionViolated);
}

TEST_F(Sz8, LagrangeOnCyclicSubgroups) {
  std::mt19937 rng(4);
  std::uniform_int_distribution<std::size_t> pick(0, group.order() - 1);
  for (int k = 0; k < 20; ++k) {
    const std::vector<Mat4> gens{group.element(pick(rng))};
    const GroupSet h = closure(f, gens);
    EXPECT_EQ(h.order(), element_order(f, gens[0]));
    EXPECT_EQ(group.order() % h.order(), 0u);
  }
}

TEST_F(Sz8, Commutator) {
  const Mat4 g = group.element(5), h = group.element(77);
  const Mat4 c = commutator(f, g, h);
  EXPECT_EQ(c, mat_mul(f, mat_mul(f, invert(f, g), invert(f, h)), mat_mul(f, g, h)));
  EXPECT_EQ(commutator(f, g, g), identity_matrix());
}

TEST_F(Sz8, PerfectNotSolvable) {
  const DerivedSeries series = derived_series(f, group, 8);
  EXPECT_FALSE(series.solvable);
  EXPECT_TRUE(series.stabilized);
  ASSERT_EQ(series.orders.size(), 2u);
  EXPECT_EQ(series.orders[0], 29120u);
  EXPECT_EQ(series.orders[1], 29120u);
  EXPECT_FALSE(derived_series_solvable(f, group, 8));
}

TEST(DerivedSeriesTest, DihedralIsSolvable) {
  const SuzukiContext ctx = make_context(1);
  const Mat4 d = torus_element(ctx, ctx.field().primitive_element());
  const std::vector<Mat4> gens{d, ctx.iota()};
  const DerivedSeries series = derived_series(ctx.field(), closure(ctx.field(), gens));
  EXPECT_TRUE(series.solvable);
  EXPECT_EQ(series.orders, (std::vector<std::size_t>{14, 7, 1}));
}

TEST(DerivedSeriesTest, SylowIsSolvable) {
  const SuzukiContext ctx = make_context(1);
  const std::vector<Mat4> sylow = sylow_two_subgroup(ctx);
  const DerivedSeries series = derived_series(ctx.field(), closure(ctx.field(), sylow));
  EXPECT_TRUE(series.solvable);
  EXPECT_EQ(series.orders.front(), 64u);
  EXPECT_EQ(series.orders.back(), 1u);
}

TEST_F(Sz8, CacheRoundTripAndCorruption) {
  const std::filesystem::path dir = std::filesystem::temp_directory_path() / "szverify_group_test";
  std::filesystem::create_directories(dir);
  const std::filesystem::path path = group_cache_path(dir, ctx);
  EXPECT_EQ(path.filename(), "sz8.szq");
  save_group(path, ctx, group);
  const GroupSet loaded = load_group(path, ctx);
  EXPECT_EQ(loaded.sorted_elements(), group.sorted_elements());

  // Drop the last line: the order no longer matches.
  std::vector<std::string> lines;
  {
    std::ifstream in(path);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
  }
  const std::filesystem::path truncated = dir / "truncated.szq";
  {
    std::ofstream out(truncated);
    for (std::size_t i = 0; i + 1 < lines.size(); ++i) out << lines[i] << '\n';
  }
  EXPECT_THROW(load_group(truncated, ctx), CacheError);

  const std::filesystem::path wrong_q = dir / "wrong_q.szq";
  {
    std::ofstream out(wrong_q);
    out << "SZQ 32 29120\n";
    for (std::size_t i = 1; i < lines.size(); ++i) out << lines[i] << '\n';
  }
  EXPECT_THROW(load_group(wrong_q, ctx), CacheError);

  // A non-member swapped in for a member.
  const std::filesystem::path tampered = dir / "tampered.szq";
  {
    std::ofstream out(tampered);
    out << lines[0] << '\n';
    for (std::size_t i = 1; i < lines.size(); ++i) {
      out << (i == 1 ? to_text(transvection(f, basis_vector(0), FieldElement{1})) : lines[i]) << '\n';
    }
  }
  EXPECT_THROW(load_group(tampered, ctx, group.order()), CacheError);
  EXPECT_THROW(load_group(dir / "missing.szq", ctx), CacheError);
  std::filesystem::remove_all(dir);
}

TEST(BuildSuzuki, RefusesAboveCeiling) {
  const SuzukiContext ctx = make_context(1);
  EXPECT_THROW(build_suzuki(ctx, 1000), BudgetExceeded);
  EXPECT_THROW(build_suzuki(make_context(3)), BudgetExceeded);
}

}  // namespace
}  // namespace suzuki
