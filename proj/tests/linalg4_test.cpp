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

#include "suzuki/linalg4.hpp"

#include <gtest/gtest.h>

#include <random>

#include "suzuki/context.hpp"
#include "suzuki/errors.hpp"
#include "suzuki/fixed_set.hpp"
#include "suzuki/group_engine.hpp"

namespace suzuki {
namespace {

class Linalg4 : public ::testing::Test {
 protected:
  SuzukiContext ctx = make_context(1);
  const GaloisField& f = ctx.field();

  Mat4 random_matrix(std::mt19937& rng) const {
    std::uniform_int_distribution<int> pick(0, static_cast<int>(f.order()) - 1);
    Mat4 m;
    for (FieldElement& x : m.entries) x = FieldElement{static_cast<std::uint16_t>(pick(rng))};
    return m;
  }
};

TEST_F(Linalg4, IotaReversesDiagonals) {
  const Mat4 d = diagonal_matrix(FieldElement{2}, FieldElement{3}, FieldElement{4}, FieldElement{5});
  const Mat4 reversed = diagonal_matrix(FieldElement{5}, FieldElement{4}, FieldElement{3}, FieldElement{2});
  EXPECT_EQ(mat_mul(f, mat_mul(f, ctx.iota(), d), ctx.iota()), reversed);
  EXPECT_EQ(mat_mul(f, ctx.iota(), ctx.iota()), identity_matrix());
}

TEST_F(Linalg4, FormMatchesDefinition) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> pick(0, 7);
  for (int k = 0; k < 500; ++k) {
    Vec4 u, v;
    for (std::size_t i = 0; i < 4; ++i) {
      u[i] = FieldElement{static_cast<std::uint16_t>(pick(rng))};
      v[i] = FieldElement{static_cast<std::uint16_t>(pick(rng))};
    }
    const FieldElement want = f.mul(u[0], v[3]) + f.mul(u[1], v[2]) + f.mul(u[2], v[1]) + f.mul(u[3], v[0]);
    EXPECT_EQ(form_f(f, u, v), want);
    EXPECT_EQ(form_f(f, u, v), form_f(f, v, u));
    EXPECT_TRUE(form_f(f, u, u).is_zero());
  }
}

TEST_F(Linalg4, InverseAgainstProductAndSymplecticFormula) {
  std::mt19937 rng(11);
  int invertible = 0;
  for (int k = 0; k < 300; ++k) {
    const Mat4 a = random_matrix(rng);
    if (!is_invertible(f, a)) {
      EXPECT_THROW(invert(f, a), SingularMatrix);
      continue;
    }
    ++invertible;
    const Mat4 inv = invert(f, a);
    EXPECT_EQ(mat_mul(f, a, inv), identity_matrix());
    EXPECT_EQ(mat_mul(f, inv, a), identity_matrix());
  }
  EXPECT_GT(invertible, 100);

  // For g in Sz(8) < Sp4(8), g^-1 = iota g^T iota.
  const GroupSet group = build_suzuki(ctx);
  for (std::size_t i = 0; i < group.order(); i += 97) {
    const Mat4 g = group.element(i);
    EXPECT_TRUE(is_symplectic(f, g));
    EXPECT_EQ(invert(f, g), mat_mul(f, mat_mul(f, ctx.iota(), transpose(g)), ctx.iota()));
  }
}

TEST_F(Linalg4, SingularExample) {
  Mat4 m = identity_matrix();
  m(3, 3) = FieldElement{0};
  EXPECT_FALSE(is_invertible(f, m));
  EXPECT_THROW(invert(f, m), SingularMatrix);
}

TEST_F(Linalg4, TransvectionIsSymplectic) {
  const Mat4 t = transvection(f, basis_vector(0), FieldElement{1});
  EXPECT_TRUE(is_symplectic(f, t));
  // e4 -> e4 + f(e4, e1) e1 = e4 + e1.
  EXPECT_EQ(mat_vec(f, t, basis_vector(3)), basis_vector(3) + basis_vector(0));
  EXPECT_EQ(mat_vec(f, t, basis_vector(1)), basis_vector(1));
  Mat4 not_symplectic = identity_matrix();
  not_symplectic(0, 0) = FieldElement{2};
  EXPECT_FALSE(is_symplectic(f, not_symplectic));
}

TEST_F(Linalg4, TextAndPackingRoundTrip) {
  std::mt19937 rng(5);
  for (int k = 0; k < 50; ++k) {
    const Mat4 a = random_matrix(rng);
    EXPECT_EQ(parse_mat4(f, to_text(a)), a);
    EXPECT_EQ(unpack(pack(a)), a);
  }
  EXPECT_EQ(to_text(ctx.iota()), "0 0 0 1 0 0 1 0 0 1 0 0 1 0 0 0");
  EXPECT_ANY_THROW(parse_mat4(f, "1 2 3"));
  EXPECT_ANY_THROW(parse_mat4(f, "8 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0"));
}

TEST_F(Linalg4, TorusElementsAreSymplectic) {
  for (FieldElement a : f.nonzero_elements()) EXPECT_TRUE(is_symplectic(f, torus_element(ctx, a)));
}

}  // namespace
}  // namespace suzuki
