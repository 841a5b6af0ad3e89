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

#ifndef SUZUKI_FIXED_SET_HPP_
#define SUZUKI_FIXED_SET_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "suzuki/context.hpp"
#include "suzuki/group_engine.hpp"
#include "suzuki/linalg4.hpp"

namespace suzuki {

// Read-only view of a symmetric candidate x with 1-based accessors for its
// entries a_ij, as the equations are written.
class SymmetricEntries {
 public:
  SymmetricEntries(const GaloisField& field, const Mat4& x) : field_(field), x_(x) {}
  FieldElement a(int i, int j) const { return x_(i - 1, j - 1); }
  // a_ij^t
  FieldElement at(int i, int j) const { return field_.frobenius_t(a(i, j)); }
  FieldElement mul(FieldElement u, FieldElement v) const { return field_.mul(u, v); }
  FieldElement one() const { return field_.one(); }

 private:
  const GaloisField& field_;
  const Mat4& x_;
};

// One equation of the system satisfied by symmetric members of the fixed set.
struct EquationDef {
  std::string_view label;
  std::string_view text;
  // Entries a_ij the equation reads, encoded as 10 * i + j with i <= j.
  std::array<std::uint8_t, 8> reads;
  std::pair<FieldElement, FieldElement> (*evaluate)(const SymmetricEntries&);
};

// S1..S4 come from x e1 . x e2 = x e2; S5..S18 from the products of the
// column pairs (e1,e3), (e4,e3), (e2,e4), (e1,e4), (e2,e3); P14 and P23 from
// entries (1,4) and (2,3) of x iota x = iota. Twenty equations in all.
std::span<const EquationDef> equation_definitions();
inline constexpr std::size_t kEquationCount = 20;

// S11..S18 (indices 10..17) come from the pairs (e1, e4) and (e2, e3), which
// are not perpendicular: the product condition says nothing about them, and
// members of Sz(q) need not satisfy them.
constexpr bool from_nonperpendicular_pair(std::size_t index) { return index >= 10 && index < 18; }

struct EquationResult {
  std::string label;
  std::string text;
  FieldElement lhs;
  FieldElement rhs;
  bool satisfied = false;
};

struct EquationReport {
  Mat4 matrix;
  std::vector<EquationResult> equations;
  bool all_satisfied = false;
};

// x iota x == iota (membership in Sz(q) is checked separately).
bool in_fixed_set(const GaloisField& field, const Mat4& x);

// For symplectic x with x iota x = iota, certifies x^T = x. Throws
// PreconditionViolated when x is not symplectic or not in the fixed set.
bool symmetry_lemma_check(const GaloisField& field, const Mat4& x);

// Evaluates every equation as written, reading a_ij = x(i, j). Throws
// PreconditionViolated for a non-symmetric x.
EquationReport eval_equation_system(const SuzukiContext& ctx, const Mat4& x);

// diag(a, a^(2t+1), a^(-2t-1), a^(-1)) for a != 0.
Mat4 torus_element(const SuzukiContext& ctx, FieldElement a);

// {iota} together with the q - 1 torus elements, in canonical order.
std::vector<Mat4> closed_form_X(const SuzukiContext& ctx);

// Every element of `group` with x iota x = iota, in canonical order.
std::vector<Mat4> brute_force_X(const SuzukiContext& ctx, const GroupSet& group, unsigned jobs = 1);

struct FixedSetResult {
  std::vector<Mat4> closed_form;
  std::vector<Mat4> brute_force;
  bool equal = false;
};

FixedSetResult compare_fixed_set(const SuzukiContext& ctx, const GroupSet& group, unsigned jobs = 1);

// The six cases the hand analysis splits into, by the first nonzero entry
// along a24, a12, a34, a13, a14.
enum class SystemCase : int {
  kA24Nonzero = 0,
  kA12Nonzero = 1,
  kA34Nonzero = 2,
  kA13Nonzero = 3,
  kA14Nonzero = 4,
  kAllZero = 5,
};
inline constexpr std::size_t kSystemCaseCount = 6;
SystemCase classify_case(const Mat4& x);
std::string_view case_name(SystemCase c);

struct SystemSolutions {
  // Every symmetric matrix satisfying all equations, canonical order.
  std::vector<Mat4> solutions;
  std::vector<Mat4> nonsingular;
  std::array<std::size_t, kSystemCaseCount> per_case{};
  std::array<std::size_t, kSystemCaseCount> per_case_nonsingular{};
  std::uint64_t nodes_visited = 0;
};

// Solves the equation system over all symmetric 4x4 matrices by pruned
// backtracking: each equation is tested as soon as every entry it reads is
// fixed. Throws BudgetExceeded after `node_budget` search nodes.
SystemSolutions solve_equation_system(const SuzukiContext& ctx,
                                      std::uint64_t node_budget = kDefaultBudget);

}  // namespace suzuki

#endif  // SUZUKI_FIXED_SET_HPP_
