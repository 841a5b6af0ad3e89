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

#include <algorithm>

#include <fmt/format.h>

#include "suzuki/errors.hpp"
#include "suzuki/parallel.hpp"

namespace suzuki {

namespace {

using Sides = std::pair<FieldElement, FieldElement>;
using E = SymmetricEntries;

// a^t * b^t + c^t * d^t
FieldElement twisted_pair(const E& x, int a, int b, int c, int d) {
  return x.mul(x.at(a / 10, a % 10), x.at(b / 10, b % 10)) +
         x.mul(x.at(c / 10, c % 10), x.at(d / 10, d % 10));
}

FieldElement plain(const E& x, int ij) { return x.a(ij / 10, ij % 10); }

FieldElement product(const E& x, int a, int b) { return x.mul(plain(x, a), plain(x, b)); }

// (a^t)^2 = a^(2t)
FieldElement twisted_square(const E& x, int a) {
  const FieldElement v = x.at(a / 10, a % 10);
  return x.mul(v, v);
}

constexpr std::array<EquationDef, kEquationCount> kEquations{{
    {"S1", "a12^t a24^t + a14^t a22^t = a12", {12, 24, 14, 22},
     [](const E& x) -> Sides { return {twisted_pair(x, 12, 24, 14, 22), plain(x, 12)}; }},
    {"S2", "a11^t a22^t + a12^(2t) = a22", {11, 22, 12},
     [](const E& x) -> Sides {
       return {x.mul(x.at(1, 1), x.at(2, 2)) + twisted_square(x, 12), plain(x, 22)};
     }},
    {"S3", "a13^t a24^t + a14^t a23^t = a23", {13, 24, 14, 23},
     [](const E& x) -> Sides { return {twisted_pair(x, 13, 24, 14, 23), plain(x, 23)}; }},
    {"S4", "a11^t a23^t + a13^t a12^t = a24", {11, 23, 13, 12, 24},
     [](const E& x) -> Sides { return {twisted_pair(x, 11, 23, 13, 12), plain(x, 24)}; }},
    {"S5", "a12^t a34^t + a14^t a23^t = a14", {12, 34, 14, 23},
     [](const E& x) -> Sides { return {twisted_pair(x, 12, 34, 14, 23), plain(x, 14)}; }},
    {"S6", "a13^t a34^t + a14^t a33^t = a34", {13, 34, 14, 33},
     [](const E& x) -> Sides { return {twisted_pair(x, 13, 34, 14, 33), plain(x, 34)}; }},
    {"S7", "a11^t a33^t + a13^(2t) = a44", {11, 33, 13, 44},
     [](const E& x) -> Sides {
       return {x.mul(x.at(1, 1), x.at(3, 3)) + twisted_square(x, 13), plain(x, 44)};
     }},
    {"S8", "a22^t a44^t + a24^(2t) = a11", {22, 44, 24, 11},
     [](const E& x) -> Sides {
       return {x.mul(x.at(2, 2), x.at(4, 4)) + twisted_square(x, 24), plain(x, 11)};
     }},
    {"S9", "a23^t a44^t + a24^t a34^t = a13", {23, 44, 24, 34, 13},
     [](const E& x) -> Sides { return {twisted_pair(x, 23, 44, 24, 34), plain(x, 13)}; }},
    {"S10", "a33^t a44^t + a34^(2t) = a33", {33, 44, 34},
     [](const E& x) -> Sides {
       return {x.mul(x.at(3, 3), x.at(4, 4)) + twisted_square(x, 34), plain(x, 33)};
     }},
    {"S11", "a14 a24 = a12 a44", {14, 24, 12, 44},
     [](const E& x) -> Sides { return {product(x, 14, 24), product(x, 12, 44)}; }},
    {"S12", "a12 a14 = a11 a24", {12, 14, 11, 24},
     [](const E& x) -> Sides { return {product(x, 12, 14), product(x, 11, 24)}; }},
    {"S13", "a13 a44 = a14 a34", {13, 44, 14, 34},
     [](const E& x) -> Sides { return {product(x, 13, 44), product(x, 14, 34)}; }},
    {"S14", "a11 a34 = a13 a14", {11, 34, 13, 14},
     [](const E& x) -> Sides { return {product(x, 11, 34), product(x, 13, 14)}; }},
    {"S15", "a22 a34 = a24 a23", {22, 34, 24, 23},
     [](const E& x) -> Sides { return {product(x, 22, 34), product(x, 24, 23)}; }},
    {"S16", "a22 a13 = a12 a23", {22, 13, 12, 23},
     [](const E& x) -> Sides { return {product(x, 22, 13), product(x, 12, 23)}; }},
    {"S17", "a23 a34 = a24 a33", {23, 34, 24, 33},
     [](const E& x) -> Sides { return {product(x, 23, 34), product(x, 24, 33)}; }},
    {"S18", "a12 a33 = a13 a23", {12, 33, 13, 23},
     [](const E& x) -> Sides { return {product(x, 12, 33), product(x, 13, 23)}; }},
    {"P14", "a14^2 + a13 a24 + a12 a34 + a11 a44 = 1", {14, 13, 24, 12, 34, 11, 44},
     [](const E& x) -> Sides {
       return {product(x, 14, 14) + product(x, 13, 24) + product(x, 12, 34) + product(x, 11, 44),
               x.one()};
     }},
    {"P23", "a24 a13 + a23^2 + a22 a33 + a12 a34 = 1", {24, 13, 23, 22, 33, 12, 34},
     [](const E& x) -> Sides {
       return {product(x, 24, 13) + product(x, 23, 23) + product(x, 22, 33) + product(x, 12, 34),
               x.one()};
     }},
}};

}  // namespace

std::span<const EquationDef> equation_definitions() { return kEquations; }

bool in_fixed_set(const GaloisField& field, const Mat4& x) {
  // x * iota reverses the columns of x.
  Mat4 x_iota;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) x_iota(i, j) = x(i, 3 - j);
  }
  return mat_mul(field, x_iota, x) == anti_diagonal_identity();
}

bool symmetry_lemma_check(const GaloisField& field, const Mat4& x) {
  if (!is_symplectic(field, x)) throw PreconditionViolated("symmetry lemma needs a symplectic matrix");
  if (!in_fixed_set(field, x)) throw PreconditionViolated("symmetry lemma needs x iota x = iota");
  return is_symmetric(x);
}

EquationReport eval_equation_system(const SuzukiContext& ctx, const Mat4& x) {
  if (!is_symmetric(x)) {
    throw PreconditionViolated("equation system is written for symmetric x: " + to_text(x));
  }
  const SymmetricEntries entries(ctx.field(), x);
  EquationReport report;
  report.matrix = x;
  report.all_satisfied = true;
  for (const EquationDef& def : kEquations) {
    const auto [lhs, rhs] = def.evaluate(entries);
    report.equations.push_back(
        EquationResult{std::string(def.label), std::string(def.text), lhs, rhs, lhs == rhs});
    report.all_satisfied = report.all_satisfied && lhs == rhs;
  }
  return report;
}

Mat4 torus_element(const SuzukiContext& ctx, FieldElement a) {
  if (a.is_zero()) throw std::domain_error("torus element needs a != 0");
  const GaloisField& f = ctx.field();
  const std::int64_t k = 2 * static_cast<std::int64_t>(ctx.t()) + 1;
  return diagonal_matrix(a, f.pow(a, k), f.pow(a, -k), f.pow(a, -1));
}

std::vector<Mat4> closed_form_X(const SuzukiContext& ctx) {
  std::vector<Mat4> out{ctx.iota()};
  for (FieldElement a : ctx.field().nonzero_elements()) out.push_back(torus_element(ctx, a));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Mat4> brute_force_X(const SuzukiContext& ctx, const GroupSet& group, unsigned jobs) {
  std::vector<std::vector<Mat4>> hits(chunk_count(jobs, group.order()));
  parallel_chunks(jobs, group.order(), [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const Mat4 x = group.element(i);
      if (in_fixed_set(ctx.field(), x)) hits[chunk].push_back(x);
    }
  });
  std::vector<Mat4> out;
  for (const auto& h : hits) out.insert(out.end(), h.begin(), h.end());
  std::sort(out.begin(), out.end());
  return out;
}

FixedSetResult compare_fixed_set(const SuzukiContext& ctx, const GroupSet& group, unsigned jobs) {
  FixedSetResult result;
  result.closed_form = closed_form_X(ctx);
  result.brute_force = brute_force_X(ctx, group, jobs);
  result.equal = result.closed_form == result.brute_force;
  return result;
}

SystemCase classify_case(const Mat4& x) {
  if (!x(1, 3).is_zero()) return SystemCase::kA24Nonzero;
  if (!x(0, 1).is_zero()) return SystemCase::kA12Nonzero;
  if (!x(2, 3).is_zero()) return SystemCase::kA34Nonzero;
  if (!x(0, 2).is_zero()) return SystemCase::kA13Nonzero;
  if (!x(0, 3).is_zero()) return SystemCase::kA14Nonzero;
  return SystemCase::kAllZero;
}

std::string_view case_name(SystemCase c) {
  switch (c) {
    case SystemCase::kA24Nonzero: return "a24 != 0";
    case SystemCase::kA12Nonzero: return "a24 = 0, a12 != 0";
    case SystemCase::kA34Nonzero: return "a24 = a12 = 0, a34 != 0";
    case SystemCase::kA13Nonzero: return "a24 = a12 = a34 = 0, a13 != 0";
    case SystemCase::kA14Nonzero: return "a24 = a12 = a34 = a13 = 0, a14 != 0";
    case SystemCase::kAllZero: return "a24 = a12 = a34 = a13 = a14 = 0";
  }
  return "?";
}

namespace {

// Assignment order chosen so the bilinear equations prune early.
constexpr std::array<std::uint8_t, 10> kVariableOrder{24, 12, 44, 14, 11, 34, 13, 22, 23, 33};

struct Solver {
  const SuzukiContext& ctx;
  std::uint64_t budget;
  // Equations to test once variable k of kVariableOrder has been assigned.
  std::array<std::vector<const EquationDef*>, 10> ready_at;
  std::vector<FieldElement> values;
  Mat4 x;
  SystemSolutions out;

  void assign(std::uint8_t ij, FieldElement v) {
    const std::size_t i = ij / 10 - 1;
    const std::size_t j = ij % 10 - 1;
    x(i, j) = v;
    x(j, i) = v;
  }

  void search(std::size_t depth) {
    if (depth == kVariableOrder.size()) {
      out.solutions.push_back(x);
      return;
    }
    const SymmetricEntries entries(ctx.field(), x);
    for (FieldElement v : values) {
      if (++out.nodes_visited > budget) {
        throw BudgetExceeded(fmt::format("equation solver passed {} nodes", budget));
      }
      assign(kVariableOrder[depth], v);
      bool ok = true;
      for (const EquationDef* eq : ready_at[depth]) {
        const auto [lhs, rhs] = eq->evaluate(entries);
        if (lhs != rhs) {
          ok = false;
          break;
        }
      }
      if (ok) search(depth + 1);
    }
    assign(kVariableOrder[depth], FieldElement{0});
  }
};

}  // namespace

SystemSolutions solve_equation_system(const SuzukiContext& ctx, std::uint64_t node_budget) {
  Solver solver{ctx, node_budget, {}, ctx.field().elements(), Mat4{}, {}};
  for (const EquationDef& eq : kEquations) {
    std::size_t last = 0;
    for (std::uint8_t ij : eq.reads) {
      if (ij == 0) continue;
      const auto pos = std::find(kVariableOrder.begin(), kVariableOrder.end(), ij);
      last = std::max<std::size_t>(last, static_cast<std::size_t>(pos - kVariableOrder.begin()));
    }
    solver.ready_at[last].push_back(&eq);
  }
  solver.search(0);

  SystemSolutions result = std::move(solver.out);
  std::sort(result.solutions.begin(), result.solutions.end());
  for (const Mat4& s : result.solutions) {
    const auto c = static_cast<std::size_t>(classify_case(s));
    ++result.per_case[c];
    if (is_invertible(ctx.field(), s)) {
      result.nonsingular.push_back(s);
      ++result.per_case_nonsingular[c];
    }
  }
  return result;
}

}  // namespace suzuki
