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

#include "suzuki/wilson.hpp"

#include <fmt/format.h>

#include "suzuki/errors.hpp"

namespace suzuki {

namespace {

// The product of two vectors whose coordinates are already raised to the t.
Vec4 bullet_twisted(const SuzukiContext& ctx, const Vec4& ut, const Vec4& vt) {
  const GaloisField& field = ctx.field();
  Vec4 out;
  for (const BulletTerm& term : ctx.bullet_terms()) {
    out[term.k] += field.mul(term.coeff, field.mul(ut[term.i], vt[term.j]));
  }
  return out;
}

Vec4 twist(const GaloisField& field, const Vec4& v) {
  Vec4 out;
  for (std::size_t i = 0; i < 4; ++i) out[i] = field.frobenius_t(v[i]);
  return out;
}

bool residual_is_zero(const SuzukiContext& ctx, const Mat4& g, const Vec4& u, const Vec4& gu,
                      const Vec4& v) {
  const GaloisField& field = ctx.field();
  const Vec4 gv = mat_vec(field, g, v);
  const Vec4 lhs = bullet_twisted(ctx, twist(field, gu), twist(field, gv));
  const Vec4 rhs = mat_vec(field, g, bullet(ctx, u, v));
  return lhs == rhs;
}

}  // namespace

Vec4 bullet(const SuzukiContext& ctx, const Vec4& u, const Vec4& v) {
  return bullet_twisted(ctx, twist(ctx.field(), u), twist(ctx.field(), v));
}

Vec4 wilson_residual(const SuzukiContext& ctx, const Mat4& g, const Vec4& u, const Vec4& v) {
  const GaloisField& field = ctx.field();
  if (!form_f(field, u, v).is_zero()) {
    throw PreconditionViolated(
        fmt::format("wilson_residual needs f(u, v) = 0; u = [{}], v = [{}]", to_text(u), to_text(v)));
  }
  return bullet(ctx, mat_vec(field, g, u), mat_vec(field, g, v)) + mat_vec(field, g, bullet(ctx, u, v));
}

bool wilson_prefilter(const SuzukiContext& ctx, const Mat4& g) {
  std::array<Vec4, 4> cols;
  for (std::size_t j = 0; j < 4; ++j) cols[j] = column(g, j);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (i + j == 3) continue;  // e_i, e_{5-i} are not perpendicular
      if (!residual_is_zero(ctx, g, basis_vector(i), cols[i], basis_vector(j))) return false;
    }
  }
  return true;
}

std::array<Vec4, 3> perpendicular_basis(const SuzukiContext& ctx, const Vec4& u) {
  const GaloisField& field = ctx.field();
  std::size_t lead = 0;
  while (lead < 4 && u[lead].is_zero()) ++lead;
  if (lead == 4) throw PreconditionViolated("perpendicular_basis of the zero vector");
  // f(u, e_j) = u_{5-j}, so e_{5-k} pairs with the leading coordinate.
  const std::size_t partner = 3 - lead;
  const FieldElement pivot_inv = field.inv(u[lead]);
  std::array<Vec4, 3> basis;
  std::size_t n = 0;
  for (std::size_t j = 0; j < 4; ++j) {
    if (j == partner) continue;
    Vec4 v = basis_vector(j);
    const FieldElement correction = field.mul(form_f(field, u, v), pivot_inv);
    v[partner] += correction;
    basis[n++] = v;
  }
  return basis;
}

std::vector<Vec4> projective_points(const SuzukiContext& ctx) {
  const std::uint64_t q = ctx.q();
  std::vector<Vec4> points;
  points.reserve((q * q * q * q - 1) / (q - 1));
  for_each_projective_point(ctx, [&points](const Vec4& v) {
    points.push_back(v);
    return true;
  });
  return points;
}

std::vector<Vec4> all_vectors(const SuzukiContext& ctx) {
  const std::uint32_t q = ctx.q();
  std::vector<Vec4> out;
  out.reserve(static_cast<std::size_t>(q) * q * q * q);
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b)
      for (std::uint32_t c = 0; c < q; ++c)
        for (std::uint32_t d = 0; d < q; ++d)
          out.push_back(Vec4{{FieldElement{static_cast<std::uint16_t>(a)},
                              FieldElement{static_cast<std::uint16_t>(b)},
                              FieldElement{static_cast<std::uint16_t>(c)},
                              FieldElement{static_cast<std::uint16_t>(d)}}});
  return out;
}

bool is_suzuki(const SuzukiContext& ctx, const Mat4& g) {
  const GaloisField& field = ctx.field();
  if (!is_symplectic(field, g)) return false;
  if (!wilson_prefilter(ctx, g)) return false;
  return for_each_projective_point(ctx, [&](const Vec4& u) {
    const Vec4 gu = mat_vec(field, g, u);
    for (const Vec4& v : perpendicular_basis(ctx, u)) {
      if (!residual_is_zero(ctx, g, u, gu, v)) return false;
    }
    return true;
  });
}

BruteForceVerdict is_suzuki_bruteforce(const SuzukiContext& ctx, const Mat4& g) {
  const GaloisField& field = ctx.field();
  BruteForceVerdict verdict;
  if (!is_symplectic(field, g)) return verdict;

  const std::vector<Vec4> vectors = all_vectors(ctx);
  std::vector<Vec4> g_twisted(vectors.size());
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    g_twisted[k] = twist(field, mat_vec(field, g, vectors[k]));
  }
  for (std::size_t a = 0; a < vectors.size(); ++a) {
    const Vec4& u = vectors[a];
    for (std::size_t b = 0; b < vectors.size(); ++b) {
      const Vec4& v = vectors[b];
      if (!form_f(field, u, v).is_zero()) continue;
      const Vec4 lhs = bullet_twisted(ctx, g_twisted[a], g_twisted[b]);
      const Vec4 rhs = mat_vec(field, g, bullet(ctx, u, v));
      if (lhs != rhs) {
        verdict.witness = std::make_pair(u, v);
        return verdict;
      }
    }
  }
  verdict.member = true;
  return verdict;
}

}  // namespace suzuki
