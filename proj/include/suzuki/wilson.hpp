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

#ifndef SUZUKI_WILSON_HPP_
#define SUZUKI_WILSON_HPP_

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "suzuki/context.hpp"
#include "suzuki/linalg4.hpp"

namespace suzuki {

// u . v = sum_{i,j} u_i^t v_j^t (e_i . e_j). Commutative, bi-additive and
// t-semilinear in each argument.
Vec4 bullet(const SuzukiContext& ctx, const Vec4& u, const Vec4& v);

// bullet(g u, g v) + g bullet(u, v); zero iff g respects the product at
// (u, v). Throws PreconditionViolated unless f(u, v) = 0.
Vec4 wilson_residual(const SuzukiContext& ctx, const Mat4& g, const Vec4& u, const Vec4& v);

// The Wilson condition on the canonical pairs (e_i, e_j), i + j != 5. Cheap
// necessary condition used to discard most non-members early.
bool wilson_prefilter(const SuzukiContext& ctx, const Mat4& g);

// Three vectors spanning u^perp for nonzero u: with k the position of u's
// first nonzero coordinate, the basis vectors other than e_{5-k}, each
// corrected by a multiple of e_{5-k}.
std::array<Vec4, 3> perpendicular_basis(const SuzukiContext& ctx, const Vec4& u);

// Membership in Sz(q): g symplectic and g u . g v = g (u . v) whenever
// f(u, v) = 0. Scaling u or v scales both sides by the same t-th power and
// both sides are additive in v, so it is enough to test u over projective
// representatives (first nonzero coordinate 1) and v over a basis of u^perp.
bool is_suzuki(const SuzukiContext& ctx, const Mat4& g);

struct BruteForceVerdict {
  bool member = false;
  // First failing perpendicular pair in scan order, when not a member and
  // symplectic.
  std::optional<std::pair<Vec4, Vec4>> witness;
};

// Literal reading of the membership condition: every ordered pair (u, v) of
// V x V with f(u, v) = 0, zero vectors included. q^8 pairs, so only
// practical at q = 8; kept as the oracle for is_suzuki.
BruteForceVerdict is_suzuki_bruteforce(const SuzukiContext& ctx, const Mat4& g);

// Projective representatives of the nonzero vectors of V:
// (q^4 - 1) / (q - 1) vectors with first nonzero coordinate 1.
std::vector<Vec4> projective_points(const SuzukiContext& ctx);

// Visits the projective representatives in the same order without storing
// them; stops early and returns false as soon as `visit` returns false.
template <typename Visitor>
bool for_each_projective_point(const SuzukiContext& ctx, Visitor&& visit) {
  const std::uint32_t q = ctx.q();
  for (std::size_t lead = 0; lead < 4; ++lead) {
    Vec4 v;
    v[lead] = FieldElement{1};
    // Odometer over the coordinates after the leading one.
    for (;;) {
      if (!visit(static_cast<const Vec4&>(v))) return false;
      bool wrapped = true;
      for (std::size_t pos = 4; pos-- > lead + 1;) {
        if (v[pos].bits + 1u < q) {
          ++v[pos].bits;
          wrapped = false;
          break;
        }
        v[pos].bits = 0;
      }
      if (wrapped) break;
    }
  }
  return true;
}

// Every vector of V in encoding order (q^4 of them).
std::vector<Vec4> all_vectors(const SuzukiContext& ctx);

}  // namespace suzuki

#endif  // SUZUKI_WILSON_HPP_
