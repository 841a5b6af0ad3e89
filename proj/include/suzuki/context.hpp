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

#ifndef SUZUKI_CONTEXT_HPP_
#define SUZUKI_CONTEXT_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "suzuki/field.hpp"
#include "suzuki/linalg4.hpp"

namespace suzuki {

// Default element-count ceiling for enumerations.
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 26;

struct ModulusEntry {
  int degree;
  std::uint32_t poly;  // bit i = coefficient of x^i
};

// x^3+x+1, x^5+x^2+1, x^7+x+1, then x^9+x^4+1, x^11+x^2+1, x^13+x^4+x^3+x+1
// for the larger parameters that are accepted but not enumerable.
inline constexpr std::array<ModulusEntry, 6> kModulusTable{{
    {3, 0b1011},
    {5, 0b100101},
    {7, 0b10000011},
    {9, 0b1000010001},
    {11, 0b100000000101},
    {13, 0b10000000011011},
}};

// Irreducibility over GF(2) by trial division against every binary polynomial
// of degree 1 .. deg(poly) - 1. Throws std::invalid_argument unless
// 2 <= deg(poly) <= 13.
bool validate_modulus(std::uint32_t poly);

// Degree of a nonzero binary polynomial.
int poly_degree(std::uint32_t poly);
// Remainder of binary polynomial division.
std::uint32_t poly_mod(std::uint32_t dividend, std::uint32_t divisor);

// e_i . e_j for the basis e1..e4 (indices 0..3), all of whose entries are
// 0/1 vectors.
using BulletTable = std::array<std::array<Vec4, 4>, 4>;

// One nonzero structure constant: e_i . e_j has coefficient `coeff` on e_k.
struct BulletTerm {
  std::uint8_t i, j, k;
  FieldElement coeff;
};

// Parameter record for one Suzuki group Sz(q), q = 2^(2e+1), t = 2^e.
// Immutable once built; share freely between threads.
class SuzukiContext {
 public:
  int e() const { return e_; }
  std::uint32_t q() const { return field_.order(); }
  std::uint32_t t() const { return field_.twist_exponent(); }
  std::uint32_t modulus() const { return field_.modulus(); }
  const GaloisField& field() const { return field_; }
  const Mat4& iota() const { return iota_; }
  const BulletTable& bullet_table() const { return bullet_table_; }
  std::span<const BulletTerm> bullet_terms() const { return bullet_terms_; }

  // q^2 (q^2 + 1) (q - 1); only a cross-check constant, the enumeration is
  // what counts.
  std::uint64_t suzuki_order_formula() const;

  bool operator==(const SuzukiContext& other) const;

 private:
  friend SuzukiContext make_context(int e, std::span<const ModulusEntry> table);
  SuzukiContext(int e, GaloisField field);

  int e_;
  GaloisField field_;
  Mat4 iota_;
  BulletTable bullet_table_;
  std::vector<BulletTerm> bullet_terms_;
};

// Builds and validates the context for q = 2^(2e+1). Rejects e < 1 and any
// table whose entry for degree 2e+1 is missing or reducible.
SuzukiContext make_context(int e, std::span<const ModulusEntry> table);
inline SuzukiContext make_context(int e) { return make_context(e, kModulusTable); }

// Looks up e from q; throws std::invalid_argument if q is not 2^(2e+1), e >= 1.
int exponent_for_q(std::uint64_t q);

// The product table e_i . e_j as printed for Sz(q).
BulletTable wilson_basis_table();

}  // namespace suzuki

#endif  // SUZUKI_CONTEXT_HPP_
