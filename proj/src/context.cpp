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

#include "suzuki/context.hpp"

#include <stdexcept>

#include <fmt/format.h>

#include "suzuki/errors.hpp"

namespace suzuki {

int poly_degree(std::uint32_t poly) {
  if (poly == 0) throw std::invalid_argument("zero polynomial has no degree");
  int d = 31;
  while (((poly >> d) & 1u) == 0) --d;
  return d;
}

std::uint32_t poly_mod(std::uint32_t dividend, std::uint32_t divisor) {
  const int dd = poly_degree(divisor);
  while (dividend != 0 && poly_degree(dividend) >= dd) {
    dividend ^= divisor << (poly_degree(dividend) - dd);
  }
  return dividend;
}

bool validate_modulus(std::uint32_t poly) {
  if (poly == 0 || poly_degree(poly) < 2 || poly_degree(poly) > 13) {
    throw std::invalid_argument(fmt::format("modulus {:#x} has degree outside [2, 13]", poly));
  }
  const int degree = poly_degree(poly);
  for (std::uint32_t divisor = 2; divisor < (1u << degree); ++divisor) {
    if (poly_mod(poly, divisor) == 0) return false;
  }
  return true;
}

int exponent_for_q(std::uint64_t q) {
  for (int e = 1; e <= 6; ++e) {
    if (q == (std::uint64_t{1} << (2 * e + 1))) return e;
  }
  throw std::invalid_argument(fmt::format("q = {} is not of the form 2^(2e+1) with 1 <= e <= 6", q));
}

BulletTable wilson_basis_table() {
  // Nonzero products: e1.e2 = e2, e1.e3 = e4, e2.e4 = e1, e3.e4 = e3, and
  // their mirror images. Everything else, including all squares, is zero.
  BulletTable table{};
  auto set = [&table](std::size_t i, std::size_t j, std::size_t k) {
    table[i][j] = basis_vector(k);
    table[j][i] = basis_vector(k);
  };
  set(0, 1, 1);
  set(0, 2, 3);
  set(1, 3, 0);
  set(2, 3, 2);
  return table;
}

SuzukiContext::SuzukiContext(int e, GaloisField field)
    : e_(e),
      field_(std::move(field)),
      iota_(anti_diagonal_identity()),
      bullet_table_(wilson_basis_table()) {
  for (std::uint8_t i = 0; i < 4; ++i) {
    for (std::uint8_t j = 0; j < 4; ++j) {
      for (std::uint8_t k = 0; k < 4; ++k) {
        const FieldElement c = bullet_table_[i][j][k];
        if (!c.is_zero()) bullet_terms_.push_back(BulletTerm{i, j, k, c});
      }
    }
  }
}

std::uint64_t SuzukiContext::suzuki_order_formula() const {
  const std::uint64_t qq = q();
  return qq * qq * (qq * qq + 1) * (qq - 1);
}

bool SuzukiContext::operator==(const SuzukiContext& other) const {
  return e_ == other.e_ && field_ == other.field_ && iota_ == other.iota_ &&
         bullet_table_ == other.bullet_table_;
}

SuzukiContext make_context(int e, std::span<const ModulusEntry> table) {
  if (e < 1) {
    throw std::invalid_argument(fmt::format("e = {} rejected: q = 2^(2e+1) needs e >= 1", e));
  }
  if (e > 6) {
    throw std::invalid_argument(fmt::format("e = {} exceeds the supported field degrees", e));
  }
  const int degree = 2 * e + 1;
  const ModulusEntry* entry = nullptr;
  for (const ModulusEntry& candidate : table) {
    if (candidate.degree == degree) entry = &candidate;
  }
  if (entry == nullptr) {
    throw std::invalid_argument(fmt::format("no modulus of degree {} in table", degree));
  }
  if (poly_degree(entry->poly) != degree || !validate_modulus(entry->poly)) {
    throw std::invalid_argument(
        fmt::format("modulus table entry {:#x} for degree {} is not irreducible", entry->poly, degree));
  }
  SuzukiContext ctx(e, GaloisField(degree, entry->poly, e));

  // Re-assert the structural invariants rather than trusting the constants.
  const std::uint64_t t = ctx.t();
  if (2 * t * t != ctx.q()) throw std::logic_error("q != 2 t^2");
  if (mat_mul(ctx.field(), ctx.iota(), ctx.iota()) != identity_matrix()) {
    throw std::logic_error("iota is not an involution");
  }
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      if (ctx.bullet_table()[i][j] != ctx.bullet_table()[j][i]) {
        throw std::logic_error("bullet table is not symmetric");
      }
    }
  }
  return ctx;
}

}  // namespace suzuki
