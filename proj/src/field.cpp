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

#include "suzuki/field.hpp"

#include <stdexcept>

#include <fmt/format.h>

namespace suzuki {

std::string to_hex(FieldElement a) { return fmt::format("{:x}", a.bits); }

FieldElement parse_hex_element(const std::string& text) {
  if (text.empty() || text.size() > 4) {
    throw std::invalid_argument("bad field element encoding: '" + text + "'");
  }
  std::uint32_t value = 0;
  for (char c : text) {
    value <<= 4;
    if (c >= '0' && c <= '9') {
      value |= static_cast<std::uint32_t>(c - '0');
    } else if (c >= 'a' && c <= 'f') {
      value |= static_cast<std::uint32_t>(c - 'a' + 10);
    } else {
      throw std::invalid_argument("bad field element encoding: '" + text + "'");
    }
  }
  return FieldElement{static_cast<std::uint16_t>(value)};
}

GaloisField::GaloisField(int degree, std::uint32_t modulus, int twist_squarings)
    : degree_(degree),
      modulus_(modulus),
      twist_squarings_(twist_squarings),
      order_(1u << degree) {
  if (degree < 2 || degree > 13) {
    throw std::invalid_argument(fmt::format("field degree {} outside [2, 13]", degree));
  }
  if ((modulus >> degree) != 1u) {
    throw std::invalid_argument(
        fmt::format("modulus {:#x} does not have degree {}", modulus, degree));
  }
  if (twist_squarings < 0 || twist_squarings >= degree) {
    throw std::invalid_argument("twist exponent out of range");
  }
  if (degree <= 7) {
    mul_table_.assign(std::size_t{1} << 14, 0);
    for (std::uint32_t a = 0; a < order_; ++a) {
      for (std::uint32_t b = 0; b < order_; ++b) {
        mul_table_[(a << 7) | b] =
            mul_shift_xor(FieldElement{static_cast<std::uint16_t>(a)},
                          FieldElement{static_cast<std::uint16_t>(b)})
                .bits;
      }
    }
  }
  frob_table_.resize(order_);
  for (std::uint32_t a = 0; a < order_; ++a) {
    frob_table_[a] = frobenius_by_squaring(FieldElement{static_cast<std::uint16_t>(a)}).bits;
  }
}

FieldElement GaloisField::element(std::uint32_t bits) const {
  if (bits >= order_) {
    throw std::out_of_range(fmt::format("{:#x} is not an element of GF({})", bits, order_));
  }
  return FieldElement{static_cast<std::uint16_t>(bits)};
}

FieldElement GaloisField::mul_shift_xor(FieldElement a, FieldElement b) const {
  const std::uint32_t top = order_;
  std::uint32_t x = a.bits;
  std::uint32_t y = b.bits;
  std::uint32_t acc = 0;
  while (y != 0) {
    if (y & 1u) acc ^= x;
    y >>= 1;
    x <<= 1;
    if (x & top) x ^= modulus_;
  }
  return FieldElement{static_cast<std::uint16_t>(acc)};
}

FieldElement GaloisField::frobenius_by_squaring(FieldElement a) const {
  for (int i = 0; i < twist_squarings_; ++i) a = mul_shift_xor(a, a);
  return a;
}

FieldElement GaloisField::pow_unsigned(FieldElement a, std::uint64_t k) const {
  FieldElement result = one();
  while (k != 0) {
    if (k & 1u) result = mul(result, a);
    a = mul(a, a);
    k >>= 1;
  }
  return result;
}

FieldElement GaloisField::inv(FieldElement a) const {
  if (a.is_zero()) throw std::domain_error("zero has no multiplicative inverse");
  return pow_unsigned(a, order_ - 2);
}

FieldElement GaloisField::pow(FieldElement a, std::int64_t k) const {
  if (k >= 0) return pow_unsigned(a, static_cast<std::uint64_t>(k));
  if (a.is_zero()) throw std::domain_error("negative power of zero");
  // a^k = a^(k mod (q-1)) on the multiplicative group.
  const std::int64_t group = order_ - 1;
  std::int64_t reduced = k % group;
  if (reduced < 0) reduced += group;
  return pow_unsigned(a, static_cast<std::uint64_t>(reduced));
}

std::vector<FieldElement> GaloisField::elements() const {
  std::vector<FieldElement> out;
  out.reserve(order_);
  for (std::uint32_t a = 0; a < order_; ++a) out.push_back(FieldElement{static_cast<std::uint16_t>(a)});
  return out;
}

std::vector<FieldElement> GaloisField::nonzero_elements() const {
  std::vector<FieldElement> out;
  out.reserve(order_ - 1);
  for (std::uint32_t a = 1; a < order_; ++a) out.push_back(FieldElement{static_cast<std::uint16_t>(a)});
  return out;
}

std::uint32_t GaloisField::multiplicative_order(FieldElement a) const {
  if (a.is_zero()) throw std::domain_error("zero has no multiplicative order");
  std::uint32_t k = 1;
  for (FieldElement p = a; p != one(); p = mul(p, a)) {
    if (++k > order_) throw std::logic_error("element never returns to 1; modulus is reducible");
  }
  return k;
}

FieldElement GaloisField::primitive_element() const {
  for (FieldElement a : nonzero_elements()) {
    if (multiplicative_order(a) == order_ - 1) return a;
  }
  throw std::logic_error("multiplicative group has no generator; modulus is reducible");
}

}  // namespace suzuki
