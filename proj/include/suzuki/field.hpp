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

#ifndef SUZUKI_FIELD_HPP_
#define SUZUKI_FIELD_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace suzuki {

// Residue of a binary polynomial modulo the field modulus. Bit i holds the
// coefficient of x^i.
struct FieldElement {
  std::uint16_t bits = 0;

  constexpr bool is_zero() const { return bits == 0; }
  friend constexpr bool operator==(FieldElement, FieldElement) = default;
  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

// Characteristic-2 addition needs no modulus.
constexpr FieldElement operator+(FieldElement a, FieldElement b) {
  return FieldElement{static_cast<std::uint16_t>(a.bits ^ b.bits)};
}
constexpr FieldElement& operator+=(FieldElement& a, FieldElement b) {
  a.bits ^= b.bits;
  return a;
}

// Lowercase hex of the bit encoding, no padding ("3" for x + 1).
std::string to_hex(FieldElement a);
FieldElement parse_hex_element(const std::string& text);

// GF(2^m) for 2 <= m <= 13 with a fixed modulus.
//
// Multiplication is shift-xor with on-the-fly reduction. For m <= 7 the
// products are additionally tabulated once at construction; the table is
// built from the shift-xor routine, so both paths agree by construction and
// the tests compare them anyway.
class GaloisField {
 public:
  // `modulus` must be irreducible of degree `degree`; `twist_squarings` is
  // the number of squarings making up the Frobenius twist a -> a^t.
  // Irreducibility is the caller's responsibility (see validate_modulus).
  GaloisField(int degree, std::uint32_t modulus, int twist_squarings);

  int degree() const { return degree_; }
  std::uint32_t order() const { return order_; }
  std::uint32_t modulus() const { return modulus_; }
  // The exponent t of the twist, i.e. 2^twist_squarings.
  std::uint32_t twist_exponent() const { return 1u << twist_squarings_; }

  FieldElement zero() const { return FieldElement{0}; }
  FieldElement one() const { return FieldElement{1}; }
  // Throws std::out_of_range if bits >= order().
  FieldElement element(std::uint32_t bits) const;

  FieldElement add(FieldElement a, FieldElement b) const { return a + b; }

  FieldElement mul(FieldElement a, FieldElement b) const {
    if (!mul_table_.empty()) {
      return FieldElement{mul_table_[(static_cast<std::uint32_t>(a.bits) << 7) | b.bits]};
    }
    return mul_shift_xor(a, b);
  }

  FieldElement mul_shift_xor(FieldElement a, FieldElement b) const;
  FieldElement square(FieldElement a) const { return mul(a, a); }

  // a^(q-2) by square-and-multiply. Throws std::domain_error on zero.
  FieldElement inv(FieldElement a) const;

  // a^t with t = 2^e, by e successive squarings.
  FieldElement frobenius_t(FieldElement a) const { return FieldElement{frob_table_[a.bits]}; }
  FieldElement frobenius_by_squaring(FieldElement a) const;

  // Negative k requires a != 0 (std::domain_error otherwise).
  FieldElement pow(FieldElement a, std::int64_t k) const;

  // All q elements in encoding order, and the q - 1 nonzero ones.
  std::vector<FieldElement> elements() const;
  std::vector<FieldElement> nonzero_elements() const;

  // Smallest-encoded generator of the multiplicative group.
  FieldElement primitive_element() const;
  std::uint32_t multiplicative_order(FieldElement a) const;

  bool operator==(const GaloisField& other) const {
    return degree_ == other.degree_ && modulus_ == other.modulus_ &&
           twist_squarings_ == other.twist_squarings_;
  }

 private:
  FieldElement pow_unsigned(FieldElement a, std::uint64_t k) const;

  int degree_;
  std::uint32_t modulus_;
  int twist_squarings_;
  std::uint32_t order_;
  std::vector<std::uint16_t> mul_table_;
  std::vector<std::uint16_t> frob_table_;
};

}  // namespace suzuki

#endif  // SUZUKI_FIELD_HPP_
