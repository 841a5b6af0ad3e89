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

#ifndef SUZUKI_LINALG4_HPP_
#define SUZUKI_LINALG4_HPP_

#include <array>
#include <compare>
#include <cstddef>
#include <string>

#include "suzuki/field.hpp"

namespace suzuki {

// Column vector in the canonical basis e1..e4 (stored at indices 0..3).
struct Vec4 {
  std::array<FieldElement, 4> coords{};

  FieldElement& operator[](std::size_t i) { return coords[i]; }
  FieldElement operator[](std::size_t i) const { return coords[i]; }
  bool is_zero() const;

  friend bool operator==(const Vec4&, const Vec4&) = default;
  friend auto operator<=>(const Vec4&, const Vec4&) = default;
};

inline Vec4 operator+(const Vec4& u, const Vec4& v) {
  Vec4 w;
  for (std::size_t i = 0; i < 4; ++i) w[i] = u[i] + v[i];
  return w;
}

// 4x4 matrix, row-major. The defaulted ordering compares entries row by row,
// which is exactly the order of the canonical encoding (the 16 entry
// encodings concatenated row-major).
struct Mat4 {
  std::array<FieldElement, 16> entries{};

  FieldElement& operator()(std::size_t row, std::size_t col) { return entries[row * 4 + col]; }
  FieldElement operator()(std::size_t row, std::size_t col) const { return entries[row * 4 + col]; }

  friend bool operator==(const Mat4&, const Mat4&) = default;
  friend auto operator<=>(const Mat4&, const Mat4&) = default;
};

struct Mat4Hash {
  std::size_t operator()(const Mat4& m) const noexcept;
};

Vec4 basis_vector(std::size_t i);
Mat4 identity_matrix();
// The anti-diagonal identity: Gram matrix of the alternating form f and the
// distinguished involution of Sz(q).
Mat4 anti_diagonal_identity();
Mat4 diagonal_matrix(FieldElement d1, FieldElement d2, FieldElement d3, FieldElement d4);

Mat4 mat_mul(const GaloisField& field, const Mat4& a, const Mat4& b);
Vec4 mat_vec(const GaloisField& field, const Mat4& a, const Vec4& v);
Vec4 scale(const GaloisField& field, FieldElement c, const Vec4& v);
Mat4 transpose(const Mat4& a);
Vec4 column(const Mat4& a, std::size_t col);
bool is_symmetric(const Mat4& a);

// f(u, v) = u^T * iota * v = u1 v4 + u2 v3 + u3 v2 + u4 v1.
FieldElement form_f(const GaloisField& field, const Vec4& u, const Vec4& v);

// a^T * iota * a == iota.
bool is_symplectic(const GaloisField& field, const Mat4& a);

// Gaussian elimination. Throws SingularMatrix.
Mat4 invert(const GaloisField& field, const Mat4& a);
bool is_invertible(const GaloisField& field, const Mat4& a);

// The symplectic transvection v -> v + lambda * f(v, w) * w.
Mat4 transvection(const GaloisField& field, const Vec4& w, FieldElement lambda);

// Report and cache text format: 16 lowercase hex fields, row-major, separated
// by single spaces. Vectors use the same encoding with 4 fields.
std::string to_text(const Mat4& a);
std::string to_text(const Vec4& v);
// Throws std::invalid_argument on malformed text or entries outside the field.
Mat4 parse_mat4(const GaloisField& field, const std::string& text);

// Packed canonical key: one byte per entry, row-major. Valid for q <= 256,
// which covers every group the engine can enumerate.
using PackedMat4 = std::array<std::uint8_t, 16>;
PackedMat4 pack(const Mat4& a);
Mat4 unpack(const PackedMat4& p);

}  // namespace suzuki

#endif  // SUZUKI_LINALG4_HPP_
