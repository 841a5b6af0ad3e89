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

#include <sstream>
#include <stdexcept>
#include <utility>

#include "suzuki/errors.hpp"

namespace suzuki {

bool Vec4::is_zero() const {
  for (FieldElement c : coords) {
    if (!c.is_zero()) return false;
  }
  return true;
}

std::size_t Mat4Hash::operator()(const Mat4& m) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ull;
  for (FieldElement c : m.entries) {
    h ^= c.bits;
    h *= 0x100000001b3ull;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

Vec4 basis_vector(std::size_t i) {
  Vec4 v;
  v[i] = FieldElement{1};
  return v;
}

Mat4 identity_matrix() {
  Mat4 m;
  for (std::size_t i = 0; i < 4; ++i) m(i, i) = FieldElement{1};
  return m;
}

Mat4 anti_diagonal_identity() {
  Mat4 m;
  for (std::size_t i = 0; i < 4; ++i) m(i, 3 - i) = FieldElement{1};
  return m;
}

Mat4 diagonal_matrix(FieldElement d1, FieldElement d2, FieldElement d3, FieldElement d4) {
  Mat4 m;
  m(0, 0) = d1;
  m(1, 1) = d2;
  m(2, 2) = d3;
  m(3, 3) = d4;
  return m;
}

Mat4 mat_mul(const GaloisField& field, const Mat4& a, const Mat4& b) {
  Mat4 c;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      FieldElement s = field.mul(a(i, 0), b(0, j));
      s += field.mul(a(i, 1), b(1, j));
      s += field.mul(a(i, 2), b(2, j));
      s += field.mul(a(i, 3), b(3, j));
      c(i, j) = s;
    }
  }
  return c;
}

Vec4 mat_vec(const GaloisField& field, const Mat4& a, const Vec4& v) {
  Vec4 w;
  for (std::size_t i = 0; i < 4; ++i) {
    FieldElement s = field.mul(a(i, 0), v[0]);
    s += field.mul(a(i, 1), v[1]);
    s += field.mul(a(i, 2), v[2]);
    s += field.mul(a(i, 3), v[3]);
    w[i] = s;
  }
  return w;
}

Vec4 scale(const GaloisField& field, FieldElement c, const Vec4& v) {
  Vec4 w;
  for (std::size_t i = 0; i < 4; ++i) w[i] = field.mul(c, v[i]);
  return w;
}

Mat4 transpose(const Mat4& a) {
  Mat4 t;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) t(j, i) = a(i, j);
  }
  return t;
}

Vec4 column(const Mat4& a, std::size_t col) {
  Vec4 v;
  for (std::size_t i = 0; i < 4; ++i) v[i] = a(i, col);
  return v;
}

bool is_symmetric(const Mat4& a) { return transpose(a) == a; }

FieldElement form_f(const GaloisField& field, const Vec4& u, const Vec4& v) {
  FieldElement s = field.mul(u[0], v[3]);
  s += field.mul(u[1], v[2]);
  s += field.mul(u[2], v[1]);
  s += field.mul(u[3], v[0]);
  return s;
}

bool is_symplectic(const GaloisField& field, const Mat4& a) {
  // (a^T iota a)_{ij} = f(a e_i, a e_j); compare against iota entrywise.
  std::array<Vec4, 4> cols;
  for (std::size_t j = 0; j < 4; ++j) cols[j] = column(a, j);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const FieldElement expected{static_cast<std::uint16_t>(i + j == 3 ? 1 : 0)};
      if (form_f(field, cols[i], cols[j]) != expected) return false;
    }
  }
  return true;
}

namespace {

// Row-reduces [a | b] in place; returns false if a is singular.
bool eliminate(const GaloisField& field, Mat4& a, Mat4& b) {
  for (std::size_t col = 0; col < 4; ++col) {
    std::size_t pivot = col;
    while (pivot < 4 && a(pivot, col).is_zero()) ++pivot;
    if (pivot == 4) return false;
    if (pivot != col) {
      for (std::size_t k = 0; k < 4; ++k) {
        std::swap(a(pivot, k), a(col, k));
        std::swap(b(pivot, k), b(col, k));
      }
    }
    const FieldElement scale_by = field.inv(a(col, col));
    for (std::size_t k = 0; k < 4; ++k) {
      a(col, k) = field.mul(a(col, k), scale_by);
      b(col, k) = field.mul(b(col, k), scale_by);
    }
    for (std::size_t row = 0; row < 4; ++row) {
      if (row == col || a(row, col).is_zero()) continue;
      const FieldElement factor = a(row, col);
      for (std::size_t k = 0; k < 4; ++k) {
        a(row, k) += field.mul(factor, a(col, k));
        b(row, k) += field.mul(factor, b(col, k));
      }
    }
  }
  return true;
}

}  // namespace

Mat4 invert(const GaloisField& field, const Mat4& a) {
  Mat4 work = a;
  Mat4 result = identity_matrix();
  if (!eliminate(field, work, result)) {
    throw SingularMatrix("matrix is singular: " + to_text(a));
  }
  return result;
}

bool is_invertible(const GaloisField& field, const Mat4& a) {
  Mat4 work = a;
  Mat4 scratch = identity_matrix();
  return eliminate(field, work, scratch);
}

Mat4 transvection(const GaloisField& field, const Vec4& w, FieldElement lambda) {
  // Column j is e_j + lambda * f(e_j, w) * w.
  Mat4 t = identity_matrix();
  for (std::size_t j = 0; j < 4; ++j) {
    const FieldElement coeff = field.mul(lambda, form_f(field, basis_vector(j), w));
    for (std::size_t i = 0; i < 4; ++i) t(i, j) += field.mul(coeff, w[i]);
  }
  return t;
}

std::string to_text(const Mat4& a) {
  std::string out;
  for (std::size_t k = 0; k < 16; ++k) {
    if (k != 0) out += ' ';
    out += to_hex(a.entries[k]);
  }
  return out;
}

std::string to_text(const Vec4& v) {
  std::string out;
  for (std::size_t k = 0; k < 4; ++k) {
    if (k != 0) out += ' ';
    out += to_hex(v[k]);
  }
  return out;
}

Mat4 parse_mat4(const GaloisField& field, const std::string& text) {
  std::istringstream in(text);
  Mat4 m;
  std::string token;
  std::size_t k = 0;
  while (in >> token) {
    if (k == 16) throw std::invalid_argument("more than 16 matrix fields");
    const FieldElement e = parse_hex_element(token);
    if (e.bits >= field.order()) throw std::invalid_argument("matrix entry outside the field: " + token);
    m.entries[k++] = e;
  }
  if (k != 16) throw std::invalid_argument("expected 16 matrix fields, got " + std::to_string(k));
  return m;
}

PackedMat4 pack(const Mat4& a) {
  PackedMat4 p;
  for (std::size_t k = 0; k < 16; ++k) p[k] = static_cast<std::uint8_t>(a.entries[k].bits);
  return p;
}

Mat4 unpack(const PackedMat4& p) {
  Mat4 a;
  for (std::size_t k = 0; k < 16; ++k) a.entries[k] = FieldElement{p[k]};
  return a;
}

}  // namespace suzuki
