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

#include "suzuki/group_engine.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <fstream>
#include <random>
#include <sstream>

#include <fmt/format.h>

#include "suzuki/parallel.hpp"
#include "suzuki/wilson.hpp"

namespace suzuki {

namespace {

std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ull;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebull;
  x ^= x >> 31;
  return x;
}

std::uint64_t hash_key(const PackedMat4& key) {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::memcpy(&lo, key.data(), 8);
  std::memcpy(&hi, key.data() + 8, 8);
  return mix64(lo ^ mix64(hi + 0x9e3779b97f4a7c15ull));
}

}  // namespace

// ---------------------------------------------------------------------------
// GroupSet

std::size_t GroupSet::slot_for(const PackedMat4& key) const {
  const std::size_t mask = slots_.size() - 1;
  std::size_t slot = hash_key(key) & mask;
  while (slots_[slot] != 0 && packed_[slots_[slot] - 1] != key) slot = (slot + 1) & mask;
  return slot;
}

void GroupSet::rehash(std::size_t capacity) {
  slots_.assign(capacity, 0);
  const std::size_t mask = capacity - 1;
  for (std::size_t i = 0; i < packed_.size(); ++i) {
    std::size_t slot = hash_key(packed_[i]) & mask;
    while (slots_[slot] != 0) slot = (slot + 1) & mask;
    slots_[slot] = static_cast<std::uint32_t>(i + 1);
  }
}

void GroupSet::reserve(std::size_t n) {
  packed_.reserve(n);
  const std::size_t wanted = std::bit_ceil(std::max<std::size_t>(16, 2 * n));
  if (wanted > slots_.size()) rehash(wanted);
}

std::optional<std::size_t> GroupSet::find(const Mat4& m) const {
  if (slots_.empty()) return std::nullopt;
  for (FieldElement c : m.entries) {
    if (c.bits > 0xff) return std::nullopt;
  }
  const std::uint32_t slot = slots_[slot_for(pack(m))];
  if (slot == 0) return std::nullopt;
  return slot - 1;
}

bool GroupSet::contains(const Mat4& m) const { return find(m).has_value(); }

bool GroupSet::insert(const Mat4& m) {
  for (FieldElement c : m.entries) {
    if (c.bits > 0xff) throw std::invalid_argument("GroupSet holds matrices over fields with q <= 256");
  }
  if (packed_.size() >= 0xfffffffeu) throw BudgetExceeded("GroupSet index is full");
  if (2 * (packed_.size() + 1) > slots_.size()) {
    rehash(std::max<std::size_t>(16, slots_.size() * 2));
  }
  const PackedMat4 key = pack(m);
  const std::size_t slot = slot_for(key);
  if (slots_[slot] != 0) return false;
  packed_.push_back(key);
  slots_[slot] = static_cast<std::uint32_t>(packed_.size());
  return true;
}

std::vector<Mat4> GroupSet::sorted_elements() const {
  std::vector<PackedMat4> keys = packed_;
  std::sort(keys.begin(), keys.end());
  std::vector<Mat4> out;
  out.reserve(keys.size());
  for (const PackedMat4& k : keys) out.push_back(unpack(k));
  return out;
}

// ---------------------------------------------------------------------------
// Closure

namespace {

// Breadth-first levels starting at element `level_begin`. The first level is
// multiplied by `first_gens` only, later levels by every generator.
void close_levels(const GaloisField& field, GroupSet& group, std::span<const Mat4> gens,
                  std::span<const Mat4> first_gens, std::size_t level_begin, std::uint64_t ceiling,
                  unsigned jobs) {
  std::size_t level_end = group.order();
  std::span<const Mat4> level_gens = first_gens;
  while (level_begin < level_end) {
    const std::size_t n = level_end - level_begin;
    std::vector<std::vector<PackedMat4>> found(chunk_count(jobs, n));
    parallel_chunks(jobs, n, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
      std::vector<PackedMat4>& out = found[chunk];
      for (std::size_t i = begin; i < end; ++i) {
        const Mat4 x = group.element(level_begin + i);
        for (const Mat4& g : level_gens) {
          const Mat4 y = mat_mul(field, x, g);
          if (!group.contains(y)) out.push_back(pack(y));
        }
      }
    });
    for (std::vector<PackedMat4>& chunk : found) {
      for (const PackedMat4& y : chunk) {
        if (group.insert(unpack(y)) && group.order() > ceiling) {
          throw BudgetExceeded(fmt::format("closure exceeded the ceiling of {} elements", ceiling));
        }
      }
      std::vector<PackedMat4>().swap(chunk);
    }
    level_begin = level_end;
    level_end = group.order();
    level_gens = gens;
  }
}

void check_invertible(const GaloisField& field, std::span<const Mat4> generators) {
  for (const Mat4& g : generators) {
    if (!is_invertible(field, g)) {
      throw PreconditionViolated("closure generator is singular: " + to_text(g));
    }
  }
}

}  // namespace

GroupSet closure(const GaloisField& field, std::span<const Mat4> generators, std::uint64_t ceiling,
                 unsigned jobs) {
  if (ceiling < 1) throw std::invalid_argument("closure ceiling must be at least 1");
  check_invertible(field, generators);
  GroupSet group(std::vector<Mat4>(generators.begin(), generators.end()));
  group.insert(identity_matrix());
  close_levels(field, group, generators, generators, 0, ceiling, jobs);
  return group;
}

void add_generator(const GaloisField& field, GroupSet& group, const Mat4& generator, std::uint64_t ceiling,
                   unsigned jobs) {
  const std::span<const Mat4> one(&generator, 1);
  check_invertible(field, one);
  std::vector<Mat4> gens = group.generators();
  gens.push_back(generator);
  group.set_generators(gens);
  close_levels(field, group, group.generators(), one, 0, ceiling, jobs);
}

std::vector<Mat4> reduce_generators(const GaloisField& field, std::span<const Mat4> generators,
                                    std::uint64_t ceiling) {
  std::vector<Mat4> kept;
  GroupSet current = closure(field, kept, ceiling);
  for (const Mat4& g : generators) {
    if (current.contains(g)) continue;
    kept.push_back(g);
    current = closure(field, kept, ceiling);
  }
  return kept;
}

// ---------------------------------------------------------------------------
// Sz(q)

std::vector<Mat4> lower_unitriangular_symplectic(const SuzukiContext& ctx) {
  const GaloisField& field = ctx.field();
  const std::vector<FieldElement> elems = field.elements();
  std::vector<Mat4> out;
  out.reserve(elems.size() * elems.size() * elems.size() * elems.size());
  for (FieldElement a21 : elems) {
    for (FieldElement a31 : elems) {
      for (FieldElement a32 : elems) {
        for (FieldElement a41 : elems) {
          Mat4 m = identity_matrix();
          m(1, 0) = a21;
          m(2, 0) = a31;
          m(2, 1) = a32;
          m(3, 0) = a41;
          // f(col1, col3) = a43 + a21 and f(col1, col2) = a42 + a21 a32 + a31.
          m(3, 2) = a21;
          m(3, 1) = field.mul(a21, a32) + a31;
          out.push_back(m);
        }
      }
    }
  }
  return out;
}

Mat4 weight_order_permutation() {
  Mat4 p;
  p(0, 1) = FieldElement{1};
  p(1, 0) = FieldElement{1};
  p(2, 3) = FieldElement{1};
  p(3, 2) = FieldElement{1};
  return p;
}

std::vector<Mat4> borel_unitriangular_symplectic(const SuzukiContext& ctx) {
  const Mat4 pi = weight_order_permutation();
  std::vector<Mat4> out = lower_unitriangular_symplectic(ctx);
  for (Mat4& m : out) m = mat_mul(ctx.field(), mat_mul(ctx.field(), pi, m), pi);
  return out;
}

std::vector<Mat4> sylow_two_subgroup(const SuzukiContext& ctx, unsigned jobs) {
  const std::vector<Mat4> candidates = borel_unitriangular_symplectic(ctx);
  std::vector<std::vector<Mat4>> found(chunk_count(jobs, candidates.size()));
  parallel_chunks(jobs, candidates.size(), [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      if (!is_symplectic(ctx.field(), candidates[i])) {
        throw std::logic_error("unitriangular parametrization produced a non-symplectic matrix");
      }
      if (is_suzuki(ctx, candidates[i])) found[chunk].push_back(candidates[i]);
    }
  });
  std::vector<Mat4> sylow;
  for (const auto& chunk : found) sylow.insert(sylow.end(), chunk.begin(), chunk.end());
  std::sort(sylow.begin(), sylow.end());
  const std::uint64_t q = ctx.q();
  if (sylow.size() != q * q) {
    throw TheoremViolation(fmt::format("Sylow filter kept {} matrices, expected q^2 = {}",
                                       sylow.size(), q * q));
  }
  return sylow;
}

std::vector<Mat4> suzuki_generators(const SuzukiContext& ctx, unsigned jobs) {
  const std::vector<Mat4> sylow = sylow_two_subgroup(ctx, jobs);
  std::vector<Mat4> gens = reduce_generators(ctx.field(), sylow);
  // The filtered set must itself be the subgroup the reduced set generates.
  const GroupSet u = closure(ctx.field(), gens);
  if (u.order() != sylow.size() || u.sorted_elements() != sylow) {
    throw TheoremViolation("Sylow filter output is not closed under multiplication");
  }
  gens.push_back(ctx.iota());
  return gens;
}

GroupSet build_suzuki(const SuzukiContext& ctx, std::uint64_t ceiling, unsigned jobs) {
  const std::uint64_t expected = ctx.suzuki_order_formula();
  if (expected > ceiling) {
    throw BudgetExceeded(fmt::format("|Sz({})| = {} exceeds the enumeration ceiling {}", ctx.q(),
                                     expected, ceiling));
  }
  if (!is_suzuki(ctx, ctx.iota())) throw TheoremViolation("iota fails the Suzuki membership test");
  const std::vector<Mat4> gens = suzuki_generators(ctx, jobs);
  GroupSet group = closure(ctx.field(), gens, ceiling, jobs);
  if (group.order() != expected) {
    throw TheoremViolation(fmt::format("closure of the Sylow subgroup and iota has order {}, expected {}",
                                       group.order(), expected));
  }
  return group;
}

// ---------------------------------------------------------------------------
// Orbits, orders, derived series

ConjugationOrbit conjugation_orbit(const GaloisField& field, const Mat4& seed, const GroupSet& group) {
  if (!group.contains(seed)) throw PreconditionViolated("conjugation_orbit seed is not in the group");
  std::vector<Mat4> gens = group.generators();
  std::vector<Mat4> inverses;
  for (const Mat4& g : gens) inverses.push_back(invert(field, g));

  ConjugationOrbit orbit;
  orbit.elements.push_back(seed);
  orbit.conjugator.emplace(seed, identity_matrix());
  for (std::size_t next = 0; next < orbit.elements.size(); ++next) {
    const Mat4 x = orbit.elements[next];
    const Mat4 h = orbit.conjugator.at(x);
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const Mat4 y = mat_mul(field, mat_mul(field, gens[k], x), inverses[k]);
      if (orbit.conjugator.count(y) != 0) continue;
      orbit.conjugator.emplace(y, mat_mul(field, gens[k], h));
      orbit.elements.push_back(y);
    }
  }
  return orbit;
}

std::uint64_t element_order(const GaloisField& field, const Mat4& g) {
  if (!is_invertible(field, g)) throw PreconditionViolated("element_order of a singular matrix");
  const Mat4 id = identity_matrix();
  // |GL_4(q)| bounds every element order; q^4 is already far above the
  // largest order in Sp_4(q).
  const std::uint64_t q = field.order();
  const std::uint64_t limit = q * q * q * q;
  std::uint64_t k = 1;
  for (Mat4 p = g; p != id; p = mat_mul(field, p, g)) {
    if (++k > limit) throw std::logic_error("element order above q^4");
  }
  return k;
}

Mat4 commutator(const GaloisField& field, const Mat4& g, const Mat4& h) {
  return mat_mul(field, mat_mul(field, invert(field, g), invert(field, h)), mat_mul(field, g, h));
}

DerivedSeries derived_series(const GaloisField& field, const GroupSet& group, std::size_t depth_limit,
                             std::uint64_t ceiling, unsigned jobs) {
  const Mat4 id = identity_matrix();
  DerivedSeries series;
  series.orders.push_back(group.order());
  if (group.order() == 1) {
    series.solvable = true;
    return series;
  }

  std::vector<Mat4> gens = group.generators();
  std::size_t current_order = group.order();
  for (std::size_t depth = 0; depth < depth_limit; ++depth) {
    std::vector<Mat4> inverses;
    for (const Mat4& g : gens) inverses.push_back(invert(field, g));

    std::vector<Mat4> next_gens;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (std::size_t j = i + 1; j < gens.size(); ++j) {
        const Mat4 c = commutator(field, gens[i], gens[j]);
        if (c != id && std::find(next_gens.begin(), next_gens.end(), c) == next_gens.end()) {
          next_gens.push_back(c);
        }
      }
    }
    // sub <= current term, so passing half of it means equality.
    const std::uint64_t half = current_order / 2;
    const bool lagrange = half < ceiling;
    const std::uint64_t limit = lagrange ? half : ceiling;
    std::optional<GroupSet> sub;
    try {
      sub = closure(field, next_gens, limit, jobs);
      // Normal closure inside the current term: add conjugates of the
      // subgroup's generators by the current generators until stable.
      for (bool grew = true; grew;) {
        grew = false;
        for (std::size_t k = 0; k < gens.size() && !grew; ++k) {
          for (std::size_t m = 0; m < next_gens.size(); ++m) {
            const Mat4 conj = mat_mul(field, mat_mul(field, inverses[k], next_gens[m]), gens[k]);
            if (!sub->contains(conj)) {
              next_gens.push_back(conj);
              add_generator(field, *sub, conj, limit, jobs);
              grew = true;
              break;
            }
          }
        }
      }
    } catch (const BudgetExceeded&) {
      if (!lagrange) throw;
      series.orders.push_back(current_order);
      series.stabilized = true;
      return series;
    }
    series.orders.push_back(sub->order());
    if (sub->order() == 1) {
      series.solvable = true;
      return series;
    }
    if (sub->order() == current_order) {
      series.stabilized = true;
      return series;
    }
    current_order = sub->order();
    gens = std::move(next_gens);
  }
  throw DepthLimitExceeded(fmt::format("derived series did not settle within {} steps", depth_limit));
}

// ---------------------------------------------------------------------------
// Cache

std::filesystem::path group_cache_path(const std::filesystem::path& dir, const SuzukiContext& ctx) {
  return dir / fmt::format("sz{}.szq", ctx.q());
}

void save_group(const std::filesystem::path& path, const SuzukiContext& ctx, const GroupSet& group) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CacheError("cannot write group cache " + tmp.string());
    out << "SZQ " << ctx.q() << ' ' << group.order() << '\n';
    for (std::size_t i = 0; i < group.order(); ++i) out << to_text(group.element(i)) << '\n';
    if (!out) throw CacheError("short write to group cache " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

GroupSet load_group(const std::filesystem::path& path, const SuzukiContext& ctx, std::size_t spot_checks,
                    unsigned jobs) {
  std::ifstream in(path);
  if (!in) throw CacheError("cannot open group cache " + path.string());
  std::string line;
  if (!std::getline(in, line)) throw CacheError("empty group cache " + path.string());
  std::istringstream header(line);
  std::string tag;
  std::uint64_t q = 0;
  std::uint64_t order = 0;
  if (!(header >> tag >> q >> order) || tag != "SZQ") {
    throw CacheError("bad group cache header: '" + line + "'");
  }
  if (q != ctx.q()) throw CacheError(fmt::format("cache is for q = {}, expected {}", q, ctx.q()));
  if (order != ctx.suzuki_order_formula()) {
    throw CacheError(fmt::format("cache header order {} != {}", order, ctx.suzuki_order_formula()));
  }

  GroupSet group;
  group.reserve(order);
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    Mat4 m;
    try {
      m = parse_mat4(ctx.field(), line);
    } catch (const std::invalid_argument& err) {
      throw CacheError(fmt::format("{}:{}: {}", path.string(), lineno, err.what()));
    }
    if (!group.insert(m)) throw CacheError(fmt::format("{}:{}: duplicate element", path.string(), lineno));
  }
  if (group.order() != order) {
    throw CacheError(fmt::format("cache lists {} elements, header says {}", group.order(), order));
  }

  std::vector<Mat4> gens = suzuki_generators(ctx, jobs);
  for (const Mat4& g : gens) {
    if (!group.contains(g)) throw CacheError("cache is missing a Suzuki generator");
  }
  group.set_generators(std::move(gens));

  std::mt19937_64 rng(0x5a5a1234u ^ ctx.q());
  std::uniform_int_distribution<std::size_t> pick(0, group.order() - 1);
  for (std::size_t k = 0; k < spot_checks; ++k) {
    const Mat4 m = group.element(pick(rng));
    if (!is_suzuki(ctx, m)) throw CacheError("cached element fails is_suzuki: " + to_text(m));
  }
  return group;
}

}  // namespace suzuki
