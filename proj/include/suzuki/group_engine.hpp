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

#ifndef SUZUKI_GROUP_ENGINE_HPP_
#define SUZUKI_GROUP_ENGINE_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "suzuki/context.hpp"
#include "suzuki/errors.hpp"
#include "suzuki/linalg4.hpp"

namespace suzuki {

class DepthLimitExceeded : public Error {
 public:
  using Error::Error;
};

// A deduplicated set of matrices keyed by their canonical encoding, plus the
// generators it was closed from. Elements keep insertion order (breadth-first
// order for closures); sorted_elements() gives the canonical order.
//
// Lookups are safe from many threads as long as nobody inserts concurrently.
class GroupSet {
 public:
  GroupSet() = default;
  explicit GroupSet(std::vector<Mat4> generators) : generators_(std::move(generators)) {}

  std::size_t order() const { return packed_.size(); }
  Mat4 element(std::size_t i) const { return unpack(packed_[i]); }
  const std::vector<Mat4>& generators() const { return generators_; }
  void set_generators(std::vector<Mat4> generators) { generators_ = std::move(generators); }

  bool contains(const Mat4& m) const;
  std::optional<std::size_t> find(const Mat4& m) const;
  // Returns false if m was already present. Entries must be < 256.
  bool insert(const Mat4& m);
  void reserve(std::size_t n);

  std::vector<Mat4> sorted_elements() const;

 private:
  std::size_t slot_for(const PackedMat4& key) const;
  void rehash(std::size_t capacity);

  std::vector<PackedMat4> packed_;
  std::vector<std::uint32_t> slots_;  // 0 = empty, otherwise element index + 1
  std::vector<Mat4> generators_;
};

// Breadth-first closure of `generators` under right multiplication, starting
// from the identity. The frontier of each level is split across `jobs`
// workers against the (read-only) set, and the new elements are merged in
// frontier order, so the result is identical for every worker count.
// Throws BudgetExceeded once the order would pass `ceiling`, and
// PreconditionViolated for a singular generator.
GroupSet closure(const GaloisField& field, std::span<const Mat4> generators,
                 std::uint64_t ceiling = kDefaultBudget, unsigned jobs = 1);

// Extends a closed set by one more generator, in place, with the same
// determinism and ceiling behaviour as closure().
void add_generator(const GaloisField& field, GroupSet& group, const Mat4& generator,
                   std::uint64_t ceiling = kDefaultBudget, unsigned jobs = 1);

// Keeps, in order, each matrix not already in the group generated by the
// ones kept before it. Generates the same group as the input.
std::vector<Mat4> reduce_generators(const GaloisField& field, std::span<const Mat4> generators,
                                    std::uint64_t ceiling = kDefaultBudget);

// The q^4 lower-unitriangular symplectic matrices. With free entries
// a21, a31, a32, a41 the form forces a43 = a21 and a42 = a21 a32 + a31.
std::vector<Mat4> lower_unitriangular_symplectic(const SuzukiContext& ctx);

// The symplectic permutation e1 <-> e2, e3 <-> e4. It sorts the basis by
// torus weight (2t+1, 1, -1, -2t-1 for e2, e1, e4, e3).
Mat4 weight_order_permutation();

// pi L pi for every L from lower_unitriangular_symplectic, pi the weight
// order permutation: the symplectic matrices that are lower-unitriangular in
// the basis order (e2, e1, e4, e3), i.e. fix e3 and the flag
// <e3> < <e3, e4> < <e3, e4, e1>. Sz(q) meets this group in a Sylow
// 2-subgroup; it meets the plain lower-unitriangular group in only q
// elements.
std::vector<Mat4> borel_unitriangular_symplectic(const SuzukiContext& ctx);

// The matrices of borel_unitriangular_symplectic passing is_suzuki, in
// canonical order. Throws TheoremViolation unless there are exactly q^2.
std::vector<Mat4> sylow_two_subgroup(const SuzukiContext& ctx, unsigned jobs = 1);

// Generators used for Sz(q): a reduced generating set of the Sylow
// 2-subgroup followed by iota.
std::vector<Mat4> suzuki_generators(const SuzukiContext& ctx, unsigned jobs = 1);

// Enumerates Sz(q) as the closure of the Sylow 2-subgroup and iota, then
// checks the order against q^2 (q^2 + 1) (q - 1). Refuses with
// BudgetExceeded when that order is above `ceiling` (q = 128 and beyond).
GroupSet build_suzuki(const SuzukiContext& ctx, std::uint64_t ceiling = kDefaultBudget,
                      unsigned jobs = 1);

struct ConjugationOrbit {
  std::vector<Mat4> elements;  // discovery order, seed first
  // x -> h with x = h * seed * h^-1
  std::unordered_map<Mat4, Mat4, Mat4Hash> conjugator;

  bool contains(const Mat4& m) const { return conjugator.count(m) != 0; }
};

// Orbit of `seed` under conjugation by the group's generators, with a
// transversal. Throws PreconditionViolated if seed is not in the group.
ConjugationOrbit conjugation_orbit(const GaloisField& field, const Mat4& seed, const GroupSet& group);

// Least k >= 1 with g^k = I. Throws PreconditionViolated for singular g.
std::uint64_t element_order(const GaloisField& field, const Mat4& g);

// g^-1 h^-1 g h
Mat4 commutator(const GaloisField& field, const Mat4& g, const Mat4& h);

struct DerivedSeries {
  std::vector<std::size_t> orders;  // |G|, |G'|, |G''|, ...
  bool solvable = false;            // series reached the trivial group
  bool stabilized = false;          // series stopped at a nontrivial perfect group
};

// The derived series. Each term is the normal closure, inside the
// previous term, of the commutators of that term's generators. A term that
// passes half the previous one equals it, which ends the series early. Throws
// DepthLimitExceeded if neither outcome is reached within depth_limit steps.
DerivedSeries derived_series(const GaloisField& field, const GroupSet& group,
                             std::size_t depth_limit = 64,
                             std::uint64_t ceiling = kDefaultBudget, unsigned jobs = 1);

inline bool derived_series_solvable(const GaloisField& field, const GroupSet& group,
                                    std::size_t depth_limit = 64) {
  return derived_series(field, group, depth_limit).solvable;
}

// Group cache: "SZQ <q> <order>" then one matrix per line (16 hex fields).
void save_group(const std::filesystem::path& path, const SuzukiContext& ctx, const GroupSet& group);

// Loads and re-validates a cache: header q matches, order matches both the
// header and q^2 (q^2 + 1) (q - 1), no duplicates, the Sz(q) generators are
// present, and `spot_checks` random elements pass is_suzuki. Throws
// CacheError on any mismatch.
GroupSet load_group(const std::filesystem::path& path, const SuzukiContext& ctx,
                    std::size_t spot_checks = 100, unsigned jobs = 1);

// Cache file name used by the CLI inside a cache directory.
std::filesystem::path group_cache_path(const std::filesystem::path& dir, const SuzukiContext& ctx);

}  // namespace suzuki

#endif  // SUZUKI_GROUP_ENGINE_HPP_
