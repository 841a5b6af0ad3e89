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

#ifndef SUZUKI_CHIRAL_VERIFIER_HPP_
#define SUZUKI_CHIRAL_VERIFIER_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "suzuki/context.hpp"
#include "suzuki/group_engine.hpp"
#include "suzuki/linalg4.hpp"

namespace suzuki {

// Candidate rotation generators of a rank-4 chiral polytope: sigma1 sigma2
// sigma3, sigma2 sigma3 and sigma1 sigma2 must all be involutions. That is
// checked, never assumed.
struct ChiralTriple {
  Mat4 sigma1;
  Mat4 sigma2;
  Mat4 sigma3;

  friend bool operator==(const ChiralTriple&, const ChiralTriple&) = default;
};

Mat4 triple_product(const GaloisField& field, const ChiralTriple& triple);
bool is_involution(const GaloisField& field, const Mat4& g);
// All three involution conditions.
bool has_involution_products(const GaloisField& field, const ChiralTriple& triple);

struct CandidateDetail {
  FieldElement a;  // sigma1^-1 = torus(a)
  FieldElement b;  // sigma3^-1 = torus(b)
  std::size_t subgroup_order = 0;
  bool solvable = false;
  bool involution_conditions = false;
  std::uint64_t order_sigma1 = 0;
  std::uint64_t order_sigma2 = 0;
  std::uint64_t order_sigma3 = 0;
  std::vector<std::size_t> derived_orders;
  std::string rejection;  // empty when the triple generates Sz(q)
};

struct TripleReport {
  std::uint32_t q = 0;
  std::uint64_t group_order = 0;
  bool fixed_set_matches = false;
  // Pairs with sigma1^-1 = iota or sigma3^-1 = iota: all of them must make
  // sigma1 sigma2 or sigma2 sigma3 trivial.
  std::size_t iota_pairs = 0;
  bool iota_pairs_degenerate = false;
  std::size_t candidate_count = 0;
  std::vector<ChiralTriple> successes;
  std::vector<CandidateDetail> details;

  // No generating triple and every reduction step held.
  bool theorem_holds() const;
};

// Conjugates the triple so its product becomes exactly iota, using the
// transversal of the iota conjugacy class. Throws PreconditionViolated if the
// product is not an involution and TheoremViolation if it is an involution
// outside the class of iota.
ChiralTriple normalize_triple(const GaloisField& field, const ChiralTriple& triple,
                              const ConjugationOrbit& iota_class);

// With sigma1 sigma2 sigma3 = iota and the two partial products
// involutions, certifies that sigma1^-1 and sigma3^-1 satisfy x iota x = iota.
// Throws PreconditionViolated when the hypotheses fail.
bool fixed_set_membership_lemma(const SuzukiContext& ctx, const ChiralTriple& triple);

// The reduced exhaustive search: confirms the fixed set equals its closed
// form, shows the pairs involving iota are degenerate, then for each ordered
// pair (a, b) of nonzero field elements takes sigma1^-1 = torus(a),
// sigma3^-1 = torus(b), sigma2 = sigma1^-1 iota sigma3^-1 and computes the
// generated subgroup. Details are in (a, b) encoding order.
TripleReport search_rank4(const SuzukiContext& ctx, const GroupSet& group, unsigned jobs = 1);

// The same search over the whole fixed set as scanned from the group, not
// just its closed form. Ordered pairs (x, y) of X \ {iota} give sigma1 = x^-1,
// sigma2 = x iota y, sigma3 = y^-1; pairs are counted up to simultaneous
// conjugation by the centralizer of iota and weighted by orbit size. A
// subgroup with more than |G| / 2 elements is taken to be G (Lagrange).
//
// The rank-4 intersection condition is
//   <s1> n <s2> = 1, <s2> n <s3> = 1, <s1, s2> n <s2, s3> = <s2>.
struct ExhaustiveRank4Report {
  std::uint32_t q = 0;
  std::uint64_t group_order = 0;
  std::size_t fixed_set_size = 0;
  std::size_t centralizer_order = 0;
  std::size_t orbit_representatives = 0;
  std::uint64_t ordered_pairs = 0;
  std::uint64_t involution_pairs = 0;   // all three involution conditions hold
  std::uint64_t generating_pairs = 0;   // ... and the triple generates G
  std::uint64_t intersecting_pairs = 0; // ... and the intersection condition holds
  std::map<std::size_t, std::uint64_t> proper_subgroup_orders;
  std::optional<ChiralTriple> generating_example;
  std::optional<ChiralTriple> intersecting_example;

  // No rank-4 polytope: no generating triple meets the intersection
  // condition.
  bool no_rank4_polytope() const { return intersecting_pairs == 0; }
};

ExhaustiveRank4Report search_rank4_exhaustive(const SuzukiContext& ctx, const GroupSet& group,
                                              unsigned jobs = 1);

// The rank-4 intersection condition for a triple generating `group_order`
// elements.
bool intersection_condition(const GaloisField& field, const ChiralTriple& triple,
                            std::uint64_t group_order);

// iota^-1 D iota == D^-1 for every torus element D.
bool torus_inversion_check(const SuzukiContext& ctx);
// Torus elements commute pairwise.
bool torus_commutation_check(const SuzukiContext& ctx);

struct InvolutionCensus {
  std::size_t involutions = 0;      // g != I, g^2 = I
  std::size_t orbit_size = 0;       // |class of iota|
  bool single_class = false;        // the orbit is exactly the involution set
};

InvolutionCensus involution_census(const SuzukiContext& ctx, const GroupSet& group,
                                   const ConjugationOrbit& iota_class, unsigned jobs = 1);

}  // namespace suzuki

#endif  // SUZUKI_CHIRAL_VERIFIER_HPP_
