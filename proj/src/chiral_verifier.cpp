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

#include "suzuki/chiral_verifier.hpp"

#include <algorithm>
#include <set>

#include <fmt/format.h>

#include "suzuki/errors.hpp"
#include "suzuki/fixed_set.hpp"
#include "suzuki/parallel.hpp"

namespace suzuki {

Mat4 triple_product(const GaloisField& field, const ChiralTriple& t) {
  return mat_mul(field, mat_mul(field, t.sigma1, t.sigma2), t.sigma3);
}

bool is_involution(const GaloisField& field, const Mat4& g) {
  const Mat4 id = identity_matrix();
  return g != id && mat_mul(field, g, g) == id;
}

bool has_involution_products(const GaloisField& field, const ChiralTriple& t) {
  return is_involution(field, triple_product(field, t)) &&
         is_involution(field, mat_mul(field, t.sigma2, t.sigma3)) &&
         is_involution(field, mat_mul(field, t.sigma1, t.sigma2));
}

bool TripleReport::theorem_holds() const {
  return fixed_set_matches && iota_pairs_degenerate && successes.empty() &&
         candidate_count == details.size();
}

ChiralTriple normalize_triple(const GaloisField& field, const ChiralTriple& triple,
                              const ConjugationOrbit& iota_class) {
  const Mat4 product = triple_product(field, triple);
  if (!is_involution(field, product)) {
    throw PreconditionViolated("normalize_triple: sigma1 sigma2 sigma3 is not an involution");
  }
  const auto it = iota_class.conjugator.find(product);
  if (it == iota_class.conjugator.end()) {
    throw TheoremViolation("involution outside the conjugacy class of iota: " + to_text(product));
  }
  // product = h iota h^-1, so conjugating by h gives product iota.
  const Mat4& h = it->second;
  const Mat4 h_inv = invert(field, h);
  auto conj = [&](const Mat4& s) { return mat_mul(field, mat_mul(field, h_inv, s), h); };
  return ChiralTriple{conj(triple.sigma1), conj(triple.sigma2), conj(triple.sigma3)};
}

bool fixed_set_membership_lemma(const SuzukiContext& ctx, const ChiralTriple& triple) {
  const GaloisField& field = ctx.field();
  if (triple_product(field, triple) != ctx.iota()) {
    throw PreconditionViolated("fixed_set_membership_lemma needs sigma1 sigma2 sigma3 = iota");
  }
  if (!is_involution(field, mat_mul(field, triple.sigma1, triple.sigma2)) ||
      !is_involution(field, mat_mul(field, triple.sigma2, triple.sigma3))) {
    throw PreconditionViolated("fixed_set_membership_lemma needs involutions sigma1 sigma2, sigma2 sigma3");
  }
  return in_fixed_set(field, invert(field, triple.sigma1)) &&
         in_fixed_set(field, invert(field, triple.sigma3));
}

namespace {

CandidateDetail examine_pair(const SuzukiContext& ctx, const GroupSet& group, FieldElement a,
                             FieldElement b) {
  const GaloisField& field = ctx.field();
  const Mat4 s1_inv = torus_element(ctx, a);
  const Mat4 s3_inv = torus_element(ctx, b);
  ChiralTriple triple{invert(field, s1_inv),
                      mat_mul(field, mat_mul(field, s1_inv, ctx.iota()), s3_inv),
                      invert(field, s3_inv)};

  CandidateDetail d;
  d.a = a;
  d.b = b;
  d.involution_conditions = has_involution_products(field, triple) &&
                            triple_product(field, triple) == ctx.iota();
  d.order_sigma1 = element_order(field, triple.sigma1);
  d.order_sigma2 = element_order(field, triple.sigma2);
  d.order_sigma3 = element_order(field, triple.sigma3);

  const std::vector<Mat4> gens{triple.sigma1, triple.sigma2, triple.sigma3};
  const GroupSet h = closure(field, gens, group.order());
  d.subgroup_order = h.order();
  const DerivedSeries series = derived_series(field, h);
  d.solvable = series.solvable;
  d.derived_orders = series.orders;

  if (!d.involution_conditions) {
    d.rejection = "involution conditions fail";
  } else if (h.order() < group.order()) {
    d.rejection = "proper subgroup";
  }
  return d;
}

}  // namespace

TripleReport search_rank4(const SuzukiContext& ctx, const GroupSet& group, unsigned jobs) {
  const GaloisField& field = ctx.field();
  TripleReport report;
  report.q = ctx.q();
  report.group_order = group.order();
  report.fixed_set_matches = compare_fixed_set(ctx, group, jobs).equal;

  // Pairs where one inverse is iota: sigma2 collapses onto the other inverse.
  const std::vector<Mat4> x_set = closed_form_X(ctx);
  const Mat4 id = identity_matrix();
  report.iota_pairs_degenerate = true;
  for (const Mat4& s1_inv : x_set) {
    for (const Mat4& s3_inv : x_set) {
      if (s1_inv != ctx.iota() && s3_inv != ctx.iota()) continue;
      ++report.iota_pairs;
      const ChiralTriple t{invert(field, s1_inv), mat_mul(field, mat_mul(field, s1_inv, ctx.iota()), s3_inv),
                           invert(field, s3_inv)};
      const bool degenerate =
          mat_mul(field, t.sigma1, t.sigma2) == id || mat_mul(field, t.sigma2, t.sigma3) == id;
      report.iota_pairs_degenerate = report.iota_pairs_degenerate && degenerate;
    }
  }

  const std::vector<FieldElement> units = field.nonzero_elements();
  const std::size_t n = units.size() * units.size();
  report.details.resize(n);
  parallel_chunks(jobs, n, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      report.details[k] = examine_pair(ctx, group, units[k / units.size()], units[k % units.size()]);
    }
  });
  report.candidate_count = n;
  for (const CandidateDetail& d : report.details) {
    if (!d.rejection.empty()) continue;
    const Mat4 s1_inv = torus_element(ctx, d.a);
    const Mat4 s3_inv = torus_element(ctx, d.b);
    report.successes.push_back(ChiralTriple{invert(field, s1_inv),
                                            mat_mul(field, mat_mul(field, s1_inv, ctx.iota()), s3_inv),
                                            invert(field, s3_inv)});
  }
  return report;
}

namespace {

// The closure of `gens`, or nullopt once it passes half the group, which
// then makes it the whole group.
std::optional<GroupSet> proper_closure(const GaloisField& field, std::span<const Mat4> gens,
                                       std::uint64_t group_order) {
  try {
    return closure(field, gens, group_order / 2);
  } catch (const BudgetExceeded&) {
    return std::nullopt;
  }
}

bool meets_trivially(const GroupSet& a, const GroupSet& b) {
  const Mat4 id = identity_matrix();
  for (std::size_t i = 0; i < a.order(); ++i) {
    const Mat4 g = a.element(i);
    if (g != id && b.contains(g)) return false;
  }
  return true;
}

}  // namespace

bool intersection_condition(const GaloisField& field, const ChiralTriple& t, std::uint64_t group_order) {
  const std::vector<Mat4> g1{t.sigma1}, g2{t.sigma2}, g3{t.sigma3};
  const GroupSet c1 = closure(field, g1), c2 = closure(field, g2), c3 = closure(field, g3);
  if (!meets_trivially(c1, c2) || !meets_trivially(c3, c2)) return false;

  const std::vector<Mat4> g12{t.sigma1, t.sigma2}, g23{t.sigma2, t.sigma3};
  const std::optional<GroupSet> left = proper_closure(field, g12, group_order);
  const std::optional<GroupSet> right = proper_closure(field, g23, group_order);
  if (!left && !right) return false;  // the meet is G, never <s2>
  // One side whole: the meet is the other side.
  if (!left) return right->order() == c2.order();
  if (!right) return left->order() == c2.order();
  std::size_t meet = 0;
  for (std::size_t i = 0; i < left->order(); ++i) {
    if (right->contains(left->element(i))) ++meet;
  }
  return meet == c2.order();
}

ExhaustiveRank4Report search_rank4_exhaustive(const SuzukiContext& ctx, const GroupSet& group,
                                              unsigned jobs) {
  const GaloisField& field = ctx.field();
  const Mat4 iota = ctx.iota();
  ExhaustiveRank4Report report;
  report.q = ctx.q();
  report.group_order = group.order();

  std::vector<Mat4> x_set;
  std::vector<Mat4> centralizer;
  for (const Mat4& g : group.sorted_elements()) {
    const Mat4 gi = mat_mul(field, g, iota);
    if (mat_mul(field, gi, g) == iota) x_set.push_back(g);
    if (gi == mat_mul(field, iota, g)) centralizer.push_back(g);
  }
  report.fixed_set_size = x_set.size();
  report.centralizer_order = centralizer.size();

  std::vector<Mat4> others;
  for (const Mat4& x : x_set) {
    if (x != iota) others.push_back(x);
  }
  // Orbit representatives of the centralizer on X \ {iota}, canonical order.
  std::set<Mat4> seen;
  std::vector<std::pair<Mat4, std::uint64_t>> reps;
  for (const Mat4& x : others) {
    if (seen.contains(x)) continue;
    std::uint64_t size = 0;
    for (const Mat4& c : centralizer) {
      if (seen.insert(mat_mul(field, mat_mul(field, c, x), invert(field, c))).second) ++size;
    }
    reps.emplace_back(x, size);
  }
  report.orbit_representatives = reps.size();

  struct Tally {
    std::uint64_t pairs = 0, involution = 0, generating = 0, intersecting = 0;
    std::map<std::size_t, std::uint64_t> orders;
    std::optional<ChiralTriple> generating_example, intersecting_example;
  };
  const std::size_t n = reps.size() * others.size();
  std::vector<Tally> tallies(chunk_count(jobs, n));
  parallel_chunks(jobs, n, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    Tally& tally = tallies[chunk];
    for (std::size_t k = begin; k < end; ++k) {
      const auto& [x, weight] = reps[k / others.size()];
      const Mat4& y = others[k % others.size()];
      const ChiralTriple t{invert(field, x), mat_mul(field, mat_mul(field, x, iota), y), invert(field, y)};
      tally.pairs += weight;
      if (!has_involution_products(field, t) || triple_product(field, t) != iota) continue;
      tally.involution += weight;
      const std::vector<Mat4> gens{t.sigma1, t.sigma2, t.sigma3};
      const std::optional<GroupSet> h = proper_closure(field, gens, group.order());
      if (h) {
        tally.orders[h->order()] += weight;
        continue;
      }
      tally.generating += weight;
      if (!tally.generating_example) tally.generating_example = t;
      if (intersection_condition(field, t, group.order())) {
        tally.intersecting += weight;
        if (!tally.intersecting_example) tally.intersecting_example = t;
      }
    }
  });
  for (const Tally& tally : tallies) {
    report.ordered_pairs += tally.pairs;
    report.involution_pairs += tally.involution;
    report.generating_pairs += tally.generating;
    report.intersecting_pairs += tally.intersecting;
    for (const auto& [order, count] : tally.orders) report.proper_subgroup_orders[order] += count;
    if (!report.generating_example) report.generating_example = tally.generating_example;
    if (!report.intersecting_example) report.intersecting_example = tally.intersecting_example;
  }
  return report;
}

bool torus_inversion_check(const SuzukiContext& ctx) {
  const GaloisField& field = ctx.field();
  const Mat4 iota_inv = invert(field, ctx.iota());
  for (FieldElement a : field.nonzero_elements()) {
    const Mat4 d = torus_element(ctx, a);
    if (mat_mul(field, mat_mul(field, iota_inv, d), ctx.iota()) != invert(field, d)) return false;
  }
  return true;
}

bool torus_commutation_check(const SuzukiContext& ctx) {
  const GaloisField& field = ctx.field();
  std::vector<Mat4> torus;
  for (FieldElement a : field.nonzero_elements()) torus.push_back(torus_element(ctx, a));
  for (const Mat4& x : torus) {
    for (const Mat4& y : torus) {
      if (mat_mul(field, x, y) != mat_mul(field, y, x)) return false;
    }
  }
  return true;
}

InvolutionCensus involution_census(const SuzukiContext& ctx, const GroupSet& group,
                                   const ConjugationOrbit& iota_class, unsigned jobs) {
  const GaloisField& field = ctx.field();
  std::vector<std::size_t> counts(chunk_count(jobs, group.order()), 0);
  std::vector<std::uint8_t> outside(counts.size(), 0);
  parallel_chunks(jobs, group.order(), [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const Mat4 g = group.element(i);
      if (!is_involution(field, g)) continue;
      ++counts[chunk];
      if (!iota_class.contains(g)) outside[chunk] = 1;
    }
  });
  InvolutionCensus census;
  bool any_outside = false;
  for (std::size_t c = 0; c < counts.size(); ++c) {
    census.involutions += counts[c];
    any_outside = any_outside || outside[c] != 0;
  }
  census.orbit_size = iota_class.elements.size();
  bool orbit_all_involutions = true;
  for (const Mat4& x : iota_class.elements) {
    orbit_all_involutions = orbit_all_involutions && is_involution(field, x) && group.contains(x);
  }
  census.single_class = !any_outside && orbit_all_involutions && census.orbit_size == census.involutions;
  return census;
}

}  // namespace suzuki
