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

#include "suzuki/report.hpp"

namespace suzuki {

namespace {

Json matrix_list(const std::vector<Mat4>& ms) {
  Json out = Json::array();
  for (const Mat4& m : ms) out.push_back(to_text(m));
  return out;
}

}  // namespace

Json to_json(const EquationReport& report) {
  Json eqs = Json::array();
  for (const EquationResult& r : report.equations) {
    eqs.push_back(Json{{"label", r.label},
                       {"satisfied", r.satisfied},
                       {"equation", r.text},
                       {"lhs", to_hex(r.lhs)},
                       {"rhs", to_hex(r.rhs)}});
  }
  return Json{{"matrix", to_text(report.matrix)},
              {"equations", std::move(eqs)},
              {"all_satisfied", report.all_satisfied}};
}

Json to_json(const TripleReport& report) {
  Json successes = Json::array();
  for (const ChiralTriple& t : report.successes) {
    successes.push_back(Json{{"sigma1", to_text(t.sigma1)},
                             {"sigma2", to_text(t.sigma2)},
                             {"sigma3", to_text(t.sigma3)}});
  }
  Json details = Json::array();
  for (const CandidateDetail& d : report.details) {
    details.push_back(Json{{"a", to_hex(d.a)},
                           {"b", to_hex(d.b)},
                           {"subgroup_order", d.subgroup_order},
                           {"solvable", d.solvable},
                           {"involution_conditions", d.involution_conditions},
                           {"sigma_orders", {d.order_sigma1, d.order_sigma2, d.order_sigma3}},
                           {"derived_series", d.derived_orders},
                           {"rejection", d.rejection}});
  }
  return Json{{"q", report.q},
              {"candidates", report.candidate_count},
              {"successes", std::move(successes)},
              {"details", std::move(details)},
              {"group_order", report.group_order},
              {"fixed_set_matches_closed_form", report.fixed_set_matches},
              {"iota_pairs", report.iota_pairs},
              {"iota_pairs_degenerate", report.iota_pairs_degenerate},
              {"theorem_holds", report.theorem_holds()}};
}

namespace {

Json triple_json(const std::optional<ChiralTriple>& t) {
  if (!t) return nullptr;
  return Json{{"sigma1", to_text(t->sigma1)}, {"sigma2", to_text(t->sigma2)}, {"sigma3", to_text(t->sigma3)}};
}

}  // namespace

Json to_json(const ExhaustiveRank4Report& report) {
  Json orders = Json::object();
  for (const auto& [order, count] : report.proper_subgroup_orders) orders[std::to_string(order)] = count;
  return Json{{"q", report.q},
              {"group_order", report.group_order},
              {"fixed_set_size", report.fixed_set_size},
              {"centralizer_order", report.centralizer_order},
              {"orbit_representatives", report.orbit_representatives},
              {"ordered_pairs", report.ordered_pairs},
              {"involution_pairs", report.involution_pairs},
              {"generating_pairs", report.generating_pairs},
              {"intersecting_pairs", report.intersecting_pairs},
              {"proper_subgroup_orders", std::move(orders)},
              {"generating_example", triple_json(report.generating_example)},
              {"intersecting_example", triple_json(report.intersecting_example)},
              {"no_rank4_polytope", report.no_rank4_polytope()}};
}

Json to_json(const FixedSetResult& result) {
  return Json{{"closed_form", matrix_list(result.closed_form)},
              {"brute_force", matrix_list(result.brute_force)},
              {"equal", result.equal}};
}

Json to_json(const SystemSolutions& s) {
  Json cases = Json::array();
  for (std::size_t c = 0; c < kSystemCaseCount; ++c) {
    cases.push_back(Json{{"case", case_name(static_cast<SystemCase>(c))},
                         {"solutions", s.per_case[c]},
                         {"nonsingular", s.per_case_nonsingular[c]}});
  }
  return Json{{"solutions", s.solutions.size()},
              {"nonsingular", matrix_list(s.nonsingular)},
              {"cases", std::move(cases)},
              {"nodes_visited", s.nodes_visited}};
}

Json to_json(const InvolutionCensus& census) {
  return Json{{"involutions", census.involutions},
              {"iota_class_size", census.orbit_size},
              {"single_class", census.single_class}};
}

}  // namespace suzuki
