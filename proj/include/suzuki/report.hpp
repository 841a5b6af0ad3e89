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

#ifndef SUZUKI_REPORT_HPP_
#define SUZUKI_REPORT_HPP_

#include <string_view>

#include "json.hpp"
#include "suzuki/chiral_verifier.hpp"
#include "suzuki/fixed_set.hpp"

namespace suzuki {

// Key order is insertion order so serialized reports are byte-stable.
using Json = nlohmann::ordered_json;

inline constexpr std::string_view kReportSchema = "szverify-report/1";

// {"matrix": "<16 hex>", "equations": [{"label": "S1", "satisfied": true,
//  ...}], "all_satisfied": bool}
Json to_json(const EquationReport& report);

// {"q": 8, "candidates": 49, "successes": [], "details": [{"a": "<hex>",
//  "b": "<hex>", "subgroup_order": 14, "solvable": true, ...}]}
Json to_json(const TripleReport& report);

Json to_json(const ExhaustiveRank4Report& report);
Json to_json(const FixedSetResult& result);
Json to_json(const SystemSolutions& solutions);
Json to_json(const InvolutionCensus& census);

}  // namespace suzuki

#endif  // SUZUKI_REPORT_HPP_
