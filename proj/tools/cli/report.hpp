// Copyright 2026 The rootcover Authors.
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


#pragma once

#include <string>

#include "json.hpp"
#include "rootcover/config.hpp"
#include "rootcover/decide.hpp"
#include "rootcover/groups.hpp"
#include "rootcover/padic.hpp"

namespace rootcover::cli {

// Insertion-ordered so that output bytes depend only on the report.
using Json = nlohmann::ordered_json;

/// Integer as a JSON number when it fits in 64 bits, else a decimal string.
Json big(const mpz_class& n);

Json to_json(const PadicReport& r);
Json to_json(const CoverReport& c);
Json to_json(const ConsistencyEvidence& e);
Json to_json(const Config& c);
Json to_json(const PermGroup& g);
/// Group plus root blocks, in the supplied-group file format.
Json to_json(const SuppliedGroup& sg);
Json instance_json(const Instance& inst);
Json to_json(const InstanceReport& r, const Instance& inst, const Config& config);

/// JSON text (two-space indent) or an indented key: value rendering of the
/// same object; both end with a newline.
std::string render(const Json& j, bool pretty);

/// Parses the supplied-group file format:
///   {"degree": 5, "generators": ["(1 2 3)", ...],
///    "blocks": [{"factor": "x^3-2", "labels": [1, 2, 3]}, ...]}
SuppliedGroup parse_supplied_group(const std::string& text, std::size_t order_cap);

}  // namespace rootcover::cli
