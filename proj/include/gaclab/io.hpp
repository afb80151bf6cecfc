// Copyright 2026 The gaclab Authors
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

#ifndef GACLAB_IO_HPP
#define GACLAB_IO_HPP

#include <string>

#include "gaclab/core.hpp"
#include "json.hpp"

namespace gaclab {

// Instance JSON layout:
//   {"variables": [{"id": "X1", "domain": [1, 2]}, ...],
//    "constraint": {"kind": "...", "scope": [...], ...per-kind keys}}
//
// Per-kind keys: tuples, pairs (objects {i, j, allowed}), cnf, valueSet,
// split, occ (value string -> [lo, hi]), values, rows, target, universe,
// cardinality, children, template.

nlohmann::json instance_to_json(const Instance& inst);
Instance instance_from_json(const nlohmann::json& j);

nlohmann::json spec_to_json(const ConstraintSpec& spec);
ConstraintSpec spec_from_json(const nlohmann::json& j);

/// Compact dump with object keys sorted and domains ascending. Two equal
/// instances always canonicalize to the same bytes.
std::string canonical_instance(const Instance& inst);

/// Parses and validates; throws ParseError on malformed JSON or shape,
/// InvariantError on semantic problems.
Instance parse_instance(const std::string& text);

Instance load_instance_file(const std::string& path);
void save_instance_file(const Instance& inst, const std::string& path);

nlohmann::json domain_map_to_json(const DomainMap& m);
DomainMap domain_map_from_json(const nlohmann::json& j);
DomainMap load_domain_map_file(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace gaclab

#endif  // GACLAB_IO_HPP
