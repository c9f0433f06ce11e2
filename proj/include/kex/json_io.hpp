// Copyright 2026 the kexcore authors
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

#ifndef KEX_JSON_IO_HPP
#define KEX_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "kex/economy.hpp"

namespace kex {

// Canonical instance interchange format:
//   {"delta": int,
//    "vertices": [{"id":..,"org":..,"kind":"pair"|"unpaired"|"altruist",
//                  "donor_blood"?, "patient_blood"?, "cpra"?}, ...],
//    "arcs": [[u,v], ...]}
// vertices sorted by id, arcs lexicographically; keys sorted; UTF-8.
nlohmann::json economy_to_json(const PartitionEconomy& e);
PartitionEconomy economy_from_json(const nlohmann::json& j);

void save_json(const PartitionEconomy& e, const std::string& path);
PartitionEconomy load_json(const std::string& path);

std::string economy_dump(const PartitionEconomy& e);  // deterministic bytes

}  // namespace kex

#endif  // KEX_JSON_IO_HPP
