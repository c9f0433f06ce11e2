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

#include "kex/json_io.hpp"

#include <fstream>

namespace kex {

using nlohmann::json;

json economy_to_json(const PartitionEconomy& e) {
    json j;
    j["delta"] = e.delta();
    json vs = json::array();
    for (const Vertex& v : e.vertices()) {
        json jv;
        jv["id"] = v.id;
        jv["org"] = v.org;
        jv["kind"] = kind_name(v.kind);
        if (v.donor_blood) jv["donor_blood"] = blood_name(*v.donor_blood);
        if (v.patient_blood) jv["patient_blood"] = blood_name(*v.patient_blood);
        if (v.cpra) jv["cpra"] = *v.cpra;
        vs.push_back(std::move(jv));
    }
    j["vertices"] = std::move(vs);
    json as = json::array();
    for (const auto& [u, v] : e.arcs()) as.push_back(json::array({u, v}));
    j["arcs"] = std::move(as);
    return j;
}

namespace {

const json& require(const json& j, const std::string& key, const std::string& pointer) {
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError(pointer + "/" + key);
    return *it;
}

}  // namespace

PartitionEconomy economy_from_json(const json& j) {
    if (!j.is_object()) throw SchemaError("", "instance must be a JSON object");
    const json& jd = require(j, "delta", "");
    if (!jd.is_number_integer()) throw SchemaError("/delta");
    const json& jv = require(j, "vertices", "");
    if (!jv.is_array()) throw SchemaError("/vertices");
    const json& ja = require(j, "arcs", "");
    if (!ja.is_array()) throw SchemaError("/arcs");

    std::vector<Vertex> vs;
    for (size_t i = 0; i < jv.size(); ++i) {
        const json& o = jv[i];
        const std::string p = "/vertices/" + std::to_string(i);
        if (!o.is_object()) throw SchemaError(p);
        Vertex v;
        const json& jid = require(o, "id", p);
        if (!jid.is_number_integer()) throw SchemaError(p + "/id");
        v.id = jid.get<int>();
        const json& jorg = require(o, "org", p);
        if (!jorg.is_number_integer()) throw SchemaError(p + "/org");
        v.org = jorg.get<int>();
        const json& jk = require(o, "kind", p);
        if (!jk.is_string()) throw SchemaError(p + "/kind");
        try {
            v.kind = kind_from_name(jk.get<std::string>());
        } catch (const KexError&) {
            throw SchemaError(p + "/kind");
        }
        if (o.contains("donor_blood")) {
            if (!o["donor_blood"].is_string()) throw SchemaError(p + "/donor_blood");
            v.donor_blood = blood_from_name(o["donor_blood"].get<std::string>());
        }
        if (o.contains("patient_blood")) {
            if (!o["patient_blood"].is_string()) throw SchemaError(p + "/patient_blood");
            v.patient_blood = blood_from_name(o["patient_blood"].get<std::string>());
        }
        if (o.contains("cpra")) {
            if (!o["cpra"].is_number()) throw SchemaError(p + "/cpra");
            v.cpra = o["cpra"].get<double>();
        }
        vs.push_back(std::move(v));
    }
    std::vector<std::pair<int, int>> arcs;
    for (size_t i = 0; i < ja.size(); ++i) {
        const json& a = ja[i];
        const std::string p = "/arcs/" + std::to_string(i);
        if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() ||
            !a[1].is_number_integer())
            throw SchemaError(p);
        arcs.emplace_back(a[0].get<int>(), a[1].get<int>());
    }
    return PartitionEconomy::build(std::move(vs), std::move(arcs), jd.get<int>());
}

std::string economy_dump(const PartitionEconomy& e) { return economy_to_json(e).dump(2) + "\n"; }

void save_json(const PartitionEconomy& e, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open for write: " + path);
    f << economy_dump(e);
    if (!f) throw IoError("write failed: " + path);
}

PartitionEconomy load_json(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open for read: " + path);
    json j;
    try {
        f >> j;
    } catch (const json::parse_error& err) {
        throw IoError("invalid JSON in " + path + ": " + err.what());
    }
    return economy_from_json(j);
}

}  // namespace kex
