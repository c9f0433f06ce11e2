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

#include "kex/economy.hpp"

#include <algorithm>
#include <set>

namespace kex {

bool abo_compatible(Blood donor, Blood patient) {
    switch (donor) {
        case Blood::O: return true;
        case Blood::A: return patient == Blood::A || patient == Blood::AB;
        case Blood::B: return patient == Blood::B || patient == Blood::AB;
        case Blood::AB: return patient == Blood::AB;
    }
    return false;
}

std::string blood_name(Blood b) {
    switch (b) {
        case Blood::O: return "O";
        case Blood::A: return "A";
        case Blood::B: return "B";
        case Blood::AB: return "AB";
    }
    return "?";
}

Blood blood_from_name(const std::string& s) {
    if (s == "O") return Blood::O;
    if (s == "A") return Blood::A;
    if (s == "B") return Blood::B;
    if (s == "AB") return Blood::AB;
    throw KexError("unknown blood type: " + s);
}

std::string kind_name(VertexKind k) {
    switch (k) {
        case VertexKind::Pair: return "pair";
        case VertexKind::Unpaired: return "unpaired";
        case VertexKind::Altruist: return "altruist";
    }
    return "?";
}

VertexKind kind_from_name(const std::string& s) {
    if (s == "pair") return VertexKind::Pair;
    if (s == "unpaired") return VertexKind::Unpaired;
    if (s == "altruist") return VertexKind::Altruist;
    throw KexError("unknown vertex kind: " + s);
}

PartitionEconomy PartitionEconomy::build(std::vector<Vertex> vertices,
                                         std::vector<std::pair<int, int>> arcs,
                                         int delta) {
    if (delta < 2) throw KexError("delta must be >= 2, got " + std::to_string(delta));
    std::sort(vertices.begin(), vertices.end(),
              [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
    const int n = static_cast<int>(vertices.size());
    for (int i = 0; i + 1 < n; ++i) {
        if (vertices[static_cast<size_t>(i)].id == vertices[static_cast<size_t>(i + 1)].id)
            throw DuplicateIdError("duplicate vertex id " +
                                   std::to_string(vertices[static_cast<size_t>(i)].id));
    }
    for (int i = 0; i < n; ++i) {
        if (vertices[static_cast<size_t>(i)].id != i)
            throw NonDenseIdError("vertex ids must be dense 0..N-1; missing id " +
                                  std::to_string(i));
    }
    for (const Vertex& v : vertices) {
        if (v.org < 0) throw UnknownOrgError("negative org on vertex " + std::to_string(v.id));
        if (v.kind == VertexKind::Altruist && (v.patient_blood || v.cpra))
            throw KexError("altruist " + std::to_string(v.id) + " carries patient fields");
        if (v.kind == VertexKind::Unpaired && v.donor_blood)
            throw KexError("unpaired patient " + std::to_string(v.id) + " carries donor_blood");
    }

    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    for (const auto& [u, v] : arcs) {
        if (u == v) throw SelfLoopError("self-arc on vertex " + std::to_string(u));
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw DanglingArcError("arc (" + std::to_string(u) + "," + std::to_string(v) +
                                   ") references a missing vertex");
        const Vertex& src = vertices[static_cast<size_t>(u)];
        const Vertex& dst = vertices[static_cast<size_t>(v)];
        // dummy-donor convention: an unpaired patient's implicit donor is
        // compatible only with altruists' dummy patients
        if (src.kind == VertexKind::Unpaired && dst.kind != VertexKind::Altruist)
            throw BadKindArcError("arc out of unpaired patient " + std::to_string(u) +
                                  " must target an altruist");
        if (dst.kind == VertexKind::Unpaired && src.kind == VertexKind::Unpaired)
            throw BadKindArcError("arc between unpaired patients " + std::to_string(u) + "," +
                                  std::to_string(v));
    }

    PartitionEconomy e;
    e.verts_ = std::move(vertices);
    e.arcs_ = std::move(arcs);
    e.delta_ = delta;
    e.n_orgs_ = 0;
    for (const Vertex& v : e.verts_) e.n_orgs_ = std::max(e.n_orgs_, v.org);
    e.index_arcs();
    return e;
}

void PartitionEconomy::index_arcs() {
    out_.assign(verts_.size(), {});
    in_.assign(verts_.size(), {});
    for (const auto& [u, v] : arcs_) {
        out_[static_cast<size_t>(u)].push_back(v);
        in_[static_cast<size_t>(v)].push_back(u);
    }
}

bool PartitionEconomy::has_arc(int u, int v) const {
    const auto& o = out_[static_cast<size_t>(u)];
    return std::binary_search(o.begin(), o.end(), v);
}

std::vector<int> PartitionEconomy::org_members(int org) const {
    std::vector<int> r;
    for (const Vertex& v : verts_)
        if (v.org == org) r.push_back(v.id);
    return r;
}

std::vector<int> PartitionEconomy::altruist_ids() const {
    std::vector<int> r;
    for (const Vertex& v : verts_)
        if (v.kind == VertexKind::Altruist) r.push_back(v.id);
    return r;
}

std::vector<int> PartitionEconomy::u_sizes() const {
    std::vector<int> r(static_cast<size_t>(n_orgs_) + 1, 0);
    for (const Vertex& v : verts_)
        if (v.kind != VertexKind::Altruist) ++r[static_cast<size_t>(v.org)];
    return r;
}

PartitionEconomy PartitionEconomy::induced_subeconomy(const std::vector<int>& orgs,
                                                      bool include_platform) const {
    std::set<int> want(orgs.begin(), orgs.end());
    for (int o : want) {
        if (o < 0 || o > n_orgs_) throw UnknownOrgError("unknown org " + std::to_string(o));
        if (o == 0 && !include_platform)
            throw UnknownOrgError("platform org 0 requires include_platform");
    }
    std::vector<int> keep;
    for (const Vertex& v : verts_)
        if (want.count(v.org)) keep.push_back(v.id);
    return restrict_to(keep, nullptr);
}

PartitionEconomy PartitionEconomy::restrict_to(const std::vector<int>& keep_ids,
                                               std::vector<int>* new_to_old) const {
    std::vector<int> keep = keep_ids;
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    std::vector<int> old_to_new(verts_.size(), -1);
    std::vector<Vertex> vs;
    vs.reserve(keep.size());
    for (size_t i = 0; i < keep.size(); ++i) {
        Vertex v = verts_[static_cast<size_t>(keep[i])];
        old_to_new[static_cast<size_t>(keep[i])] = static_cast<int>(i);
        v.id = static_cast<int>(i);
        vs.push_back(std::move(v));
    }
    std::vector<std::pair<int, int>> as;
    for (const auto& [u, v] : arcs_) {
        int nu = old_to_new[static_cast<size_t>(u)], nv = old_to_new[static_cast<size_t>(v)];
        if (nu >= 0 && nv >= 0) as.emplace_back(nu, nv);
    }
    PartitionEconomy e;
    e.verts_ = std::move(vs);
    e.arcs_ = std::move(as);
    std::sort(e.arcs_.begin(), e.arcs_.end());
    e.delta_ = delta_;
    e.n_orgs_ = n_orgs_;
    e.index_arcs();
    if (new_to_old) *new_to_old = keep;
    return e;
}

PartitionEconomy PartitionEconomy::with_altruist(int org, int designated_patient,
                                                 int* new_id) const {
    PartitionEconomy e = *this;
    Vertex a;
    a.id = static_cast<int>(e.verts_.size());
    a.org = org;
    a.kind = VertexKind::Altruist;
    e.verts_.push_back(a);
    for (const Vertex& v : verts_) {
        if (v.kind == VertexKind::Altruist) continue;
        // the new donor's dummy patient accepts any real or dummy donor
        e.arcs_.emplace_back(v.id, a.id);
        if (designated_patient < 0 || v.id == designated_patient)
            e.arcs_.emplace_back(a.id, v.id);
    }
    std::sort(e.arcs_.begin(), e.arcs_.end());
    e.arcs_.erase(std::unique(e.arcs_.begin(), e.arcs_.end()), e.arcs_.end());
    e.n_orgs_ = std::max(e.n_orgs_, org);
    e.index_arcs();
    if (new_id) *new_id = a.id;
    return e;
}

PartitionEconomy reduce_one_sided(const std::vector<int>& goods_owner,
                                  const std::vector<int>& positions_per_agent,
                                  const std::vector<std::vector<std::vector<int>>>& alpha) {
    const int n_agents = static_cast<int>(positions_per_agent.size());
    const int n_goods = static_cast<int>(goods_owner.size());
    if (static_cast<int>(alpha.size()) != n_agents)
        throw ShapeMismatchError("alpha must have one matrix per agent");
    for (int i = 0; i < n_agents; ++i) {
        const auto& m = alpha[static_cast<size_t>(i)];
        if (static_cast<int>(m.size()) != n_goods)
            throw ShapeMismatchError("alpha[" + std::to_string(i) + "] must have |M| rows");
        for (const auto& row : m)
            if (static_cast<int>(row.size()) != positions_per_agent[static_cast<size_t>(i)])
                throw ShapeMismatchError("alpha[" + std::to_string(i) + "] row width != |J^i|");
    }
    for (int g = 0; g < n_goods; ++g) {
        int o = goods_owner[static_cast<size_t>(g)];
        if (o < 1 || o > n_agents) throw UnknownOrgError("good owner out of range");
    }

    std::vector<Vertex> vs;
    // goods first: altruistic donors endowed by their owner
    for (int g = 0; g < n_goods; ++g) {
        Vertex v;
        v.id = g;
        v.org = goods_owner[static_cast<size_t>(g)];
        v.kind = VertexKind::Altruist;
        vs.push_back(v);
    }
    // positions: pair vertices of their agent
    std::vector<int> pos_base(static_cast<size_t>(n_agents), 0);
    int next = n_goods;
    for (int i = 0; i < n_agents; ++i) {
        pos_base[static_cast<size_t>(i)] = next;
        for (int j = 0; j < positions_per_agent[static_cast<size_t>(i)]; ++j) {
            Vertex v;
            v.id = next++;
            v.org = i + 1;
            v.kind = VertexKind::Pair;
            vs.push_back(v);
        }
    }
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < n_agents; ++i)
        for (int g = 0; g < n_goods; ++g)
            for (int j = 0; j < positions_per_agent[static_cast<size_t>(i)]; ++j)
                if (alpha[static_cast<size_t>(i)][static_cast<size_t>(g)][static_cast<size_t>(j)]) {
                    int p = pos_base[static_cast<size_t>(i)] + j;
                    arcs.emplace_back(g, p);
                    arcs.emplace_back(p, g);
                }
    return PartitionEconomy::build(std::move(vs), std::move(arcs), 2);
}

}  // namespace kex
