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

#ifndef KEX_ECONOMY_HPP
#define KEX_ECONOMY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kex/errors.hpp"

namespace kex {

enum class Blood : std::uint8_t { O, A, B, AB };

// donor -> patient ABO compatibility (O universal donor, AB universal recipient)
bool abo_compatible(Blood donor, Blood patient);

std::string blood_name(Blood b);
Blood blood_from_name(const std::string& s);

enum class VertexKind : std::uint8_t { Pair, Unpaired, Altruist };

std::string kind_name(VertexKind k);
VertexKind kind_from_name(const std::string& s);

struct Vertex {
    int id = 0;
    int org = 0;  // 0 is reserved for the platform endowment
    VertexKind kind = VertexKind::Pair;
    std::optional<Blood> donor_blood;    // absent for unpaired patients
    std::optional<Blood> patient_blood;  // absent for altruists
    std::optional<double> cpra;          // patients only

    bool operator==(const Vertex&) const = default;
};

// Directed compatibility graph with an organization partition and a cycle
// length cap. Immutable after construction; cheap to copy and safe to share
// across threads.
class PartitionEconomy {
public:
    PartitionEconomy() = default;

    // Validates all structural invariants. Vertices must carry unique dense
    // ids 0..N-1; arcs out of an unpaired patient may only target altruists.
    static PartitionEconomy build(std::vector<Vertex> vertices,
                                  std::vector<std::pair<int, int>> arcs,
                                  int delta);

    int delta() const { return delta_; }
    int n_orgs() const { return n_orgs_; }
    int num_vertices() const { return static_cast<int>(verts_.size()); }

    const std::vector<Vertex>& vertices() const { return verts_; }
    const Vertex& vertex(int id) const { return verts_[static_cast<size_t>(id)]; }
    const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }

    bool has_arc(int u, int v) const;
    const std::vector<int>& out_neighbors(int v) const { return out_[static_cast<size_t>(v)]; }
    const std::vector<int>& in_neighbors(int v) const { return in_[static_cast<size_t>(v)]; }
    int in_degree(int v) const { return static_cast<int>(in_[static_cast<size_t>(v)].size()); }

    bool is_u_vertex(int id) const { return verts_[static_cast<size_t>(id)].kind != VertexKind::Altruist; }
    bool is_altruist(int id) const { return verts_[static_cast<size_t>(id)].kind == VertexKind::Altruist; }
    int org_of(int id) const { return verts_[static_cast<size_t>(id)].org; }

    std::vector<int> org_members(int org) const;
    std::vector<int> altruist_ids() const;
    // |U^i| indexed by org 0..n_orgs
    std::vector<int> u_sizes() const;

    bool operator==(const PartitionEconomy& o) const {
        return delta_ == o.delta_ && verts_ == o.verts_ && arcs_ == o.arcs_;
    }

    // Sub-economy induced by a set of organizations (Def 2.2 coalition graph).
    // Ids are remapped densely in increasing original order; the platform
    // org 0 is excluded unless explicitly requested.
    PartitionEconomy induced_subeconomy(const std::vector<int>& orgs,
                                        bool include_platform = false) const;

    // Restriction to an arbitrary vertex subset. new_to_old maps remapped ids
    // back to ids of *this.
    PartitionEconomy restrict_to(const std::vector<int>& keep_ids,
                                 std::vector<int>* new_to_old = nullptr) const;

    // Extended graph with one extra altruist. If designated_patient >= 0 the
    // new donor is compatible with that patient only; otherwise it is
    // universally compatible. Returns the new vertex id via *new_id.
    PartitionEconomy with_altruist(int org, int designated_patient, int* new_id = nullptr) const;

private:
    std::vector<Vertex> verts_;
    std::vector<std::pair<int, int>> arcs_;  // sorted lexicographically
    std::vector<std::vector<int>> out_, in_;
    int delta_ = 2;
    int n_orgs_ = 0;

    void index_arcs();
};

// §5 reduction: goods become altruistic donors endowed by their owner, the
// positions J^i become pair vertices, and Delta = 2.
// goods_owner[g] in 1..n gives the agent endowing good g; alpha[i] is the
// |M| x |J^i| binary matrix of agent i's assignment valuation.
PartitionEconomy reduce_one_sided(const std::vector<int>& goods_owner,
                                  const std::vector<int>& positions_per_agent,
                                  const std::vector<std::vector<std::vector<int>>>& alpha);

}  // namespace kex

#endif  // KEX_ECONOMY_HPP
