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

#ifndef KEX_CYCLES_HPP
#define KEX_CYCLES_HPP

#include <string>
#include <vector>

#include "kex/economy.hpp"
#include "kex/rational.hpp"

namespace kex {

// Simple directed cycle, canonical rotation (minimal id first), plus the
// per-cycle statistics every downstream objective and constraint consumes.
struct Cycle {
    std::vector<int> verts;       // canonical rotation
    int length = 0;               // |verts|
    std::vector<int> gamma;       // org -> |U^i \cap c|, indexed 0..n_orgs
    int altruist_count = 0;       // a_c
    int same_blood_edges = 0;
    Rat hardness;                 // max over v in c of 1/indegree(v)

    bool operator==(const Cycle& o) const { return verts == o.verts; }
};

struct CycleSet {
    std::vector<Cycle> cycles;
    // vertex id -> indices of cycles containing it
    std::vector<std::vector<int>> vertex_index;
};

// All simple directed cycles of length <= delta, once per rotation class.
// Bounded-depth DFS with minimal-id start pruning.
CycleSet enumerate_cycles(const PartitionEconomy& e, int delta);

// A (claimed) exchange: vertex-disjoint directed cycles given as tuples.
struct Exchange {
    std::vector<std::vector<int>> cycles;
    bool empty() const { return cycles.empty(); }
    std::vector<int> covered() const;  // sorted vertex ids
};

// u_i = |V_E \cap U^i| per org 1..n_orgs (index 0 = platform, always 0 by
// convention since platform vertices are altruists).
// Throws OverlappingCyclesError if the cycles share a vertex, and KexError
// if any claimed arc is absent from e.
std::vector<int> utilities(const Exchange& ex, const PartitionEconomy& e);

// Undirected graph of mutual compatibilities.
struct MutualGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;       // u < v, sorted
    std::vector<std::vector<int>> adj;
    bool has_edge(int u, int v) const;
    bool is_bipartite() const;
};

MutualGraph mutual_graph(const PartitionEconomy& e);

// Optional CSV dump of the cycle database:
//   cycle_id,verts,length,altruists,same_blood,hardness,gamma_org_1,...
std::string cycles_csv(const CycleSet& cs, int n_orgs);

}  // namespace kex

#endif  // KEX_CYCLES_HPP
