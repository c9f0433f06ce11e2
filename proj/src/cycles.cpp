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

#include "kex/cycles.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

namespace kex {

namespace {

bool same_blood_arc(const PartitionEconomy& e, int u, int v) {
    const Vertex& a = e.vertex(u);
    const Vertex& b = e.vertex(v);
    // altruist-incident arcs count iff the altruist's donor blood matches the
    // recipient's patient blood; dummy endpoints never match
    if (!a.donor_blood || !b.patient_blood) return false;
    return *a.donor_blood == *b.patient_blood;
}

Cycle make_cycle(const PartitionEconomy& e, const std::vector<int>& verts) {
    Cycle c;
    c.verts = verts;
    c.length = static_cast<int>(verts.size());
    c.gamma.assign(static_cast<size_t>(e.n_orgs()) + 1, 0);
    c.hardness = Rat(0);
    for (size_t i = 0; i < verts.size(); ++i) {
        int v = verts[i];
        if (e.is_altruist(v)) {
            ++c.altruist_count;
        } else {
            ++c.gamma[static_cast<size_t>(e.org_of(v))];
        }
        Rat h(1, e.in_degree(v));
        if (h > c.hardness) c.hardness = h;
        int w = verts[(i + 1) % verts.size()];
        if (same_blood_arc(e, v, w)) ++c.same_blood_edges;
    }
    return c;
}

}  // namespace

CycleSet enumerate_cycles(const PartitionEconomy& e, int delta) {
    if (delta < 2) throw KexError("delta must be >= 2");
    CycleSet cs;
    const int n = e.num_vertices();
    cs.vertex_index.assign(static_cast<size_t>(n), {});
    std::vector<char> on_path(static_cast<size_t>(n), 0);
    std::vector<int> path;

    // start vertex is the minimal id on the cycle: only visit larger ids
    auto dfs = [&](auto&& self, int start, int v) -> void {
        on_path[static_cast<size_t>(v)] = 1;
        path.push_back(v);
        for (int w : e.out_neighbors(v)) {
            if (w == start) {
                if (path.size() >= 2) cs.cycles.push_back(make_cycle(e, path));
                continue;
            }
            if (w < start || on_path[static_cast<size_t>(w)]) continue;
            if (static_cast<int>(path.size()) >= delta) continue;  // no room to close
            self(self, start, w);
        }
        path.pop_back();
        on_path[static_cast<size_t>(v)] = 0;
    };
    for (int s = 0; s < n; ++s) dfs(dfs, s, s);

    std::sort(cs.cycles.begin(), cs.cycles.end(),
              [](const Cycle& a, const Cycle& b) { return a.verts < b.verts; });
    for (size_t i = 0; i < cs.cycles.size(); ++i)
        for (int v : cs.cycles[i].verts)
            cs.vertex_index[static_cast<size_t>(v)].push_back(static_cast<int>(i));
    return cs;
}

std::vector<int> Exchange::covered() const {
    std::vector<int> r;
    for (const auto& c : cycles) r.insert(r.end(), c.begin(), c.end());
    std::sort(r.begin(), r.end());
    return r;
}

std::vector<int> utilities(const Exchange& ex, const PartitionEconomy& e) {
    std::vector<int> u(static_cast<size_t>(e.n_orgs()) + 1, 0);
    std::set<int> seen;
    for (const auto& c : ex.cycles) {
        if (c.size() < 2) throw KexError("cycle shorter than 2");
        for (size_t i = 0; i < c.size(); ++i) {
            int v = c[i];
            if (!seen.insert(v).second)
                throw OverlappingCyclesError("vertex " + std::to_string(v) +
                                             " covered twice");
            int w = c[(i + 1) % c.size()];
            if (!e.has_arc(v, w))
                throw KexError("missing arc (" + std::to_string(v) + "," +
                               std::to_string(w) + ") in exchange");
            if (!e.is_altruist(v)) ++u[static_cast<size_t>(e.org_of(v))];
        }
    }
    return u;
}

bool MutualGraph::has_edge(int u, int v) const {
    const auto& a = adj[static_cast<size_t>(u)];
    return std::binary_search(a.begin(), a.end(), v);
}

bool MutualGraph::is_bipartite() const {
    std::vector<int> color(static_cast<size_t>(n), -1);
    for (int s = 0; s < n; ++s) {
        if (color[static_cast<size_t>(s)] != -1) continue;
        color[static_cast<size_t>(s)] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : adj[static_cast<size_t>(v)]) {
                if (color[static_cast<size_t>(w)] == -1) {
                    color[static_cast<size_t>(w)] = 1 - color[static_cast<size_t>(v)];
                    q.push(w);
                } else if (color[static_cast<size_t>(w)] == color[static_cast<size_t>(v)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

MutualGraph mutual_graph(const PartitionEconomy& e) {
    MutualGraph g;
    g.n = e.num_vertices();
    g.adj.assign(static_cast<size_t>(g.n), {});
    for (const auto& [u, v] : e.arcs()) {
        if (u < v && e.has_arc(v, u)) {
            g.edges.emplace_back(u, v);
            g.adj[static_cast<size_t>(u)].push_back(v);
            g.adj[static_cast<size_t>(v)].push_back(u);
        }
    }
    for (auto& a : g.adj) std::sort(a.begin(), a.end());
    return g;
}

std::string cycles_csv(const CycleSet& cs, int n_orgs) {
    std::ostringstream out;
    out << "cycle_id,verts,length,altruists,same_blood,hardness";
    for (int i = 1; i <= n_orgs; ++i) out << ",gamma_org_" << i;
    out << "\n";
    for (size_t i = 0; i < cs.cycles.size(); ++i) {
        const Cycle& c = cs.cycles[i];
        out << i << ",";
        for (size_t k = 0; k < c.verts.size(); ++k)
            out << (k ? " " : "") << c.verts[k];
        out << "," << c.length << "," << c.altruist_count << "," << c.same_blood_edges << ","
            << rat_str(c.hardness);
        for (int o = 1; o <= n_orgs; ++o) out << "," << c.gamma[static_cast<size_t>(o)];
        out << "\n";
    }
    return out.str();
}

}  // namespace kex
