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

#include "kex/generator.hpp"

#include <cmath>
#include <numeric>

namespace kex {

double Rng::gamma(double alpha) {
    if (alpha < 1.0) {
        // boost to shape >= 1, then scale back
        double u = uniform01();
        while (u <= 0.0) u = uniform01();
        return gamma(alpha + 1.0) * std::pow(u, 1.0 / alpha);
    }
    const double d = alpha - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x = normal01();
        double v = 1.0 + c * x;
        if (v <= 0.0) continue;
        v = v * v * v;
        double u = uniform01();
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
        if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
}

std::vector<double> Rng::dirichlet(int k, double alpha) {
    std::vector<double> w(static_cast<size_t>(k));
    double s = 0.0;
    for (double& x : w) {
        x = gamma(alpha);
        s += x;
    }
    if (s <= 0.0) return std::vector<double>(static_cast<size_t>(k), 1.0 / k);
    for (double& x : w) x /= s;
    return w;
}

void GeneratorConfig::validate() const {
    if (n_pairs < 0 || n_altruists < 0 || n_orgs < 1) throw KexError("counts must be >= 0, orgs >= 1");
    if (delta < 2) throw KexError("delta must be >= 2");
    double s = 0.0;
    for (double f : blood_freq) {
        if (f < 0.0) throw KexError("blood frequencies must be nonnegative");
        s += f;
    }
    if (std::abs(s - 1.0) > 1e-9) throw KexError("blood frequencies must sum to 1");
    if (dirichlet_alpha <= 0.0) throw KexError("dirichlet_alpha must be positive");
    if (cpra_dist != "high" && cpra_dist != "saidman")
        throw KexError("unknown cpra distribution: " + cpra_dist);
    if (altruist_mode != "pool" && altruist_mode != "synthetic")
        throw KexError("unknown altruist mode: " + altruist_mode);
}

namespace {

struct CpraDist {
    std::vector<double> values;
    std::vector<double> probs;
};

CpraDist cpra_table(const std::string& name) {
    // "saidman": classic low/medium/high sensitization
    if (name == "saidman") return {{0.05, 0.45, 0.90}, {0.7019, 0.20, 0.0981}};
    // "high": heavily sensitized pool, typical of pairs that remain unmatched
    return {{0.60, 0.90, 0.98}, {0.25, 0.50, 0.25}};
}

}  // namespace

PartitionEconomy generate_random(const GeneratorConfig& config) {
    config.validate();
    Rng rng(config.seed);

    const std::vector<double> bf(config.blood_freq.begin(), config.blood_freq.end());
    const CpraDist cd = cpra_table(config.cpra_dist);
    const std::vector<double> orgw = rng.dirichlet(config.n_orgs, config.dirichlet_alpha);

    auto draw_blood = [&]() { return static_cast<Blood>(rng.categorical(bf)); };

    std::vector<Vertex> vs;
    vs.reserve(static_cast<size_t>(config.n_pairs + config.n_altruists));
    for (int i = 0; i < config.n_pairs; ++i) {
        Vertex v;
        v.id = i;
        v.kind = VertexKind::Pair;
        // redraw until the pair is not self-compatible: such pairs transplant
        // directly and never enter the pool
        for (;;) {
            v.donor_blood = draw_blood();
            v.patient_blood = draw_blood();
            v.cpra = cd.values[static_cast<size_t>(rng.categorical(cd.probs))];
            bool self_ok = abo_compatible(*v.donor_blood, *v.patient_blood) &&
                           rng.uniform01() > *v.cpra;
            if (!self_ok) break;
        }
        v.org = 1 + rng.categorical(orgw);
        vs.push_back(v);
    }
    const bool synthetic = config.altruist_mode == "synthetic";
    for (int i = 0; i < config.n_altruists; ++i) {
        Vertex v;
        v.id = config.n_pairs + i;
        v.kind = VertexKind::Altruist;
        if (synthetic) {
            v.org = 0;
        } else {
            v.donor_blood = draw_blood();
            v.org = 1 + rng.categorical(orgw);
        }
        vs.push_back(v);
    }

    std::vector<std::pair<int, int>> arcs;
    const int n = static_cast<int>(vs.size());
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            const Vertex& a = vs[static_cast<size_t>(u)];
            const Vertex& b = vs[static_cast<size_t>(v)];
            if (b.kind == VertexKind::Altruist) {
                // dummy patient accepts any real donor
                if (a.kind != VertexKind::Altruist) arcs.emplace_back(u, v);
                continue;
            }
            if (a.kind == VertexKind::Unpaired) continue;
            bool abo = a.kind == VertexKind::Altruist && synthetic
                           ? true
                           : abo_compatible(*a.donor_blood, *b.patient_blood);
            // one crossmatch draw per ordered pair, consumed regardless of the
            // ABO outcome so arc streams stay aligned across configs
            double xm = rng.uniform01();
            if (abo && (synthetic && a.kind == VertexKind::Altruist ? true : xm > *b.cpra))
                arcs.emplace_back(u, v);
        }
    }
    return PartitionEconomy::build(std::move(vs), std::move(arcs), config.delta);
}

}  // namespace kex
