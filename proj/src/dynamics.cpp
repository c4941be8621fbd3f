#include "regionpath/dynamics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace regionpath {

std::uint64_t DynamicSystem::arc_index(NodeId u, NodeId v) const {
    const auto it = index_table.find(arc_key(u, v));
    if (it == index_table.end()) {
        throw std::out_of_range("no index for arc " + std::to_string(u) + "->" +
                                std::to_string(v));
    }
    return it->second;
}

namespace {

std::uint64_t integral_index(Weight v) {
    if (!(v > 0) || std::floor(v) != v) {
        throw std::invalid_argument("index assignment values must be positive integers");
    }
    return static_cast<std::uint64_t>(v);
}

std::vector<std::vector<std::uint32_t>> seeded_perms(NodeId n, std::size_t slots,
                                                     SplitMix64& rng) {
    std::vector<std::vector<std::uint32_t>> perms(n);
    for (NodeId v = 0; v < n; ++v) {
        auto& perm = perms[v];
        perm.resize(slots);
        for (std::size_t i = 0; i < slots; ++i) perm[i] = static_cast<std::uint32_t>(i);
        rng.shuffle(perm);
    }
    return perms;
}

}  // namespace

DynamicSystem make_dynamic_system(const Graph& g, const AssignmentArray& d,
                                  const AssignmentArray& w, std::uint64_t seed) {
    if (d.values.empty() || w.values.empty()) {
        throw std::invalid_argument("assignment arrays must be non-empty");
    }
    DynamicSystem sys;
    sys.weight_values = w.values;
    SplitMix64 rng(seed);
    detail::for_each_draw_arc(g, [&](NodeId u, NodeId v, bool mirror) {
        const std::uint64_t index = integral_index(d.values[rng.below(d.values.size())]);
        sys.index_table[arc_key(u, v)] = index;
        if (mirror) sys.index_table[arc_key(v, u)] = index;
    });
    sys.node_perm = seeded_perms(g.node_count(), sys.weight_values.size(), rng);
    return sys;
}

DynamicSystem make_dynamic_system_from_table(
    const Graph& g, std::unordered_map<std::uint64_t, std::uint64_t> index_table,
    std::vector<Weight> weight_values, std::uint64_t seed) {
    if (weight_values.empty()) {
        throw std::invalid_argument("weight array must be non-empty");
    }
    for (const auto& [key, index] : index_table) {
        if (index == 0) throw std::invalid_argument("arc indices must be positive");
        (void)key;
    }
    DynamicSystem sys;
    sys.index_table = std::move(index_table);
    sys.weight_values = std::move(weight_values);
    SplitMix64 rng(seed);
    sys.node_perm = seeded_perms(g.node_count(), sys.weight_values.size(), rng);
    return sys;
}

Weight dyn_weight(const DynamicSystem& sys, NodeId t, std::uint64_t accumulated_index) {
    const std::size_t slots = sys.weight_values.size();
    const std::uint32_t slot = sys.node_perm[t][accumulated_index % slots];
    return sys.weight_values[slot];
}

DynamicLabeling hybrid_explore_dynamic(const Graph& g, const DynamicSystem& sys,
                                       const Partition& p) {
    if (p.region_index.size() != g.node_count() || p.source >= g.node_count()) {
        throw std::invalid_argument("partition does not match graph");
    }
    const NodeId n = g.node_count();
    DynamicLabeling dl;
    Labeling& l = dl.labeling;
    l.mode = ExploreMode::Min;
    l.source = p.source;
    l.sigma.assign(n, 0.0);
    l.pred.assign(n, Labeling::kNoPred);
    l.reached.assign(n, 0);
    dl.idx.assign(n, 0);
    l.reached[p.source] = 1;
    l.sigma[p.source] = sys.source_weight;
    dl.idx[p.source] = sys.source_index;

    for (std::size_t i = 1; i < p.regions.size(); ++i) {
        const std::uint32_t fore = static_cast<std::uint32_t>(i);
        for (NodeId u : p.regions[i]) {
            bool found = false;
            Weight best = 0.0;
            std::uint64_t best_idx = 0;
            NodeId winner = Labeling::kNoPred;
            for (NodeId x : g.in_neighbors(u)) {
                if (p.region_index[x] != fore) continue;
                const std::uint64_t cand_idx = dl.idx[x] + sys.arc_index(x, u);
                const Weight cand = l.sigma[x] + dyn_weight(sys, u, cand_idx);
                if (!found || cand < best) {
                    found = true;
                    best = cand;
                    best_idx = cand_idx;
                    winner = x;
                }
            }
            if (!found) {
                throw std::logic_error("node " + std::to_string(u) +
                                       " has no fore-region in-neighbor");
            }
            l.sigma[u] = best;
            l.pred[u] = winner;
            l.reached[u] = 1;
            dl.idx[u] = best_idx;
        }
    }
    return dl;
}

Weight path_total_dynamic(const Path& path, const DynamicSystem& sys) {
    if (path.nodes.empty()) throw std::invalid_argument("empty path");
    std::uint64_t index = sys.source_index;
    Weight total = sys.source_weight;
    for (std::size_t i = 1; i < path.nodes.size(); ++i) {
        const NodeId x = path.nodes[i - 1];
        const NodeId v = path.nodes[i];
        index += sys.arc_index(x, v);
        total += dyn_weight(sys, v, index);
    }
    return total;
}

RankedTotals rank_of(Weight value, const PathSet& set, const DynamicSystem& sys) {
    std::vector<Weight> totals;
    totals.reserve(set.paths.size());
    for (const Path& path : set.paths) totals.push_back(path_total_dynamic(path, sys));
    return rank_in_totals(value, std::move(totals));
}

}  // namespace regionpath
