#include "regionpath/explore.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace regionpath {

namespace {

void check_partition(const Graph& g, const Partition& p) {
    if (p.region_index.size() != g.node_count() || p.source >= g.node_count()) {
        throw std::invalid_argument("partition does not match graph");
    }
}

}  // namespace

Labeling hybrid_explore(const Graph& g, const WeightTable& w, const Partition& p,
                        ExploreMode mode) {
    check_partition(g, p);
    const NodeId n = g.node_count();
    Labeling l;
    l.mode = mode;
    l.source = p.source;
    l.sigma.assign(n, 0.0);
    l.pred.assign(n, Labeling::kNoPred);
    l.reached.assign(n, 0);
    l.reached[p.source] = 1;

    for (std::size_t i = 1; i < p.regions.size(); ++i) {
        const std::uint32_t fore = static_cast<std::uint32_t>(i);  // 1-based subscript i
        for (NodeId u : p.regions[i]) {
            bool found = false;
            Weight best = 0.0;
            NodeId winner = Labeling::kNoPred;
            for (NodeId x : g.in_neighbors(u)) {
                if (p.region_index[x] != fore) continue;
                const Weight cand = l.sigma[x] + w.at(x, u);
                const bool better = mode == ExploreMode::Min ? cand < best : cand > best;
                if (!found || better) {
                    found = true;
                    best = cand;
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
        }
    }
    return l;
}

Path trace_path(const Labeling& l, const Partition& p, NodeId target) {
    if (target >= l.reached.size() || !l.is_reached(target) || !region_of(p, target)) {
        throw std::invalid_argument("target unreachable: node " + std::to_string(target));
    }
    Path path;
    NodeId v = target;
    std::size_t guard = l.reached.size() + 1;
    while (v != l.source) {
        path.nodes.push_back(v);
        v = l.pred[v];
        if (v == Labeling::kNoPred || guard-- == 0) {
            throw std::logic_error("broken predecessor chain at node " + std::to_string(target));
        }
    }
    path.nodes.push_back(l.source);
    std::reverse(path.nodes.begin(), path.nodes.end());
    return path;
}

Weight total_weight(const Path& path, const WeightTable& w) {
    Weight total = 0.0;
    for (std::size_t i = 1; i < path.nodes.size(); ++i) {
        total += w.at(path.nodes[i - 1], path.nodes[i]);
    }
    return total;
}

EvolveResult evolve(const Graph& g, const WeightTable& w, const Labeling& init) {
    if (init.mode != ExploreMode::Min) {
        throw std::invalid_argument("evolve rejects max mode: unbounded totals never reach a fixpoint");
    }
    if (init.reached.size() != g.node_count()) {
        throw std::invalid_argument("labeling does not match graph");
    }
    EvolveResult result;
    result.labeling = init;
    Labeling& l = result.labeling;

    bool changed = true;
    while (changed) {
        changed = false;
        ++result.sweeps;
        for (NodeId u = 0; u < g.node_count(); ++u) {
            if (u == l.source || !l.is_reached(u)) continue;
            for (NodeId x : g.in_neighbors(u)) {
                if (!l.is_reached(x)) continue;
                const Weight cand = l.sigma[x] + w.at(x, u);
                if (cand < l.sigma[u]) {
                    l.sigma[u] = cand;
                    l.pred[u] = x;
                    changed = true;
                }
            }
        }
    }
    return result;
}

}  // namespace regionpath
