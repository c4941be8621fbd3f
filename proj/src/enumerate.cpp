#include "regionpath/enumerate.hpp"

#include <algorithm>
#include <string>

#include "regionpath/partition.hpp"

namespace regionpath {

namespace {

constexpr NodeId kNone = std::numeric_limits<NodeId>::max();

void check_endpoint(const Graph& g, NodeId v, const char* what) {
    if (v >= g.node_count()) {
        throw std::invalid_argument(std::string(what) + " out of range: " + std::to_string(v));
    }
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    return (a > kCountSaturated - b) ? kCountSaturated : a + b;
}

}  // namespace

PathSet enumerate_simple_paths(const Graph& g, NodeId s, NodeId t, std::size_t cap) {
    check_endpoint(g, s, "source");
    check_endpoint(g, t, "target");
    PathSet set;
    set.kind = PathKind::Simple;

    std::vector<std::uint8_t> on_path(g.node_count(), 0);
    std::vector<NodeId> path{s};
    // Explicit stack of (node, next out-neighbor offset) so deep instances
    // cannot exhaust the call stack.
    std::vector<std::pair<NodeId, std::size_t>> stack;
    on_path[s] = 1;
    stack.emplace_back(s, 0);

    while (!stack.empty()) {
        const NodeId u = stack.back().first;
        if (u == t) {
            // A simple path never continues through the target.
            if (set.paths.size() >= cap) {
                throw CapExceeded("simple path count exceeds cap " + std::to_string(cap));
            }
            set.paths.push_back(Path{path});
            on_path[u] = 0;
            path.pop_back();
            stack.pop_back();
            continue;
        }
        const auto out = g.out_neighbors(u);
        std::size_t offset = stack.back().second;
        NodeId next = kNone;
        while (offset < out.size()) {
            const NodeId v = out[offset++];
            if (!on_path[v]) {
                next = v;
                break;
            }
        }
        stack.back().second = offset;
        if (next != kNone) {
            path.push_back(next);
            on_path[next] = 1;
            stack.emplace_back(next, 0);
        } else {
            on_path[u] = 0;
            path.pop_back();
            stack.pop_back();
        }
    }
    return set;
}

PathSet enumerate_min_hop_paths(const Graph& g, NodeId s, NodeId t) {
    check_endpoint(g, s, "source");
    check_endpoint(g, t, "target");
    const Partition p = partition_fast(g, s);
    if (!region_of(p, t)) {
        throw std::invalid_argument("target unreachable: node " + std::to_string(t));
    }
    PathSet set;
    set.kind = PathKind::MinHop;

    // Backward DFS from t, predecessors restricted to the fore region; every
    // branch bottoms out at the source because each region is fed by the
    // previous one.
    std::vector<NodeId> chain{t};
    std::vector<std::pair<NodeId, std::size_t>> stack;
    stack.emplace_back(t, 0);
    while (!stack.empty()) {
        const NodeId u = stack.back().first;
        if (u == s) {
            Path path;
            path.nodes.assign(chain.rbegin(), chain.rend());
            set.paths.push_back(std::move(path));
            chain.pop_back();
            stack.pop_back();
            continue;
        }
        const std::uint32_t fore = p.region_index[u] - 1;
        const auto in = g.in_neighbors(u);
        std::size_t offset = stack.back().second;
        NodeId next = kNone;
        while (offset < in.size()) {
            const NodeId x = in[offset++];
            if (p.region_index[x] == fore) {
                next = x;
                break;
            }
        }
        stack.back().second = offset;
        if (next != kNone) {
            chain.push_back(next);
            stack.emplace_back(next, 0);
        } else {
            chain.pop_back();
            stack.pop_back();
        }
    }
    return set;
}

std::uint64_t count_min_hop_paths(const Graph& g, NodeId s, NodeId t) {
    check_endpoint(g, s, "source");
    check_endpoint(g, t, "target");
    const Partition p = partition_fast(g, s);
    if (!region_of(p, t)) {
        throw std::invalid_argument("target unreachable: node " + std::to_string(t));
    }
    std::vector<std::uint64_t> count(g.node_count(), 0);
    count[s] = 1;
    for (std::size_t i = 1; i < p.regions.size(); ++i) {
        const std::uint32_t fore = static_cast<std::uint32_t>(i);
        for (NodeId u : p.regions[i]) {
            std::uint64_t total = 0;
            for (NodeId x : g.in_neighbors(u)) {
                if (p.region_index[x] == fore) total = sat_add(total, count[x]);
            }
            count[u] = total;
        }
    }
    return count[t];
}

RankedTotals rank_of(Weight value, const PathSet& set, const WeightTable& w) {
    std::vector<Weight> totals;
    totals.reserve(set.paths.size());
    for (const Path& path : set.paths) totals.push_back(total_weight(path, w));
    return rank_in_totals(value, std::move(totals));
}

RankedTotals rank_in_totals(Weight value, std::vector<Weight> totals) {
    std::sort(totals.begin(), totals.end());
    totals.erase(std::unique(totals.begin(), totals.end()), totals.end());
    RankedTotals ranked;
    const auto it = std::lower_bound(totals.begin(), totals.end(), value);
    if (it == totals.end() || *it != value) {
        throw std::invalid_argument("value " + std::to_string(value) +
                                    " is not the total of any enumerated path");
    }
    ranked.position = static_cast<std::size_t>(it - totals.begin()) + 1;
    ranked.totals = std::move(totals);
    return ranked;
}

}  // namespace regionpath
