#include "regionpath/partition.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace regionpath {

namespace {

void check_source(const Graph& g, NodeId source) {
    if (source >= g.node_count()) {
        throw std::invalid_argument("source out of range: " + std::to_string(source));
    }
}

}  // namespace

Partition partition_basic(const Graph& g, NodeId source) {
    check_source(g, source);
    Partition p;
    p.source = source;
    p.region_index.assign(g.node_count(), 0);

    std::set<NodeId> dispatched;  // every node placed in any earlier region
    std::vector<NodeId> current{source};
    while (!current.empty()) {
        const std::uint32_t c = static_cast<std::uint32_t>(p.regions.size() + 1);
        std::set<NodeId> current_set(current.begin(), current.end());
        for (NodeId x : current) {
            p.region_index[x] = c;
            dispatched.insert(x);
        }
        p.regions.push_back(current);

        // Candidate leaves in discovery order, then the set differences.
        std::vector<NodeId> next;
        std::set<NodeId> taken;
        for (NodeId x : current) {
            for (NodeId v : g.out_neighbors(x)) {
                if (current_set.count(v) || dispatched.count(v) || taken.count(v)) continue;
                taken.insert(v);
                next.push_back(v);
            }
        }
        current = std::move(next);
    }
    return p;
}

Partition partition_fast(const Graph& g, NodeId source) {
    check_source(g, source);
    Partition p;
    p.source = source;
    p.region_index.assign(g.node_count(), 0);  // table T, 0 = not dispatched
    std::vector<std::uint8_t> seen(g.node_count(), 0);  // table T'

    std::vector<NodeId> current{source};
    seen[source] = 1;
    while (!current.empty()) {
        const std::uint32_t c = static_cast<std::uint32_t>(p.regions.size() + 1);
        for (NodeId x : current) p.region_index[x] = c;
        std::vector<NodeId> next;
        for (NodeId x : current) {
            for (NodeId v : g.out_neighbors(x)) {
                if (seen[v] == 0 && p.region_index[v] == 0) {
                    next.push_back(v);
                    seen[v] = 1;
                }
            }
        }
        p.regions.push_back(std::move(current));
        current = std::move(next);
    }
    return p;
}

std::optional<std::uint32_t> region_of(const Partition& p, NodeId v) {
    if (v >= p.region_index.size() || p.region_index[v] == 0) return std::nullopt;
    return p.region_index[v];
}

}  // namespace regionpath
