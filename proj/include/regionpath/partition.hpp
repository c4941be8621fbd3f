#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "regionpath/graph.hpp"

namespace regionpath {

// Region partition of a graph from a source: regions[i] holds the nodes at
// hop distance i from the source, in discovery order. region_index keeps the
// 1-based subscript convention, with 0 reserved for nodes no region reaches.
struct Partition {
    std::vector<std::vector<NodeId>> regions;
    std::vector<std::uint32_t> region_index;
    NodeId source = 0;

    std::size_t region_count() const noexcept { return regions.size(); }
};

// Set-difference iteration: candidate leaves of the current region minus the
// current region, the previous region and everything already dispatched.
Partition partition_basic(const Graph& g, NodeId source);

// Same output as partition_basic on every input, using two node-indexed
// mark tables (dispatched region, seen) instead of set differences. O(E).
Partition partition_fast(const Graph& g, NodeId source);

// 1-based region subscript of v, or nullopt when v is unreached.
std::optional<std::uint32_t> region_of(const Partition& p, NodeId v);

}  // namespace regionpath
