#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "regionpath/enumerate.hpp"
#include "regionpath/explore.hpp"
#include "regionpath/graph.hpp"
#include "regionpath/partition.hpp"

namespace regionpath {

// Dynamic weight model: each arc carries a fixed positive integer index, and
// the weight paid on entering node t with accumulated index I is
// f(t, I) = w[perm[t][I mod |w|]]. Deterministic in (t, I) yet different
// paths into the same node can pay different weights.
struct DynamicSystem {
    std::unordered_map<std::uint64_t, std::uint64_t> index_table;
    std::vector<Weight> weight_values;
    std::vector<std::vector<std::uint32_t>> node_perm;
    std::uint64_t source_index = 0;  // c1
    Weight source_weight = 0.0;      // c2

    std::uint64_t arc_index(NodeId u, NodeId v) const;
};

// Index table filled by seeded uniform draws from d (symmetric on simple
// graphs, like weight assignment), node permutations by seeded shuffles.
// Values of d must be positive integers.
DynamicSystem make_dynamic_system(const Graph& g, const AssignmentArray& d,
                                  const AssignmentArray& w, std::uint64_t seed);

// Same system layout from an explicit arc-index table (file input); only the
// node permutations come from the seed.
DynamicSystem make_dynamic_system_from_table(
    const Graph& g, std::unordered_map<std::uint64_t, std::uint64_t> index_table,
    std::vector<Weight> weight_values, std::uint64_t seed);

// The weight function f alone.
Weight dyn_weight(const DynamicSystem& sys, NodeId t, std::uint64_t accumulated_index);

struct DynamicLabeling {
    Labeling labeling;
    std::vector<std::uint64_t> idx;  // accumulated index per reached node
};

// Region-queue exploration under the dynamic model. Each candidate
// in-neighbor is scored with its own accumulated index, so the competition
// happens before the winner's index is committed.
DynamicLabeling hybrid_explore_dynamic(const Graph& g, const DynamicSystem& sys,
                                       const Partition& p);

// Replays index and total accumulation along a path from the source
// constants; the path must start at the intended source.
Weight path_total_dynamic(const Path& path, const DynamicSystem& sys);

// Rank of value among distinct replayed totals of a path set.
RankedTotals rank_of(Weight value, const PathSet& set, const DynamicSystem& sys);

}  // namespace regionpath
