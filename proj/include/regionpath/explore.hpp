#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "regionpath/graph.hpp"
#include "regionpath/partition.hpp"

namespace regionpath {

enum class ExploreMode { Min, Max };

// Per-node accumulated total weight and predecessor, the output tree of an
// exploration. pred edges always point away from the source; sigma at the
// source is fixed to 0 so sigma equals path total weight exactly.
struct Labeling {
    static constexpr NodeId kNoPred = std::numeric_limits<NodeId>::max();

    std::vector<Weight> sigma;
    std::vector<NodeId> pred;
    std::vector<std::uint8_t> reached;
    ExploreMode mode = ExploreMode::Min;
    NodeId source = 0;

    bool is_reached(NodeId v) const { return reached[v] != 0; }
};

// A walk x_1..x_t with every consecutive pair an arc.
struct Path {
    std::vector<NodeId> nodes;

    std::size_t arc_count() const noexcept { return nodes.empty() ? 0 : nodes.size() - 1; }
};

// Region-queue exploration: every non-source node picks the in-neighbor from
// the fore region that extremizes sigma[x] + w(x, u). Ties go to the lowest
// node id. The result is the extremal-total member of the minimum-hop path
// set for every reached node.
Labeling hybrid_explore(const Graph& g, const WeightTable& w, const Partition& p,
                        ExploreMode mode);

// Unique pred-chain from the source to target. Throws std::invalid_argument,
// naming the node, when target is unreached.
Path trace_path(const Labeling& l, const Partition& p, NodeId target);

// Sum of per-arc weights; 0 for a single-node path. Throws std::out_of_range
// when a consecutive pair has no weight.
Weight total_weight(const Path& path, const WeightTable& w);

struct EvolveResult {
    Labeling labeling;
    std::size_t sweeps = 0;
};

// Fixpoint relaxation: full sweeps over all non-source nodes in ascending id
// order, each node re-minimizing over ALL in-neighbors, until a sweep changes
// nothing. Requires a min-mode labeling (max mode diverges) and positive
// weights; the fixpoint is the classic single-source shortest distance.
EvolveResult evolve(const Graph& g, const WeightTable& w, const Labeling& init);

}  // namespace regionpath
