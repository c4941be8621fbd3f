#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "regionpath/rng.hpp"

namespace regionpath {

// Node labels are dense naturals 0..n-1 so they double as array offsets.
using NodeId = std::uint32_t;
using Weight = double;
using Arc = std::pair<NodeId, NodeId>;

enum class GraphMode { Simple, Directed, Mixed };

// Finite directed graph with paired forward (s) and reverse (beta) adjacency
// views. No self-loops, no duplicate arcs; immutable after construction.
class Graph {
public:
    Graph() = default;

    // Validates the arc list, sorts both adjacency views ascending and
    // classifies the instance. Throws std::invalid_argument on self-loops,
    // duplicate arcs or out-of-range endpoints.
    static Graph from_arcs(NodeId n, const std::vector<Arc>& arcs);

    NodeId node_count() const noexcept { return n_; }
    std::size_t arc_count() const noexcept { return arc_count_; }
    GraphMode mode() const noexcept { return mode_; }

    // Out-neighbors of u: the leaves of the unit subgraph s(u), ascending.
    std::span<const NodeId> out_neighbors(NodeId u) const { return slice(s_flat_, s_off_, u); }
    // In-neighbors of u: the leaves of the visiting subgraph beta(u), ascending.
    std::span<const NodeId> in_neighbors(NodeId u) const { return slice(b_flat_, b_off_, u); }

    bool has_arc(NodeId u, NodeId v) const;

    // All arcs sorted by (u, v).
    std::vector<Arc> arcs_sorted() const;

private:
    std::span<const NodeId> slice(const std::vector<NodeId>& flat,
                                  const std::vector<std::size_t>& offsets, NodeId u) const {
        return {flat.data() + offsets[u], offsets[u + 1] - offsets[u]};
    }

    // Both adjacency views are compacted CSR arrays; neighbor lists of one
    // node are contiguous and ascending.
    NodeId n_ = 0;
    std::size_t arc_count_ = 0;
    GraphMode mode_ = GraphMode::Simple;
    std::vector<NodeId> s_flat_, b_flat_;
    std::vector<std::size_t> s_off_, b_off_;
};

// Simple iff the arc set is symmetric (vacuously true when empty), directed
// iff antisymmetric, mixed otherwise.
GraphMode classify(const Graph& g);

// k x k four-neighbor grid, both directions per edge: n = k^2 nodes and
// 4k(k-1) arcs. Throws std::invalid_argument for k = 0.
Graph grid_graph(NodeId k);

struct GridCorners {
    NodeId nw, ne, sw, se;
};

// Corner nodes of grid_graph(k); experiments route nw -> se on the diagonal.
GridCorners grid_corners(NodeId k);

// The 20-node 3-regular dodecahedral graph (60 directed arcs), built from
// its LCF notation [10,7,4,-4,-7,10,-4,7,-7,4]^2.
Graph dodecahedron_graph();

enum class DensityKind { Even, Scaled, Normal, Dumbbell, RandomGap };

// Ordered list of positive weights used for random dispatch onto arcs.
struct AssignmentArray {
    std::vector<Weight> values;
    DensityKind kind = DensityKind::Even;

    std::size_t size() const noexcept { return values.size(); }
};

// 1, 2, ..., n.
AssignmentArray even_array(std::size_t n);
// c, 2c, ..., nc.
AssignmentArray scaled_array(std::size_t n, Weight c);
// Discretized Gaussian quantiles over [1, n] with mu = n/2, sigma = n/6.
AssignmentArray normal_array(std::size_t n);
// Half the members in the bottom decile of [1, n], half in the top decile.
AssignmentArray dumbbell_array(std::size_t n);
// Cumulative sums of uniform gaps in [1, 5).
AssignmentArray random_gap_array(std::size_t n, SplitMix64& rng);

AssignmentArray make_assignment(DensityKind kind, std::size_t n, Weight c, SplitMix64& rng);

inline std::uint64_t arc_key(NodeId u, NodeId v) noexcept {
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

// Positive weight per directed arc. Stored per direction even on simple
// graphs; symmetric values are enforced at assignment time instead. The
// rows keep one source node's arcs contiguous, so exploration lookups stay
// cache-local on large instances.
class WeightTable {
public:
    Weight at(NodeId u, NodeId v) const;
    std::optional<Weight> find(NodeId u, NodeId v) const;
    void set(NodeId u, NodeId v, Weight w);
    std::size_t size() const noexcept { return size_; }

private:
    std::vector<std::vector<std::pair<NodeId, Weight>>> rows_;
    std::size_t size_ = 0;
};

// Random dispatch of array members to arcs (uniform, with replacement),
// deterministic in (g, a, seed). On simple graphs the two directions of an
// undirected edge receive the same value.
WeightTable assign_weights(const Graph& g, const AssignmentArray& a, std::uint64_t seed);

namespace detail {

// Visits arcs in the fixed draw order used by every random per-arc
// assignment: u ascending, out-neighbors ascending; on simple graphs only
// the u < v direction draws and the callback receives mirror = true.
template <typename F>
void for_each_draw_arc(const Graph& g, F&& fn) {
    const bool mirrored = g.mode() == GraphMode::Simple;
    for (NodeId u = 0; u < g.node_count(); ++u) {
        for (NodeId v : g.out_neighbors(u)) {
            if (mirrored && u > v) continue;
            fn(u, v, mirrored);
        }
    }
}

}  // namespace detail

}  // namespace regionpath
