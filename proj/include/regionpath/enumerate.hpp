#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "regionpath/explore.hpp"
#include "regionpath/graph.hpp"

namespace regionpath {

// Thrown when an enumeration or search would exceed its configured bound.
// Deliberately an error rather than a truncation: a silently clipped
// baseline would corrupt every rank statistic computed from it.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class PathKind { Simple, MinHop };

struct PathSet {
    std::vector<Path> paths;
    PathKind kind = PathKind::Simple;
};

inline constexpr std::size_t kDefaultPathCap = 1'000'000;

// Every node-repetition-free path s -> t, in DFS order with ascending-id
// neighbor expansion. Throws CapExceeded once the path count passes cap.
PathSet enumerate_simple_paths(const Graph& g, NodeId s, NodeId t,
                               std::size_t cap = kDefaultPathCap);

// Every path of arc count equal to the hop distance s -> t, produced by a
// backward walk over the region-layer DAG. Throws std::invalid_argument when
// t is unreachable from s.
PathSet enumerate_min_hop_paths(const Graph& g, NodeId s, NodeId t);

// Saturates instead of overflowing.
inline constexpr std::uint64_t kCountSaturated = UINT64_MAX;

// |enumerate_min_hop_paths| by layer-DAG dynamic programming, without
// materializing paths.
std::uint64_t count_min_hop_paths(const Graph& g, NodeId s, NodeId t);

// Sorted distinct totals and the 1-based position of one value among them.
struct RankedTotals {
    std::vector<Weight> totals;
    std::size_t position = 0;
};

// Rank of value among the distinct static totals of a path set. A missing
// value signals disagreement between explorer and baseline and throws.
RankedTotals rank_of(Weight value, const PathSet& set, const WeightTable& w);

// Shared tail of the rank_of overloads.
RankedTotals rank_in_totals(Weight value, std::vector<Weight> totals);

}  // namespace regionpath
