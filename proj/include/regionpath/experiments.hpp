#pragma once

#include <cstdint>
#include <vector>

#include "regionpath/dynamics.hpp"
#include "regionpath/enumerate.hpp"
#include "regionpath/explore.hpp"
#include "regionpath/graph.hpp"

namespace regionpath {

// Ascending-weight arc filter: admit arcs one weight-equivalence class at a
// time (at least `batch` arcs per step, then to the class boundary), stop as
// soon as the filtered partition reaches t, then explore the filtered
// subgraph. The returned path is valid in the full graph.
Path greedy_hybrid(const Graph& g, const WeightTable& w, NodeId s, NodeId t,
                   std::size_t batch = 1);

struct ComparisonStats {
    std::uint32_t k = 0;
    std::uint64_t trials = 0;
    std::uint64_t greedy_longer = 0;
    std::uint64_t equal_length = 0;
    std::uint64_t weight_greater = 0;
    std::uint64_t weight_equal = 0;
    std::uint64_t weight_less = 0;
};

// Greedy vs hybrid corner-to-corner on a k x k grid, fresh assignment per
// trial; tallies length and full-graph total comparisons. The assignment
// array has array_card members (0 defaults to k).
ComparisonStats greedy_compare(std::uint32_t k, DensityKind kind, std::uint64_t trials,
                               std::uint64_t seed, Weight gap_c = 1.0,
                               std::size_t array_card = 0);

struct RankStats {
    std::uint64_t trials = 0;
    double top_rate = 0.0;          // fraction of trials ranked first
    std::size_t worst_position = 0;  // greatest observed position
    double avg_alpha = 0.0;          // mean position
    double avg_beta = 0.0;           // mean count of distinct totals
    double delta = 0.0;              // avg_alpha / avg_beta
};

// Rank of the dynamic hybrid's corner-to-corner total among the replayed
// totals of every minimum-hop path, aggregated over seeded trials with
// d = 1..d_card and w_i = gap_c * i for i <= w_card.
RankStats dynamic_rank_experiment(std::uint32_t k, std::size_t d_card, std::size_t w_card,
                                  Weight gap_c, std::uint64_t trials, std::uint64_t seed,
                                  std::size_t cap = kDefaultPathCap);

struct EtaPoint {
    std::size_t y_card = 0;
    std::size_t w_card = 0;
    double eta = 0.0;  // |Y| / |w|
    double log10_eta = 0.0;
};

struct EtaCurve {
    std::vector<EtaPoint> points;
};

// For each |Y|, linear search upward from w_card_start for the smallest |w|
// such that every trial ranks first, with w populated by seeded draws from
// Y = 1..|Y|. Throws CapExceeded when no |w| <= w_card_limit regularizes.
EtaCurve regularization_probe(std::uint32_t k, const std::vector<std::size_t>& y_cards,
                              std::size_t w_card_start, std::uint64_t trials,
                              std::uint64_t seed, std::size_t d_card = 10,
                              std::size_t w_card_limit = 10'000);

struct BenchRow {
    std::uint32_t k = 0;
    std::size_t nodes = 0;
    std::size_t arcs = 0;
    double partition_us = 0.0;
    double explore_us = 0.0;
};

// Median wall time per phase on corner-sourced k x k grids; one warm-up run
// per instance is discarded. reps must be >= 3.
std::vector<BenchRow> benchmark(const std::vector<std::uint32_t>& k_list, std::size_t reps,
                                std::uint64_t seed = 1);

}  // namespace regionpath
