#pragma once

#include <cstdint>
#include <vector>

namespace regionpath {

// Two disjoint groups of positive numbers standing for the edge weights of
// the two source-target paths around a polygon.
struct GroupSplit {
    std::vector<double> a1;
    std::vector<double> a2;
};

enum class SplitOutcome { Holds, Anti };

// Polygon inequality check. After orienting so the first group has the
// smaller cardinality, the anti event is a strictly larger sum on that side;
// ties count as holds.
SplitOutcome check_split(const GroupSplit& s);

// Exact count of unordered triples {x1 < x2, y} from 1..n with x1 + x2 < y:
// sum over i >= 1 of (n-2i-1)(n-2i)/2 while n-2i-1 >= 1.
std::uint64_t anti_triples_exact(std::uint64_t n);

struct AntiStats {
    std::uint64_t n = 0;
    std::uint64_t anti_triples = 0;  // P
    double rho = 0.0;                // P / C(n,3)
    double rho_equal = 0.0;          // P' / C(n,3), equal-pair variant
    double rho_assign = 0.0;         // rho / 3
    double phi = 0.0;                // bracketed series, rho = (3/n) phi
};

// Closed-form anti probabilities for the triangle drawn from 1..n.
AntiStats anti_probability(std::uint64_t n);

// Independent estimator of rho: fraction of uniformly sampled distinct
// triples whose two smaller members sum below the largest.
double triangle_monte_carlo(std::uint64_t n, std::uint64_t trials, std::uint64_t seed);

struct AntiHistogram {
    std::uint32_t array_max = 0;  // values drawn from 1..array_max
    std::uint32_t edge_count = 0;  // E, polygon edge count
    std::uint64_t trials = 0;
    // rate_by_length[L-1] = fraction of trials where the size-L group's sum
    // strictly exceeds the size-(E-L) group's sum; L in 1..floor((E-1)/2).
    std::vector<double> rate_by_length;
};

// Split simulation: per trial and per L, sample E distinct values from
// 1..a_max, split uniformly at random into sizes L and E-L, and record the
// anti event. Trials use derived per-trial seeds, so aggregation is
// order-independent.
AntiHistogram split_histogram(std::uint32_t a_max, std::uint32_t e, std::uint64_t trials,
                              std::uint64_t seed);

}  // namespace regionpath
