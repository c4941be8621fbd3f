#include "regionpath/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>

#include "regionpath/partition.hpp"
#include "regionpath/rng.hpp"

namespace regionpath {

Path greedy_hybrid(const Graph& g, const WeightTable& w, NodeId s, NodeId t,
                   std::size_t batch) {
    if (s >= g.node_count() || t >= g.node_count()) {
        throw std::invalid_argument("endpoint out of range");
    }
    if (batch < 1) batch = 1;

    auto arcs = g.arcs_sorted();
    std::sort(arcs.begin(), arcs.end(), [&](const Arc& a, const Arc& b) {
        const Weight wa = w.at(a.first, a.second);
        const Weight wb = w.at(b.first, b.second);
        if (wa != wb) return wa < wb;
        return a < b;
    });

    std::vector<Arc> admitted;
    admitted.reserve(arcs.size());
    std::size_t next = 0;
    for (;;) {
        const Graph filtered = Graph::from_arcs(g.node_count(), admitted);
        const Partition p = partition_fast(filtered, s);
        if (region_of(p, t)) {
            const Labeling l = hybrid_explore(filtered, w, p, ExploreMode::Min);
            return trace_path(l, p, t);
        }
        if (next >= arcs.size()) {
            throw std::invalid_argument("target unreachable: node " + std::to_string(t));
        }
        // Admit at least `batch` arcs, then finish the weight class so the
        // stop point does not depend on tie order.
        std::size_t taken = 0;
        while (next < arcs.size() && taken < batch) {
            admitted.push_back(arcs[next++]);
            ++taken;
        }
        while (next < arcs.size() &&
               w.at(arcs[next].first, arcs[next].second) ==
                   w.at(admitted.back().first, admitted.back().second)) {
            admitted.push_back(arcs[next++]);
        }
    }
}

ComparisonStats greedy_compare(std::uint32_t k, DensityKind kind, std::uint64_t trials,
                               std::uint64_t seed, Weight gap_c, std::size_t array_card) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (array_card == 0) array_card = k;
    const Graph g = grid_graph(k);
    const GridCorners corners = grid_corners(k);
    const Partition p = partition_fast(g, corners.nw);

    ComparisonStats stats;
    stats.k = k;
    stats.trials = trials;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        const std::uint64_t trial_seed = derive_seed(seed, trial);
        SplitMix64 array_rng(derive_seed(trial_seed, 0));
        const AssignmentArray a = make_assignment(kind, array_card, gap_c, array_rng);
        const WeightTable w = assign_weights(g, a, derive_seed(trial_seed, 1));

        const Labeling hybrid = hybrid_explore(g, w, p, ExploreMode::Min);
        const Path hybrid_path = trace_path(hybrid, p, corners.se);
        const Path greedy_path = greedy_hybrid(g, w, corners.nw, corners.se);

        if (greedy_path.arc_count() > hybrid_path.arc_count()) {
            ++stats.greedy_longer;
        } else {
            ++stats.equal_length;
        }
        const Weight greedy_total = total_weight(greedy_path, w);
        const Weight hybrid_total = hybrid.sigma[corners.se];
        if (greedy_total > hybrid_total) {
            ++stats.weight_greater;
        } else if (greedy_total == hybrid_total) {
            ++stats.weight_equal;
        } else {
            ++stats.weight_less;
        }
    }
    return stats;
}

RankStats dynamic_rank_experiment(std::uint32_t k, std::size_t d_card, std::size_t w_card,
                                  Weight gap_c, std::uint64_t trials, std::uint64_t seed,
                                  std::size_t cap) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    const Graph g = grid_graph(k);
    const GridCorners corners = grid_corners(k);
    const std::uint64_t count = count_min_hop_paths(g, corners.nw, corners.se);
    if (count > cap) {
        throw CapExceeded("minimum-hop path count " + std::to_string(count) + " exceeds cap " +
                          std::to_string(cap) + "; rerun with a smaller k");
    }
    const Partition p = partition_fast(g, corners.nw);
    const PathSet baseline = enumerate_min_hop_paths(g, corners.nw, corners.se);
    const AssignmentArray d = even_array(d_card);
    const AssignmentArray w = scaled_array(w_card, gap_c);

    RankStats stats;
    stats.trials = trials;
    std::uint64_t top = 0;
    double alpha_sum = 0.0;
    double beta_sum = 0.0;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        const DynamicSystem sys = make_dynamic_system(g, d, w, derive_seed(seed, trial));
        const DynamicLabeling dl = hybrid_explore_dynamic(g, sys, p);
        const RankedTotals ranked = rank_of(dl.labeling.sigma[corners.se], baseline, sys);
        alpha_sum += static_cast<double>(ranked.position);
        beta_sum += static_cast<double>(ranked.totals.size());
        if (ranked.position == 1) ++top;
        stats.worst_position = std::max(stats.worst_position, ranked.position);
    }
    stats.top_rate = static_cast<double>(top) / static_cast<double>(trials);
    stats.avg_alpha = alpha_sum / static_cast<double>(trials);
    stats.avg_beta = beta_sum / static_cast<double>(trials);
    stats.delta = stats.avg_alpha / stats.avg_beta;
    return stats;
}

EtaCurve regularization_probe(std::uint32_t k, const std::vector<std::size_t>& y_cards,
                              std::size_t w_card_start, std::uint64_t trials,
                              std::uint64_t seed, std::size_t d_card,
                              std::size_t w_card_limit) {
    if (y_cards.empty()) throw std::invalid_argument("y_cards must be non-empty");
    if (w_card_start < 1) throw std::invalid_argument("w_card_start must be >= 1");
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");

    const Graph g = grid_graph(k);
    const GridCorners corners = grid_corners(k);
    const std::uint64_t count = count_min_hop_paths(g, corners.nw, corners.se);
    if (count > kDefaultPathCap) {
        throw CapExceeded("minimum-hop path count " + std::to_string(count) +
                          " exceeds cap; rerun with a smaller k");
    }
    const Partition p = partition_fast(g, corners.nw);
    const PathSet baseline = enumerate_min_hop_paths(g, corners.nw, corners.se);
    const AssignmentArray d = even_array(d_card);

    EtaCurve curve;
    for (std::size_t y_card : y_cards) {
        if (y_card < 1) throw std::invalid_argument("|Y| must be >= 1");
        bool found = false;
        for (std::size_t w_card = w_card_start; w_card <= w_card_limit && !found; ++w_card) {
            const std::uint64_t base = derive_seed(derive_seed(seed, y_card), w_card);
            SplitMix64 draw_rng(derive_seed(base, 0));
            AssignmentArray warr;
            warr.values.reserve(w_card);
            for (std::size_t i = 0; i < w_card; ++i) {
                warr.values.push_back(static_cast<Weight>(draw_rng.below(y_card) + 1));
            }

            bool all_top = true;
            for (std::uint64_t trial = 0; trial < trials && all_top; ++trial) {
                const DynamicSystem sys =
                    make_dynamic_system(g, d, warr, derive_seed(base, trial + 1));
                const DynamicLabeling dl = hybrid_explore_dynamic(g, sys, p);
                const RankedTotals ranked =
                    rank_of(dl.labeling.sigma[corners.se], baseline, sys);
                all_top = ranked.position == 1;
            }
            if (all_top) {
                EtaPoint point;
                point.y_card = y_card;
                point.w_card = w_card;
                point.eta = static_cast<double>(y_card) / static_cast<double>(w_card);
                point.log10_eta = std::log10(point.eta);
                curve.points.push_back(point);
                found = true;
            }
        }
        if (!found) {
            throw CapExceeded("no |w| <= " + std::to_string(w_card_limit) +
                              " regularizes |Y| = " + std::to_string(y_card));
        }
    }
    return curve;
}

namespace {

double median_of(std::vector<double> samples) {
    std::sort(samples.begin(), samples.end());
    const std::size_t mid = samples.size() / 2;
    if (samples.size() % 2 == 1) return samples[mid];
    return 0.5 * (samples[mid - 1] + samples[mid]);
}

}  // namespace

std::vector<BenchRow> benchmark(const std::vector<std::uint32_t>& k_list, std::size_t reps,
                                std::uint64_t seed) {
    if (reps < 3) throw std::invalid_argument("reps must be >= 3");
    using Clock = std::chrono::steady_clock;
    std::vector<BenchRow> rows;
    double sink = 0.0;
    for (std::uint32_t k : k_list) {
        const Graph g = grid_graph(k);
        const GridCorners corners = grid_corners(k);
        const AssignmentArray a = even_array(k);
        const WeightTable w = assign_weights(g, a, derive_seed(seed, k));

        {
            // Warm-up, discarded.
            const Partition p = partition_fast(g, corners.nw);
            const Labeling l = hybrid_explore(g, w, p, ExploreMode::Min);
            sink += l.sigma[corners.se];
        }

        std::vector<double> partition_us;
        std::vector<double> explore_us;
        for (std::size_t rep = 0; rep < reps; ++rep) {
            const auto t0 = Clock::now();
            const Partition p = partition_fast(g, corners.nw);
            const auto t1 = Clock::now();
            const Labeling l = hybrid_explore(g, w, p, ExploreMode::Min);
            const auto t2 = Clock::now();
            sink += l.sigma[corners.se] + static_cast<double>(p.region_count());
            partition_us.push_back(std::chrono::duration<double, std::micro>(t1 - t0).count());
            explore_us.push_back(std::chrono::duration<double, std::micro>(t2 - t1).count());
        }

        BenchRow row;
        row.k = k;
        row.nodes = g.node_count();
        row.arcs = g.arc_count();
        row.partition_us = median_of(std::move(partition_us));
        row.explore_us = median_of(std::move(explore_us));
        rows.push_back(row);
    }
    if (sink == -1.0) rows.clear();  // keep the measured work observable
    return rows;
}

}  // namespace regionpath
