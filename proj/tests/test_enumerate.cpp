#include "doctest.h"

#include <random>
#include <set>

#include "oracles.hpp"
#include "regionpath/enumerate.hpp"
#include "regionpath/partition.hpp"

using namespace regionpath;

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::set<std::vector<NodeId>> as_set(const PathSet& set) {
    std::set<std::vector<NodeId>> out;
    for (const Path& p : set.paths) out.insert(p.nodes);
    return out;
}

}  // namespace

TEST_CASE("corner-to-corner simple path counts on small grids") {
    CHECK(enumerate_simple_paths(grid_graph(3), 0, 8).paths.size() == 12);
    CHECK(enumerate_simple_paths(grid_graph(4), 0, 15).paths.size() == 184);
    CHECK(enumerate_simple_paths(grid_graph(5), 0, 24).paths.size() == 8512);

    CHECK(oracles::simple_path_count(grid_graph(3), 0, 8) == 12);
    CHECK(oracles::simple_path_count(grid_graph(4), 0, 15) == 184);
}

TEST_CASE("simple path enumeration agrees with the recursive oracle") {
    std::mt19937 rng(3);
    for (int it = 0; it < 60; ++it) {
        const std::uint32_t n = 2 + rng() % 9;
        const Graph g = oracles::random_connected(n, rng() % (2 * n), rng, it % 2 == 0);
        const NodeId t = static_cast<NodeId>(1 + rng() % (n - 1));
        const PathSet set = enumerate_simple_paths(g, 0, t);
        CHECK(set.paths.size() == oracles::simple_path_count(g, 0, t));
        // No duplicates, every path simple with 1 <= |p| <= n nodes.
        std::set<std::vector<NodeId>> seen;
        for (const Path& p : set.paths) {
            REQUIRE(p.nodes.size() >= 1);
            REQUIRE(p.nodes.size() <= n);
            CHECK(p.nodes.front() == 0);
            CHECK(p.nodes.back() == t);
            std::set<NodeId> uniq(p.nodes.begin(), p.nodes.end());
            CHECK(uniq.size() == p.nodes.size());
            CHECK(seen.insert(p.nodes).second);
        }
    }
}

TEST_CASE("chains have exactly one path") {
    const Graph g = Graph::from_arcs(3, {{0, 1}, {1, 2}});
    CHECK(enumerate_simple_paths(g, 0, 2).paths.size() == 1);
    CHECK(enumerate_min_hop_paths(g, 0, 2).paths.size() == 1);
    CHECK(count_min_hop_paths(g, 0, 2) == 1);
}

TEST_CASE("a coincident source and target yield one zero-arc path") {
    const Graph g = grid_graph(3);
    const PathSet simple = enumerate_simple_paths(g, 4, 4);
    REQUIRE(simple.paths.size() == 1);
    CHECK(simple.paths.front().arc_count() == 0);
    const PathSet hop = enumerate_min_hop_paths(g, 4, 4);
    REQUIRE(hop.paths.size() == 1);
    CHECK(hop.paths.front().nodes == std::vector<NodeId>{4});
}

TEST_CASE("the cap guards against combinatorial explosion") {
    CHECK_THROWS_AS(enumerate_simple_paths(grid_graph(4), 0, 15, 100), CapExceeded);
}

TEST_CASE("min-hop enumeration rejects unreachable targets") {
    const Graph g = Graph::from_arcs(3, {{0, 1}});
    CHECK_THROWS_AS(enumerate_min_hop_paths(g, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(count_min_hop_paths(g, 0, 2), std::invalid_argument);
}

TEST_CASE("grid min-hop counts follow the central binomial form") {
    CHECK(enumerate_min_hop_paths(grid_graph(5), 0, 24).paths.size() == 70);
    for (NodeId k = 2; k <= 10; ++k) {
        const Graph g = grid_graph(k);
        const GridCorners c = grid_corners(k);
        CHECK(count_min_hop_paths(g, c.nw, c.se) == binomial(2 * k - 2, k - 1));
    }
}

TEST_CASE("count agrees with enumeration") {
    std::mt19937 rng(19);
    for (int it = 0; it < 80; ++it) {
        const std::uint32_t n = 2 + rng() % 11;
        const Graph g = oracles::random_connected(n, rng() % (2 * n), rng, it % 2 == 0);
        for (NodeId t = 0; t < n; ++t) {
            const auto dist = oracles::bfs_levels(g, 0);
            if (dist[t] < 0) continue;
            const PathSet set = enumerate_min_hop_paths(g, 0, t);
            CHECK(count_min_hop_paths(g, 0, t) == set.paths.size());
            for (const Path& p : set.paths) {
                CHECK(p.arc_count() == static_cast<std::size_t>(dist[t]));
            }
        }
    }
}

TEST_CASE("enumeration is deterministic") {
    const Graph g = grid_graph(4);
    const PathSet a = enumerate_simple_paths(g, 0, 15);
    const PathSet b = enumerate_simple_paths(g, 0, 15);
    REQUIRE(a.paths.size() == b.paths.size());
    for (std::size_t i = 0; i < a.paths.size(); ++i) {
        CHECK(a.paths[i].nodes == b.paths[i].nodes);
    }
}

namespace {

// Recursive pre-order collector: the order contract for simple paths.
void collect_rec(const Graph& g, NodeId u, NodeId t, std::vector<char>& used,
                 std::vector<NodeId>& path, std::vector<std::vector<NodeId>>& out) {
    path.push_back(u);
    if (u == t) {
        out.push_back(path);
    } else {
        used[u] = 1;
        for (NodeId v : g.out_neighbors(u)) {
            if (!used[v]) collect_rec(g, v, t, used, path, out);
        }
        used[u] = 0;
    }
    path.pop_back();
}

}  // namespace

TEST_CASE("simple paths come out in recursive DFS order") {
    std::mt19937 rng(41);
    for (int it = 0; it < 30; ++it) {
        const std::uint32_t n = 2 + rng() % 8;
        const Graph g = oracles::random_connected(n, rng() % (2 * n), rng, it % 2 == 0);
        const NodeId t = static_cast<NodeId>(rng() % n);
        std::vector<char> used(n, 0);
        std::vector<NodeId> path;
        std::vector<std::vector<NodeId>> expected;
        collect_rec(g, 0, t, used, path, expected);

        const PathSet set = enumerate_simple_paths(g, 0, t);
        REQUIRE(set.paths.size() == expected.size());
        for (std::size_t i = 0; i < expected.size(); ++i) {
            CHECK(set.paths[i].nodes == expected[i]);
        }
    }
}

TEST_CASE("hybrid path lies in the min-hop set inside the simple set") {
    std::mt19937 rng(29);
    for (int it = 0; it < 50; ++it) {
        const std::uint32_t n = 3 + rng() % 10;
        const Graph g = oracles::random_connected(n, rng() % n, rng, it % 2 == 0);
        const WeightTable w = oracles::random_weights(g, rng);
        const Partition p = partition_fast(g, 0);
        const Labeling l = hybrid_explore(g, w, p, ExploreMode::Min);
        const NodeId t = static_cast<NodeId>(1 + rng() % (n - 1));
        if (!region_of(p, t)) continue;

        const auto min_hop = as_set(enumerate_min_hop_paths(g, 0, t));
        const auto simple = as_set(enumerate_simple_paths(g, 0, t));
        const Path hybrid_path = trace_path(l, p, t);
        CHECK(min_hop.count(hybrid_path.nodes) == 1);
        for (const auto& nodes : min_hop) CHECK(simple.count(nodes) == 1);
    }
}

TEST_CASE("rank_of positions values among distinct totals") {
    SUBCASE("duplicates collapse") {
        const RankedTotals r = rank_in_totals(5.0, {3.0, 3.0, 5.0});
        CHECK(r.totals == std::vector<Weight>{3.0, 5.0});
        CHECK(r.position == 2);
    }
    SUBCASE("the minimum ranks first") {
        const RankedTotals r = rank_in_totals(3.0, {9.0, 3.0, 7.0});
        CHECK(r.position == 1);
    }
    SUBCASE("absent values are an error") {
        CHECK_THROWS_AS(rank_in_totals(4.0, {3.0, 5.0}), std::invalid_argument);
    }
}

TEST_CASE("the static hybrid result always ranks first") {
    std::mt19937 rng(37);
    for (int it = 0; it < 60; ++it) {
        const std::uint32_t n = 3 + rng() % 10;
        const Graph g = oracles::random_connected(n, rng() % n, rng, it % 2 == 0);
        const WeightTable w = oracles::random_weights(g, rng);
        const Partition p = partition_fast(g, 0);
        const Labeling l = hybrid_explore(g, w, p, ExploreMode::Min);
        const NodeId t = static_cast<NodeId>(1 + rng() % (n - 1));
        if (!region_of(p, t)) continue;
        const PathSet set = enumerate_min_hop_paths(g, 0, t);
        const RankedTotals r = rank_of(l.sigma[t], set, w);
        CHECK(r.position == 1);
    }
}
