// Acceptance suite: runs every release criterion end to end and prints one
// PASS/FAIL line per criterion. Soft checks print WARN but do not fail below
// their hard threshold. Exit status is the number of failed criteria.
//
// Usage: acceptance <path-to-regionpath-cli>

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "regionpath/dynamics.hpp"
#include "regionpath/enumerate.hpp"
#include "regionpath/experiments.hpp"
#include "regionpath/explore.hpp"
#include "regionpath/graph.hpp"
#include "regionpath/inequality.hpp"
#include "regionpath/partition.hpp"

namespace fs = std::filesystem;
using namespace regionpath;
using Clock = std::chrono::steady_clock;

namespace {

constexpr std::uint64_t kSeed = 42;

int failures = 0;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(int index, const std::string& name, bool pass, const std::string& detail) {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << index << ": " << name;
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << std::endl;
    if (!pass) ++failures;
}

std::string fmt(double v) {
    std::ostringstream out;
    out.precision(4);
    out << v;
    return out.str();
}

// --- 1: enumeration exactness ---------------------------------------------

void criterion_1() {
    const auto start = Clock::now();
    const std::size_t min_hop_5 = enumerate_min_hop_paths(grid_graph(5), 0, 24).paths.size();
    const std::size_t simple_5 = enumerate_simple_paths(grid_graph(5), 0, 24).paths.size();
    const std::size_t simple_4 = enumerate_simple_paths(grid_graph(4), 0, 15).paths.size();
    const std::uint64_t oracle_4 = oracles::simple_path_count(grid_graph(4), 0, 15);
    const double elapsed = seconds_since(start);
    const bool pass =
        min_hop_5 == 70 && simple_5 == 8512 && simple_4 == 184 && oracle_4 == 184 &&
        elapsed < 5.0;
    report(1, "enumeration exactness (70 / 8512 / 184)", pass,
           "minhop5=" + std::to_string(min_hop_5) + " simple5=" + std::to_string(simple_5) +
               " simple4=" + std::to_string(simple_4) + " oracle4=" +
               std::to_string(oracle_4) + " elapsed=" + fmt(elapsed) + "s");
}

// --- 2: combinatorial law ---------------------------------------------------

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

void criterion_2() {
    bool pass = true;
    std::string detail;
    for (NodeId k = 2; k <= 10; ++k) {
        const GridCorners c = grid_corners(k);
        const std::uint64_t counted = count_min_hop_paths(grid_graph(k), c.nw, c.se);
        const std::uint64_t expected = binomial(2 * k - 2, k - 1);
        if (counted != expected) {
            pass = false;
            detail = "k=" + std::to_string(k) + " counted=" + std::to_string(counted) +
                     " expected=" + std::to_string(expected);
        }
    }
    report(2, "count_min_hop_paths equals C(2k-2, k-1) for k=2..10", pass, detail);
}

// --- 3 & 4: oracle equivalence corpus ---------------------------------------

struct CorpusInstance {
    Graph g;
    WeightTable w;
};

std::vector<CorpusInstance> corpus_500() {
    std::vector<CorpusInstance> corpus;
    std::mt19937 rng(20240601);
    corpus.reserve(500);
    for (int it = 0; it < 500; ++it) {
        const std::uint32_t n = 2 + rng() % 11;
        Graph g = oracles::random_connected(n, rng() % (2 * n), rng, it % 2 == 0);
        WeightTable w = oracles::random_weights(g, rng);
        corpus.push_back({std::move(g), std::move(w)});
    }
    return corpus;
}

void criteria_3_4(const std::vector<CorpusInstance>& corpus) {
    const auto start = Clock::now();
    bool hops_ok = true, totals_ok = true, evolve_ok = true, dominance_ok = true;
    std::string detail3, detail4;
    for (const auto& [g, w] : corpus) {
        const Partition p = partition_fast(g, 0);
        const Labeling l = hybrid_explore(g, w, p, ExploreMode::Min);
        const auto dist = oracles::bfs_levels(g, 0);
        const EvolveResult evolved = evolve(g, w, l);
        const auto exact = oracles::dijkstra_distances(g, w, 0);
        for (NodeId v = 0; v < g.node_count(); ++v) {
            if (dist[v] < 0) continue;
            const Path path = trace_path(l, p, v);
            if (path.arc_count() != static_cast<std::size_t>(dist[v])) {
                hops_ok = false;
                detail3 = "hop mismatch at node " + std::to_string(v);
            }
            Weight best = l.sigma[v];
            const PathSet set = enumerate_min_hop_paths(g, 0, v);
            for (const Path& q : set.paths) best = std::min(best, total_weight(q, w));
            if (l.sigma[v] != best) {
                totals_ok = false;
                detail3 = "total mismatch at node " + std::to_string(v);
            }
            if (evolved.labeling.sigma[v] != exact[v]) {
                evolve_ok = false;
                detail4 = "distance mismatch at node " + std::to_string(v);
            }
            if (evolved.labeling.sigma[v] > l.sigma[v]) {
                dominance_ok = false;
                detail4 = "evolved exceeds hybrid at node " + std::to_string(v);
            }
        }
    }
    const double elapsed = seconds_since(start);
    const bool pass3 = hops_ok && totals_ok && elapsed < 30.0;
    report(3, "hybrid = min-hop optimum on 500 random graphs", pass3,
           detail3.empty() ? "500 graphs, elapsed=" + fmt(elapsed) + "s" : detail3);
    report(4, "evolution = classic shortest distances, dominated by hybrid",
           evolve_ok && dominance_ok, detail4.empty() ? "500 graphs" : detail4);
}

// --- 5: Inference 1 ---------------------------------------------------------

void criterion_5() {
    bool pass = true;
    std::string detail;
    std::mt19937 rng(777);
    for (int it = 0; it < 50 && pass; ++it) {
        const std::uint32_t n = 2 + rng() % 30;
        const Graph g = oracles::random_connected(n, rng() % n, rng, it % 2 == 0);
        const Weight c = 1.0 + static_cast<double>(rng() % 9);
        WeightTable w;
        for (const auto& [u, v] : g.arcs_sorted()) w.set(u, v, c);
        const Partition p = partition_fast(g, 0);
        const Labeling l = hybrid_explore(g, w, p, ExploreMode::Min);
        for (NodeId v = 0; v < n; ++v) {
            const auto region = region_of(p, v);
            if (!region) continue;
            if (l.sigma[v] != c * static_cast<Weight>(*region - 1)) {
                pass = false;
                detail = "sigma mismatch at node " + std::to_string(v);
            }
        }
    }
    report(5, "equal weights: sigma = c * (region - 1) on 50 instances", pass, detail);
}

// --- 6: Eq. 3 validation ----------------------------------------------------

void criterion_6() {
    const auto start = Clock::now();
    bool brute_ok = true;
    for (std::uint64_t n = 3; n <= 200 && brute_ok; ++n) {
        std::uint64_t brute = 0;
        for (std::uint64_t a = 1; a <= n; ++a) {
            for (std::uint64_t b = a + 1; b <= n; ++b) {
                for (std::uint64_t c = b + 1; c <= n; ++c) {
                    if (a + b < c) ++brute;
                }
            }
        }
        brute_ok = anti_triples_exact(n) == brute;
    }
    const AntiStats stats = anti_probability(170);
    const double mc = triangle_monte_carlo(170, 1'000'000, kSeed);
    const double elapsed = seconds_since(start);
    const bool rho_ok = stats.rho >= 0.46 && stats.rho <= 0.50;
    const bool assign_ok = stats.rho_assign >= 0.15 && stats.rho_assign <= 0.18;
    const bool mc_ok = std::abs(mc - stats.rho) <= 0.005;
    report(6, "closed form vs brute force and monte carlo",
           brute_ok && rho_ok && assign_ok && mc_ok && elapsed < 60.0,
           "rho=" + fmt(stats.rho) + " rho_assign=" + fmt(stats.rho_assign) + " mc=" +
               fmt(mc) + " elapsed=" + fmt(elapsed) + "s");
}

// --- 7: Figure 3 reproduction ----------------------------------------------

void criterion_7() {
    const AntiHistogram hist = split_histogram(170, 169, 1000, kSeed);
    bool low_ok = true;
    for (std::uint32_t len = 1; len <= 60; ++len) {
        low_ok = low_ok && hist.rate_by_length[len - 1] < 0.005;
    }
    const double rate84 = hist.rate_by_length[83];
    const bool rate84_ok = rate84 >= 0.07 && rate84 <= 0.14;
    report(7, "split histogram: rate(L<=60) < 0.005 and rate(84) in [0.07, 0.14]",
           low_ok && rate84_ok,
           std::string("rate(60)=") + fmt(hist.rate_by_length[59]) + " rate(84)=" +
               fmt(rate84) +
               (rate84_ok ? ""
                          : "; a uniform split into 84 vs 85 wins with probability "
                            "~0.447 analytically (Z ~ 0.134), so no uniform-split "
                            "simulation can land in the target band"));
}

// --- 8: dynamical regularization --------------------------------------------

void criterion_8() {
    const RankStats c5 = dynamic_rank_experiment(6, 10, 20, 5.0, 200, kSeed);
    const RankStats c1 = dynamic_rank_experiment(6, 10, 20, 1.0, 200, kSeed);
    const bool top_ok = c5.top_rate == 1.0;
    const double worst_ratio = static_cast<double>(c1.worst_position) / c1.avg_beta;
    const bool worst_hard_ok = worst_ratio <= 0.45;
    if (worst_ratio >= 0.3 && worst_hard_ok) {
        std::cout << "WARN criterion 8: worst_position/avg_beta = " << fmt(worst_ratio)
                  << " above the 0.3 soft bound (hard bound 0.45)" << std::endl;
    }
    report(8, "dynamic ranks: top_rate(c=5) = 1.0, worst/beta(c=1) < 0.3 soft",
           top_ok && worst_hard_ok,
           "top_rate=" + fmt(c5.top_rate) + " worst/beta=" + fmt(worst_ratio) +
               (top_ok ? ""
                       : "; table-lookup weight functions are scale-invariant, so the "
                         "gap c cannot raise the top rate: measured rank statistics "
                         "are identical for c=1 and c=5"));
}

// --- 9: scaling shape --------------------------------------------------------

void criterion_9() {
    const auto rows = benchmark({50, 100, 200}, 21, kSeed);
    bool pass = true;
    std::ostringstream detail;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double partition_ratio = rows[i].partition_us / rows[i - 1].partition_us;
        const double explore_ratio = rows[i].explore_us / rows[i - 1].explore_us;
        // One k-doubling quadruples the arc count, i.e. two arc doublings.
        const double per_arc_doubling = std::sqrt(partition_ratio);
        pass = pass && per_arc_doubling <= 2.6 && explore_ratio >= 3.0 && explore_ratio <= 6.0;
        detail << "k" << rows[i - 1].k << "->k" << rows[i].k << ": partition/arc-dbl="
               << fmt(per_arc_doubling) << " explore=" << fmt(explore_ratio) << " ";
    }
    report(9, "scaling: partition <= 2.6x per arc doubling, explore in [3, 6] per k doubling",
           pass, detail.str());
}

// --- 10: CLI determinism ------------------------------------------------------

std::string capture(const std::string& command) {
    FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
    if (pipe == nullptr) return "<popen failed>";
    std::string out;
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) out.append(buffer, got);
    const int status = pclose(pipe);
    if (WEXITSTATUS(status) != 0) return "<exit " + std::to_string(WEXITSTATUS(status)) + ">";
    return out;
}

void criterion_10(const std::string& cli) {
    if (cli.empty()) {
        report(10, "CLI determinism", false, "no CLI path given");
        return;
    }
    const fs::path dir = fs::temp_directory_path() / "regionpath_acceptance";
    fs::create_directories(dir);
    const std::string graph = (dir / "g4.txt").string();
    capture(cli + " gen --kind grid --k 4 --array even:4 --out " + graph);

    // Every subcommand whose output is a pure function of flags and seed;
    // bench reports measured wall times, which no seed can pin down.
    const std::vector<std::string> commands = {
        cli + " gen --kind grid --k 4 --array gap:6 --seed 5",
        cli + " gen --kind dodeca",
        cli + " partition --graph " + graph + " --source 0",
        cli + " route --graph " + graph + " --source 0 --target 15 --seed 3",
        cli + " route --graph " + graph + " --source 0 --target 15 --evolve",
        cli + " enum --graph " + graph + " --source 0 --target 15 --kind minhop",
        cli + " enum --graph " + graph + " --source 0 --target 15 --kind simple",
        cli + " anti --n 170 --trials 200 --seed 6",
        cli + " anti --n 80 --trials 50 --seed 6 --format svg",
        cli + " greedy --k 5 --trials 100 --seed 8",
        cli + " greedy --k 5 --trials 60 --seed 8 --density dumbbell --format svg",
        cli + " dynrank --k 5 --wcard 10 --trials 50 --seed 9",
        cli + " probe --k 3 --y 1 --y 2 --trials 4 --seed 10",
    };
    bool pass = true;
    std::string detail = std::to_string(commands.size()) + " commands, bench excluded (wall time)";
    for (const std::string& command : commands) {
        const std::string first = capture(command);
        const std::string second = capture(command);
        if (first != second || first.empty() || first.rfind("<exit", 0) == 0) {
            pass = false;
            detail = "mismatch or failure: " + command + " -> " +
                     first.substr(0, std::min<std::size_t>(first.size(), 40));
            break;
        }
    }
    report(10, "CLI runs are byte-identical for identical flags and seed", pass, detail);
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";

    criterion_1();
    criterion_2();
    const auto corpus = corpus_500();
    criteria_3_4(corpus);
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10(cli);

    if (failures == 0) {
        std::cout << "all criteria passed" << std::endl;
    } else {
        std::cout << failures << " criteria failed" << std::endl;
    }
    return failures;
}
