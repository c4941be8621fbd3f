// regionpath: graph partition / optimal path search library driver and
// experiment harness. Subcommands generate instances, partition and route
// them, enumerate baselines, and reproduce the probability and ranking
// experiments as CSV or SVG.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "regionpath/dynamics.hpp"
#include "regionpath/enumerate.hpp"
#include "regionpath/experiments.hpp"
#include "regionpath/explore.hpp"
#include "regionpath/graph.hpp"
#include "regionpath/graph_io.hpp"
#include "regionpath/inequality.hpp"
#include "regionpath/numfmt.hpp"
#include "regionpath/partition.hpp"
#include "regionpath/rng.hpp"
#include "regionpath/svg.hpp"

namespace rp = regionpath;

namespace {

struct GlobalOptions {
    std::uint64_t seed = 42;
    std::string out = "-";
    std::string format = "csv";

    bool svg() const { return format == "svg"; }
};

void emit(const GlobalOptions& global, const std::string& payload) {
    if (global.out == "-") {
        std::cout << payload;
        return;
    }
    std::ofstream file(global.out, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + global.out);
    file << payload;
}

void write_file(const std::string& path, const std::string& payload) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + path);
    file << payload;
}

void require_csv(const GlobalOptions& global, const char* what) {
    if (global.svg()) {
        throw std::invalid_argument(std::string(what) + " emits csv only");
    }
}

// Array specs: even:N, scaled:N:C, normal:N, dumbbell:N, gap:N.
rp::AssignmentArray parse_array_spec(const std::string& spec, rp::SplitMix64& rng) {
    std::istringstream in(spec);
    std::string kind, n_token, c_token;
    std::getline(in, kind, ':');
    std::getline(in, n_token, ':');
    std::getline(in, c_token, ':');
    if (n_token.empty()) throw std::invalid_argument("array spec needs a size: " + spec);
    const std::size_t n = static_cast<std::size_t>(std::stoull(n_token));
    if (kind == "even") return rp::even_array(n);
    if (kind == "scaled") {
        if (c_token.empty()) throw std::invalid_argument("scaled spec needs a factor: " + spec);
        return rp::scaled_array(n, std::stod(c_token));
    }
    if (kind == "normal") return rp::normal_array(n);
    if (kind == "dumbbell") return rp::dumbbell_array(n);
    if (kind == "gap") return rp::random_gap_array(n, rng);
    throw std::invalid_argument("unknown array kind: " + kind);
}

rp::DensityKind parse_density(const std::string& name) {
    if (name == "even") return rp::DensityKind::Even;
    if (name == "scaled") return rp::DensityKind::Scaled;
    if (name == "normal") return rp::DensityKind::Normal;
    if (name == "dumbbell") return rp::DensityKind::Dumbbell;
    if (name == "gap") return rp::DensityKind::RandomGap;
    throw std::invalid_argument("unknown density kind: " + name);
}

rp::WeightTable resolve_weights(const rp::GraphFile& file, const std::string& weights_path) {
    if (!weights_path.empty()) return rp::read_weights_file(weights_path, file.graph);
    if (file.weights) return *file.weights;
    throw std::invalid_argument("no weights: pass --weights or embed them in the graph file");
}

// --- gen ---------------------------------------------------------------

struct GenOptions {
    std::string kind = "grid";
    std::uint32_t k = 0;
    std::string array_spec;
    std::string weights_out;
};

void run_gen(const GlobalOptions& global, const GenOptions& opt) {
    require_csv(global, "gen");
    rp::Graph g;
    if (opt.kind == "grid") {
        if (opt.k == 0) throw std::invalid_argument("gen --kind grid needs --k >= 1");
        g = rp::grid_graph(opt.k);
    } else if (opt.kind == "dodeca") {
        g = rp::dodecahedron_graph();
    } else {
        throw std::invalid_argument("unknown graph kind: " + opt.kind);
    }

    std::optional<rp::WeightTable> weights;
    if (!opt.array_spec.empty()) {
        rp::SplitMix64 array_rng(rp::derive_seed(global.seed, 0));
        const rp::AssignmentArray a = parse_array_spec(opt.array_spec, array_rng);
        weights = rp::assign_weights(g, a, rp::derive_seed(global.seed, 1));
    }

    std::ostringstream graph_payload;
    if (!opt.weights_out.empty()) {
        if (!weights) throw std::invalid_argument("--weights-out needs --array");
        std::ostringstream weight_payload;
        rp::write_weights(weight_payload, g, *weights);
        write_file(opt.weights_out, weight_payload.str());
        rp::write_graph(graph_payload, g);
    } else {
        rp::write_graph(graph_payload, g, weights ? &*weights : nullptr);
    }
    emit(global, graph_payload.str());
}

// --- partition -----------------------------------------------------------

struct PartitionOptions {
    std::string graph_path;
    std::uint32_t source = 0;
    std::string algo = "fast";
};

void run_partition(const GlobalOptions& global, const PartitionOptions& opt) {
    require_csv(global, "partition");
    const rp::GraphFile file = rp::read_graph_file(opt.graph_path);
    rp::Partition p;
    if (opt.algo == "fast") {
        p = rp::partition_fast(file.graph, opt.source);
    } else if (opt.algo == "basic") {
        p = rp::partition_basic(file.graph, opt.source);
    } else {
        throw std::invalid_argument("unknown partition algorithm: " + opt.algo);
    }

    std::ostringstream out;
    out << "# regions=" << p.region_count() << '\n';
    out << "node,region\n";
    for (rp::NodeId v = 0; v < file.graph.node_count(); ++v) {
        if (const auto region = rp::region_of(p, v)) {
            out << v << ',' << *region << '\n';
        }
    }
    emit(global, out.str());
}

// --- route ---------------------------------------------------------------

struct RouteOptions {
    std::string graph_path;
    std::string weights_path;
    std::string index_path;
    std::string warray_path;
    std::uint32_t source = 0;
    std::uint32_t target = 0;
    std::string mode = "min";
    bool evolve = false;
    bool dynamic = false;
};

void run_route(const GlobalOptions& global, const RouteOptions& opt) {
    require_csv(global, "route");
    const rp::GraphFile file = rp::read_graph_file(opt.graph_path);
    const rp::Graph& g = file.graph;
    const rp::Partition p = rp::partition_fast(g, opt.source);

    rp::Labeling labeling;
    std::size_t sweeps = 0;
    if (opt.dynamic) {
        if (opt.evolve) {
            throw std::invalid_argument("--evolve applies to static weights only");
        }
        if (opt.index_path.empty() || opt.warray_path.empty()) {
            throw std::invalid_argument("--dynamic needs --index-file and --warray");
        }
        const rp::DynamicSystem sys = rp::make_dynamic_system_from_table(
            g, rp::read_index_table_file(opt.index_path, g),
            rp::read_value_list_file(opt.warray_path), global.seed);
        labeling = rp::hybrid_explore_dynamic(g, sys, p).labeling;
    } else {
        const rp::WeightTable w = resolve_weights(file, opt.weights_path);
        const rp::ExploreMode mode =
            opt.mode == "max" ? rp::ExploreMode::Max : rp::ExploreMode::Min;
        if (opt.mode != "min" && opt.mode != "max") {
            throw std::invalid_argument("mode must be min or max");
        }
        labeling = rp::hybrid_explore(g, w, p, mode);
        if (opt.evolve) {
            rp::EvolveResult evolved = rp::evolve(g, w, labeling);
            labeling = std::move(evolved.labeling);
            sweeps = evolved.sweeps;
        }
    }

    const rp::Path path = rp::trace_path(labeling, p, opt.target);
    std::ostringstream out;
    out << "node,sigma\n";
    for (rp::NodeId v : path.nodes) {
        out << v << ',' << rp::format_number(labeling.sigma[v]) << '\n';
    }
    out << "total=" << rp::format_number(labeling.sigma[opt.target]) << " hops="
        << path.arc_count() << " sweeps=" << sweeps << '\n';
    emit(global, out.str());
}

// --- enum ----------------------------------------------------------------

struct EnumOptions {
    std::string graph_path;
    std::string weights_path;
    std::uint32_t source = 0;
    std::uint32_t target = 0;
    std::string kind = "minhop";
    std::size_t cap = rp::kDefaultPathCap;
};

void run_enum(const GlobalOptions& global, const EnumOptions& opt) {
    require_csv(global, "enum");
    const rp::GraphFile file = rp::read_graph_file(opt.graph_path);
    const rp::WeightTable w = resolve_weights(file, opt.weights_path);

    rp::PathSet set;
    if (opt.kind == "simple") {
        set = rp::enumerate_simple_paths(file.graph, opt.source, opt.target, opt.cap);
    } else if (opt.kind == "minhop") {
        set = rp::enumerate_min_hop_paths(file.graph, opt.source, opt.target);
    } else {
        throw std::invalid_argument("kind must be simple or minhop");
    }

    std::ostringstream out;
    for (const rp::Path& path : set.paths) {
        for (std::size_t i = 0; i < path.nodes.size(); ++i) {
            if (i > 0) out << '>';
            out << path.nodes[i];
        }
        out << ";total=" << rp::format_number(rp::total_weight(path, w)) << '\n';
    }
    emit(global, out.str());
}

// --- anti ----------------------------------------------------------------

struct AntiOptions {
    std::uint64_t n = 170;
    std::uint32_t e = 0;  // 0: default to n - 1
    std::uint64_t trials = 1000;
    std::uint64_t mc_trials = 0;
    std::string svg_out;
};

std::string anti_chart(const rp::AntiHistogram& hist) {
    rp::ChartSeries bars;
    bars.name = "anti rate";
    bars.values = hist.rate_by_length;
    bars.kind = rp::ChartSeries::Kind::Bars;
    std::vector<std::string> labels;
    for (std::size_t len = 1; len <= hist.rate_by_length.size(); ++len) {
        labels.push_back(std::to_string(len));
    }
    return rp::render_histogram({bars}, labels, "Polygon Inequality Probability");
}

void run_anti(const GlobalOptions& global, const AntiOptions& opt) {
    const std::uint32_t e = opt.e != 0 ? opt.e : static_cast<std::uint32_t>(opt.n - 1);
    const rp::AntiStats stats = rp::anti_probability(opt.n);
    const rp::AntiHistogram hist =
        rp::split_histogram(static_cast<std::uint32_t>(opt.n), e, opt.trials, global.seed);

    if (!opt.svg_out.empty()) write_file(opt.svg_out, anti_chart(hist));
    if (global.svg()) {
        emit(global, anti_chart(hist));
        return;
    }

    std::ostringstream out;
    out << "# n=" << opt.n << " e=" << e << " trials=" << opt.trials << " seed=" << global.seed
        << '\n';
    out << "# rho=" << rp::format_number(stats.rho)
        << " rho_equal=" << rp::format_number(stats.rho_equal)
        << " rho_assign=" << rp::format_number(stats.rho_assign)
        << " phi=" << rp::format_number(stats.phi) << " anti_triples=" << stats.anti_triples
        << '\n';
    if (opt.mc_trials > 0) {
        out << "# mc=" << rp::format_number(
                   rp::triangle_monte_carlo(opt.n, opt.mc_trials, global.seed))
            << " mc_trials=" << opt.mc_trials << '\n';
    }
    out << "L,rate\n";
    for (std::size_t len = 1; len <= hist.rate_by_length.size(); ++len) {
        out << len << ',' << rp::format_number(hist.rate_by_length[len - 1]) << '\n';
    }
    emit(global, out.str());
}

// --- greedy ----------------------------------------------------------------

struct GreedyOptions {
    std::vector<std::uint32_t> k_list{5};
    std::string density = "even";
    double gap_c = 1.0;
    std::uint64_t trials = 1000;
    std::size_t array_card = 0;
};

void run_greedy(const GlobalOptions& global, const GreedyOptions& opt) {
    std::vector<rp::ComparisonStats> rows;
    for (std::uint32_t k : opt.k_list) {
        rows.push_back(rp::greedy_compare(k, parse_density(opt.density), opt.trials,
                                          global.seed, opt.gap_c, opt.array_card));
    }

    if (global.svg()) {
        rp::ChartSeries longer{"greedy longer", {}, rp::ChartSeries::Kind::Bars};
        rp::ChartSeries heavier{"greedy heavier", {}, rp::ChartSeries::Kind::Bars};
        rp::ChartSeries lighter{"greedy lighter", {}, rp::ChartSeries::Kind::Bars};
        std::vector<std::string> labels;
        for (const auto& row : rows) {
            const double trials = static_cast<double>(row.trials);
            longer.values.push_back(static_cast<double>(row.greedy_longer) / trials);
            heavier.values.push_back(static_cast<double>(row.weight_greater) / trials);
            lighter.values.push_back(static_cast<double>(row.weight_less) / trials);
            labels.push_back(std::to_string(row.k));
        }
        emit(global,
             rp::render_histogram({longer, heavier, lighter}, labels, "Greedy vs Hybrid"));
        return;
    }

    std::ostringstream out;
    out << "k,trials,greedy_longer,equal_length,weight_greater,weight_equal,weight_less\n";
    for (const auto& row : rows) {
        out << row.k << ',' << row.trials << ',' << row.greedy_longer << ','
            << row.equal_length << ',' << row.weight_greater << ',' << row.weight_equal << ','
            << row.weight_less << '\n';
    }
    emit(global, out.str());
}

// --- dynrank ----------------------------------------------------------------

struct DynRankOptions {
    std::uint32_t k = 6;
    std::size_t d_card = 10;
    std::vector<std::size_t> w_cards{20};
    double gap_c = 1.0;
    std::uint64_t trials = 200;
};

void run_dynrank(const GlobalOptions& global, const DynRankOptions& opt) {
    std::vector<rp::RankStats> rows;
    for (std::size_t w_card : opt.w_cards) {
        rows.push_back(rp::dynamic_rank_experiment(opt.k, opt.d_card, w_card, opt.gap_c,
                                                   opt.trials, global.seed));
    }

    if (global.svg()) {
        rp::ChartSeries beta{"avg beta", {}, rp::ChartSeries::Kind::Bars};
        rp::ChartSeries top{"top rate", {}, rp::ChartSeries::Kind::Line};
        rp::ChartSeries delta{"average status", {}, rp::ChartSeries::Kind::Line};
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            beta.values.push_back(rows[i].avg_beta);
            top.values.push_back(rows[i].top_rate);
            delta.values.push_back(rows[i].delta);
            labels.push_back(std::to_string(opt.w_cards[i]));
        }
        emit(global, rp::render_histogram({beta, top, delta}, labels, "Dynamic Rank"));
        return;
    }

    std::ostringstream out;
    out << "k,d_card,w_card,gap,trials,top_rate,worst_position,avg_alpha,avg_beta,delta\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const rp::RankStats& r = rows[i];
        out << opt.k << ',' << opt.d_card << ',' << opt.w_cards[i] << ','
            << rp::format_number(opt.gap_c) << ',' << r.trials << ','
            << rp::format_number(r.top_rate) << ',' << r.worst_position << ','
            << rp::format_number(r.avg_alpha) << ',' << rp::format_number(r.avg_beta) << ','
            << rp::format_number(r.delta) << '\n';
    }
    emit(global, out.str());
}

// --- probe ----------------------------------------------------------------

struct ProbeOptions {
    std::uint32_t k = 3;
    std::vector<std::size_t> y_cards;
    std::size_t w_start = 2;
    std::size_t d_card = 10;
    std::uint64_t trials = 10;
};

void run_probe(const GlobalOptions& global, const ProbeOptions& opt) {
    const rp::EtaCurve curve =
        rp::regularization_probe(opt.k, opt.y_cards, opt.w_start, opt.trials, global.seed,
                                 opt.d_card);

    if (global.svg()) {
        rp::ChartSeries eta{"eta", {}, rp::ChartSeries::Kind::Line};
        rp::ChartSeries log_eta{"log10 eta", {}, rp::ChartSeries::Kind::Line};
        std::vector<std::string> labels;
        for (const rp::EtaPoint& point : curve.points) {
            eta.values.push_back(point.eta);
            log_eta.values.push_back(point.log10_eta);
            labels.push_back(std::to_string(point.y_card));
        }
        emit(global, rp::render_histogram({eta, log_eta}, labels, "Regularization Ratio"));
        return;
    }

    std::ostringstream out;
    out << "y_card,w_card,eta,log10_eta\n";
    for (const rp::EtaPoint& point : curve.points) {
        out << point.y_card << ',' << point.w_card << ',' << rp::format_number(point.eta)
            << ',' << rp::format_number(point.log10_eta) << '\n';
    }
    emit(global, out.str());
}

// --- bench ----------------------------------------------------------------

struct BenchOptions {
    std::vector<std::uint32_t> k_list{20, 40, 60};
    std::size_t reps = 5;
};

void run_bench(const GlobalOptions& global, const BenchOptions& opt) {
    const auto rows = rp::benchmark(opt.k_list, opt.reps, global.seed);

    if (global.svg()) {
        rp::ChartSeries partition{"partition us", {}, rp::ChartSeries::Kind::Line};
        rp::ChartSeries explore{"explore us", {}, rp::ChartSeries::Kind::Line};
        std::vector<std::string> labels;
        for (const rp::BenchRow& row : rows) {
            partition.values.push_back(row.partition_us);
            explore.values.push_back(row.explore_us);
            labels.push_back(std::to_string(row.k));
        }
        emit(global, rp::render_histogram({partition, explore}, labels, "Runtime"));
        return;
    }

    std::ostringstream out;
    out << "k,nodes,arcs,partition_us,explore_us\n";
    for (const rp::BenchRow& row : rows) {
        out << row.k << ',' << row.nodes << ',' << row.arcs << ','
            << rp::format_number(row.partition_us) << ',' << rp::format_number(row.explore_us)
            << '\n';
    }
    emit(global, out.str());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"region-partition optimal path search and experiments"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    app.set_config("--config");

    GlobalOptions global;
    app.add_option("--seed", global.seed, "base seed for every random draw");
    app.add_option("--out", global.out, "output file, - for stdout");
    app.add_option("--format", global.format, "csv or svg")
        ->check(CLI::IsMember({"csv", "svg"}));

    GenOptions gen;
    CLI::App* gen_cmd = app.add_subcommand("gen", "generate a graph instance");
    gen_cmd->add_option("--kind", gen.kind, "grid or dodeca");
    gen_cmd->add_option("--k", gen.k, "grid side length");
    gen_cmd->add_option("--array", gen.array_spec,
                        "weight assignment array, e.g. even:5 scaled:5:2 gap:10");
    gen_cmd->add_option("--weights-out", gen.weights_out, "write weights to a separate file");

    PartitionOptions partition;
    CLI::App* partition_cmd = app.add_subcommand("partition", "region partition from a source");
    partition_cmd->add_option("--graph", partition.graph_path, "graph file")->required();
    partition_cmd->add_option("--source", partition.source, "source node");
    partition_cmd->add_option("--algo", partition.algo, "fast or basic");

    RouteOptions route;
    CLI::App* route_cmd = app.add_subcommand("route", "hybrid optimal path search");
    route_cmd->add_option("--graph", route.graph_path, "graph file")->required();
    route_cmd->add_option("--weights", route.weights_path, "separate weight file");
    route_cmd->add_option("--source", route.source, "source node");
    route_cmd->add_option("--target", route.target, "target node")->required();
    route_cmd->add_option("--mode", route.mode, "min or max");
    route_cmd->add_flag("--evolve", route.evolve, "relax to the unrestricted fixpoint");
    route_cmd->add_flag("--dynamic", route.dynamic, "dynamic weight system");
    route_cmd->add_option("--index-file", route.index_path, "arc index table (a u v i)");
    route_cmd->add_option("--warray", route.warray_path, "weight array, one value per line");

    EnumOptions enumerate;
    CLI::App* enum_cmd = app.add_subcommand("enum", "enumerate baseline path sets");
    enum_cmd->add_option("--graph", enumerate.graph_path, "graph file")->required();
    enum_cmd->add_option("--weights", enumerate.weights_path, "separate weight file");
    enum_cmd->add_option("--source", enumerate.source, "source node");
    enum_cmd->add_option("--target", enumerate.target, "target node")->required();
    enum_cmd->add_option("--kind", enumerate.kind, "simple or minhop");
    enum_cmd->add_option("--cap", enumerate.cap, "path count limit");

    AntiOptions anti;
    CLI::App* anti_cmd = app.add_subcommand("anti", "polygon inequality experiments");
    anti_cmd->add_option("--n", anti.n, "assignment array maximum");
    anti_cmd->add_option("--e", anti.e, "polygon edge count (default n-1)");
    anti_cmd->add_option("--trials", anti.trials, "split simulation trials");
    anti_cmd->add_option("--mc-trials", anti.mc_trials, "triangle monte carlo trials");
    anti_cmd->add_option("--svg", anti.svg_out, "also write the histogram as SVG");

    GreedyOptions greedy;
    CLI::App* greedy_cmd = app.add_subcommand("greedy", "greedy filter vs hybrid");
    greedy_cmd->add_option("--k", greedy.k_list, "grid side lengths");
    greedy_cmd->add_option("--density", greedy.density,
                           "assignment density: even scaled normal dumbbell gap");
    greedy_cmd->add_option("--gap-c", greedy.gap_c, "scale factor for scaled density");
    greedy_cmd->add_option("--trials", greedy.trials, "trials per k");
    greedy_cmd->add_option("--array-card", greedy.array_card,
                           "assignment array size (default k)");

    DynRankOptions dynrank;
    CLI::App* dynrank_cmd = app.add_subcommand("dynrank", "dynamic ranking experiment");
    dynrank_cmd->add_option("--k", dynrank.k, "grid side length");
    dynrank_cmd->add_option("--dcard", dynrank.d_card, "index array size");
    dynrank_cmd->add_option("--wcard", dynrank.w_cards, "weight array sizes");
    dynrank_cmd->add_option("--gap", dynrank.gap_c, "weight array gap c");
    dynrank_cmd->add_option("--trials", dynrank.trials, "trials per size");

    ProbeOptions probe;
    CLI::App* probe_cmd = app.add_subcommand("probe", "regularization switch search");
    probe_cmd->add_option("--k", probe.k, "grid side length");
    probe_cmd->add_option("--y", probe.y_cards, "Y cardinalities to probe")->required();
    probe_cmd->add_option("--wstart", probe.w_start, "first |w| candidate");
    probe_cmd->add_option("--dcard", probe.d_card, "index array size");
    probe_cmd->add_option("--trials", probe.trials, "trials per |w| candidate");

    BenchOptions bench;
    CLI::App* bench_cmd = app.add_subcommand("bench", "partition/explore runtime medians");
    bench_cmd->add_option("--k", bench.k_list, "grid side lengths");
    bench_cmd->add_option("--reps", bench.reps, "repetitions per instance (>= 3)");

    try {
        app.parse(argc, argv);
        if (gen_cmd->parsed()) run_gen(global, gen);
        if (partition_cmd->parsed()) run_partition(global, partition);
        if (route_cmd->parsed()) run_route(global, route);
        if (enum_cmd->parsed()) run_enum(global, enumerate);
        if (anti_cmd->parsed()) run_anti(global, anti);
        if (greedy_cmd->parsed()) run_greedy(global, greedy);
        if (dynrank_cmd->parsed()) run_dynrank(global, dynrank);
        if (probe_cmd->parsed()) run_probe(global, probe);
        if (bench_cmd->parsed()) run_bench(global, bench);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const rp::CapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
