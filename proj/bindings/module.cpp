#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "regionpath/dynamics.hpp"
#include "regionpath/enumerate.hpp"
#include "regionpath/experiments.hpp"
#include "regionpath/explore.hpp"
#include "regionpath/graph.hpp"
#include "regionpath/graph_io.hpp"
#include "regionpath/inequality.hpp"
#include "regionpath/partition.hpp"
#include "regionpath/rng.hpp"
#include "regionpath/svg.hpp"

namespace py = pybind11;
using namespace regionpath;

PYBIND11_MODULE(_core, m) {
    m.doc() = "region-partition optimal path search: graphs, partition, hybrid "
              "exploration, enumeration baselines, inequality and dynamics experiments";

    py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);

    py::class_<SplitMix64>(m, "SplitMix64")
        .def(py::init<std::uint64_t>(), py::arg("seed"))
        .def("next", &SplitMix64::next)
        .def("below", &SplitMix64::below, py::arg("bound"))
        .def("unit", &SplitMix64::unit);
    m.def("derive_seed", &derive_seed, py::arg("seed"), py::arg("stream"));

    py::enum_<GraphMode>(m, "GraphMode")
        .value("Simple", GraphMode::Simple)
        .value("Directed", GraphMode::Directed)
        .value("Mixed", GraphMode::Mixed);

    py::enum_<DensityKind>(m, "DensityKind")
        .value("Even", DensityKind::Even)
        .value("Scaled", DensityKind::Scaled)
        .value("Normal", DensityKind::Normal)
        .value("Dumbbell", DensityKind::Dumbbell)
        .value("RandomGap", DensityKind::RandomGap);

    py::enum_<ExploreMode>(m, "ExploreMode")
        .value("Min", ExploreMode::Min)
        .value("Max", ExploreMode::Max);

    py::enum_<PathKind>(m, "PathKind")
        .value("Simple", PathKind::Simple)
        .value("MinHop", PathKind::MinHop);

    py::class_<Graph>(m, "Graph")
        .def_static(
            "from_arcs",
            [](NodeId n, const std::vector<Arc>& arcs) { return Graph::from_arcs(n, arcs); },
            py::arg("n"), py::arg("arcs"))
        .def_property_readonly("node_count", &Graph::node_count)
        .def_property_readonly("arc_count", &Graph::arc_count)
        .def_property_readonly("mode", &Graph::mode)
        .def("out_neighbors",
             [](const Graph& g, NodeId u) {
                 const auto s = g.out_neighbors(u);
                 return std::vector<NodeId>(s.begin(), s.end());
             },
             py::arg("u"))
        .def("in_neighbors",
             [](const Graph& g, NodeId u) {
                 const auto s = g.in_neighbors(u);
                 return std::vector<NodeId>(s.begin(), s.end());
             },
             py::arg("u"))
        .def("has_arc", &Graph::has_arc, py::arg("u"), py::arg("v"))
        .def("arcs_sorted", &Graph::arcs_sorted);

    py::class_<GridCorners>(m, "GridCorners")
        .def_readonly("nw", &GridCorners::nw)
        .def_readonly("ne", &GridCorners::ne)
        .def_readonly("sw", &GridCorners::sw)
        .def_readonly("se", &GridCorners::se);

    m.def("grid_graph", &grid_graph, py::arg("k"));
    m.def("grid_corners", &grid_corners, py::arg("k"));
    m.def("dodecahedron_graph", &dodecahedron_graph);
    m.def("classify", &classify, py::arg("graph"));

    py::class_<AssignmentArray>(m, "AssignmentArray")
        .def_readonly("values", &AssignmentArray::values)
        .def_readonly("kind", &AssignmentArray::kind)
        .def("__len__", &AssignmentArray::size);
    m.def("even_array", &even_array, py::arg("n"));
    m.def("scaled_array", &scaled_array, py::arg("n"), py::arg("c"));
    m.def("normal_array", &normal_array, py::arg("n"));
    m.def("dumbbell_array", &dumbbell_array, py::arg("n"));
    m.def("random_gap_array", &random_gap_array, py::arg("n"), py::arg("rng"));

    py::class_<WeightTable>(m, "WeightTable")
        .def(py::init<>())
        .def("at", &WeightTable::at, py::arg("u"), py::arg("v"))
        .def("find", &WeightTable::find, py::arg("u"), py::arg("v"))
        .def("set", &WeightTable::set, py::arg("u"), py::arg("v"), py::arg("w"))
        .def("__len__", &WeightTable::size);
    m.def("assign_weights", &assign_weights, py::arg("graph"), py::arg("array"),
          py::arg("seed"));

    py::class_<Partition>(m, "Partition")
        .def_readonly("regions", &Partition::regions)
        .def_readonly("region_index", &Partition::region_index)
        .def_readonly("source", &Partition::source)
        .def_property_readonly("region_count", &Partition::region_count);
    m.def("partition_basic", &partition_basic, py::arg("graph"), py::arg("source"));
    m.def("partition_fast", &partition_fast, py::arg("graph"), py::arg("source"));
    m.def("region_of", &region_of, py::arg("partition"), py::arg("v"));

    py::class_<Labeling>(m, "Labeling")
        .def_readonly("sigma", &Labeling::sigma)
        .def_readonly("pred", &Labeling::pred)
        .def_readonly("mode", &Labeling::mode)
        .def_readonly("source", &Labeling::source)
        .def("is_reached", &Labeling::is_reached, py::arg("v"));

    py::class_<Path>(m, "Path")
        .def(py::init([](std::vector<NodeId> nodes) { return Path{std::move(nodes)}; }),
             py::arg("nodes"))
        .def_readonly("nodes", &Path::nodes)
        .def_property_readonly("arc_count", &Path::arc_count);

    m.def("hybrid_explore", &hybrid_explore, py::arg("graph"), py::arg("weights"),
          py::arg("partition"), py::arg("mode") = ExploreMode::Min);
    m.def("trace_path", &trace_path, py::arg("labeling"), py::arg("partition"),
          py::arg("target"));
    m.def("total_weight", &total_weight, py::arg("path"), py::arg("weights"));

    py::class_<EvolveResult>(m, "EvolveResult")
        .def_readonly("labeling", &EvolveResult::labeling)
        .def_readonly("sweeps", &EvolveResult::sweeps);
    m.def("evolve", &evolve, py::arg("graph"), py::arg("weights"), py::arg("init"));

    py::class_<PathSet>(m, "PathSet")
        .def_readonly("paths", &PathSet::paths)
        .def_readonly("kind", &PathSet::kind)
        .def("__len__", [](const PathSet& s) { return s.paths.size(); });
    m.def("enumerate_simple_paths", &enumerate_simple_paths, py::arg("graph"), py::arg("s"),
          py::arg("t"), py::arg("cap") = kDefaultPathCap);
    m.def("enumerate_min_hop_paths", &enumerate_min_hop_paths, py::arg("graph"), py::arg("s"),
          py::arg("t"));
    m.def("count_min_hop_paths", &count_min_hop_paths, py::arg("graph"), py::arg("s"),
          py::arg("t"));

    py::class_<RankedTotals>(m, "RankedTotals")
        .def_readonly("totals", &RankedTotals::totals)
        .def_readonly("position", &RankedTotals::position);
    m.def("rank_of",
          py::overload_cast<Weight, const PathSet&, const WeightTable&>(&rank_of),
          py::arg("value"), py::arg("path_set"), py::arg("weights"));
    m.def("rank_of",
          py::overload_cast<Weight, const PathSet&, const DynamicSystem&>(&rank_of),
          py::arg("value"), py::arg("path_set"), py::arg("system"));

    py::enum_<SplitOutcome>(m, "SplitOutcome")
        .value("Holds", SplitOutcome::Holds)
        .value("Anti", SplitOutcome::Anti);
    m.def("check_split",
          [](std::vector<double> a1, std::vector<double> a2) {
              return check_split(GroupSplit{std::move(a1), std::move(a2)});
          },
          py::arg("a1"), py::arg("a2"));
    m.def("anti_triples_exact", &anti_triples_exact, py::arg("n"));

    py::class_<AntiStats>(m, "AntiStats")
        .def_readonly("n", &AntiStats::n)
        .def_readonly("anti_triples", &AntiStats::anti_triples)
        .def_readonly("rho", &AntiStats::rho)
        .def_readonly("rho_equal", &AntiStats::rho_equal)
        .def_readonly("rho_assign", &AntiStats::rho_assign)
        .def_readonly("phi", &AntiStats::phi);
    m.def("anti_probability", &anti_probability, py::arg("n"));
    m.def("triangle_monte_carlo", &triangle_monte_carlo, py::arg("n"), py::arg("trials"),
          py::arg("seed"));

    py::class_<AntiHistogram>(m, "AntiHistogram")
        .def_readonly("array_max", &AntiHistogram::array_max)
        .def_readonly("edge_count", &AntiHistogram::edge_count)
        .def_readonly("trials", &AntiHistogram::trials)
        .def_readonly("rate_by_length", &AntiHistogram::rate_by_length);
    m.def("split_histogram", &split_histogram, py::arg("a_max"), py::arg("e"),
          py::arg("trials"), py::arg("seed"));

    py::class_<DynamicSystem>(m, "DynamicSystem")
        .def_readonly("weight_values", &DynamicSystem::weight_values)
        .def_readonly("source_index", &DynamicSystem::source_index)
        .def_readonly("source_weight", &DynamicSystem::source_weight)
        .def("arc_index", &DynamicSystem::arc_index, py::arg("u"), py::arg("v"));
    m.def("make_dynamic_system", &make_dynamic_system, py::arg("graph"), py::arg("d"),
          py::arg("w"), py::arg("seed"));
    m.def("dyn_weight", &dyn_weight, py::arg("system"), py::arg("t"),
          py::arg("accumulated_index"));

    py::class_<DynamicLabeling>(m, "DynamicLabeling")
        .def_readonly("labeling", &DynamicLabeling::labeling)
        .def_readonly("idx", &DynamicLabeling::idx);
    m.def("hybrid_explore_dynamic", &hybrid_explore_dynamic, py::arg("graph"),
          py::arg("system"), py::arg("partition"));
    m.def("path_total_dynamic", &path_total_dynamic, py::arg("path"), py::arg("system"));

    m.def("greedy_hybrid", &greedy_hybrid, py::arg("graph"), py::arg("weights"), py::arg("s"),
          py::arg("t"), py::arg("batch") = 1);

    py::class_<ComparisonStats>(m, "ComparisonStats")
        .def_readonly("k", &ComparisonStats::k)
        .def_readonly("trials", &ComparisonStats::trials)
        .def_readonly("greedy_longer", &ComparisonStats::greedy_longer)
        .def_readonly("equal_length", &ComparisonStats::equal_length)
        .def_readonly("weight_greater", &ComparisonStats::weight_greater)
        .def_readonly("weight_equal", &ComparisonStats::weight_equal)
        .def_readonly("weight_less", &ComparisonStats::weight_less);
    m.def("greedy_compare", &greedy_compare, py::arg("k"), py::arg("kind"), py::arg("trials"),
          py::arg("seed"), py::arg("gap_c") = 1.0, py::arg("array_card") = 0);

    py::class_<RankStats>(m, "RankStats")
        .def_readonly("trials", &RankStats::trials)
        .def_readonly("top_rate", &RankStats::top_rate)
        .def_readonly("worst_position", &RankStats::worst_position)
        .def_readonly("avg_alpha", &RankStats::avg_alpha)
        .def_readonly("avg_beta", &RankStats::avg_beta)
        .def_readonly("delta", &RankStats::delta);
    m.def("dynamic_rank_experiment", &dynamic_rank_experiment, py::arg("k"), py::arg("d_card"),
          py::arg("w_card"), py::arg("gap_c"), py::arg("trials"), py::arg("seed"),
          py::arg("cap") = kDefaultPathCap);

    py::class_<EtaPoint>(m, "EtaPoint")
        .def_readonly("y_card", &EtaPoint::y_card)
        .def_readonly("w_card", &EtaPoint::w_card)
        .def_readonly("eta", &EtaPoint::eta)
        .def_readonly("log10_eta", &EtaPoint::log10_eta);
    py::class_<EtaCurve>(m, "EtaCurve").def_readonly("points", &EtaCurve::points);
    m.def("regularization_probe", &regularization_probe, py::arg("k"), py::arg("y_cards"),
          py::arg("w_card_start"), py::arg("trials"), py::arg("seed"),
          py::arg("d_card") = 10, py::arg("w_card_limit") = 10'000);

    py::class_<BenchRow>(m, "BenchRow")
        .def_readonly("k", &BenchRow::k)
        .def_readonly("nodes", &BenchRow::nodes)
        .def_readonly("arcs", &BenchRow::arcs)
        .def_readonly("partition_us", &BenchRow::partition_us)
        .def_readonly("explore_us", &BenchRow::explore_us);
    m.def("benchmark", &benchmark, py::arg("k_list"), py::arg("reps"), py::arg("seed") = 1);

    py::class_<ChartSeries>(m, "ChartSeries")
        .def(py::init([](std::string name, std::vector<double> values, bool line) {
                 ChartSeries s;
                 s.name = std::move(name);
                 s.values = std::move(values);
                 s.kind = line ? ChartSeries::Kind::Line : ChartSeries::Kind::Bars;
                 return s;
             }),
             py::arg("name"), py::arg("values"), py::arg("line") = false);
    m.def("render_histogram", &render_histogram, py::arg("series"), py::arg("labels"),
          py::arg("title"));

    m.def("write_graph_file",
          [](const std::string& path, const Graph& g, const WeightTable* w) {
              write_graph_file(path, g, w);
          },
          py::arg("path"), py::arg("graph"), py::arg("weights") = nullptr);
    m.def("read_graph_file", [](const std::string& path) {
        const GraphFile file = read_graph_file(path);
        return py::make_tuple(file.graph, file.weights);
    }, py::arg("path"));
}
