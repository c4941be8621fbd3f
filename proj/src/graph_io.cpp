#include "regionpath/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "regionpath/numfmt.hpp"

namespace regionpath {

namespace {

const char* mode_name(GraphMode mode) {
    switch (mode) {
        case GraphMode::Simple: return "simple";
        case GraphMode::Directed: return "directed";
        case GraphMode::Mixed: return "mixed";
    }
    return "mixed";
}

GraphMode parse_mode(const std::string& token) {
    if (token == "simple") return GraphMode::Simple;
    if (token == "directed") return GraphMode::Directed;
    if (token == "mixed") return GraphMode::Mixed;
    throw std::invalid_argument("unknown graph mode: " + token);
}

bool skippable(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

struct ArcLine {
    NodeId u = 0;
    NodeId v = 0;
    std::optional<double> value;
};

ArcLine parse_arc_line(const std::string& line, std::size_t lineno) {
    std::istringstream fields(line);
    std::string tag;
    fields >> tag;
    if (tag != "a") {
        throw std::invalid_argument("line " + std::to_string(lineno) + ": expected arc line");
    }
    ArcLine arc;
    long long u = -1, v = -1;
    if (!(fields >> u >> v) || u < 0 || v < 0) {
        throw std::invalid_argument("line " + std::to_string(lineno) + ": bad arc endpoints");
    }
    arc.u = static_cast<NodeId>(u);
    arc.v = static_cast<NodeId>(v);
    double w;
    if (fields >> w) arc.value = w;
    std::string rest;
    if (fields >> rest) {
        throw std::invalid_argument("line " + std::to_string(lineno) + ": trailing tokens");
    }
    return arc;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return in;
}

}  // namespace

GraphFile read_graph(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    std::optional<NodeId> n;
    GraphMode declared = GraphMode::Mixed;
    std::vector<Arc> arcs;
    std::vector<std::optional<double>> values;

    while (std::getline(in, line)) {
        ++lineno;
        if (skippable(line)) continue;
        if (!n) {
            std::istringstream fields(line);
            std::string tag, mode_token;
            long long count = -1;
            if (!(fields >> tag >> count >> mode_token) || tag != "graph" || count < 0) {
                throw std::invalid_argument("line " + std::to_string(lineno) +
                                            ": expected `graph <n> <mode>` header");
            }
            n = static_cast<NodeId>(count);
            declared = parse_mode(mode_token);
            continue;
        }
        const ArcLine arc = parse_arc_line(line, lineno);
        arcs.emplace_back(arc.u, arc.v);
        values.push_back(arc.value);
    }
    if (!n) throw std::invalid_argument("missing `graph <n> <mode>` header");

    GraphFile file;
    file.graph = Graph::from_arcs(*n, arcs);
    if (file.graph.mode() != declared) {
        throw std::invalid_argument("declared mode `" + std::string(mode_name(declared)) +
                                    "` does not match arc structure `" +
                                    mode_name(file.graph.mode()) + "`");
    }

    const std::size_t weighted =
        static_cast<std::size_t>(std::count_if(values.begin(), values.end(),
                                               [](const auto& v) { return v.has_value(); }));
    if (weighted == arcs.size() && !arcs.empty()) {
        WeightTable w;
        for (std::size_t i = 0; i < arcs.size(); ++i) {
            w.set(arcs[i].first, arcs[i].second, *values[i]);
        }
        file.weights = std::move(w);
    } else if (weighted != 0) {
        throw std::invalid_argument("either every arc carries a weight or none does");
    }
    return file;
}

GraphFile read_graph_file(const std::string& path) {
    auto in = open_input(path);
    return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g, const WeightTable* weights) {
    out << "graph " << g.node_count() << ' ' << mode_name(g.mode()) << '\n';
    for (const auto& [u, v] : g.arcs_sorted()) {
        out << "a " << u << ' ' << v;
        if (weights != nullptr) out << ' ' << format_number(weights->at(u, v));
        out << '\n';
    }
}

void write_graph_file(const std::string& path, const Graph& g, const WeightTable* weights) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    write_graph(out, g, weights);
}

WeightTable read_weights(std::istream& in, const Graph& g) {
    WeightTable w;
    std::string line;
    std::size_t lineno = 0;
    std::size_t count = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (skippable(line)) continue;
        const ArcLine arc = parse_arc_line(line, lineno);
        if (!arc.value) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": missing weight");
        }
        if (!g.has_arc(arc.u, arc.v)) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": arc " +
                                        std::to_string(arc.u) + "->" + std::to_string(arc.v) +
                                        " is not in the graph");
        }
        w.set(arc.u, arc.v, *arc.value);
        ++count;
    }
    if (count != g.arc_count()) {
        throw std::invalid_argument("weight file covers " + std::to_string(count) + " of " +
                                    std::to_string(g.arc_count()) + " arcs");
    }
    return w;
}

WeightTable read_weights_file(const std::string& path, const Graph& g) {
    auto in = open_input(path);
    return read_weights(in, g);
}

void write_weights(std::ostream& out, const Graph& g, const WeightTable& w) {
    for (const auto& [u, v] : g.arcs_sorted()) {
        out << "a " << u << ' ' << v << ' ' << format_number(w.at(u, v)) << '\n';
    }
}

std::unordered_map<std::uint64_t, std::uint64_t> read_index_table(std::istream& in,
                                                                  const Graph& g) {
    std::unordered_map<std::uint64_t, std::uint64_t> table;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (skippable(line)) continue;
        const ArcLine arc = parse_arc_line(line, lineno);
        if (!arc.value || !(*arc.value > 0) || std::floor(*arc.value) != *arc.value) {
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": arc index must be a positive integer");
        }
        if (!g.has_arc(arc.u, arc.v)) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": arc " +
                                        std::to_string(arc.u) + "->" + std::to_string(arc.v) +
                                        " is not in the graph");
        }
        table[arc_key(arc.u, arc.v)] = static_cast<std::uint64_t>(*arc.value);
    }
    if (table.size() != g.arc_count()) {
        throw std::invalid_argument("index file covers " + std::to_string(table.size()) +
                                    " of " + std::to_string(g.arc_count()) + " arcs");
    }
    return table;
}

std::unordered_map<std::uint64_t, std::uint64_t> read_index_table_file(const std::string& path,
                                                                       const Graph& g) {
    auto in = open_input(path);
    return read_index_table(in, g);
}

std::vector<Weight> read_value_list(std::istream& in) {
    std::vector<Weight> values;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (skippable(line)) continue;
        std::istringstream fields(line);
        double v;
        if (!(fields >> v) || !(v > 0)) {
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": expected one positive value");
        }
        std::string rest;
        if (fields >> rest) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": trailing tokens");
        }
        values.push_back(v);
    }
    if (values.empty()) throw std::invalid_argument("value list is empty");
    return values;
}

std::vector<Weight> read_value_list_file(const std::string& path) {
    auto in = open_input(path);
    return read_value_list(in);
}

}  // namespace regionpath
