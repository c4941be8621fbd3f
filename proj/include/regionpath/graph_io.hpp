#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>

#include "regionpath/graph.hpp"

namespace regionpath {

// Graph text format, one arc per line, arcs sorted by (u, v):
//
//   graph <n> <simple|directed|mixed>
//   a <u> <v> [<weight>]
//
// Lines starting with '#' are comments. Either every arc carries a weight or
// none does; weights may also live in a separate file of the same `a u v w`
// lines.

struct GraphFile {
    Graph graph;
    std::optional<WeightTable> weights;
};

GraphFile read_graph(std::istream& in);
GraphFile read_graph_file(const std::string& path);

void write_graph(std::ostream& out, const Graph& g, const WeightTable* weights = nullptr);
void write_graph_file(const std::string& path, const Graph& g,
                      const WeightTable* weights = nullptr);

// Weight file covering every arc of g.
WeightTable read_weights(std::istream& in, const Graph& g);
WeightTable read_weights_file(const std::string& path, const Graph& g);
void write_weights(std::ostream& out, const Graph& g, const WeightTable& w);

// Arc index table in the same `a u v i` line format, covering every arc.
std::unordered_map<std::uint64_t, std::uint64_t> read_index_table(std::istream& in,
                                                                  const Graph& g);
std::unordered_map<std::uint64_t, std::uint64_t> read_index_table_file(const std::string& path,
                                                                       const Graph& g);

// One positive value per line, '#' comments allowed.
std::vector<Weight> read_value_list(std::istream& in);
std::vector<Weight> read_value_list_file(const std::string& path);

}  // namespace regionpath
