#pragma once

#include <iosfwd>
#include <string>

#include "gml/instance.hpp"
#include "gml/path.hpp"

namespace gml {

// Text graph format: optional `c` comment lines, one `p <n> <m>` header,
// then m lines `e <u> <v>` with 1-indexed endpoints. Vertices are 1..n in
// the file and 0..n-1 in memory. Writing lists edges in ascending edge-id
// order with each endpoint pair ascending, and compacts vertex ids, so a
// written file parses back to an identical graph and re-writes to the same
// bytes.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

Graph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const Graph& g);

// Sidecar terminal sets as JSON {"A":[...],"B":[...],"X":[...]}, 1-indexed
// to match the graph file.
TerminalSets read_sets(std::istream& in);
void write_sets(std::ostream& out, const Graph& g, const TerminalSets& sets);

TerminalSets read_sets_file(const std::string& path);
void write_sets_file(const std::string& path, const Graph& g,
                     const TerminalSets& sets);

// DOT export with one color class per path family; terminal sets, when
// given, become filled marks on their vertices.
void write_dot(std::ostream& out, const Graph& g,
               const std::vector<PathFamily>& families = {},
               const TerminalSets* sets = nullptr);

}  // namespace gml
