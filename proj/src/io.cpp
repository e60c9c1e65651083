#include "gml/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace gml {

namespace {

// Ascending original id -> 1..n.
std::map<VertexId, int> file_ids(const Graph& g) {
  std::map<VertexId, int> m;
  int next = 1;
  for (VertexId v : g.vertices()) m[v] = next++;
  return m;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  return f;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  return f;
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::string line;
  long n = -1, m = -1;
  std::vector<std::pair<VertexId, VertexId>> edges;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    if (tag == "p") {
      if (n >= 0) throw std::runtime_error("duplicate p line");
      if (!(ls >> n >> m) || n < 0 || m < 0)
        throw std::runtime_error("bad p line");
      continue;
    }
    if (tag == "e") {
      long u, v;
      if (n < 0) throw std::runtime_error("e line before p line");
      if (!(ls >> u >> v)) throw std::runtime_error("bad e line");
      if (u < 1 || u > n || v < 1 || v > n)
        throw std::runtime_error("edge endpoint out of range");
      edges.emplace_back(static_cast<VertexId>(u - 1),
                         static_cast<VertexId>(v - 1));
      continue;
    }
    throw std::runtime_error("unknown line tag '" + tag + "'");
  }
  if (n < 0) throw std::runtime_error("missing p line");
  if (static_cast<long>(edges.size()) != m)
    throw std::runtime_error("edge count does not match header");
  std::vector<VertexId> vs(n);
  for (long i = 0; i < n; ++i) vs[i] = static_cast<VertexId>(i);
  return Graph::build(vs, edges);
}

void write_graph(std::ostream& out, const Graph& g) {
  auto ids = file_ids(g);
  out << "p " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (EdgeId e : g.edge_ids()) {
    int u = ids.at(g.edge(e).u), v = ids.at(g.edge(e).v);
    if (u > v) std::swap(u, v);
    out << "e " << u << " " << v << "\n";
  }
}

Graph read_graph_file(const std::string& path) {
  auto f = open_in(path);
  return read_graph(f);
}

void write_graph_file(const std::string& path, const Graph& g) {
  auto f = open_out(path);
  write_graph(f, g);
}

TerminalSets read_sets(std::istream& in) {
  nlohmann::json j;
  in >> j;
  TerminalSets s;
  auto grab = [&](const char* key, std::vector<VertexId>& out) {
    if (!j.contains(key)) return;
    for (const auto& x : j.at(key)) {
      long v = x.get<long>();
      if (v < 1) throw std::runtime_error("set entry out of range");
      out.push_back(static_cast<VertexId>(v - 1));
    }
  };
  grab("A", s.A);
  grab("B", s.B);
  grab("X", s.X);
  return s;
}

void write_sets(std::ostream& out, const Graph& g, const TerminalSets& sets) {
  auto ids = file_ids(g);
  nlohmann::json j;
  auto put = [&](const char* key, const std::vector<VertexId>& vs) {
    auto arr = nlohmann::json::array();
    std::vector<int> mapped;
    for (VertexId v : vs) mapped.push_back(ids.at(v));
    std::sort(mapped.begin(), mapped.end());
    for (int v : mapped) arr.push_back(v);
    j[key] = arr;
  };
  put("A", sets.A);
  put("B", sets.B);
  put("X", sets.X);
  out << j.dump(2) << "\n";
}

TerminalSets read_sets_file(const std::string& path) {
  auto f = open_in(path);
  return read_sets(f);
}

void write_sets_file(const std::string& path, const Graph& g,
                     const TerminalSets& sets) {
  auto f = open_out(path);
  write_sets(f, g, sets);
}

void write_dot(std::ostream& out, const Graph& g,
               const std::vector<PathFamily>& families,
               const TerminalSets* sets) {
  static const char* kPalette[] = {"red",    "blue",   "forestgreen",
                                   "orange", "purple", "brown",
                                   "cyan3",  "magenta"};
  constexpr int kPaletteSize = 8;
  std::map<EdgeId, int> edge_family;
  std::map<VertexId, int> vert_family;
  for (size_t i = 0; i < families.size(); ++i)
    for (const Path& p : families[i].paths) {
      for (EdgeId e : p.edges)
        edge_family.emplace(e, static_cast<int>(i));
      for (VertexId v : p.verts)
        vert_family.emplace(v, static_cast<int>(i));
    }
  auto mark = [&](const std::vector<VertexId>& vs, const char* shape) {
    for (VertexId v : vs)
      out << "  " << v << " [shape=" << shape << ", style=filled];\n";
  };

  out << "graph {\n  node [shape=point];\n";
  if (sets) {
    mark(sets->A, "triangle");
    mark(sets->B, "invtriangle");
    mark(sets->X, "square");
  }
  for (const auto& [v, fam] : vert_family)
    out << "  " << v << " [color=" << kPalette[fam % kPaletteSize] << "];\n";
  for (EdgeId e : g.edge_ids()) {
    out << "  " << g.edge(e).u << " -- " << g.edge(e).v;
    auto it = edge_family.find(e);
    if (it != edge_family.end())
      out << " [color=" << kPalette[it->second % kPaletteSize]
          << ", penwidth=2]";
    out << ";\n";
  }
  out << "}\n";
}

}  // namespace gml
