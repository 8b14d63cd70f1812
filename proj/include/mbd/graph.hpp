#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mbd {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

// Raised when an operation that only accepts a restricted graph class
// (tree/forest) is handed something else.
struct InputClassError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Simple undirected graph on dense vertex ids 0..n-1. No self-loops;
// parallel edges collapse to a single edge (degenerate constructions may
// try to add an edge twice). Adjacency lists are kept sorted.
struct Graph {
  int n = 0;
  std::vector<std::vector<int>> adj;

  Graph() = default;
  explicit Graph(int n_) : n(n_), adj(static_cast<std::size_t>(n_)) {}

  void check_vertex(int v) const {
    if (v < 0 || v >= n) throw std::out_of_range("vertex id " + std::to_string(v) + " out of range");
  }

  // Returns false if the edge was already present (collapse).
  bool add_edge(int u, int v);
  bool remove_edge(int u, int v);
  bool has_edge(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adj[static_cast<std::size_t>(v)].size()); }
  int edge_count() const;
  std::vector<std::pair<int, int>> edge_list() const;  // sorted (min endpoint, then max)

  bool operator==(const Graph&) const = default;
};

struct PredominatedGraph {
  Graph graph;
  std::vector<int> predominated;  // sorted subset of 0..n-1

  bool operator==(const PredominatedGraph&) const = default;
};

// Text format: header "n=<count>", edge lines "e <u> <v>", final line
// "D:" followed by the predominated ids. Lines starting with '#' are
// comments. The renderer emits the canonical form (edges sorted by
// (min,max), D sorted, no comments).
PredominatedGraph parse_graph(const std::string& text);
std::string render_graph(const PredominatedGraph& pg);

std::vector<std::vector<int>> components(const Graph& g);
bool is_connected(const Graph& g);
bool is_forest(const Graph& g);
bool is_tree(const Graph& g);
bool is_cactus(const Graph& g);

// Per-vertex 0/1 coloring (BFS from the lowest id of each component);
// nullopt if some component has an odd cycle.
std::optional<std::vector<std::int8_t>> bipartition(const Graph& g);

struct AtomizeResult {
  PredominatedGraph pg;
  std::vector<int> old_to_new;  // -1 for removed vertices
};

// Drops every edge joining two predominated vertices, then every vertex
// that is predominated and isolated afterwards. Game outcome and
// criticality are preserved.
AtomizeResult atomize(const PredominatedGraph& pg);

}  // namespace mbd
