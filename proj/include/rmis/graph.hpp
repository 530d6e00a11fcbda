#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rmis {

using VertexId = std::uint64_t;

/// Sorted, duplicate-free list of vertex ids. Every set-valued result in the
/// library uses this representation so outputs are deterministic.
using VertexSet = std::vector<VertexId>;

VertexSet make_vertex_set(std::vector<VertexId> ids);
bool contains(const VertexSet& set, VertexId v);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
std::string format_vertex_set(const VertexSet& set, std::string_view sep = ",");
VertexSet parse_vertex_set(std::string_view text);

/// Undirected edge, stored with u < v so equality ignores orientation.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  Edge() = default;
  Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge&) const = default;
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DisconnectedGraphError : public GraphError {
 public:
  explicit DisconnectedGraphError(std::string_view op)
      : GraphError(std::string(op) + ": graph is not connected") {}
};

class ParseError : public GraphError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : GraphError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Simple undirected graph over arbitrary non-negative ids.
///
/// Vertices are kept sorted; every vertex also has a dense index in
/// [0, size()) following that order, which the algorithms use internally.
/// Instances are immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Throws GraphError on self-loops or on edges naming undeclared vertices.
  /// Duplicate edges collapse.
  Graph(std::vector<VertexId> vertices, const std::vector<Edge>& edges);

  static Graph from_edges(const std::vector<Edge>& edges,
                          const std::vector<VertexId>& isolated = {});

  std::size_t size() const { return ids_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  bool empty() const { return ids_.empty(); }

  std::span<const VertexId> vertices() const { return ids_; }
  bool has_vertex(VertexId v) const;
  bool has_edge(VertexId a, VertexId b) const;
  std::size_t degree(VertexId v) const;
  VertexSet neighbors(VertexId v) const;
  std::vector<Edge> edges() const;
  VertexId max_vertex() const;

  std::size_t index_of(VertexId v) const;
  std::optional<std::size_t> find_index(VertexId v) const;
  VertexId id_at(std::size_t index) const { return ids_[index]; }
  std::span<const std::size_t> adjacent(std::size_t index) const { return adj_[index]; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.ids_ == b.ids_ && a.adj_ == b.adj_;
  }

 private:
  std::vector<VertexId> ids_;
  std::vector<std::vector<std::size_t>> adj_;
  std::size_t edge_count_ = 0;
};

// Text format: one "u v" edge per line, a lone integer declares a vertex,
// '#' starts a comment line.
Graph from_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

bool is_connected(const Graph& g);
VertexSet pendant_vertices(const Graph& g);

/// One depth-first lowlink pass computing articulation points, bridges and
/// the edge-based biconnected components at once.
struct BlockDecomposition {
  VertexSet articulation_points;
  std::vector<Edge> bridges;
  std::vector<VertexSet> components;
};

/// Throws DisconnectedGraphError unless g is connected.
BlockDecomposition decompose_blocks(const Graph& g);
VertexSet articulation_points(const Graph& g);
std::vector<Edge> bridges(const Graph& g);
/// Size-2 components are exactly the bridges. A single-vertex graph has no
/// components since it has no edges.
std::vector<VertexSet> biconnected_components(const Graph& g);

struct Bipartition {
  VertexSet first;
  VertexSet second;
  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

/// One 2-coloring per connected component, merged; in each component the
/// side holding its smallest id goes to `first`.
std::optional<Bipartition> is_bipartite(const Graph& g);

struct Ball {
  Graph graph;
  VertexSet boundary;  // distance exactly r with a neighbor outside the ball
};

Ball ball(const Graph& g, VertexId center, std::size_t radius);
std::vector<std::size_t> bfs_distances(const Graph& g, std::size_t source_index);
std::size_t diameter(const Graph& g);

Graph remove_edges(const Graph& g, const std::vector<Edge>& edges);
Graph induced_subgraph(const Graph& g, const VertexSet& keep);

/// DOT rendering with vertices colored by role (pendant, articulation point,
/// other). Expects a connected graph.
std::string to_dot(const Graph& g);

}  // namespace rmis
