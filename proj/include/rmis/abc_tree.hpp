#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "rmis/graph.hpp"

namespace rmis {

enum class NodeKind { A, B, C, P };

char kind_letter(NodeKind k);

/// A: articulation point, B: bridge, C: biconnected component with at least
/// three vertices, P: pendant vertex. `vertices` holds the single vertex of an
/// A/P node, both endpoints of a B node, or the whole component.
struct AbcNode {
  NodeKind kind;
  VertexSet vertices;

  VertexId vertex() const { return vertices.front(); }
  Edge edge() const { return {vertices[0], vertices[1]}; }
  std::string name() const;

  friend bool operator==(const AbcNode&, const AbcNode&) = default;
};

inline constexpr std::size_t kNoNode = std::numeric_limits<std::size_t>::max();

class AbcTree {
 public:
  const std::vector<AbcNode>& nodes() const { return nodes_; }
  const std::vector<std::size_t>& neighbors(std::size_t x) const { return adj_[x]; }
  std::size_t size() const { return nodes_.size(); }
  std::size_t edge_count() const;
  std::vector<std::size_t> nodes_of_kind(NodeKind k) const;
  bool has_c_node() const { return !nodes_of_kind(NodeKind::C).empty(); }

  /// Node of an articulation point or pendant vertex, kNoNode otherwise.
  std::size_t vertex_node(VertexId v) const;

  /// C-node whose smallest vertex is minimal, ties broken lexicographically.
  std::size_t default_root() const;

 private:
  friend AbcTree build_abc_tree(const Graph& g);
  std::vector<AbcNode> nodes_;
  std::vector<std::vector<std::size_t>> adj_;
  std::map<VertexId, std::size_t> by_vertex_;
};

/// Throws DisconnectedGraphError. A single vertex yields an empty tree: it is
/// neither pendant nor an articulation point and has no edges.
AbcTree build_abc_tree(const Graph& g);

class RootedAbcTree {
 public:
  const AbcTree& tree() const { return tree_; }
  const AbcNode& node(std::size_t x) const { return tree_.nodes()[x]; }
  std::size_t root() const { return root_; }
  std::size_t parent(std::size_t x) const { return parent_[x]; }
  const std::vector<std::size_t>& children(std::size_t x) const { return children_[x]; }
  /// The vertex through which the subtree at x hangs off its parent. Throws
  /// std::invalid_argument for the root.
  VertexId attachment_point(std::size_t x) const;
  /// Children before parents; the root comes last.
  const std::vector<std::size_t>& post_order() const { return post_order_; }

 private:
  friend RootedAbcTree orient(const AbcTree& t, std::size_t root);
  AbcTree tree_;
  std::size_t root_ = kNoNode;
  std::vector<std::size_t> parent_;
  std::vector<std::vector<std::size_t>> children_;
  std::vector<std::size_t> post_order_;
};

/// Orient toward any node.
RootedAbcTree orient(const AbcTree& t, std::size_t root);
/// Orient toward a C-node; throws std::invalid_argument otherwise.
RootedAbcTree root_at(const AbcTree& t, std::size_t root);

VertexSet subtree_vertices(const Graph& g, const RootedAbcTree& rt, std::size_t x);
Graph induced_subgraph_of_subtree(const Graph& g, const RootedAbcTree& rt, std::size_t x);

struct AerialSubgraph {
  Graph graph;
  VertexId aerial;
};

/// Subtree graph plus a fresh vertex (max id of g + 1) adjacent only to the
/// attachment point of x.
AerialSubgraph aerial_subgraph_of_subtree(const Graph& g, const RootedAbcTree& rt, std::size_t x);

std::string format_tree(const RootedAbcTree& rt);
std::string tree_to_dot(const AbcTree& t);

}  // namespace rmis
