#include "rmis/abc_tree.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace rmis {

char kind_letter(NodeKind k) {
  switch (k) {
    case NodeKind::A: return 'A';
    case NodeKind::B: return 'B';
    case NodeKind::C: return 'C';
    case NodeKind::P: return 'P';
  }
  return '?';
}

std::string AbcNode::name() const {
  std::string out(1, kind_letter(kind));
  out += kind == NodeKind::C ? "{" : "(";
  out += format_vertex_set(vertices, kind == NodeKind::B ? "-" : ",");
  out += kind == NodeKind::C ? "}" : ")";
  return out;
}

std::size_t AbcTree::edge_count() const {
  std::size_t deg = 0;
  for (const auto& row : adj_) deg += row.size();
  return deg / 2;
}

std::vector<std::size_t> AbcTree::nodes_of_kind(NodeKind k) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (nodes_[i].kind == k) out.push_back(i);
  return out;
}

std::size_t AbcTree::vertex_node(VertexId v) const {
  auto it = by_vertex_.find(v);
  return it == by_vertex_.end() ? kNoNode : it->second;
}

std::size_t AbcTree::default_root() const {
  std::size_t best = kNoNode;
  for (std::size_t i : nodes_of_kind(NodeKind::C))
    if (best == kNoNode || nodes_[i].vertices < nodes_[best].vertices) best = i;
  if (best == kNoNode) throw std::invalid_argument("tree has no C-node to root at");
  return best;
}

AbcTree build_abc_tree(const Graph& g) {
  auto blocks = decompose_blocks(g);
  AbcTree t;
  auto add = [&](NodeKind k, VertexSet vs) {
    t.nodes_.push_back({k, std::move(vs)});
    return t.nodes_.size() - 1;
  };
  for (VertexId a : blocks.articulation_points) t.by_vertex_[a] = add(NodeKind::A, {a});
  for (const Edge& e : blocks.bridges) add(NodeKind::B, {e.u, e.v});
  for (const VertexSet& c : blocks.components)
    if (c.size() >= 3) add(NodeKind::C, c);
  for (VertexId p : pendant_vertices(g)) t.by_vertex_[p] = add(NodeKind::P, {p});

  t.adj_.assign(t.nodes_.size(), {});
  auto link = [&](std::size_t x, std::size_t y) {
    t.adj_[x].push_back(y);
    t.adj_[y].push_back(x);
  };
  for (std::size_t i = 0; i < t.nodes_.size(); ++i) {
    const AbcNode& n = t.nodes_[i];
    if (n.kind == NodeKind::B) {
      for (VertexId v : n.vertices) {
        std::size_t end = t.vertex_node(v);
        if (end == kNoNode) throw std::logic_error("bridge endpoint is neither pendant nor cut vertex");
        link(i, end);
      }
    } else if (n.kind == NodeKind::C) {
      for (VertexId v : n.vertices)
        if (std::size_t a = t.vertex_node(v); a != kNoNode && t.nodes_[a].kind == NodeKind::A)
          link(i, a);
    }
  }
  for (auto& row : t.adj_) std::sort(row.begin(), row.end());
  return t;
}

RootedAbcTree orient(const AbcTree& t, std::size_t root) {
  if (root >= t.size()) throw std::invalid_argument("root is not a node of the tree");
  RootedAbcTree rt;
  rt.tree_ = t;
  rt.root_ = root;
  rt.parent_.assign(t.size(), kNoNode);
  rt.children_.assign(t.size(), {});
  std::vector<std::size_t> order{root};
  std::vector<bool> seen(t.size(), false);
  seen[root] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::size_t x = order[i];
    for (std::size_t y : t.neighbors(x)) {
      if (seen[y]) continue;
      seen[y] = true;
      rt.parent_[y] = x;
      rt.children_[x].push_back(y);
      order.push_back(y);
    }
  }
  rt.post_order_.assign(order.rbegin(), order.rend());
  return rt;
}

RootedAbcTree root_at(const AbcTree& t, std::size_t root) {
  if (root >= t.size() || t.nodes()[root].kind != NodeKind::C)
    throw std::invalid_argument("the root of an ABC-tree must be a C-node");
  return orient(t, root);
}

VertexId RootedAbcTree::attachment_point(std::size_t x) const {
  if (x == root_) throw std::invalid_argument("the root has no attachment point");
  const AbcNode& n = node(x);
  if (n.kind == NodeKind::A || n.kind == NodeKind::P) return n.vertex();
  return node(parent_[x]).vertex();
}

namespace {

void collect_subtree(const Graph& g, const RootedAbcTree& rt, std::size_t x,
                     std::vector<VertexId>& vs, std::vector<Edge>& es) {
  std::vector<std::size_t> stack{x};
  while (!stack.empty()) {
    std::size_t y = stack.back();
    stack.pop_back();
    const AbcNode& n = rt.node(y);
    vs.insert(vs.end(), n.vertices.begin(), n.vertices.end());
    if (n.kind == NodeKind::B) {
      es.push_back(n.edge());
    } else if (n.kind == NodeKind::C) {
      for (const Edge& e : induced_subgraph(g, n.vertices).edges()) es.push_back(e);
    }
    for (std::size_t c : rt.children(y)) stack.push_back(c);
  }
}

}  // namespace

VertexSet subtree_vertices(const Graph& g, const RootedAbcTree& rt, std::size_t x) {
  std::vector<VertexId> vs;
  std::vector<Edge> es;
  collect_subtree(g, rt, x, vs, es);
  return make_vertex_set(std::move(vs));
}

Graph induced_subgraph_of_subtree(const Graph& g, const RootedAbcTree& rt, std::size_t x) {
  std::vector<VertexId> vs;
  std::vector<Edge> es;
  collect_subtree(g, rt, x, vs, es);
  return Graph(std::move(vs), es);
}

AerialSubgraph aerial_subgraph_of_subtree(const Graph& g, const RootedAbcTree& rt, std::size_t x) {
  VertexId ap = rt.attachment_point(x);
  std::vector<VertexId> vs;
  std::vector<Edge> es;
  collect_subtree(g, rt, x, vs, es);
  VertexId aerial = g.max_vertex() + 1;
  vs.push_back(aerial);
  es.emplace_back(ap, aerial);
  return {Graph(std::move(vs), es), aerial};
}

std::string format_tree(const RootedAbcTree& rt) {
  std::ostringstream out;
  auto walk = [&](auto&& self, std::size_t x, int depth) -> void {
    out << std::string(2 * depth, ' ') << rt.node(x).name() << '\n';
    for (std::size_t c : rt.children(x)) self(self, c, depth + 1);
  };
  walk(walk, rt.root(), 0);
  return out.str();
}

std::string tree_to_dot(const AbcTree& t) {
  std::ostringstream out;
  out << "graph ABC {\n";
  for (std::size_t i = 0; i < t.size(); ++i) {
    const AbcNode& n = t.nodes()[i];
    const char* shape = "box";
    switch (n.kind) {
      case NodeKind::A: shape = "diamond"; break;
      case NodeKind::B: shape = "box"; break;
      case NodeKind::C: shape = "ellipse"; break;
      case NodeKind::P: shape = "circle"; break;
    }
    out << "  n" << i << " [label=\"" << n.name() << "\", shape=" << shape << "];\n";
  }
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j : t.neighbors(i))
      if (i < j) out << "  n" << i << " -- n" << j << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace rmis
