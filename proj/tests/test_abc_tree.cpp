#include <doctest.h>

#include <set>

#include "rmis/abc_tree.hpp"
#include "rmis/generators.hpp"
#include "support/oracles.hpp"

using namespace rmis;

namespace {

std::set<std::string> names(const AbcTree& t) {
  std::set<std::string> out;
  for (const auto& n : t.nodes()) out.insert(n.name());
  return out;
}

std::set<std::pair<std::string, std::string>> tree_edges(const AbcTree& t) {
  std::set<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j : t.neighbors(i)) {
      auto a = t.nodes()[i].name(), b = t.nodes()[j].name();
      out.insert(std::minmax(a, b));
    }
  return out;
}

std::size_t find_node(const AbcTree& t, const std::string& name) {
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t.nodes()[i].name() == name) return i;
  FAIL("no node " << name);
  return kNoNode;
}

bool is_tree(const AbcTree& t) {
  if (t.size() == 0) return true;
  if (t.edge_count() + 1 != t.size()) return false;
  std::vector<bool> seen(t.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::size_t x = stack.back();
    stack.pop_back();
    for (std::size_t y : t.neighbors(x))
      if (!seen[y]) {
        seen[y] = true;
        ++count;
        stack.push_back(y);
      }
  }
  return count == t.size();
}

}  // namespace

TEST_CASE("bull decomposition") {
  AbcTree t = build_abc_tree(gen_bull());
  CHECK(names(t) == std::set<std::string>{"P(0)", "P(4)", "A(1)", "A(2)", "B(0-1)", "B(2-4)", "C{1,2,3}"});
  using E = std::pair<std::string, std::string>;
  CHECK(tree_edges(t) == std::set<E>{std::minmax<std::string>("P(0)", "B(0-1)"),
                                     std::minmax<std::string>("B(0-1)", "A(1)"),
                                     std::minmax<std::string>("A(1)", "C{1,2,3}"),
                                     std::minmax<std::string>("C{1,2,3}", "A(2)"),
                                     std::minmax<std::string>("A(2)", "B(2-4)"),
                                     std::minmax<std::string>("B(2-4)", "P(4)")});
}

TEST_CASE("acyclic and single-block graphs") {
  AbcTree p = build_abc_tree(gen_path(3));
  CHECK_FALSE(p.has_c_node());
  CHECK(names(p) == std::set<std::string>{"P(0)", "P(2)", "A(1)", "B(0-1)", "B(1-2)"});
  AbcTree c4 = build_abc_tree(gen_square());
  CHECK(names(c4) == std::set<std::string>{"C{0,1,2,3}"});
  CHECK(build_abc_tree(Graph({0}, {})).size() == 0);
  CHECK_THROWS_AS(build_abc_tree(Graph({0, 1, 2}, {{0, 1}})), DisconnectedGraphError);
}

TEST_CASE("rooting") {
  AbcTree t = build_abc_tree(gen_bull());
  RootedAbcTree rt = root_at(t, t.default_root());
  CHECK(rt.node(rt.root()).name() == "C{1,2,3}");
  std::set<std::string> kids;
  for (std::size_t c : rt.children(rt.root())) kids.insert(rt.node(c).name());
  CHECK(kids == std::set<std::string>{"A(1)", "A(2)"});
  CHECK(rt.attachment_point(find_node(t, "B(0-1)")) == 1);
  CHECK(rt.attachment_point(find_node(t, "A(2)")) == 2);
  CHECK(rt.attachment_point(find_node(t, "P(4)")) == 4);
  CHECK_THROWS_AS(rt.attachment_point(rt.root()), std::invalid_argument);
  CHECK_THROWS_AS(root_at(t, find_node(t, "A(1)")), std::invalid_argument);
  CHECK(rt.post_order().back() == rt.root());

  AbcTree c4 = build_abc_tree(gen_square());
  CHECK(root_at(c4, c4.default_root()).children(0).empty());
}

TEST_CASE("default root is the component with the smallest vertex") {
  // two triangles sharing vertex 2, the second holding 0
  Graph g = Graph::from_edges({{2, 3}, {3, 4}, {4, 2}, {2, 0}, {0, 1}, {1, 2}});
  AbcTree t = build_abc_tree(g);
  CHECK(t.nodes()[t.default_root()].name() == "C{0,1,2}");
}

TEST_CASE("attachment points on a bigger example") {
  // component {0,1,2,3}; at 3 a bridge to 10 which carries pendant 11 and a
  // triangle {10,12,13}
  Graph g = Graph::from_edges(
      {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 10}, {10, 11}, {10, 12}, {12, 13}, {13, 10}});
  AbcTree t = build_abc_tree(g);
  RootedAbcTree rt = root_at(t, t.default_root());
  CHECK(rt.node(rt.root()).name() == "C{0,1,2,3}");
  CHECK(rt.attachment_point(find_node(t, "B(3-10)")) == 3);
  CHECK(rt.attachment_point(find_node(t, "A(10)")) == 10);
  CHECK(rt.attachment_point(find_node(t, "B(10-11)")) == 10);
  CHECK(rt.attachment_point(find_node(t, "C{10,12,13}")) == 10);
  CHECK(rt.attachment_point(find_node(t, "P(11)")) == 11);
}

TEST_CASE("subtree subgraphs") {
  Graph bull = gen_bull();
  AbcTree t = build_abc_tree(bull);
  RootedAbcTree rt = root_at(t, t.default_root());
  Graph at_c = induced_subgraph_of_subtree(bull, rt, find_node(t, "A(2)"));
  CHECK(at_c == Graph({2, 4}, {{2, 4}}));
  CHECK(induced_subgraph_of_subtree(bull, rt, rt.root()) == bull);
  CHECK(induced_subgraph_of_subtree(bull, rt, find_node(t, "P(0)")) == Graph({0}, {}));

  AerialSubgraph air = aerial_subgraph_of_subtree(bull, rt, find_node(t, "A(2)"));
  CHECK(air.aerial == 5);
  CHECK(air.graph == Graph({2, 4, 5}, {{2, 4}, {2, 5}}));
  AerialSubgraph leaf = aerial_subgraph_of_subtree(bull, rt, find_node(t, "P(0)"));
  CHECK(leaf.graph == Graph({0, 5}, {{0, 5}}));
  CHECK_FALSE(bull.has_vertex(leaf.aerial));
  CHECK_THROWS_AS(aerial_subgraph_of_subtree(bull, rt, rt.root()), std::invalid_argument);
}

TEST_CASE("structural invariants on small graphs") {
  std::size_t checked = 0;
  auto check = [&](const Graph& g) {
    if (g.size() < 2) return;
    AbcTree t = build_abc_tree(g);
    REQUIRE(is_tree(t));

    auto aps = oracle::articulation_points(g);
    auto brs = oracle::bridges(g);
    std::set<VertexId> covered;
    for (const auto& n : t.nodes()) {
      covered.insert(n.vertices.begin(), n.vertices.end());
      switch (n.kind) {
        case NodeKind::A: REQUIRE(contains(aps, n.vertex())); break;
        case NodeKind::P: REQUIRE(g.degree(n.vertex()) == 1); break;
        case NodeKind::B: REQUIRE(std::find(brs.begin(), brs.end(), n.edge()) != brs.end()); break;
        case NodeKind::C: REQUIRE(n.vertices.size() >= 3); break;
      }
    }
    REQUIRE(covered.size() == g.size());
    for (const Edge& e : g.edges()) {
      int owners = 0;
      for (const auto& n : t.nodes())
        if ((n.kind == NodeKind::B && n.edge() == e) ||
            (n.kind == NodeKind::C && contains(n.vertices, e.u) && contains(n.vertices, e.v)))
          ++owners;
      REQUIRE(owners == 1);
    }
    if (!t.has_c_node()) return;
    RootedAbcTree rt = root_at(t, t.default_root());
    for (std::size_t x = 0; x < t.size(); ++x) {
      Graph sub = induced_subgraph_of_subtree(g, rt, x);
      REQUIRE(is_connected(sub));
      if (x != rt.root()) REQUIRE(sub.has_vertex(rt.attachment_point(x)));
    }
    // children plus the root's own block rebuild the graph
    std::vector<Edge> es = induced_subgraph(g, rt.node(rt.root()).vertices).edges();
    std::vector<VertexId> vs = rt.node(rt.root()).vertices;
    for (std::size_t c : rt.children(rt.root())) {
      Graph sub = induced_subgraph_of_subtree(g, rt, c);
      for (const Edge& e : sub.edges()) es.push_back(e);
      vs.insert(vs.end(), sub.vertices().begin(), sub.vertices().end());
    }
    REQUIRE(Graph(vs, es) == g);
    ++checked;
  };
  for (std::size_t n = 2; n <= 5; ++n) oracle::for_each_connected_graph(n, check);
  for (std::uint64_t seed = 0; seed < 300; ++seed) check(gen_random_connected(6 + seed % 3, 0.3, seed));
  CHECK(checked > 500);
}

TEST_CASE("text and dot rendering") {
  AbcTree t = build_abc_tree(gen_bull());
  std::string text = format_tree(root_at(t, t.default_root()));
  CHECK(text.rfind("C{1,2,3}\n", 0) == 0);
  CHECK(text.find("      P(0)") != std::string::npos);
  std::string dot = tree_to_dot(t);
  CHECK(dot.find("shape=diamond") != std::string::npos);
  CHECK(dot.find("shape=circle") != std::string::npos);
}
