#include "rmis/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <queue>
#include <sstream>

namespace rmis {

VertexSet make_vertex_set(std::vector<VertexId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

bool contains(const VertexSet& set, VertexId v) {
  return std::binary_search(set.begin(), set.end(), v);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string format_vertex_set(const VertexSet& set, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(set[i]);
  }
  return out;
}

namespace {

std::optional<VertexId> parse_id(std::string_view tok) {
  VertexId v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size()) return std::nullopt;
  return v;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

VertexSet parse_vertex_set(std::string_view text) {
  std::vector<VertexId> ids;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    auto tok = text.substr(start, end - start);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.remove_prefix(1);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
    if (!tok.empty()) {
      auto v = parse_id(tok);
      if (!v) throw GraphError("bad vertex id '" + std::string(tok) + "'");
      ids.push_back(*v);
    } else if (end != text.size() || start != 0) {
      throw GraphError("empty entry in vertex list");
    }
    start = end + 1;
  }
  return make_vertex_set(std::move(ids));
}

Graph::Graph(std::vector<VertexId> vertices, const std::vector<Edge>& edges)
    : ids_(make_vertex_set(std::move(vertices))), adj_(ids_.size()) {
  for (const Edge& e : edges) {
    if (e.u == e.v) throw GraphError("self-loop on vertex " + std::to_string(e.u));
    auto a = find_index(e.u);
    auto b = find_index(e.v);
    if (!a || !b)
      throw GraphError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                       " names an unknown vertex");
    adj_[*a].push_back(*b);
    adj_[*b].push_back(*a);
  }
  for (auto& row : adj_) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    edge_count_ += row.size();
  }
  edge_count_ /= 2;
}

Graph Graph::from_edges(const std::vector<Edge>& edges, const std::vector<VertexId>& isolated) {
  std::vector<VertexId> vs = isolated;
  for (const Edge& e : edges) {
    vs.push_back(e.u);
    vs.push_back(e.v);
  }
  return Graph(std::move(vs), edges);
}

std::optional<std::size_t> Graph::find_index(VertexId v) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it == ids_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - ids_.begin());
}

std::size_t Graph::index_of(VertexId v) const {
  auto i = find_index(v);
  if (!i) throw GraphError("unknown vertex " + std::to_string(v));
  return *i;
}

bool Graph::has_vertex(VertexId v) const { return find_index(v).has_value(); }

bool Graph::has_edge(VertexId a, VertexId b) const {
  auto i = find_index(a);
  auto j = find_index(b);
  if (!i || !j) return false;
  return std::binary_search(adj_[*i].begin(), adj_[*i].end(), *j);
}

std::size_t Graph::degree(VertexId v) const { return adj_[index_of(v)].size(); }

VertexSet Graph::neighbors(VertexId v) const {
  VertexSet out;
  for (std::size_t j : adj_[index_of(v)]) out.push_back(ids_[j]);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t i = 0; i < ids_.size(); ++i)
    for (std::size_t j : adj_[i])
      if (i < j) out.emplace_back(ids_[i], ids_[j]);
  return out;
}

VertexId Graph::max_vertex() const {
  if (ids_.empty()) throw GraphError("empty graph has no vertices");
  return ids_.back();
}

Graph from_edge_list(std::string_view text) {
  std::vector<VertexId> vs;
  std::vector<Edge> es;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks.size() > 2) throw ParseError(line_no, "expected 'u v' or a single vertex id");
    std::vector<VertexId> parsed;
    for (auto t : toks) {
      auto v = parse_id(t);
      if (!v) throw ParseError(line_no, "bad vertex id '" + std::string(t) + "'");
      parsed.push_back(*v);
    }
    if (parsed.size() == 1) {
      vs.push_back(parsed[0]);
    } else {
      if (parsed[0] == parsed[1])
        throw ParseError(line_no, "self-loop on vertex " + std::to_string(parsed[0]));
      vs.push_back(parsed[0]);
      vs.push_back(parsed[1]);
      es.emplace_back(parsed[0], parsed[1]);
    }
  }
  if (vs.empty()) throw ParseError(line_no, "graph has no vertices");
  return Graph(std::move(vs), es);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g.adjacent(i).empty()) out << g.id_at(i) << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::vector<std::size_t> bfs_distances(const Graph& g, std::size_t source) {
  constexpr auto inf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(g.size(), inf);
  std::queue<std::size_t> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    std::size_t v = q.front();
    q.pop();
    for (std::size_t w : g.adjacent(v))
      if (dist[w] == inf) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.empty()) return true;
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(),
                      [](std::size_t d) { return d == std::numeric_limits<std::size_t>::max(); });
}

VertexSet pendant_vertices(const Graph& g) {
  VertexSet out;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g.adjacent(i).size() == 1) out.push_back(g.id_at(i));
  return out;
}

BlockDecomposition decompose_blocks(const Graph& g) {
  if (!is_connected(g)) throw DisconnectedGraphError("block decomposition");
  BlockDecomposition out;
  const std::size_t n = g.size();
  if (n == 0) return out;

  constexpr auto unset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> disc(n, unset), low(n, 0), parent(n, unset), next_edge(n, 0);
  std::vector<bool> is_ap(n, false);
  std::vector<std::pair<std::size_t, std::size_t>> edge_stack;
  std::vector<std::size_t> stack{0};
  std::size_t timer = 0;
  std::size_t root_children = 0;
  disc[0] = low[0] = timer++;

  auto pop_component = [&](std::size_t u, std::size_t v) {
    std::vector<VertexId> comp;
    while (true) {
      auto [a, b] = edge_stack.back();
      edge_stack.pop_back();
      comp.push_back(g.id_at(a));
      comp.push_back(g.id_at(b));
      if (a == u && b == v) break;
    }
    out.components.push_back(make_vertex_set(std::move(comp)));
  };

  while (!stack.empty()) {
    std::size_t v = stack.back();
    auto adj = g.adjacent(v);
    if (next_edge[v] < adj.size()) {
      std::size_t w = adj[next_edge[v]++];
      if (disc[w] == unset) {
        parent[w] = v;
        disc[w] = low[w] = timer++;
        edge_stack.emplace_back(v, w);
        stack.push_back(w);
        if (v == 0) ++root_children;
      } else if (w != parent[v] && disc[w] < disc[v]) {
        edge_stack.emplace_back(v, w);
        low[v] = std::min(low[v], disc[w]);
      }
      continue;
    }
    stack.pop_back();
    std::size_t p = parent[v];
    if (p == unset) continue;
    low[p] = std::min(low[p], low[v]);
    if (low[v] >= disc[p]) {
      if (p != 0) is_ap[p] = true;
      pop_component(p, v);
    }
    if (low[v] > disc[p]) out.bridges.emplace_back(g.id_at(p), g.id_at(v));
  }
  if (root_children > 1) is_ap[0] = true;

  for (std::size_t i = 0; i < n; ++i)
    if (is_ap[i]) out.articulation_points.push_back(g.id_at(i));
  std::sort(out.bridges.begin(), out.bridges.end());
  std::sort(out.components.begin(), out.components.end());
  return out;
}

VertexSet articulation_points(const Graph& g) { return decompose_blocks(g).articulation_points; }
std::vector<Edge> bridges(const Graph& g) { return decompose_blocks(g).bridges; }
std::vector<VertexSet> biconnected_components(const Graph& g) { return decompose_blocks(g).components; }

std::optional<Bipartition> is_bipartite(const Graph& g) {
  std::vector<int> color(g.size(), -1);
  Bipartition out;
  for (std::size_t s = 0; s < g.size(); ++s) {
    if (color[s] != -1) continue;
    // indices are in id order, so s is the smallest id of its component
    color[s] = 0;
    std::queue<std::size_t> q;
    q.push(s);
    while (!q.empty()) {
      std::size_t v = q.front();
      q.pop();
      (color[v] == 0 ? out.first : out.second).push_back(g.id_at(v));
      for (std::size_t w : g.adjacent(v)) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          q.push(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  std::sort(out.first.begin(), out.first.end());
  std::sort(out.second.begin(), out.second.end());
  return out;
}

Ball ball(const Graph& g, VertexId center, std::size_t radius) {
  auto dist = bfs_distances(g, g.index_of(center));
  VertexSet inside;
  VertexSet boundary;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (dist[i] > radius) continue;
    inside.push_back(g.id_at(i));
    if (dist[i] == radius) {
      auto adj = g.adjacent(i);
      if (std::any_of(adj.begin(), adj.end(), [&](std::size_t w) { return dist[w] > radius; }))
        boundary.push_back(g.id_at(i));
    }
  }
  return {induced_subgraph(g, inside), boundary};
}

std::size_t diameter(const Graph& g) {
  if (!is_connected(g)) throw DisconnectedGraphError("diameter");
  std::size_t best = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    auto dist = bfs_distances(g, i);
    best = std::max(best, *std::max_element(dist.begin(), dist.end()));
  }
  return best;
}

Graph remove_edges(const Graph& g, const std::vector<Edge>& edges) {
  std::vector<Edge> drop = edges;
  std::sort(drop.begin(), drop.end());
  for (const Edge& e : drop)
    if (!g.has_edge(e.u, e.v))
      throw GraphError("cannot remove missing edge " + std::to_string(e.u) + "-" +
                       std::to_string(e.v));
  std::vector<Edge> keep;
  for (const Edge& e : g.edges())
    if (!std::binary_search(drop.begin(), drop.end(), e)) keep.push_back(e);
  return Graph({g.vertices().begin(), g.vertices().end()}, keep);
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<Edge> es;
  for (VertexId v : keep)
    for (std::size_t j : g.adjacent(g.index_of(v))) {
      VertexId w = g.id_at(j);
      if (v < w && contains(keep, w)) es.emplace_back(v, w);
    }
  return Graph(keep, es);
}

std::string to_dot(const Graph& g) {
  VertexSet aps = articulation_points(g);
  std::ostringstream out;
  out << "graph G {\n";
  for (VertexId v : g.vertices()) {
    out << "  " << v;
    if (g.degree(v) == 1)
      out << " [shape=circle, style=filled, fillcolor=lightblue]";
    else if (contains(aps, v))
      out << " [shape=diamond, style=filled, fillcolor=orange]";
    out << ";\n";
  }
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace rmis
