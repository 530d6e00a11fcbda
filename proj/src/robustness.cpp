#include "rmis/robustness.hpp"

#include <algorithm>
#include <numeric>

namespace rmis {

namespace {

std::vector<bool> membership(const Graph& g, const VertexSet& s) {
  std::vector<bool> in(g.size(), false);
  for (VertexId v : s) in[g.index_of(v)] = true;
  return in;
}

// Connectivity of g restricted to edges not flagged in `removed`, which is
// indexed like g.adjacent(v).
bool connected_without(const Graph& g, const std::vector<std::vector<bool>>& removed) {
  std::vector<bool> seen(g.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    auto adj = g.adjacent(v);
    for (std::size_t k = 0; k < adj.size(); ++k) {
      if (removed[v][k] || seen[adj[k]]) continue;
      seen[adj[k]] = true;
      ++count;
      stack.push_back(adj[k]);
    }
  }
  return count == g.size();
}

std::size_t slot(const Graph& g, std::size_t v, std::size_t w) {
  auto adj = g.adjacent(v);
  return static_cast<std::size_t>(std::lower_bound(adj.begin(), adj.end(), w) - adj.begin());
}

}  // namespace

bool is_independent(const Graph& g, const VertexSet& s) {
  auto in = membership(g, s);
  for (VertexId v : s)
    for (std::size_t w : g.adjacent(g.index_of(v)))
      if (in[w]) return false;
  return true;
}

bool is_mis(const Graph& g, const VertexSet& s) {
  if (!is_independent(g, s)) return false;
  auto in = membership(g, s);
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (in[v]) continue;
    auto adj = g.adjacent(v);
    if (std::none_of(adj.begin(), adj.end(), [&](std::size_t w) { return in[w]; })) return false;
  }
  return true;
}

bool is_robust_mis(const Graph& g, const VertexSet& s) {
  if (!is_connected(g)) throw DisconnectedGraphError("is_robust_mis");
  if (!is_mis(g, s)) return false;
  auto in = membership(g, s);
  std::vector<std::vector<bool>> removed(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) removed[v].assign(g.adjacent(v).size(), false);

  for (std::size_t u = 0; u < g.size(); ++u) {
    if (in[u]) continue;
    auto adj = g.adjacent(u);
    auto mark = [&](bool flag) {
      for (std::size_t k = 0; k < adj.size(); ++k) {
        if (!in[adj[k]]) continue;
        removed[u][k] = flag;
        removed[adj[k]][slot(g, adj[k], u)] = flag;
      }
    };
    mark(true);
    bool still_connected = connected_without(g, removed);
    mark(false);
    if (still_connected) return false;
  }
  return true;
}

bool is_robust_mis_bruteforce(const Graph& g, const VertexSet& s, std::size_t edge_cap) {
  if (!is_connected(g)) throw DisconnectedGraphError("is_robust_mis_bruteforce");
  auto bridge_list = bridges(g);
  std::vector<Edge> removable;
  for (const Edge& e : g.edges())
    if (!std::binary_search(bridge_list.begin(), bridge_list.end(), e)) removable.push_back(e);
  if (removable.size() > edge_cap)
    throw CapExceeded(std::to_string(removable.size()) + " removable edges exceed the cap of " +
                      std::to_string(edge_cap) + "; use is_robust_mis instead");
  if (!is_mis(g, s)) return false;

  auto in = membership(g, s);
  std::vector<std::size_t> in_neighbors(g.size(), 0);
  for (std::size_t v = 0; v < g.size(); ++v)
    for (std::size_t w : g.adjacent(v))
      if (in[w]) ++in_neighbors[v];

  std::vector<std::vector<bool>> removed(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) removed[v].assign(g.adjacent(v).size(), false);

  struct Step {
    std::size_t a, b, ka, kb;
  };
  std::vector<Step> steps;
  for (const Edge& e : removable) {
    std::size_t a = g.index_of(e.u), b = g.index_of(e.v);
    steps.push_back({a, b, slot(g, a, b), slot(g, b, a)});
  }

  auto set_removed = [&](const Step& st, bool flag) {
    removed[st.a][st.ka] = flag;
    removed[st.b][st.kb] = flag;
    // independence means at most one endpoint is in s
    int delta = flag ? -1 : 1;
    if (in[st.a]) in_neighbors[st.b] += delta;
    if (in[st.b]) in_neighbors[st.a] += delta;
  };

  // Every visited state is a connected spanning subgraph; removing more edges
  // never restores connectivity, so a disconnecting removal prunes its subtree.
  auto dfs = [&](auto&& self, std::size_t from) -> bool {
    for (std::size_t v = 0; v < g.size(); ++v)
      if (!in[v] && in_neighbors[v] == 0) return false;
    for (std::size_t i = from; i < steps.size(); ++i) {
      set_removed(steps[i], true);
      bool ok = true;
      if (connected_without(g, removed)) ok = self(self, i + 1);
      set_removed(steps[i], false);
      if (!ok) return false;
    }
    return true;
  };
  return dfs(dfs, 0);
}

std::vector<VertexSet> enumerate_mis(const Graph& g, std::size_t vertex_cap) {
  if (g.size() > vertex_cap)
    throw CapExceeded(std::to_string(g.size()) + " vertices exceed the enumeration cap of " +
                      std::to_string(vertex_cap));
  const std::size_t n = g.size();
  // A vertex's fate is settled once it and all its neighbors are decided.
  std::vector<std::vector<std::size_t>> settle_at(n);
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t last = v;
    for (std::size_t w : g.adjacent(v)) last = std::max(last, w);
    settle_at[last].push_back(v);
  }

  std::vector<bool> in(n, false);
  std::vector<std::size_t> in_neighbors(n, 0);
  std::vector<VertexSet> out;

  auto settled_ok = [&](std::size_t i) {
    return std::all_of(settle_at[i].begin(), settle_at[i].end(),
                       [&](std::size_t v) { return in[v] || in_neighbors[v] > 0; });
  };
  auto dfs = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      VertexSet s;
      for (std::size_t v = 0; v < n; ++v)
        if (in[v]) s.push_back(g.id_at(v));
      out.push_back(std::move(s));
      return;
    }
    if (in_neighbors[i] == 0) {
      in[i] = true;
      for (std::size_t w : g.adjacent(i)) ++in_neighbors[w];
      if (settled_ok(i)) self(self, i + 1);
      for (std::size_t w : g.adjacent(i)) --in_neighbors[w];
      in[i] = false;
    }
    if (settled_ok(i)) self(self, i + 1);
  };
  dfs(dfs, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> enumerate_robust_mis(const Graph& g, std::size_t vertex_cap) {
  auto all = enumerate_mis(g, vertex_cap);
  std::vector<VertexSet> out;
  for (auto& s : all)
    if (is_robust_mis(g, s)) out.push_back(std::move(s));
  return out;
}

}  // namespace rmis
