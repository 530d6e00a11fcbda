#pragma once

// Independent reference implementations used only by tests. Each one follows
// the textbook definition directly and shares no code with the library beyond
// the Graph container.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "rmis/graph.hpp"
#include "rmis/twosat.hpp"

namespace oracle {

using rmis::Edge;
using rmis::Graph;
using rmis::VertexId;
using rmis::VertexSet;

inline bool connected_after(const Graph& g, const std::vector<VertexId>& drop_vertices,
                            const std::vector<Edge>& drop_edges) {
  auto dropped_v = [&](VertexId v) {
    return std::find(drop_vertices.begin(), drop_vertices.end(), v) != drop_vertices.end();
  };
  auto dropped_e = [&](VertexId a, VertexId b) {
    return std::find(drop_edges.begin(), drop_edges.end(), Edge(a, b)) != drop_edges.end();
  };
  std::vector<VertexId> alive;
  for (VertexId v : g.vertices())
    if (!dropped_v(v)) alive.push_back(v);
  if (alive.empty()) return true;
  std::vector<VertexId> seen{alive[0]}, stack{alive[0]};
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : g.neighbors(v)) {
      if (dropped_v(w) || dropped_e(v, w)) continue;
      if (std::find(seen.begin(), seen.end(), w) != seen.end()) continue;
      seen.push_back(w);
      stack.push_back(w);
    }
  }
  return seen.size() == alive.size();
}

inline VertexSet articulation_points(const Graph& g) {
  VertexSet out;
  for (VertexId v : g.vertices())
    if (!connected_after(g, {v}, {})) out.push_back(v);
  return out;
}

inline std::vector<Edge> bridges(const Graph& g) {
  std::vector<Edge> out;
  for (const Edge& e : g.edges())
    if (!connected_after(g, {}, {e})) out.push_back(e);
  return out;
}

// Blocks as maximal vertex sets S (|S| >= 2) whose induced subgraph is
// connected and has no cut vertex.
inline std::vector<VertexSet> blocks(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<VertexSet> good;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    VertexSet s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(g.id_at(i));
    if (s.size() < 2) continue;
    Graph h = rmis::induced_subgraph(g, s);
    if (!connected_after(h, {}, {})) continue;
    bool has_cut = false;
    if (s.size() > 2)
      for (VertexId v : s)
        if (!connected_after(h, {v}, {})) has_cut = true;
    if (!has_cut) good.push_back(s);
  }
  std::vector<VertexSet> out;
  for (const auto& s : good) {
    bool maximal = std::none_of(good.begin(), good.end(), [&](const VertexSet& t) {
      return t.size() > s.size() && std::includes(t.begin(), t.end(), s.begin(), s.end());
    });
    if (maximal) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::size_t> distances(const Graph& g, VertexId src) {
  std::vector<std::size_t> d(g.size(), SIZE_MAX);
  std::vector<VertexId> frontier{src};
  d[g.index_of(src)] = 0;
  for (std::size_t level = 1; !frontier.empty(); ++level) {
    std::vector<VertexId> next;
    for (VertexId v : frontier)
      for (VertexId w : g.neighbors(v))
        if (d[g.index_of(w)] == SIZE_MAX) {
          d[g.index_of(w)] = level;
          next.push_back(w);
        }
    frontier = std::move(next);
  }
  return d;
}

/// Calls f on every connected graph with vertex set {0..n-1}.
inline std::size_t for_each_connected_graph(std::size_t n, const std::function<void(const Graph&)>& f) {
  std::vector<Edge> slots;
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::vector<VertexId> vs(n);
  for (std::size_t i = 0; i < n; ++i) vs[i] = i;
  std::size_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::vector<Edge> es;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (mask >> i & 1) es.push_back(slots[i]);
    Graph g(vs, es);
    if (!connected_after(g, {}, {})) continue;
    ++count;
    f(g);
  }
  return count;
}

inline bool exhaustive_sat(const rmis::TwoSatFormula& f) {
  const std::size_t k = f.variable_count();
  std::vector<bool> a(k);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    for (std::size_t i = 0; i < k; ++i) a[i] = mask >> i & 1;
    if (rmis::evaluate(f, a)) return true;
  }
  return false;
}

/// Plain backtracking isomorphism search; returns a mapping from a's vertices
/// (in id order) to b's vertices, or nothing.
inline std::optional<std::vector<VertexId>> isomorphism(const Graph& a, const Graph& b,
                                                        std::optional<std::pair<VertexId, VertexId>> pin = {}) {
  if (a.size() != b.size() || a.edge_count() != b.edge_count()) return std::nullopt;
  const std::size_t n = a.size();
  std::vector<VertexId> map(n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> go = [&](std::size_t i) -> bool {
    if (i == n) return true;
    VertexId av = a.id_at(i);
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j]) continue;
      VertexId bv = b.id_at(j);
      if (pin && ((av == pin->first) != (bv == pin->second))) continue;
      if (a.degree(av) != b.degree(bv)) continue;
      bool ok = true;
      for (std::size_t p = 0; p < i && ok; ++p)
        if (a.has_edge(av, a.id_at(p)) != b.has_edge(bv, map[p])) ok = false;
      if (!ok) continue;
      used[j] = true;
      map[i] = bv;
      if (go(i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  if (!go(0)) return std::nullopt;
  return map;
}

}  // namespace oracle
