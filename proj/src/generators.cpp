#include "rmis/generators.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace rmis {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below needs a positive bound");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do x = engine_();
  while (x >= limit);
  return x % bound;
}

namespace {

constexpr std::size_t kNoComponent = std::numeric_limits<std::size_t>::max();

std::vector<VertexId> iota_ids(std::size_t n) {
  std::vector<VertexId> ids(n);
  std::iota(ids.begin(), ids.end(), VertexId{0});
  return ids;
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

GkInstance gen_gk(std::size_t k) {
  GkInstance out;
  static const char* const kNames[] = {"a", "b", "c", "alpha", "beta", "gamma"};
  auto id = [](std::size_t level, int slot) { return static_cast<VertexId>(6 * level + slot); };
  enum { a, b, c, alpha, beta, gamma };

  std::vector<Edge> es{{id(0, a), id(0, b)},         {id(0, b), id(0, c)},
                       {id(0, c), id(0, gamma)},     {id(0, gamma), id(0, beta)},
                       {id(0, beta), id(0, alpha)},  {id(0, alpha), id(0, a)}};
  for (std::size_t i = 1; i <= k; ++i) {
    es.insert(es.end(), {{id(i - 1, beta), id(i, alpha)}, {id(i - 1, beta), id(i, gamma)},
                         {id(i, alpha), id(i, beta)},     {id(i, gamma), id(i, beta)},
                         {id(i - 1, b), id(i, a)},        {id(i - 1, b), id(i, c)},
                         {id(i, a), id(i, b)},            {id(i, c), id(i, b)}});
  }
  for (std::size_t i = 0; i <= k; ++i) {
    for (int s = 0; s < 6; ++s) out.names[kNames[s] + std::to_string(i)] = id(i, s);
    out.m1.insert(out.m1.end(), {id(i, b), id(i, alpha), id(i, gamma)});
    out.m2.insert(out.m2.end(), {id(i, a), id(i, c), id(i, beta)});
  }
  out.graph = Graph(iota_ids(6 * (k + 1)), es);
  out.m1 = make_vertex_set(out.m1);
  out.m2 = make_vertex_set(out.m2);
  return out;
}

Graph gen_complete_bipartite(std::size_t m, std::size_t n) {
  require(m >= 1 && n >= 1, "complete bipartite graph needs two non-empty parts");
  std::vector<Edge> es;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) es.emplace_back(i, m + j);
  return Graph(iota_ids(m + n), es);
}

Graph gen_complete(std::size_t n) {
  require(n >= 1, "complete graph needs at least one vertex");
  std::vector<Edge> es;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) es.emplace_back(i, j);
  return Graph(iota_ids(n), es);
}

Graph gen_cycle(std::size_t n) {
  require(n >= 3, "cycle needs at least three vertices");
  std::vector<Edge> es;
  for (std::size_t i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return Graph(iota_ids(n), es);
}

Graph gen_path(std::size_t n) {
  require(n >= 1, "path needs at least one vertex");
  std::vector<Edge> es;
  for (std::size_t i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return Graph(iota_ids(n), es);
}

Graph gen_star(std::size_t leaves) {
  require(leaves >= 1, "star needs at least one leaf");
  return gen_complete_bipartite(1, leaves);
}

Graph gen_bull() { return Graph::from_edges({{0, 1}, {1, 2}, {2, 4}, {1, 3}, {2, 3}}); }

Graph gen_triangle() { return gen_cycle(3); }

Graph gen_square() { return gen_cycle(4); }

Graph gen_lollipop(std::size_t path_len, std::size_t clique_size) {
  require(clique_size >= 3, "lollipop clique needs at least three vertices");
  require(path_len >= 1, "lollipop path needs at least one vertex");
  std::vector<Edge> es = gen_complete(clique_size).edges();
  for (std::size_t i = 0; i < path_len; ++i) es.emplace_back(clique_size - 1 + i, clique_size + i);
  return Graph(iota_ids(clique_size + path_len), es);
}

Graph gen_random_connected(std::size_t n, double edge_prob, std::uint64_t seed) {
  require(n >= 1, "random graph needs at least one vertex");
  require(edge_prob >= 0.0 && edge_prob <= 1.0, "edge probability must lie in [0, 1]");
  Rng rng(seed);
  std::vector<Edge> es;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng.chance(edge_prob)) es.emplace_back(i, j);

  Graph draw(iota_ids(n), es);
  std::vector<std::size_t> comp(n, kNoComponent);
  std::vector<std::vector<VertexId>> members;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] != kNoComponent) continue;
    members.emplace_back();
    std::vector<std::size_t> stack{s};
    comp[s] = members.size() - 1;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      members.back().push_back(v);
      for (std::size_t w : draw.adjacent(v))
        if (comp[w] == kNoComponent) {
          comp[w] = comp[s];
          stack.push_back(w);
        }
    }
  }
  if (members.size() == 1) return draw;
  rng.shuffle(members.begin(), members.end());
  for (std::size_t i = 1; i < members.size(); ++i) {
    const auto& here = members[i];
    const auto& there = members[rng.below(i)];
    es.emplace_back(here[rng.below(here.size())], there[rng.below(there.size())]);
  }
  return Graph(iota_ids(n), es);
}

Graph gen_random_sputnik(std::uint64_t seed, std::size_t size) {
  return gen_random_sputnik(seed, size, std::min(1.0, 3.0 / static_cast<double>(size)));
}

Graph gen_random_sputnik(std::uint64_t seed, std::size_t size, double edge_prob) {
  Graph base = gen_random_connected(size, edge_prob, seed);
  if (size < 3) return base;
  auto blocks = decompose_blocks(base);
  VertexSet on_cycle;
  for (const VertexSet& c : blocks.components)
    if (c.size() >= 3) on_cycle = set_union(on_cycle, c);

  std::vector<Edge> es = base.edges();
  VertexId fresh = size;
  for (VertexId v : on_cycle) {
    bool has_pendant = false;
    for (std::size_t w : base.adjacent(v))
      if (base.adjacent(w).size() == 1) has_pendant = true;
    if (!has_pendant) es.emplace_back(v, fresh++);
  }
  return Graph(iota_ids(fresh), es);
}

}  // namespace rmis
