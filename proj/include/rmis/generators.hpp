#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>

#include "rmis/graph.hpp"

namespace rmis {

/// Seeded randomness built only on the engine, whose output sequence is fixed
/// by the standard; std:: distributions are not, so they are avoided here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return unit() < p; }

  template <class It>
  void shuffle(It first, It last) {
    for (auto n = last - first; n > 1; --n) std::swap(first[n - 1], first[below(n)]);
  }

 private:
  std::mt19937_64 engine_;
};

/// Level i uses ids 6i..6i+5 for a_i, b_i, c_i, alpha_i, beta_i, gamma_i.
struct GkInstance {
  Graph graph;
  std::map<std::string, VertexId> names;
  VertexSet m1;  // alpha_i, gamma_i, b_i
  VertexSet m2;  // a_i, c_i, beta_i

  VertexId at(const std::string& name) const { return names.at(name); }
};

GkInstance gen_gk(std::size_t k);

/// Parts are 0..m-1 and m..m+n-1.
Graph gen_complete_bipartite(std::size_t m, std::size_t n);
Graph gen_complete(std::size_t n);
Graph gen_cycle(std::size_t n);
Graph gen_path(std::size_t n);
Graph gen_star(std::size_t leaves);
/// a=0, b=1, c=2, d=3, e=4: triangle b-c-d with pendants a on b and e on c.
Graph gen_bull();
Graph gen_triangle();
/// The 4-cycle 0-1-2-3.
Graph gen_square();
/// Clique on 0..clique_size-1 with a path of path_len further vertices hung
/// off vertex clique_size-1.
Graph gen_lollipop(std::size_t path_len, std::size_t clique_size);

/// Erdos-Renyi draw on 0..n-1; components are then joined by a random
/// spanning tree over them.
Graph gen_random_connected(std::size_t n, double edge_prob, std::uint64_t seed);

/// Random connected graph on `size` vertices, then one fresh pendant for every
/// cycle vertex that has none. Edge probability defaults to min(1, 3/size).
Graph gen_random_sputnik(std::uint64_t seed, std::size_t size);
Graph gen_random_sputnik(std::uint64_t seed, std::size_t size, double edge_prob);

}  // namespace rmis
