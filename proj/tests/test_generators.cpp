#include <doctest.h>

#include <set>

#include "rmis/classifier.hpp"
#include "rmis/generators.hpp"
#include "rmis/robustness.hpp"

using namespace rmis;

TEST_CASE("G_k structure by name") {
  for (std::size_t k = 0; k <= 6; ++k) {
    GkInstance gk = gen_gk(k);
    auto has = [&](const std::string& x, const std::string& y) { return gk.graph.has_edge(gk.at(x), gk.at(y)); };
    CHECK(gk.graph.size() == 6 * (k + 1));
    CHECK(gk.names.size() == 6 * (k + 1));
    std::size_t edges = 6;
    CHECK(has("a0", "b0"));
    CHECK(has("b0", "c0"));
    CHECK(has("c0", "gamma0"));
    CHECK(has("gamma0", "beta0"));
    CHECK(has("beta0", "alpha0"));
    CHECK(has("alpha0", "a0"));
    for (std::size_t i = 1; i <= k; ++i) {
      auto s = [](const char* n, std::size_t j) { return n + std::to_string(j); };
      for (const char* side : {"alpha", "gamma"}) {
        CHECK(has(s("beta", i - 1), s(side, i)));
        CHECK(has(s(side, i), s("beta", i)));
      }
      for (const char* side : {"a", "c"}) {
        CHECK(has(s("b", i - 1), s(side, i)));
        CHECK(has(s(side, i), s("b", i)));
      }
      edges += 8;
    }
    CHECK(gk.graph.edge_count() == edges);
    CHECK(is_connected(gk.graph));
  }
  CHECK_THROWS(gen_gk(0).at("delta0"));
}

TEST_CASE("G_k carries two complementary robust sets") {
  for (std::size_t k = 0; k <= 50; ++k) {
    GkInstance gk = gen_gk(k);
    REQUIRE(gk.m1.size() == 3 * (k + 1));
    REQUIRE(set_union(gk.m1, gk.m2).size() == gk.graph.size());
    REQUIRE(is_robust_mis(gk.graph, gk.m1));
    REQUIRE(is_robust_mis(gk.graph, gk.m2));
    REQUIRE(is_bipartite(gk.graph));
  }
}

TEST_CASE("G_k mirror symmetry") {
  GkInstance gk = gen_gk(4);
  auto mirror = [](VertexId v) { return 6 * (v / 6) + (v % 6 + 3) % 6; };
  for (const Edge& e : gk.graph.edges()) CHECK(gk.graph.has_edge(mirror(e.u), mirror(e.v)));
  CHECK(mirror(gk.at("b4")) == gk.at("beta4"));
}

TEST_CASE("named families") {
  Graph bull = gen_bull();
  std::multiset<std::size_t> deg;
  for (VertexId v : bull.vertices()) deg.insert(bull.degree(v));
  CHECK(deg == std::multiset<std::size_t>{1, 1, 2, 3, 3});

  Graph lolli = gen_lollipop(5, 4);
  CHECK(lolli.size() == 9);
  CHECK(lolli.edge_count() == 6 + 5);
  CHECK(pendant_vertices(lolli).size() == 1);
  CHECK(is_connected(lolli));

  CHECK(gen_complete(5).edge_count() == 10);
  CHECK(gen_cycle(7).edge_count() == 7);
  CHECK(gen_star(4).degree(0) == 4);
  CHECK(gen_complete_bipartite(2, 3).edge_count() == 6);
  CHECK(gen_triangle() == gen_complete(3));
  CHECK(gen_square() == gen_cycle(4));
  CHECK_THROWS(gen_cycle(2));
  CHECK_THROWS(gen_complete_bipartite(0, 3));
}

TEST_CASE("random connected graphs") {
  CHECK(gen_random_connected(1, 0.5, 3).size() == 1);
  CHECK(gen_random_connected(6, 1.0, 3) == gen_complete(6));
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Graph g = gen_random_connected(15, 0.1, seed);
    REQUIRE(g.size() == 15);
    REQUIRE(is_connected(g));
    REQUIRE(g == gen_random_connected(15, 0.1, seed));
  }
  CHECK(gen_random_connected(20, 0.2, 1) != gen_random_connected(20, 0.2, 2));
}

TEST_CASE("random sputniks") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Graph g = gen_random_sputnik(seed, 20);
    REQUIRE(is_connected(g));
    REQUIRE(is_sputnik(g));
    REQUIRE(g.size() <= 40);
    REQUIRE(g == gen_random_sputnik(seed, 20));
    for (VertexId v : g.vertices())
      if (v >= 20) REQUIRE(g.degree(v) == 1);
  }
  CHECK(is_sputnik(gen_random_sputnik(5, 10, 1.0)));
  CHECK(gen_random_sputnik(5, 10, 1.0).size() == 20);
}

TEST_CASE("rng is reproducible and in range") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  Rng r(1);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 1000; ++i) {
    auto x = r.below(7);
    REQUIRE(x < 7);
    seen.insert(x);
    double u = r.unit();
    REQUIRE((u >= 0.0 && u < 1.0));
  }
  CHECK(seen.size() == 7);
}
