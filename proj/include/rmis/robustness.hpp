#pragma once

#include <cstddef>
#include <vector>

#include "rmis/graph.hpp"

namespace rmis {

class CapExceeded : public GraphError {
 public:
  using GraphError::GraphError;
};

inline constexpr std::size_t kDefaultVertexCap = 16;
inline constexpr std::size_t kDefaultRemovableEdgeCap = 20;

/// Throws GraphError when s names a vertex not in g.
bool is_independent(const Graph& g, const VertexSet& s);
bool is_mis(const Graph& g, const VertexSet& s);

/// Polynomial test: s is a MIS and, for every u outside s, cutting all edges
/// between u and s disconnects g.
bool is_robust_mis(const Graph& g, const VertexSet& s);

/// Checks maximality in every connected spanning subgraph by enumerating
/// subsets of removable (non-bridge) edges. Throws CapExceeded when g has
/// more than `edge_cap` removable edges.
bool is_robust_mis_bruteforce(const Graph& g, const VertexSet& s,
                              std::size_t edge_cap = kDefaultRemovableEdgeCap);

/// All maximal independent sets, sorted lexicographically.
std::vector<VertexSet> enumerate_mis(const Graph& g, std::size_t vertex_cap = kDefaultVertexCap);
std::vector<VertexSet> enumerate_robust_mis(const Graph& g,
                                            std::size_t vertex_cap = kDefaultVertexCap);

}  // namespace rmis
