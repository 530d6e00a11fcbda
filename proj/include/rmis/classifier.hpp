#pragma once

#include <optional>

#include "rmis/graph.hpp"

namespace rmis {

struct ClassVerdict {
  std::optional<Bipartition> complete_bipartite;
  bool sputnik = false;
  bool rmis_forall = false;

  bool is_complete_bipartite() const { return complete_bipartite.has_value(); }
};

/// The bipartition of g when every cross pair is an edge and both sides are
/// non-empty. A single vertex is therefore never complete bipartite.
std::optional<Bipartition> is_complete_bipartite(const Graph& g);

/// Every vertex in a biconnected component of three or more vertices has a
/// pendant neighbor. Trees (including K1) qualify vacuously.
bool is_sputnik(const Graph& g);

/// Whether every MIS of g is robust: complete bipartite or sputnik.
ClassVerdict in_rmis_forall(const Graph& g);

}  // namespace rmis
