#include "rmis/classifier.hpp"

namespace rmis {

std::optional<Bipartition> is_complete_bipartite(const Graph& g) {
  if (!is_connected(g)) throw DisconnectedGraphError("is_complete_bipartite");
  auto parts = is_bipartite(g);
  if (!parts || parts->first.empty() || parts->second.empty()) return std::nullopt;
  if (g.edge_count() != parts->first.size() * parts->second.size()) return std::nullopt;
  return parts;
}

bool is_sputnik(const Graph& g) {
  auto blocks = decompose_blocks(g);
  for (const VertexSet& comp : blocks.components) {
    if (comp.size() < 3) continue;
    for (VertexId v : comp) {
      bool has_pendant = false;
      for (std::size_t w : g.adjacent(g.index_of(v)))
        if (g.adjacent(w).size() == 1) has_pendant = true;
      if (!has_pendant) return false;
    }
  }
  return true;
}

ClassVerdict in_rmis_forall(const Graph& g) {
  ClassVerdict out;
  out.complete_bipartite = is_complete_bipartite(g);
  out.sputnik = is_sputnik(g);
  out.rmis_forall = out.complete_bipartite.has_value() || out.sputnik;
  return out;
}

}  // namespace rmis
