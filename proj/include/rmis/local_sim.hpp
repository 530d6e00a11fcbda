#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rmis/graph.hpp"

namespace rmis {

enum class Decision { Undecided, In, Out };

const char* decision_name(Decision d);

/// What a node knows when it wakes up: its identifier and how many ports it has.
struct NodeContext {
  std::uint64_t uid;
  std::size_t degree;
};

/// Graph vertex -> unique identifier handed to the node program.
using IdAssignment = std::map<VertexId, std::uint64_t>;

IdAssignment identity_ids(const Graph& g);
/// Distinct identifiers drawn uniformly from [0, 2^32).
IdAssignment random_ids(const Graph& g, std::uint64_t seed);

struct SimResult {
  std::map<VertexId, Decision> outputs;
  std::size_t rounds_total = 0;
  std::map<VertexId, std::size_t> termination_round;

  VertexSet in_set() const;
};

class SimulationTimeout : public std::runtime_error {
 public:
  SimulationTimeout(std::size_t rounds, VertexSet undecided);
  const VertexSet& undecided() const { return undecided_; }

 private:
  VertexSet undecided_;
};

/// Synchronous LOCAL execution. A node program is any type providing
///
///   using Message = ...;
///   std::vector<std::optional<Message>> send();   // one slot per port
///   void receive(const std::vector<std::optional<Message>>& inbox);
///   Decision output() const;
///
/// Port i of a vertex leads to its i-th neighbor in increasing id order.
/// Every round all nodes send, then all messages are delivered, then all nodes
/// receive. A node may decide before the first round. Decided nodes keep
/// running so they can still relay; the run ends once everybody has decided,
/// and the round a node first decides in is its termination round.
template <class Node, class Factory>
SimResult run_sync(const Graph& g, const IdAssignment& ids, Factory&& make, std::size_t max_rounds) {
  using Message = typename Node::Message;
  if (!is_connected(g)) throw DisconnectedGraphError("run_sync");
  const std::size_t n = g.size();

  std::vector<std::uint64_t> uid(n);
  for (std::size_t v = 0; v < n; ++v) {
    auto it = ids.find(g.id_at(v));
    if (it == ids.end())
      throw std::invalid_argument("no identifier for vertex " + std::to_string(g.id_at(v)));
    uid[v] = it->second;
  }
  {
    auto sorted = uid;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("identifiers are not unique");
  }

  // back_port[v][i]: the port of v at its i-th neighbor
  std::vector<std::vector<std::size_t>> back_port(n);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w : g.adjacent(v)) {
      auto adj = g.adjacent(w);
      back_port[v].push_back(static_cast<std::size_t>(std::lower_bound(adj.begin(), adj.end(), v) - adj.begin()));
    }

  std::vector<Node> nodes;
  nodes.reserve(n);
  for (std::size_t v = 0; v < n; ++v) nodes.push_back(make(NodeContext{uid[v], g.adjacent(v).size()}));

  SimResult result;
  std::size_t decided = 0;
  auto record = [&](std::size_t round) {
    for (std::size_t v = 0; v < n; ++v) {
      VertexId id = g.id_at(v);
      if (result.termination_round.count(id)) continue;
      Decision d = nodes[v].output();
      if (d == Decision::Undecided) continue;
      result.termination_round[id] = round;
      result.rounds_total = std::max(result.rounds_total, round);
      ++decided;
    }
  };
  record(0);

  for (std::size_t round = 1; decided < n; ++round) {
    if (round > max_rounds) {
      VertexSet undecided;
      for (std::size_t v = 0; v < n; ++v)
        if (!result.termination_round.count(g.id_at(v))) undecided.push_back(g.id_at(v));
      throw SimulationTimeout(max_rounds, std::move(undecided));
    }
    std::vector<std::vector<std::optional<Message>>> inbox(n);
    for (std::size_t v = 0; v < n; ++v) inbox[v].resize(g.adjacent(v).size());
    for (std::size_t v = 0; v < n; ++v) {
      auto out = nodes[v].send();
      if (out.size() != g.adjacent(v).size())
        throw std::logic_error("node program sent on the wrong number of ports");
      auto adj = g.adjacent(v);
      for (std::size_t i = 0; i < adj.size(); ++i) inbox[adj[i]][back_port[v][i]] = std::move(out[i]);
    }
    for (std::size_t v = 0; v < n; ++v) nodes[v].receive(inbox[v]);
    record(round);
  }

  for (std::size_t v = 0; v < n; ++v) result.outputs[g.id_at(v)] = nodes[v].output();
  return result;
}

/// Iterated identifier priority: an undecided node joins when its uid is
/// below every undecided neighbor's, and leaves once a neighbor has joined.
/// One round to learn neighbor ids, then one status exchange per round.
class ForestMisNode {
 public:
  struct Message {
    std::uint64_t uid;
    Decision status;
  };

  explicit ForestMisNode(NodeContext ctx) : ctx_(ctx), peers_(ctx.degree) {}

  std::vector<std::optional<Message>> send();
  void receive(const std::vector<std::optional<Message>>& inbox);
  Decision output() const { return status_; }

 private:
  struct Peer {
    std::uint64_t uid = 0;
    Decision status = Decision::Undecided;
  };
  NodeContext ctx_;
  std::vector<Peer> peers_;
  Decision status_ = Decision::Undecided;
};

/// Node program for graphs in which every MIS is robust. Three rounds of
/// flooding give each node the adjacency lists of all nodes within distance
/// two. If that knowledge is closed (no node is mentioned without its list)
/// it is the whole graph, and a complete bipartite graph is settled by taking
/// the side of the smallest uid. Otherwise pendants join, their neighbors
/// leave, and the remaining nodes run identifier priority among themselves,
/// ignoring every edge toward a node that has a pendant neighbor.
class RmisForallNode {
 public:
  using Lists = std::map<std::uint64_t, std::vector<std::uint64_t>>;

  /// `known` carries only the lists learned since the previous send; it is
  /// shared between ports, never copied.
  struct Message {
    std::uint64_t uid;
    std::shared_ptr<const Lists> known;
    Decision status;
  };

  explicit RmisForallNode(NodeContext ctx) : ctx_(ctx), peers_(ctx.degree) {}

  std::vector<std::optional<Message>> send();
  void receive(const std::vector<std::optional<Message>>& inbox);
  Decision output() const { return status_; }

  /// Adjacency lists gathered so far, keyed by uid.
  const Lists& knowledge() const { return known_; }

 private:
  struct Peer {
    std::uint64_t uid = 0;
    bool residual = false;
    Decision status = Decision::Undecided;
  };
  void decide_after_collection();
  void priority_step();

  NodeContext ctx_;
  std::vector<Peer> peers_;
  Lists known_;
  Lists fresh_;
  std::size_t round_ = 0;
  bool forest_ = false;
  Decision status_ = Decision::Undecided;
};

SimResult run_rmis_forall(const Graph& g, const IdAssignment& ids, std::size_t max_rounds);
SimResult run_forest_mis(const Graph& g, const IdAssignment& ids, std::size_t max_rounds);

/// Identifier-relabelled radius-r neighborhood of a vertex.
struct LabeledView {
  std::uint64_t center = 0;
  std::vector<std::uint64_t> vertices;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;

  friend bool operator==(const LabeledView&, const LabeledView&) = default;
};

LabeledView labeled_view(const Graph& g, const IdAssignment& ids, VertexId center, std::size_t radius);

/// Three identifier assignments of G_k built from labelings L1, L2, L3 of the
/// radius-k ball around the extremity b_k, transported to the ball around
/// beta_k through b_i <-> beta_i, a_i <-> alpha_i, c_i <-> gamma_i:
/// G1 = (L1 at b_k, L2 at beta_k), G2 = (L1, L3), G3 = (L2, L3).
struct IndistinguishabilityReport {
  bool balls_disjoint = false;
  bool labelings_disjoint = false;
  bool b1_matches_b2 = false;        // L1 in both
  bool beta1_matches_b3 = false;     // L2 in both
  bool beta2_matches_beta3 = false;  // L3 in both
  bool same_instance_distinct = false;

  bool ok() const {
    return balls_disjoint && labelings_disjoint && b1_matches_b2 && beta1_matches_b3 &&
           beta2_matches_beta3 && same_instance_distinct;
  }
};

struct ThreeLabelings {
  IdAssignment g1, g2, g3;
  VertexId b_k = 0, beta_k = 0;
};

ThreeLabelings three_labelings(std::size_t k);
IndistinguishabilityReport check_indistinguishability(std::size_t k);
bool indistinguishability_check(std::size_t k);

}  // namespace rmis
