#include "rmis/local_sim.hpp"

#include <set>

#include "rmis/generators.hpp"

namespace rmis {

const char* decision_name(Decision d) {
  switch (d) {
    case Decision::Undecided: return "UNDECIDED";
    case Decision::In: return "IN";
    case Decision::Out: return "OUT";
  }
  return "?";
}

IdAssignment identity_ids(const Graph& g) {
  IdAssignment ids;
  for (VertexId v : g.vertices()) ids[v] = v;
  return ids;
}

IdAssignment random_ids(const Graph& g, std::uint64_t seed) {
  Rng rng(seed);
  std::set<std::uint64_t> used;
  IdAssignment ids;
  for (VertexId v : g.vertices()) {
    std::uint64_t x;
    do x = rng.below(std::uint64_t{1} << 32);
    while (!used.insert(x).second);
    ids[v] = x;
  }
  return ids;
}

VertexSet SimResult::in_set() const {
  VertexSet out;
  for (const auto& [v, d] : outputs)
    if (d == Decision::In) out.push_back(v);
  return out;
}

SimulationTimeout::SimulationTimeout(std::size_t rounds, VertexSet undecided)
    : std::runtime_error("no decision after " + std::to_string(rounds) +
                         " rounds; undecided: " + format_vertex_set(undecided)),
      undecided_(std::move(undecided)) {}

std::vector<std::optional<ForestMisNode::Message>> ForestMisNode::send() {
  return std::vector<std::optional<Message>>(ctx_.degree, Message{ctx_.uid, status_});
}

void ForestMisNode::receive(const std::vector<std::optional<Message>>& inbox) {
  for (std::size_t i = 0; i < inbox.size(); ++i)
    if (inbox[i]) peers_[i] = {inbox[i]->uid, inbox[i]->status};
  if (status_ != Decision::Undecided) return;
  bool lowest = true;
  for (const Peer& p : peers_) {
    if (p.status == Decision::In) {
      status_ = Decision::Out;
      return;
    }
    if (p.status == Decision::Undecided && p.uid < ctx_.uid) lowest = false;
  }
  if (lowest) status_ = Decision::In;
}

std::vector<std::optional<RmisForallNode::Message>> RmisForallNode::send() {
  Message m{ctx_.uid, nullptr, status_};
  if (round_ < 3 && !fresh_.empty()) {
    m.known = std::make_shared<const Lists>(std::move(fresh_));
    fresh_.clear();
  }
  return std::vector<std::optional<Message>>(ctx_.degree, m);
}

void RmisForallNode::receive(const std::vector<std::optional<Message>>& inbox) {
  ++round_;
  for (std::size_t i = 0; i < inbox.size(); ++i) {
    if (!inbox[i]) continue;
    peers_[i].uid = inbox[i]->uid;
    peers_[i].status = inbox[i]->status;
    if (round_ <= 3 && inbox[i]->known)
      for (const auto& [u, nbrs] : *inbox[i]->known)
        if (known_.try_emplace(u, nbrs).second) fresh_.try_emplace(u, nbrs);
  }
  if (round_ == 1) {
    std::vector<std::uint64_t> mine;
    for (const Peer& p : peers_) mine.push_back(p.uid);
    std::sort(mine.begin(), mine.end());
    known_[ctx_.uid] = mine;
    fresh_[ctx_.uid] = std::move(mine);
  }
  if (round_ == 3) {
    decide_after_collection();
  } else if (round_ > 3 && forest_ && status_ == Decision::Undecided) {
    priority_step();
  }
}

namespace {

// Set only when the lists are closed (every uid mentioned has its own list)
// and describe a complete bipartite graph: whether `me` shares a side with
// the smallest uid.
std::optional<bool> complete_bipartite_side(const RmisForallNode::Lists& lists, std::uint64_t me) {
  std::vector<std::uint64_t> uids;
  std::vector<const std::vector<std::uint64_t>*> adj;
  for (const auto& [u, nbrs] : lists) {
    uids.push_back(u);
    adj.push_back(&nbrs);
  }
  auto index = [&](std::uint64_t u) -> std::size_t {
    auto it = std::lower_bound(uids.begin(), uids.end(), u);
    return it != uids.end() && *it == u ? static_cast<std::size_t>(it - uids.begin()) : uids.size();
  };
  std::vector<int> side(uids.size(), -1);
  std::vector<std::size_t> stack{0};
  side[0] = 0;
  std::size_t count[2] = {1, 0};
  while (!stack.empty()) {
    std::size_t u = stack.back();
    stack.pop_back();
    for (std::uint64_t w : *adj[u]) {
      std::size_t j = index(w);
      if (j == uids.size()) return std::nullopt;
      if (side[j] < 0) {
        side[j] = 1 - side[u];
        ++count[side[j]];
        stack.push_back(j);
      } else if (side[j] == side[u]) {
        return std::nullopt;
      }
    }
  }
  if (count[1] == 0 || count[0] + count[1] != uids.size()) return std::nullopt;
  for (std::size_t i = 0; i < uids.size(); ++i)
    if (adj[i]->size() != count[1 - side[i]]) return std::nullopt;
  return side[index(me)] == 0;
}

}  // namespace

void RmisForallNode::decide_after_collection() {
  if (auto low_side = complete_bipartite_side(known_, ctx_.uid)) {
    status_ = *low_side ? Decision::In : Decision::Out;
    return;
  }

  auto pendant = [&](std::uint64_t u) { return known_.at(u).size() == 1; };
  auto has_pendant_neighbor = [&](std::uint64_t u) {
    const auto& nbrs = known_.at(u);
    return std::any_of(nbrs.begin(), nbrs.end(), pendant);
  };
  if (ctx_.degree == 1) {
    status_ = Decision::In;
  } else if (has_pendant_neighbor(ctx_.uid)) {
    status_ = Decision::Out;
  } else {
    forest_ = true;
    for (Peer& p : peers_) p.residual = !has_pendant_neighbor(p.uid);
    priority_step();
  }
}

void RmisForallNode::priority_step() {
  bool lowest = true;
  for (const Peer& p : peers_) {
    if (!p.residual) continue;
    if (p.status == Decision::In) {
      status_ = Decision::Out;
      return;
    }
    if (p.status == Decision::Undecided && p.uid < ctx_.uid) lowest = false;
  }
  if (lowest) status_ = Decision::In;
}

SimResult run_rmis_forall(const Graph& g, const IdAssignment& ids, std::size_t max_rounds) {
  return run_sync<RmisForallNode>(g, ids, [](NodeContext c) { return RmisForallNode(c); }, max_rounds);
}

SimResult run_forest_mis(const Graph& g, const IdAssignment& ids, std::size_t max_rounds) {
  return run_sync<ForestMisNode>(g, ids, [](NodeContext c) { return ForestMisNode(c); }, max_rounds);
}

LabeledView labeled_view(const Graph& g, const IdAssignment& ids, VertexId center, std::size_t radius) {
  Ball b = ball(g, center, radius);
  LabeledView view;
  view.center = ids.at(center);
  for (VertexId v : b.graph.vertices()) view.vertices.push_back(ids.at(v));
  for (const Edge& e : b.graph.edges()) {
    auto [x, y] = std::minmax(ids.at(e.u), ids.at(e.v));
    view.edges.emplace_back(x, y);
  }
  std::sort(view.vertices.begin(), view.vertices.end());
  std::sort(view.edges.begin(), view.edges.end());
  return view;
}

namespace {

// b_i <-> beta_i, a_i <-> alpha_i, c_i <-> gamma_i; an automorphism of G_k.
VertexId mirror(VertexId v) { return 6 * (v / 6) + (v % 6 + 3) % 6; }

constexpr std::uint64_t kLabelBase = 1'000'000'000;

}  // namespace

ThreeLabelings three_labelings(std::size_t k) {
  GkInstance inst = gen_gk(k);
  ThreeLabelings out;
  out.b_k = inst.at("b" + std::to_string(k));
  out.beta_k = inst.at("beta" + std::to_string(k));
  const Graph& g = inst.graph;
  Ball b_ball = ball(g, out.b_k, k);
  auto around_b = b_ball.graph.vertices();

  std::vector<std::map<VertexId, std::uint64_t>> labeling(3);
  for (std::size_t j = 0; j < 3; ++j) {
    std::vector<std::uint64_t> values(around_b.size());
    for (std::size_t i = 0; i < values.size(); ++i) values[i] = (j + 1) * kLabelBase + i;
    Rng rng(j + 1);
    rng.shuffle(values.begin(), values.end());
    for (std::size_t i = 0; i < around_b.size(); ++i) labeling[j][around_b[i]] = values[i];
  }

  auto build = [&](std::size_t at_b, std::size_t at_beta) {
    IdAssignment ids = identity_ids(g);
    for (const auto& [v, id] : labeling[at_b]) ids[v] = id;
    for (const auto& [v, id] : labeling[at_beta]) ids[mirror(v)] = id;
    return ids;
  };
  out.g1 = build(0, 1);
  out.g2 = build(0, 2);
  out.g3 = build(1, 2);
  return out;
}

IndistinguishabilityReport check_indistinguishability(std::size_t k) {
  if (k < 1) throw std::invalid_argument("indistinguishability needs k >= 1");
  GkInstance inst = gen_gk(k);
  const Graph& g = inst.graph;
  ThreeLabelings t = three_labelings(k);
  IndistinguishabilityReport r;

  Ball b_ball = ball(g, t.b_k, k), beta_ball = ball(g, t.beta_k, k);
  auto bv = b_ball.graph.vertices();
  auto betav = beta_ball.graph.vertices();
  VertexSet common;
  std::set_intersection(bv.begin(), bv.end(), betav.begin(), betav.end(), std::back_inserter(common));
  r.balls_disjoint = common.empty();

  auto view = [&](const IdAssignment& ids, VertexId c) { return labeled_view(g, ids, c, k); };
  LabeledView l1 = view(t.g1, t.b_k), l2 = view(t.g1, t.beta_k), l3 = view(t.g2, t.beta_k);
  std::set<std::uint64_t> seen;
  std::size_t total = 0;
  for (const LabeledView* v : {&l1, &l2, &l3}) {
    seen.insert(v->vertices.begin(), v->vertices.end());
    total += v->vertices.size();
  }
  r.labelings_disjoint = seen.size() == total;

  r.b1_matches_b2 = l1 == view(t.g2, t.b_k);
  r.beta1_matches_b3 = l2 == view(t.g3, t.b_k);
  r.beta2_matches_beta3 = l3 == view(t.g3, t.beta_k);
  r.same_instance_distinct = l1 != l2;
  return r;
}

bool indistinguishability_check(std::size_t k) { return check_indistinguishability(k).ok(); }

}  // namespace rmis
