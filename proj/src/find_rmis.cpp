#include "rmis/find_rmis.hpp"

#include <algorithm>

#include "rmis/twosat.hpp"

namespace rmis {

const char* tag_name(Tag t) {
  switch (t) {
    case Tag::PI: return "PI";
    case Tag::PO: return "PO";
    case Tag::PE: return "PE";
    case Tag::N: return "N";
    case Tag::E: return "E";
  }
  return "?";
}

void LabelSet::add(Tag t, VertexSet set) {
  if (t == Tag::PE && has(Tag::PO)) return;
  if (t == Tag::PO)
    std::erase_if(labels_, [](const Label& l) { return l.tag == Tag::PE; });
  for (Label& l : labels_)
    if (l.tag == t) {
      l.set = std::move(set);
      return;
    }
  labels_.push_back({t, std::move(set)});
  std::sort(labels_.begin(), labels_.end(),
            [](const Label& a, const Label& b) { return a.tag < b.tag; });
}

const VertexSet* LabelSet::find(Tag t) const {
  for (const Label& l : labels_)
    if (l.tag == t) return &l.set;
  return nullptr;
}

std::string LabelSet::str() const {
  std::string out;
  for (const Label& l : labels_) {
    if (!out.empty()) out += ' ';
    out += tag_name(l.tag);
    out += '{' + format_vertex_set(l.set) + '}';
  }
  return out.empty() ? "-" : out;
}

namespace {

const LabelSet kNoLabels;

// Labels of the tree node standing for vertex v inside a component. Only
// articulation points carry labels there.
const LabelSet& vertex_labels(const LabelingContext& ctx, VertexId v) {
  std::size_t node = ctx.rt.tree().vertex_node(v);
  if (node == kNoNode || ctx.rt.node(node).kind != NodeKind::A) return kNoLabels;
  return ctx.labels[node];
}

}  // namespace

std::optional<VertexSet> test_rmis(const LabelingContext& ctx, std::size_t x, const VertexSet& in,
                                   const VertexSet& out) {
  const AbcNode& node = ctx.rt.node(x);
  Graph c = induced_subgraph(ctx.g, node.vertices);

  std::vector<Edge> removed;
  for (const Edge& e : c.edges())
    if (vertex_labels(ctx, e.u).has(Tag::PO) && vertex_labels(ctx, e.v).has(Tag::PO))
      removed.push_back(e);
  Graph rest = remove_edges(c, removed);

  // Component numbering follows smallest vertex; that vertex's side gets the
  // positive literal.
  const std::size_t n = rest.size();
  constexpr auto unset = kNoNode;
  std::vector<std::size_t> comp(n, unset);
  std::vector<bool> positive(n, false);
  std::size_t k = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] != unset) continue;
    comp[s] = k;
    positive[s] = true;
    std::vector<std::size_t> stack{s};
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w : rest.adjacent(v)) {
        if (comp[w] == unset) {
          comp[w] = k;
          positive[w] = !positive[v];
          stack.push_back(w);
        } else if (positive[w] == positive[v]) {
          return std::nullopt;
        }
      }
    }
    ++k;
  }
  auto lit = [&](VertexId v) {
    std::size_t i = rest.index_of(v);
    return Literal{comp[i], positive[i]};
  };

  TwoSatFormula f(k);
  for (VertexId v : node.vertices) {
    const LabelSet& l = vertex_labels(ctx, v);
    if (l.only(Tag::PI)) f.add_unit(lit(v));
    if (l.only(Tag::PO) || l.only(Tag::PE)) f.add_unit(!lit(v));
  }
  for (const Edge& e : removed) f.add_clause(!lit(e.u), !lit(e.v));
  for (VertexId v : in) f.add_unit(lit(v));
  for (VertexId v : out) f.add_unit(!lit(v));

  auto assignment = solve(f);
  if (!assignment) return std::nullopt;

  std::vector<VertexId> chosen;
  for (VertexId v : node.vertices) {
    Literal l = lit(v);
    if ((*assignment)[l.var] == l.positive) chosen.push_back(v);
  }
  VertexSet members = make_vertex_set(chosen);
  VertexSet result = members;
  for (std::size_t child : ctx.rt.children(x)) {
    const LabelSet& l = ctx.labels[child];
    VertexId v = ctx.rt.node(child).vertex();
    const VertexSet* part = nullptr;
    if (contains(members, v)) {
      part = l.find(Tag::PI);
    } else {
      part = l.find(Tag::PO);
      if (!part) part = l.find(Tag::PE);
    }
    if (!part)
      throw InternalError("witness assembly at " + node.name() + ": child " +
                          ctx.rt.node(child).name() + " has no label for the chosen polarity (" +
                          l.str() + ")");
    result = set_union(result, *part);
  }
  return result;
}

void label_node_a(const LabelingContext& ctx, std::size_t x) {
  const auto& kids = ctx.rt.children(x);
  LabelSet& lx = ctx.labels[x];
  auto all = [&](auto pred) {
    return std::all_of(kids.begin(), kids.end(), [&](std::size_t c) { return pred(ctx.labels[c]); });
  };
  auto union_of = [&](auto pick) {
    VertexSet s;
    for (std::size_t c : kids) s = set_union(s, *pick(ctx.labels[c]));
    return s;
  };

  if (all([](const LabelSet& l) { return l.has(Tag::PI); }))
    lx.add(Tag::PI, union_of([](const LabelSet& l) { return l.find(Tag::PI); }));
  if (all([](const LabelSet& l) { return l.has(Tag::PE); }))
    lx.add(Tag::PE, union_of([](const LabelSet& l) { return l.find(Tag::PE); }));
  bool any_po = std::any_of(kids.begin(), kids.end(),
                            [&](std::size_t c) { return ctx.labels[c].has(Tag::PO); });
  if (any_po && all([](const LabelSet& l) { return l.has(Tag::PO) || l.has(Tag::PE); })) {
    lx.add(Tag::PO, union_of([](const LabelSet& l) {
      return l.has(Tag::PO) ? l.find(Tag::PO) : l.find(Tag::PE);
    }));
  }
  // Children that disagree (one needs the point inside, another needs it
  // outside) leave nothing applicable; that is a negative verdict.
  if (lx.empty()) lx = LabelSet::negative();
}

void label_node_b(const LabelingContext& ctx, std::size_t x) {
  std::size_t child = ctx.rt.children(x).front();
  const LabelSet& lc = ctx.labels[child];
  LabelSet& lx = ctx.labels[x];
  VertexId up = ctx.rt.node(ctx.rt.parent(x)).vertex();

  if (const VertexSet* r = lc.find(Tag::PI)) lx.add(Tag::PO, *r);
  if (const VertexSet* r = lc.find(Tag::PO)) {
    lx.add(Tag::PI, set_union({up}, *r));
    lx.add(Tag::PE, *r);
  }
  if (const VertexSet* r = lc.find(Tag::PE)) lx.add(Tag::PI, set_union({up}, *r));
}

void label_node_c(const LabelingContext& ctx, std::size_t x) {
  std::size_t parent = ctx.rt.parent(x);
  VertexId up = ctx.rt.node(parent).vertex();
  LabelSet result;

  if (auto r = test_rmis(ctx, x, {up}, {})) result.add(Tag::PI, *r);
  if (auto r = test_rmis(ctx, x, {}, {up})) {
    result.add(Tag::PO, *r);
  } else {
    LabelSet saved = ctx.labels[parent];
    if (!saved.empty() && ctx.trace)
      ctx.trace->push_back("parent " + ctx.rt.node(parent).name() + " of " +
                           ctx.rt.node(x).name() + " already carried " + saved.str() +
                           " before the PE probe");
    LabelSet probe;
    probe.add(Tag::PO, {});
    ctx.labels[parent] = probe;
    auto probed = test_rmis(ctx, x, {}, {});
    ctx.labels[parent] = saved;
    if (probed) result.add(Tag::PE, *probed);
  }
  ctx.labels[x] = result.empty() ? LabelSet::negative() : result;
}

void label_subtree(const LabelingContext& ctx, std::size_t x) {
  if (x == ctx.rt.root()) throw std::invalid_argument("label_subtree called on the root");
  std::vector<std::size_t> order, stack{x};
  while (!stack.empty()) {
    std::size_t y = stack.back();
    stack.pop_back();
    order.push_back(y);
    for (std::size_t c : ctx.rt.children(y)) stack.push_back(c);
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    std::size_t y = *it;
    const auto& kids = ctx.rt.children(y);
    if (std::any_of(kids.begin(), kids.end(),
                    [&](std::size_t c) { return ctx.labels[c].is_negative(); })) {
      ctx.labels[y] = LabelSet::negative();
      continue;
    }
    switch (ctx.rt.node(y).kind) {
      case NodeKind::A: label_node_a(ctx, y); break;
      case NodeKind::B: label_node_b(ctx, y); break;
      case NodeKind::C: label_node_c(ctx, y); break;
      case NodeKind::P: {
        LabelSet leaf;
        leaf.add(Tag::PI, {ctx.rt.node(y).vertex()});
        leaf.add(Tag::PE, {});
        ctx.labels[y] = leaf;
        break;
      }
    }
  }
}

std::optional<VertexSet> decide(const LabelMap& labels, std::size_t root) {
  if (const VertexSet* s = labels[root].find(Tag::E)) return *s;
  return std::nullopt;
}

FindRmisRun run_find_rmis(const Graph& g) {
  if (!is_connected(g)) throw DisconnectedGraphError("find_rmis");
  if (g.empty()) throw GraphError("find_rmis: empty graph");
  FindRmisRun run;
  if (g.size() == 1) {
    run.result = VertexSet{g.id_at(0)};
    return run;
  }
  AbcTree tree = build_abc_tree(g);
  if (!tree.has_c_node()) {
    run.result = is_bipartite(g)->first;
    return run;
  }

  run.tree = root_at(tree, tree.default_root());
  const RootedAbcTree& rt = *run.tree;
  run.labels.assign(rt.tree().size(), {});
  LabelingContext ctx{g, rt, run.labels, &run.trace};
  std::size_t r = rt.root();
  for (std::size_t c : rt.children(r)) label_subtree(ctx, c);

  const auto& kids = rt.children(r);
  if (std::any_of(kids.begin(), kids.end(), [&](std::size_t c) { return run.labels[c].is_negative(); })) {
    run.labels[r] = LabelSet::negative();
  } else if (auto m = test_rmis(ctx, r, {}, {})) {
    run.labels[r].add(Tag::E, *m);
  } else {
    run.labels[r] = LabelSet::negative();
  }
  run.result = decide(run.labels, r);
  return run;
}

std::optional<VertexSet> find_rmis(const Graph& g) { return run_find_rmis(g).result; }

}  // namespace rmis
