#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "rmis/abc_tree.hpp"
#include "rmis/classifier.hpp"
#include "rmis/find_rmis.hpp"
#include "rmis/generators.hpp"
#include "rmis/graph.hpp"
#include "rmis/local_sim.hpp"
#include "rmis/robustness.hpp"

using json = nlohmann::json;
using namespace rmis;

namespace {

constexpr int kPositive = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Graph load(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return from_edge_list(text);
}

json set_json(const VertexSet& s) { return json(s); }

json labels_json(const RootedAbcTree& rt, const LabelMap& labels) {
  json out = json::array();
  for (std::size_t x = 0; x < rt.tree().size(); ++x) {
    json ls = json::array();
    for (const Label& l : labels[x].labels()) ls.push_back({{"tag", tag_name(l.tag)}, {"set", l.set}});
    out.push_back({{"node", rt.node(x).name()}, {"labels", ls}});
  }
  return out;
}

void print_trace(std::ostream& os, const RootedAbcTree& rt, const LabelMap& labels) {
  auto walk = [&](auto&& self, std::size_t x, int depth) -> void {
    os << std::string(2 * depth, ' ') << rt.node(x).name() << "  " << labels[x].str() << '\n';
    for (std::size_t c : rt.children(x)) self(self, c, depth + 1);
  };
  walk(walk, rt.root(), 0);
}

IdAssignment parse_ids(const Graph& g, const std::string& text) {
  if (text == "identity") return identity_ids(g);
  const std::string prefix = "random:";
  if (text.rfind(prefix, 0) == 0) {
    try {
      std::size_t used = 0;
      std::uint64_t seed = std::stoull(text.substr(prefix.size()), &used);
      if (used == text.size() - prefix.size()) return random_ids(g, seed);
    } catch (const std::exception&) {
    }
  }
  throw UsageError("--ids expects 'identity' or 'random:<seed>', got '" + text + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Robust maximal independent sets: classify, decompose, search, verify, simulate"};
  app.require_subcommand(1);

  std::string file;
  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", file, "edge-list file, '-' for stdin")->required();
  };

  auto* classify = app.add_subcommand("classify", "complete bipartite / sputnik / all-MIS-robust verdict");
  add_file(classify);

  auto* abc = app.add_subcommand("abc", "print the ABC-tree");
  add_file(abc);
  bool abc_dot = false;
  abc->add_flag("--dot", abc_dot, "emit Graphviz DOT");

  auto* find = app.add_subcommand("find", "find a robust MIS");
  add_file(find);
  bool find_json = false, find_trace = false;
  find->add_flag("--json", find_json, "emit JSON with per-node labels");
  find->add_flag("--trace", find_trace, "print the labeled tree");

  auto* verify = app.add_subcommand("verify", "check whether a set is a robust MIS");
  add_file(verify);
  std::string set_text;
  bool brute = false;
  std::size_t edge_cap = kDefaultRemovableEdgeCap;
  verify->add_option("--set", set_text, "comma-separated vertex ids")->required();
  verify->add_flag("--brute", brute, "enumerate connected spanning subgraphs instead");
  verify->add_option("--max-removable", edge_cap, "removable-edge cap for --brute");

  auto* oracle = app.add_subcommand("oracle", "enumerate every robust MIS");
  add_file(oracle);
  std::size_t vertex_cap = kDefaultVertexCap;
  oracle->add_option("--max-vertices", vertex_cap, "vertex cap for enumeration");

  auto* gen = app.add_subcommand("gen", "generate a graph family as an edge list");
  gen->require_subcommand(1);
  std::size_t k = 0, m = 0, n = 0, path_len = 0, clique = 0;
  double p = 0.3;
  std::uint64_t seed = 0;
  bool gk_json = false;
  auto* g_gk = gen->add_subcommand("gk", "two-RMIS gadget G_k");
  g_gk->add_option("--k", k)->required();
  g_gk->add_flag("--json", gk_json, "emit vertex names and both robust MISs as JSON");
  auto* g_kmn = gen->add_subcommand("complete-bipartite", "K_{m,n}");
  g_kmn->add_option("--m", m)->required();
  g_kmn->add_option("--n", n)->required();
  auto* g_cycle = gen->add_subcommand("cycle", "cycle C_n");
  g_cycle->add_option("--n", n)->required();
  auto* g_path = gen->add_subcommand("path", "path on n vertices");
  g_path->add_option("--n", n)->required();
  auto* g_star = gen->add_subcommand("star", "star with n leaves");
  g_star->add_option("--n", n)->required();
  auto* g_bull = gen->add_subcommand("bull", "bull graph");
  auto* g_tri = gen->add_subcommand("triangle", "triangle");
  auto* g_sq = gen->add_subcommand("square", "4-cycle");
  auto* g_lolli = gen->add_subcommand("lollipop", "clique with a path attached");
  g_lolli->add_option("--path", path_len)->required();
  g_lolli->add_option("--clique", clique)->required();
  auto* g_rand = gen->add_subcommand("random", "random connected graph");
  g_rand->add_option("--n", n)->required();
  g_rand->add_option("--p", p, "edge probability");
  g_rand->add_option("--seed", seed)->required();
  auto* g_sput = gen->add_subcommand("sputnik", "random sputnik");
  g_sput->add_option("--n", n)->required();
  auto* sput_p = g_sput->add_option("--p", p, "edge probability of the base graph");
  g_sput->add_option("--seed", seed)->required();

  auto* simulate = app.add_subcommand("simulate", "run the distributed algorithm for all-MIS-robust graphs");
  add_file(simulate);
  std::string ids_spec = "identity";
  std::size_t max_rounds = 10000;
  simulate->add_option("--ids", ids_spec, "identity | random:<seed>");
  simulate->add_option("--max-rounds", max_rounds);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (classify->parsed()) {
      Graph g = load(file);
      ClassVerdict v = in_rmis_forall(g);
      json out{{"complete_bipartite", v.is_complete_bipartite()},
               {"sputnik", v.sputnik},
               {"rmis_forall", v.rmis_forall}};
      if (v.complete_bipartite)
        out["bipartition"] = {set_json(v.complete_bipartite->first), set_json(v.complete_bipartite->second)};
      std::cout << out.dump() << '\n';
      return v.rmis_forall ? kPositive : kNegative;
    }

    if (abc->parsed()) {
      Graph g = load(file);
      AbcTree t = build_abc_tree(g);
      if (abc_dot) {
        std::cout << tree_to_dot(t);
      } else if (t.size() > 0) {
        std::size_t root = t.has_c_node() ? t.default_root() : 0;
        std::cout << format_tree(orient(t, root));
      }
      return kPositive;
    }

    if (find->parsed()) {
      Graph g = load(file);
      FindRmisRun run = run_find_rmis(g);
      if (find_json) {
        json out{{"exists", run.result.has_value()},
                 {"set", run.result ? set_json(*run.result) : json(nullptr)},
                 {"labels", run.tree ? labels_json(*run.tree, run.labels) : json::array()}};
        if (!run.trace.empty()) out["notes"] = run.trace;
        std::cout << out.dump() << '\n';
      } else {
        if (find_trace) {
          if (run.tree)
            print_trace(std::cout, *run.tree, run.labels);
          else
            std::cout << "(acyclic: two-coloring)\n";
          for (const auto& note : run.trace) std::cout << "note: " << note << '\n';
        }
        std::cout << (run.result ? format_vertex_set(*run.result) : "NO-RMIS") << '\n';
      }
      return run.result ? kPositive : kNegative;
    }

    if (verify->parsed()) {
      Graph g = load(file);
      VertexSet s = parse_vertex_set(set_text);
      for (VertexId v : s)
        if (!g.has_vertex(v)) throw UsageError("vertex " + std::to_string(v) + " is not in the graph");
      bool robust = brute ? is_robust_mis_bruteforce(g, s, edge_cap) : is_robust_mis(g, s);
      std::cout << (robust ? "ROBUST" : (is_mis(g, s) ? "NOT-ROBUST" : "NOT-MIS")) << '\n';
      return robust ? kPositive : kNegative;
    }

    if (oracle->parsed()) {
      Graph g = load(file);
      auto all = enumerate_robust_mis(g, vertex_cap);
      if (all.empty()) std::cout << "NO-RMIS\n";
      for (const auto& s : all) std::cout << format_vertex_set(s) << '\n';
      return all.empty() ? kNegative : kPositive;
    }

    if (gen->parsed()) {
      Graph g;
      if (g_gk->parsed()) {
        GkInstance inst = gen_gk(k);
        if (gk_json) {
          json edges = json::array();
          for (const Edge& e : inst.graph.edges()) edges.push_back({e.u, e.v});
          std::cout << json{{"k", k},
                            {"edges", edges},
                            {"names", inst.names},
                            {"m1", inst.m1},
                            {"m2", inst.m2}}
                           .dump()
                    << '\n';
          return kPositive;
        }
        g = inst.graph;
      } else if (g_kmn->parsed()) {
        g = gen_complete_bipartite(m, n);
      } else if (g_cycle->parsed()) {
        g = gen_cycle(n);
      } else if (g_path->parsed()) {
        g = gen_path(n);
      } else if (g_star->parsed()) {
        g = gen_star(n);
      } else if (g_bull->parsed()) {
        g = gen_bull();
      } else if (g_tri->parsed()) {
        g = gen_triangle();
      } else if (g_sq->parsed()) {
        g = gen_square();
      } else if (g_lolli->parsed()) {
        g = gen_lollipop(path_len, clique);
      } else if (g_rand->parsed()) {
        g = gen_random_connected(n, p, seed);
      } else if (g_sput->parsed()) {
        g = sput_p->count() ? gen_random_sputnik(seed, n, p) : gen_random_sputnik(seed, n);
      }
      std::cout << to_edge_list(g);
      return kPositive;
    }

    if (simulate->parsed()) {
      Graph g = load(file);
      IdAssignment ids = parse_ids(g, ids_spec);
      SimResult r;
      try {
        r = run_rmis_forall(g, ids, max_rounds);
      } catch (const SimulationTimeout& e) {
        std::cerr << "rmis: " << e.what() << '\n';
        return kNegative;
      }
      json outputs = json::object(), rounds = json::object();
      for (const auto& [v, d] : r.outputs) outputs[std::to_string(v)] = decision_name(d);
      for (const auto& [v, t] : r.termination_round) rounds[std::to_string(v)] = t;
      bool valid = is_mis(g, r.in_set());
      std::cout << json{{"outputs", outputs},
                        {"rounds_total", r.rounds_total},
                        {"per_node_rounds", rounds},
                        {"valid_mis", valid}}
                       .dump()
                << '\n';
      return valid ? kPositive : kNegative;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "rmis: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "rmis: " << e.what() << '\n';
    return kUsage;
  } catch (const GraphError& e) {
    std::cerr << "rmis: " << e.what() << '\n';
    return kUsage;
  } catch (const InternalError& e) {
    std::cerr << "rmis: internal error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
