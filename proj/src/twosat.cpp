#include "rmis/twosat.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace rmis {

namespace {

std::size_t node(Literal l) { return 2 * l.var + (l.positive ? 0 : 1); }

using Adjacency = std::vector<std::vector<std::size_t>>;

Adjacency implication_graph(const TwoSatFormula& f) {
  Adjacency adj(2 * f.variable_count());
  for (auto [a, b] : f.clauses()) {
    adj[node(!a)].push_back(node(b));
    adj[node(!b)].push_back(node(a));
  }
  return adj;
}

// Iterative Tarjan; returns the component index of every implication node.
std::vector<std::size_t> tarjan(const Adjacency& adj) {
  constexpr auto unset = std::numeric_limits<std::size_t>::max();
  const std::size_t n = adj.size();
  std::vector<std::size_t> index(n, unset), low(n, 0), comp(n, unset), next(n, 0);
  std::vector<std::size_t> stack, call;
  std::vector<bool> on_stack(n, false);
  std::size_t counter = 0, comps = 0;

  for (std::size_t s = 0; s < n; ++s) {
    if (index[s] != unset) continue;
    call.push_back(s);
    index[s] = low[s] = counter++;
    stack.push_back(s);
    on_stack[s] = true;
    while (!call.empty()) {
      std::size_t v = call.back();
      if (next[v] < adj[v].size()) {
        std::size_t w = adj[v][next[v]++];
        if (index[w] == unset) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back(w);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      call.pop_back();
      if (!call.empty()) low[call.back()] = std::min(low[call.back()], low[v]);
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = comps;
        } while (w != v);
        ++comps;
      }
    }
  }
  return comp;
}

enum class Value : signed char { unknown = -1, no = 0, yes = 1 };

// Sets lit and everything it implies; on conflict undoes its own work and
// returns false.
bool propagate(const Adjacency& adj, std::vector<Value>& value, std::size_t lit) {
  std::vector<std::size_t> trail, work{lit};
  auto is_true = [&](std::size_t l) {
    Value v = value[l / 2];
    return v != Value::unknown && (v == Value::yes) == (l % 2 == 0);
  };
  auto assign = [&](std::size_t l) {
    value[l / 2] = (l % 2 == 0) ? Value::yes : Value::no;
    trail.push_back(l / 2);
  };
  if (value[lit / 2] != Value::unknown) return is_true(lit);
  assign(lit);
  while (!work.empty()) {
    std::size_t l = work.back();
    work.pop_back();
    for (std::size_t m : adj[l]) {
      if (value[m / 2] == Value::unknown) {
        assign(m);
        work.push_back(m);
      } else if (!is_true(m)) {
        for (std::size_t v : trail) value[v] = Value::unknown;
        return false;
      }
    }
  }
  return true;
}

}  // namespace

void TwoSatFormula::add_clause(Literal a, Literal b) {
  if (a.var >= vars_ || b.var >= vars_)
    throw std::out_of_range("literal variable " + std::to_string(std::max(a.var, b.var)) +
                            " out of range for " + std::to_string(vars_) + " variables");
  clauses_.emplace_back(a, b);
}

bool evaluate(const TwoSatFormula& f, const std::vector<bool>& assignment) {
  auto holds = [&](Literal l) { return assignment.at(l.var) == l.positive; };
  return std::all_of(f.clauses().begin(), f.clauses().end(),
                     [&](const auto& c) { return holds(c.first) || holds(c.second); });
}

std::optional<std::vector<bool>> solve(const TwoSatFormula& f) {
  const auto adj = implication_graph(f);
  const auto comp = tarjan(adj);
  for (std::size_t v = 0; v < f.variable_count(); ++v)
    if (comp[2 * v] == comp[2 * v + 1]) return std::nullopt;

  // Satisfiable, so for a propagation-closed partial assignment at least one
  // polarity of any free variable extends without conflict.
  std::vector<Value> value(f.variable_count(), Value::unknown);
  for (std::size_t v = 0; v < f.variable_count(); ++v) {
    if (value[v] != Value::unknown) continue;
    if (!propagate(adj, value, node(neg(v))) && !propagate(adj, value, node(pos(v))))
      throw std::logic_error("2-SAT propagation failed on a satisfiable formula");
  }
  std::vector<bool> out(f.variable_count());
  for (std::size_t v = 0; v < out.size(); ++v) out[v] = value[v] == Value::yes;
  return out;
}

}  // namespace rmis
