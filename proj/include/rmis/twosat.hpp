#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace rmis {

struct Literal {
  std::size_t var = 0;
  bool positive = true;

  Literal operator!() const { return {var, !positive}; }
  friend bool operator==(const Literal&, const Literal&) = default;
};

inline Literal pos(std::size_t v) { return {v, true}; }
inline Literal neg(std::size_t v) { return {v, false}; }

/// Conjunction of binary clauses. A unit clause (l) is stored as (l, l).
class TwoSatFormula {
 public:
  explicit TwoSatFormula(std::size_t variables = 0) : vars_(variables) {}

  std::size_t variable_count() const { return vars_; }
  const std::vector<std::pair<Literal, Literal>>& clauses() const { return clauses_; }

  /// Throws std::out_of_range when a literal names a variable >= variable_count().
  void add_clause(Literal a, Literal b);
  void add_unit(Literal a) { add_clause(a, a); }

 private:
  std::size_t vars_;
  std::vector<std::pair<Literal, Literal>> clauses_;
};

bool evaluate(const TwoSatFormula& f, const std::vector<bool>& assignment);

/// Satisfiability is decided on the implication graph's strongly connected
/// components. The returned assignment is the lexicographically smallest one
/// (false < true) in variable order, so any variable left free ends up false.
std::optional<std::vector<bool>> solve(const TwoSatFormula& f);

}  // namespace rmis
