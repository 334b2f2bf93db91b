#pragma once

#include <optional>
#include <vector>

namespace geoinsert {

/// Literal encoding: variable x is 2x (true) and 2x + 1 (false).
struct Lit {
  int code = 0;

  static Lit pos(int var) { return {2 * var}; }
  static Lit neg(int var) { return {2 * var + 1}; }
  int var() const { return code >> 1; }
  bool negated() const { return code & 1; }
  Lit operator~() const { return {code ^ 1}; }
};

/// 2-SAT via the implication graph and its strongly connected components.
class TwoSatSolver {
 public:
  explicit TwoSatSolver(int variables = 0) : graph_(2 * variables) {}

  int add_variable();
  int variable_count() const { return static_cast<int>(graph_.size() / 2); }
  int clause_count() const { return clauses_; }

  void add_clause(Lit a, Lit b);
  void add_implication(Lit a, Lit b) { add_clause(~a, b); }
  void add_unit(Lit a) { add_clause(a, a); }
  void add_equal(Lit a, Lit b) {
    add_implication(a, b);
    add_implication(b, a);
  }

  /// Satisfying assignment, or nullopt when unsatisfiable.
  std::optional<std::vector<bool>> solve() const;

 private:
  std::vector<std::vector<int>> graph_;
  int clauses_ = 0;
};

}  // namespace geoinsert
