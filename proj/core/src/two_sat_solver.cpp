#include "geoinsert/two_sat_solver.hpp"

#include <algorithm>

namespace geoinsert {

int TwoSatSolver::add_variable() {
  graph_.emplace_back();
  graph_.emplace_back();
  return variable_count() - 1;
}

void TwoSatSolver::add_clause(Lit a, Lit b) {
  graph_[(~a).code].push_back(b.code);
  graph_[(~b).code].push_back(a.code);
  ++clauses_;
}

std::optional<std::vector<bool>> TwoSatSolver::solve() const {
  // iterative Tarjan; components come out in reverse topological order
  const int n = static_cast<int>(graph_.size());
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<char> on_stack(n, 0);
  std::vector<int> stack;
  std::vector<std::pair<int, size_t>> call;
  int counter = 0, components = 0;

  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    call.emplace_back(root, 0);
    while (!call.empty()) {
      auto& [v, next] = call.back();
      if (next == 0 && index[v] == -1) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = 1;
      }
      if (next < graph_[v].size()) {
        const int w = graph_[v][next++];
        if (index[w] == -1) {
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = components;
        } while (w != v);
        ++components;
      }
      const int finished = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[finished]);
    }
  }

  std::vector<bool> value(variable_count());
  for (int x = 0; x < variable_count(); ++x) {
    const int t = comp[2 * x], f = comp[2 * x + 1];
    if (t == f) return std::nullopt;
    // Tarjan numbers sinks first; pick the literal whose component is later in topological order
    value[x] = t < f;
  }
  return value;
}

}  // namespace geoinsert
