#include "lctrs/dp_graph.hpp"

#include <functional>
#include <sstream>

#include "lctrs/printer.hpp"
#include "lctrs/smt/encoder.hpp"

namespace lctrs {

namespace {

Term bool_value(const LctrsProblem& problem, bool b) {
  return problem.theory().value_term(TheoryValue::boolean(b));
}

Term conjunction(const LctrsProblem& problem, const std::vector<Term>& conjuncts) {
  if (conjuncts.empty()) return bool_value(problem, true);
  FunSymbol land = *problem.theory().find_builtin("and", 2, kBoolSort);
  Term out = conjuncts[0];
  for (std::size_t i = 1; i < conjuncts.size(); ++i)
    out = Term::app(land, {out, conjuncts[i]});
  return out;
}

Term equality_atom(const LctrsProblem& problem, const Term& s, const Term& t) {
  FunSymbol eq = *problem.theory().find_builtin("=", 2, s.sort());
  return Term::app(eq, {s, t});
}

}  // namespace

Term psi(const Term& s, const Term& t, const VarSet& l, const LctrsProblem& problem) {
  std::set<FunSymbol> defined = defined_symbols(problem);

  std::function<Term(const Term&, const Term&)> go = [&](const Term& s_, const Term& t_) -> Term {
    // Clause 1: definitely reachable.
    if (s_.is_var() && !l.count(s_.as_var())) return bool_value(problem, true);
    if (s_.is_app()) {
      const FunSymbol& f = s_.symbol();
      bool is_defined = defined.count(f) != 0;
      bool is_calc = f.in_theory() && !f.is_value();
      bool is_ctor = !is_defined && !is_calc;
      if (is_defined && !is_logical_term(s_, l)) return bool_value(problem, true);
      if (is_calc && (t_.is_value() || t_.is_var()) && !is_logical_term(s_, l))
        return bool_value(problem, true);
      if (is_ctor && t_.is_var() && !l.count(t_.as_var())) return bool_value(problem, true);
    }
    // Clause 2: shared non-defined head, pointwise.
    if (s_.is_app() && t_.is_app() && s_.symbol() == t_.symbol() &&
        !defined.count(s_.symbol())) {
      std::vector<Term> parts;
      for (std::size_t i = 0; i < s_.args().size(); ++i)
        parts.push_back(go(s_.args()[i], t_.args()[i]));
      return conjunction(problem, parts);
    }
    // Clause 3: comparable logical terms become an equality atom.
    bool same_theory_head = s_.is_app() && t_.is_app() && s_.symbol().in_theory() &&
                            t_.symbol().in_theory() && s_.symbol() == t_.symbol();
    if (is_logical_term(s_, l) && is_logical_term(t_) && !same_theory_head)
      return equality_atom(problem, s_, t_);
    // Clause 4.
    return bool_value(problem, false);
  };
  return go(s, t);
}

Term edge_formula(const DependencyPair& rho1, const DependencyPair& rho2,
                  const LctrsProblem& problem) {
  VarSet rho1_vars = rho1.lhs.vars();
  for (const Var& v : rho1.rhs.vars()) rho1_vars.insert(v);
  for (const Var& v : rho1.constraint.vars()) rho1_vars.insert(v);
  DependencyPair rho2p = rename_apart(rho2, rho1_vars);

  VarSet l = lvar(rho1);
  for (const Var& v : lvar(rho2p)) l.insert(v);
  Term reach = psi(rho1.rhs, rho2p.lhs, l, problem);

  FunSymbol land = *problem.theory().find_builtin("and", 2, kBoolSort);
  return Term::app(land, {Term::app(land, {rho1.constraint, rho2p.constraint}), reach});
}

DpGraph build_graph(const DpProblem& p, smt::SmtSolver& solver) {
  DpGraph g;
  g.node_count = static_cast<int>(p.pairs().size());
  for (int i = 0; i < g.node_count; ++i) {
    for (int j = 0; j < g.node_count; ++j) {
      Term formula = edge_formula(p.pairs()[i], p.pairs()[j], p.rules());
      smt::SmtVerdict v = solver.check_sat(smt::sat_query(formula, p.rules().theory()));
      if (!v.is_unsat()) g.edges.insert({i, j});  // sat or unknown keeps the edge
    }
  }
  return g;
}

namespace {

// Tarjan; the graphs are small, recursion depth is bounded by node count.
struct TarjanState {
  const DpGraph& g;
  std::vector<int> index, lowlink, on_stack;
  std::vector<int> stack;
  int counter = 0;
  std::vector<std::vector<int>> sccs;

  explicit TarjanState(const DpGraph& g_)
      : g(g_), index(g_.node_count, -1), lowlink(g_.node_count, 0), on_stack(g_.node_count, 0) {}

  void visit(int v) {
    index[v] = lowlink[v] = counter++;
    stack.push_back(v);
    on_stack[v] = 1;
    for (int w = 0; w < g.node_count; ++w) {
      if (!g.has_edge(v, w)) continue;
      if (index[w] < 0) {
        visit(w);
        lowlink[v] = std::min(lowlink[v], lowlink[w]);
      } else if (on_stack[w]) {
        lowlink[v] = std::min(lowlink[v], index[w]);
      }
    }
    if (lowlink[v] == index[v]) {
      std::vector<int> scc;
      int w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = 0;
        scc.push_back(w);
      } while (w != v);
      std::sort(scc.begin(), scc.end());
      sccs.push_back(std::move(scc));
    }
  }
};

}  // namespace

std::vector<std::vector<int>> nontrivial_sccs(const DpGraph& g) {
  TarjanState st(g);
  for (int v = 0; v < g.node_count; ++v)
    if (st.index[v] < 0) st.visit(v);
  std::vector<std::vector<int>> out;
  for (auto& scc : st.sccs) {
    if (scc.size() > 1 || g.has_edge(scc[0], scc[0])) out.push_back(std::move(scc));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

std::vector<DpProblem> scc_processor(const DpProblem& p, smt::SmtSolver& solver,
                                     DpGraph* graph_out) {
  DpGraph g = build_graph(p, solver);
  std::vector<DpProblem> out;
  for (const std::vector<int>& scc : nontrivial_sccs(g)) out.push_back(p.restricted_to(scc));
  if (graph_out) *graph_out = std::move(g);
  return out;
}

std::string graph_to_dot(const DpGraph& g, const DpProblem& p) {
  std::ostringstream os;
  os << "digraph dp {\n";
  for (int i = 0; i < g.node_count; ++i) {
    os << "  n" << i << " [label=\"" << i + 1 << ": "
       << print_term(p.pairs()[i].lhs) << " -> " << print_term(p.pairs()[i].rhs) << "\"];\n";
  }
  for (const auto& [a, b] : g.edges) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace lctrs
