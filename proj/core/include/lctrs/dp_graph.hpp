#pragma once

#include "lctrs/dp.hpp"
#include "lctrs/smt/solver.hpp"

namespace lctrs {

/// Over-approximation of chain adjacency between pairs: node indices into
/// the problem's pair list, edge (i,j) when a chain step i -> j cannot be
/// syntactically/semantically excluded.
struct DpGraph {
  int node_count = 0;
  std::set<std::pair<int, int>> edges;

  bool has_edge(int from, int to) const { return edges.count({from, to}) != 0; }
};

/// The reachability approximation formula on (s, t) with protected
/// variables L. Clauses, first match wins:
///   1. top when s is a variable outside L, or s = f(...) with
///      [f defined and s not in Terms(theory, L)], or
///      [f a calculation symbol, t a value or variable, s not in
///       Terms(theory, L)], or [f a constructor and t a variable
///       outside L];
///   2. pointwise conjunction when s and t share a non-defined head;
///   3. the atom s = t when s in Terms(theory, L), t in Terms(theory, V)
///      and the heads are not the same theory symbol;
///   4. bottom otherwise.
Term psi(const Term& s, const Term& t, const VarSet& l, const LctrsProblem& problem);

/// phi1 and phi2' and psi(r1, l2', LVar(rho1) u LVar(rho2')) with rho2
/// renamed apart from rho1.
Term edge_formula(const DependencyPair& rho1, const DependencyPair& rho2,
                  const LctrsProblem& problem);

/// Edge present iff the edge formula is satisfiable or the solver cannot
/// tell (unknown keeps the edge).
DpGraph build_graph(const DpProblem& p, smt::SmtSolver& solver);

/// Strongly connected components containing at least one edge (size > 1 or
/// a self-loop), in ascending order of their smallest node index.
std::vector<std::vector<int>> nontrivial_sccs(const DpGraph& g);

/// Thm-3 processor: one sub-problem per non-trivial SCC of build_graph(p).
/// An empty result means p is chain-free.
std::vector<DpProblem> scc_processor(const DpProblem& p, smt::SmtSolver& solver,
                                     DpGraph* graph_out = nullptr);

std::string graph_to_dot(const DpGraph& g, const DpProblem& p);

}  // namespace lctrs
