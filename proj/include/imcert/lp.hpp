#pragma once

#include <string>
#include <vector>

#include "imcert/graph.hpp"
#include "imcert/rational.hpp"

namespace imcert {

// One exact rational per edge id. Serves as primal x and dual y alike.
using EdgeWeights = std::vector<Rat>;

// x(F) = sum over F of x_e.
Rat weight_sum(const Graph& g, const EdgeWeights& w, const std::vector<int>& ids);
Rat weight_total(const EdgeWeights& w);

// (P): x >= 0 and x(delta_G(e)) <= 1 for every edge e. Exact.
bool check_primal_feasible(const Graph& g, const EdgeWeights& x);

// (D): y >= 0 and y(delta_G(e)) >= 1 for every edge e. Exact.
bool check_dual_feasible(const Graph& g, const EdgeWeights& y);

enum class LpRole { primal, dual };

struct LpSolution {
    EdgeWeights weights;
    Rat objective;
    LpRole role;
};

struct LpPair {
    LpSolution primal;  // optimal for (P), objective nu_s^*
    LpSolution dual;    // optimal for (D), same objective
};

// Primal simplex with Bland's rule on the standard-form tableau; dual values
// come from the reduced costs of the slack columns of the optimal basis.
// One run certifies both optima (equal objectives, both feasibility checks
// asserted before returning). Deterministic for a fixed input graph.
LpPair solve_lp_pair(const Graph& g);
LpSolution solve_primal(const Graph& g);
LpSolution solve_dual(const Graph& g);

// Exact covering LP: min 1'y  s.t.  sum_{j in rows[i]} y_j >= rhs[i], y >= 0.
// Rows index into 0..num_vars-1. Solved through the LP dual with the same
// simplex core; the returned y is checked feasible before returning.
struct CoverSolution {
    Rat objective;
    std::vector<Rat> y;
};
CoverSolution solve_min_cover(int num_vars,
                              const std::vector<std::vector<int>>& rows,
                              const std::vector<Rat>& rhs);

// (P) in LP text format for cross-checking with external solvers.
std::string lp_dump(const Graph& g);

}  // namespace imcert
