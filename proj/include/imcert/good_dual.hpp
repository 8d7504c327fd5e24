#pragma once

#include <vector>

#include "imcert/graph.hpp"
#include "imcert/lp.hpp"

namespace imcert {

// Dual feasible y with y(delta(u)) >= 1/2 at every vertex of degree < delta
// and y(E) <= delta*n/(2*delta+1), equality exactly when every component is
// the once-subdivided star. Certifies the upper bound on nu_s^*.
struct GoodDual {
    EdgeWeights y;
    int delta_bound;
    Rat total;
};

// What happened at one recursion level of the constructor.
enum class DualCase {
    uniform,               // delta-regular component, uniform 1/(2*delta-1)
    pendant,               // min degree 1, residual after {u,v,w} stays chunky
    pendant_tight_pair,    // tight pendant case, v has a neighbor in a pair
    pendant_tight_tree,    // tight pendant case, reroute through a subdivided star
    neighborhood,          // residual is g - N[u]
    neighborhood_tight,    // tight neighborhood case
};

const char* dual_case_name(DualCase c);

struct DualTraceLevel {
    int depth = 0;
    DualCase kind = DualCase::uniform;
    int u = -1, v = -1, w = -1;       // root vertex ids where applicable
    std::vector<int> isolated;        // I1: isolated vertices of the residual
    std::vector<int> pair_vertices;   // I2: vertices of order-2 residual components
    std::vector<int> connector_edges; // root edge ids of the selected set M
    int sub_order = 0;                // order of the sub-instance at this level
    Rat added;                        // weight contributed at this level
};

using CaseTrace = std::vector<DualTraceLevel>;

// delta*n/(2*delta+1), exact.
Rat order_bound(long n, int delta);

// True iff g is connected and is the star K_{1,delta} with every edge
// subdivided once (n = 2*delta+1, center of degree delta, mids of degree 2,
// leaves of degree 1).
bool is_t_star(const Graph& g, int delta);
bool all_components_t_star(const Graph& g, int delta);

struct GoodDualResult {
    GoodDual dual;
    CaseTrace trace;
};

// Preconditions: delta >= 2, max degree at most delta, every component of
// order at least 3. All GoodDual invariants are verified before returning;
// violations raise InternalError.
GoodDualResult build_good_dual(const Graph& g, int delta);

}  // namespace imcert
