#pragma once

#include <string>
#include <vector>

#include "imcert/graph.hpp"
#include "imcert/lp.hpp"

namespace imcert {

// The chunk handled by one recursion step: the closed neighborhoods of the
// selected edge's endpoints plus whatever those neighborhoods isolate.
struct HeadSubgraph {
    int v0 = -1, v1 = -1;        // parent ids; v0 has minimum degree
    std::vector<int> core;       // N[v0] u N[v1], sorted parent ids
    std::vector<int> isolates;   // I: vertices isolated by removing the core
    Graph h;                     // induced subgraph on core u I
    std::vector<int> vroot;      // h vertex -> parent vertex
    std::vector<int> eroot;      // h edge -> parent edge
    std::vector<int> boundary;   // parent edges between V(h) and the rest
    int h_v0 = -1, h_v1 = -1;    // v0, v1 inside h
};

// Lowest-id vertex of minimum degree and its lowest-id neighbor.
std::pair<int, int> select_head(const Graph& g);

HeadSubgraph build_head(const Graph& g, int v0, int v1);

// Roles of the vertices of a standalone head graph, derived from its
// structure alone (used by the dual assignment and by the checker).
struct HeadRoles {
    int v0, v1;
    std::vector<int> core_minus;  // (N[v0] u N[v1]) minus {v0, v1}
    std::vector<int> isolates;
};
HeadRoles head_roles(const Graph& h, int v0, int v1);

// The per-head feasibility conditions: every edge of h is covered to 1,
// core-minus vertices of degree <= 2 to 2/3, v0/v1 and isolates of degree
// <= 2 to 1/3, and the total stays within 7/3.
bool check_head_conditions(const Graph& h, const HeadRoles& roles,
                           const EdgeWeights& y, std::string* why = nullptr);

// Minimum-total exact solution of the head conditions. Throws InternalError
// if the optimum exceeds 7/3 (cannot happen for heads produced by
// build_head on a subcubic graph).
EdgeWeights assign_head_duals(const HeadSubgraph& head);

struct PdCertificate {
    InducedMatching matching;  // edge ids of the input graph
    EdgeWeights y;             // dual feasible on the input graph
    bool ratio_ok;             // y(E) <= (7/3) |matching|
};

// Recursive primal-dual construction for subcubic graphs: an induced
// matching M and a dual feasible y with |M| >= (3/7) y(E). Isolated
// vertices are ignored; 3-regular components are rejected.
PdCertificate subcubic_primal_dual(const Graph& g);

// Used by the dispatcher to route instances away from the subcubic path.
bool has_cubic_component(const Graph& g);

}  // namespace imcert
