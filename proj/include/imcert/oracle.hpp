#pragma once

#include <vector>

#include "imcert/graph.hpp"
#include "imcert/lp.hpp"

namespace imcert {

inline constexpr int kDefaultOracleCap = 64;

// Square of the line graph: one vertex per edge of the source graph,
// adjacency e ~ f iff f lies in C_G(e). Independent sets correspond exactly
// to induced matchings of the source.
struct ConflictGraph {
    int n = 0;
    std::vector<std::vector<int>> adj;  // sorted, no self loops
};

ConflictGraph build_conflict_graph(const Graph& g);

struct NuSResult {
    int value;
    InducedMatching witness;
};

// nu_s(g) by branch and bound on the conflict graph (greedy clique-cover
// bound, lowest-id branching). Throws PreconditionError above the cap.
NuSResult exact_nu_s(const Graph& g, int cap = kDefaultOracleCap);

// Ordinary matching number nu(g), same branch-and-bound machinery on the
// line graph.
int exact_matching_number(const Graph& g, int cap = kDefaultOracleCap);

// x = 1/2 on a matching, 0 elsewhere: feasible for (P) with value |m|/2.
EdgeWeights half_matching_primal(const Graph& g, const std::vector<int>& matching);

}  // namespace imcert
