#pragma once

#include <vector>

#include "imcert/graph.hpp"
#include "imcert/lp.hpp"

namespace imcert {

// Parameters of the general-degree pipeline. (epsilon, c) must satisfy the
// quadratic feasibility system; f = (1-epsilon)*delta + 1/2 is the
// approximation ratio, g = epsilon/(1-c) shows up in the low-degree analysis.
struct RatioParams {
    Rat epsilon;
    Rat c;
    Rat g_param;
    int delta;
    Rat f;
};

// All four feasibility conditions, exact:
//   1.5*(1 + eps*(2c-1+eps)/(1-c-eps)) <= 2c*(1-eps)
//   eps <= (1-c)^2,   eps + c < 1,   eps > 0, c > 0.
bool quad_feasible(const Rat& epsilon, const Rat& c);

// Builds params after verifying feasibility (PreconditionError otherwise).
RatioParams make_params(const Rat& epsilon, const Rat& c, int delta);

// epsilon = 2005/100000, c = 85838/100000.
RatioParams default_params(int delta);

struct PreprocessResult {
    InducedMatching matching;        // committed edges, input ids, pick order
    Graph residual;
    std::vector<int> residual_vroot; // residual vertex -> input vertex
    std::vector<int> residual_eroot; // residual edge -> input edge
    EdgeWeights x;                   // the frozen solution it ran with
    Rat charge;                      // x-mass of the union of removed conflict sets
    std::vector<Rat> step_charges;   // x-mass removed by each committed edge
};

// Repeatedly commits the lowest-id edge whose conflict set carries x-mass at
// most f, deleting that conflict set. Every committed edge charges at most f;
// every residual edge has conflict mass strictly above f.
PreprocessResult local_ratio_preprocess(const Graph& g, const EdgeWeights& x,
                                        const RatioParams& params);

// Greedy with a two-edge local improvement; the m/(1.5*delta^2) size bound
// is enforced as a runtime assertion (InternalError), never silently waived.
InducedMatching residual_greedy(const Graph& g, int delta);

struct RatioCertificate {
    InducedMatching matching;
    Rat nu_s_star;
    Rat f;
    bool ratio_ok;                 // |M| * f >= nu_s_star
    std::vector<int> pre_matching; // the preprocessing picks, in order
    std::vector<Rat> step_charges;
    EdgeWeights x;                 // optimal primal, certifies nu_s_star
    EdgeWeights solver_dual;       // optimal dual, certifies nu_s_star
};

// The full pipeline: solve (P) once, preprocess, finish greedily on the
// residual. Guarantees |M| >= nu_s^*(g) / f, checked exactly.
RatioCertificate approximate_fim(const Graph& g, int delta);

struct DensityCheckResult {
    bool premise_holds;     // x(C(e)) >= f for every edge
    bool conclusion_holds;  // x(E) <= (1-eps) m / (1.5 delta); true if vacuous
};

// Verifies the residual density bound. If the premise holds but the
// conclusion fails, throws InternalError (that combination is impossible for
// feasible parameter pairs).
DensityCheckResult residual_density_check(const Graph& g, const EdgeWeights& x,
                                          const RatioParams& params);

// I = { u : d(u) < c*delta + 1/2 }, exact threshold.
std::vector<int> low_degree_set(const Graph& g, const RatioParams& params);

enum class NeighborhoodCheckStatus {
    holds,                // every low-degree vertex's neighbors pass both bounds
    vacuous,              // the low-degree set is empty
    premise_violated,     // x infeasible or some conflict mass below f
    conclusion_violated,  // premise fine, a neighbor bound fails
};

// For every u in the low-degree set and neighbor v of u:
//   d(v) >= (1-g)*delta + 1  and  x(delta(v)) <= g.
NeighborhoodCheckStatus neighborhood_check(const Graph& g, const EdgeWeights& x,
                                           const RatioParams& params);

}  // namespace imcert
