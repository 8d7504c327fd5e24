#pragma once

#include <cstdint>
#include <string>

#include "imcert/graph.hpp"
#include "imcert/lp.hpp"
#include "imcert/oracle.hpp"

namespace imcert {

enum class Family {
    t_star,
    blownup_c5,
    random_bounded,
    path,
    cycle,
    complete,
};

const char* family_name(Family f);
Family family_from_name(const std::string& name);

// Generator parameters for reproducible corpora.
struct InstanceSpec {
    Family family = Family::path;
    int delta = 0;       // t_star, blownup_c5, random_bounded
    int n = 0;           // path, cycle, complete, random_bounded
    uint64_t seed = 0;   // random_bounded
};

Graph generate(const InstanceSpec& spec);
std::string instance_label(const InstanceSpec& spec);

// Star K_{1,delta} with every edge subdivided once: n = 2*delta+1, center of
// degree delta, mids of degree 2, leaves of degree 1.
Graph gen_t_star(int delta);

// Five independent sets of sizes floor(d/2) x3 then ceil(d/2) x2 in cyclic
// order, consecutive classes completely joined. Max degree exactly delta.
Graph gen_blownup_c5(int delta);

Graph gen_path(int n);
Graph gen_cycle(int n);
Graph gen_complete(int n);

// Deterministic bounded-degree sampler: fixed shuffle of all candidate
// pairs, accept while both endpoint degrees stay below delta.
Graph gen_random_bounded(int n, int delta, uint64_t seed);

// Worst-case LP/integer ratio of the blown-up five-cycle:
//   5 d^2 / (8d - 4)                                   for even d,
//   (5 d^3 - 21 d^2 + 7 d + 1) / (8 d^2 - 36 d + 20)   for odd d.
Rat blowup_gap_value(int delta);

// (P)-feasible weights on gen_blownup_c5(delta) whose value matches
// blowup_gap_value(delta); validated at runtime, not trusted blindly.
EdgeWeights blowup_optimal_primal(int delta);

// nu_s^*(g) / nu_s(g), both exact.
Rat measure_gap(const Graph& g, int cap = kDefaultOracleCap);

// Corpus preparation: drop components below the given order.
Graph drop_small_components(const Graph& g, int min_order);

}  // namespace imcert
