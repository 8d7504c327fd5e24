#include <doctest.h>

#include "imcert/errors.hpp"
#include "imcert/lp.hpp"
#include "test_util.hpp"

using namespace imcert;

TEST_SUITE("lp") {

TEST_CASE("weight sums") {
    Graph c5 = gen_cycle(5);
    EdgeWeights w(5, R(1, 5));
    CHECK(weight_sum(c5, w, {}) == 0);
    CHECK(weight_sum(c5, w, {0, 1, 2, 3, 4}) == 1);

    Graph k4 = gen_complete(4);  // 3-regular, m = 6
    EdgeWeights u(6, R(1, 5));   // 1/(2*3-1)
    CHECK(weight_sum(k4, u, {0, 1, 2, 3, 4, 5}) == R(6, 5));

    CHECK_THROWS_AS(weight_sum(c5, w, {9}), InputError);
    CHECK_THROWS_AS(weight_sum(k4, w, {0}), InputError);  // dimension mismatch
}

TEST_CASE("feasibility checks") {
    Graph c5 = gen_cycle(5);
    CHECK(check_primal_feasible(c5, EdgeWeights(5, R(0))));
    CHECK(check_primal_feasible(c5, EdgeWeights(5, R(1, 3))));
    CHECK_FALSE(check_primal_feasible(c5, EdgeWeights(5, R(1, 2))));

    Graph p3 = make_graph(3, {{0, 1}, {1, 2}});
    CHECK_FALSE(check_primal_feasible(p3, EdgeWeights(2, R(1))));
    CHECK_FALSE(check_primal_feasible(p3, {R(-1, 2), R(1, 2)}));

    CHECK(check_dual_feasible(p3, EdgeWeights(2, R(1))));
    CHECK_FALSE(check_dual_feasible(p3, EdgeWeights(2, R(0))));
    Graph k4 = gen_complete(4);
    CHECK(check_dual_feasible(k4, EdgeWeights(6, R(1, 5))));
}

TEST_CASE("optimal values on closed-form instances") {
    CHECK(solve_primal(make_graph(0, {})).objective == 0);
    CHECK(solve_dual(make_graph(3, {})).objective == 0);

    CHECK(solve_primal(gen_cycle(5)).objective == R(5, 3));
    CHECK(solve_primal(gen_t_star(3)).objective == 3);
    CHECK(solve_dual(gen_complete(4)).objective == R(6, 5));
    CHECK(solve_dual(gen_blownup_c5(4)).objective == R(20, 7));
}

TEST_CASE("strong duality and the regular-graph formula on a corpus") {
    std::vector<Graph> corpus;
    for (int n : {4, 7, 10}) corpus.push_back(gen_path(n));
    for (int n : {3, 6, 9}) corpus.push_back(gen_cycle(n));
    corpus.push_back(gen_complete(5));
    corpus.push_back(gen_t_star(4));
    corpus.push_back(gen_blownup_c5(3));
    for (uint64_t seed = 0; seed < 10; ++seed)
        corpus.push_back(gen_random_bounded(10, 4, seed));

    for (const Graph& g : corpus) {
        LpPair lp = solve_lp_pair(g);
        CHECK(lp.primal.objective == lp.dual.objective);
        CHECK(check_primal_feasible(g, lp.primal.weights));
        CHECK(check_dual_feasible(g, lp.dual.weights));
        bool regular = g.n > 0 && g.edge_count() > 0;
        for (int v = 0; v < g.n; ++v)
            if (g.degree(v) != g.max_degree) regular = false;
        if (regular)
            CHECK(lp.primal.objective ==
                  Rat(g.edge_count()) / (2 * g.max_degree - 1));
    }
}

TEST_CASE("restricting an optimal primal to an edge-deleted subgraph stays feasible") {
    for (uint64_t seed : {3u, 8u, 21u}) {
        Graph g = gen_random_bounded(11, 4, seed);
        if (g.edge_count() < 3) continue;
        EdgeWeights x = solve_primal(g).weights;
        auto del = delete_edges(g, {0, g.edge_count() / 2});
        EdgeWeights restricted(del.graph.edge_count());
        for (int e = 0; e < del.graph.edge_count(); ++e)
            restricted[e] = x[del.kept_edges[e]];
        CHECK(check_primal_feasible(del.graph, restricted));
    }
}

TEST_CASE("determinism") {
    Graph g = gen_random_bounded(12, 4, 99);
    LpPair a = solve_lp_pair(g);
    LpPair b = solve_lp_pair(g);
    CHECK(a.primal.weights == b.primal.weights);
    CHECK(a.dual.weights == b.dual.weights);
}

TEST_CASE("covering LP solves exactly") {
    // min y0+y1+y2 s.t. y0+y1 >= 1, y1+y2 >= 1, y0+y2 >= 1 -> 3/2
    CoverSolution s = solve_min_cover(3, {{0, 1}, {1, 2}, {0, 2}},
                                      {R(1), R(1), R(1)});
    CHECK(s.objective == R(3, 2));
    CHECK(s.y.size() == 3);

    CoverSolution empty = solve_min_cover(0, {}, {});
    CHECK(empty.objective == 0);
}

TEST_CASE("lp dump shape") {
    Graph p3 = make_graph(3, {{0, 1}, {1, 2}});
    std::string dump = lp_dump(p3);
    CHECK(dump.find("Maximize") != std::string::npos);
    CHECK(dump.find("e1: x0 + x1 <= 1") != std::string::npos);
    CHECK(dump.find("End") != std::string::npos);
}

}  // TEST_SUITE
