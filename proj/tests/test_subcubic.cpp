#include <doctest.h>

#include "imcert/errors.hpp"
#include "imcert/subcubic.hpp"
#include "head_fixtures.hpp"
#include "test_util.hpp"

using namespace imcert;

namespace {

void check_pair(const Graph& g, const PdCertificate& cert) {
    CHECK(is_induced_matching(g, cert.matching));
    if (g.edge_count() > 0) CHECK(check_dual_feasible(g, cert.y));
    for (int v = 0; v < g.n; ++v) {
        if (g.degree(v) < 1 || g.degree(v) > 2) continue;
        Rat at = 0;
        for (int e : g.inc[v]) at += cert.y[e];
        CHECK(at >= R(1, 3));
    }
    CHECK(weight_total(cert.y) * 3 <= Rat(7) * cert.matching.size());
    CHECK(cert.ratio_ok);
}

}  // namespace

TEST_SUITE("subcubic") {

TEST_CASE("head selection") {
    Graph p3 = make_graph(3, {{0, 1}, {1, 2}});
    CHECK(select_head(p3) == std::pair<int, int>{0, 1});

    Graph star = make_graph(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(select_head(star) == std::pair<int, int>{1, 0});  // leaf then center

    CHECK(select_head(gen_cycle(5)) == std::pair<int, int>{0, 1});
    CHECK_THROWS_AS(select_head(make_graph(0, {})), PreconditionError);
}

TEST_CASE("head construction") {
    Graph p5 = gen_path(5);
    HeadSubgraph h1 = build_head(p5, 0, 1);
    CHECK(h1.core == std::vector<int>{0, 1, 2});
    CHECK(h1.isolates.empty());  // the rest is a P2, nothing isolated
    CHECK(h1.h.n == 3);
    CHECK(h1.boundary.size() == 1);

    Graph p4 = gen_path(4);
    HeadSubgraph h2 = build_head(p4, 0, 1);
    CHECK(h2.isolates == std::vector<int>{3});
    CHECK(h2.h.n == 4);
    CHECK(h2.boundary.empty());

    Graph star = make_graph(4, {{0, 1}, {0, 2}, {0, 3}});
    HeadSubgraph h3 = build_head(star, 1, 0);
    CHECK(h3.h.n == 4);
    CHECK(h3.isolates.empty());
}

TEST_CASE("single edges and paths get the hand-labelled values") {
    Graph p2 = make_graph(2, {{0, 1}});
    PdCertificate c2 = subcubic_primal_dual(p2);
    CHECK(c2.matching.size() == 1);
    CHECK(c2.y == EdgeWeights{R(1)});

    Graph p3 = make_graph(3, {{0, 1}, {1, 2}});
    PdCertificate c3 = subcubic_primal_dual(p3);
    CHECK(c3.matching.edges == std::vector<int>{0});
    CHECK(c3.y == EdgeWeights{R(1, 3), R(2, 3)});
    CHECK(weight_total(c3.y) == 1);
    check_pair(p3, c3);
}

TEST_CASE("two five-cycles with pendants") {
    std::vector<std::pair<int, int>> edges;
    for (int b : {0, 6}) {
        for (int i = 0; i < 5; ++i) edges.emplace_back(b + i, b + (i + 1) % 5);
        edges.emplace_back(b, b + 5);  // pendant
    }
    Graph g = make_graph(12, edges);
    REQUIRE(g.max_degree == 3);
    PdCertificate cert = subcubic_primal_dual(g);
    check_pair(g, cert);
    // |M| >= (3/7) nu_s^* via weak duality, cross-checked by the solver
    Rat nu = solve_primal(g).objective;
    CHECK(Rat(cert.matching.size()) * 7 >= nu * 3);
}

TEST_CASE("every drawn head pattern passes the condition checker") {
    REQUIRE(head_fixtures().size() == 56);
    for (const HeadFixture& fx : head_fixtures()) {
        CAPTURE(fx.id);
        Graph h = make_graph(fx.n, fx.edges);
        HeadRoles roles = head_roles(h, 0, 1);
        EdgeWeights y(h.edge_count());
        for (size_t i = 0; i < fx.edges.size(); ++i) {
            int e = h.edge_id(fx.edges[i].first, fx.edges[i].second);
            REQUIRE(e >= 0);
            y[e] = Rat(fx.three_y[i]) / 3;
        }
        std::string why;
        CHECK_MESSAGE(check_head_conditions(h, roles, y, &why), why);
    }
}

TEST_CASE("the head solver stays within budget on every drawn pattern") {
    for (const HeadFixture& fx : head_fixtures()) {
        CAPTURE(fx.id);
        HeadSubgraph head;
        head.h = make_graph(fx.n, fx.edges);
        head.h_v0 = 0;
        head.h_v1 = 1;
        EdgeWeights y = assign_head_duals(head);
        CHECK(weight_total(y) <= R(7, 3));
        std::string why;
        CHECK_MESSAGE(
            check_head_conditions(head.h, head_roles(head.h, 0, 1), y, &why), why);
    }
}

TEST_CASE("random subcubic instances") {
    int done = 0;
    for (uint64_t seed = 0; seed < 120 && done < 25; ++seed) {
        Graph g = gen_random_bounded(12, 3, seed);
        if (has_cubic_component(g)) continue;
        ++done;
        check_pair(g, subcubic_primal_dual(g));
    }
    CHECK(done == 25);
}

TEST_CASE("structured subcubic instances") {
    check_pair(gen_cycle(6), subcubic_primal_dual(gen_cycle(6)));
    check_pair(gen_cycle(9), subcubic_primal_dual(gen_cycle(9)));
    check_pair(gen_path(11), subcubic_primal_dual(gen_path(11)));

    // Petersen graph minus one vertex: 9 vertices, 12 edges, not 3-regular
    std::vector<std::pair<int, int>> pet{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                         {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                                         {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}};
    std::vector<std::pair<int, int>> cut;
    for (auto [u, v] : pet)
        if (u != 9 && v != 9) cut.emplace_back(u, v);
    Graph pm = make_graph(9, cut);
    REQUIRE_FALSE(has_cubic_component(pm));
    PdCertificate cert = subcubic_primal_dual(pm);
    check_pair(pm, cert);
    CHECK(Rat(cert.matching.size()) * 7 >= solve_primal(pm).objective * 3);

    // caterpillar: path with a leg on every spine vertex
    std::vector<std::pair<int, int>> cat;
    for (int i = 0; i + 1 < 6; ++i) cat.emplace_back(i, i + 1);
    for (int i = 0; i < 6; ++i) cat.emplace_back(i, 6 + i);
    Graph caterpillar = make_graph(12, cat);
    check_pair(caterpillar, subcubic_primal_dual(caterpillar));
}

TEST_CASE("rejections") {
    CHECK_THROWS_AS(subcubic_primal_dual(gen_complete(5)), PreconditionError);
    CHECK_THROWS_AS(subcubic_primal_dual(gen_complete(4)), PreconditionError);
    // K4 hiding next to a fine component
    std::vector<std::pair<int, int>> edges{{0, 1}};
    for (auto [u, v] : gen_complete(4).edges) edges.emplace_back(u + 2, v + 2);
    CHECK_THROWS_AS(subcubic_primal_dual(make_graph(6, edges)), PreconditionError);
}

TEST_CASE("isolated vertices are tolerated") {
    Graph g = make_graph(5, {{1, 2}});
    PdCertificate cert = subcubic_primal_dual(g);
    CHECK(cert.matching.size() == 1);
    CHECK(cert.ratio_ok);
}

}  // TEST_SUITE
