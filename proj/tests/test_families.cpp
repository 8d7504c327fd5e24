#include <doctest.h>

#include "imcert/errors.hpp"
#include "imcert/families.hpp"
#include "imcert/good_dual.hpp"
#include "test_util.hpp"

using namespace imcert;

TEST_SUITE("families") {

TEST_CASE("subdivided stars") {
    Graph p3 = gen_t_star(1);
    CHECK(p3.n == 3);
    CHECK(p3.edge_count() == 2);

    Graph ts = gen_t_star(3);
    CHECK(ts.n == 7);
    CHECK(ts.edge_count() == 6);
    CHECK(exact_nu_s(ts).value == 3);
    CHECK(solve_primal(ts).objective == 3);
    CHECK_THROWS_AS(gen_t_star(0), PreconditionError);
}

TEST_CASE("blown-up five-cycles") {
    Graph c5 = gen_blownup_c5(2);
    CHECK(c5.n == 5);
    CHECK(c5.edge_count() == 5);
    CHECK(serialize_graph(c5) == serialize_graph(gen_cycle(5)));

    Graph b4 = gen_blownup_c5(4);
    CHECK(b4.n == 10);
    CHECK(b4.edge_count() == 20);
    for (int v = 0; v < b4.n; ++v) CHECK(b4.degree(v) == 4);

    Graph b3 = gen_blownup_c5(3);
    CHECK(b3.n == 7);
    CHECK(b3.max_degree == 3);
    CHECK_THROWS_AS(gen_blownup_c5(1), PreconditionError);
}

TEST_CASE("gap bound values") {
    CHECK(blowup_gap_value(4) == R(20, 7));
    CHECK(blowup_gap_value(3) == 2);
    CHECK(blowup_gap_value(6) == R(45, 11));
    CHECK(blowup_gap_value(5) == R(17, 5));
    CHECK(blowup_gap_value(2) == R(20, 12));  // 5/3
}

TEST_CASE("closed-form blow-up weights match the solver") {
    EdgeWeights x4 = blowup_optimal_primal(4);
    for (const Rat& v : x4) CHECK(v == R(1, 7));
    CHECK(weight_total(x4) == R(20, 7));

    // odd case: the two formula values and the optimum
    EdgeWeights x3 = blowup_optimal_primal(3);
    Graph b3 = gen_blownup_c5(3);
    CHECK(check_primal_feasible(b3, x3));
    CHECK(weight_total(x3) == 2);
    for (const Rat& v : x3) CHECK((v == R(1, 2) || v == 0));
    CHECK(solve_primal(b3).objective == 2);

    EdgeWeights x5 = blowup_optimal_primal(5);
    Graph b5 = gen_blownup_c5(5);
    CHECK(weight_total(x5) == blowup_gap_value(5));
    for (const Rat& v : x5) CHECK((v == 0 || v == R(1, 5)));
    CHECK(solve_primal(b5).objective == blowup_gap_value(5));

    // feasibility and the closed-form value are validated internally for any
    // sign-consistent odd delta
    CHECK(weight_total(blowup_optimal_primal(7)) == R(23, 5));
}

TEST_CASE("even blow-ups meet the regular formula") {
    for (int delta : {2, 4, 6, 8}) {
        Graph g = gen_blownup_c5(delta);
        CHECK(solve_primal(g).objective ==
              Rat(5 * delta * delta) / (8 * delta - 4));
    }
}

TEST_CASE("measured gaps") {
    CHECK(measure_gap(gen_blownup_c5(4)) == R(20, 7));
    CHECK(measure_gap(gen_t_star(3)) == 1);
    CHECK(measure_gap(gen_cycle(5)) == R(5, 3));
    for (int delta = 2; delta <= 5; ++delta)
        CHECK(measure_gap(gen_blownup_c5(delta)) == blowup_gap_value(delta));
    CHECK_THROWS_AS(measure_gap(make_graph(3, {})), PreconditionError);
}

TEST_CASE("bounded random generator") {
    Graph one = gen_random_bounded(1, 3, 7);
    CHECK(one.n == 1);
    CHECK(one.edge_count() == 0);

    Graph a = gen_random_bounded(10, 3, 42);
    Graph b = gen_random_bounded(10, 3, 42);
    CHECK(serialize_graph(a) == serialize_graph(b));
    CHECK(serialize_graph(a) != serialize_graph(gen_random_bounded(10, 3, 43)));

    for (uint64_t seed = 0; seed < 60; ++seed)
        CHECK(gen_random_bounded(14, 3, seed).max_degree <= 3);
}

TEST_CASE("names and specs") {
    for (Family f : {Family::t_star, Family::blownup_c5, Family::random_bounded,
                     Family::path, Family::cycle, Family::complete})
        CHECK(family_from_name(family_name(f)) == f);
    CHECK_THROWS_AS(family_from_name("nope"), InputError);

    InstanceSpec spec{Family::random_bounded, 3, 12, 7};
    Graph g = generate(spec);
    CHECK(g.n == 12);
    CHECK(instance_label(spec) == "random-n12-d3-s7");
    CHECK(instance_label({Family::blownup_c5, 4, 0, 0}) == "blowup-c5-d4");
}

TEST_CASE("small component cleanup") {
    Graph g = make_graph(8, {{0, 1}, {2, 3}, {3, 4}, {5, 6}});
    Graph cleaned = drop_small_components(g, 3);
    CHECK(cleaned.n == 3);
    CHECK(cleaned.edge_count() == 2);
}

}  // TEST_SUITE
