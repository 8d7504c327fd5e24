#include "imcert/families.hpp"

#include <algorithm>
#include <sstream>

#include "imcert/errors.hpp"

namespace imcert {

const char* family_name(Family f) {
    switch (f) {
        case Family::t_star: return "t-star";
        case Family::blownup_c5: return "blowup-c5";
        case Family::random_bounded: return "random";
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::complete: return "complete";
    }
    return "?";
}

Family family_from_name(const std::string& name) {
    for (Family f : {Family::t_star, Family::blownup_c5, Family::random_bounded,
                     Family::path, Family::cycle, Family::complete})
        if (name == family_name(f)) return f;
    throw InputError("unknown family '" + name + "'");
}

Graph gen_t_star(int delta) {
    if (delta < 1) throw PreconditionError("t-star needs delta >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= delta; ++i) {
        edges.emplace_back(0, i);              // center - mid
        edges.emplace_back(i, delta + i);      // mid - leaf
    }
    return Graph::from_edges(2 * delta + 1, std::move(edges));
}

Graph gen_blownup_c5(int delta) {
    if (delta < 2) throw PreconditionError("blown-up C5 needs delta >= 2");
    int lo = delta / 2, hi = (delta + 1) / 2;
    int sizes[5] = {lo, lo, lo, hi, hi};
    int start[5];
    int n = 0;
    for (int i = 0; i < 5; ++i) {
        start[i] = n;
        n += sizes[i];
    }
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        int j = (i + 1) % 5;
        for (int a = 0; a < sizes[i]; ++a)
            for (int b = 0; b < sizes[j]; ++b)
                edges.emplace_back(start[i] + a, start[j] + b);
    }
    Graph g = Graph::from_edges(n, std::move(edges));
    if (g.max_degree != delta)
        throw InternalError("blown-up C5 has wrong maximum degree");
    return g;
}

Graph gen_path(int n) {
    if (n < 1) throw PreconditionError("path needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, std::move(edges));
}

Graph gen_cycle(int n) {
    if (n < 3) throw PreconditionError("cycle needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, std::move(edges));
}

Graph gen_complete(int n) {
    if (n < 1) throw PreconditionError("complete needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::from_edges(n, std::move(edges));
}

namespace {

// splitmix64; fixed algorithm so corpora are stable across platforms
struct Rng {
    uint64_t s;
    uint64_t next() {
        uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

}  // namespace

Graph gen_random_bounded(int n, int delta, uint64_t seed) {
    if (n < 1 || delta < 1)
        throw PreconditionError("random graph needs n >= 1, delta >= 1");
    std::vector<std::pair<int, int>> candidates;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) candidates.emplace_back(i, j);
    Rng rng{seed};
    for (size_t i = candidates.size(); i > 1; --i)
        std::swap(candidates[i - 1], candidates[rng.next() % i]);
    std::vector<int> deg(n, 0);
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : candidates) {
        if (deg[u] < delta && deg[v] < delta) {
            edges.emplace_back(u, v);
            ++deg[u];
            ++deg[v];
        }
    }
    return Graph::from_edges(n, std::move(edges));
}

Graph generate(const InstanceSpec& spec) {
    switch (spec.family) {
        case Family::t_star: return gen_t_star(spec.delta);
        case Family::blownup_c5: return gen_blownup_c5(spec.delta);
        case Family::random_bounded:
            return gen_random_bounded(spec.n, spec.delta, spec.seed);
        case Family::path: return gen_path(spec.n);
        case Family::cycle: return gen_cycle(spec.n);
        case Family::complete: return gen_complete(spec.n);
    }
    throw InputError("bad family");
}

std::string instance_label(const InstanceSpec& spec) {
    std::ostringstream out;
    out << family_name(spec.family);
    switch (spec.family) {
        case Family::t_star:
        case Family::blownup_c5:
            out << "-d" << spec.delta;
            break;
        case Family::random_bounded:
            out << "-n" << spec.n << "-d" << spec.delta << "-s" << spec.seed;
            break;
        default:
            out << "-n" << spec.n;
    }
    return out.str();
}

Rat blowup_gap_value(int delta) {
    if (delta < 2) throw PreconditionError("gap bound needs delta >= 2");
    long d = delta;
    if (delta % 2 == 0) return rational(5 * d * d, 8 * d - 4);
    long den = 8 * d * d - 36 * d + 20;
    if (den == 0) throw PreconditionError("gap bound: zero denominator");
    return rational(5 * d * d * d - 21 * d * d + 7 * d + 1, den);
}

EdgeWeights blowup_optimal_primal(int delta) {
    Graph g = gen_blownup_c5(delta);
    EdgeWeights x(g.edge_count());
    if (delta % 2 == 0) {
        Rat w = rational(1, 2 * delta - 1);
        std::fill(x.begin(), x.end(), w);
    } else {
        long d = delta;
        long den = 2 * d * d - 9 * d + 5;
        if (den == 0) throw PreconditionError("blow-up weights: zero denominator");
        Rat cross = rational(d - 5, den);  // between a floor class and a ceil class
        Rat rest = rational(d - 3, den);
        if (cross < 0 || rest < 0)
            throw PreconditionError("blow-up weights negative at this delta");
        // class of a vertex: sizes lo,lo,lo,hi,hi in id order
        int lo = delta / 2;
        auto cls = [&](int v) {
            if (v < 3 * lo) return v / lo;
            return 3 + (v - 3 * lo) / ((delta + 1) / 2);
        };
        for (int e = 0; e < g.edge_count(); ++e) {
            auto [u, v] = g.edge(e);
            bool lo_u = cls(u) < 3, lo_v = cls(v) < 3;
            x[e] = (lo_u != lo_v) ? cross : rest;
        }
    }
    if (!check_primal_feasible(g, x))
        throw InternalError("blow-up weights are not (P)-feasible");
    if (weight_total(x) != blowup_gap_value(delta))
        throw InternalError("blow-up weights miss the gap-bound value");
    return x;
}

Rat measure_gap(const Graph& g, int cap) {
    if (g.edge_count() == 0) throw PreconditionError("measure_gap: graph has no edges");
    NuSResult exact = exact_nu_s(g, cap);
    if (exact.value < 1) throw PreconditionError("measure_gap: nu_s is zero");
    return solve_primal(g).objective / exact.value;
}

Graph drop_small_components(const Graph& g, int min_order) {
    std::vector<int> gone;
    for (const auto& comp : connected_components(g))
        if (static_cast<int>(comp.size()) < min_order)
            gone.insert(gone.end(), comp.begin(), comp.end());
    return delete_vertices(g, gone).graph;
}

}  // namespace imcert
