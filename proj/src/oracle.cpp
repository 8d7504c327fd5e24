#include "imcert/oracle.hpp"

#include <algorithm>
#include <string>

#include "imcert/errors.hpp"

namespace imcert {

ConflictGraph build_conflict_graph(const Graph& g) {
    ConflictGraph cg;
    cg.n = g.edge_count();
    cg.adj.assign(cg.n, {});
    for (int e = 0; e < cg.n; ++e)
        for (int f : conflict_set(g, e))
            if (f != e) cg.adj[e].push_back(f);
    return cg;
}

namespace {

struct Bits {
    std::vector<uint64_t> w;

    explicit Bits(int n = 0) : w((n + 63) / 64, 0) {}
    void set(int i) { w[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(int i) { w[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    bool empty() const {
        for (uint64_t x : w)
            if (x) return false;
        return true;
    }
    int first() const {
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i]) return static_cast<int>(i * 64 + __builtin_ctzll(w[i]));
        return -1;
    }
    void and_with(const Bits& o) {
        for (size_t i = 0; i < w.size(); ++i) w[i] &= o.w[i];
    }
    void and_not(const Bits& o) {
        for (size_t i = 0; i < w.size(); ++i) w[i] &= ~o.w[i];
    }
};

// Max independent set, branch and bound. Branches on the lowest-id candidate
// (include first); prunes with a greedy clique cover of the candidates.
struct MisSolver {
    int n;
    std::vector<Bits> adj;
    int best = -1;
    std::vector<int> best_set;
    std::vector<int> cur;

    explicit MisSolver(const std::vector<std::vector<int>>& lists)
        : n(static_cast<int>(lists.size())), adj(n, Bits(n)) {
        for (int v = 0; v < n; ++v)
            for (int u : lists[v]) adj[v].set(u);
    }

    int clique_cover_bound(Bits cand) const {
        int cliques = 0;
        while (!cand.empty()) {
            ++cliques;
            Bits q = cand;
            while (!q.empty()) {
                int v = q.first();
                cand.reset(v);
                q.reset(v);
                q.and_with(adj[v]);
            }
        }
        return cliques;
    }

    void expand(const Bits& cand) {
        if (static_cast<int>(cur.size()) > best) {
            best = static_cast<int>(cur.size());
            best_set = cur;
        }
        if (cand.empty()) return;
        if (static_cast<int>(cur.size()) + clique_cover_bound(cand) <= best) return;

        int v = cand.first();
        Bits with = cand;
        with.reset(v);
        with.and_not(adj[v]);
        cur.push_back(v);
        expand(with);
        cur.pop_back();

        Bits without = cand;
        without.reset(v);
        expand(without);
    }

    void run() {
        Bits all(n);
        for (int v = 0; v < n; ++v) all.set(v);
        expand(all);
    }
};

void require_cap(const Graph& g, int cap, const char* what) {
    if (g.edge_count() > cap)
        throw PreconditionError(std::string(what) + ": edge count " +
                                std::to_string(g.edge_count()) +
                                " exceeds cap " + std::to_string(cap));
}

}  // namespace

NuSResult exact_nu_s(const Graph& g, int cap) {
    require_cap(g, cap, "exact_nu_s");
    ConflictGraph cg = build_conflict_graph(g);
    MisSolver solver(cg.adj);
    solver.run();
    std::sort(solver.best_set.begin(), solver.best_set.end());
    NuSResult out{solver.best, {solver.best_set}};
    if (!is_induced_matching(g, out.witness))
        throw InternalError("exact_nu_s produced an invalid witness");
    return out;
}

int exact_matching_number(const Graph& g, int cap) {
    require_cap(g, cap, "exact_matching_number");
    std::vector<std::vector<int>> lists(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e)
        for (int f : edge_closed_neighborhood(g, e))
            if (f != e) lists[e].push_back(f);
    MisSolver solver(lists);
    solver.run();
    return solver.best;
}

EdgeWeights half_matching_primal(const Graph& g, const std::vector<int>& matching) {
    std::vector<char> used(g.n, 0);
    for (int e : matching) {
        g.require_edge(e);
        auto [u, v] = g.edge(e);
        if (used[u] || used[v])
            throw PreconditionError("half_matching_primal: edges are not a matching");
        used[u] = used[v] = 1;
    }
    EdgeWeights x(g.edge_count(), Rat(0));
    for (int e : matching) x[e] = rational(1, 2);
    if (!check_primal_feasible(g, x))
        throw InternalError("half-matching weights are not (P)-feasible");
    return x;
}

}  // namespace imcert
