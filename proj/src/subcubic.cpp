#include "imcert/subcubic.hpp"

#include <algorithm>
#include <sstream>

#include "imcert/errors.hpp"

namespace imcert {

std::pair<int, int> select_head(const Graph& g) {
    if (g.n == 0) throw PreconditionError("select_head: empty graph");
    int v0 = -1;
    for (int v = 0; v < g.n; ++v) {
        if (g.degree(v) == 0) continue;
        if (v0 == -1 || g.degree(v) < g.degree(v0)) v0 = v;
    }
    if (v0 == -1) throw PreconditionError("select_head: graph has no edges");
    return {v0, g.neighbors(v0)[0]};
}

HeadSubgraph build_head(const Graph& g, int v0, int v1) {
    g.require_vertex(v0);
    g.require_vertex(v1);
    if (g.edge_id(v0, v1) == -1) throw PreconditionError("build_head: v0v1 not an edge");

    HeadSubgraph head;
    head.v0 = v0;
    head.v1 = v1;
    std::vector<char> in_core(g.n, 0);
    in_core[v0] = in_core[v1] = 1;
    for (int x : g.neighbors(v0)) in_core[x] = 1;
    for (int x : g.neighbors(v1)) in_core[x] = 1;
    for (int v = 0; v < g.n; ++v)
        if (in_core[v]) head.core.push_back(v);

    // isolated vertices of g - core: no neighbor outside the core
    std::vector<char> keep(g.n, 0);
    for (int v = 0; v < g.n; ++v) {
        if (in_core[v]) {
            keep[v] = 1;
            continue;
        }
        if (g.degree(v) == 0) continue;  // never part of a head
        bool outside = false;
        for (int x : g.neighbors(v))
            if (!in_core[x]) outside = true;
        if (!outside) {
            head.isolates.push_back(v);
            keep[v] = 1;
        }
    }

    std::vector<int> gone;
    for (int v = 0; v < g.n; ++v)
        if (!keep[v]) gone.push_back(v);
    auto del = delete_vertices(g, gone);
    // delete the complement, then re-read the maps we need
    head.h = del.graph;
    head.vroot = del.kept_vertices;
    head.eroot = del.kept_edges;
    head.h_v0 = del.vertex_map[v0];
    head.h_v1 = del.vertex_map[v1];
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.edge(e);
        if (keep[a] != keep[b]) head.boundary.push_back(e);
    }
    return head;
}

HeadRoles head_roles(const Graph& h, int v0, int v1) {
    HeadRoles roles{v0, v1, {}, {}};
    std::vector<char> in_core(h.n, 0);
    in_core[v0] = in_core[v1] = 1;
    for (int x : h.neighbors(v0)) in_core[x] = 1;
    for (int x : h.neighbors(v1)) in_core[x] = 1;
    for (int v = 0; v < h.n; ++v) {
        if (v == v0 || v == v1) continue;
        (in_core[v] ? roles.core_minus : roles.isolates).push_back(v);
    }
    return roles;
}

bool check_head_conditions(const Graph& h, const HeadRoles& roles,
                           const EdgeWeights& y, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (static_cast<int>(y.size()) != h.edge_count())
        throw InputError("head weights dimension mismatch");
    for (const Rat& v : y)
        if (v < 0) return fail("negative weight");
    auto at_vertex = [&](int u) {
        Rat s = 0;
        for (int e : h.inc[u]) s += y[e];
        return s;
    };
    for (int e = 0; e < h.edge_count(); ++e) {
        Rat s = 0;
        for (int f : edge_closed_neighborhood(h, e)) s += y[f];
        if (s < 1) return fail("edge " + std::to_string(e) + " covered below 1");
    }
    for (int u : roles.core_minus)
        if (h.degree(u) <= 2 && at_vertex(u) < rational(2, 3))
            return fail("core vertex " + std::to_string(u) + " below 2/3");
    for (int u : roles.isolates)
        if (h.degree(u) <= 2 && at_vertex(u) < rational(1, 3))
            return fail("isolate " + std::to_string(u) + " below 1/3");
    for (int u : {roles.v0, roles.v1})
        if (h.degree(u) <= 2 && at_vertex(u) < rational(1, 3))
            return fail("selected vertex " + std::to_string(u) + " below 1/3");
    if (weight_total(y) > rational(7, 3)) return fail("total above 7/3");
    return true;
}

EdgeWeights assign_head_duals(const HeadSubgraph& head) {
    const Graph& h = head.h;
    if (h.edge_count() == 0) throw PreconditionError("assign_head_duals: edgeless head");
    HeadRoles roles = head_roles(h, head.h_v0, head.h_v1);

    std::vector<std::vector<int>> rows;
    std::vector<Rat> rhs;
    for (int e = 0; e < h.edge_count(); ++e) {
        rows.push_back(edge_closed_neighborhood(h, e));
        rhs.push_back(1);
    }
    auto vertex_row = [&](int u, Rat need) {
        if (h.degree(u) > 2) return;
        rows.push_back(h.inc[u]);
        rhs.push_back(std::move(need));
    };
    for (int u : roles.core_minus) vertex_row(u, rational(2, 3));
    for (int u : roles.isolates) vertex_row(u, rational(1, 3));
    vertex_row(roles.v0, rational(1, 3));
    vertex_row(roles.v1, rational(1, 3));

    CoverSolution sol = solve_min_cover(h.edge_count(), rows, rhs);
    std::string why;
    if (sol.objective > rational(7, 3) ||
        !check_head_conditions(h, roles, sol.y, &why)) {
        std::ostringstream msg;
        msg << "head dual assignment failed (" << (why.empty() ? "total above 7/3" : why)
            << ") on head:\n" << serialize_graph(h);
        throw InternalError(msg.str());
    }
    return sol.y;
}

bool has_cubic_component(const Graph& g) {
    for (const auto& comp : connected_components(g)) {
        bool all3 = !comp.empty();
        for (int v : comp)
            if (g.degree(v) != 3) all3 = false;
        if (all3) return true;
    }
    return false;
}

PdCertificate subcubic_primal_dual(const Graph& g) {
    if (g.max_degree > 3)
        throw PreconditionError("subcubic_primal_dual: max degree exceeds 3");
    if (has_cubic_component(g))
        throw PreconditionError("subcubic_primal_dual: 3-regular component present");

    PdCertificate cert;
    cert.y.assign(g.edge_count(), Rat(0));

    // Strip isolated vertices, then peel heads until nothing is left. The
    // recursion is a loop: nothing happens after the recursive call.
    std::vector<int> isolated;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) == 0) isolated.push_back(v);
    auto del0 = delete_vertices(g, isolated);

    Graph cur = del0.graph;
    std::vector<int> vroot = del0.kept_vertices;
    std::vector<int> eroot = del0.kept_edges;

    while (cur.n > 0) {
        auto [v0, v1] = select_head(cur);
        if (cur.degree(v0) > 2)
            throw InternalError("subcubic recursion reached a 3-regular residue");
        HeadSubgraph head = build_head(cur, v0, v1);
        EdgeWeights yh = assign_head_duals(head);
        for (int e = 0; e < head.h.edge_count(); ++e)
            cert.y[eroot[head.eroot[e]]] = yh[e];
        cert.matching.edges.push_back(eroot[cur.edge_id(v0, v1)]);

        std::vector<int> head_vertices = head.core;
        head_vertices.insert(head_vertices.end(), head.isolates.begin(),
                             head.isolates.end());
        auto del = delete_vertices(cur, head_vertices);
        std::vector<int> nvroot, neroot;
        for (int v : del.kept_vertices) nvroot.push_back(vroot[v]);
        for (int e : del.kept_edges) neroot.push_back(eroot[e]);
        cur = del.graph;
        vroot = std::move(nvroot);
        eroot = std::move(neroot);
    }
    std::sort(cert.matching.edges.begin(), cert.matching.edges.end());

    // Full certificate check against the input graph.
    if (!is_induced_matching(g, cert.matching))
        throw InternalError("subcubic: matching is not induced");
    if (g.edge_count() > 0 && !check_dual_feasible(g, cert.y))
        throw InternalError("subcubic: y is not dual feasible");
    for (int v = 0; v < g.n; ++v) {
        if (g.degree(v) == 0 || g.degree(v) > 2) continue;
        Rat at = 0;
        for (int e : g.inc[v]) at += cert.y[e];
        if (at < rational(1, 3))
            throw InternalError("subcubic: low-degree vertex below 1/3");
    }
    cert.ratio_ok =
        weight_total(cert.y) * 3 <= Rat(7) * Rat(cert.matching.size());
    if (!cert.ratio_ok) throw InternalError("subcubic: total exceeds (7/3)|M|");
    return cert;
}

}  // namespace imcert
