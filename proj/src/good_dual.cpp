#include "imcert/good_dual.hpp"

#include <algorithm>
#include <string>

#include "imcert/errors.hpp"

namespace imcert {

const char* dual_case_name(DualCase c) {
    switch (c) {
        case DualCase::uniform: return "uniform";
        case DualCase::pendant: return "pendant";
        case DualCase::pendant_tight_pair: return "pendant_tight_pair";
        case DualCase::pendant_tight_tree: return "pendant_tight_tree";
        case DualCase::neighborhood: return "neighborhood";
        case DualCase::neighborhood_tight: return "neighborhood_tight";
    }
    return "?";
}

Rat order_bound(long n, int delta) {
    if (delta < 2) throw PreconditionError("order_bound needs delta >= 2");
    if (n < 0) throw PreconditionError("order_bound needs n >= 0");
    return Rat(delta) * Rat(n) / Rat(2 * delta + 1);
}

bool is_t_star(const Graph& g, int delta) {
    if (g.n != 2 * delta + 1 || g.edge_count() != 2 * delta) return false;
    for (int c = 0; c < g.n; ++c) {
        if (g.degree(c) != delta) continue;
        bool ok = true;
        for (int mid : g.neighbors(c)) {
            if (g.degree(mid) != 2) {
                ok = false;
                break;
            }
            int leaf = -1;
            for (int x : g.neighbors(mid))
                if (x != c) leaf = x;
            if (leaf == -1 || g.degree(leaf) != 1) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

bool all_components_t_star(const Graph& g, int delta) {
    for (const auto& comp : connected_components(g)) {
        std::vector<int> rest;
        std::vector<char> keep(g.n, 0);
        for (int v : comp) keep[v] = 1;
        for (int v = 0; v < g.n; ++v)
            if (!keep[v]) rest.push_back(v);
        if (!is_t_star(delete_vertices(g, rest).graph, delta)) return false;
    }
    return true;  // vacuously for the empty graph
}

namespace {

// A subgraph of the root instance, with maps back to root ids. Weights are
// always written through eroot into the one shared y vector.
struct Sub {
    Graph g;
    std::vector<int> vroot;
    std::vector<int> eroot;
};

Sub compose(const Sub& s, const VertexDeletion& del) {
    Sub out;
    out.g = del.graph;
    out.vroot.reserve(del.kept_vertices.size());
    for (int v : del.kept_vertices) out.vroot.push_back(s.vroot[v]);
    out.eroot.reserve(del.kept_edges.size());
    for (int e : del.kept_edges) out.eroot.push_back(s.eroot[e]);
    return out;
}

Sub component_sub(const Sub& s, const std::vector<int>& comp) {
    std::vector<char> keep(s.g.n, 0);
    for (int v : comp) keep[v] = 1;
    std::vector<int> rest;
    for (int v = 0; v < s.g.n; ++v)
        if (!keep[v]) rest.push_back(v);
    return compose(s, delete_vertices(s.g, rest));
}

struct Builder {
    int delta;
    EdgeWeights& y;
    CaseTrace& trace;

    void put(const Sub& s, int local_edge, const Rat& v) { y[s.eroot[local_edge]] = v; }

    Rat local_total(const Sub& s) const {
        Rat t = 0;
        for (int e : s.eroot) t += y[e];
        return t;
    }

    Rat construct(const Sub& s, int depth) {
        auto comps = connected_components(s.g);
        if (comps.size() > 1) {
            Rat total = 0;
            for (const auto& comp : comps) total += connected(component_sub(s, comp), depth);
            return total;
        }
        if (s.g.n == 0) return Rat(0);
        return connected(s, depth);
    }

    // One induction step on a connected sub-instance of order >= 3.
    Rat connected(const Sub& s, int depth) {
        const Graph& g = s.g;
        if (g.n < 3) throw InternalError("good dual recursion hit a component of order < 3");

        int u = 0;
        for (int v = 1; v < g.n; ++v)
            if (g.degree(v) < g.degree(u)) u = v;

        if (g.degree(u) == delta) {  // delta-regular component
            Rat w = rational(1, 2 * delta - 1);
            for (int e = 0; e < g.edge_count(); ++e) put(s, e, w);
            Rat total = Rat(g.edge_count()) * w;
            trace.push_back({depth, DualCase::uniform, s.vroot[u], -1, -1, {}, {}, {},
                             g.n, total});
            return total;
        }

        int deg_u = g.degree(u);
        if (deg_u == 1) {
            int v = g.neighbors(u)[0];
            bool chunky = true;
            for (const auto& comp : connected_components(delete_vertices(g, {u, v}).graph))
                if (comp.size() <= 2) chunky = false;
            if (chunky) return pendant_case(s, depth, u, v);
        }
        return neighborhood_case(s, depth, u);
    }

    // Residual small components, as sorted local vertex lists.
    struct SmallComps {
        std::vector<int> i1, i2;                 // local vertex ids in s.g
        std::vector<std::vector<int>> comps;     // each small component
        std::vector<int> big;                    // vertices of larger components
    };

    static SmallComps split_residual(const VertexDeletion& del) {
        SmallComps out;
        for (const auto& comp : connected_components(del.graph)) {
            std::vector<int> orig;
            for (int v : comp) orig.push_back(del.kept_vertices[v]);
            if (comp.size() == 1) {
                out.i1.push_back(orig[0]);
                out.comps.push_back(orig);
            } else if (comp.size() == 2) {
                out.i2.insert(out.i2.end(), orig.begin(), orig.end());
                out.comps.push_back(orig);
            } else {
                out.big.insert(out.big.end(), orig.begin(), orig.end());
            }
        }
        std::sort(out.i1.begin(), out.i1.end());
        std::sort(out.i2.begin(), out.i2.end());
        std::sort(out.comps.begin(), out.comps.end());
        return out;
    }

    // Lowest edge from a small component into the given target vertex set.
    static int connector_edge(const Graph& g, const std::vector<int>& comp,
                              const std::vector<char>& target) {
        int best = -1;
        for (int x : comp)
            for (int e : g.inc[x]) {
                int o = g.other_end(e, x);
                if (target[o] && (best == -1 || e < best)) best = e;
            }
        if (best == -1)
            throw InternalError("residual component has no edge into the removed part");
        return best;
    }

    static std::vector<int> pair_edges(const Graph& g, const SmallComps& sc) {
        std::vector<int> out;
        for (const auto& comp : sc.comps) {
            if (comp.size() != 2) continue;
            int e = g.edge_id(comp[0], comp[1]);
            if (e == -1) throw InternalError("order-2 component without its edge");
            out.push_back(e);
        }
        return out;
    }

    std::vector<int> to_root_edges(const Sub& s, std::vector<int> local) {
        for (int& e : local) e = s.eroot[e];
        std::sort(local.begin(), local.end());
        return local;
    }

    std::vector<int> to_root_vertices(const Sub& s, std::vector<int> local) {
        for (int& v : local) v = s.vroot[v];
        std::sort(local.begin(), local.end());
        return local;
    }

    Rat pendant_case(const Sub& s, int depth, int u, int v) {
        const Graph& g = s.g;
        int w = -1;
        for (int x : g.neighbors(v))
            if (x != u) {
                w = x;
                break;
            }
        if (w == -1) throw InternalError("pendant split: v has no second neighbor");

        auto del = delete_vertices(g, {u, v, w});
        SmallComps sc = split_residual(del);

        auto del2 = delete_vertices(g, [&] {
            std::vector<int> gone{u, v, w};
            gone.insert(gone.end(), sc.i1.begin(), sc.i1.end());
            gone.insert(gone.end(), sc.i2.begin(), sc.i2.end());
            return gone;
        }());
        Sub rest = compose(s, del2);
        Rat rec_total = construct(rest, depth + 1);

        std::vector<char> to_w(g.n, 0);
        to_w[w] = 1;
        std::vector<int> m_edges;
        for (const auto& comp : sc.comps) m_edges.push_back(connector_edge(g, comp, to_w));

        const Rat half = rational(1, 2);
        std::vector<int> halves = m_edges;
        for (int e : pair_edges(g, sc)) halves.push_back(e);
        halves.push_back(g.edge_id(u, v));
        halves.push_back(g.edge_id(v, w));
        for (int e : halves) put(s, e, half);

        Rat total = local_total(s);
        Rat expected = rec_total +
                       Rat(static_cast<long>(sc.i1.size() + sc.i2.size()) + 2) / 2;
        if (total != expected)
            throw InternalError("pendant split: weight ledger mismatch");

        DualCase kind = DualCase::pendant;
        if (total == order_bound(g.n, delta) && !is_t_star(g, delta)) {
            if (!sc.i1.empty() || static_cast<int>(sc.i2.size()) != 2 * (delta - 1) ||
                g.degree(w) != delta)
                throw InternalError("tight pendant split with unexpected residual shape");

            std::vector<char> in_i2(g.n, 0);
            for (int x : sc.i2) in_i2[x] = 1;
            int y3 = -1;
            for (int x : g.neighbors(v))
                if (in_i2[x]) {
                    y3 = x;
                    break;
                }
            if (y3 != -1) {
                kind = DualCase::pendant_tight_pair;
                for (int e : m_edges) put(s, e, Rat(0));
                put(s, g.edge_id(v, w), Rat(0));
                m_edges.clear();
                m_edges.push_back(g.edge_id(v, y3));
                for (const auto& comp : sc.comps) {
                    if (std::find(comp.begin(), comp.end(), y3) != comp.end()) continue;
                    m_edges.push_back(connector_edge(g, comp, to_w));
                }
                for (int e : m_edges) put(s, e, half);
            } else {
                kind = DualCase::pendant_tight_tree;
                rewrite_through_tree(s, rest, u, v, w, sc, m_edges);
            }
            total = local_total(s);
            if (total >= order_bound(g.n, delta))
                throw InternalError("tight pendant rewrite failed to drop below the bound");
        }

        trace.push_back({depth, kind, s.vroot[u], s.vroot[v], s.vroot[w],
                         to_root_vertices(s, sc.i1), to_root_vertices(s, sc.i2),
                         to_root_edges(s, m_edges), g.n, total - rec_total});
        return total;
    }

    // Tight pendant case where v reaches into the recursed part: the
    // component there is a subdivided star; shift its weights off one spoke
    // and route through v instead.
    void rewrite_through_tree(const Sub& s, const Sub& rest, int u, int v, int w,
                              const SmallComps& sc, const std::vector<int>& m_edges) {
        const Graph& g = s.g;
        // s-local vertex -> rest-local, matched through root ids
        std::vector<int> rest_of(g.n, -1);
        for (int i = 0; i < rest.g.n; ++i)
            for (int j = 0; j < g.n; ++j)
                if (s.vroot[j] == rest.vroot[i]) {
                    rest_of[j] = i;
                    break;
                }

        int y3 = -1;
        for (int x : g.neighbors(v))
            if (x != u && x != w && rest_of[x] != -1) {
                y3 = x;
                break;
            }
        if (y3 == -1)
            throw InternalError("tight pendant rewrite: no neighbor in the recursed part");

        auto comps = connected_components(rest.g);
        std::vector<int> tree;  // rest-local component containing y3
        for (const auto& comp : comps)
            if (std::find(comp.begin(), comp.end(), rest_of[y3]) != comp.end()) tree = comp;
        Sub tree_sub = component_sub(rest, tree);
        if (!is_t_star(tree_sub.g, delta))
            throw InternalError("tight pendant rewrite: component is not a subdivided star");

        // Spoke edge of the tree closest to y3.
        int center = -1;
        for (int x = 0; x < tree_sub.g.n; ++x)
            if (tree_sub.g.degree(x) == delta) center = x;
        int y3_tree = -1;
        for (int i = 0; i < tree_sub.g.n; ++i)
            if (tree_sub.vroot[i] == s.vroot[y3]) y3_tree = i;
        int spoke;
        if (tree_sub.g.edge_id(center, y3_tree) != -1) {
            spoke = tree_sub.g.edge_id(center, y3_tree);
        } else {
            int mid = tree_sub.g.neighbors(y3_tree)[0];  // leaf: unique neighbor
            spoke = tree_sub.g.edge_id(center, mid);
        }

        const Rat half = rational(1, 2);
        // Drop this level's defaults and the tree's recursive weights.
        for (int e : m_edges) put(s, e, Rat(0));
        put(s, g.edge_id(u, v), Rat(0));
        put(s, g.edge_id(v, w), Rat(0));
        for (int e = 0; e < tree_sub.g.edge_count(); ++e) y[tree_sub.eroot[e]] = 0;
        // Reroute: pair edges, all of w's other edges, uv, v-y3, and the whole
        // tree minus the one spoke.
        for (int e : pair_edges(g, sc)) put(s, e, half);
        for (int e : g.inc[w])
            if (e != g.edge_id(v, w)) put(s, e, half);
        put(s, g.edge_id(u, v), half);
        put(s, g.edge_id(v, y3), half);
        for (int e = 0; e < tree_sub.g.edge_count(); ++e)
            if (e != spoke) y[tree_sub.eroot[e]] = half;
    }

    Rat neighborhood_case(const Sub& s, int depth, int u) {
        const Graph& g = s.g;
        int deg_u = g.degree(u);
        std::vector<int> nbrs = g.neighbors(u);

        auto del = delete_vertices(g, [&] {
            std::vector<int> gone = nbrs;
            gone.push_back(u);
            return gone;
        }());
        SmallComps sc = split_residual(del);

        auto del2 = delete_vertices(g, [&] {
            std::vector<int> gone = nbrs;
            gone.push_back(u);
            gone.insert(gone.end(), sc.i1.begin(), sc.i1.end());
            gone.insert(gone.end(), sc.i2.begin(), sc.i2.end());
            return gone;
        }());
        Rat rec_total = construct(compose(s, del2), depth + 1);

        std::vector<char> target(g.n, 0);
        for (int x : nbrs) target[x] = 1;
        std::vector<int> m_edges;
        for (const auto& comp : sc.comps) m_edges.push_back(connector_edge(g, comp, target));

        const Rat half = rational(1, 2);
        for (int e : m_edges) put(s, e, half);
        for (int e : pair_edges(g, sc)) put(s, e, half);
        for (int e : g.inc[u]) put(s, e, half);

        Rat total = local_total(s);
        Rat expected = rec_total +
                       Rat(static_cast<long>(sc.i1.size() + sc.i2.size()) + deg_u) / 2;
        if (total != expected)
            throw InternalError("neighborhood split: weight ledger mismatch");

        DualCase kind = DualCase::neighborhood;
        if (total == order_bound(g.n, delta) && !is_t_star(g, delta)) {
            kind = DualCase::neighborhood_tight;
            if (deg_u != 2 || !sc.i1.empty() ||
                static_cast<int>(sc.i2.size()) != 2 * (delta - 1) || !sc.big.empty())
                throw InternalError("tight neighborhood split with unexpected shape");
            for (int e : m_edges) put(s, e, Rat(0));
            for (int e : pair_edges(g, sc)) put(s, e, Rat(0));
            m_edges.clear();
            std::vector<char> in_i2(g.n, 0);
            for (int x : sc.i2) in_i2[x] = 1;
            // all edges between N(u) and the pairs
            for (int x : nbrs)
                for (int e : g.inc[x])
                    if (in_i2[g.other_end(e, x)]) put(s, e, half);
            int skip = g.inc[u][0];
            for (int e : g.inc[u]) put(s, e, e == skip ? Rat(0) : half);
            total = local_total(s);
            if (total >= order_bound(g.n, delta))
                throw InternalError("tight neighborhood rewrite failed to drop below the bound");
        }

        trace.push_back({depth, kind, s.vroot[u],
                         nbrs.empty() ? -1 : s.vroot[nbrs[0]], -1,
                         to_root_vertices(s, sc.i1), to_root_vertices(s, sc.i2),
                         to_root_edges(s, m_edges), g.n, total - rec_total});
        return total;
    }
};

}  // namespace

GoodDualResult build_good_dual(const Graph& g, int delta) {
    if (delta < 2) throw PreconditionError("build_good_dual needs delta >= 2");
    if (g.max_degree > delta)
        throw PreconditionError("build_good_dual: max degree exceeds delta");
    for (const auto& comp : connected_components(g))
        if (comp.size() <= 2)
            throw PreconditionError("build_good_dual: component of order <= 2");

    GoodDualResult out;
    out.dual.delta_bound = delta;
    out.dual.y.assign(g.edge_count(), Rat(0));

    Sub root;
    root.g = g;
    root.vroot.resize(g.n);
    root.eroot.resize(g.edge_count());
    for (int v = 0; v < g.n; ++v) root.vroot[v] = v;
    for (int e = 0; e < g.edge_count(); ++e) root.eroot[e] = e;

    Builder builder{delta, out.dual.y, out.trace};
    out.dual.total = builder.construct(root, 0);

    // Invariants of a good solution, re-checked from the definitions.
    if (out.dual.total != weight_total(out.dual.y))
        throw InternalError("good dual: total does not match weights");
    if (!check_dual_feasible(g, out.dual.y))
        throw InternalError("good dual: constructed y is not dual feasible");
    for (int v = 0; v < g.n; ++v) {
        if (g.degree(v) >= delta) continue;
        Rat at = 0;
        for (int e : g.inc[v]) at += out.dual.y[e];
        if (at < rational(1, 2))
            throw InternalError("good dual: vertex condition fails at vertex " +
                                std::to_string(v));
    }
    Rat bound = order_bound(g.n, delta);
    if (out.dual.total > bound)
        throw InternalError("good dual: total exceeds the bound");
    bool tight = out.dual.total == bound;
    if (tight != all_components_t_star(g, delta))
        throw InternalError("good dual: tightness does not match the structure");
    return out;
}

}  // namespace imcert
