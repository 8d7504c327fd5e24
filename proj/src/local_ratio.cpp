#include "imcert/local_ratio.hpp"

#include <algorithm>

#include "imcert/errors.hpp"

namespace imcert {

bool quad_feasible(const Rat& epsilon, const Rat& c) {
    if (epsilon <= 0 || c <= 0) return false;
    if (epsilon + c >= 1) return false;  // also guards the division below
    if (epsilon > (1 - c) * (1 - c)) return false;
    Rat lhs = Rat(3) / 2 * (1 + epsilon * (2 * c - 1 + epsilon) / (1 - c - epsilon));
    Rat rhs = 2 * c * (1 - epsilon);
    return lhs <= rhs;
}

RatioParams make_params(const Rat& epsilon, const Rat& c, int delta) {
    if (delta < 3) throw PreconditionError("ratio params need delta >= 3");
    if (!quad_feasible(epsilon, c))
        throw PreconditionError("(epsilon, c) violates the feasibility system");
    RatioParams p;
    p.epsilon = epsilon;
    p.c = c;
    p.g_param = epsilon / (1 - c);
    p.delta = delta;
    p.f = (1 - epsilon) * Rat(delta) + rational(1, 2);
    return p;
}

RatioParams default_params(int delta) {
    return make_params(rational(2005, 100000), rational(85838, 100000), delta);
}

PreprocessResult local_ratio_preprocess(const Graph& g, const EdgeWeights& x,
                                        const RatioParams& params) {
    if (g.max_degree > params.delta)
        throw PreconditionError("preprocess: max degree exceeds delta");
    if (!check_primal_feasible(g, x))
        throw PreconditionError("preprocess: x is not feasible for (P)");

    PreprocessResult out;
    out.x = x;

    Graph cur = g;
    std::vector<int> vroot(g.n), eroot(g.edge_count());
    for (int v = 0; v < g.n; ++v) vroot[v] = v;
    for (int e = 0; e < g.edge_count(); ++e) eroot[e] = e;

    // Lowest qualifying edge, rescan from the start after every removal. The
    // conflict mass of an edge in the current graph equals the x-mass its
    // removal takes out of the original graph, so the per-step charge is just
    // the tested value.
    for (;;) {
        int picked = -1;
        Rat picked_mass;
        for (int e = 0; e < cur.edge_count(); ++e) {
            Rat mass = 0;
            for (int f : conflict_set(cur, e)) mass += x[eroot[f]];
            if (mass <= params.f) {
                picked = e;
                picked_mass = mass;
                break;
            }
        }
        if (picked == -1) break;

        out.matching.edges.push_back(eroot[picked]);
        out.step_charges.push_back(picked_mass);
        out.charge += picked_mass;

        auto del = remove_conflict_edges(cur, picked);
        std::vector<int> neroot;
        for (int e : del.kept_edges) neroot.push_back(eroot[e]);
        cur = del.graph;
        eroot = std::move(neroot);
    }

    out.residual = std::move(cur);
    out.residual_vroot = std::move(vroot);
    out.residual_eroot = std::move(eroot);

    if (!is_induced_matching(g, out.matching.edges))
        throw InternalError("preprocess: picked edges are not an induced matching");
    if (out.charge > params.f * Rat(out.matching.size()))
        throw InternalError("preprocess: charge exceeds f per pick");
    return out;
}

InducedMatching residual_greedy(const Graph& g, int delta) {
    if (g.max_degree > delta)
        throw PreconditionError("residual_greedy: max degree exceeds delta");

    InducedMatching m;
    Graph cur = g;
    std::vector<int> eroot(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) eroot[e] = e;

    while (cur.edge_count() > 0) {
        int pick = 0;
        auto dsum = [&](int e) {
            return cur.degree(cur.edge(e).first) + cur.degree(cur.edge(e).second);
        };
        for (int e = 1; e < cur.edge_count(); ++e)
            if (dsum(e) < dsum(pick)) pick = e;

        // Improvement: two non-conflicting edges inside the region the pick
        // would remove beat the single pick. First such pair in id order.
        std::vector<int> region = conflict_set(cur, pick);
        int f1 = -1, f2 = -1;
        for (size_t i = 0; i < region.size() && f1 == -1; ++i) {
            std::vector<int> conf = conflict_set(cur, region[i]);
            for (size_t j = i + 1; j < region.size(); ++j) {
                if (!std::binary_search(conf.begin(), conf.end(), region[j])) {
                    f1 = region[i];
                    f2 = region[j];
                    break;
                }
            }
        }

        std::vector<int> take = (f1 == -1) ? std::vector<int>{pick}
                                           : std::vector<int>{f1, f2};
        // Delete conflict sets of everything taken (in one pass, so the
        // second edge's set is computed before the first deletion).
        std::vector<int> gone;
        for (int e : take) {
            m.edges.push_back(eroot[e]);
            auto cs = conflict_set(cur, e);
            gone.insert(gone.end(), cs.begin(), cs.end());
        }
        std::sort(gone.begin(), gone.end());
        gone.erase(std::unique(gone.begin(), gone.end()), gone.end());
        auto del = delete_edges(cur, gone);
        std::vector<int> neroot;
        for (int e : del.kept_edges) neroot.push_back(eroot[e]);
        cur = del.graph;
        eroot = std::move(neroot);
    }
    std::sort(m.edges.begin(), m.edges.end());

    if (!is_induced_matching(g, m))
        throw InternalError("residual_greedy: result is not an induced matching");
    // |M| >= m(g) / (1.5 delta^2), i.e. 3 delta^2 |M| >= 2 m(g)
    if (Rat(3) * delta * delta * m.size() < Rat(2) * g.edge_count())
        throw InternalError("residual_greedy: size bound m/(1.5 delta^2) missed");
    return m;
}

DensityCheckResult residual_density_check(const Graph& g, const EdgeWeights& x,
                                          const RatioParams& params) {
    if (!check_primal_feasible(g, x))
        throw PreconditionError("residual_density_check: x is not feasible for (P)");
    DensityCheckResult out{true, true};
    for (int e = 0; e < g.edge_count(); ++e) {
        Rat mass = 0;
        for (int f : conflict_set(g, e)) mass += x[f];
        if (mass < params.f) {
            out.premise_holds = false;
            return out;  // vacuous
        }
    }
    // x(E) <= (1 - eps) m / (1.5 delta)
    Rat bound = (1 - params.epsilon) * Rat(g.edge_count()) * 2 / (Rat(3) * params.delta);
    out.conclusion_holds = weight_total(x) <= bound;
    if (!out.conclusion_holds)
        throw InternalError("residual density bound failed with valid premise");
    return out;
}

std::vector<int> low_degree_set(const Graph& g, const RatioParams& params) {
    std::vector<int> out;
    Rat threshold = params.c * params.delta + rational(1, 2);
    for (int v = 0; v < g.n; ++v)
        if (Rat(g.degree(v)) < threshold) out.push_back(v);
    return out;
}

NeighborhoodCheckStatus neighborhood_check(const Graph& g, const EdgeWeights& x,
                                           const RatioParams& params) {
    if (!check_primal_feasible(g, x)) return NeighborhoodCheckStatus::premise_violated;
    for (int e = 0; e < g.edge_count(); ++e) {
        Rat mass = 0;
        for (int f : conflict_set(g, e)) mass += x[f];
        if (mass < params.f) return NeighborhoodCheckStatus::premise_violated;
    }
    std::vector<int> low = low_degree_set(g, params);
    if (low.empty()) return NeighborhoodCheckStatus::vacuous;
    Rat degree_floor = (1 - params.g_param) * params.delta + 1;
    for (int u : low) {
        for (int v : g.neighbors(u)) {
            if (Rat(g.degree(v)) < degree_floor)
                return NeighborhoodCheckStatus::conclusion_violated;
            Rat at = 0;
            for (int e : g.inc[v]) at += x[e];
            if (at > params.g_param) return NeighborhoodCheckStatus::conclusion_violated;
        }
    }
    return NeighborhoodCheckStatus::holds;
}

RatioCertificate approximate_fim(const Graph& g, int delta) {
    if (delta < 3) throw PreconditionError("approximate_fim needs delta >= 3");
    if (g.max_degree > delta)
        throw PreconditionError("approximate_fim: max degree exceeds delta");
    RatioParams params = default_params(delta);

    LpPair lp = solve_lp_pair(g);
    PreprocessResult pre = local_ratio_preprocess(g, lp.primal.weights, params);

    // Telescoping: the recorded charges add up to the x-mass of the union of
    // the committed edges' conflict sets in the input graph.
    {
        std::vector<char> in_union(g.edge_count(), 0);
        for (int e : pre.matching.edges)
            for (int f : conflict_set(g, e)) in_union[f] = 1;
        Rat union_mass = 0;
        for (int e = 0; e < g.edge_count(); ++e)
            if (in_union[e]) union_mass += lp.primal.weights[e];
        if (union_mass != pre.charge)
            throw InternalError("preprocess charges do not telescope");
        // and the residual holds exactly the rest of the mass
        Rat residual_mass = 0;
        for (int e : pre.residual_eroot) residual_mass += lp.primal.weights[e];
        if (pre.charge + residual_mass != lp.primal.objective)
            throw InternalError("preprocess mass split does not add up");
    }

    // Residual satisfies the density premise by loop exit.
    EdgeWeights rx(pre.residual.edge_count());
    for (int e = 0; e < pre.residual.edge_count(); ++e)
        rx[e] = lp.primal.weights[pre.residual_eroot[e]];
    DensityCheckResult density = residual_density_check(pre.residual, rx, params);
    if (pre.residual.edge_count() > 0 && !density.premise_holds)
        throw InternalError("residual violates the preprocessing exit condition");

    InducedMatching tail = residual_greedy(pre.residual, delta);

    RatioCertificate cert;
    cert.pre_matching = pre.matching.edges;
    cert.step_charges = pre.step_charges;
    cert.matching.edges = pre.matching.edges;
    for (int e : tail.edges) cert.matching.edges.push_back(pre.residual_eroot[e]);
    std::sort(cert.matching.edges.begin(), cert.matching.edges.end());
    cert.nu_s_star = lp.primal.objective;
    cert.f = params.f;
    cert.x = lp.primal.weights;
    cert.solver_dual = lp.dual.weights;

    if (!is_induced_matching(g, cert.matching))
        throw InternalError("approximate_fim: combined matching is not induced");
    cert.ratio_ok = Rat(cert.matching.size()) * params.f >= cert.nu_s_star;
    if (!cert.ratio_ok)
        throw InternalError("approximate_fim: ratio guarantee failed");
    return cert;
}

}  // namespace imcert
