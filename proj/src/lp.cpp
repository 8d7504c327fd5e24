#include "imcert/lp.hpp"

#include <sstream>

#include "imcert/errors.hpp"

namespace imcert {

Rat weight_sum(const Graph& g, const EdgeWeights& w, const std::vector<int>& ids) {
    if (static_cast<int>(w.size()) != g.edge_count())
        throw InputError("weight vector dimension mismatch");
    Rat s = 0;
    for (int e : ids) {
        g.require_edge(e);
        s += w[e];
    }
    return s;
}

Rat weight_total(const EdgeWeights& w) {
    Rat s = 0;
    for (const Rat& v : w) s += v;
    return s;
}

bool check_primal_feasible(const Graph& g, const EdgeWeights& x) {
    if (static_cast<int>(x.size()) != g.edge_count())
        throw InputError("weight vector dimension mismatch");
    for (const Rat& v : x)
        if (v < 0) return false;
    for (int e = 0; e < g.edge_count(); ++e) {
        Rat s = 0;
        for (int f : edge_closed_neighborhood(g, e)) s += x[f];
        if (s > 1) return false;
    }
    return true;
}

bool check_dual_feasible(const Graph& g, const EdgeWeights& y) {
    if (static_cast<int>(y.size()) != g.edge_count())
        throw InputError("weight vector dimension mismatch");
    for (const Rat& v : y)
        if (v < 0) return false;
    for (int e = 0; e < g.edge_count(); ++e) {
        Rat s = 0;
        for (int f : edge_closed_neighborhood(g, e)) s += y[f];
        if (s < 1) return false;
    }
    return true;
}

namespace {

// max c'x s.t. Ax <= b, x >= 0 with b >= 0, exact arithmetic. Full tableau,
// Bland's rule (smallest variable index enters; ratio ties broken by smallest
// basic variable index), so the reported vertex is deterministic and cycling
// is impossible. Columns 0..n-1 are structural, n..n+m-1 slacks.
struct SimplexOut {
    Rat obj;
    std::vector<Rat> x;     // length n
    std::vector<Rat> dual;  // length m, reduced costs of the slack columns
};

SimplexOut simplex_max(const std::vector<std::vector<Rat>>& A,
                       const std::vector<Rat>& b, const std::vector<Rat>& c) {
    const int m = static_cast<int>(A.size());
    const int n = static_cast<int>(c.size());
    const int rhs = n + m;

    std::vector<std::vector<Rat>> t(m + 1, std::vector<Rat>(n + m + 1, Rat(0)));
    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) {
        if (b[i] < 0) throw InternalError("simplex needs b >= 0");
        for (int j = 0; j < n; ++j) t[i][j] = A[i][j];
        t[i][n + i] = 1;
        t[i][rhs] = b[i];
        basis[i] = n + i;
    }
    for (int j = 0; j < n; ++j) t[m][j] = -c[j];

    for (;;) {
        int s = -1;
        for (int j = 0; j < n + m; ++j) {
            if (t[m][j] < 0) {
                s = j;
                break;
            }
        }
        if (s == -1) break;

        int r = -1;
        Rat best_ratio;
        for (int i = 0; i < m; ++i) {
            if (t[i][s] <= 0) continue;
            Rat ratio = t[i][rhs] / t[i][s];
            if (r == -1 || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[r])) {
                r = i;
                best_ratio = ratio;
            }
        }
        if (r == -1) throw InternalError("simplex: unbounded objective");

        Rat piv = t[r][s];
        for (Rat& v : t[r]) v /= piv;
        for (int i = 0; i <= m; ++i) {
            if (i == r || t[i][s] == 0) continue;
            Rat factor = t[i][s];
            for (int j = 0; j <= rhs; ++j) t[i][j] -= factor * t[r][j];
        }
        basis[r] = s;
    }

    SimplexOut out;
    out.obj = t[m][rhs];
    out.x.assign(n, Rat(0));
    for (int i = 0; i < m; ++i)
        if (basis[i] < n) out.x[basis[i]] = t[i][rhs];
    out.dual.assign(m, Rat(0));
    for (int i = 0; i < m; ++i) out.dual[i] = t[m][n + i];
    return out;
}

}  // namespace

LpPair solve_lp_pair(const Graph& g) {
    const int m = g.edge_count();
    if (m == 0) {
        LpSolution zero{{}, Rat(0), LpRole::primal};
        return {zero, {{}, Rat(0), LpRole::dual}};
    }
    std::vector<std::vector<Rat>> A(m, std::vector<Rat>(m, Rat(0)));
    for (int e = 0; e < m; ++e)
        for (int f : edge_closed_neighborhood(g, e)) A[e][f] = 1;
    std::vector<Rat> ones(m, Rat(1));

    SimplexOut s = simplex_max(A, ones, ones);

    LpPair out{{std::move(s.x), s.obj, LpRole::primal},
               {std::move(s.dual), s.obj, LpRole::dual}};
    if (!check_primal_feasible(g, out.primal.weights))
        throw InternalError("simplex returned infeasible primal");
    if (!check_dual_feasible(g, out.dual.weights))
        throw InternalError("simplex returned infeasible dual");
    if (weight_total(out.primal.weights) != s.obj ||
        weight_total(out.dual.weights) != s.obj)
        throw InternalError("simplex objective does not match its solution");
    return out;
}

LpSolution solve_primal(const Graph& g) { return solve_lp_pair(g).primal; }

LpSolution solve_dual(const Graph& g) { return solve_lp_pair(g).dual; }

CoverSolution solve_min_cover(int num_vars,
                              const std::vector<std::vector<int>>& rows,
                              const std::vector<Rat>& rhs) {
    if (rows.size() != rhs.size()) throw InputError("cover LP shape mismatch");
    const int k = static_cast<int>(rows.size());
    if (num_vars == 0) {
        for (const Rat& r : rhs)
            if (r > 0) throw InternalError("cover LP infeasible: no variables");
        return {Rat(0), {}};
    }
    // LP dual of the covering program: max rhs'z s.t. per variable j the
    // z-mass of rows containing j is at most 1. The optimal y of the covering
    // program is read off the slack reduced costs.
    std::vector<std::vector<Rat>> A(num_vars, std::vector<Rat>(k, Rat(0)));
    for (int i = 0; i < k; ++i)
        for (int j : rows[i]) {
            if (j < 0 || j >= num_vars) throw InputError("cover LP bad index");
            A[j][i] = 1;
        }
    std::vector<Rat> ones(num_vars, Rat(1));

    SimplexOut s = simplex_max(A, ones, rhs);

    CoverSolution out{s.obj, std::move(s.dual)};
    Rat total = 0;
    for (const Rat& v : out.y) {
        if (v < 0) throw InternalError("cover LP produced negative weight");
        total += v;
    }
    if (total != out.objective)
        throw InternalError("cover LP objective mismatch");
    for (int i = 0; i < k; ++i) {
        Rat got = 0;
        for (int j : rows[i]) got += out.y[j];
        if (got < rhs[i]) throw InternalError("cover LP constraint violated");
    }
    return out;
}

std::string lp_dump(const Graph& g) {
    std::ostringstream out;
    out << "Maximize\n obj:";
    for (int e = 0; e < g.edge_count(); ++e)
        out << (e ? " + x" : " x") << e;
    out << "\nSubject To\n";
    for (int e = 0; e < g.edge_count(); ++e) {
        out << " e" << e << ":";
        bool first = true;
        for (int f : edge_closed_neighborhood(g, e)) {
            out << (first ? " x" : " + x") << f;
            first = false;
        }
        out << " <= 1\n";
    }
    out << "End\n";
    return out.str();
}

}  // namespace imcert
