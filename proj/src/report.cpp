#include "imcert/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include "imcert/errors.hpp"
#include "imcert/good_dual.hpp"
#include "imcert/local_ratio.hpp"
#include "imcert/subcubic.hpp"

namespace imcert {

namespace {

Json rats_to_json(const EdgeWeights& w) {
    Json a = Json::array();
    for (const Rat& v : w) a.push_back(rat_str(v));
    return a;
}

EdgeWeights rats_from_json(const Json& a) {
    EdgeWeights w;
    for (const auto& s : a) w.push_back(rat_parse(s.get<std::string>()));
    return w;
}

std::vector<int> ints_from_json(const Json& a) {
    std::vector<int> v;
    for (const auto& x : a) v.push_back(x.get<int>());
    return v;
}

std::string pick_auto(const Graph& g) {
    return (g.max_degree <= 3 && !has_cubic_component(g)) ? "subcubic" : "localratio";
}

Json lp_certificate(const Graph& g) {
    LpPair lp = solve_lp_pair(g);
    Json cert;
    cert["primal"] = {{"weights", rats_to_json(lp.primal.weights)},
                      {"objective", rat_str(lp.primal.objective)}};
    cert["dual"] = {{"weights", rats_to_json(lp.dual.weights)},
                    {"objective", rat_str(lp.dual.objective)}};
    return cert;
}

Json dual_certificate(const Graph& g, int delta) {
    GoodDualResult res = build_good_dual(g, delta);
    Json trace = Json::array();
    for (const auto& lvl : res.trace) {
        trace.push_back({{"depth", lvl.depth},
                         {"case", dual_case_name(lvl.kind)},
                         {"u", lvl.u},
                         {"v", lvl.v},
                         {"w", lvl.w},
                         {"isolated", lvl.isolated},
                         {"pairs", lvl.pair_vertices},
                         {"connectors", lvl.connector_edges},
                         {"sub_order", lvl.sub_order},
                         {"added", rat_str(lvl.added)}});
    }
    Rat bound = order_bound(g.n, delta);
    Json cert;
    cert["delta"] = delta;
    cert["y"] = rats_to_json(res.dual.y);
    cert["total"] = rat_str(res.dual.total);
    cert["bound"] = rat_str(bound);
    cert["tight"] = res.dual.total == bound;
    cert["trace"] = std::move(trace);
    return cert;
}

Json subcubic_certificate(const Graph& g) {
    PdCertificate cert = subcubic_primal_dual(g);
    Json j;
    j["matching"] = cert.matching.edges;
    j["y"] = rats_to_json(cert.y);
    j["y_total"] = rat_str(weight_total(cert.y));
    j["ratio_ok"] = cert.ratio_ok;
    return j;
}

Json localratio_certificate(const Graph& g, int delta) {
    RatioCertificate cert = approximate_fim(g, delta);
    RatioParams params = default_params(delta);
    Json pre = Json::array();
    for (size_t i = 0; i < cert.pre_matching.size(); ++i)
        pre.push_back({{"edge", cert.pre_matching[i]},
                       {"charge", rat_str(cert.step_charges[i])}});
    Json j;
    j["matching"] = cert.matching.edges;
    j["nu_s_star"] = rat_str(cert.nu_s_star);
    j["f"] = rat_str(cert.f);
    j["ratio_ok"] = cert.ratio_ok;
    j["delta"] = delta;
    j["epsilon"] = rat_str(params.epsilon);
    j["c"] = rat_str(params.c);
    j["preprocess_trace"] = std::move(pre);
    j["x"] = rats_to_json(cert.x);
    j["solver_dual"] = rats_to_json(cert.solver_dual);
    return j;
}

}  // namespace

Json run_solve(const Graph& g, const std::string& instance, const SolveOptions& opt) {
    auto start = std::chrono::steady_clock::now();
    std::string algo = opt.algo == "auto" ? pick_auto(g) : opt.algo;

    Json report;
    report["instance"] = instance;
    report["algo"] = algo;
    report["vertices"] = g.n;
    report["edges"] = g.edge_count();
    report["graph"] = serialize_graph(g);

    if (algo == "lp") {
        Json cert = lp_certificate(g);
        report["nu_s_star"] = cert["primal"]["objective"];
        if (opt.approx)
            report["nu_s_star_approx"] =
                rat_approx(rat_parse(cert["primal"]["objective"].get<std::string>()));
        report["certificate"] = std::move(cert);
    } else if (algo == "exact") {
        NuSResult res = exact_nu_s(g, opt.oracle_cap);
        report["nu_s"] = res.value;
        report["matching_size"] = res.value;
        report["certificate"] = {{"matching", res.witness.edges}, {"nu_s", res.value}};
    } else if (algo == "dual") {
        int delta = opt.delta > 0 ? opt.delta : std::max(2, g.max_degree);
        Json cert = dual_certificate(g, delta);
        report["nu_s_star_upper"] = cert["total"];
        if (opt.approx)
            report["nu_s_star_upper_approx"] =
                rat_approx(rat_parse(cert["total"].get<std::string>()));
        report["certificate"] = std::move(cert);
    } else if (algo == "subcubic") {
        Json cert = subcubic_certificate(g);
        report["matching_size"] = cert["matching"].size();
        report["ratio_ok"] = cert["ratio_ok"];
        report["certificate"] = std::move(cert);
    } else if (algo == "localratio") {
        int delta = opt.delta > 0 ? opt.delta : std::max(3, g.max_degree);
        Json cert = localratio_certificate(g, delta);
        report["matching_size"] = cert["matching"].size();
        report["nu_s_star"] = cert["nu_s_star"];
        report["ratio_ok"] = cert["ratio_ok"];
        if (opt.approx)
            report["nu_s_star_approx"] =
                rat_approx(rat_parse(cert["nu_s_star"].get<std::string>()));
        report["certificate"] = std::move(cert);
    } else {
        throw InputError("unknown algorithm '" + algo + "'");
    }

    if (opt.timing) {
        auto ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        report["wall_ms"] = ms;
    }
    return report;
}

namespace {

struct Verifier {
    const Graph& g;
    std::vector<std::string>& out;

    void expect(bool ok, const std::string& msg) {
        if (!ok) out.push_back(msg);
    }

    Rat vertex_mass(const EdgeWeights& y, int v) {
        Rat s = 0;
        for (int e : g.inc[v]) s += y[e];
        return s;
    }

    bool checked_matching(const std::vector<int>& m, const char* what) {
        for (int e : m)
            if (e < 0 || e >= g.edge_count()) {
                out.push_back(std::string(what) + ": edge id out of range");
                return false;
            }
        if (!is_induced_matching(g, m)) {
            out.push_back(std::string(what) + ": not an induced matching");
            return false;
        }
        return true;
    }
};

void verify_lp(const Graph& g, const Json& cert, const Json& report,
               std::vector<std::string>& out) {
    Verifier v{g, out};
    EdgeWeights x = rats_from_json(cert.at("primal").at("weights"));
    EdgeWeights y = rats_from_json(cert.at("dual").at("weights"));
    Rat px = rat_parse(cert.at("primal").at("objective").get<std::string>());
    Rat py = rat_parse(cert.at("dual").at("objective").get<std::string>());
    v.expect(check_primal_feasible(g, x), "primal weights violate (P)");
    v.expect(check_dual_feasible(g, y), "dual weights violate (D)");
    v.expect(weight_total(x) == px, "primal objective does not match weights");
    v.expect(weight_total(y) == py, "dual objective does not match weights");
    v.expect(px == py, "primal and dual objectives differ");
    if (report.contains("nu_s_star"))
        v.expect(rat_parse(report.at("nu_s_star").get<std::string>()) == px,
                 "nu_s_star does not match certificate");
}

void verify_exact(const Graph& g, const Json& cert, std::vector<std::string>& out) {
    Verifier v{g, out};
    std::vector<int> m = ints_from_json(cert.at("matching"));
    if (!v.checked_matching(m, "witness")) return;
    v.expect(static_cast<int>(m.size()) == cert.at("nu_s").get<int>(),
             "claimed nu_s does not match witness size");
}

void verify_dual(const Graph& g, const Json& cert, std::vector<std::string>& out) {
    Verifier v{g, out};
    int delta = cert.at("delta").get<int>();
    EdgeWeights y = rats_from_json(cert.at("y"));
    if (static_cast<int>(y.size()) != g.edge_count()) {
        out.push_back("dual vector has wrong dimension");
        return;
    }
    Rat total = rat_parse(cert.at("total").get<std::string>());
    for (const auto& comp : connected_components(g))
        if (comp.size() <= 2) {
            out.push_back("graph has a component of order at most 2");
            return;
        }
    if (g.edge_count() > 0)
        v.expect(check_dual_feasible(g, y), "y violates (D)");
    for (int u = 0; u < g.n; ++u)
        if (g.degree(u) < delta)
            v.expect(v.vertex_mass(y, u) >= rational(1, 2),
                     "vertex condition fails at vertex " + std::to_string(u));
    v.expect(weight_total(y) == total, "total does not match weights");
    Rat bound = order_bound(g.n, delta);
    v.expect(total <= bound, "total exceeds delta*n/(2*delta+1)");
    v.expect(cert.at("tight").get<bool>() == (total == bound),
             "tightness flag inconsistent with total");
}

void verify_subcubic(const Graph& g, const Json& cert, std::vector<std::string>& out) {
    Verifier v{g, out};
    std::vector<int> m = ints_from_json(cert.at("matching"));
    if (!v.checked_matching(m, "matching")) return;
    EdgeWeights y = rats_from_json(cert.at("y"));
    if (static_cast<int>(y.size()) != g.edge_count()) {
        out.push_back("dual vector has wrong dimension");
        return;
    }
    if (g.edge_count() > 0)
        v.expect(check_dual_feasible(g, y), "y violates (D)");
    for (int u = 0; u < g.n; ++u)
        if (g.degree(u) >= 1 && g.degree(u) <= 2)
            v.expect(v.vertex_mass(y, u) >= rational(1, 3),
                     "low-degree vertex below 1/3 at vertex " + std::to_string(u));
    Rat total = weight_total(y);
    v.expect(rat_parse(cert.at("y_total").get<std::string>()) == total,
             "y_total does not match weights");
    v.expect(total * 3 <= Rat(7) * Rat(static_cast<long>(m.size())),
             "y(E) exceeds (7/3)|M|");
    v.expect(cert.at("ratio_ok").get<bool>(), "ratio_ok is false");
}

void verify_localratio(const Graph& g, const Json& cert, std::vector<std::string>& out) {
    Verifier v{g, out};
    std::vector<int> m = ints_from_json(cert.at("matching"));
    if (!v.checked_matching(m, "matching")) return;
    int delta = cert.at("delta").get<int>();
    Rat epsilon = rat_parse(cert.at("epsilon").get<std::string>());
    Rat c = rat_parse(cert.at("c").get<std::string>());
    Rat f = rat_parse(cert.at("f").get<std::string>());
    Rat nu = rat_parse(cert.at("nu_s_star").get<std::string>());
    v.expect(g.max_degree <= delta, "graph degree exceeds the certificate delta");
    v.expect(quad_feasible(epsilon, c), "(epsilon, c) infeasible");
    v.expect(f == (1 - epsilon) * Rat(delta) + rational(1, 2),
             "f does not match (1-epsilon)*delta + 1/2");
    EdgeWeights x = rats_from_json(cert.at("x"));
    EdgeWeights y = rats_from_json(cert.at("solver_dual"));
    v.expect(check_primal_feasible(g, x), "x violates (P)");
    if (g.edge_count() > 0)
        v.expect(check_dual_feasible(g, y), "solver dual violates (D)");
    v.expect(weight_total(x) == nu, "x total does not match nu_s_star");
    v.expect(weight_total(y) == nu,
             "dual total does not match nu_s_star (no optimality certificate)");
    v.expect(Rat(static_cast<long>(m.size())) * f >= nu, "|M| * f < nu_s_star");
    v.expect(cert.at("ratio_ok").get<bool>(), "ratio_ok is false");
    for (const auto& step : cert.at("preprocess_trace"))
        v.expect(rat_parse(step.at("charge").get<std::string>()) <= f,
                 "preprocessing step charged more than f");
}

}  // namespace

std::vector<std::string> verify_report(const Json& report) {
    Graph g;
    std::string algo;
    Json cert;
    try {
        g = parse_graph(report.at("graph").get<std::string>());
        algo = report.at("algo").get<std::string>();
        cert = report.at("certificate");
    } catch (const Json::exception& e) {
        throw InputError(std::string("malformed report: ") + e.what());
    }
    std::vector<std::string> out;
    try {
        if (algo == "lp") verify_lp(g, cert, report, out);
        else if (algo == "exact") verify_exact(g, cert, out);
        else if (algo == "dual") verify_dual(g, cert, out);
        else if (algo == "subcubic") verify_subcubic(g, cert, out);
        else if (algo == "localratio") verify_localratio(g, cert, out);
        else throw InputError("unknown algorithm '" + algo + "' in report");
    } catch (const Json::exception& e) {
        throw InputError(std::string("malformed certificate: ") + e.what());
    }
    return out;
}

InstanceSpec spec_from_json(const Json& j) {
    InstanceSpec spec;
    try {
        spec.family = family_from_name(j.at("family").get<std::string>());
        spec.delta = j.value("delta", 0);
        spec.n = j.value("n", 0);
        spec.seed = j.value("seed", uint64_t{0});
    } catch (const Json::exception& e) {
        throw InputError(std::string("malformed instance spec: ") + e.what());
    }
    return spec;
}

Json spec_to_json(const InstanceSpec& spec) {
    Json j;
    j["family"] = family_name(spec.family);
    switch (spec.family) {
        case Family::t_star:
        case Family::blownup_c5:
            j["delta"] = spec.delta;
            break;
        case Family::random_bounded:
            j["n"] = spec.n;
            j["delta"] = spec.delta;
            j["seed"] = spec.seed;
            break;
        default:
            j["n"] = spec.n;
    }
    return j;
}

namespace {

std::string csv_safe(std::string s) {
    for (char& c : s)
        if (c == ',' || c == '\n' || c == '\r') c = ';';
    return s;
}

struct BatchCols {
    std::string family, delta, n, seed, vertices, edges, nu_s, nu_s_star;
    std::string subcubic_size, subcubic_ok, localratio_size, localratio_ok;
    std::string gap, error;

    std::string row() const {
        std::ostringstream out;
        out << family << ',' << delta << ',' << n << ',' << seed << ',' << vertices
            << ',' << edges << ',' << nu_s << ',' << nu_s_star << ',' << subcubic_size
            << ',' << subcubic_ok << ',' << localratio_size << ',' << localratio_ok
            << ',' << gap << ',' << error;
        return out.str();
    }
};

std::string batch_header() {
    return "family,delta,n,seed,vertices,edges,nu_s,nu_s_star,subcubic_size,"
           "subcubic_ok,localratio_size,localratio_ok,gap,error";
}

std::string batch_row(const Json& entry, int oracle_cap) {
    BatchCols cols;
    try {
        InstanceSpec spec = spec_from_json(entry);
        cols.family = family_name(spec.family);
        bool uses_delta = spec.family == Family::t_star ||
                          spec.family == Family::blownup_c5 ||
                          spec.family == Family::random_bounded;
        bool uses_n = !uses_delta || spec.family == Family::random_bounded;
        if (uses_delta) cols.delta = std::to_string(spec.delta);
        if (uses_n) cols.n = std::to_string(spec.n);
        if (spec.family == Family::random_bounded) cols.seed = std::to_string(spec.seed);

        Graph g = generate(spec);
        cols.vertices = std::to_string(g.n);
        cols.edges = std::to_string(g.edge_count());

        LpSolution primal = solve_primal(g);
        cols.nu_s_star = rat_str(primal.objective);

        long nu_s = -1;
        try {
            nu_s = exact_nu_s(g, oracle_cap).value;
            cols.nu_s = std::to_string(nu_s);
        } catch (const PreconditionError&) {
            // over the cap: leave blank
        }
        if (nu_s > 0) cols.gap = rat_str(primal.objective / nu_s);

        if (g.max_degree <= 3 && !has_cubic_component(g)) {
            PdCertificate cert = subcubic_primal_dual(g);
            cols.subcubic_size = std::to_string(cert.matching.size());
            cols.subcubic_ok = cert.ratio_ok ? "1" : "0";
        }
        {
            RatioCertificate cert = approximate_fim(g, std::max(3, g.max_degree));
            cols.localratio_size = std::to_string(cert.matching.size());
            cols.localratio_ok = cert.ratio_ok ? "1" : "0";
        }
    } catch (const std::exception& e) {
        cols.error = csv_safe(e.what());
    }
    return cols.row();
}

}  // namespace

std::string run_batch(const Json& manifest, int jobs, int oracle_cap) {
    if (!manifest.is_array()) throw InputError("manifest must be a JSON array");
    const int count = static_cast<int>(manifest.size());
    std::vector<std::string> rows(count);

    jobs = std::max(1, jobs);
    std::atomic<int> next{0};
    auto work = [&] {
        for (;;) {
            int i = next.fetch_add(1);
            if (i >= count) break;
            rows[i] = batch_row(manifest[i], oracle_cap);
        }
    };
    if (jobs == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    std::ostringstream out;
    out << batch_header() << '\n';
    for (const auto& row : rows) out << row << '\n';
    return out.str();
}

Json params_report(int delta) {
    return params_report(delta, rational(2005, 100000), rational(85838, 100000));
}

Json params_report(int delta, const Rat& epsilon, const Rat& c) {
    Json j;
    j["delta"] = delta;
    j["epsilon"] = rat_str(epsilon);
    j["c"] = rat_str(c);
    bool feasible = quad_feasible(epsilon, c);
    j["quad_feasible"] = feasible;
    if (c != 1) j["g"] = rat_str(epsilon / (1 - c));
    j["f"] = rat_str((1 - epsilon) * Rat(delta) + rational(1, 2));
    j["f_approx"] = rat_approx((1 - epsilon) * Rat(delta) + rational(1, 2));
    return j;
}

Json gap_report(const Graph& g, const std::string& instance, int oracle_cap) {
    NuSResult exact = exact_nu_s(g, oracle_cap);
    if (exact.value < 1) throw PreconditionError("gap undefined: nu_s is zero");
    LpSolution primal = solve_primal(g);
    Json j;
    j["instance"] = instance;
    j["vertices"] = g.n;
    j["edges"] = g.edge_count();
    j["nu_s"] = exact.value;
    j["nu_s_star"] = rat_str(primal.objective);
    j["gap"] = rat_str(primal.objective / exact.value);
    return j;
}

}  // namespace imcert
