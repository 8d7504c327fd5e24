// imcert: exact certification toolkit for induced matchings.
// Subcommands: solve, gen, verify, batch, gap, params.
// Exit codes: 0 ok, 1 verification failure, 2 input error,
//             3 precondition error, 4 internal assertion.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "imcert/errors.hpp"
#include "imcert/lp.hpp"
#include "imcert/report.hpp"

using namespace imcert;

namespace {

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + out_path + "'");
    out << text;
}

int env_cap() {
    if (const char* v = std::getenv("IMCERT_ORACLE_CAP")) {
        try {
            return std::stoi(v);
        } catch (...) {
            throw InputError("IMCERT_ORACLE_CAP is not an integer");
        }
    }
    return kDefaultOracleCap;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact LP-certified induced matching toolkit"};
    app.require_subcommand(1);

    // solve
    auto* solve = app.add_subcommand("solve", "run an algorithm on a graph file");
    std::string solve_path, solve_out, lp_dump_path;
    SolveOptions opt;
    opt.oracle_cap = -1;
    solve->add_option("graph", solve_path, "graph file ('-' for stdin)")->required();
    solve->add_option("--algo", opt.algo, "lp|dual|exact|subcubic|localratio|auto")
        ->check(CLI::IsMember({"lp", "dual", "exact", "subcubic", "localratio", "auto"}));
    solve->add_option("--delta", opt.delta, "degree bound to certify against");
    solve->add_option("--out", solve_out, "write the report here instead of stdout");
    solve->add_option("--lp-dump", lp_dump_path, "also write (P) in LP text format");
    solve->add_option("--cap", opt.oracle_cap, "oracle edge cap (default env or 64)");
    solve->add_flag("--timing", opt.timing, "include wall time (non-reproducible)");
    solve->add_flag("--float", opt.approx, "add approximate decimal fields");

    // gen
    auto* gen = app.add_subcommand("gen", "generate a graph from a family");
    std::string gen_family, gen_out;
    InstanceSpec gen_spec;
    gen->add_option("family", gen_family,
                    "t-star|blowup-c5|random|path|cycle|complete")->required();
    gen->add_option("--delta", gen_spec.delta, "maximum degree parameter");
    gen->add_option("--n", gen_spec.n, "vertex count parameter");
    gen->add_option("--seed", gen_spec.seed, "random seed");
    gen->add_option("--out", gen_out, "output file (default stdout)");

    // verify
    auto* verify = app.add_subcommand("verify", "re-check a solve report");
    std::string verify_path;
    verify->add_option("report", verify_path, "report file ('-' for stdin)")->required();

    // batch
    auto* batch = app.add_subcommand("batch", "run a manifest of instances to CSV");
    std::string batch_path, batch_out;
    int jobs = 1, batch_cap = -1;
    batch->add_option("manifest", batch_path, "JSON manifest file")->required();
    batch->add_option("--jobs", jobs, "parallel instance runs")->check(CLI::PositiveNumber);
    batch->add_option("--cap", batch_cap, "oracle edge cap (default env or 64)");
    batch->add_option("--out", batch_out, "output CSV file (default stdout)");

    // gap
    auto* gap = app.add_subcommand("gap", "exact nu_s^*/nu_s of a graph file");
    std::string gap_path;
    int gap_cap = -1;
    gap->add_option("graph", gap_path, "graph file ('-' for stdin)")->required();
    gap->add_option("--cap", gap_cap, "oracle edge cap (default env or 64)");

    // params
    auto* params = app.add_subcommand("params", "pipeline parameters for a delta");
    int params_delta = 3;
    std::string params_eps, params_c;
    params->add_option("--delta", params_delta, "maximum degree")->required();
    params->add_option("--epsilon", params_eps, "override epsilon as p/q");
    params->add_option("--c", params_c, "override c as p/q");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*solve) {
            Graph g = parse_graph(slurp(solve_path));
            if (opt.oracle_cap < 0) opt.oracle_cap = env_cap();
            if (!lp_dump_path.empty()) emit(lp_dump(g), lp_dump_path);
            Json report = run_solve(g, solve_path, opt);
            emit(report.dump(2), solve_out);
        } else if (*gen) {
            gen_spec.family = family_from_name(gen_family);
            emit(serialize_graph(generate(gen_spec)), gen_out);
        } else if (*verify) {
            Json report = Json::parse(slurp(verify_path));
            auto violations = verify_report(report);
            if (!violations.empty()) {
                for (const auto& v : violations) std::cerr << "FAIL: " << v << '\n';
                return 1;
            }
            std::cout << "ok\n";
        } else if (*batch) {
            Json manifest = Json::parse(slurp(batch_path));
            if (batch_cap < 0) batch_cap = env_cap();
            emit(run_batch(manifest, jobs, batch_cap), batch_out);
        } else if (*gap) {
            Graph g = parse_graph(slurp(gap_path));
            if (gap_cap < 0) gap_cap = env_cap();
            emit(gap_report(g, gap_path, gap_cap).dump(2), "");
        } else if (*params) {
            Json j = !params_eps.empty() || !params_c.empty()
                         ? params_report(params_delta,
                                         rat_parse(params_eps.empty() ? "2005/100000"
                                                                      : params_eps),
                                         rat_parse(params_c.empty() ? "85838/100000"
                                                                    : params_c))
                         : params_report(params_delta);
            emit(j.dump(2), "");
        }
    } catch (const Json::exception& e) {
        std::cerr << "error: malformed JSON: " << e.what() << '\n';
        return 2;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 4;
    }
    return 0;
}
