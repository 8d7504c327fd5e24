#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "imcert/families.hpp"
#include "imcert/graph.hpp"
#include "imcert/oracle.hpp"

namespace imcert {

// Insertion-ordered JSON keeps report bytes reproducible.
using Json = nlohmann::ordered_json;

struct SolveOptions {
    std::string algo = "auto";  // lp | dual | exact | subcubic | localratio | auto
    int delta = 0;              // 0: derive from the graph
    int oracle_cap = kDefaultOracleCap;
    bool timing = false;        // adds wall_ms (breaks byte-reproducibility)
    bool approx = false;        // adds *_approx decimal fields
};

// Runs one algorithm and wraps the result in a self-contained report: the
// canonical graph text plus a certificate that verify_report can re-check
// without re-running any solver.
Json run_solve(const Graph& g, const std::string& instance, const SolveOptions& opt);

// Re-checks every claim of a report from its embedded certificate with the
// library's definitional checkers. Returns the violations; empty means pass.
std::vector<std::string> verify_report(const Json& report);

InstanceSpec spec_from_json(const Json& j);
Json spec_to_json(const InstanceSpec& spec);

// One CSV row per manifest entry, header first, deterministic order and
// bytes for a fixed manifest; per-instance failures land in the error
// column and do not stop the run.
std::string run_batch(const Json& manifest, int jobs, int oracle_cap);

// epsilon, c, g, f for the given delta plus the feasibility report.
Json params_report(int delta);
Json params_report(int delta, const Rat& epsilon, const Rat& c);

Json gap_report(const Graph& g, const std::string& instance, int oracle_cap);

}  // namespace imcert
