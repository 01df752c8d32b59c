#ifndef DSR_ORACLE_HPP
#define DSR_ORACLE_HPP

#include <string>
#include <vector>

#include "dsr/graph.hpp"

namespace dsr {

// Exhaustive subset search with closed-neighborhood branching. Kept as an
// independent code path from the reconfiguration engine.
bool has_dominating_set(const Graph& g, int k);

struct MinDsResult {
    int size = 0;
    std::vector<int> witness; // lexicographically least among minimum sets
};

MinDsResult min_dominating_set(const Graph& g);

struct OracleBudget {
    int max_blue = 32;               // vertices eligible to hold tokens
    double max_configurations = 5e6; // C(blue, tokens) cap
};

struct EquivalenceReport {
    std::string reduction;
    int source_n = 0;
    int source_edges = 0;
    int k = 0;
    int tokens = 0;
    int instance_vertices = 0;
    bool ds_answer = false;
    bool reconfig_answer = false;
    bool agree = false;
    long long configurations = 0;
    double millis = 0.0;
    std::vector<std::string> defects;  // defect flags carried by the builder
    std::vector<std::string> validity; // instance validity findings, if any
};

struct EquivOptions {
    OracleBudget budget;
    bool repair = true;                  // dag-depth3 repair mode
    bool respect_iteration_bound = true; // honor the instance's iteration annotation
    long long engine_cap = 10'000'000;
};

// Builds the named reduction for (g, k), decides it with the engine, decides
// dominating-set existence with the brute-force oracle, and reports whether
// the two answers agree. Throws BudgetError when the instance exceeds the
// configured budget.
EquivalenceReport equivalence_report(const std::string& reduction_id, const Graph& g,
                                     int k, const EquivOptions& opts = {});

} // namespace dsr

#endif
