#include "dsr/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>

#include "dsr/engine.hpp"
#include "dsr/gadgets.hpp"

namespace dsr {

namespace {

// Closed neighborhoods recomputed from the raw edge list so the oracle does
// not share domination code with the engine or the gadget builders.
std::vector<uint64_t> oracle_masks(const Graph& g) {
    if (g.vertex_count() > 64)
        throw BudgetError("dominating-set oracle handles at most 64 vertices");
    std::vector<uint64_t> mask(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) mask[v] = uint64_t{1} << v;
    for (auto [u, v] : g.edges()) {
        mask[u] |= uint64_t{1} << v;
        mask[v] |= uint64_t{1} << u;
    }
    return mask;
}

// Branch on the first uncovered vertex: some member of its closed
// neighborhood must join the set.
bool ds_search(const std::vector<uint64_t>& mask, uint64_t full, uint64_t covered,
               int budget, int first_free) {
    if (covered == full) return true;
    if (budget == 0) return false;
    int v = first_free;
    while ((covered >> v) & 1) ++v;
    uint64_t candidates = mask[v];
    while (candidates) {
        int c = __builtin_ctzll(candidates);
        candidates &= candidates - 1;
        if (ds_search(mask, full, covered | mask[c], budget - 1, v)) return true;
    }
    return false;
}

} // namespace

bool has_dominating_set(const Graph& g, int k) {
    if (k < 0) throw std::invalid_argument("k must be non-negative");
    int n = g.vertex_count();
    if (n == 0) return true;
    auto mask = oracle_masks(g);
    uint64_t full = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
    return ds_search(mask, full, 0, k, 0);
}

MinDsResult min_dominating_set(const Graph& g) {
    int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("min_dominating_set requires n >= 1");
    auto mask = oracle_masks(g);
    uint64_t full = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;

    int size = 0;
    for (; size <= n; ++size)
        if (ds_search(mask, full, 0, size, 0)) break;

    // Lexicographically least witness of that size.
    std::vector<int> chosen;
    auto lex_search = [&](auto&& self, uint64_t covered, int next, int remaining) -> bool {
        if (covered == full) return true;
        if (remaining == 0) return false;
        for (int v = next; v <= n - remaining; ++v) {
            chosen.push_back(v);
            if (self(self, covered | mask[v], v + 1, remaining - 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    lex_search(lex_search, 0, 0, size);
    return {size, chosen};
}

EquivalenceReport equivalence_report(const std::string& reduction_id, const Graph& g,
                                     int k, const EquivOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    ReductionOutput r = build_by_id(reduction_id, g, k, opts.repair);
    const ReconfigInstance& inst = r.instance;

    EquivalenceReport rep;
    rep.reduction = reduction_id;
    rep.source_n = g.vertex_count();
    rep.source_edges = g.edge_count();
    rep.k = k;
    rep.tokens = static_cast<int>(inst.start.size());
    rep.instance_vertices = inst.graph.vertex_count();
    rep.defects = r.defect_flags;
    rep.validity = check_instance(inst);

    int eligible = inst.graph.colored()
                       ? static_cast<int>(inst.graph.blue_vertices().size())
                       : inst.graph.vertex_count();
    if (eligible > opts.budget.max_blue)
        throw BudgetError("instance has " + std::to_string(eligible) +
                          " token-eligible vertices, budget allows " +
                          std::to_string(opts.budget.max_blue));
    double combos = 1.0;
    for (int i = 0; i < rep.tokens; ++i)
        combos *= static_cast<double>(eligible - i) / (i + 1);
    if (combos > opts.budget.max_configurations)
        throw BudgetError("instance configuration space exceeds budget");

    rep.ds_answer = has_dominating_set(g, k);

    if (rep.validity.empty()) {
        EngineOptions eopts{opts.engine_cap};
        SolveResult unbounded = reachable(inst, eopts);
        rep.configurations = unbounded.stats.configurations;
        if (unbounded.outcome == Outcome::BudgetExceeded)
            throw BudgetError("engine configuration budget exceeded");
        bool answer = unbounded.reachable();
        if (answer && opts.respect_iteration_bound && inst.iteration_bound) {
            // Confirm a witness within the annotated iteration bound. The
            // unbounded search already settled the negative case.
            SolveResult bounded = reachable_bounded_iteration(inst, *inst.iteration_bound, eopts);
            if (bounded.outcome == Outcome::BudgetExceeded)
                throw BudgetError("bounded-iteration budget exceeded");
            answer = bounded.reachable();
            rep.configurations += bounded.stats.configurations;
        }
        rep.reconfig_answer = answer;
    } else {
        rep.reconfig_answer = false;
    }

    rep.agree = rep.ds_answer == rep.reconfig_answer;
    rep.millis =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    return rep;
}

} // namespace dsr
