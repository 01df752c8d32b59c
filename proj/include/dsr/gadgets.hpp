#ifndef DSR_GADGETS_HPP
#define DSR_GADGETS_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dsr/instance.hpp"

namespace dsr {

// Structural bounds a builder asserts about its output. Decomposition
// recipes in the decomp module certify the width claims constructively.
struct Claims {
    std::optional<int> depth;
    std::optional<int> pathwidth;
    std::optional<int> treewidth;
    std::optional<int> dfvs;
    bool property1 = false;
    bool property2 = false;
    bool dag = false;
};

struct ReductionOutput {
    ReconfigInstance instance;
    std::map<std::string, int> anchors; // injective, covers every vertex
    Claims claims;
    std::optional<LabeledSequence> witness;
    std::vector<std::string> defect_flags;
    std::string builder;
    int source_n = 0;
    int source_k = 0;
};

// Index layout shared by the validator-style gadgets: per level l (1-based)
// a block [s^l | u rows | d^l | p^l_0 p^l_1 p^l_2], then one global s.
// Column aliases: u(l,i,0) = s^l and u(l,i,n+1) = d^l.
struct ValidatorLayout {
    int n = 0;
    int k = 0;
    int block_size() const { return n * n + 5; }
    int s_top(int l) const { return (l - 1) * block_size(); }
    int d_top(int l) const { return s_top(l) + 1 + n * n; }
    int u(int l, int i, int j) const {
        if (j == 0) return s_top(l);
        if (j == n + 1) return d_top(l);
        return s_top(l) + 1 + (i - 1) * n + (j - 1);
    }
    int p(int l, int b) const { return d_top(l) + 1 + b; }
    int s_global() const { return k * block_size(); }
    int total() const { return k * block_size() + 1; }
};

// k levels of n row paths of length n, synchronized by three red clock
// vertices per level and one global red vertex encoding domination.
ReductionOutput build_validator(const Graph& g, int k);

// True iff some level l has the edge (u^l_{rows[l], j}, s); `rows` and `j`
// are 0-based source-graph indices.
bool validator_selection_dominates(const Graph& g, int k, std::span<const int> rows, int j);
bool validator_selection_dominates(const ReductionOutput& validator_output,
                                   std::span<const int> rows, int j);

ReductionOutput build_ts_path(const Graph& g, int k);
ReductionOutput build_ts_cycle(const Graph& g, int k);
ReductionOutput build_dts_path(const Graph& g, int k);
ReductionOutput build_dts_cycle(const Graph& g, int k);

// Depth-3 DAG reduction. With repair=false the instance is emitted exactly
// as written down originally and carries a defect flag because its start
// set fails to dominate; repair=true adds the arcs s_i->d_i and s_i->b_i,
// restoring validity while preserving depth 3.
ReductionOutput build_dag_depth3(const Graph& g, int k, bool repair);

ReductionOutput build_variation_checking(const Graph& g, int k);
ReductionOutput build_clock_battery(int n);
ReductionOutput build_np_fixed_tw(const Graph& g, int k);

// Canonical witness sequences built from a dominating set of g ("ds" lists
// 0-based source vertices, one row choice per level/token).
LabeledSequence build_witness_ts_path(const Graph& g, int k, std::span<const int> ds);
LabeledSequence build_witness_ts_cycle(const Graph& g, int k, std::span<const int> ds);
LabeledSequence build_witness_dts_path(const Graph& g, int k, std::span<const int> ds);
LabeledSequence build_witness_dts_cycle(const Graph& g, int k, std::span<const int> ds);
LabeledSequence build_witness_dag_depth3(const Graph& g, int k, std::span<const int> ds);

// Red-blue -> plain liftings.
ReductionOutput lift_redblue_undirected(const ReductionOutput& r);
ReductionOutput lift_redblue_directed(const ReductionOutput& r);
ReductionOutput lift_redblue_directed_tw_preserving(const ReductionOutput& r);

// Dispatch by CLI gadget id: ts-path, ts-cycle, dts-path, dts-cycle,
// dag-depth3, np-fixed-tw, validator.
ReductionOutput build_by_id(const std::string& id, const Graph& g, int k, bool repair = true);

// Witness generator for the given builder id, if one is attached.
std::optional<LabeledSequence> build_witness_by_id(const std::string& id, const Graph& g,
                                                   int k, std::span<const int> ds);

} // namespace dsr

#endif
