#ifndef DSR_ENGINE_HPP
#define DSR_ENGINE_HPP

#include <span>
#include <utility>

#include "dsr/instance.hpp"

namespace dsr {

struct EngineOptions {
    long long max_configurations = 10'000'000;
};

// All (from,to) pairs that slide one token of `config` along an edge (TS)
// or arc (DTS) onto a free, blue-if-colored vertex so that the resulting
// set still dominates. Deterministic: sorted by (from,to).
std::vector<std::pair<int, int>> legal_moves(const ReconfigInstance& inst,
                                             std::span<const int> config);

// Breadth-first search over set configurations. Returns a shortest witness
// sequence (minimal-perturbation token labels) when the target is reachable.
SolveResult reachable(const ReconfigInstance& inst, const EngineOptions& opts = {});

// Baseline under the token-jumping rule: a moved token may land on any free
// (blue) vertex. No structural claims attach to this mode; it exists for
// oracle comparisons.
SolveResult reachable_token_jumping(const ReconfigInstance& inst,
                                    const EngineOptions& opts = {});

struct SequenceCheck {
    bool ok = false;
    int index = -1;      // violating move index; -1 refers to the initial configuration
    std::string rule;    // "arity", "initial", "token-position", "occupancy",
                         // "slide", "blue-only", "domination", "final-configuration"
    std::string detail;
};

// Checks every sequence invariant and that the final set equals the target;
// reports the first violation.
SequenceCheck validate_sequence(const ReconfigInstance& inst, const LabeledSequence& seq);

// Max over (vertex,token) pairs of how often the token enters the vertex,
// counting the start position once.
int iteration(const LabeledSequence& seq);

// Depth-first search over labelled states with per-(token,vertex) entry
// counts capped at iota; finds a sequence of iteration <= iota if one exists.
SolveResult reachable_bounded_iteration(const ReconfigInstance& inst, int iota,
                                        const EngineOptions& opts = {});

// Decision procedure for DTS on DAGs of depth <= 2: reachable iff the kept
// tokens dominate everything outside start/target and the leaving tokens
// admit a perfect matching onto the entering vertices along arcs.
SolveResult solve_depth2(const ReconfigInstance& inst);

struct Matching {
    int size = 0;
    std::vector<int> left_match; // right index per left, -1 if unmatched
};

// Maximum-cardinality bipartite matching via augmenting paths; deterministic
// for a fixed pair order.
Matching max_bipartite_matching(int left_size, int right_size,
                                std::span<const std::pair<int, int>> pairs);

} // namespace dsr

#endif
