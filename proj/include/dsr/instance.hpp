#ifndef DSR_INSTANCE_HPP
#define DSR_INSTANCE_HPP

#include <optional>
#include <string>
#include <vector>

#include "dsr/graph.hpp"

namespace dsr {

enum class Variant { TS, DTS };

inline const char* variant_name(Variant v) { return v == Variant::TS ? "TS" : "DTS"; }

// One reachability question: slide tokens from `start` to `target` while
// every intermediate set stays (red-blue) dominating. Instances that fail
// the validity checks are representable; check_instance reports why.
struct ReconfigInstance {
    Graph graph;
    Variant variant;
    std::vector<int> start;
    std::vector<int> target;
    std::optional<int> iteration_bound;
};

// Empty result means the instance is valid. Each message names the failed
// check (token arity, range, distinctness, blue-only, domination, variant
// vs. orientation).
std::vector<std::string> check_instance(const ReconfigInstance& inst);

struct Move {
    int token;
    int from;
    int to;
    bool operator==(const Move&) const = default;
};

// Token-labelled move list; `initial[t]` is the start vertex of token t.
struct LabeledSequence {
    std::vector<int> initial;
    std::vector<Move> moves;
};

enum class Outcome { Reachable, Unreachable, BudgetExceeded };

struct SolveStats {
    long long configurations = 0;
    long long move_count = 0;
    double millis = 0.0;
};

struct SolveResult {
    Outcome outcome = Outcome::Unreachable;
    std::optional<LabeledSequence> sequence;
    SolveStats stats;
    bool reachable() const { return outcome == Outcome::Reachable; }
};

} // namespace dsr

#endif
